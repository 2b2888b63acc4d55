"""
総当たりによる冪和・ゼータ値・不変多項式のテスト
"""

import pytest

from ringsums.core.config import get_settings, use_settings
from ringsums.core.exceptions import (
    EnumerationCapError,
    InfeasibleComputationError,
    RingSumsError,
    UnsupportedRingError,
)
from ringsums.poly.polynomial import Poly, translate_poly
from ringsums.rings.base import RingElement
from ringsums.rings.factory import build_ring
from ringsums.services import oracle


def test_index_ranges_cover_everything():
    assert oracle.index_ranges(10, 3) == [(0, 4), (4, 7), (7, 10)]
    assert oracle.index_ranges(2, 5) == [(0, 1), (1, 2)]


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_zeta_over_fields(q):
    """ζ(-k) = -1 ⇔ (q-1) | k > 0、それ以外 0"""
    ring = build_ring(f"GF({q})")
    zetas = oracle.all_zeta_values(ring, 3 * q)
    minus_one = ring.neg(ring.one)
    for k, value in enumerate(zetas):
        expected = minus_one if k > 0 and k % (q - 1) == 0 else ring.zero
        assert value == expected


def test_zeta_examples(gf4, ut2, mat2):
    assert oracle.zeta_bruteforce(gf4, 3).value == gf4.one
    assert oracle.zeta_bruteforce(ut2, 3).value == ut2.unit(0, 1)
    assert oracle.zeta_bruteforce(mat2, 4).is_zero()
    assert oracle.zeta_bruteforce(mat2, 7).value == mat2.one


def test_zeta_respects_cap(mat2):
    with pytest.raises(EnumerationCapError):
        oracle.zeta_bruteforce(mat2, 2, cap=8)
    with pytest.raises(RingSumsError):
        oracle.zeta_bruteforce(mat2, -1)


def test_power_sum_examples(gf2):
    assert oracle.power_sum_bruteforce(gf2, 3) == Poly.from_ints(gf2, [1, 1, 1])
    z6 = build_ring("Zmod(6)")
    assert oracle.power_sum_bruteforce(z6, 3) == Poly.from_ints(z6, [3, 3, 3])
    assert oracle.power_sum_bruteforce(z6, 0).is_zero()


@pytest.mark.parametrize("text", ["Zmod(12)", "GF(8)", "UT(2,GF(2))", "Nil(Zmod(4),2)", "Prod(GF(2),Zmod(3))"])
def test_power_sum_modes_agree(text):
    """二項展開・直接和・分割列挙が一致する"""
    ring = build_ring(text)
    for k in range(7):
        esum = oracle.power_sum_bruteforce(ring, k)
        assert oracle.power_sum_bruteforce(ring, k, mode="direct") == esum
        assert oracle.power_sum_bruteforce(ring, k, partitions=3) == esum
        assert oracle.power_sum_bruteforce(ring, k, mode="direct", partitions=5) == esum


def test_power_sums_share_enumeration(z4):
    sums = oracle.power_sums_bruteforce(z4, 6)
    assert sums == [oracle.power_sum_bruteforce(z4, k) for k in range(7)]


def test_power_sum_is_translation_invariant(gf4):
    for k in range(1, 10):
        f = oracle.power_sum_bruteforce(gf4, k)
        for r in gf4.elements():
            assert translate_poly(f, r) == f


@pytest.mark.parametrize("q", [2, 3, 4])
def test_elementary_symmetric_extremes(q):
    """Σ_q = T^q - T, Σ_{q-1} = -1"""
    ring = build_ring(f"GF({q})")
    top = oracle.elementary_symmetric_bruteforce(q, q)
    assert top == Poly.monomial(ring, q) - Poly.variable(ring)
    below = oracle.elementary_symmetric_bruteforce(q, q - 1)
    assert below == Poly.constant(ring, ring.neg(ring.one))


def test_invariants_gf3_constants_only():
    report = oracle.invariant_polys_bruteforce(build_ring("GF(3)"), 2)
    assert report.method == "exhaustive"
    assert report.count == 3
    assert all(f.degree <= 0 for f in report.spanning_set())


def test_invariants_zmod6_split():
    """Z/6 = F_2 × F_3: 4 × 9 個"""
    ring = build_ring("Zmod(6)")
    exhaustive = oracle.invariant_polys_bruteforce(ring, 3, "exhaustive")
    linear = oracle.invariant_polys_bruteforce(ring, 3, "linear-solve")
    assert exhaustive.count == linear.count == 36


@pytest.mark.parametrize(
    "text, degree",
    [("Zmod(4)", 4), ("GF(4)", 4), ("Nil(GF(2),2)", 3), ("GR(2,2,2)", 2), ("Zmod(9)", 3)],
)
def test_exhaustive_and_linear_solve_agree(text, degree):
    ring = build_ring(text)
    exhaustive = oracle.invariant_polys_bruteforce(ring, degree, "exhaustive")
    linear = oracle.invariant_polys_bruteforce(ring, degree, "linear-solve")
    assert exhaustive.count == linear.count
    assert len(exhaustive.polynomials) == exhaustive.count
    for f in linear.generators:
        for r in ring.elements():
            assert translate_poly(f, r) == f


def test_invariants_reject_noncommutative(mat2):
    with pytest.raises(UnsupportedRingError):
        oracle.invariant_polys_bruteforce(mat2, 2)


def test_invariants_limits(gf4):
    use_settings(get_settings().with_overrides(exhaustive_cap=10, degree_cap=8))
    with pytest.raises(EnumerationCapError):
        oracle.invariant_polys_bruteforce(gf4, 2, "exhaustive")
    assert oracle.invariant_polys_bruteforce(gf4, 2).method == "linear-solve"
    with pytest.raises(InfeasibleComputationError):
        oracle.invariant_polys_bruteforce(gf4, 9)


def test_coordinate_layout_embedding():
    layout = oracle.CoordinateLayout(build_ring("Prod(Zmod(2),Zmod(4))"), 2)
    assert layout.modulus == 4
    assert layout.scales() == [2, 1]
    assert layout.quotient_size() == 8
    f = Poly(layout.ring, ((1, 3), (0, 0), (1, 2)))
    assert layout.embed(f) == [2, 3, 0, 0, 2, 2]


def test_negative_power_sum_in_gf4():
    """Σ_{r∈F_2} (y + r)^(-1) = y^(-1) + (y + 1)^(-1) = 1"""
    ring = build_ring("GF(4)")
    y = RingElement(ring, ring.generator())
    assert oracle.negative_power_sum_eval(2, 1, y).value == ring.one
    assert oracle.negative_sigma_eval(2, 2, y).value == ring.one


def test_negative_power_sum_rejects_subfield_points():
    ring = build_ring("GF(4)")
    with pytest.raises(RingSumsError):
        oracle.negative_power_sum_eval(2, 1, RingElement(ring, ring.one))
    with pytest.raises(UnsupportedRingError):
        oracle.negative_power_sum_eval(3, 1, RingElement(ring, ring.generator()))


def test_field_embedding_is_a_homomorphism():
    small = build_ring("GF(4)")
    big = build_ring("GF(16)")
    embed = oracle.field_embedding(4, 2)
    for a in small.elements():
        for b in small.elements():
            assert embed(small.mul(a, b)) == big.mul(embed(a), embed(b))
            assert embed(small.add(a, b)) == big.add(embed(a), embed(b))
