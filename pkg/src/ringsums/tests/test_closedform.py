"""
閉じた式による冪和のテスト（総当たりと突き合わせる）
"""

import random

import pytest
from hypothesis import given, strategies as st

from ringsums.core.exceptions import ClosedFormDispatchError, RingSumsError
from ringsums.poly.laurent import LaurentInU
from ringsums.poly.polynomial import Poly
from ringsums.rings.base import RingElement
from ringsums.rings.factory import build_ring
from ringsums.rings.spec import GF, GR, UT, Mat, Nil, Zmod, parse_ring_spec
from ringsums.services import closedform, oracle


def _assert_matches_bruteforce(text: str, kmax: int) -> None:
    ring = build_ring(text)
    brute = oracle.power_sums_bruteforce(ring, kmax)
    for k in range(kmax + 1):
        assert closedform.power_sum_closed(text, k).poly == brute[k], (text, k)


def test_field_example():
    result = closedform.power_sum_fq(2, 3)
    assert result.case == "field"
    assert result.poly == Poly.from_ints(build_ring("GF(2)"), [1, 1, 1])
    assert result.symbolic_terms() == [(1, 0), (1, 1)]


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_fields_match_bruteforce(q):
    _assert_matches_bruteforce(f"GF({q})", 3 * q + 4)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16])
def test_intermediate_form_agrees(q):
    for k in range(0, 40):
        assert closedform.power_sum_fq_intermediate(q, k) == closedform.power_sum_fq(q, k).poly


@pytest.mark.parametrize("text", ["Zmod(4)", "Zmod(8)", "Zmod(16)", "Zmod(9)", "Zmod(27)", "Zmod(25)"])
def test_cyclic_rings_match_bruteforce(text):
    _assert_matches_bruteforce(text, 24)


def test_cyclic_case_names():
    assert closedform.power_sum_closed("Zmod(8)", 5).case == "cyclic-2-odd"
    assert closedform.power_sum_closed("Zmod(8)", 4).case == "cyclic"
    assert closedform.power_sum_closed("Zmod(9)", 5).case == "cyclic"


@pytest.mark.parametrize("p, m", [(2, 2), (2, 3), (3, 2), (5, 2)])
def test_lift_choice_does_not_matter(p, m):
    for k in range(20):
        assert closedform.power_sum_zmod_prime_power(p, m, k, 0) == closedform.power_sum_zmod_prime_power(
            p, m, k, 1
        )


@pytest.mark.parametrize("p, e", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)])
def test_cyclic_next_level(p, e):
    """Z/p^e の冪和から Z/p^{e+1} の冪和が決まる"""
    lower = oracle.power_sums_bruteforce(build_ring(Zmod(p**e)), 16)
    upper = oracle.power_sums_bruteforce(build_ring(Zmod(p ** (e + 1))), 16)
    for k in range(17):
        predicted = closedform.cyclic_next_level(p, e, k, lower[k], lower[k - 1] if k else None)
        assert predicted == upper[k]


def test_cyclic_next_level_needs_lower_term():
    lower = oracle.power_sum_bruteforce(build_ring("Zmod(2)"), 3)
    with pytest.raises(RingSumsError):
        closedform.cyclic_next_level(2, 1, 3, lower, None)


@pytest.mark.parametrize(
    "text, case",
    [
        ("Nil(GF(2),2)", "dual-numbers-f2"),
        ("UT(2,GF(2))", "upper-triangular-f2"),
        ("Mat(2,GF(2))", "matrix-2x2-f2"),
    ],
)
def test_exceptional_rings(text, case):
    _assert_matches_bruteforce(text, 24)
    assert closedform.power_sum_closed(text, 5).case == case


def test_even_powers_vanish_on_exceptional_rings():
    for text in ("Nil(GF(2),2)", "UT(2,GF(2))"):
        for k in range(0, 30, 2):
            assert closedform.power_sum_closed(text, k).poly.is_zero()


def test_matrix_example(mat2):
    """Mat(2, GF(2)) の P_7 = Id·(T + 1)"""
    result = closedform.power_sum_closed("Mat(2,GF(2))", 7)
    assert result.poly == Poly(mat2, (mat2.one, mat2.one))


@pytest.mark.parametrize(
    "text",
    ["UT(2,GF(3))", "Nil(GF(3),2)", "Nil(GF(2),3)", "Nil(GF(4),2)", "GR(2,2,2)", "Mat(2,GF(3))", "Nil(Zmod(4),2)"],
)
def test_vanishing_rings(text):
    _assert_matches_bruteforce(text, 16)
    assert closedform.power_sum_closed(text, 3).case == "vanishing"


@pytest.mark.parametrize("text", ["Zmod(6)", "Zmod(12)", "Zmod(30)", "Prod(GF(4),Zmod(9))", "Prod(GF(2),GF(2))"])
def test_products_match_bruteforce(text):
    _assert_matches_bruteforce(text, 14)


def test_product_case_names():
    assert closedform.power_sum_closed("Zmod(6)", 3).case == "characteristic-split"
    result = closedform.power_sum_closed("Prod(GF(4),Zmod(9))", 3)
    assert result.case == "product"
    assert [p.case for p in result.parts] == ["field", "cyclic"]


def test_zmod6_example():
    z6 = build_ring("Zmod(6)")
    assert closedform.power_sum_closed("Zmod(6)", 3).poly == Poly.from_ints(z6, [3, 3, 3])


@pytest.mark.parametrize(
    "spec, normalized",
    [
        (GR(2, 1, 2), GF(4)),
        (GR(3, 2, 1), Zmod(9)),
        (Zmod(5), GF(5)),
        (Mat(1, Zmod(3)), GF(3)),
        (UT(2, GR(2, 1, 1)), UT(2, GF(2))),
        (Nil(Zmod(7), 2), Nil(GF(7), 2)),
    ],
)
def test_normalize_spec(spec, normalized):
    assert closedform.normalize_spec(spec) == normalized


@pytest.mark.parametrize("text", ["GR(2,1,2)", "Zmod(5)", "Mat(1,GF(3))", "UT(2,GR(2,1,1))", "GR(3,2,1)"])
def test_normalized_rings_transport_back(text):
    result = closedform.power_sum_closed(text, 4)
    assert result.poly.ring == build_ring(text)
    _assert_matches_bruteforce(text, 12)


def test_unrecognized_shape():
    with pytest.raises(ClosedFormDispatchError):
        closedform.power_sum_closed("Mat(2,Nil(GF(2),2))", 3)


def test_negative_k_rejected():
    with pytest.raises(RingSumsError):
        closedform.power_sum_closed("GF(2)", -1)


@pytest.mark.parametrize(
    "text, k, expected",
    [("GF(4)", 3, "1"), ("Mat(2,GF(2))", 4, "[[0, 0], [0, 0]]"), ("UT(2,GF(2))", 3, "[[0, 1], [0, 0]]")],
)
def test_zeta_closed_examples(text, k, expected):
    assert str(closedform.zeta_closed(text, k)) == expected


def test_bcl_power_sum():
    assert closedform.bcl_is_identity(2, 2, 7)
    assert not closedform.bcl_is_identity(2, 2, 1)
    assert not closedform.bcl_is_identity(2, 2, 3)
    assert not closedform.bcl_is_identity(2, 3, 6)
    value = closedform.bcl_power_sum(2, 2, 6)
    assert value.value == value.ring.one
    assert closedform.bcl_power_sum(3, 2, 6).is_zero()
    with pytest.raises(RingSumsError):
        closedform.bcl_power_sum(1, 2, 6)


# =============================================================================
# Waring の公式と基本対称式
# =============================================================================


def test_waring_small_cases():
    """p_2 = σ_1^2 - 2σ_2"""
    terms = {t.exponents: t.coefficient for t in closedform.waring_power_sum(2, 2)}
    assert terms == {(2, 0): 1, (0, 1): -2}
    assert all(t.weight == 5 for t in closedform.waring_power_sum(5, 3))


@given(
    st.integers(1, 4),
    st.integers(1, 8),
    st.lists(st.integers(-10, 10), min_size=4, max_size=4),
)
def test_waring_reproduces_power_sums(n, k, values):
    xs = values[:n]
    terms = closedform.waring_power_sum(k, n)
    assert closedform.evaluate_waring(terms, xs) == sum(x**k for x in xs)


def test_waring_fixed_seed_sample():
    rng = random.Random(2024)
    for n in range(1, 5):
        for k in range(1, 9):
            terms = closedform.waring_power_sum(k, n)
            for _ in range(20):
                xs = [rng.randint(-10, 10) for _ in range(n)]
                assert closedform.evaluate_waring(terms, xs) == sum(x**k for x in xs)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8])
def test_sigma_table(q):
    for k in range(1, q + 1):
        assert closedform.sigma_closed_form(q, k).to_poly() == oracle.elementary_symmetric_bruteforce(q, k)


def test_sigma_values():
    assert closedform.sigma_closed_form(5, 4).coefficient == 4
    assert closedform.sigma_closed_form(5, 5).exponent == 1
    assert closedform.sigma_closed_form(5, 2).is_zero()
    assert closedform.sigma_closed_form(5, -5).exponent == -1
    with pytest.raises(RingSumsError):
        closedform.sigma_closed_form(5, 6)
    with pytest.raises(RingSumsError):
        closedform.sigma_closed_form(5, -1).to_poly()


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_waring_instantiation(q):
    for k in range(1, 25):
        assert closedform.waring_instantiation(q, k) == closedform.power_sum_fq(q, k).poly


# =============================================================================
# 負冪
# =============================================================================


def test_negative_first_power():
    """Σ (T + r)^(-1) = -U"""
    assert closedform.power_sum_fq_negative(3, 1) == LaurentInU(3, 3, {1: 2})
    assert closedform.power_sum_fq_negative(2, 1) == LaurentInU(2, 2, {1: 1})


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_negative_forms_agree(q):
    for k in range(1, 30):
        assert closedform.power_sum_fq_negative(q, k) == closedform.power_sum_fq_negative_intermediate(q, k)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_negative_power_sums_in_extension(q):
    """GF(q^2) の GF(q) 外の点で直接の和と一致する"""
    big = build_ring(f"GF({q * q})")
    points = [RingElement(big, t) for t in big.elements() if big.pow(t, q) != t]
    for k in range(1, 7):
        laurent = closedform.power_sum_fq_negative(q, k)
        for t in points:
            assert laurent.evaluate(t) == oracle.negative_power_sum_eval(q, k, t)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_negative_sigma_table(q):
    big = build_ring(f"GF({q * q})")
    points = [RingElement(big, t) for t in big.elements() if big.pow(t, q) != t]
    for k in range(1, q + 1):
        for t in points:
            assert closedform.sigma_closed_form(q, -k).evaluate(t) == oracle.negative_sigma_eval(q, k, t)


def test_parse_and_dispatch_accept_text():
    assert closedform.power_sum_closed(parse_ring_spec("GF(3)"), 2).poly == closedform.power_sum_closed("GF(3)", 2).poly
