"""
平行移動不変多項式の生成元と検証のテスト
"""

import pytest

from ringsums.core.config import get_settings, use_settings
from ringsums.core.exceptions import (
    InfeasibleComputationError,
    InvarianceHypothesisError,
    RingMismatchError,
    RingSumsError,
    UnsupportedRingError,
)
from ringsums.poly.polynomial import Poly, artin_schreier
from ringsums.rings.factory import build_ring
from ringsums.rings.spec import GF, GR, Mat, Nil, Zmod, parse_ring_spec
from ringsums.services import invariance, linalg, oracle, suites


def test_witt_shapes():
    assert invariance.witt_shape(GF(9)) == invariance.WittShape(3, 1, 2, 1)
    assert invariance.witt_shape(Zmod(8)) == invariance.WittShape(2, 3, 1, 1)
    assert invariance.witt_shape(GR(2, 2, 2)).q == 4
    assert invariance.witt_shape(Nil(GF(3), 3)).nil_class == 3


@pytest.mark.parametrize("text", ["Mat(2,GF(2))", "Nil(GF(2),3)", "Zmod(6)", "Nil(Nil(GF(3),2),2)"])
def test_witt_shape_rejects(text):
    with pytest.raises(InvarianceHypothesisError):
        invariance.witt_shape(parse_ring_spec(text))


def test_residue_spec():
    assert invariance.residue_spec(GR(2, 2, 2)) == GF(4)
    assert invariance.residue_spec(Zmod(9)) == GF(3)
    assert invariance.residue_spec(Nil(Zmod(4), 2)) == Nil(GF(2), 2)
    with pytest.raises(UnsupportedRingError):
        invariance.residue_spec(Mat(2, GF(2)))


def test_annihilator(z4, dual_f2):
    assert invariance.annihilator(z4, [2]) == [0, 2]
    assert invariance.annihilator(z4, [0]) == [0, 1, 2, 3]
    assert invariance.annihilator(dual_f2, [dual_f2.x]) == [dual_f2.zero, dual_f2.x]


def test_maximal_ideal(dual_f2, gf4):
    shape = invariance.witt_shape(Nil(GF(2), 2))
    assert invariance.maximal_ideal_part(dual_f2, shape) == [dual_f2.zero, dual_f2.x]
    assert invariance.maximal_ideal_part(gf4, invariance.witt_shape(GF(4))) == [gf4.zero]


def test_is_translation_invariant(z4):
    base = artin_schreier(z4, 2)
    assert not invariance.is_translation_invariant(z4, base)
    assert invariance.is_translation_invariant(z4, base.scale_int(2))
    assert invariance.is_translation_invariant(z4, base**2)
    assert invariance.is_translation_invariant(z4, Poly.constant(z4, 3))


def test_is_translation_invariant_errors(mat2, z4, gf2):
    with pytest.raises(UnsupportedRingError):
        invariance.is_translation_invariant(mat2, Poly.variable(mat2))
    with pytest.raises(RingMismatchError):
        invariance.is_translation_invariant(z4, Poly.variable(gf2))


def test_generators_dual_numbers(dual_f2):
    """{0, x}·(T^2 - T) と定数"""
    generators = invariance.twitt_generators("Nil(GF(2),2)", 2)
    assert [g.signature() for g in generators] == [(1, 0, 0, "full", 4), (0, 1, 1, "annihilator", 2)]
    assert generators[1].coefficients == [dual_f2.zero, dual_f2.x]
    assert generators[1].degree == 2


def test_generators_gf2():
    generators = invariance.twitt_generators("GF(2)", 4)
    assert [(g.i, g.exponent, g.kind) for g in generators] == [
        (1, 0, "full"),
        (1, 2, "full"),
        (0, 1, "annihilator"),
    ]


def test_generators_zmod4():
    generators = invariance.twitt_generators("Zmod(4)", 8)
    assert [(g.i, g.n, g.exponent, g.kind) for g in generators] == [
        (2, 0, 0, "full"),
        (2, 1, 4, "full"),
        (0, 1, 1, "annihilator"),
        (0, 3, 3, "annihilator"),
        (1, 1, 2, "annihilator"),
    ]
    assert generators[2].coefficients == [0, 2]
    assert generators[4].coefficients == [0, 1, 2, 3]


def test_generator_degree_limits():
    with pytest.raises(RingSumsError):
        invariance.twitt_generators("GF(2)", -1)
    use_settings(get_settings().with_overrides(degree_cap=4))
    with pytest.raises(InfeasibleComputationError):
        invariance.twitt_generators("GF(2)", 5)


def test_nilpotence_class_does_not_change_generators():
    first = invariance.twitt_generators("Nil(GF(3),2)", 9)
    second = invariance.twitt_generators("Nil(GF(3),3)", 9)
    assert [g.family() for g in first] == [g.family() for g in second]
    # 係数が R 全体の生成元だけ個数が環の位数で変わる
    assert [g.signature()[4] for g in first if g.kind == "full"] == [9, 9]
    assert [g.signature()[4] for g in second if g.kind == "full"] == [27, 27]
    assert [g.family()[4] for g in first] == [None, None, 3, 3]


def test_class_independence_case_passes():
    records = suites.case_class_independence("Nil(GF(3),2)", "Nil(GF(3),3)", 9)
    assert [r.passed for r in records] == [True]


@pytest.mark.parametrize(
    "text, degree",
    [
        ("GF(2)", 8),
        ("GF(4)", 8),
        ("GF(3)", 9),
        ("Zmod(4)", 8),
        ("Zmod(8)", 8),
        ("Zmod(9)", 9),
        ("GR(2,2,2)", 8),
        ("Nil(GF(2),2)", 8),
        ("Nil(GF(3),2)", 9),
        ("Nil(Zmod(9),2)", 6),
        ("Nil(Zmod(9),2)", 9),
    ],
)
def test_generated_module_equals_invariants(text, degree):
    report = invariance.verify_twitt_span(text, degree)
    assert report.forward
    assert report.backward
    assert report.invariant_count == report.span_count
    assert report.passed


def test_verify_with_exhaustive_method():
    report = invariance.verify_twitt_span("Zmod(4)", 4, method="exhaustive")
    assert report.method == "exhaustive"
    assert report.passed
    exhaustive = oracle.invariant_polys_bruteforce(build_ring("Zmod(4)"), 4, "exhaustive")
    assert report.invariant_count == exhaustive.count


@pytest.mark.parametrize("text", ["Zmod(4)", "Zmod(8)", "GR(2,2,2)"])
def test_lift_invariant(text):
    spec = parse_ring_spec(text)
    ring = build_ring(spec)
    residue = build_ring(invariance.residue_spec(spec))
    a1 = artin_schreier(residue, residue.order)
    shape = invariance.witt_shape(spec)
    for i in range(shape.m):
        lifted = invariance.lift_invariant(spec, a1, i)
        assert invariance.is_translation_invariant(ring, lifted)
        layout = oracle.CoordinateLayout(ring, lifted.degree)
        span = [layout.embed(f) for g in invariance.twitt_generators(spec, lifted.degree) for f in g.elements()]
        assert linalg.in_span(layout.embed(lifted), span, layout.modulus)


def test_lift_invariant_example(z4, gf2):
    a1 = artin_schreier(gf2, 2)
    assert invariance.lift_invariant("Zmod(4)", a1, 0) == Poly.from_ints(z4, [0, 2, 2])
    assert invariance.lift_invariant("Zmod(4)", a1, 1) == Poly.from_ints(z4, [0, 0, 1, 2, 1])


def test_lift_invariant_errors(gf2, gf4):
    a1 = artin_schreier(gf2, 2)
    with pytest.raises(InvarianceHypothesisError):
        invariance.lift_invariant("Zmod(4)", a1, 2)
    with pytest.raises(InvarianceHypothesisError):
        invariance.lift_invariant("Zmod(4)", Poly.variable(gf2), 0)
    with pytest.raises(RingMismatchError):
        invariance.lift_invariant("Zmod(4)", artin_schreier(gf4, 4), 0)


def test_split_product_invariance():
    ring = build_ring("Zmod(6)")
    f = Poly.from_ints(ring, [0, 1, 3, 2])
    results = invariance.split_product_invariance(ring, f)
    assert [str(r.spec) for r in results] == ["Zmod(2)", "Zmod(3)"]
    assert all(r.invariant for r in results)
    assert invariance.is_translation_invariant(ring, f)

    results = invariance.split_product_invariance(ring, Poly.variable(ring))
    assert not any(r.invariant for r in results)


def test_split_direct_product():
    ring = build_ring("Prod(GF(2),GF(3))")
    gf2_part = artin_schreier(build_ring("GF(2)"), 2)
    f = gf2_part.map_coefficients(ring, lambda c: ring.embed(0, c))
    results = invariance.split_product_invariance(ring, f)
    assert [str(r.spec) for r in results] == ["GF(2)", "GF(3)"]
    assert [r.invariant for r in results] == [True, True]
    assert results[1].poly.is_zero()


def test_split_requires_product(gf4):
    with pytest.raises(UnsupportedRingError):
        invariance.split_product_invariance(gf4, Poly.variable(gf4))
