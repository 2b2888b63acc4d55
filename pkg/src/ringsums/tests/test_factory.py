"""
環の構成と標数による分解のテスト
"""

import pytest

from ringsums.core.config import get_settings, use_settings
from ringsums.core.exceptions import EnumerationCapError
from ringsums.rings.factory import (
    build_ring,
    check_cap,
    decompose_by_characteristic,
    enumerate_elements,
    reassemble,
)
from ringsums.rings.spec import GF, Mat, Zmod


def test_build_ring_from_text_and_spec():
    assert build_ring("GF(4)") == build_ring(GF(4))
    assert build_ring("GF(4)").order == 4


def test_cap_enforced():
    with pytest.raises(EnumerationCapError) as info:
        build_ring("Mat(2,GF(4))", cap=100)
    assert info.value.order == 256
    assert info.value.cap == 100


def test_cap_from_settings():
    use_settings(get_settings().with_overrides(enumeration_cap=10))
    with pytest.raises(EnumerationCapError):
        build_ring("Zmod(11)")
    assert build_ring("Zmod(11)", enforce_cap=False).order == 11


def test_check_cap_boundary():
    check_cap(16, 16)
    with pytest.raises(EnumerationCapError):
        check_cap(17, 16)


def test_enumerate_elements_range(z4):
    values = [e.value for e in enumerate_elements(z4, 1, 3)]
    assert values == [1, 2]


def test_prime_power_characteristic_is_single_component():
    components = decompose_by_characteristic("Nil(GF(3),2)")
    assert len(components) == 1
    assert components[0].multiplier == 1


def test_zmod_decomposition():
    """Z/12 = Z/4 × Z/3（素数の昇順）"""
    ring = build_ring("Zmod(12)")
    components = decompose_by_characteristic(ring)
    assert [c.spec for c in components] == [Zmod(4), Zmod(3)]
    assert [c.multiplier for c in components] == [3, 4]
    for a in ring.elements():
        pieces = [c.project(a) for c in components]
        assert reassemble(ring, components, pieces) == a


def test_matrix_decomposition_is_entrywise():
    ring = build_ring("Mat(2,Zmod(6))")
    components = decompose_by_characteristic(ring)
    assert [c.spec for c in components] == [Mat(2, Zmod(2)), Mat(2, Zmod(3))]
    for index in (0, 17, 500, 1295):
        a = ring.element_at(index)
        pieces = [c.project(a) for c in components]
        assert reassemble(ring, components, pieces) == a


def test_embed_is_multiplicative():
    """埋め込みは環準同型（単位元は冪等元へ）"""
    ring = build_ring("Zmod(30)")
    for component in decompose_by_characteristic(ring):
        factor = component.ring
        for u in factor.elements():
            for v in factor.elements():
                assert component.embed(factor.mul(u, v)) == ring.mul(component.embed(u), component.embed(v))


def test_product_groups_factors_by_prime():
    components = decompose_by_characteristic("Prod(GF(4),Zmod(9),Zmod(2))")
    assert [str(c.spec) for c in components] == ["Prod(GF(4),Zmod(2))", "Zmod(9)"]
    assert [c.multiplier for c in components] == [9, 8]
    ring = build_ring("Prod(GF(4),Zmod(9),Zmod(2))")
    for index in (0, 5, 71):
        a = ring.element_at(index)
        assert reassemble(ring, components, [c.project(a) for c in components]) == a
