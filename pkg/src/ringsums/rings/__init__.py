from .base import FiniteRing, RingElement
from .factory import build_ring, decompose_by_characteristic, realize_ring
from .spec import GF, GR, Mat, Nil, Prod, RingSpec, UT, Zmod, parse_ring_spec

__all__ = [
    "FiniteRing",
    "GF",
    "GR",
    "Mat",
    "Nil",
    "Prod",
    "RingElement",
    "RingSpec",
    "UT",
    "Zmod",
    "build_ring",
    "decompose_by_characteristic",
    "parse_ring_spec",
    "realize_ring",
]
