"""直積環 R_1 × ... × R_l"""

from typing import Any

from .base import FiniteRing


class ProductRing(FiniteRing):
    """元は因子ごとの値の tuple。演算は成分ごと"""

    def __init__(self, spec: Any, factors: list[FiniteRing]):
        super().__init__(spec)
        self.factors = tuple(factors)
        self._widths = [len(f.coordinate_moduli) for f in factors]
        self._moduli = tuple(m for f in factors for m in f.coordinate_moduli)
        self._zero = tuple(f.zero for f in factors)
        self._one = tuple(f.one for f in factors)

    @property
    def zero(self) -> tuple:
        return self._zero

    @property
    def one(self) -> tuple:
        return self._one

    def add(self, a: tuple, b: tuple) -> tuple:
        return tuple(f.add(u, v) for f, u, v in zip(self.factors, a, b))

    def neg(self, a: tuple) -> tuple:
        return tuple(f.neg(u) for f, u in zip(self.factors, a))

    def mul(self, a: tuple, b: tuple) -> tuple:
        return tuple(f.mul(u, v) for f, u, v in zip(self.factors, a, b))

    def pow(self, a: tuple, exponent: int) -> tuple:
        return tuple(f.pow(u, exponent) for f, u in zip(self.factors, a))

    def embed(self, index: int, u: Any) -> tuple:
        """index 番目の因子の元を他成分 0 で埋め込む"""
        return tuple(u if i == index else f.zero for i, f in enumerate(self.factors))

    @property
    def coordinate_moduli(self) -> tuple[int, ...]:
        return self._moduli

    def coordinates(self, a: tuple) -> tuple[int, ...]:
        coords: list[int] = []
        for f, u in zip(self.factors, a):
            coords.extend(f.coordinates(u))
        return tuple(coords)

    def from_coordinates(self, coords: tuple[int, ...]) -> tuple:
        values = []
        offset = 0
        for f, w in zip(self.factors, self._widths):
            values.append(f.from_coordinates(tuple(coords[offset : offset + w])))
            offset += w
        return tuple(values)

    def render(self, a: tuple) -> list:
        return [f.render(u) for f, u in zip(self.factors, a)]

    def format(self, a: tuple) -> str:
        return "(" + ", ".join(f.format(u) for f, u in zip(self.factors, a)) + ")"
