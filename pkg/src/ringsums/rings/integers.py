"""剰余環 Z/n"""

from typing import Any

from .base import FiniteRing
from .spec import Zmod


class IntegersMod(FiniteRing):
    """元は 0..n-1 の int"""

    def __init__(self, spec: Zmod):
        super().__init__(spec)
        self.n = spec.n
        self._moduli = (spec.n,)

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1 % self.n

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def neg(self, a: int) -> int:
        return (-a) % self.n

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.n

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.n

    def pow(self, a: int, exponent: int) -> int:
        if exponent < 0:
            return super().pow(a, exponent)
        return pow(a, exponent, self.n)

    def mul_int(self, a: int, n: int) -> int:
        return (a * n) % self.n

    @property
    def coordinate_moduli(self) -> tuple[int, ...]:
        return self._moduli

    def coordinates(self, a: int) -> tuple[int, ...]:
        return (a,)

    def from_coordinates(self, coords: tuple[int, ...]) -> int:
        return coords[0] % self.n

    def contains(self, a: Any) -> bool:
        return isinstance(a, int) and not isinstance(a, bool) and 0 <= a < self.n

    def elements(self, start: int = 0, stop: int | None = None):
        stop = self.n if stop is None else min(stop, self.n)
        return iter(range(start, stop))

    def render(self, a: int) -> int:
        return a

    def format(self, a: int) -> str:
        return str(a)
