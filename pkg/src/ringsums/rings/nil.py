"""切り詰め多項式環 R[x]/(x^k)"""

from typing import Any

from .base import FiniteRing


class NilRing(FiniteRing):
    """元は長さ k の tuple（j 番目が x^j の係数）。x は中心的"""

    def __init__(self, spec: Any, inner: FiniteRing, k: int):
        super().__init__(spec)
        self.inner = inner
        self.k = k
        self._inner_width = len(inner.coordinate_moduli)
        self._moduli = inner.coordinate_moduli * k
        self._zero = (inner.zero,) * k
        self._one = (inner.one,) + (inner.zero,) * (k - 1)

    @property
    def zero(self) -> tuple:
        return self._zero

    @property
    def one(self) -> tuple:
        return self._one

    @property
    def x(self) -> tuple:
        return self.monomial(1)

    def monomial(self, j: int, c: Any = None) -> tuple:
        """c·x^j（j ≥ k なら 0）"""
        c = self.inner.one if c is None else c
        return tuple(c if s == j else self.inner.zero for s in range(self.k))

    def add(self, a: tuple, b: tuple) -> tuple:
        add = self.inner.add
        return tuple(add(u, v) for u, v in zip(a, b))

    def neg(self, a: tuple) -> tuple:
        neg = self.inner.neg
        return tuple(neg(u) for u in a)

    def mul(self, a: tuple, b: tuple) -> tuple:
        inner = self.inner
        zero = inner.zero
        out = [zero] * self.k
        for i, u in enumerate(a):
            if u == zero:
                continue
            for j in range(self.k - i):
                v = b[j]
                if v != zero:
                    out[i + j] = inner.add(out[i + j], inner.mul(u, v))
        return tuple(out)

    def residue(self, a: tuple) -> Any:
        """x = 0 での値"""
        return a[0]

    @property
    def coordinate_moduli(self) -> tuple[int, ...]:
        return self._moduli

    def coordinates(self, a: tuple) -> tuple[int, ...]:
        coords: list[int] = []
        for u in a:
            coords.extend(self.inner.coordinates(u))
        return tuple(coords)

    def from_coordinates(self, coords: tuple[int, ...]) -> tuple:
        w = self._inner_width
        return tuple(
            self.inner.from_coordinates(tuple(coords[j * w : (j + 1) * w])) for j in range(self.k)
        )

    def render(self, a: tuple) -> list:
        return [self.inner.render(u) for u in a]

    def format(self, a: tuple) -> str:
        zero = self.inner.zero
        one = self.inner.one
        terms = []
        for j, u in enumerate(a):
            if u == zero:
                continue
            text = self.inner.format(u)
            if j == 0:
                terms.append(text)
                continue
            power = "x" if j == 1 else f"x^{j}"
            if u == one:
                terms.append(power)
            elif " " in text:
                terms.append(f"({text}){power}")
            else:
                terms.append(f"{text}{power}")
        return " + ".join(terms) if terms else "0"
