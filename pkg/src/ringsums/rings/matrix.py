"""全行列環 Mat(d, R) と上三角行列環 UT(d, R)"""

from typing import Any

from .base import FiniteRing, Value


class MatrixRing(FiniteRing):
    """
    d×d 行列（行の tuple）。upper=True なら狭義下三角成分は常に 0

    座標は内側の環の座標を行優先で連結したもの（UT は i ≤ j の成分のみ）。
    """

    def __init__(self, spec: Any, inner: FiniteRing, d: int, upper: bool = False):
        super().__init__(spec)
        self.inner = inner
        self.d = d
        self.upper = upper
        self.positions = [
            (i, j) for i in range(d) for j in range(d) if not upper or i <= j
        ]
        self._inner_width = len(inner.coordinate_moduli)
        self._moduli = inner.coordinate_moduli * len(self.positions)
        z, o = inner.zero, inner.one
        self._zero = tuple(tuple(z for _ in range(d)) for _ in range(d))
        self._one = tuple(tuple(o if i == j else z for j in range(d)) for i in range(d))

    @property
    def zero(self) -> tuple:
        return self._zero

    @property
    def one(self) -> tuple:
        return self._one

    def add(self, a: tuple, b: tuple) -> tuple:
        add = self.inner.add
        return tuple(tuple(add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

    def neg(self, a: tuple) -> tuple:
        neg = self.inner.neg
        return tuple(tuple(neg(x) for x in row) for row in a)

    def mul(self, a: tuple, b: tuple) -> tuple:
        inner_add = self.inner.add
        inner_mul = self.inner.mul
        d = self.d
        columns = list(zip(*b))
        rows = []
        for row in a:
            new_row = []
            for col in columns:
                acc = inner_mul(row[0], col[0])
                for t in range(1, d):
                    acc = inner_add(acc, inner_mul(row[t], col[t]))
                new_row.append(acc)
            rows.append(tuple(new_row))
        return tuple(rows)

    def scalar(self, c: Value) -> tuple:
        """スカラー行列 c·Id"""
        z = self.inner.zero
        return tuple(tuple(c if i == j else z for j in range(self.d)) for i in range(self.d))

    def unit(self, i: int, j: int, c: Value | None = None) -> tuple:
        """行列単位 c·E_ij（c 省略時は 1）"""
        c = self.inner.one if c is None else c
        z = self.inner.zero
        return tuple(
            tuple(c if (r, s) == (i, j) else z for s in range(self.d)) for r in range(self.d)
        )

    @property
    def coordinate_moduli(self) -> tuple[int, ...]:
        return self._moduli

    def coordinates(self, a: tuple) -> tuple[int, ...]:
        coords: list[int] = []
        for i, j in self.positions:
            coords.extend(self.inner.coordinates(a[i][j]))
        if self.upper:
            z = self.inner.zero
            if any(a[i][j] != z for i in range(self.d) for j in range(i)):
                raise ValueError("上三角行列ではありません")
        return tuple(coords)

    def from_coordinates(self, coords: tuple[int, ...]) -> tuple:
        w = self._inner_width
        rows = [list(r) for r in self._zero]
        for slot, (i, j) in enumerate(self.positions):
            rows[i][j] = self.inner.from_coordinates(tuple(coords[slot * w : (slot + 1) * w]))
        return tuple(tuple(r) for r in rows)

    def render(self, a: tuple) -> list:
        return [[self.inner.render(x) for x in row] for row in a]

    def format(self, a: tuple) -> str:
        return "[" + ", ".join(
            "[" + ", ".join(self.inner.format(x) for x in row) + "]" for row in a
        ) + "]"
