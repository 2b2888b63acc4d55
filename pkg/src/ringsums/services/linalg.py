"""
Z/N 上の線形代数

gcdex から作る 2×2 ユニモジュラ変換で行と列を掃き出して対角化し、
核の生成元・像の位数を求める。N は素数冪でなくてもよい。
"""

import math
from dataclasses import dataclass, field
from typing import Sequence

Matrix = list[list[int]]


def gcdex(a: int, b: int) -> tuple[int, int, int, int, int]:
    """
    g = gcd(a, b) と、行列式 1 の変換 [[s, t], [u, v]] を返す

    (s·a + t·b, u·a + v·b) = (g, 0) となる。
    """
    if a == 0:
        return b, 0, 1, -1, 0
    if b % a == 0:
        return a, 1, 0, -(b // a), 1
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    g = old_r
    return g, old_s, old_t, -b // g, a // g


@dataclass
class Diagonalization:
    """L·A·R = D（D は対角）の R と対角成分"""

    modulus: int
    n_rows: int
    n_cols: int
    diagonal: list[int] = field(default_factory=list)
    right: Matrix = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    def kernel_size(self) -> int:
        """{x : A x = 0} の位数"""
        n = self.modulus
        size = n ** (self.n_cols - self.rank)
        for d in self.diagonal:
            size *= math.gcd(d, n)
        return size

    def image_size(self) -> int:
        """A の列が生成する部分加群の位数"""
        n = self.modulus
        size = 1
        for d in self.diagonal:
            size *= n // math.gcd(d, n)
        return size

    def kernel_generators(self) -> list[list[int]]:
        """核の生成系（R の列に位数を合わせた倍数を掛けたもの）"""
        n = self.modulus
        gens = []
        for j in range(self.n_cols):
            if j < self.rank:
                scale = n // math.gcd(self.diagonal[j], n)
                if scale == n:
                    continue
            else:
                scale = 1
            gens.append([(self.right[i][j] * scale) % n for i in range(self.n_cols)])
        return gens


def diagonalize(matrix: Sequence[Sequence[int]], modulus: int) -> Diagonalization:
    """
    行列を Z/modulus 上で対角化する

    Args:
        matrix: n_rows × n_cols の整数行列
        modulus: N ≥ 2

    Returns:
        対角成分（0 でないもののみ）と列変換 R
    """
    n = modulus
    a = [[x % n for x in row] for row in matrix]
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0
    right = [[1 if i == j else 0 for j in range(n_cols)] for i in range(n_cols)]
    diagonal: list[int] = []

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]

    def col_transform(c1: int, c2: int, s: int, t: int, u: int, v: int) -> None:
        for rows in (a, right):
            for row in rows:
                x, y = row[c1], row[c2]
                row[c1] = (s * x + t * y) % n
                row[c2] = (u * x + v * y) % n

    def row_transform(r1: int, r2: int, s: int, t: int, u: int, v: int) -> None:
        x, y = a[r1], a[r2]
        a[r1] = [(s * p + t * q) % n for p, q in zip(x, y)]
        a[r2] = [(u * p + v * q) % n for p, q in zip(x, y)]

    t = 0
    while t < min(n_rows, n_cols):
        pivot = next(
            ((i, j) for i in range(t, n_rows) for j in range(t, n_cols) if a[i][j]),
            None,
        )
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        if j != t:
            swap_cols(t, j)
        while True:
            for i in range(t + 1, n_rows):
                if a[i][t]:
                    _, s, tt, u, v = gcdex(a[t][t], a[i][t])
                    row_transform(t, i, s, tt, u, v)
            dirty = False
            for j in range(t + 1, n_cols):
                if a[t][j]:
                    _, s, tt, u, v = gcdex(a[t][t], a[t][j])
                    col_transform(t, j, s, tt, u, v)
                    dirty = True
            if not dirty or all(a[i][t] == 0 for i in range(t + 1, n_rows)):
                break
        diagonal.append(a[t][t])
        t += 1
    return Diagonalization(n, n_rows, n_cols, diagonal, right)


def kernel(matrix: Sequence[Sequence[int]], modulus: int, n_cols: int) -> tuple[list[list[int]], int]:
    """
    A x = 0 の解の生成系と解の個数

    行がない場合（制約なし）も n_cols で列数を与える。
    """
    if not matrix:
        gens = [[1 if i == j else 0 for j in range(n_cols)] for i in range(n_cols)]
        return gens, modulus**n_cols
    result = diagonalize(matrix, modulus)
    return result.kernel_generators(), result.kernel_size()


def span_size(vectors: Sequence[Sequence[int]], modulus: int) -> int:
    """ベクトルが生成する (Z/N)^n の部分加群の位数"""
    if not vectors:
        return 1
    columns = [list(col) for col in zip(*vectors)]
    return diagonalize(columns, modulus).image_size()


def in_span(vector: Sequence[int], basis: Sequence[Sequence[int]], modulus: int) -> bool:
    """vector が basis の生成する部分加群に属するか"""
    if not any(x % modulus for x in vector):
        return True
    return span_size(list(basis) + [vector], modulus) == span_size(basis, modulus)
