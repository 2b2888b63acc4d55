"""
有限体 GF(p^e) と Galois 環 GR(p, m, e)

どちらも (Z/p^m)[y]/(f̂) として実現する（GF は m = 1）。
f は find_irreducible が選ぶ既約多項式、f̂ はその係数ごとの持ち上げ。
"""

import itertools
from functools import lru_cache
from typing import Any

from ..core.exceptions import RingMismatchError, RingSumsError, UnsupportedRingError
from .base import FiniteRing, RingElement
from .integers import IntegersMod
from .spec import prime_power

# 加算・乗算表を前計算する位数の上限
_TABLE_LIMIT = 256


# =============================================================================
# F_p 上の多項式（係数は定数項から昇順の list）
# =============================================================================


def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_rem(f: list[int], g: list[int], p: int) -> list[int]:
    """F_p 上の剰余 f mod g（g はモニック）"""
    r = _trim([c % p for c in f])
    dg = len(g) - 1
    while len(r) - 1 >= dg:
        c = r[-1]
        shift = len(r) - 1 - dg
        for i, gc in enumerate(g):
            r[shift + i] = (r[shift + i] - c * gc) % p
        _trim(r)
    return r


def _monic_polys(p: int, degree: int):
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def is_irreducible(f: tuple[int, ...], p: int) -> bool:
    """
    次数 e//2 以下のモニック多項式で割り切れないかを試し割りで確かめる

    Args:
        f: モニック多項式（定数項から昇順）
        p: 素数
    """
    e = len(f) - 1
    if e < 1:
        return False
    for d in range(1, e // 2 + 1):
        for g in _monic_polys(p, d):
            if not _poly_rem(list(f), g, p):
                return False
    return True


@lru_cache(maxsize=None)
def find_irreducible(p: int, e: int) -> tuple[int, ...]:
    """
    F_p 上の次数 e のモニック既約多項式のうち辞書式最小のもの

    係数は定数項から昇順に並べ、(c0, c1, ..., c_{e-1}) の辞書式順で比較する。

    Returns:
        長さ e+1 の係数 tuple（最後は 1）
    """
    if e == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=e):
        if low[0] == 0:
            continue
        candidate = low + (1,)
        if is_irreducible(candidate, p):
            return candidate
    raise RingSumsError(f"F_{p} 上の次数 {e} の既約多項式が見つかりません")


def format_modulus(f: tuple[int, ...], var: str = "y") -> str:
    """多項式を降冪で表示する（例: y^2 + y + 1）"""
    terms = []
    for j in range(len(f) - 1, -1, -1):
        c = f[j]
        if c == 0:
            continue
        if j == 0:
            terms.append(str(c))
        else:
            power = var if j == 1 else f"{var}^{j}"
            terms.append(power if c == 1 else f"{c}{power}")
    return " + ".join(terms) if terms else "0"


# =============================================================================
# 環
# =============================================================================


class GaloisRing(FiniteRing):
    """
    (Z/p^m)[y]/(f̂)。元は長さ e の係数 tuple（定数項から昇順）

    GF(q) の spec からは m = 1、GR(p,m,e) の spec からはそのまま作る。
    """

    def __init__(self, spec: Any, p: int, m: int, e: int):
        super().__init__(spec)
        self.p = p
        self.m = m
        self.e = e
        self.q = p**e
        self.modulus_int = p**m
        self.modulus = find_irreducible(p, e)
        self._moduli = (self.modulus_int,) * e
        self._zero = (0,) * e
        self._one = (1 % self.modulus_int,) + (0,) * (e - 1)
        self._add_table: dict[tuple, tuple] | None = None
        self._mul_table: dict[tuple, tuple] | None = None
        if self.order <= _TABLE_LIMIT:
            elements = list(self.elements())
            self._add_table = {
                (a, b): self._add(a, b) for a in elements for b in elements
            }
            self._mul_table = {
                (a, b): self._mul(a, b) for a in elements for b in elements
            }

    @property
    def is_field(self) -> bool:
        return self.m == 1

    @property
    def zero(self) -> tuple[int, ...]:
        return self._zero

    @property
    def one(self) -> tuple[int, ...]:
        return self._one

    def _add(self, a: tuple, b: tuple) -> tuple:
        n = self.modulus_int
        return tuple((x + y) % n for x, y in zip(a, b))

    def _mul(self, a: tuple, b: tuple) -> tuple:
        n = self.modulus_int
        e = self.e
        product = [0] * (2 * e - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                product[i + j] += x * y
        # y^e = -(f_0 + f_1 y + ... + f_{e-1} y^{e-1})
        f = self.modulus
        for d in range(2 * e - 2, e - 1, -1):
            c = product[d] % n
            if c:
                shift = d - e
                for i in range(e):
                    product[shift + i] -= c * f[i]
            product[d] = 0
        return tuple(c % n for c in product[:e])

    def add(self, a: tuple, b: tuple) -> tuple:
        if self._add_table is not None:
            return self._add_table[(a, b)]
        return self._add(a, b)

    def neg(self, a: tuple) -> tuple:
        n = self.modulus_int
        return tuple((-x) % n for x in a)

    def mul(self, a: tuple, b: tuple) -> tuple:
        if self._mul_table is not None:
            return self._mul_table[(a, b)]
        return self._mul(a, b)

    @property
    def coordinate_moduli(self) -> tuple[int, ...]:
        return self._moduli

    def coordinates(self, a: tuple) -> tuple[int, ...]:
        return tuple(a)

    def from_coordinates(self, coords: tuple[int, ...]) -> tuple:
        n = self.modulus_int
        return tuple(c % n for c in coords)

    def generator(self) -> tuple:
        """y の像（e = 1 なら f の根 -f_0）"""
        if self.e == 1:
            return ((-self.modulus[0]) % self.modulus_int,)
        return tuple(1 if i == 1 else 0 for i in range(self.e))

    def is_unit(self, a: tuple) -> bool:
        """剰余体への像が 0 でなければ単元"""
        return any(c % self.p for c in a)

    def inverse(self, a: tuple) -> tuple:
        """単元の逆元 a^(|R^×| - 1)"""
        if not self.is_unit(a):
            raise ZeroDivisionError(f"{self.format(a)} は {self.spec} の単元ではありません")
        unit_order = self.p ** ((self.m - 1) * self.e) * (self.q - 1)
        return self.pow(a, unit_order - 1)

    def render(self, a: tuple) -> list[int]:
        return list(a)

    def format(self, a: tuple) -> str:
        if self.e == 1:
            return str(a[0])
        return format_modulus(a)


def _witt_params(ring: Any) -> tuple[int, int, int]:
    """(p, m, e)。Zmod(p^m) は GR(p, m, 1) として扱う"""
    if isinstance(ring, GaloisRing):
        return ring.p, ring.m, ring.e
    if isinstance(ring, IntegersMod):
        pp = prime_power(ring.n)
        if pp is not None:
            return pp[0], pp[1], 1
    raise UnsupportedRingError("Frobenius / Teichmüller", getattr(ring, "spec", ring))


def frobenius(ring: FiniteRing, a: RingElement) -> RingElement:
    """Frobenius 写像 a ↦ a^p（GF / GR / Zmod(p^m) のみ）"""
    p, _, _ = _witt_params(ring)
    if a.ring != ring:
        raise RingMismatchError(ring, a.ring)
    return RingElement(ring, ring.pow(a.value, p))


def teichmuller_lift(ring: FiniteRing, a: RingElement) -> RingElement:
    """
    剰余体 GF(p^e) の元 a の Teichmüller 持ち上げ ω_m(a)

    係数ごとの持ち上げ â から x ↦ x^q を不動点まで繰り返す。
    """
    p, m, e = _witt_params(ring)
    rp, rm, re_ = _witt_params(a.ring)
    if (rp, rm, re_) != (p, 1, e):
        raise UnsupportedRingError(f"{a.ring.spec} からの Teichmüller 持ち上げ", ring.spec)
    q = p**e
    x = ring.from_coordinates(tuple(a.ring.coordinates(a.value)))
    for _ in range(m + 1):
        nxt = ring.pow(x, q)
        if nxt == x:
            return RingElement(ring, x)
        x = nxt
    raise RingSumsError(f"Teichmüller 持ち上げが収束しません: {ring.spec}, a={a}")
