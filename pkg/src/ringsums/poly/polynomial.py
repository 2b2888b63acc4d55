"""
有限環上の一変数多項式

T は中心的な不定元。係数は環の正準値を次数の昇順に並べ、
最高次の係数は 0 でない（零多項式は空）。
"""

from dataclasses import dataclass
from typing import Any, Callable, Iterable, Mapping, Optional

from ..core.exceptions import RingMismatchError, RingSumsError
from ..rings.base import FiniteRing, RingElement, Value
from ..rings.factory import realize_ring
from ..rings.spec import GF


def _trimmed(ring: FiniteRing, coeffs: Iterable[Value]) -> tuple[Value, ...]:
    values = list(coeffs)
    zero = ring.zero
    while values and values[-1] == zero:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class Poly:
    """密な多項式。coeffs[j] が T^j の係数"""

    ring: FiniteRing
    coeffs: tuple[Value, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trimmed(self.ring, self.coeffs))

    # ====== 構成 ======

    @classmethod
    def zero(cls, ring: FiniteRing) -> "Poly":
        return cls(ring, ())

    @classmethod
    def constant(cls, ring: FiniteRing, c: Value) -> "Poly":
        return cls(ring, (c,))

    @classmethod
    def monomial(cls, ring: FiniteRing, degree: int, c: Optional[Value] = None) -> "Poly":
        c = ring.one if c is None else c
        return cls(ring, (ring.zero,) * degree + (c,))

    @classmethod
    def variable(cls, ring: FiniteRing) -> "Poly":
        return cls.monomial(ring, 1)

    @classmethod
    def from_ints(cls, ring: FiniteRing, coeffs: Iterable[int]) -> "Poly":
        """整数係数（n·1_R として解釈）から作る"""
        return cls(ring, tuple(ring.from_int(c) for c in coeffs))

    # ====== 基本的な性質 ======

    @property
    def degree(self) -> int:
        """次数（零多項式は -1）"""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, j: int) -> RingElement:
        value = self.coeffs[j] if 0 <= j < len(self.coeffs) else self.ring.zero
        return RingElement(self.ring, value)

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly) or other.ring != self.ring:
            raise RingMismatchError(self.ring, getattr(other, "ring", other))

    # ====== 演算 ======

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        ring = self.ring
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] = ring.add(out[j], c)
        return Poly(ring, tuple(out))

    def __neg__(self) -> "Poly":
        return Poly(self.ring, tuple(self.ring.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        return self + (-other)

    def __mul__(self, other: "Poly | RingElement") -> "Poly":
        if isinstance(other, RingElement):
            return self.scale(other, left=False)
        self._check(other)
        ring = self.ring
        if not self.coeffs or not other.coeffs:
            return Poly.zero(ring)
        zero = ring.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == zero:
                continue
            for j, b in enumerate(other.coeffs):
                if b != zero:
                    out[i + j] = ring.add(out[i + j], ring.mul(a, b))
        return Poly(ring, tuple(out))

    def __rmul__(self, other: RingElement) -> "Poly":
        if isinstance(other, RingElement):
            return self.scale(other, left=True)
        return NotImplemented

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise RingSumsError(f"多項式の負冪は使えません: {exponent}")
        result = Poly.constant(self.ring, self.ring.one)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, c: RingElement | Value, left: bool = True) -> "Poly":
        """c·f（left=False なら f·c）"""
        if isinstance(c, RingElement):
            if c.ring != self.ring:
                raise RingMismatchError(self.ring, c.ring)
            c = c.value
        mul = self.ring.mul
        if left:
            return Poly(self.ring, tuple(mul(c, a) for a in self.coeffs))
        return Poly(self.ring, tuple(mul(a, c) for a in self.coeffs))

    def scale_int(self, n: int) -> "Poly":
        return Poly(self.ring, tuple(self.ring.mul_int(a, n) for a in self.coeffs))

    def map_coefficients(self, ring: FiniteRing, fn: Callable[[Value], Value]) -> "Poly":
        """係数ごとに fn を適用して別の環の多項式にする"""
        return Poly(ring, tuple(fn(c) for c in self.coeffs))

    # ====== 表示 ======

    def render(self) -> dict[str, Any]:
        return {"ring": str(self.ring.spec), "coeffs": [self.ring.render(c) for c in self.coeffs]}

    def format(self, var: str = "T") -> str:
        """降冪の表示（例: 2T^2 + 2T）"""
        ring = self.ring
        terms = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if c == ring.zero:
                continue
            text = ring.format(c)
            if j == 0:
                terms.append(text)
                continue
            power = var if j == 1 else f"{var}^{j}"
            if c == ring.one:
                terms.append(power)
            elif text.isdigit():
                terms.append(f"{text}{power}")
            elif " " in text and not text.startswith("["):
                terms.append(f"({text}){power}")
            else:
                terms.append(f"{text}·{power}")
        return " + ".join(terms) if terms else "0"

    def __str__(self) -> str:
        return self.format()


def poly_arith(op: str, f: Poly, g: "Poly | RingElement") -> Poly:
    """
    add / sub / mul / scale を名前で呼び出す

    Raises:
        RingMismatchError: 環が一致しない
    """
    match op:
        case "add":
            return f + g
        case "sub":
            return f - g
        case "mul":
            return f * g
        case "scale":
            if not isinstance(g, RingElement):
                raise RingSumsError("scale の第 2 引数は環の元です")
            return f.scale(g)
        case _:
            raise RingSumsError(f"未知の多項式演算: {op!r}")


def translate_poly(f: Poly, r: RingElement | Value) -> Poly:
    """
    f(T + r) を Horner 法で展開する

    acc ← acc·(T + r) + c_j を最高次から繰り返す。
    """
    ring = f.ring
    if isinstance(r, RingElement):
        if r.ring != ring:
            raise RingMismatchError(ring, r.ring)
        r = r.value
    if not f.coeffs:
        return f
    add, mul, zero = ring.add, ring.mul, ring.zero
    acc: list[Value] = []
    for c in reversed(f.coeffs):
        # acc·(T + r) = acc·T + acc·r
        shifted = [zero] + acc
        for j, a in enumerate(acc):
            if a != zero:
                shifted[j] = add(shifted[j], mul(a, r))
        shifted[0] = add(shifted[0], c)
        acc = shifted
    return Poly(ring, tuple(acc))


def eval_poly(
    f: Poly,
    t: RingElement,
    embed: Optional[Callable[[Value], Value]] = None,
) -> RingElement:
    """
    Horner 法で f(t) を計算する

    Args:
        f: 多項式
        t: 代入する元（f の環と異なる環でもよい）
        embed: f の係数を t の環へ送る写像。同じ環なら省略可

    Raises:
        RingMismatchError: 環が異なるのに埋め込みがない
    """
    target = t.ring
    if embed is None:
        if target != f.ring:
            raise RingMismatchError(f.ring, target)
        embed = lambda c: c  # noqa: E731
    acc = target.zero
    for c in reversed(f.coeffs):
        acc = target.add(target.mul(acc, t.value), embed(c))
    return RingElement(target, acc)


def artin_schreier(ring: FiniteRing, q: int) -> Poly:
    """T^q - T"""
    return Poly.monomial(ring, q) - Poly.variable(ring)


def expand_in_artin_schreier(q: int, terms: Mapping[int, int]) -> Poly:
    """
    Σ c_a (T^q - T)^a を GF(q) 上の密な多項式に展開する

    Args:
        q: 素数冪
        terms: 指数 a → F_p の係数 c_a
    """
    ring = realize_ring(GF(q))
    base = artin_schreier(ring, q)
    total = Poly.zero(ring)
    power = Poly.constant(ring, ring.one)
    current = 0
    for a in sorted(terms):
        c = terms[a] % ring.characteristic
        if c == 0:
            continue
        power = power * base ** (a - current)
        current = a
        total = total + power.scale(ring.from_int(c))
    return total
