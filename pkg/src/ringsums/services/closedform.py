"""
冪和多項式の閉じた式

- Waring の公式（冪和を基本対称式で表す）
- GF(q) 上の基本対称式 Σ_k の表と冪和 P_k（正冪・負冪）
- 行列環のゼータ値
- 任意の構成可能な環への場合分けと直積の組み立て
"""

import math
from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Any, Optional

from ..core.exceptions import ClosedFormDispatchError, RingSumsError
from ..core.logging_utils import get_logger
from ..poly.binomial import binomial_mod_char
from ..poly.laurent import LaurentInU
from ..poly.polynomial import Poly, expand_in_artin_schreier
from ..rings.base import FiniteRing, RingElement
from ..rings.factory import decompose_by_characteristic, realize_ring
from ..rings.galois import GaloisRing
from ..rings.matrix import MatrixRing
from ..rings.nil import NilRing
from ..rings.spec import GF, GR, UT, Mat, Nil, Prod, RingSpec, Zmod, parse_ring_spec, prime_power

logger = get_logger(__name__)


# =============================================================================
# Waring の公式
# =============================================================================


@dataclass(frozen=True)
class WaringTerm:
    """
    p_k の展開の一項 coefficient · Π σ_j^{i_j}

    exponents[j-1] が σ_j の指数 i_j。
    """

    exponents: tuple[int, ...]
    coefficient: int

    @property
    def weight(self) -> int:
        return sum(j * i for j, i in enumerate(self.exponents, start=1))


def _exponent_vectors(k: int, n: int, parts: Optional[set[int]] = None) -> Iterator[tuple[int, ...]]:
    """Σ j·i_j = k を満たす (i_1, ..., i_n)。parts 以外の j では i_j = 0"""

    def fill(j: int, remaining: int) -> Iterator[list[int]]:
        if j == 0:
            if remaining == 0:
                yield []
            return
        allowed = parts is None or j in parts
        top = remaining // j if allowed else 0
        for count in range(top, -1, -1):
            for rest in fill(j - 1, remaining - count * j):
                yield rest + [count]

    for vector in fill(n, k):
        yield tuple(vector)


def waring_coefficient(exponents: tuple[int, ...], k: int) -> int:
    """(-1)^{i_2 + i_4 + ...} (i_1 + ... + i_n - 1)! k / (i_1! ... i_n!)"""
    total = sum(exponents)
    sign = -1 if sum(exponents[1::2]) % 2 else 1
    numerator = math.factorial(total - 1) * k
    denominator = math.prod(math.factorial(i) for i in exponents)
    if numerator % denominator:
        raise RingSumsError(f"Waring の係数が整数になりません: {exponents}")
    return sign * (numerator // denominator)


def waring_power_sum(k: int, n: int, parts: Optional[set[int]] = None) -> list[WaringTerm]:
    """
    p_k = Σ coefficient · Π σ_j^{i_j}（n 変数）

    Args:
        k: 1 以上
        n: 変数の個数
        parts: 指数を許す j の集合（None ならすべて）
    """
    if k < 1 or n < 1:
        raise RingSumsError(f"k, n は 1 以上が必要です: k={k}, n={n}")
    return [
        WaringTerm(vector, waring_coefficient(vector, k))
        for vector in _exponent_vectors(k, n, parts)
    ]


def elementary_symmetric_values(xs: list[int]) -> list[int]:
    """整数 x_1..x_n の基本対称式 σ_0 = 1, σ_1, ..., σ_n"""
    sigma = [1] + [0] * len(xs)
    for x in xs:
        for j in range(len(xs), 0, -1):
            sigma[j] += sigma[j - 1] * x
    return sigma


def evaluate_waring(terms: list[WaringTerm], xs: list[int]) -> int:
    """σ_j に整数の値を入れて Σ coefficient · Π σ_j^{i_j} を計算する"""
    sigma = elementary_symmetric_values(xs)
    total = 0
    for term in terms:
        value = term.coefficient
        for j, i in enumerate(term.exponents, start=1):
            if i:
                value *= (sigma[j] if j < len(sigma) else 0) ** i
        total += value
    return total


# =============================================================================
# GF(q) 上の基本対称式と冪和
# =============================================================================


@dataclass(frozen=True)
class SigmaValue:
    """Σ_k(T) の値 coefficient · (T^q - T)^exponent（exponent ∈ {-1, 0, 1}）"""

    q: int
    k: int
    coefficient: int
    exponent: int

    def is_zero(self) -> bool:
        return self.coefficient == 0

    def to_poly(self) -> Poly:
        if self.exponent < 0:
            raise RingSumsError(f"Σ_{self.k} は多項式ではありません")
        return expand_in_artin_schreier(self.q, {self.exponent: self.coefficient})

    def evaluate(self, t: RingElement) -> RingElement:
        """T = t（GF(q^s) の元で GF(q) の外）での値"""
        field_ring = t.ring
        if not isinstance(field_ring, GaloisRing) or not field_ring.is_field:
            raise RingSumsError(f"{field_ring.spec} は有限体ではありません")
        base = field_ring.sub(field_ring.pow(t.value, self.q), t.value)
        if self.exponent < 0:
            base = field_ring.inverse(base)
        value = field_ring.mul_int(field_ring.pow(base, abs(self.exponent)), self.coefficient)
        return RingElement(field_ring, value)

    def format(self) -> str:
        if self.coefficient == 0:
            return "0"
        base = {0: "", 1: "(T^q - T)", -1: "(T^q - T)^-1"}[self.exponent]
        if not base:
            return str(self.coefficient)
        return base if self.coefficient == 1 else f"{self.coefficient}·{base}"


def sigma_closed_form(q: int, k: int) -> SigmaValue:
    """
    Σ_k(T) の表（1 ≤ |k| ≤ q）

    k = q-1 → -1, k = q → T^q - T, k = -1 → -1/(T^q - T), k = -q → 1/(T^q - T), それ以外 0
    """
    pp = prime_power(q)
    if pp is None:
        raise RingSumsError(f"{q} は素数冪ではありません")
    if not 1 <= abs(k) <= q:
        raise RingSumsError(f"|k| は 1 以上 q 以下が必要です: k={k}, q={q}")
    p = pp[0]
    if k == q - 1:
        return SigmaValue(q, k, (-1) % p, 0)
    if k == q:
        return SigmaValue(q, k, 1, 1)
    if k == -1:
        return SigmaValue(q, k, (-1) % p, -1)
    if k == -q:
        return SigmaValue(q, k, 1, -1)
    return SigmaValue(q, k, 0, 0)


@dataclass
class PowerSumResult:
    """閉じた式による P_k(T) と、その導出に使った場合の名前"""

    spec: RingSpec
    k: int
    case: str
    poly: Poly
    symbolic: Optional[dict[int, int]] = None
    parts: list["PowerSumResult"] = field(default_factory=list)

    def symbolic_terms(self) -> Optional[list[tuple[int, int]]]:
        """(係数, T^q - T の指数) の列"""
        if self.symbolic is None:
            return None
        return [(c, a) for a, c in sorted(self.symbolic.items())]


def _field_params(q: int) -> tuple[int, int]:
    pp = prime_power(q)
    if pp is None:
        raise RingSumsError(f"{q} は素数冪ではありません")
    return pp


def power_sum_fq_terms(q: int, k: int) -> dict[int, int]:
    """
    P_k^{F_q} = -Σ_γ C(γ-1, k-(q-1)γ) (T^q - T)^{k-(q-1)γ} の係数（指数 → F_p）

    γ は ⌊k/q⌋+1 から ⌊k/(q-1)⌋ まで。
    """
    p, _ = _field_params(q)
    terms: dict[int, int] = {}
    if k < 1:
        return terms
    for gamma in range(k // q + 1, k // (q - 1) + 1):
        a = k - (q - 1) * gamma
        c = (-binomial_mod_char(gamma - 1, a, p)) % p
        if c:
            terms[a] = (terms.get(a, 0) + c) % p
    return {a: c for a, c in terms.items() if c}


def power_sum_fq_intermediate_terms(q: int, k: int) -> dict[int, int]:
    """
    Σ_{(q-1)α + qβ = k} (α+β-1)! k / (α! β!) · (T^q - T)^β の係数
    """
    p, _ = _field_params(q)
    terms: dict[int, int] = {}
    if k < 1:
        return terms
    for beta in range(k // q + 1):
        rest = k - q * beta
        if rest % (q - 1):
            continue
        alpha = rest // (q - 1)
        c = math.factorial(alpha + beta - 1) * k // (math.factorial(alpha) * math.factorial(beta))
        terms[beta] = (terms.get(beta, 0) + c) % p
    return {a: c for a, c in terms.items() if c}


def power_sum_fq(q: int, k: int) -> PowerSumResult:
    """GF(q) 上の P_k(T)（k = 0 なら q·1 = 0）"""
    if k < 0:
        raise RingSumsError(f"k は 0 以上が必要です: {k}")
    terms = power_sum_fq_terms(q, k)
    return PowerSumResult(GF(q), k, "field", expand_in_artin_schreier(q, terms), terms)


def power_sum_fq_intermediate(q: int, k: int) -> Poly:
    return expand_in_artin_schreier(q, power_sum_fq_intermediate_terms(q, k))


def waring_instantiation(q: int, k: int) -> Poly:
    """
    q 変数の Waring の公式に Σ_j の値を代入して P_k^{F_q} を求める

    σ_1, ..., σ_{q-2} を含む項は 0 なので、σ_{q-1} = -1 と σ_q = T^q - T の項だけを残す。
    """
    p, _ = _field_params(q)
    if k < 1:
        return expand_in_artin_schreier(q, {})
    terms: dict[int, int] = {}
    for term in waring_power_sum(k, q, parts={q - 1, q}):
        alpha = term.exponents[q - 2]
        beta = term.exponents[q - 1]
        c = term.coefficient * (-1) ** alpha
        terms[beta] = (terms.get(beta, 0) + c) % p
    return expand_in_artin_schreier(q, terms)


def power_sum_fq_negative(q: int, k: int) -> LaurentInU:
    """
    Σ_{r∈F_q} (T + r)^(-k) = Σ_β C(k-(q-1)β-1, β) (-1)^{k-qβ} U^{k-(q-1)β}

    β は 0 から ⌈k/q⌉-1 まで、U = (T^q - T)^(-1)。
    """
    if k < 1:
        raise RingSumsError(f"k は 1 以上が必要です: {k}")
    p, _ = _field_params(q)
    terms: dict[int, int] = {}
    for beta in range(-(-k // q)):
        a = k - (q - 1) * beta
        c = binomial_mod_char(a - 1, beta, p) * (-1) ** (k - q * beta)
        terms[a] = terms.get(a, 0) + c
    return LaurentInU(p, q, terms)


def power_sum_fq_negative_intermediate(q: int, k: int) -> LaurentInU:
    """Σ_{α + qβ = k} (α+β-1)! k / (α! β!) (-1)^α U^{α+β}"""
    if k < 1:
        raise RingSumsError(f"k は 1 以上が必要です: {k}")
    p, _ = _field_params(q)
    terms: dict[int, int] = {}
    for beta in range(k // q + 1):
        alpha = k - q * beta
        c = math.factorial(alpha + beta - 1) * k // (math.factorial(alpha) * math.factorial(beta))
        terms[alpha + beta] = terms.get(alpha + beta, 0) + c * (-1) ** alpha
    return LaurentInU(p, q, terms)


# =============================================================================
# 行列環
# =============================================================================


def bcl_is_identity(n: int, q: int, k: int) -> bool:
    """Mat(n, GF(q)) の ζ(-k) が単位行列になる条件"""
    return n == 2 and q == 2 and k > 1 and k % 6 in (0, 1, 5)


def bcl_power_sum(n: int, q: int, k: int) -> RingElement:
    """Σ_{r∈Mat(n,GF(q))} r^k（n = q = 2 かつ 1 < k ≡ 0, ±1 mod 6 なら単位行列、それ以外 0）"""
    if n < 2:
        raise RingSumsError(f"n は 2 以上が必要です: {n}")
    ring = realize_ring(Mat(n, GF(q)))
    value = ring.one if bcl_is_identity(n, q, k) else ring.zero
    return RingElement(ring, value)


# =============================================================================
# 場合分け
# =============================================================================


def normalize_spec(spec: RingSpec) -> RingSpec:
    """
    同じ座標表現をもつ標準形へ書き換える

    GR(p,1,e) → GF(p^e), GR(p,m,1) → Zmod(p^m), Zmod(p) → GF(p), Mat(1,X), UT(1,X) → X
    """
    match spec:
        case GR(p=p, m=1, e=e):
            return GF(p**e)
        case GR(p=p, m=m, e=1):
            return Zmod(p**m)
        case GR():
            return spec
        case Zmod(n=n) if prime_power(n) is not None and prime_power(n)[1] == 1:
            return GF(n)
        case Mat(d=1) | UT(d=1):
            return normalize_spec(spec.inner)
        case Mat():
            return Mat(spec.d, normalize_spec(spec.inner))
        case UT():
            return UT(spec.d, normalize_spec(spec.inner))
        case Nil():
            return Nil(normalize_spec(spec.inner), spec.k)
        case Prod():
            return Prod(tuple(normalize_spec(f) for f in spec.factors))
    return spec


def _transport(poly: Poly, ring: FiniteRing) -> Poly:
    """座標を保ったまま別の（同型な）環の多項式に移す"""
    source = poly.ring
    if source == ring:
        return poly
    return poly.map_coefficients(ring, lambda c: ring.from_coordinates(source.coordinates(c)))


def lift_from_prime_field(poly: Poly, ring: FiniteRing, offset: int = 0) -> Poly:
    """
    F_p 係数を Z/p^m へ持ち上げる

    係数 c を c + offset·p とする（offset = 0 なら [0, p) の代表元）。
    """
    p = poly.ring.characteristic
    return poly.map_coefficients(ring, lambda c: ring.from_int(c[0] + offset * p))


def power_sum_zmod_prime_power(p: int, m: int, k: int, lift_offset: int = 0) -> Poly:
    """
    Z/p^m 上の P_k(T)（m ≥ 2）

    p 奇数または k 偶数: p^{m-1}·P_k^{F_p}、p = 2 かつ k 奇数: 2^{m-1}(P_k^{F_2} + P_{k-1}^{F_2})
    """
    ring = realize_ring(Zmod(p**m))
    scale = p ** (m - 1)
    result = lift_from_prime_field(power_sum_fq(p, k).poly, ring, lift_offset).scale_int(scale)
    if p == 2 and k % 2 == 1:
        lower = lift_from_prime_field(power_sum_fq(2, k - 1).poly, ring, lift_offset)
        result = result + lower.scale_int(scale)
    return result


def cyclic_next_level(p: int, e: int, k: int, lower_k: Poly, lower_k_minus_1: Optional[Poly]) -> Poly:
    """
    Z/p^e 上の P_k, P_{k-1} から Z/p^{e+1} 上の P_k を作る

    p 奇数または k 偶数: p·P_k、p = 2 かつ k 奇数: 2·P_k + 2^e·P_{k-1}
    """
    ring = realize_ring(Zmod(p ** (e + 1)))

    def lift(f: Poly) -> Poly:
        return f.map_coefficients(ring, lambda c: c % ring.order)

    result = lift(lower_k).scale_int(p)
    if p == 2 and k % 2 == 1:
        if lower_k_minus_1 is None:
            raise RingSumsError("k が奇数のときは P_{k-1} が必要です")
        result = result + lift(lower_k_minus_1).scale_int(2**e)
    return result


def _odd_binomial_sum(ring: FiniteRing, k: int, coefficient: Any, residues: tuple[int, ...], modulus: int) -> Poly:
    """coefficient · Σ_{1<j≤k, j mod modulus ∈ residues} C(k, j) T^{k-j}"""
    coeffs = [ring.zero] * (k + 1)
    for j in range(2, k + 1):
        if j % modulus in residues:
            binom = binomial_mod_char(k, j, 2)
            if binom:
                coeffs[k - j] = coefficient
    return Poly(ring, tuple(coeffs))


def _is_vanishing_shape(spec: RingSpec) -> bool:
    """冪和がすべて 0 になると分かっている形"""
    match spec:
        case Mat(d=d, inner=GF(q=q)) | UT(d=d, inner=GF(q=q)):
            return d >= 2 and (d, q) != (2, 2)
        case Nil(inner=GF(q=q), k=k):
            return (q, k) != (2, 2)
        case Mat(inner=Zmod(n=n)) | UT(inner=Zmod(n=n)) | Nil(inner=Zmod(n=n)):
            pp = prime_power(n)
            return pp is not None and pp[1] > 1
        case Mat(inner=GR(m=m)) | UT(inner=GR(m=m)) | Nil(inner=GR(m=m)):
            return m > 1
        case GR(m=m, e=e):
            return m > 1 and e > 1
    return False


def _dispatch_prime_power(spec: RingSpec, k: int) -> PowerSumResult:
    ring = realize_ring(spec)
    match spec:
        case GF(q=q):
            return power_sum_fq(q, k)
        case Zmod(n=n):
            p, m = prime_power(n)
            case = "cyclic-2-odd" if p == 2 and k % 2 == 1 else "cyclic"
            return PowerSumResult(spec, k, case, power_sum_zmod_prime_power(p, m, k))
        case Nil(inner=GF(q=2), k=2) if isinstance(ring, NilRing):
            poly = Poly.zero(ring)
            if k % 2 == 1:
                poly = _odd_binomial_sum(ring, k, ring.x, (1,), 2)
            return PowerSumResult(spec, k, "dual-numbers-f2", poly)
        case UT(d=2, inner=GF(q=2)) if isinstance(ring, MatrixRing):
            poly = Poly.zero(ring)
            if k % 2 == 1:
                poly = _odd_binomial_sum(ring, k, ring.unit(0, 1), (1,), 2)
            return PowerSumResult(spec, k, "upper-triangular-f2", poly)
        case Mat(d=2, inner=GF(q=2)):
            poly = _odd_binomial_sum(ring, k, ring.one, (0, 1, 5), 6)
            return PowerSumResult(spec, k, "matrix-2x2-f2", poly)
    if _is_vanishing_shape(spec):
        return PowerSumResult(spec, k, "vanishing", Poly.zero(ring))
    raise ClosedFormDispatchError(spec)


def power_sum_closed(spec: RingSpec | str, k: int) -> PowerSumResult:
    """
    閉じた式による P_k(T)

    直積は因子ごとに、標数が素数冪でなければ標数で分解して組み立てる。
    素数冪標数の環は標準形に直してから場合分けする。

    Raises:
        ClosedFormDispatchError: 場合分けに該当しない形
    """
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    if k < 0:
        raise RingSumsError(f"k は 0 以上が必要です: {k}")
    ring = realize_ring(spec)

    if isinstance(spec, Prod):
        total = Poly.zero(ring)
        parts = []
        for index, factor in enumerate(spec.factors):
            part = power_sum_closed(factor, k)
            multiplier = spec.order // factor.order
            embedded = part.poly.scale_int(multiplier).map_coefficients(
                ring, lambda c, i=index: ring.embed(i, c)
            )
            total = total + embedded
            parts.append(part)
        return PowerSumResult(spec, k, "product", total, parts=parts)

    components = decompose_by_characteristic(spec)
    if len(components) > 1:
        total = Poly.zero(ring)
        parts = []
        for component in components:
            part = power_sum_closed(component.spec, k)
            scaled = part.poly.scale_int(component.multiplier)
            total = total + scaled.map_coefficients(ring, component.embed)
            parts.append(part)
        return PowerSumResult(spec, k, "characteristic-split", total, parts=parts)

    normalized = normalize_spec(spec)
    result = _dispatch_prime_power(normalized, k)
    if normalized != spec:
        logger.debug("標準形に直して計算しました", spec=str(spec), normalized=str(normalized))
        result = PowerSumResult(
            spec, k, result.case, _transport(result.poly, ring), result.symbolic, result.parts
        )
    return result


def zeta_closed(spec: RingSpec | str, k: int) -> RingElement:
    """ζ_R(-k) = P_k(0)"""
    result = power_sum_closed(spec, k)
    return result.poly.coefficient(0)
