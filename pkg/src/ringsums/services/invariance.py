"""
平行移動不変な多項式

R = 𝔪 ⊕ GR(p,m,e)（𝔪 = (x) の Nil 形、または 𝔪 = 0）について、
不変多項式の加群は
    ⊕_{n≥0} R·(T^q - T)^{n p^m}  ⊕  ⊕_{i<m, p∤n} p^{m-1-i} Ann_R(p^{m-1}𝔪)·(T^q - T)^{n p^i}
で与えられる。ここではその生成元を作り、総当たりの結果と一致することを確かめる。
"""

from dataclasses import dataclass, field
from typing import Literal, Optional

from ..core.config import get_settings
from ..core.exceptions import (
    InfeasibleComputationError,
    InvarianceHypothesisError,
    RingMismatchError,
    RingSumsError,
    UnsupportedRingError,
)
from ..core.logging_utils import PerformanceLogger, get_logger
from ..poly.polynomial import Poly, artin_schreier, translate_poly
from ..rings.base import FiniteRing, Value
from ..rings.factory import build_ring, check_cap, decompose_by_characteristic, realize_ring
from ..rings.product import ProductRing
from ..rings.spec import GF, GR, Nil, Prod, RingSpec, Zmod, parse_ring_spec, prime_power
from . import linalg
from .oracle import CoordinateLayout, InvariantMethod, invariant_polys_bruteforce

logger = get_logger(__name__)


def _require_commutative(ring: FiniteRing) -> None:
    if not ring.is_commutative:
        raise UnsupportedRingError("平行移動不変性", ring.spec)


def is_translation_invariant(ring: FiniteRing, f: Poly, cap: Optional[int] = None) -> bool:
    """
    すべての r で f(T + r) = f(T) か

    加法生成元での不変性を確かめ、位数が full_translation_check_cap 以下なら全元でも確かめる。
    """
    _require_commutative(ring)
    if f.ring != ring:
        raise RingMismatchError(ring, f.ring)
    check_cap(ring.order, cap)
    if f.degree < 1:
        return True
    for g in ring.additive_generators():
        if translate_poly(f, g) != f:
            return False
    if ring.order <= get_settings().full_translation_check_cap:
        return all(translate_poly(f, r) == f for r in ring.elements())
    return True


def annihilator(ring: FiniteRing, subset: list[Value], cap: Optional[int] = None) -> list[Value]:
    """Ann_R(S) = {a : a·s = 0 (s ∈ S)} を添字順に返す"""
    check_cap(ring.order, cap)
    zero = ring.zero
    targets = [s for s in subset if s != zero]
    return [a for a in ring.elements() if all(ring.mul(a, s) == zero for s in targets)]


# =============================================================================
# 生成元
# =============================================================================


@dataclass(frozen=True)
class WittShape:
    """R = GR(p,m,e)[x]/(x^k)（nil_class = 1 なら GR そのもの）"""

    p: int
    m: int
    e: int
    nil_class: int

    @property
    def q(self) -> int:
        return self.p**self.e


def witt_shape(spec: RingSpec) -> WittShape:
    """
    不変多項式の分類が適用できる形か判定する

    Raises:
        InvarianceHypothesisError: GF / Zmod(p^m) / GR とその Nil（k ≤ p）以外
    """
    match spec:
        case GF(q=q):
            p, e = prime_power(q)
            return WittShape(p, 1, e, 1)
        case Zmod(n=n) if prime_power(n) is not None:
            p, m = prime_power(n)
            return WittShape(p, m, 1, 1)
        case GR(p=p, m=m, e=e):
            return WittShape(p, m, e, 1)
        case Nil(inner=inner, k=k):
            base = witt_shape(inner)
            if base.nil_class != 1:
                raise InvarianceHypothesisError(f"入れ子の Nil は扱えません: {spec}")
            if k > base.p:
                raise InvarianceHypothesisError(
                    f"冪零指数 {k} が標数の素数 {base.p} を超えています: {spec}"
                )
            return WittShape(base.p, base.m, base.e, k)
    raise InvarianceHypothesisError(f"Galois 環とその Nil 以外には適用できません: {spec}")


@dataclass
class TwittGenerator:
    """
    c·(T^q - T)^exponent（c は係数集合の元）

    kind が "full" なら係数集合は R 全体（i = m）、
    "annihilator" なら p^{m-1-i}·Ann_R(p^{m-1}𝔪)（i < m）。
    """

    i: int
    n: int
    exponent: int
    kind: Literal["full", "annihilator"]
    coefficients: list[Value]
    poly: Poly

    @property
    def degree(self) -> int:
        return self.poly.degree

    def elements(self) -> list[Poly]:
        return [self.poly.scale(c) for c in self.coefficients]

    def signature(self) -> tuple[int, int, int, str, int]:
        return (self.i, self.n, self.exponent, self.kind, len(self.coefficients))

    def family(self) -> tuple[int, int, int, str, Optional[int]]:
        """環の位数に依らない部分（係数が R 全体なら個数は None）"""
        count = None if self.kind == "full" else len(self.coefficients)
        return (self.i, self.n, self.exponent, self.kind, count)


def maximal_ideal_part(ring: FiniteRing, shape: WittShape) -> list[Value]:
    """𝔪 = (x) の元（GR なら 0 のみ）"""
    if shape.nil_class == 1:
        return [ring.zero]
    inner_zero = ring.inner.zero
    return [a for a in ring.elements() if a[0] == inner_zero]


def twitt_generators(spec: RingSpec | str, degree: int) -> list[TwittGenerator]:
    """
    次数 degree 以下の不変多項式の生成元

    Raises:
        InvarianceHypothesisError: 分類の仮定を満たさない
    """
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    if degree < 0:
        raise RingSumsError(f"次数上限は 0 以上が必要です: {degree}")
    if degree > get_settings().degree_cap:
        raise InfeasibleComputationError(f"次数上限 {degree} が設定の上限を超えています")
    shape = witt_shape(spec)
    ring = build_ring(spec)
    p, m, q = shape.p, shape.m, shape.q
    base = artin_schreier(ring, q)

    scaled_m = [ring.mul_int(a, p ** (m - 1)) for a in maximal_ideal_part(ring, shape)]
    ann = annihilator(ring, scaled_m)
    all_elements = list(ring.elements())

    generators: list[TwittGenerator] = []
    n = 0
    while q * n * p**m <= degree:
        exponent = n * p**m
        generators.append(TwittGenerator(m, n, exponent, "full", all_elements, base**exponent))
        n += 1
    for i in range(m):
        coefficients = _dedupe(ring, [ring.mul_int(a, p ** (m - 1 - i)) for a in ann])
        n = 1
        while q * n * p**i <= degree:
            if n % p:
                exponent = n * p**i
                generators.append(
                    TwittGenerator(i, n, exponent, "annihilator", coefficients, base**exponent)
                )
            n += 1
    logger.debug("不変多項式の生成元", spec=str(spec), D=degree, count=len(generators))
    return generators


def _dedupe(ring: FiniteRing, values: list[Value]) -> list[Value]:
    return sorted(set(values), key=ring.index_of)


# =============================================================================
# 持ち上げ
# =============================================================================


def residue_spec(spec: RingSpec) -> RingSpec:
    """p を法とした還元の環"""
    match spec:
        case GF():
            return spec
        case Zmod(n=n) if prime_power(n) is not None:
            return GF(prime_power(n)[0])
        case GR(p=p, e=e):
            return GF(p**e)
        case Nil(inner=inner, k=k):
            return Nil(residue_spec(inner), k)
    raise UnsupportedRingError("p を法とした還元", spec)


def lift_invariant(spec: RingSpec | str, a1: Poly, i: int) -> Poly:
    """
    剰余環上の不変多項式 a1 から p^{m-1-i}·ã1^{p^i} を作る

    ã1 は係数ごとの正準な持ち上げ。

    Raises:
        InvarianceHypothesisError: i の範囲外、または a1 が不変でない
        RingMismatchError: a1 が剰余環の多項式でない
    """
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    shape = witt_shape(spec)
    ring = build_ring(spec)
    residue = realize_ring(residue_spec(spec))
    if a1.ring != residue:
        raise RingMismatchError(residue, a1.ring)
    if not 0 <= i < shape.m:
        raise InvarianceHypothesisError(f"i は 0 以上 {shape.m} 未満が必要です: {i}")
    if not is_translation_invariant(residue, a1):
        raise InvarianceHypothesisError(f"{a1} は {residue.spec} 上で不変ではありません")
    lifted = a1.map_coefficients(ring, lambda c: ring.from_coordinates(residue.coordinates(c)))
    return (lifted ** (shape.p**i)).scale_int(shape.p ** (shape.m - 1 - i))


# =============================================================================
# 一致の検証
# =============================================================================


@dataclass
class TwittReport:
    spec: RingSpec
    degree: int
    method: str
    invariant_count: int
    span_count: int
    forward: bool
    backward: bool
    generators: list[TwittGenerator] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.forward and self.backward and self.invariant_count == self.span_count


def _enumerate_span(layout: CoordinateLayout, vectors: list[list[int]], limit: int) -> set[tuple[int, ...]]:
    """生成元の和をすべて集める（limit を超えたら打ち切り）"""
    n = layout.modulus
    span = {tuple([0] * layout.size)}
    for v in vectors:
        if not any(v):
            continue
        new = set(span)
        for base in span:
            current = base
            while True:
                current = tuple((a + b) % n for a, b in zip(current, v))
                if current in new:
                    break
                new.add(current)
                if len(new) > limit:
                    return new
        span = new
    return span


def verify_twitt_span(
    spec: RingSpec | str,
    degree: int,
    method: InvariantMethod = "linear-solve",
) -> TwittReport:
    """
    生成元の加群と総当たりの不変多項式の空間が一致するか

    forward: 生成元の各元が不変（したがって加群全体が不変）
    backward: 不変多項式の空間が加群に含まれる（対角化で位数を比較）
    """
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    ring = build_ring(spec)
    with PerformanceLogger(logger, "verify_twitt_span", spec=str(spec), D=degree):
        generators = twitt_generators(spec, degree)
        span_polys = [f for g in generators for f in g.elements()]
        forward = all(is_translation_invariant(ring, f) for f in span_polys)

        layout = CoordinateLayout(ring, degree)
        span_vectors = [layout.embed(f) for f in span_polys]
        span_count = linalg.span_size(span_vectors, layout.modulus)

        report = invariant_polys_bruteforce(ring, degree, method)
        invariant_vectors = [layout.embed(f) for f in report.spanning_set()]
        combined = linalg.span_size(span_vectors + invariant_vectors, layout.modulus)
        backward = combined == span_count

        limit = get_settings().span_enumeration_cap
        if report.method == "exhaustive" and span_count <= limit:
            enumerated = _enumerate_span(layout, span_vectors, limit)
            explicit = {tuple(v) for v in invariant_vectors}
            backward = backward and explicit == enumerated

    if not (forward and backward):
        logger.warning(
            "生成元の加群と不変多項式の空間が一致しません",
            spec=str(spec), D=degree, forward=forward, backward=backward,
        )
    return TwittReport(
        spec, degree, report.method, report.count, span_count, forward, backward, generators
    )


# =============================================================================
# 直積の分解
# =============================================================================


@dataclass
class ComponentInvariance:
    spec: RingSpec
    poly: Poly
    invariant: bool


def split_product_invariance(ring: FiniteRing, f: Poly) -> list[ComponentInvariance]:
    """
    f を直積の因子ごとの成分に分けて、それぞれの不変性を調べる

    Prod は直積因子ごと、Zmod(n) などは標数による分解で分ける。

    Raises:
        UnsupportedRingError: 直積に分かれない環
    """
    _require_commutative(ring)
    if f.ring != ring:
        raise RingMismatchError(ring, f.ring)
    results = []
    if isinstance(ring, ProductRing) and isinstance(ring.spec, Prod):
        for index, factor in enumerate(ring.factors):
            component = f.map_coefficients(factor, lambda c, i=index: c[i])
            results.append(
                ComponentInvariance(factor.spec, component, is_translation_invariant(factor, component))
            )
        return results
    components = decompose_by_characteristic(ring)
    if len(components) < 2:
        raise UnsupportedRingError("直積への分解", ring.spec)
    for component in components:
        factor = component.ring
        piece = f.map_coefficients(factor, component.project)
        results.append(
            ComponentInvariance(component.spec, piece, is_translation_invariant(factor, piece))
        )
    return results
