"""
総当たりによる基準値

ゼータ値 ζ_R(-k) = Σ r^k、冪和多項式 P_k(T) = Σ (T + r)^k、
平行移動不変な多項式の空間、拡大体での負冪の和を列挙で求める。
"""

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Literal, Optional

from ..core.config import get_settings
from ..core.exceptions import (
    EnumerationCapError,
    InfeasibleComputationError,
    RingSumsError,
    UnsupportedRingError,
)
from ..core.logging_utils import PerformanceLogger, get_logger
from ..poly.binomial import binomial_mod_char
from ..poly.polynomial import Poly, eval_poly, translate_poly
from ..rings.base import FiniteRing, RingElement, Value
from ..rings.factory import check_cap, realize_ring
from ..rings.galois import GaloisRing
from ..rings.spec import GF, RingSpec, prime_power
from . import linalg

logger = get_logger(__name__)

InvariantMethod = Literal["auto", "exhaustive", "linear-solve"]

# linear-solve で扱う未知数（係数の座標）の上限
_LINEAR_SOLVE_LIMIT = 4096


# =============================================================================
# ゼータ値と冪和
# =============================================================================


def index_ranges(order: int, parts: int) -> list[tuple[int, int]]:
    """0..order-1 をほぼ等しい parts 個の連続区間に分ける"""
    parts = max(1, min(parts, order))
    step, extra = divmod(order, parts)
    ranges = []
    start = 0
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


def zeta_values(
    ring: FiniteRing,
    kmax: int,
    start: int = 0,
    stop: Optional[int] = None,
) -> list[Value]:
    """
    添字区間 [start, stop) の元についての部分和 Σ r^k（k = 0..kmax）

    r^0 = 1 なので k = 0 の値は区間の元の個数·1。
    """
    add, mul, one, zero = ring.add, ring.mul, ring.one, ring.zero
    sums = [zero] * (kmax + 1)
    for r in ring.elements(start, stop):
        power = one
        for k in range(kmax + 1):
            sums[k] = add(sums[k], power)
            if k < kmax:
                power = mul(power, r)
                if power == zero:
                    break
    return sums


def combine_partials(ring: FiniteRing, partials: list[list[Value]]) -> list[Value]:
    """区間ごとの部分和を足し合わせる"""
    total = list(partials[0])
    for partial in partials[1:]:
        total = [ring.add(a, b) for a, b in zip(total, partial)]
    return total


def all_zeta_values(
    ring: FiniteRing,
    kmax: int,
    partitions: int = 1,
    cap: Optional[int] = None,
) -> list[Value]:
    """ζ_R(0), ..., ζ_R(-kmax) を列挙で求める"""
    check_cap(ring.order, cap)
    with PerformanceLogger(logger, "zeta_values", ring=str(ring.spec), kmax=kmax):
        partials = [
            zeta_values(ring, kmax, start, stop)
            for start, stop in index_ranges(ring.order, partitions)
        ]
    return combine_partials(ring, partials)


def zeta_bruteforce(ring: FiniteRing, k: int, cap: Optional[int] = None) -> RingElement:
    """
    ζ_R(-k) = Σ_{r∈R} r^k

    Raises:
        EnumerationCapError: 位数が上限を超える
    """
    if k < 0:
        raise RingSumsError(f"k は 0 以上が必要です: {k}")
    return RingElement(ring, all_zeta_values(ring, k, cap=cap)[k])


def power_sum_from_zetas(ring: FiniteRing, k: int, zetas: list[Value]) -> Poly:
    """P_k(T) = Σ_j C(k, j) T^{k-j} ζ_R(-j)（j = 0 の項は |R| T^k）"""
    char = ring.characteristic
    coeffs = [ring.zero] * (k + 1)
    for j in range(k + 1):
        binom = binomial_mod_char(k, j, char)
        if binom:
            coeffs[k - j] = ring.mul_int(zetas[j], binom)
    return Poly(ring, tuple(coeffs))


def power_sum_direct(ring: FiniteRing, k: int, start: int = 0, stop: Optional[int] = None) -> Poly:
    """Σ_r (T + r)^k を平行移動の展開から直接足す"""
    monomial = Poly.monomial(ring, k)
    total = Poly.zero(ring)
    for r in ring.elements(start, stop):
        total = total + translate_poly(monomial, r)
    return total


def power_sum_bruteforce(
    ring: FiniteRing,
    k: int,
    mode: Literal["esum", "direct"] = "esum",
    partitions: int = 1,
    cap: Optional[int] = None,
) -> Poly:
    """
    冪和多項式 P_k(T) を列挙で求める

    Args:
        ring: 有限環
        k: 0 以上の指数
        mode: "esum" はゼータ値から二項展開、"direct" は平行移動の和
        partitions: 列挙を分割する区間数（結果は分割に依らない）
        cap: 位数の上限（None なら設定値）
    """
    if k < 0:
        raise RingSumsError(f"k は 0 以上が必要です: {k}")
    check_cap(ring.order, cap)
    if mode == "direct":
        with PerformanceLogger(logger, "power_sum_direct", ring=str(ring.spec), k=k):
            pieces = [
                power_sum_direct(ring, k, start, stop)
                for start, stop in index_ranges(ring.order, partitions)
            ]
        total = pieces[0]
        for piece in pieces[1:]:
            total = total + piece
        return total
    zetas = all_zeta_values(ring, k, partitions, cap)
    return power_sum_from_zetas(ring, k, zetas)


def power_sums_bruteforce(ring: FiniteRing, kmax: int, cap: Optional[int] = None) -> list[Poly]:
    """P_0, ..., P_kmax を一度の列挙で求める"""
    zetas = all_zeta_values(ring, kmax, cap=cap)
    return [power_sum_from_zetas(ring, k, zetas) for k in range(kmax + 1)]


def elementary_symmetric_bruteforce(q: int, k: int) -> Poly:
    """
    Σ_k(T) = Σ_{|S|=k} Π_{r∈S} (T + r)  （S は GF(q) の k 元部分集合）

    Π_r (1 + X(T + r)) を展開して X^k の係数をとる。
    """
    if not 0 <= k <= q:
        raise RingSumsError(f"k は 0 以上 q 以下が必要です: k={k}, q={q}")
    ring = realize_ring(GF(q))
    sigma = [Poly.constant(ring, ring.one)] + [Poly.zero(ring)] * k
    for r in ring.elements():
        linear = Poly(ring, (r, ring.one))
        for j in range(k, 0, -1):
            sigma[j] = sigma[j] + sigma[j - 1] * linear
    return sigma[k]


# =============================================================================
# 平行移動の制約（座標ベクトル）
# =============================================================================


@dataclass(frozen=True)
class CoordinateLayout:
    """
    次数 D 以下の多項式を (Z/N)^{(D+1)w} に埋め込む

    座標 i（法 n_i）は N/n_i 倍して Z/N に入れる。
    """

    ring: FiniteRing
    degree: int

    @property
    def moduli(self) -> tuple[int, ...]:
        return self.ring.coordinate_moduli

    @property
    def width(self) -> int:
        return len(self.moduli)

    @property
    def modulus(self) -> int:
        return math.lcm(*self.moduli)

    @property
    def size(self) -> int:
        return (self.degree + 1) * self.width

    def scales(self) -> list[int]:
        n = self.modulus
        return [n // m for m in self.moduli]

    def embed(self, f: Poly) -> list[int]:
        """多項式を埋め込んだベクトル"""
        if f.degree > self.degree:
            raise RingSumsError(f"次数 {f.degree} が上限 {self.degree} を超えています")
        scales = self.scales()
        vector = []
        for j in range(self.degree + 1):
            coords = self.ring.coordinates(f.coeffs[j]) if j < len(f.coeffs) else (0,) * self.width
            vector.extend(s * c for s, c in zip(scales, coords))
        return vector

    def from_parameters(self, params: list[int]) -> Poly:
        """未知数 x（座標 i は x mod n_i）から多項式を作る"""
        w = self.width
        coeffs = []
        for j in range(self.degree + 1):
            chunk = params[j * w : (j + 1) * w]
            coeffs.append(
                self.ring.from_coordinates(tuple(x % m for x, m in zip(chunk, self.moduli)))
            )
        return Poly(self.ring, tuple(coeffs))

    def quotient_size(self) -> int:
        """未知数の表現の重複度 Π N/n_i"""
        return math.prod(self.scales()) ** (self.degree + 1)


def translation_constraints(ring: FiniteRing, degree: int) -> tuple[CoordinateLayout, list[list[int]]]:
    """
    f(T + g) - f(T) = 0（g は加法生成元）の係数を Z/N 上の行列にする

    列は (次数 j, 座標 i)、行は (生成元 g, 次数 d, 座標 o)。
    """
    layout = CoordinateLayout(ring, degree)
    scales = layout.scales()
    w = layout.width
    char = ring.characteristic
    units = ring.additive_generators()
    rows: list[list[int]] = []
    for g in ring.additive_generators():
        powers = [ring.one]
        for _ in range(degree):
            powers.append(ring.mul(powers[-1], g))
        # block[d][col]: 列 col の単位元を係数とする単項式の差分の T^d 係数
        block = [[[0] * w for _ in range(layout.size)] for _ in range(degree + 1)]
        for j in range(degree + 1):
            for i, unit in enumerate(units):
                col = j * w + i
                for d in range(j):
                    binom = binomial_mod_char(j, d, char)
                    if not binom:
                        continue
                    value = ring.mul_int(ring.mul(unit, powers[j - d]), binom)
                    block[d][col] = list(ring.coordinates(value))
        for d in range(degree):
            for o in range(w):
                row = [scales[o] * block[d][col][o] for col in range(layout.size)]
                if any(row):
                    rows.append(row)
    return layout, rows


# =============================================================================
# 不変多項式の空間
# =============================================================================


@dataclass
class InvariantSpaceReport:
    """
    次数 D 以下の平行移動不変多項式の空間

    exhaustive なら polynomials に全件、linear-solve なら generators に生成系。
    """

    spec: RingSpec
    degree: int
    method: Literal["exhaustive", "linear-solve"]
    count: int
    polynomials: list[Poly] = field(default_factory=list)
    generators: list[Poly] = field(default_factory=list)

    def spanning_set(self) -> list[Poly]:
        return self.polynomials if self.method == "exhaustive" else self.generators


def _require_commutative(ring: FiniteRing) -> None:
    if not ring.is_commutative:
        raise UnsupportedRingError("平行移動不変性", ring.spec)


def _invariant_exhaustive(ring: FiniteRing, degree: int) -> list[Poly]:
    generators = ring.additive_generators()
    monomials = [Poly.monomial(ring, j) for j in range(degree + 1)]
    # deltas[g][j] = (T + g)^j - T^j
    deltas = [[translate_poly(m, g) - m for m in monomials] for g in generators]
    zero = ring.zero
    found = []
    for coeffs in itertools.product(list(ring.elements()), repeat=degree + 1):
        invariant = True
        for per_generator in deltas:
            acc = [zero] * (degree + 1)
            for c, delta in zip(coeffs, per_generator):
                if c == zero:
                    continue
                for d, value in enumerate(delta.coeffs):
                    acc[d] = ring.add(acc[d], ring.mul(c, value))
            if any(v != zero for v in acc):
                invariant = False
                break
        if invariant:
            found.append(Poly(ring, coeffs))
    return found


def invariant_polys_bruteforce(
    ring: FiniteRing,
    degree: int,
    method: InvariantMethod = "auto",
) -> InvariantSpaceReport:
    """
    次数 degree 以下の平行移動不変多項式をすべて求める

    |R|^{D+1} が exhaustive_cap 以下なら係数ベクトルを全列挙して絞り込み、
    そうでなければ Z/N 上の制約系を対角化して解の加群を求める。

    Raises:
        UnsupportedRingError: 非可換環
        EnumerationCapError: exhaustive を指定したが規模が上限を超える
        InfeasibleComputationError: どちらの方法も規模的に無理
    """
    _require_commutative(ring)
    if degree < 0:
        raise RingSumsError(f"次数上限は 0 以上が必要です: {degree}")
    settings = get_settings()
    if degree > settings.degree_cap:
        raise InfeasibleComputationError(f"次数上限 {degree} が設定の上限 {settings.degree_cap} を超えています")
    vectors = ring.order ** (degree + 1)
    unknowns = (degree + 1) * len(ring.coordinate_moduli)
    exhaustive_ok = vectors <= settings.exhaustive_cap
    linear_ok = unknowns <= _LINEAR_SOLVE_LIMIT
    if method == "auto":
        if exhaustive_ok:
            method = "exhaustive"
        elif linear_ok:
            method = "linear-solve"
        else:
            raise InfeasibleComputationError(
                f"{ring.spec} の次数 {degree} 以下の不変多項式は計算できません"
                f"（係数ベクトル {vectors} 個, 未知数 {unknowns} 個）"
            )
    if method == "exhaustive":
        if not exhaustive_ok:
            raise EnumerationCapError(vectors, settings.exhaustive_cap, "係数ベクトルの個数")
        with PerformanceLogger(logger, "invariants_exhaustive", ring=str(ring.spec), D=degree):
            polys = _invariant_exhaustive(ring, degree)
        return InvariantSpaceReport(ring.spec, degree, "exhaustive", len(polys), polynomials=polys)
    if not linear_ok:
        raise InfeasibleComputationError(f"未知数 {unknowns} 個は多すぎます")
    with PerformanceLogger(logger, "invariants_linear_solve", ring=str(ring.spec), D=degree):
        layout, rows = translation_constraints(ring, degree)
        params, raw_count = linalg.kernel(rows, layout.modulus, layout.size)
    generators = [layout.from_parameters(x) for x in params]
    generators = [g for g in generators if not g.is_zero()]
    count = raw_count // layout.quotient_size()
    return InvariantSpaceReport(ring.spec, degree, "linear-solve", count, generators=generators)


# =============================================================================
# 拡大体での負冪の和
# =============================================================================


@lru_cache(maxsize=None)
def field_embedding(q: int, s: int) -> Callable[[Value], Value]:
    """
    GF(q) → GF(q^s) の埋め込み

    GF(q) の定義多項式の GF(q^s) での根のうち列挙順で最小のものに y を送る。
    """
    small = realize_ring(GF(q))
    big = realize_ring(GF(q**s))
    if not isinstance(small, GaloisRing) or not isinstance(big, GaloisRing):
        raise UnsupportedRingError("体の埋め込み", GF(q))
    if small.e == 1:
        return lambda c: big.from_int(c[0])
    modulus = Poly.from_ints(small, small.modulus)
    root = None
    for candidate in big.elements():
        value = eval_poly(modulus, RingElement(big, candidate), lambda c: big.from_int(c[0]))
        if value.is_zero():
            root = candidate
            break
    if root is None:
        raise RingSumsError(f"GF({q}) の定義多項式の根が GF({q ** s}) にありません")
    powers = [big.one]
    for _ in range(small.e - 1):
        powers.append(big.mul(powers[-1], root))

    def embed(c: Value) -> Value:
        total = big.zero
        for coefficient, power in zip(c, powers):
            total = big.add(total, big.mul_int(power, coefficient))
        return total

    return embed


def _outside_subfield(q: int, t: RingElement) -> GaloisRing:
    ring = t.ring
    if not isinstance(ring, GaloisRing) or not ring.is_field:
        raise UnsupportedRingError("拡大体での評価", ring.spec)
    p, e = prime_power(q) or (0, 0)
    if ring.p != p or ring.e % e:
        raise UnsupportedRingError(f"GF({q}) の拡大としての評価", ring.spec)
    if ring.pow(t.value, q) == t.value:
        raise RingSumsError(f"{t} は GF({q}) に属します")
    return ring


def _extension_degree(q: int, ring: GaloisRing) -> int:
    return ring.e // prime_power(q)[1]


def negative_power_sum_eval(q: int, k: int, t: RingElement) -> RingElement:
    """
    Σ_{r∈GF(q)} (t + r)^(-k) を GF(q^s) で計算する

    Args:
        q: 素数冪
        k: 1 以上
        t: GF(q^s) の元で GF(q) に属さないもの

    Raises:
        RingSumsError: t が GF(q) に属する
    """
    if k < 1:
        raise RingSumsError(f"k は 1 以上が必要です: {k}")
    big = _outside_subfield(q, t)
    embed = field_embedding(q, _extension_degree(q, big))
    small = realize_ring(GF(q))
    total = big.zero
    for r in small.elements():
        inverse = big.inverse(big.add(t.value, embed(r)))
        total = big.add(total, big.pow(inverse, k))
    return RingElement(big, total)


def negative_sigma_eval(q: int, k: int, t: RingElement) -> RingElement:
    """
    Σ_{-k}(t) = Σ_{|S|=k} Π_{r∈S} (t + r)^(-1) を GF(q^s) で計算する（0 ≤ k ≤ q）
    """
    if not 0 <= k <= q:
        raise RingSumsError(f"k は 0 以上 q 以下が必要です: k={k}, q={q}")
    big = _outside_subfield(q, t)
    embed = field_embedding(q, _extension_degree(q, big))
    small = realize_ring(GF(q))
    sigma = [big.one] + [big.zero] * k
    for r in small.elements():
        inverse = big.inverse(big.add(t.value, embed(r)))
        for j in range(k, 0, -1):
            sigma[j] = big.add(sigma[j], big.mul(sigma[j - 1], inverse))
    return RingElement(big, sigma[k])
