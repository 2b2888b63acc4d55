"""
環仕様から環を実現するファクトリーと、標数による直積分解
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Iterator, Optional

from sympy import factorint
from sympy.ntheory.modular import crt

from ..core.config import get_settings
from ..core.exceptions import EnumerationCapError
from ..core.logging_utils import get_logger
from .base import FiniteRing, RingElement, Value
from .galois import GaloisRing
from .integers import IntegersMod
from .matrix import MatrixRing
from .nil import NilRing
from .product import ProductRing
from .spec import GF, GR, UT, Mat, Nil, Prod, RingSpec, Zmod, parse_ring_spec

logger = get_logger(__name__)


@lru_cache(maxsize=256)
def realize_ring(spec: RingSpec) -> FiniteRing:
    """上限を確認せずに環を実現する（構成のみで元は列挙しない）"""
    match spec:
        case Zmod():
            return IntegersMod(spec)
        case GF():
            return GaloisRing(spec, spec.p, 1, spec.e)
        case GR():
            return GaloisRing(spec, spec.p, spec.m, spec.e)
        case Mat():
            return MatrixRing(spec, realize_ring(spec.inner), spec.d)
        case UT():
            return MatrixRing(spec, realize_ring(spec.inner), spec.d, upper=True)
        case Nil():
            return NilRing(spec, realize_ring(spec.inner), spec.k)
        case Prod():
            return ProductRing(spec, [realize_ring(f) for f in spec.factors])
    raise TypeError(f"未知の環仕様: {spec!r}")


def _as_spec(spec: RingSpec | str) -> RingSpec:
    return parse_ring_spec(spec) if isinstance(spec, str) else spec


def check_cap(order: int, cap: Optional[int] = None, what: str = "環の位数") -> None:
    """
    総当たりの規模を確認する

    Raises:
        EnumerationCapError: order が上限を超える
    """
    limit = get_settings().enumeration_cap if cap is None else cap
    if order > limit:
        raise EnumerationCapError(order, limit, what)


def build_ring(spec: RingSpec | str, cap: Optional[int] = None, *, enforce_cap: bool = True) -> FiniteRing:
    """
    環仕様から FiniteRing を作る

    Args:
        spec: 環仕様（文字列なら解析する）
        cap: 位数の上限（None なら設定値）
        enforce_cap: False なら上限を確認しない（閉じた式の経路で使う）

    Raises:
        EnumerationCapError: 位数が上限を超える
    """
    spec = _as_spec(spec)
    if enforce_cap:
        check_cap(spec.order, cap)
    ring = realize_ring(spec)
    logger.debug("環を構成しました", spec=str(spec), order=ring.order, characteristic=ring.characteristic)
    return ring


def enumerate_elements(
    ring: FiniteRing,
    start: int = 0,
    stop: Optional[int] = None,
    cap: Optional[int] = None,
) -> Iterator[RingElement]:
    """添字順に元を列挙する（部分範囲も可）"""
    check_cap(ring.order, cap)
    for value in ring.elements(start, stop):
        yield RingElement(ring, value)


# =============================================================================
# 標数による分解
# =============================================================================


@dataclass(frozen=True)
class Component:
    """分解の一因子。project / embed は正準値の間の加法的な環準同型"""

    spec: RingSpec
    multiplier: int
    project: Callable[[Value], Value]
    embed: Callable[[Value], Value]

    @property
    def ring(self) -> FiniteRing:
        return realize_ring(self.spec)


@dataclass(frozen=True)
class _Part:
    prime: int
    spec: RingSpec
    project: Callable[[Value], Value]
    embed: Callable[[Value], Value]


def _identity(value: Value) -> Value:
    return value


def _zmod_parts(spec: Zmod) -> list[_Part]:
    n = spec.n
    prime_powers = sorted((int(p), int(p) ** int(a)) for p, a in factorint(n).items())
    if len(prime_powers) == 1:
        return [_Part(prime_powers[0][0], spec, _identity, _identity)]
    moduli = [pa for _, pa in prime_powers]
    parts = []
    for p, pa in prime_powers:
        residues = [1 if m == pa else 0 for m in moduli]
        idempotent = int(crt(moduli, residues)[0]) % n
        parts.append(
            _Part(
                p,
                Zmod(pa),
                lambda v, pa=pa: v % pa,
                lambda u, e=idempotent: (u * e) % n,
            )
        )
    return parts


def _entrywise_parts(spec: Mat | UT) -> list[_Part]:
    inner_parts = _split(spec.inner)
    if len(inner_parts) == 1:
        return [_Part(inner_parts[0].prime, spec, _identity, _identity)]
    parts = []
    for part in inner_parts:
        part_spec = Mat(spec.d, part.spec) if isinstance(spec, Mat) else UT(spec.d, part.spec)
        parts.append(
            _Part(
                part.prime,
                part_spec,
                lambda a, f=part.project: tuple(tuple(f(x) for x in row) for row in a),
                lambda a, g=part.embed: tuple(tuple(g(x) for x in row) for row in a),
            )
        )
    return parts


def _slotwise_parts(spec: Nil) -> list[_Part]:
    inner_parts = _split(spec.inner)
    if len(inner_parts) == 1:
        return [_Part(inner_parts[0].prime, spec, _identity, _identity)]
    return [
        _Part(
            part.prime,
            Nil(part.spec, spec.k),
            lambda a, f=part.project: tuple(f(x) for x in a),
            lambda a, g=part.embed: tuple(g(x) for x in a),
        )
        for part in inner_parts
    ]


def _product_parts(spec: Prod) -> list[_Part]:
    factor_zeros = [realize_ring(f).zero for f in spec.factors]
    grouped: dict[int, list[tuple[int, _Part]]] = {}
    for index, factor in enumerate(spec.factors):
        for part in _split(factor):
            grouped.setdefault(part.prime, []).append((index, part))

    def embed_into(members: list[tuple[int, _Part]]) -> Callable[[Value], Value]:
        def embed(u: Value) -> Value:
            values = list(factor_zeros)
            if len(members) == 1:
                index, part = members[0]
                values[index] = part.embed(u)
            else:
                for (index, part), piece in zip(members, u):
                    values[index] = part.embed(piece)
            return tuple(values)

        return embed

    def project_from(members: list[tuple[int, _Part]]) -> Callable[[Value], Value]:
        if len(members) == 1:
            index, part = members[0]
            return lambda a: part.project(a[index])
        return lambda a: tuple(part.project(a[index]) for index, part in members)

    parts = []
    for prime in sorted(grouped):
        members = grouped[prime]
        part_spec = members[0][1].spec if len(members) == 1 else Prod(tuple(p.spec for _, p in members))
        parts.append(_Part(prime, part_spec, project_from(members), embed_into(members)))
    if len(parts) == 1:
        return [_Part(parts[0].prime, spec, _identity, _identity)]
    return parts


def _split(spec: RingSpec) -> list[_Part]:
    match spec:
        case Zmod():
            return _zmod_parts(spec)
        case GF() | GR():
            return [_Part(spec.p, spec, _identity, _identity)]
        case Mat() | UT():
            return _entrywise_parts(spec)
        case Nil():
            return _slotwise_parts(spec)
        case Prod():
            return _product_parts(spec)
    raise TypeError(f"未知の環仕様: {spec!r}")


def decompose_by_characteristic(ring: FiniteRing | RingSpec | str) -> list[Component]:
    """
    標数が互いに素な素数冪の因子に分解する

    Returns:
        (因子の仕様, 乗数 |R|/|R_i|, 射影, 埋め込み) のリスト。
        標数が素数冪ならその環自身と乗数 1 のみ
    """
    spec = ring.spec if isinstance(ring, FiniteRing) else _as_spec(ring)
    return [
        Component(part.spec, spec.order // part.spec.order, part.project, part.embed)
        for part in _split(spec)
    ]


def reassemble(ring: FiniteRing, components: list[Component], pieces: list[Any]) -> Value:
    """各因子の値を埋め込んで和をとる"""
    total = ring.zero
    for component, piece in zip(components, pieces):
        total = ring.add(total, component.embed(piece))
    return total
