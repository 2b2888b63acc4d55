"""
有限単位環の基底インターフェース

役割:
- 元は「正準値」（int / tuple）として扱い、演算は環オブジェクトが担う
- 座標（加法群 ⊕ Z/n_i の成分）を通じて元と添字 0..|R|-1 を全単射で対応させる
- 添字順の列挙・部分範囲の列挙を提供する
"""

import itertools
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Iterator, Optional

from ..core.exceptions import RingMismatchError, RingSumsError, UnsupportedRingError
from .spec import RingSpec

# 環の正準値（剰余 int・係数 tuple・行列 tuple など）
Value = Any


class FiniteRing(ABC):
    """
    実現された有限単位環

    座標 coordinates(a) は加法群の同型 R ≅ ⊕ Z/n_i を与え、
    座標 0 を最下位桁とする混合基数で添字を定める。
    """

    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.order: int = spec.order
        self.characteristic: int = spec.characteristic
        self.is_commutative: bool = spec.is_commutative

    # ====== 環の構造 ======

    @property
    @abstractmethod
    def zero(self) -> Value: ...

    @property
    @abstractmethod
    def one(self) -> Value: ...

    @abstractmethod
    def add(self, a: Value, b: Value) -> Value: ...

    @abstractmethod
    def neg(self, a: Value) -> Value: ...

    @abstractmethod
    def mul(self, a: Value, b: Value) -> Value: ...

    @property
    @abstractmethod
    def coordinate_moduli(self) -> tuple[int, ...]: ...

    @abstractmethod
    def coordinates(self, a: Value) -> tuple[int, ...]: ...

    @abstractmethod
    def from_coordinates(self, coords: tuple[int, ...]) -> Value: ...

    @abstractmethod
    def render(self, a: Value) -> Any:
        """JSON 用の表現（int または入れ子のリスト）"""

    @abstractmethod
    def format(self, a: Value) -> str:
        """表示用の文字列"""

    # ====== 共通の演算 ======

    def sub(self, a: Value, b: Value) -> Value:
        return self.add(a, self.neg(b))

    def pow(self, a: Value, exponent: int) -> Value:
        """
        繰り返し二乗法による冪。a^0 = 1（a = 0 でも）
        """
        if exponent < 0:
            raise RingSumsError(f"負の指数は使えません: {exponent}")
        result = self.one
        base = a
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            exponent >>= 1
            if exponent:
                base = self.mul(base, base)
        return result

    def mul_int(self, a: Value, n: int) -> Value:
        """整数倍 n·a（座標ごとに計算）"""
        return self.from_coordinates(
            tuple((c * n) % m for c, m in zip(self.coordinates(a), self.coordinate_moduli))
        )

    def from_int(self, n: int) -> Value:
        """整数 n の像 n·1_R"""
        return self.mul_int(self.one, n)

    def is_zero(self, a: Value) -> bool:
        return a == self.zero

    # ====== 符号化と列挙 ======

    def index_of(self, a: Value) -> int:
        index = 0
        for c, m in zip(reversed(self.coordinates(a)), reversed(self.coordinate_moduli)):
            index = index * m + c
        return index

    def element_at(self, index: int) -> Value:
        if not 0 <= index < self.order:
            raise RingSumsError(f"添字 {index} は範囲外です (位数 {self.order})")
        digits = []
        for m in self.coordinate_moduli:
            index, c = divmod(index, m)
            digits.append(c)
        return self.from_coordinates(tuple(digits))

    def elements(self, start: int = 0, stop: Optional[int] = None) -> Iterator[Value]:
        """添字 start..stop-1 の元を添字順に返す"""
        stop = self.order if stop is None else min(stop, self.order)
        moduli = self.coordinate_moduli
        digits = itertools.product(*(range(m) for m in reversed(moduli)))
        for coords in itertools.islice(digits, start, stop):
            yield self.from_coordinates(tuple(reversed(coords)))

    def additive_generators(self) -> list[Value]:
        """加法群の標準生成系（座標の単位ベクトル）"""
        size = len(self.coordinate_moduli)
        return [
            self.from_coordinates(tuple(1 if i == j else 0 for j in range(size)))
            for i in range(size)
        ]

    def contains(self, a: Value) -> bool:
        try:
            coords = self.coordinates(a)
        except (TypeError, ValueError, IndexError):
            return False
        if len(coords) != len(self.coordinate_moduli):
            return False
        if any(not 0 <= c < m for c, m in zip(coords, self.coordinate_moduli)):
            return False
        return self.from_coordinates(coords) == a

    def additive_order(self, a: Value) -> int:
        """元の加法位数"""
        order = 1
        for c, m in zip(self.coordinates(a), self.coordinate_moduli):
            order = math.lcm(order, m // math.gcd(c, m))
        return order

    # ====== ラッパー ======

    def element(self, value: Value) -> "RingElement":
        if not self.contains(value):
            raise RingSumsError(f"{value!r} は {self.spec} の正準な元ではありません")
        return RingElement(self, value)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteRing) and self.spec == other.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.spec})"

    def __str__(self) -> str:
        return str(self.spec)


@dataclass(frozen=True)
class RingElement:
    """環とその正準値の組。演算子で環演算を行う"""

    ring: FiniteRing
    value: Value

    def _check(self, other: "RingElement") -> None:
        if not isinstance(other, RingElement) or other.ring != self.ring:
            raise RingMismatchError(self.ring, getattr(other, "ring", other))

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.ring, self.ring.add(self.value, other.value))

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.ring, self.ring.sub(self.value, other.value))

    def __mul__(self, other: "RingElement") -> "RingElement":
        if not isinstance(other, RingElement):
            return NotImplemented
        self._check(other)
        return RingElement(self.ring, self.ring.mul(self.value, other.value))

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, self.ring.neg(self.value))

    def __pow__(self, exponent: int) -> "RingElement":
        return RingElement(self.ring, self.ring.pow(self.value, exponent))

    def is_zero(self) -> bool:
        return self.ring.is_zero(self.value)

    def render(self) -> Any:
        return self.ring.render(self.value)

    def __str__(self) -> str:
        return self.ring.format(self.value)


def ring_arith(
    ring: FiniteRing,
    op: str,
    *operands: RingElement,
    exponent: Optional[int] = None,
) -> RingElement:
    """
    add / neg / mul / pow を名前で呼び出す

    Raises:
        RingMismatchError: 他の環の元が混ざっている
    """
    for operand in operands:
        if not isinstance(operand, RingElement) or operand.ring != ring:
            raise RingMismatchError(ring, getattr(operand, "ring", operand))
    match op:
        case "add":
            a, b = operands
            return a + b
        case "neg":
            (a,) = operands
            return -a
        case "mul":
            a, b = operands
            return a * b
        case "pow":
            (a,) = operands
            if exponent is None:
                raise RingSumsError("pow には exponent が必要です")
            return a**exponent
        case _:
            raise UnsupportedRingError(f"演算 {op!r}", ring.spec)
