"""
環仕様（RingSpec）の構文木とパーサー

文法（空白は無視）:
    spec := "Zmod(" int ")" | "GF(" int ")" | "GR(" int "," int "," int ")"
          | "Mat(" int "," spec ")" | "UT(" int "," spec ")"
          | "Nil(" spec "," int ")" | "Prod(" spec { "," spec } ")"
"""

import math
import re
from dataclasses import dataclass
from functools import reduce

from sympy import factorint, isprime

from ..core.exceptions import RingSpecError


def prime_power(q: int) -> tuple[int, int] | None:
    """q = p^e なら (p, e)、そうでなければ None"""
    if q < 2:
        return None
    factors = factorint(q)
    if len(factors) != 1:
        return None
    ((p, e),) = factors.items()
    return int(p), int(e)


@dataclass(frozen=True)
class RingSpec:
    """環仕様ノードの基底クラス"""

    @property
    def order(self) -> int:
        raise NotImplementedError

    @property
    def characteristic(self) -> int:
        raise NotImplementedError

    @property
    def is_commutative(self) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class Zmod(RingSpec):
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise RingSpecError(f"Zmod の法は 2 以上が必要です: {self.n}")

    @property
    def order(self) -> int:
        return self.n

    @property
    def characteristic(self) -> int:
        return self.n

    @property
    def is_commutative(self) -> bool:
        return True

    def __str__(self) -> str:
        return f"Zmod({self.n})"


@dataclass(frozen=True)
class GF(RingSpec):
    q: int

    def __post_init__(self) -> None:
        if prime_power(self.q) is None:
            raise RingSpecError(f"{self.q} は素数冪ではありません")

    @property
    def p(self) -> int:
        return prime_power(self.q)[0]

    @property
    def e(self) -> int:
        return prime_power(self.q)[1]

    @property
    def order(self) -> int:
        return self.q

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_commutative(self) -> bool:
        return True

    def __str__(self) -> str:
        return f"GF({self.q})"


@dataclass(frozen=True)
class GR(RingSpec):
    """Galois 環 GR(p, m, e) = (Z/p^m)[y]/(f̂)"""

    p: int
    m: int
    e: int

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise RingSpecError(f"GR の p は素数が必要です: {self.p}")
        if self.m < 1 or self.e < 1:
            raise RingSpecError(f"GR の m, e は 1 以上が必要です: m={self.m}, e={self.e}")

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def order(self) -> int:
        return self.p ** (self.m * self.e)

    @property
    def characteristic(self) -> int:
        return self.p**self.m

    @property
    def is_commutative(self) -> bool:
        return True

    def __str__(self) -> str:
        return f"GR({self.p},{self.m},{self.e})"


@dataclass(frozen=True)
class Mat(RingSpec):
    d: int
    inner: RingSpec

    def __post_init__(self) -> None:
        if self.d < 1:
            raise RingSpecError(f"Mat の次数は 1 以上が必要です: {self.d}")

    @property
    def order(self) -> int:
        return self.inner.order ** (self.d * self.d)

    @property
    def characteristic(self) -> int:
        return self.inner.characteristic

    @property
    def is_commutative(self) -> bool:
        return self.d == 1 and self.inner.is_commutative

    def __str__(self) -> str:
        return f"Mat({self.d},{self.inner})"


@dataclass(frozen=True)
class UT(RingSpec):
    """上三角行列環"""

    d: int
    inner: RingSpec

    def __post_init__(self) -> None:
        if self.d < 1:
            raise RingSpecError(f"UT の次数は 1 以上が必要です: {self.d}")

    @property
    def order(self) -> int:
        return self.inner.order ** (self.d * (self.d + 1) // 2)

    @property
    def characteristic(self) -> int:
        return self.inner.characteristic

    @property
    def is_commutative(self) -> bool:
        return self.d == 1 and self.inner.is_commutative

    def __str__(self) -> str:
        return f"UT({self.d},{self.inner})"


@dataclass(frozen=True)
class Nil(RingSpec):
    """inner[x]/(x^k)"""

    inner: RingSpec
    k: int

    def __post_init__(self) -> None:
        if self.k < 2:
            raise RingSpecError(f"Nil の冪零指数は 2 以上が必要です: {self.k}")

    @property
    def order(self) -> int:
        return self.inner.order**self.k

    @property
    def characteristic(self) -> int:
        return self.inner.characteristic

    @property
    def is_commutative(self) -> bool:
        return self.inner.is_commutative

    def __str__(self) -> str:
        return f"Nil({self.inner},{self.k})"


@dataclass(frozen=True)
class Prod(RingSpec):
    factors: tuple[RingSpec, ...]

    def __post_init__(self) -> None:
        if len(self.factors) < 2:
            raise RingSpecError(f"Prod は 2 個以上の因子が必要です: {len(self.factors)}")

    @property
    def order(self) -> int:
        return math.prod(f.order for f in self.factors)

    @property
    def characteristic(self) -> int:
        return reduce(math.lcm, (f.characteristic for f in self.factors))

    @property
    def is_commutative(self) -> bool:
        return all(f.is_commutative for f in self.factors)

    def __str__(self) -> str:
        return "Prod(" + ",".join(str(f) for f in self.factors) + ")"


# =============================================================================
# パーサー
# =============================================================================

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z]+)|(?P<punct>[(),]))")
_KEYWORDS = ("Zmod", "GF", "GR", "Mat", "UT", "Nil", "Prod")


class _Parser:
    """再帰下降パーサー"""

    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            match = _TOKEN.match(text, pos)
            if match is None:
                offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise RingSpecError(f"不正な文字 {text[offset]!r}", offset)
            kind = match.lastgroup or ""
            value = match.group(kind)
            self.tokens.append((kind, value, match.start(kind)))
            pos = match.end()
        self.index = 0

    def _peek(self) -> tuple[str, str, int]:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return ("end", "", len(self.text))

    def _expect(self, kind: str, value: str | None = None) -> str:
        token_kind, token_value, position = self._peek()
        if token_kind != kind or (value is not None and token_value != value):
            wanted = value if value is not None else kind
            found = token_value or "入力の終わり"
            raise RingSpecError(f"{wanted!r} が必要ですが {found!r} があります", position)
        self.index += 1
        return token_value

    def _int(self) -> int:
        return int(self._expect("int"))

    def parse(self) -> RingSpec:
        spec = self._spec()
        kind, value, position = self._peek()
        if kind != "end":
            raise RingSpecError(f"余分な入力 {value!r}", position)
        return spec

    def _spec(self) -> RingSpec:
        _, name, position = self._peek()
        head = self._expect("name")
        if head not in _KEYWORDS:
            raise RingSpecError(f"未知の構成子 {head!r}", position)
        self._expect("punct", "(")
        try:
            match head:
                case "Zmod":
                    spec: RingSpec = Zmod(self._int())
                case "GF":
                    spec = GF(self._int())
                case "GR":
                    p = self._int()
                    self._expect("punct", ",")
                    m = self._int()
                    self._expect("punct", ",")
                    spec = GR(p, m, self._int())
                case "Mat" | "UT":
                    d = self._int()
                    self._expect("punct", ",")
                    inner = self._spec()
                    spec = Mat(d, inner) if head == "Mat" else UT(d, inner)
                case "Nil":
                    inner = self._spec()
                    self._expect("punct", ",")
                    spec = Nil(inner, self._int())
                case _:
                    factors = [self._spec()]
                    while self._peek()[1] == ",":
                        self._expect("punct", ",")
                        factors.append(self._spec())
                    spec = Prod(tuple(factors))
        except RingSpecError as e:
            if e.position is None:
                raise RingSpecError(e.message, position) from e
            raise
        self._expect("punct", ")")
        return spec


def parse_ring_spec(text: str) -> RingSpec:
    """
    環仕様文字列を構文木に変換する

    Raises:
        RingSpecError: 構文エラー（位置付き）または制約違反
    """
    return _Parser(text).parse()
