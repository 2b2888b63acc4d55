"""U = (T^q - T)^(-1) の多項式（負冪の和の記号的表現）"""

from dataclasses import dataclass, field
from typing import Mapping

from ..core.exceptions import RingSumsError
from ..rings.base import RingElement
from ..rings.galois import GaloisRing


@dataclass(frozen=True)
class LaurentInU:
    """
    Σ c_a U^a（a ≥ 1, c_a ∈ F_p）

    coeffs は 0 でない係数のみを持つ。
    """

    p: int
    q: int
    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        canonical: dict[int, int] = {}
        for a, c in self.coeffs.items():
            if a < 1:
                raise RingSumsError(f"U の指数は 1 以上が必要です: {a}")
            c %= self.p
            if c:
                canonical[a] = c
        object.__setattr__(self, "coeffs", dict(sorted(canonical.items())))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentInU):
            return NotImplemented
        return (self.p, self.q, self.coeffs) == (other.p, other.q, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.p, self.q, tuple(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, t: RingElement) -> RingElement:
        """
        T = t を代入する（t は GF(q^s) の元で GF(q) の外にあること）

        Raises:
            RingSumsError: t^q - t = 0
        """
        field_ring = t.ring
        if not isinstance(field_ring, GaloisRing) or not field_ring.is_field:
            raise RingSumsError(f"{field_ring.spec} は有限体ではありません")
        base = field_ring.sub(field_ring.pow(t.value, self.q), t.value)
        if base == field_ring.zero:
            raise RingSumsError(f"{t} は GF({self.q}) に属するので U が定義されません")
        u = field_ring.inverse(base)
        total = field_ring.zero
        for a, c in self.coeffs.items():
            total = field_ring.add(total, field_ring.mul_int(field_ring.pow(u, a), c))
        return RingElement(field_ring, total)

    def render(self) -> list[list[int]]:
        return [[c, a] for a, c in self.coeffs.items()]

    def format(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for a, c in self.coeffs.items():
            power = "U" if a == 1 else f"U^{a}"
            terms.append(power if c == 1 else f"{c}{power}")
        return " + ".join(terms)

    def __str__(self) -> str:
        return self.format()
