"""
ringsums: 有限環上の冪和多項式

P_k(T) = Σ_{r∈R} (T + r)^k を総当たりと閉じた式の両方で求め、
平行移動不変多項式の生成元を検証する。
"""

from .core.config import Settings, get_settings
from .core.exceptions import RingSumsError
from .poly.polynomial import Poly
from .rings.base import FiniteRing, RingElement
from .rings.factory import build_ring
from .rings.spec import parse_ring_spec
from .services.closedform import power_sum_closed, zeta_closed
from .services.oracle import power_sum_bruteforce, zeta_bruteforce

__version__ = "0.1.0"

__all__ = [
    "FiniteRing",
    "Poly",
    "RingElement",
    "RingSumsError",
    "Settings",
    "build_ring",
    "get_settings",
    "parse_ring_spec",
    "power_sum_bruteforce",
    "power_sum_closed",
    "zeta_bruteforce",
    "zeta_closed",
]
