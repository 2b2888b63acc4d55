"""二項係数の剰余"""

import math
from functools import lru_cache

from sympy import isprime


@lru_cache(maxsize=None)
def _is_prime(n: int) -> bool:
    return bool(isprime(n))


def binomial_lucas(k: int, j: int, p: int) -> int:
    """Lucas の定理: p 進各桁の二項係数の積 mod p"""
    result = 1
    while k or j:
        k, kd = divmod(k, p)
        j, jd = divmod(j, p)
        if jd > kd:
            return 0
        result = result * math.comb(kd, jd) % p
    return result


def binomial_mod_char(k: int, j: int, n: int) -> int:
    """
    C(k, j) mod n

    n が素数なら Lucas の定理、それ以外は多倍長の二項係数を n で割った余り。
    j < 0 または j > k なら 0。
    """
    if j < 0 or j > k:
        return 0
    if _is_prime(n):
        return binomial_lucas(k, j, n)
    return math.comb(k, j) % n
