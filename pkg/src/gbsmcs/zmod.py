"""Arithmetic over Z_d: divisors, sigma, Bezout coefficients, units."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .errors import InvalidDimensionError, UndefinedGcdError


@dataclass(frozen=True)
class RingContext:
    d: int
    divisors: tuple[int, ...]
    sigma: int

    def reduce(self, a: int) -> int:
        return a % self.d

    @property
    def is_prime(self) -> bool:
        return len(self.divisors) == 2

    @property
    def units(self) -> tuple[int, ...]:
        return tuple(a for a in range(self.d) if gcd(a, self.d) == 1)

    @property
    def smallest_prime_factor(self) -> int:
        # the smallest divisor above 1 is necessarily prime
        return self.divisors[1]


def _divisors(d: int) -> tuple[int, ...]:
    small, large = [], []
    for k in range(1, isqrt(d) + 1):
        if d % k == 0:
            small.append(k)
            if k != d // k:
                large.append(d // k)
    return tuple(small + large[::-1])


@lru_cache(maxsize=None)
def make_ring(d: int) -> RingContext:
    """Build the (immutable, cached) context for Z_d. Requires d >= 2."""
    if isinstance(d, bool) or not isinstance(d, int) or d < 2:
        raise InvalidDimensionError(f"dimension must be an integer >= 2, got {d!r}")
    divs = _divisors(d)
    return RingContext(d=d, divisors=divs, sigma=sum(divs))


def gcd_bezout(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, q, r)`` with ``g = gcd(a, b) > 0`` and ``g == q*a + r*b``."""
    if a == 0 and b == 0:
        raise UndefinedGcdError("gcd(0, 0) is undefined")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
        old_t, t = t, old_t - quot * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def is_unit(a: int, ring: RingContext) -> bool:
    return gcd(a % ring.d, ring.d) == 1
