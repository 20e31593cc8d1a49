"""Maximally commutative sets (MCSs) of generalized Pauli coordinates.

Every MCS in dimension d has exactly d elements and equals one of

    C[0,0] = {(0, y)}
    C[i,j] = {(x, y) : i*y - j*x == 0 mod d, x in i*Z_d},   i | d, i < d, 0 <= j < d/i

so there are sigma(d) of them. ``build_mcs`` lists the members of C[i,j]
explicitly as ``(i*k, k*j + (d/g)*l)`` with ``g = gcd(i, d)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterable

from .errors import AmbiguousMembershipError, InvalidMcsIndexError
from .gpm import commutes
from .zmod import RingContext, gcd_bezout, make_ring


@dataclass(frozen=True)
class Mcs:
    """One MCS. ``elements`` are sorted plain ``(m, n)`` tuples."""

    ring: RingContext
    index: tuple[int, int]
    elements: tuple[tuple[int, int], ...]
    members: frozenset = field(compare=False, repr=False, default=frozenset())

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.elements))

    def __contains__(self, c):
        return tuple(c) in self.members

    def __len__(self):
        return len(self.elements)

    @property
    def label(self) -> str:
        return f"C[{self.index[0]},{self.index[1]}]"

    def to_json(self) -> dict:
        return {
            "d": self.ring.d,
            "index": list(self.index),
            "elements": [list(c) for c in self.elements],
        }


def _members(i: int, j: int, d: int) -> tuple[tuple[int, int], ...]:
    if i == 0:
        return tuple(zip([0] * d, range(d)))
    g = gcd(i, d)
    step = d // g
    if g == i:
        # x = i*k increases with k and each column's y values form an arithmetic
        # progression starting below step, so this comes out sorted
        xs, ys = [], []
        for k in range(step):
            xs.extend([i * k] * i)
            ys.extend(range((k * j) % step, d, step))
        return tuple(zip(xs, ys))
    pts = {
        (i * k % d, (k * j + step * l) % d)
        for k in range(d // g)
        for l in range(g)
    }
    return tuple(sorted(pts))


def build_mcs(i: int, j: int, ring: RingContext) -> Mcs:
    """Build C[i,j].

    ``i`` need not divide d; in that case the returned ``Mcs`` carries the
    canonical index of the same set (see ``containing_mcs``).
    """
    d = ring.d
    if (i, j) == (0, 0):
        return Mcs(ring, (0, 0), _members(0, 0, d))
    if not (0 < i < d) or not (0 <= j < d // gcd(i, d)):
        raise InvalidMcsIndexError(f"({i}, {j}) is not a valid MCS index for d={d}")
    elements = _members(i, j, d)
    index = (i, j) if d % i == 0 else containing_mcs((i, j), ring)
    return Mcs(ring, index, elements)


@lru_cache(maxsize=256)
def _enumerate(d: int) -> tuple[Mcs, ...]:
    ring = make_ring(d)
    out = [build_mcs(0, 0, ring)]
    for i in ring.divisors[:-1]:
        out.extend(build_mcs(i, j, ring) for j in range(d // i))
    return tuple(out)


def enumerate_mcs(ring: RingContext) -> tuple[Mcs, ...]:
    """All sigma(d) MCSs: C[0,0] first, then divisors i ascending, j ascending."""
    return _enumerate(ring.d)


def containing_mcs(c, ring: RingContext) -> tuple[int, int]:
    """Canonical index of the MCS generated by a non-identity coordinate.

    Coordinates on the Z-line map to C[0,0]. Otherwise the index is
    ``(g, q*n mod d/g)`` where ``g = gcd(m, d) = q*m + r*d``.
    """
    m, n = c[0] % ring.d, c[1] % ring.d
    if (m, n) == (0, 0):
        raise AmbiguousMembershipError("(0,0) belongs to every MCS")
    if m == 0:
        return (0, 0)
    g, q, _ = gcd_bezout(m, ring.d)
    return (g, q * n % (ring.d // g))


def verify_maximal_commutative(candidate: Iterable, ring: RingContext) -> bool:
    """Brute-force check that ``candidate`` is commutative and cannot be enlarged."""
    d = ring.d
    cand = {(a % d, b % d) for a, b in candidate}
    for a, b in combinations(cand, 2):
        if not commutes(a, b, ring):
            return False
    for x in range(d):
        for y in range(d):
            if (x, y) in cand:
                continue
            if all(commutes((x, y), c, ring) for c in cand):
                return False
    return True
