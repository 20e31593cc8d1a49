"""Coordinate-level algebra of generalized Pauli matrices X^m Z^n.

A coordinate ``(m, n)`` stands both for the matrix X^m Z^n and for the
generalized Bell state it defines. Phases are never tracked here; the
``oracle`` module rebuilds them from explicit matrices when needed.
"""

from __future__ import annotations

import json
from typing import Iterable, NamedTuple

from .errors import EmptyDifferenceError, InvalidCoordinateError, SetParseError
from .zmod import RingContext


class GpmCoord(NamedTuple):
    m: int
    n: int


def _check(c, ring: RingContext) -> GpmCoord:
    m, n = c
    if not (0 <= m < ring.d and 0 <= n < ring.d):
        raise InvalidCoordinateError(f"coordinate {(m, n)} is outside Z_{ring.d} x Z_{ring.d}")
    return GpmCoord(m, n)


class GbsSet:
    """Ordered collection of distinct coordinates; equality ignores order."""

    __slots__ = ("ring", "elements", "_frozen")

    def __init__(self, ring: RingContext, elements: Iterable):
        elems = tuple(_check(c, ring) for c in elements)
        if not elems:
            raise SetParseError("a GBS set needs at least one element")
        frozen = frozenset(elems)
        if len(frozen) != len(elems):
            seen = set()
            dup = next(c for c in elems if c in seen or seen.add(c))
            raise SetParseError(f"duplicate coordinate {tuple(dup)}")
        self.ring = ring
        self.elements = elems
        self._frozen = frozen

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, c):
        return tuple(c) in self._frozen

    def __eq__(self, other):
        if not isinstance(other, GbsSet):
            return NotImplemented
        return self.ring.d == other.ring.d and self._frozen == other._frozen

    def __hash__(self):
        return hash((self.ring.d, self._frozen))

    def __repr__(self):
        return f"GbsSet(d={self.ring.d}, {format_set(self)!r})"


class DiffSet:
    """Difference set of a GBS set: ``(m_j - m_i, n_j - n_i)`` for i < j, phases dropped.

    Elements keep first-occurrence order. A coordinate and its negation are
    interchangeable for every commutativity query, so only the i < j
    representatives are stored.
    """

    __slots__ = ("ring", "elements", "_frozen")

    def __init__(self, ring: RingContext, elements: Iterable):
        self.ring = ring
        self.elements = tuple(dict.fromkeys(GpmCoord(*c) for c in elements))
        self._frozen = frozenset(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, c):
        return tuple(c) in self._frozen

    def as_set(self) -> frozenset:
        return self._frozen

    def __repr__(self):
        return f"DiffSet(d={self.ring.d}, {list(map(tuple, self.elements))})"


def commutator_exponent(a, b, ring: RingContext) -> int:
    """Exponent e with U_a U_b = w^e U_b U_a, i.e. ``b.m*a.n - a.m*b.n mod d``."""
    return (b[0] * a[1] - a[0] * b[1]) % ring.d


def commutes(a, b, ring: RingContext) -> bool:
    return commutator_exponent(a, b, ring) == 0


def congruence_solutions(m: int, n: int, ring: RingContext) -> frozenset:
    """All ``(x, y)`` with ``n*x - m*y == 0 mod d``."""
    d = ring.d
    return frozenset(
        GpmCoord(x, y) for x in range(d) for y in range(d) if (n * x - m * y) % d == 0
    )


def difference_set(s: GbsSet) -> DiffSet:
    if len(s) < 2:
        raise EmptyDifferenceError("difference set needs at least two elements")
    d = s.ring.d
    el = s.elements
    pairs = (
        ((el[j].m - el[i].m) % d, (el[j].n - el[i].n) % d)
        for i in range(len(el))
        for j in range(i + 1, len(el))
    )
    return DiffSet(s.ring, pairs)


def h_alpha_map(alpha: int, c, ring: RingContext) -> GpmCoord:
    """Coordinate action of Fan's local unitary: ``(m, n) -> (alpha*m + n, -m)``."""
    m, n = c
    return GpmCoord((alpha * m + n) % ring.d, (-m) % ring.d)


def is_f_type(s: Iterable) -> bool:
    ms = [c[0] for c in s]
    return len(set(ms)) == len(ms)


def parse_set(text: str, ring: RingContext) -> GbsSet:
    """Parse ``"m,n;m,n;..."`` or a JSON array of ``[m, n]`` pairs."""
    text = text.strip()
    if not text:
        raise SetParseError("empty set string")
    if text.startswith("["):
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SetParseError(f"invalid JSON set: {exc.msg}") from None
        if not isinstance(raw, list):
            raise SetParseError("JSON set must be an array of [m, n] pairs")
        pairs = []
        for item in raw:
            if (
                not isinstance(item, list)
                or len(item) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in item)
            ):
                raise SetParseError(f"malformed pair {item!r}")
            pairs.append((item[0], item[1]))
    else:
        pairs = []
        for chunk in text.split(";"):
            if not chunk.strip():
                continue
            parts = [p.strip() for p in chunk.split(",")]
            if len(parts) != 2:
                raise SetParseError(f"malformed pair {chunk.strip()!r}")
            try:
                pairs.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise SetParseError(f"malformed pair {chunk.strip()!r}") from None
    return GbsSet(ring, pairs)


def format_set(s: Iterable) -> str:
    return ";".join(f"{m},{n}" for m, n in s)
