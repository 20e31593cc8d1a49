"""Sufficient criteria for one-way local distinguishability of GBS sets.

Three families are implemented:

* the MCS rule: some MCS C with ``diff & C == {}`` or ``diff <= C``;
* the three discriminant-set conditions (non-empty discriminant set,
  commutative difference set, composite d with invertible coordinates);
* Fan's F-type criterion, optionally after an H_alpha coordinate transform.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Union

from .errors import EmptyDifferenceError
from .gpm import (
    DiffSet,
    GbsSet,
    GpmCoord,
    commutes,
    congruence_solutions,
    difference_set,
    h_alpha_map,
    is_f_type,
)
from .mcs import Mcs, build_mcs, enumerate_mcs
from .zmod import RingContext, is_unit

DISJOINT = "disjoint"
CONTAINED = "contained"
NO_TRANSFORM = "no-transform"


@dataclass(frozen=True)
class Theorem31Result:
    cond1: Optional[GpmCoord]
    cond2: bool
    cond3: bool

    @property
    def fired(self) -> bool:
        return self.cond1 is not None or self.cond2 or self.cond3


@dataclass(frozen=True)
class DetectionReport:
    input: GbsSet
    diff: DiffSet
    theorem2_hit: Optional[tuple[tuple[int, int], str]]
    t31_condition1: Optional[GpmCoord]
    t31_condition2: bool
    t31_condition3: bool
    fan_hit: Optional[Union[int, str]]
    detected: bool
    theorem2_all: tuple = ()
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        hit = self.theorem2_hit
        return {
            "d": self.input.ring.d,
            "set": [list(c) for c in self.input],
            "diff": [list(c) for c in self.diff],
            "detected": self.detected,
            "theorem2": None if hit is None else {"index": list(hit[0]), "branch": hit[1]},
            "theorem2_all": [{"index": list(ix), "branch": br} for ix, br in self.theorem2_all],
            "theorem31": {
                "condition1": None if self.t31_condition1 is None else list(self.t31_condition1),
                "condition2": self.t31_condition2,
                "condition3": self.t31_condition3,
            },
            "fan": self.fan_hit,
            "notes": list(self.notes),
        }


def detector_set(s: int, t: int, ring: RingContext) -> frozenset:
    """Coordinates that do not commute with X^s Z^t."""
    d = ring.d
    inside = congruence_solutions(s, t, ring)
    return frozenset(
        GpmCoord(x, y) for x in range(d) for y in range(d) if (x, y) not in inside
    )


def discriminant_set(diff: DiffSet) -> frozenset:
    """Coordinates commuting with no element of ``diff``."""
    if len(diff) == 0:
        raise EmptyDifferenceError("discriminant set of an empty difference set")
    ring = diff.ring
    d = ring.d
    return frozenset(
        GpmCoord(x, y)
        for x in range(d)
        for y in range(d)
        if not any(commutes((x, y), c, ring) for c in diff)
    )


def _diff(s: GbsSet) -> DiffSet:
    if len(s) < 2:
        raise EmptyDifferenceError("criteria need at least two states")
    return difference_set(s)


def _theorem31(diff: DiffSet) -> Theorem31Result:
    ring = diff.ring
    disc = discriminant_set(diff)
    cond1 = min(disc) if disc else None
    cond2 = all(commutes(a, b, ring) for a, b in combinations(diff, 2))
    cond3 = (not ring.is_prime) and all(
        is_unit(m, ring) or is_unit(n, ring) for m, n in diff
    )
    return Theorem31Result(cond1, cond2, cond3)


def check_theorem31(s: GbsSet) -> Theorem31Result:
    """Evaluate the three conditions; condition 1 carries the smallest witness."""
    return _theorem31(_diff(s))


def _mcs_branch(diff: DiffSet, c: Mcs) -> Optional[str]:
    inside = sum(1 for x in diff if x in c)
    if inside == 0:
        return DISJOINT
    if inside == len(diff):
        return CONTAINED
    return None


def _theorem2_all(diff: DiffSet) -> tuple:
    hits = []
    for c in enumerate_mcs(diff.ring):
        branch = _mcs_branch(diff, c)
        if branch is not None:
            hits.append((c.index, branch))
    return tuple(hits)


def check_theorem2_all(s: GbsSet) -> tuple:
    """Every firing MCS as ``(index, branch)``, in enumeration order."""
    return _theorem2_all(_diff(s))


def check_theorem2(s: GbsSet) -> Optional[tuple[tuple[int, int], str]]:
    """First firing MCS in enumeration order, or ``None``."""
    diff = _diff(s)
    for c in enumerate_mcs(s.ring):
        branch = _mcs_branch(diff, c)
        if branch is not None:
            return c.index, branch
    return None


def check_fan(s: GbsSet) -> Optional[Union[int, str]]:
    if is_f_type(s):
        return NO_TRANSFORM
    ring = s.ring
    for alpha in range(ring.d):
        if is_f_type(h_alpha_map(alpha, c, ring) for c in s):
            return alpha
    return None


def composite_detector(ring: RingContext) -> Optional[Mcs]:
    """For composite d = p*q (p the least prime factor), the MCS through (p,0) and (0,q).

    Any coordinate with an invertible entry fails to commute with X^p or
    with Z^q and therefore lies outside this set.
    """
    if ring.is_prime:
        return None
    return build_mcs(ring.smallest_prime_factor, 0, ring)


def full_report(s: GbsSet) -> DetectionReport:
    diff = _diff(s)
    t31 = _theorem31(diff)
    hits = _theorem2_all(diff)
    first = hits[0] if hits else None
    fan = check_fan(s)
    notes = []
    if len(s) < 4:
        notes.append(
            "fewer than 4 states: the discriminant-set conditions are stated for l >= 4;"
            " reported for information"
        )
    if len(s) > s.ring.d:
        notes.append("more states than the local dimension: no LOCC protocol can succeed")
    detected = first is not None or t31.fired or fan is not None
    return DetectionReport(
        input=s,
        diff=diff,
        theorem2_hit=first,
        t31_condition1=t31.cond1,
        t31_condition2=t31.cond2,
        t31_condition3=t31.cond3,
        fan_hit=fan,
        detected=detected,
        theorem2_all=hits,
        notes=tuple(notes),
    )
