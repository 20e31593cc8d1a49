"""Monte Carlo detection-rate experiments.

Samples are uniform n-subsets of Z_d x Z_d. Each (d, n) cell draws from its
own Philox stream keyed by ``(seed, d, n)``, so a cell's samples do not
depend on which other cells run or in what order. Within a cell, draw ``k``
is row ``k`` of a stream of uniform keys (one key per coordinate, the n
smallest keys pick the subset).

Evaluation is vectorized: a batch of difference sets becomes a 0/1 matrix
over the d^2 coordinates and every criterion reduces to a matrix product
against a precomputed commutation or MCS-membership table.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

import numpy as np

from . import __version__
from .errors import InvalidConfigError
from .gpm import GbsSet, GpmCoord
from .mcs import enumerate_mcs
from .zmod import is_unit, make_ring

BLOCK = 2048


@dataclass(frozen=True)
class SampleConfig:
    d: int
    n: int
    trials: int
    seed: int

    def __post_init__(self):
        make_ring(self.d)
        if not 2 <= self.n <= self.d * self.d:
            raise InvalidConfigError(f"need 2 <= n <= d^2, got n={self.n}, d={self.d}")
        if self.trials < 1:
            raise InvalidConfigError(f"trials must be >= 1, got {self.trials}")
        if not 0 <= self.seed < 2**64:
            raise InvalidConfigError("seed must fit in 64 unsigned bits")


def cell_rng(cfg: SampleConfig) -> np.random.Generator:
    ss = np.random.SeedSequence(cfg.seed, spawn_key=(cfg.d, cfg.n))
    return np.random.Generator(np.random.Philox(ss))


def draw_indices(d: int, n: int, rng: np.random.Generator, count: int) -> np.ndarray:
    """``count`` uniform n-subsets as rows of flat coordinate indices ``m*d + n``."""
    keys = rng.random((count, d * d))
    return np.argsort(keys, axis=1, kind="stable")[:, :n]


def sample_gbs_set(cfg: SampleConfig, rng: np.random.Generator) -> GbsSet:
    ring = make_ring(cfg.d)
    row = draw_indices(cfg.d, cfg.n, rng, 1)[0]
    return GbsSet(ring, [(int(i) // cfg.d, int(i) % cfg.d) for i in row])


def iter_blocks(cfg: SampleConfig, block: int = BLOCK) -> Iterator[np.ndarray]:
    rng = cell_rng(cfg)
    left = cfg.trials
    while left > 0:
        k = min(block, left)
        yield draw_indices(cfg.d, cfg.n, rng, k)
        left -= k


def exhaustive_indices(d: int, n: int) -> np.ndarray:
    """Every n-subset of the d^2 coordinates, lexicographic."""
    total = comb(d * d, n)
    return np.fromiter(
        (i for c in combinations(range(d * d), n) for i in c), dtype=np.int64, count=total * n
    ).reshape(total, n)


def sets_to_indices(sets: Iterable, d: int) -> np.ndarray:
    return np.array([[m * d + n for m, n in s] for s in sets], dtype=np.int64)


class Tables:
    """Per-dimension lookup tables over flat coordinates ``m*d + n``."""

    def __init__(self, d: int):
        self.d = d
        self.ring = make_ring(d)
        m, n = np.divmod(np.arange(d * d), d)
        self.m, self.n = m, n
        det = (np.outer(m, n) - np.outer(n, m)) % d  # det[a, b] = m_a n_b - n_a m_b
        self.commute = (det == 0).astype(np.float32)
        self.noncommute = 1.0 - self.commute
        self.mcs = enumerate_mcs(self.ring)
        self.mcs_index = [c.index for c in self.mcs]
        member = np.zeros((len(self.mcs), d * d), dtype=np.float32)
        for r, c in enumerate(self.mcs):
            for x, y in c.elements:
                member[r, x * d + y] = 1.0
        self.member_t = member.T.copy()
        units = np.array([is_unit(a, self.ring) for a in range(d)])
        self.no_unit = (~units[m] & ~units[n]).astype(np.float32)
        self.composite = not self.ring.is_prime

    def diff_masks(self, idx: np.ndarray) -> np.ndarray:
        """0/1 matrix (samples x d^2) marking each sample's difference set."""
        d = self.d
        t, l = idx.shape
        m, n = np.divmod(idx, d)
        iu, ju = np.triu_indices(l, 1)
        flat = ((m[:, ju] - m[:, iu]) % d) * d + (n[:, ju] - n[:, iu]) % d
        out = np.zeros((t, d * d), dtype=np.float32)
        np.put_along_axis(out, flat, 1.0, axis=1)
        return out

    def evaluate(self, idx: np.ndarray, want_disc: bool = False) -> dict:
        v = self.diff_masks(idx)
        size = v.sum(axis=1)
        inter = v @ self.member_t
        disjoint = inter == 0
        contained = inter == size[:, None]
        hits = disjoint | contained
        commuting_with = v @ self.commute
        disc = commuting_with == 0
        cond1 = disc.any(axis=1)
        cond2 = ((v @ self.noncommute) * v).sum(axis=1) == 0
        cond3 = (v @ self.no_unit == 0) if self.composite else np.zeros(len(v), dtype=bool)
        out = {
            "t2": hits.any(axis=1),
            "hits": hits,
            "disjoint": disjoint,
            "cond1": cond1,
            "cond2": cond2,
            "cond3": cond3,
            "t31": cond1 | cond2 | cond3,
        }
        if want_disc:
            out["disc"] = disc
        return out


@lru_cache(maxsize=32)
def tables(d: int) -> Tables:
    return Tables(d)


@dataclass(frozen=True)
class RateRow:
    d: int
    n: int
    trials: int
    seed: int
    count_t31: int
    count_t2: int
    violations: int  # instances where the discriminant-set conditions fired but the MCS rule did not

    @property
    def rate_t31(self) -> float:
        return self.count_t31 / self.trials

    @property
    def rate_t2(self) -> float:
        return self.count_t2 / self.trials


def rate_cell(cfg: SampleConfig) -> RateRow:
    tab = tables(cfg.d)
    c31 = c2 = bad = 0
    for idx in iter_blocks(cfg):
        r = tab.evaluate(idx)
        c31 += int(r["t31"].sum())
        c2 += int(r["t2"].sum())
        bad += int((r["t31"] & ~r["t2"]).sum())
    return RateRow(cfg.d, cfg.n, cfg.trials, cfg.seed, c31, c2, bad)


def rate_comparison(d_range: Iterable[int], n_range: Iterable[int], trials: int, seed: int) -> list[RateRow]:
    """One row per (d, n); cells with n > d^2 are skipped."""
    rows = []
    n_values = list(n_range)
    for d in d_range:
        for n in n_values:
            if n > d * d:
                continue
            rows.append(rate_cell(SampleConfig(d, n, trials, seed)))
    return rows


@dataclass(frozen=True)
class McsRates:
    d: int
    n: int
    trials: int
    seed: int
    index: list  # canonical MCS indices, row order
    detected: np.ndarray  # (sigma,)
    unique: np.ndarray  # (sigma,)
    batch_detected: np.ndarray  # (batches, sigma)
    batch_unique: np.ndarray
    batch_sizes: np.ndarray


def tally_per_mcs(d: int, idx: np.ndarray, batches: int = 1) -> tuple:
    """Per-MCS detection and unique-detection counts over explicit samples.

    Returns ``(detected, unique, batch_detected, batch_unique, batch_sizes)``;
    batches are contiguous, near-equal slices of the sample order.
    """
    tab = tables(d)
    k = len(tab.mcs)
    hits = np.zeros((len(idx), k), dtype=bool)
    for start in range(0, len(idx), BLOCK):
        hits[start : start + BLOCK] = tab.evaluate(idx[start : start + BLOCK])["hits"]
    only = hits & (hits.sum(axis=1) == 1)[:, None]
    bounds = np.linspace(0, len(idx), batches + 1).round().astype(int)
    bd = np.array([hits[a:b].sum(axis=0) for a, b in zip(bounds[:-1], bounds[1:])])
    bu = np.array([only[a:b].sum(axis=0) for a, b in zip(bounds[:-1], bounds[1:])])
    return hits.sum(axis=0), only.sum(axis=0), bd, bu, np.diff(bounds)


def per_mcs_rates(d: int, n: int, trials: int, seed: int, batches: int = 10) -> McsRates:
    cfg = SampleConfig(d, n, trials, seed)
    if not 1 <= batches <= trials:
        raise InvalidConfigError("batches must be between 1 and trials")
    idx = np.concatenate(list(iter_blocks(cfg)))
    det, uni, bd, bu, sizes = tally_per_mcs(d, idx, batches)
    return McsRates(d, n, trials, seed, tables(d).mcs_index, det, uni, bd, bu, sizes)


def tally_single_detectors(d: int, idx: np.ndarray) -> np.ndarray:
    """(d, d) counts of samples whose difference set lies inside De(X^s Z^t)."""
    tab = tables(d)
    grid = np.zeros(d * d, dtype=np.int64)
    for start in range(0, len(idx), BLOCK):
        grid += tab.evaluate(idx[start : start + BLOCK], want_disc=True)["disc"].sum(axis=0)
    return grid.reshape(d, d)


def per_single_detector_rates(d: int, n: int, trials: int, seed: int) -> np.ndarray:
    """(d, d) array of rates; entry [s, t] is the rate of detector X^s Z^t."""
    cfg = SampleConfig(d, n, trials, seed)
    counts = np.zeros((d, d), dtype=np.int64)
    for idx in iter_blocks(cfg):
        counts += tally_single_detectors(d, idx)
    return counts / trials


def _header(command: str, **config) -> str:
    parts = " ".join(f"{k}={v}" for k, v in config.items())
    return f"# gbsmcs {__version__} {command} {parts}\n"


def rate_table_csv(rows: list[RateRow], **config) -> str:
    buf = io.StringIO()
    buf.write(_header("sample-rates", **config))
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["d", "n", "trials", "seed", "rate_t31", "rate_t2", "count_t31", "count_t2"])
    for r in rows:
        w.writerow([r.d, r.n, r.trials, r.seed, repr(r.rate_t31), repr(r.rate_t2), r.count_t31, r.count_t2])
    return buf.getvalue()


def mcs_rates_csv(t: McsRates) -> str:
    buf = io.StringIO()
    buf.write(_header("per-mcs-rates", d=t.d, n=t.n, trials=t.trials, seed=t.seed, batches=len(t.batch_sizes)))
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["d", "n", "trials", "seed", "batch", "i", "j", "detected", "unique", "rate", "unique_rate"])
    blocks = [("all", t.trials, t.detected, t.unique)]
    blocks += [
        (str(b), int(size), t.batch_detected[b], t.batch_unique[b])
        for b, size in enumerate(t.batch_sizes)
    ]
    for name, size, det, uni in blocks:
        for (i, j), a, u in zip(t.index, det, uni):
            w.writerow([t.d, t.n, size, t.seed, name, i, j, int(a), int(u), repr(a / size), repr(u / size)])
    return buf.getvalue()


def detector_rates_csv(rates: np.ndarray, d: int, n: int, trials: int, seed: int) -> str:
    buf = io.StringIO()
    buf.write(_header("per-detector-rates", d=d, n=n, trials=trials, seed=seed))
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["d", "n", "trials", "seed", "s", "t", "rate"])
    for s in range(d):
        for t in range(d):
            w.writerow([d, n, trials, seed, s, t, repr(float(rates[s, t]))])
    return buf.getvalue()


def index_to_set(row: np.ndarray, d: int) -> GbsSet:
    return GbsSet(make_ring(d), [GpmCoord(int(i) // d, int(i) % d) for i in row])
