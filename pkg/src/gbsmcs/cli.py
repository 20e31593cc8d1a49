"""Command-line entry point.

Exit codes: 0 success (or detected), 1 undetected (check-set / verify),
2 usage or input error, 3 oracle failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .detect import DISJOINT, full_report
from .errors import GbsError, OracleError
from .experiments import (
    SampleConfig,
    detector_rates_csv,
    mcs_rates_csv,
    per_mcs_rates,
    per_single_detector_rates,
    rate_comparison,
    rate_table_csv,
    tally_single_detectors,
    exhaustive_indices,
)
from .gpm import format_set, parse_set
from .mcs import build_mcs, enumerate_mcs
from .oracle import EIGEN_TOL, verify_one_way_criterion
from .zmod import make_ring

EXIT_OK, EXIT_UNDETECTED, EXIT_INPUT, EXIT_ORACLE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _dim(text: str) -> int:
    try:
        d = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid dimension {text!r}") from None
    make_ring(d)  # raises InvalidDimensionError for d < 2
    return d


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gbsmcs", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"gbsmcs {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("enumerate-mcs", help="list every maximally commutative set as JSON lines")
    e.add_argument("--d", type=_dim, required=True)

    for name, helptext in (
        ("check-set", "run every detection criterion on a GBS set"),
        ("verify", "check-set plus a numerical check of the one-way criterion"),
    ):
        c = sub.add_parser(name, help=helptext)
        c.add_argument("--d", type=_dim, required=True)
        src = c.add_mutually_exclusive_group(required=True)
        src.add_argument("--set", dest="set_text", help='e.g. "0,0;5,6;6,3"')
        src.add_argument("--set-file", type=Path, help="JSON array of [m, n] pairs")
        c.add_argument("--json", action="store_true")
        if name == "verify":
            c.add_argument("--seed", type=int, default=0, help="seed for the eigenbasis draws")

    s = sub.add_parser("sample-rates", help="MCS rule vs discriminant-set conditions, as CSV")
    s.add_argument("--d-min", type=_dim, required=True)
    s.add_argument("--d-max", type=_dim, required=True)
    s.add_argument("--n-min", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--trials", type=_positive, default=10_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", type=Path)

    m = sub.add_parser("per-mcs-rates", help="per-MCS detection and unique-detection rates, as CSV")
    m.add_argument("--d", type=_dim, required=True)
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--trials", type=_positive, default=10_000)
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--batches", type=_positive, default=10)
    m.add_argument("--out", type=Path)

    t = sub.add_parser("per-detector-rates", help="single-detector rates over Z_d x Z_d, as CSV")
    t.add_argument("--d", type=_dim, required=True)
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--trials", type=_positive, default=10_000)
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--exhaustive", action="store_true", help="enumerate all n-subsets instead of sampling")
    t.add_argument("--out", type=Path)
    return p


def _emit(text: str, out: Path | None, stdout) -> None:
    if out is None:
        stdout.write(text)
    else:
        out.write_text(text)


def _load_set(args):
    ring = make_ring(args.d)
    if args.set_file is not None:
        try:
            text = args.set_file.read_text()
        except OSError as exc:
            raise GbsError(f"cannot read {args.set_file}: {exc.strerror}") from None
    else:
        text = args.set_text
    return parse_set(text, ring)


def _yes(flag) -> str:
    return "yes" if flag else "no"


def _describe(rep) -> list[str]:
    d = rep.input.ring.d
    n_mcs = len(enumerate_mcs(rep.input.ring))
    lines = [
        f"d={d} set={format_set(rep.input)}",
        f"difference set ({len(rep.diff)}): {format_set(rep.diff)}",
    ]
    if rep.theorem2_hit is None:
        lines.append(f"MCS rule: no firing class among {n_mcs}")
    else:
        (i, j), branch = rep.theorem2_hit
        lines.append(
            f"MCS rule: C[{i},{j}] ({branch}); {len(rep.theorem2_all)} of {n_mcs} classes fire"
        )
    w = rep.t31_condition1
    lines.append("discriminant set: " + ("empty" if w is None else f"non-empty, witness {w[0]},{w[1]}"))
    lines.append(f"difference set commutative: {_yes(rep.t31_condition2)}")
    lines.append(f"composite d with an invertible coordinate everywhere: {_yes(rep.t31_condition3)}")
    fan = rep.fan_hit
    lines.append("F-type: " + ("no" if fan is None else ("already" if isinstance(fan, str) else f"after H_alpha, alpha={fan}")))
    lines.extend(f"note: {n}" for n in rep.notes)
    lines.append(f"detected: {_yes(rep.detected)}")
    return lines


def _cmd_enumerate(args, stdout) -> int:
    for c in enumerate_mcs(make_ring(args.d)):
        stdout.write(json.dumps(c.to_json(), separators=(",", ":")) + "\n")
    return EXIT_OK


def _cmd_check(args, stdout) -> int:
    rep = full_report(_load_set(args))
    if args.json:
        stdout.write(json.dumps(rep.to_json(), sort_keys=True) + "\n")
    else:
        stdout.write("\n".join(_describe(rep)) + "\n")
    return EXIT_OK if rep.detected else EXIT_UNDETECTED


def _cmd_verify(args, stdout) -> int:
    s = _load_set(args)
    rep = full_report(s)
    disjoint = [ix for ix, br in rep.theorem2_all if br == DISJOINT]
    oracle = None
    code = EXIT_OK if rep.detected else EXIT_UNDETECTED
    if disjoint:
        mcs = build_mcs(*disjoint[0], s.ring)
        overlap = verify_one_way_criterion(s, mcs, seed=args.seed)
        passed = overlap <= EIGEN_TOL
        oracle = {
            "mcs": list(mcs.index),
            "max_overlap": overlap,
            "tolerance": EIGEN_TOL,
            "passed": passed,
        }
        if not passed:
            code = EXIT_ORACLE
    elif rep.theorem2_hit is not None:
        oracle = {"mcs": list(rep.theorem2_hit[0]), "branch": rep.theorem2_hit[1], "theorem_trusted": True}
    if args.json:
        out = rep.to_json()
        out["oracle"] = oracle
        stdout.write(json.dumps(out, sort_keys=True) + "\n")
    else:
        lines = _describe(rep)
        if oracle is None:
            lines.append("oracle: nothing to verify")
        elif "max_overlap" in oracle:
            i, j = oracle["mcs"]
            lines.append(
                f"oracle: C[{i},{j}] max |<v|U|v>| = {oracle['max_overlap']:.3e}"
                f" (tol {EIGEN_TOL:g}) {'PASS' if oracle['passed'] else 'FAIL'}"
            )
        else:
            lines.append("oracle: contained branch only, not numerically checkable (theorem-trusted)")
        stdout.write("\n".join(lines) + "\n")
    return code


def _cmd_sample_rates(args, stdout) -> int:
    if args.d_min > args.d_max or args.n_min > args.n_max or args.n_min < 2:
        raise GbsError("need d-min <= d-max and 2 <= n-min <= n-max")
    rows = rate_comparison(
        range(args.d_min, args.d_max + 1), range(args.n_min, args.n_max + 1), args.trials, args.seed
    )
    text = rate_table_csv(
        rows,
        d_min=args.d_min,
        d_max=args.d_max,
        n_min=args.n_min,
        n_max=args.n_max,
        trials=args.trials,
        seed=args.seed,
    )
    _emit(text, args.out, stdout)
    bad = sum(r.violations for r in rows)
    if bad:
        print(f"warning: {bad} instances detected by the discriminant-set conditions but not by the MCS rule", file=sys.stderr)
    return EXIT_OK


def _cmd_per_mcs(args, stdout) -> int:
    t = per_mcs_rates(args.d, args.n, args.trials, args.seed, batches=args.batches)
    _emit(mcs_rates_csv(t), args.out, stdout)
    return EXIT_OK


def _cmd_per_detector(args, stdout) -> int:
    if args.exhaustive:
        SampleConfig(args.d, args.n, 1, args.seed)
        idx = exhaustive_indices(args.d, args.n)
        rates = tally_single_detectors(args.d, idx) / len(idx)
        trials = len(idx)
    else:
        rates = per_single_detector_rates(args.d, args.n, args.trials, args.seed)
        trials = args.trials
    _emit(detector_rates_csv(rates, args.d, args.n, trials, args.seed), args.out, stdout)
    return EXIT_OK


_COMMANDS = {
    "enumerate-mcs": _cmd_enumerate,
    "check-set": _cmd_check,
    "verify": _cmd_verify,
    "sample-rates": _cmd_sample_rates,
    "per-mcs-rates": _cmd_per_mcs,
    "per-detector-rates": _cmd_per_detector,
}


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args, stdout)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_INPUT
    except OracleError as exc:
        print(f"oracle error: {exc}", file=stderr)
        return EXIT_ORACLE
    except GbsError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
