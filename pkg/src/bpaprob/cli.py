"""Command-line interface.

Exit codes: 0 success, 1 validation or parse failure, 2 capacity errors.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from .documents import emit_bpa, emit_json, load_document
from .entropy import check_base, deng_entropy, shannon_entropy
from .errors import CapacityError, EvidenceError
from .evidence import singleton_bounds
from .matching import DEFAULT_TOL, entropy_match
from .report import base_name, compare, compare_many, format_csv, format_table, run_method
from .sampling import default_frame, random_bpa

METHOD_CHOICES = ("entropy-match", "pignistic", "plausibility", "relative-belief", "proportional")
DOC_SUFFIXES = (".bpa", ".txt", ".json")


def _base(text: str) -> float:
    value = math.e if text.lower() == "e" else float(text)
    return check_base(value)


def _cmd_transform(args, out):
    doc = load_document(args.file)
    d = args.precision
    print(f"entropy base: {base_name(args.base)}", file=out)
    print(f"method: {args.method}", file=out)
    if args.method == "entropy-match":
        res = entropy_match(doc.mass, args.tol, args.base)
        dist = res.distribution
    else:
        dist = run_method(args.method, doc.mass, args.tol, args.base)
    for lab, p in zip(doc.frame.labels, dist.probs):
        print(f"{lab}\t{p:.{d}f}", file=out)
    if args.method == "entropy-match":
        print(f"target deng entropy: {res.target_entropy:.{d}f}", file=out)
        print(f"achieved entropy: {res.achieved_entropy:.{d}f}", file=out)
        print(f"gap: {res.gap:.{d}g}", file=out)
        print(f"regime: {res.regime}", file=out)
        print(f"iterations: {res.iterations}", file=out)
    else:
        h = shannon_entropy(dist, args.base)
        print(f"shannon entropy: {h:.{d}f}", file=out)
        print(f"gap: {abs(deng_entropy(doc.mass, args.base) - h):.{d}g}", file=out)
    return 0


def _cmd_entropy(args, out):
    doc = load_document(args.file)
    d = args.precision
    print(f"entropy base: {base_name(args.base)}", file=out)
    print(f"deng entropy: {deng_entropy(doc.mass, args.base):.{d}f}", file=out)
    if doc.mass.is_bayesian:
        probs = [0.0] * doc.frame.n
        for fs, v in doc.mass.focal:
            probs[fs.members()[0]] = v
        print(f"shannon entropy: {shannon_entropy(probs, args.base):.{d}f}", file=out)
    return 0


def _cmd_bounds(args, out):
    doc = load_document(args.file)
    b = singleton_bounds(doc.mass)
    d = args.precision
    width = max(len("label"), *(len(lab) for lab in doc.frame.labels))
    print(f"{'label'.ljust(width)}  {'bel':>{d + 2}}  {'pl':>{d + 2}}", file=out)
    for lab, lo, hi in zip(doc.frame.labels, b.lower, b.upper):
        print(f"{lab.ljust(width)}  {lo:.{d}f}  {hi:.{d}f}", file=out)
    return 0


def _cmd_validate(args, out):
    try:
        doc = load_document(args.file)
    except EvidenceError as exc:
        print(f"invalid: {exc}", file=out)
        return 2 if isinstance(exc, CapacityError) else 1
    m = doc.mass
    print("valid", file=out)
    if doc.name:
        print(f"name: {doc.name}", file=out)
    print(f"frame size: {doc.frame.n}", file=out)
    print(f"focal sets: {len(m)}", file=out)
    print(f"bayesian: {'yes' if m.is_bayesian else 'no'}", file=out)
    if m.adjustment:
        print(f"renormalized: input masses summed to 1{m.adjustment:+.3e}", file=out)
    else:
        print("renormalized: no", file=out)
    return 0


def _batch_files(directory: str) -> list[Path]:
    root = Path(directory)
    if not root.is_dir():
        raise FileNotFoundError(f"not a directory: {directory}")
    return sorted(p for p in root.iterdir() if p.suffix.lower() in DOC_SUFFIXES)


def _cmd_compare(args, out):
    if args.batch:
        files = _batch_files(args.batch)
        if args.file:
            files.insert(0, Path(args.file))
    elif args.file:
        files = [Path(args.file)]
    else:
        raise SystemExit("compare: give a file or --batch DIR")
    docs = [load_document(f) for f in files]
    reports = compare_many([doc.mass for doc in docs], args.tol, args.base, args.jobs)
    if args.csv:
        out.write(format_csv(reports, [str(f) for f in files], args.precision))
        return 0
    for k, (f, report) in enumerate(zip(files, reports)):
        if len(files) > 1:
            if k:
                print(file=out)
            print(f"== {f}", file=out)
        out.write(format_table(report, args.precision))
    return 0


def _cmd_random(args, out):
    frame = default_frame(args.n)
    m = random_bpa(frame, args.focal, args.seed)
    name = f"random n={args.n} focal={args.focal} seed={args.seed}"
    out.write(emit_json(m, name) if args.json else emit_bpa(m, name))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bpaprob", description="Transform belief functions into probability distributions."
    )
    parser.add_argument("--precision", type=int, default=6, help="decimal places in output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="transform a BPA into a distribution")
    p.add_argument("file")
    p.add_argument("--method", choices=METHOD_CHOICES, default="entropy-match")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--base", type=_base, default=2.0, help="log base, a number or 'e'")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("entropy", help="Deng entropy of a BPA")
    p.add_argument("file")
    p.add_argument("--base", type=_base, default=2.0)
    p.set_defaults(func=_cmd_entropy)

    p = sub.add_parser("bounds", help="singleton belief/plausibility table")
    p.add_argument("file")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("validate", help="check a BPA document")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("compare", help="run every transform side by side")
    p.add_argument("file", nargs="?")
    p.add_argument("--batch", metavar="DIR", help="compare every .bpa/.txt/.json file in DIR")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--base", type=_base, default=2.0)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for --batch")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("random", help="emit a seeded random BPA")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--focal", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_random)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (EvidenceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
