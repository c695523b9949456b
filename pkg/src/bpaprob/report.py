"""Side-by-side comparison of every transform on one mass function."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .baselines import BASELINES
from .entropy import DEFAULT_BASE, EntropyValue, deng_entropy, shannon_entropy
from .evidence import IntervalConstraints, MassFunction, ProbabilityDistribution, singleton_bounds
from .matching import DEFAULT_TOL, entropy_match

METHODS = ("pignistic", "plausibility", "relative-belief", "proportional", "entropy-match")


@dataclass(frozen=True)
class ReportRow:
    method: str
    distribution: Optional[ProbabilityDistribution]
    entropy: Optional[float] = None
    gap: Optional[float] = None
    argmax: Optional[str] = None
    skipped: Optional[str] = None


@dataclass(frozen=True)
class ComparisonReport:
    deng_entropy: EntropyValue
    bounds: IntervalConstraints
    rows: tuple[ReportRow, ...]
    base: float = DEFAULT_BASE

    @property
    def labels(self) -> tuple[str, ...]:
        return self.bounds.frame.labels

    def row(self, method: str) -> ReportRow:
        for r in self.rows:
            if r.method == method:
                return r
        raise KeyError(method)

    def best(self) -> ReportRow:
        """Row with the smallest entropy gap; earlier rows win ties."""
        done = [r for r in self.rows if r.skipped is None]
        return min(done, key=lambda r: r.gap)


def run_method(method: str, m: MassFunction, tol: float = DEFAULT_TOL, base: float = DEFAULT_BASE):
    if method == "entropy-match":
        return entropy_match(m, tol, base).distribution
    return BASELINES[method](m)


def compare(
    m: MassFunction,
    tol: float = DEFAULT_TOL,
    base: float = DEFAULT_BASE,
    methods: Sequence[str] = METHODS,
) -> ComparisonReport:
    target = deng_entropy(m, base)
    rows = []
    for method in methods:
        try:
            dist = run_method(method, m, tol, base)
        except Exception as exc:  # a failing transform becomes a skip row
            rows.append(ReportRow(method, None, skipped=f"{type(exc).__name__}: {exc}"))
            continue
        h = shannon_entropy(dist, base)
        rows.append(ReportRow(method, dist, float(h), abs(target - h), dist.argmax()))
    return ComparisonReport(target, singleton_bounds(m), tuple(rows), base)


def _compare_args(args):
    return compare(*args)


def compare_many(
    masses: Sequence[MassFunction],
    tol: float = DEFAULT_TOL,
    base: float = DEFAULT_BASE,
    jobs: int = 1,
) -> list[ComparisonReport]:
    """Reports in input order, optionally computed in worker processes."""
    work = [(m, tol, base) for m in masses]
    if jobs <= 1 or len(work) <= 1:
        return [_compare_args(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_compare_args, work))


def _fmt(x: Optional[float], digits: int) -> str:
    return "" if x is None else f"{x:.{digits}f}"


def base_name(base: float) -> str:
    if base == 2:
        return "2 (bits)"
    if abs(base - 2.718281828459045) < 1e-15:
        return "e (nats)"
    return f"{base:g}"


def format_table(report: ComparisonReport, digits: int = 6) -> str:
    labels = report.labels
    out = [
        f"entropy base: {base_name(report.base)}",
        f"deng entropy: {_fmt(report.deng_entropy, digits)}",
        "bounds: " + "  ".join(
            f"{lab}=[{_fmt(lo, digits)}, {_fmt(hi, digits)}]"
            for lab, lo, hi in zip(labels, report.bounds.lower, report.bounds.upper)
        ),
        "",
    ]
    header = ["method", *labels, "entropy", "gap", "argmax"]
    body = []
    for r in report.rows:
        if r.skipped is not None:
            body.append([r.method, f"skipped ({r.skipped})"])
            continue
        body.append(
            [r.method, *(_fmt(p, digits) for p in r.distribution.probs),
             _fmt(r.entropy, digits), _fmt(r.gap, digits), r.argmax]
        )
    full = [row for row in body if len(row) == len(header)]
    widths = [max(len(str(row[i])) for row in [header, *full]) for i in range(len(header))]
    out.append("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    for row in body:
        if len(row) != len(header):
            out.append(f"{row[0].ljust(widths[0])}  {row[1]}")
        else:
            out.append("  ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(out) + "\n"


def format_csv(
    reports: Sequence[ComparisonReport],
    sources: Optional[Sequence[str]] = None,
    digits: int = 6,
) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["source", "method", "distribution", "entropy", "gap", "argmax",
                     "deng_entropy", "base", "skipped"])
    for k, report in enumerate(reports):
        src = sources[k] if sources else str(k)
        for r in report.rows:
            dist = "" if r.distribution is None else " ".join(
                f"{lab}={p:.{digits}f}" for lab, p in zip(report.labels, r.distribution.probs)
            )
            writer.writerow([src, r.method, dist, _fmt(r.entropy, digits), _fmt(r.gap, digits),
                             r.argmax or "", _fmt(report.deng_entropy, digits),
                             f"{report.base:g}", r.skipped or ""])
    return buf.getvalue()
