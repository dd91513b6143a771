"""Command-line workbench: evaluate, search, verify, export.

Every command supports three output formats (human, csv, json).  JSON
output is a single object with "config" and "result" keys; CSV output
is a header row followed by data rows.  Both are deterministic for a
given configuration: keys are sorted and column order is fixed.

Exit status: 0 on success and on "conjectured value not attained"
(reported, not fatal); 2 on invalid input or instances too large for
checked 64-bit arithmetic; 3 on a proven-bound violation or case-table
mismatch (either one signals an implementation bug).
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

import click

from . import __version__
from .cache import ResultCache, cached_extremes
from .conjecture import f_sequence, verify_bounds, verify_conjecture
from .core import Instance, eval_closed
from .exceptions import (
    DivisibilityError,
    DomainError,
    InstanceTooLargeError,
    TableViolationError,
)
from .search import DEFAULT_CAP, SearchSpace
from .symmetry import delta

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUG = 3


@dataclass(frozen=True)
class RunConfig:
    """A fully resolved command invocation."""

    command: str
    fmt: str = "human"
    workers: int = 1
    cache_path: str | None = None
    n: int | None = None
    m: int | None = None
    n_max: int | None = None
    m_max: int | None = None
    k: int | None = None
    k_lo: int | None = None
    k_hi: int | None = None
    a: tuple[int, ...] | None = None
    cap: int | None = None

    def to_dict(self) -> dict:
        """Serializable form: the mathematical query only.

        Worker count and cache location never change a result (the
        reduction is deterministic and cached records are transparent),
        so they are left out to keep output byte-identical across them.
        """
        out = {"command": self.command, "format": self.fmt}
        for name in ("n", "m", "n_max", "m_max", "k", "k_lo", "k_hi", "cap"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        if self.a is not None:
            out["a"] = list(self.a)
        return out


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    return value


def _json_text(config: RunConfig, result: dict) -> str:
    return json.dumps({"config": config.to_dict(), "result": result},
                      sort_keys=True, indent=2) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _multiset_text(a: tuple[int, ...]) -> str:
    return ",".join(str(v) for v in a)


def _cache(config: RunConfig) -> ResultCache | None:
    return ResultCache(config.cache_path) if config.cache_path else None


def run(config: RunConfig) -> tuple[int, str]:
    """Execute a resolved configuration; return (exit status, output text)."""
    handler = {
        "eval": _run_eval,
        "table": _run_table,
        "search": _run_search,
        "verify-bounds": _run_verify_bounds,
        "verify-conjecture": _run_verify_conjecture,
        "f-seq": _run_f_seq,
        "delta-scan": _run_delta_scan,
    }.get(config.command)
    if handler is None:
        raise DomainError(f"unknown command {config.command!r}")
    return handler(config)


def _run_eval(config: RunConfig) -> tuple[int, str]:
    value = eval_closed(Instance(config.m, config.a, config.k))
    if config.fmt == "json":
        return EXIT_OK, _json_text(config, {"value": value})
    if config.fmt == "csv":
        row = [config.m, _multiset_text(config.a), config.k, value]
        return EXIT_OK, _csv_text(["m", "a", "k", "value"], [row])
    return EXIT_OK, f"{value}\n"


def _run_table(config: RunConfig) -> tuple[int, str]:
    cache = _cache(config)
    maxima, minima = [], []
    for m in range(1, config.m_max + 1):
        record = cached_extremes(SearchSpace(config.n, m), workers=config.workers, cache=cache)
        maxima.append(record.max_value)
        minima.append(record.min_value)
    if config.fmt == "json":
        return EXIT_OK, _json_text(config, {"max": maxima, "min": minima})
    if config.fmt == "csv":
        header = ["sequence"] + [str(m) for m in range(1, config.m_max + 1)]
        return EXIT_OK, _csv_text(header, [["max"] + maxima, ["min"] + minima])
    lines = [f"extremes of S_m over bounded instances, n={config.n}", "m max min"]
    lines += [f"{m} {maxima[m - 1]} {minima[m - 1]}" for m in range(1, config.m_max + 1)]
    return EXIT_OK, "\n".join(lines) + "\n"


def _record_result(record) -> dict:
    return record.to_dict()


def _site_lines(sites, count, cap) -> list[str]:
    lines = [f"  A={_multiset_text(a)} K={k}" for a, k in sites]
    if len(sites) < count:
        lines.append(f"  ... {count - len(sites)} site(s) total, list capped at {cap}")
    return lines


def _run_search(config: RunConfig) -> tuple[int, str]:
    space = SearchSpace(config.n, config.m, (config.k_lo, config.k_hi), config.cap)
    record = cached_extremes(space, workers=config.workers, cache=_cache(config))
    if config.fmt == "json":
        return EXIT_OK, _json_text(config, _record_result(record))
    if config.fmt == "csv":
        rows = [["max", record.max_value, record.max_count, _multiset_text(a), k]
                for a, k in record.max_sites]
        rows += [["min", record.min_value, record.min_count, _multiset_text(a), k]
                 for a, k in record.min_sites]
        return EXIT_OK, _csv_text(["kind", "value", "count", "a", "k"], rows)
    k_lo, k_hi = record.k_range
    lines = [f"search n={record.n} m={record.m} K in [{k_lo},{k_hi}] cap={record.cap}"]
    lines.append(f"max {record.max_value} attained at {record.max_count} site(s):")
    lines += _site_lines(record.max_sites, record.max_count, record.cap)
    lines.append(f"min {record.min_value} attained at {record.min_count} site(s):")
    lines += _site_lines(record.min_sites, record.min_count, record.cap)
    return EXIT_OK, "\n".join(lines) + "\n"


def _bound_dict(bound, verdict: str) -> dict:
    return {
        "value": _jsonable(bound.value),
        "status": bound.status,
        "formula": bound.formula,
        "note": bound.note,
        "verdict": verdict,
    }


def _run_verify_bounds(config: RunConfig) -> tuple[int, str]:
    record = cached_extremes(SearchSpace(config.n, config.m),
                             workers=config.workers, cache=_cache(config))
    report = verify_bounds(config.n, config.m, record=record)
    result = {
        "max_value": record.max_value,
        "min_value": record.min_value,
        "lower": _bound_dict(report.lower, report.lower_verdict),
        "upper": _bound_dict(report.upper, report.upper_verdict),
        "proven_violation": report.proven_violation,
    }
    code = EXIT_BUG if report.proven_violation else EXIT_OK
    if config.fmt == "json":
        return code, _json_text(config, result)
    if config.fmt == "csv":
        rows = [
            ["lower", report.lower.formula, report.lower.status,
             _jsonable(report.lower.value), record.min_value, report.lower_verdict],
            ["upper", report.upper.formula, report.upper.status,
             _jsonable(report.upper.value), record.max_value, report.upper_verdict],
        ]
        return code, _csv_text(["side", "formula", "status", "bound", "extreme", "verdict"], rows)
    lines = [f"bounds for n={config.n}, m={config.m}",
             f"search: max {record.max_value}, min {record.min_value}"]
    for side, bound, verdict in (("lower", report.lower, report.lower_verdict),
                                 ("upper", report.upper, report.upper_verdict)):
        text = "n/a" if bound.value is None else str(bound.value)
        note = f" [{bound.note}]" if bound.note else ""
        lines.append(f"{side} {text} ({bound.status}, {bound.formula}){note}: {verdict}")
    if report.proven_violation:
        lines.append("PROVEN BOUND VIOLATED -- implementation bug; witnesses:")
        witnesses = (record.min_sites
                     if report.lower_verdict == "VIOLATED" else record.max_sites)
        lines += [f"  A={_multiset_text(a)} K={k}" for a, k in witnesses[:10]]
    return code, "\n".join(lines) + "\n"


def _run_verify_conjecture(config: RunConfig) -> tuple[int, str]:
    record = cached_extremes(SearchSpace(config.n, config.m),
                             workers=config.workers, cache=_cache(config))
    report = verify_conjecture(config.n, config.m, record=record)
    result = {
        "part": report.part,
        "block_index": report.block_index,
        "predicted_value": _jsonable(report.predicted_value),
        "search_value": report.search_value,
        "value_matches": report.value_matches,
        "sites": [
            {"a": list(c.site.a), "k": c.site.k, "divisor": c.site.divisor,
             "value": c.value, "attains": c.attains}
            for c in report.site_checks
        ],
        "attaining_count": report.attaining_count,
        "sites_exact": report.sites_exact,
        "passed": report.passed,
    }
    if config.fmt == "json":
        return EXIT_OK, _json_text(config, result)
    if config.fmt == "csv":
        rows = [["value", "", "", _jsonable(report.predicted_value),
                 report.search_value, report.value_matches]]
        for c in report.site_checks:
            rows.append(["site", _multiset_text(c.site.a), c.site.k,
                         report.search_value, c.value, c.attains])
        if report.sites_exact is not None:
            rows.append(["sites-exact", "", "", len(report.site_checks),
                         report.attaining_count, report.sites_exact])
        return EXIT_OK, _csv_text(["check", "a", "k", "expected", "actual", "ok"], rows)
    mode = "max" if config.n % 2 else "min"
    lines = [
        f"conjecture check at n={config.n}, m={config.m} "
        f"(part {report.part}, block index {report.block_index})",
        f"predicted {mode} = m*f(n) = {report.predicted_value}; "
        f"search {mode} = {report.search_value}: "
        f"{'MATCH' if report.value_matches else 'MISMATCH'}",
    ]
    for c in report.site_checks:
        status = "attains" if c.attains else "DOES NOT ATTAIN"
        lines.append(f"site A={_multiset_text(c.site.a)} K={c.site.k}: value {c.value}, {status}")
    if report.sites_exact is None:
        lines.append(f"attaining sites: {report.attaining_count} "
                     "(containment required, not equality)")
    else:
        lines.append(f"attaining sites: {report.attaining_count}; "
                     f"predicted-set equality: {'yes' if report.sites_exact else 'NO'}")
    lines.append("PASS" if report.passed else "CONJECTURE CHECK FAILED (reported, not fatal)")
    return EXIT_OK, "\n".join(lines) + "\n"


def _run_f_seq(config: RunConfig) -> tuple[int, str]:
    values = f_sequence(config.n_max)
    if config.fmt == "json":
        return EXIT_OK, _json_text(config, {"start": 2, "f": [str(v) for v in values]})
    if config.fmt == "csv":
        rows = [[n, v.numerator, v.denominator] for n, v in enumerate(values, start=2)]
        return EXIT_OK, _csv_text(["n", "numerator", "denominator"], rows)
    lines = [f"f({n}) = {v}" for n, v in enumerate(values, start=2)]
    return EXIT_OK, "\n".join(lines) + "\n"


def _scan_one_m(m: int) -> dict:
    counts = {1: 0, 2: 0, 3: 0, 4: 0}
    sorted_case2 = 0
    cells = 0
    for a1 in range(m):
        for a2 in range(m):
            for k in range(1, m // 2):
                rec = delta(m, a1, a2, k)
                counts[rec.case.case_id] += 1
                cells += 1
                if a1 >= a2 and rec.case.case_id == 2:
                    sorted_case2 += 1
    return {"m": m, "cells": cells, "case1": counts[1], "case2": counts[2],
            "case3": counts[3], "case4": counts[4], "sorted_case2": sorted_case2}


def _run_delta_scan(config: RunConfig) -> tuple[int, str]:
    ms = [config.m] if config.m is not None else list(range(1, config.m_max + 1))
    scans = [_scan_one_m(m) for m in ms]
    if config.fmt == "json":
        return EXIT_OK, _json_text(config, {"scans": scans})
    header = ["m", "cells", "case1", "case2", "case3", "case4", "sorted_case2"]
    if config.fmt == "csv":
        rows = [[s[c] for c in header] for s in scans]
        return EXIT_OK, _csv_text(header, rows)
    lines = ["difference-table scan (every value matched its case)", " ".join(header)]
    for s in scans:
        lines.append(" ".join(str(s[c]) for c in header))
    return EXIT_OK, "\n".join(lines) + "\n"


# ----------------------------------------------------------------- click layer


def _parse_multiset(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise click.UsageError(f"--a expects comma-separated integers, got {text!r}")
    if not values:
        raise click.UsageError("--a must contain at least one element")
    if min(values) < 0:
        raise click.UsageError("--a elements must be >= 0")
    return tuple(sorted(values, reverse=True))  # canonical descending order


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise click.UsageError(message)


def _finish(config: RunConfig) -> None:
    try:
        code, text = run(config)
    except (DomainError, DivisibilityError, InstanceTooLargeError) as exc:
        raise click.UsageError(str(exc))
    except TableViolationError as exc:
        click.echo(f"TABLE VIOLATION (implementation bug): {exc}", err=True)
        sys.exit(EXIT_BUG)
    click.echo(text, nl=False)
    sys.exit(code)


def _resolve_cache(cache_path: str | None) -> str | None:
    return cache_path or os.environ.get("FLOORSUM_CACHE") or None


format_option = click.option("--format", "fmt", type=click.Choice(["human", "csv", "json"]),
                             default="human", show_default=True, help="Output format.")
workers_option = click.option("--workers", type=int, default=1, show_default=True,
                              help="Parallel worker processes for the search engine.")
cache_option = click.option("--cache", "cache_path", type=click.Path(dir_okay=False),
                            default=None,
                            help="Search-result cache file (FLOORSUM_CACHE also works).")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="floorsum")
def cli() -> None:
    """Exact workbench for alternating floor-function sums S_m(A, K)."""


@cli.command("eval")
@click.option("--m", type=int, required=True, help="Modulus (>= 1).")
@click.option("--a", "a_text", required=True, help="Multiset, comma-separated (e.g. 2,3).")
@click.option("--k", type=int, required=True, help="Prefix bound K, in [0, m-1].")
@format_option
def eval_cmd(m: int, a_text: str, k: int, fmt: str) -> None:
    """Evaluate S_m(A, K) by the closed form."""
    _require(m >= 1, f"--m must be >= 1, got {m}")
    a = _parse_multiset(a_text)
    _require(0 <= k <= m - 1, f"--k must be in [0, {m - 1}], got {k}")
    _finish(RunConfig(command="eval", fmt=fmt, m=m, a=a, k=k))


@cli.command("table")
@click.option("--n", type=int, required=True, help="Arity (number of multiset elements).")
@click.option("--m-max", type=int, required=True, help="Tabulate m = 1..m_max.")
@format_option
@workers_option
@cache_option
def table_cmd(n: int, m_max: int, fmt: str, workers: int, cache_path: str | None) -> None:
    """Max/min sequences of S_m over bounded instances, m = 1..m_max."""
    _require(n >= 1, f"--n must be >= 1, got {n}")
    _require(m_max >= 1, f"--m-max must be >= 1, got {m_max}")
    _require(workers >= 1, f"--workers must be >= 1, got {workers}")
    _finish(RunConfig(command="table", fmt=fmt, workers=workers,
                      cache_path=_resolve_cache(cache_path), n=n, m_max=m_max))


@cli.command("search")
@click.option("--n", type=int, required=True, help="Arity.")
@click.option("--m", type=int, required=True, help="Modulus.")
@click.option("--k-min", "k_lo", type=int, default=None, help="Low end of the K range.")
@click.option("--k-max", "k_hi", type=int, default=None, help="High end of the K range.")
@click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True,
              help="Maximum number of attaining sites to record per side.")
@format_option
@workers_option
@cache_option
def search_cmd(n: int, m: int, k_lo: int | None, k_hi: int | None, cap: int,
               fmt: str, workers: int, cache_path: str | None) -> None:
    """Exhaustive extremal search over every bounded (A, K)."""
    _require(n >= 1, f"--n must be >= 1, got {n}")
    _require(m >= 1, f"--m must be >= 1, got {m}")
    _require(cap >= 1, f"--cap must be >= 1, got {cap}")
    _require(workers >= 1, f"--workers must be >= 1, got {workers}")
    k_lo = 0 if k_lo is None else k_lo
    k_hi = m - 1 if k_hi is None else k_hi
    _require(0 <= k_lo <= k_hi <= m - 1,
             f"--k-min/--k-max must satisfy 0 <= k_min <= k_max <= {m - 1}")
    _finish(RunConfig(command="search", fmt=fmt, workers=workers,
                      cache_path=_resolve_cache(cache_path),
                      n=n, m=m, k_lo=k_lo, k_hi=k_hi, cap=cap))


@cli.command("verify-bounds")
@click.option("--n", type=int, required=True, help="Arity.")
@click.option("--m", type=int, required=True, help="Modulus.")
@format_option
@workers_option
@cache_option
def verify_bounds_cmd(n: int, m: int, fmt: str, workers: int, cache_path: str | None) -> None:
    """Search (n, m) exhaustively and compare against the known bounds.

    Exits nonzero only if a proven bound is violated (an implementation
    bug); a conjectured bound that is not attained is reported, not fatal.
    """
    _require(n >= 1, f"--n must be >= 1, got {n}")
    _require(m >= 1, f"--m must be >= 1, got {m}")
    _require(workers >= 1, f"--workers must be >= 1, got {workers}")
    _finish(RunConfig(command="verify-bounds", fmt=fmt, workers=workers,
                      cache_path=_resolve_cache(cache_path), n=n, m=m))


@cli.command("verify-conjecture")
@click.option("--n", type=int, required=True, help="Arity (>= 4).")
@click.option("--m", type=int, required=True, help="Modulus (must admit the predicted sites).")
@format_option
@workers_option
@cache_option
def verify_conjecture_cmd(n: int, m: int, fmt: str, workers: int,
                          cache_path: str | None) -> None:
    """Check M(n) = m*f(n) and the predicted sites against full search."""
    _require(n >= 4, f"--n must be >= 4, got {n}")
    _require(m >= 1, f"--m must be >= 1, got {m}")
    _require(workers >= 1, f"--workers must be >= 1, got {workers}")
    _finish(RunConfig(command="verify-conjecture", fmt=fmt, workers=workers,
                      cache_path=_resolve_cache(cache_path), n=n, m=m))


@cli.command("f-seq")
@click.option("--n-max", type=int, required=True, help="Last index to produce (>= 2).")
@format_option
def f_seq_cmd(n_max: int, fmt: str) -> None:
    """Exact rational sequence f(2..n_max) from the ninth-order recurrence."""
    _require(n_max >= 2, f"--n-max must be >= 2, got {n_max}")
    _finish(RunConfig(command="f-seq", fmt=fmt, n_max=n_max))


@cli.command("delta-scan")
@click.option("--m", type=int, default=None, help="Scan a single modulus.")
@click.option("--m-max", type=int, default=None, help="Scan every modulus 1..m_max.")
@format_option
def delta_scan_cmd(m: int | None, m_max: int | None, fmt: str) -> None:
    """Audit the two-variable difference against its case table.

    Scans every legal (a1, a2, K) cell; any value/case mismatch aborts
    with exit status 3.
    """
    _require((m is None) != (m_max is None), "exactly one of --m / --m-max is required")
    if m is not None:
        _require(m >= 1, f"--m must be >= 1, got {m}")
    if m_max is not None:
        _require(m_max >= 1, f"--m-max must be >= 1, got {m_max}")
    _finish(RunConfig(command="delta-scan", fmt=fmt, m=m, m_max=m_max))


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
