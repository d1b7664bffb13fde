"""Range scans over the claim registry: task scheduling, parallel execution,
summaries, and report serialization.

Scheduling is one task per prime (or per index); the claims selected for that
key run sequentially inside the task and share one cache Context, so e.g. the
(c,d)_p determinants feed every claim that needs them.  Reports are streamed
in task order, which is independent of the worker count, so two scans with
identical configuration emit byte-identical output regardless of --jobs.
"""

from __future__ import annotations

import csv
import io
import json
import multiprocessing
from dataclasses import dataclass, field

from .arith import prime_range
from .claimbase import Context, GOLDEN_KIND, INDEX_KIND, MUST_HOLD_GRADES, PRIME_KIND, Report
from .claims import REGISTRY, select_claims


@dataclass
class ScanConfig:
    claims: str = "*"
    primes: tuple[int, int] | None = None
    indices: tuple[int, int] = (0, 12)
    jobs: int = 1
    fmt: str = "text"
    out: str | None = None

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("worker count must be >= 1")
        if self.fmt not in ("json", "csv", "text"):
            raise ValueError("format must be json, csv, or text")
        if self.indices[0] > self.indices[1] or self.indices[0] < 0:
            raise ValueError("bad index range")
        if self.primes is not None and not 3 <= self.primes[0] <= self.primes[1]:
            raise ValueError("bad prime range")


def build_tasks(cfg: ScanConfig) -> list[tuple[str, int | None, tuple[str, ...]]]:
    chosen = select_claims(cfg.claims)
    prime_ids = tuple(c.id for c in chosen if c.kind == PRIME_KIND)
    index_ids = tuple(c.id for c in chosen if c.kind == INDEX_KIND)
    golden_ids = tuple(c.id for c in chosen if c.kind == GOLDEN_KIND)
    tasks: list[tuple[str, int | None, tuple[str, ...]]] = []
    if golden_ids:
        tasks.append((GOLDEN_KIND, None, golden_ids))
    if prime_ids:
        if cfg.primes is None:
            raise ValueError("selected prime-keyed claims require a prime range")
        for p in prime_range(*cfg.primes):
            tasks.append((PRIME_KIND, int(p), prime_ids))
    if index_ids:
        lo, hi = cfg.indices
        for n in range(lo, hi + 1):
            tasks.append((INDEX_KIND, n, index_ids))
    return tasks


def run_task(task) -> list[Report]:
    _kind, key, claim_ids = task
    ctx = Context()
    reports: list[Report] = []
    for cid in claim_ids:
        reports.extend(REGISTRY[cid].run(key, ctx))
    return reports


@dataclass
class Summary:
    counts: dict = field(default_factory=dict)  # claim -> status bucket -> count
    counterexamples: list = field(default_factory=list)
    theorem_failures: list = field(default_factory=list)
    total: int = 0

    def add(self, r: Report):
        self.total += 1
        bucket = r.status.split("(", 1)[0]
        per = self.counts.setdefault(r.claim, {"holds": 0, "fails": 0,
                                               "observational": 0, "skipped": 0})
        per[bucket] += 1
        if r.status == "fails":
            if r.grade in MUST_HOLD_GRADES:
                self.theorem_failures.append(r)
            else:
                self.counterexamples.append(r)

    def exit_code(self) -> int:
        return 2 if self.theorem_failures else 0

    def to_obj(self) -> dict:
        return {
            "claims": self.counts,
            "counterexamples": [r.to_obj() for r in self.counterexamples],
            "theorem_failures": [r.to_obj() for r in self.theorem_failures],
            "total_reports": self.total,
        }


def iter_reports(cfg: ScanConfig):
    """Stream reports in deterministic task order, fanned out over cfg.jobs."""
    tasks = build_tasks(cfg)
    if cfg.jobs == 1 or len(tasks) <= 1:
        for task in tasks:
            yield from run_task(task)
        return
    mp = multiprocessing.get_context("fork")
    with mp.Pool(min(cfg.jobs, len(tasks))) as pool:
        for reports in pool.imap(run_task, tasks, chunksize=1):
            yield from reports


class _JsonWriter:
    def __init__(self, stream):
        self.stream = stream
        self.first = True
        self.stream.write('{"reports":[')

    def add(self, r: Report):
        if not self.first:
            self.stream.write(",")
        self.first = False
        self.stream.write(json_dumps(r.to_obj()))

    def finish(self, summary: Summary):
        self.stream.write('],"summary":')
        self.stream.write(json_dumps(summary.to_obj()))
        self.stream.write("}\n")


class _CsvWriter:
    FIELDS = ("claim", "grade", "p", "n", "params", "status", "lhs", "rhs")

    def __init__(self, stream):
        self.writer = csv.writer(stream, lineterminator="\n")
        self.writer.writerow(self.FIELDS)

    def add(self, r: Report):
        self.writer.writerow([r.claim, r.grade,
                              "" if r.p is None else r.p,
                              "" if r.n is None else r.n,
                              json_dumps(r.params), r.status, r.lhs, r.rhs])

    def finish(self, summary: Summary):
        pass


class _TextWriter:
    """Human-readable rendering: failures always, everything with --verbose,
    then a per-claim summary table."""

    def __init__(self, stream, verbose: bool = False):
        self.stream = stream
        self.verbose = verbose

    def _line(self, r: Report) -> str:
        where = f"p={r.p}" if r.p is not None else (f"n={r.n}" if r.n is not None else "-")
        par = " ".join(f"{k}={v}" for k, v in r.params.items())
        return f"{r.status:<14} {r.claim:<24} {where:<7} {par}  lhs={r.lhs} rhs={r.rhs}\n"

    def add(self, r: Report):
        if r.status == "fails":
            tag = "FAIL" if r.grade in MUST_HOLD_GRADES else "COUNTEREXAMPLE"
            self.stream.write(f"{tag} {self._line(r)}")
        elif self.verbose:
            self.stream.write(self._line(r))

    def finish(self, summary: Summary):
        self.stream.write(f"\n{'claim':<26} {'holds':>8} {'fails':>6} {'obs':>6} {'skip':>6}\n")
        for cid, per in summary.counts.items():
            self.stream.write(f"{cid:<26} {per['holds']:>8} {per['fails']:>6} "
                              f"{per['observational']:>6} {per['skipped']:>6}\n")
        self.stream.write(f"total reports: {summary.total}\n")
        if summary.counterexamples:
            self.stream.write(f"COUNTEREXAMPLES: {len(summary.counterexamples)}\n")
        if summary.theorem_failures:
            self.stream.write(f"THEOREM-GRADE FAILURES: {len(summary.theorem_failures)}\n")
        else:
            self.stream.write("no theorem-grade failures\n")


def json_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def scan(cfg: ScanConfig, stream=None, verbose: bool = False) -> Summary:
    """Run the configured scan, writing reports to stream; returns the summary."""
    own = stream is None
    if own:
        stream = io.StringIO()
    if cfg.fmt == "json":
        writer = _JsonWriter(stream)
    elif cfg.fmt == "csv":
        writer = _CsvWriter(stream)
    else:
        writer = _TextWriter(stream, verbose=verbose)
    summary = Summary()
    for r in iter_reports(cfg):
        summary.add(r)
        writer.add(r)
    writer.finish(summary)
    return summary


def scan_reports(cfg: ScanConfig) -> tuple[list[Report], Summary]:
    """Collect reports in memory (for modest ranges and the test suite)."""
    summary = Summary()
    reports = []
    for r in iter_reports(cfg):
        summary.add(r)
        reports.append(r)
    return reports, summary
