"""Batch experiments: one CSV row per generated instance."""

from __future__ import annotations

import csv
import io
import math
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .bounds import PhiTableError
from .enumeration import count_induced_paths
from .generators import GENERATORS, GenParams, generate
from .graph import CapExceeded, Graph, GraphInputError, Multigraph
from .hitting import min_feedback_vertex_set
from .pipeline import run_pipeline
from .recognizer import is_sO_free

SCHEMA_LINE = "# anticycle-run v1"
COLUMNS = ("instance", "n", "m", "s", "verdict", "induced_paths", "min_hitting_set", "bounds_ok", "wall_time", "note")


@dataclass
class ExperimentSpec:
    generator: str
    sizes: list[int]
    seed: int
    trials: int = 1
    s: int = 2
    p: float = 0.2
    k: int = 3
    length: int = 3
    max_cycles: int = 10**5
    max_paths: int = 10**7
    max_fvs_nodes: int = 10**5
    covering_cap: int = 16
    run_pipeline: bool = True
    timing: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.generator not in GENERATORS:
            raise GraphInputError(f"unknown generator {self.generator!r}")
        if not isinstance(self.seed, int):
            raise GraphInputError("seed must be an integer")
        caps = (self.trials, self.max_cycles, self.max_paths, self.max_fvs_nodes, self.covering_cap, self.workers)
        if min(caps) < 1:
            raise GraphInputError("trials, caps and workers must be positive")
        if not self.sizes or min(self.sizes) < 0:
            raise GraphInputError("sizes must be a nonempty list of nonnegative ints")


@dataclass
class RunRecord:
    instance: str
    n: int
    m: int
    s: int
    verdict: str = ""
    induced_paths: int | None = None
    min_hitting_set: int | None = None
    bounds_ok: str = ""
    wall_time: float | None = None
    note: str = ""

    def row(self) -> list[str]:
        out = []
        for col in COLUMNS:
            v = getattr(self, col)
            if v is None:
                out.append("")
            elif col == "wall_time":
                out.append(f"{v:.4f}")
            else:
                out.append(str(v))
        return out


def instances(spec: ExperimentSpec) -> list[tuple[str, Graph]]:
    out = []
    for n in spec.sizes:
        params = GenParams(n=n, p=spec.p, k=spec.k, s=spec.s, length=spec.length)
        for t in range(spec.trials):
            index = n * 100003 + t
            out.append((f"{spec.generator}-n{n}-t{t}", generate(spec.generator, params, spec.seed, index)))
    return out


def run_instance(spec: ExperimentSpec, name: str, g: Graph) -> RunRecord:
    start = time.perf_counter()
    rec = RunRecord(name, g.n, g.m, spec.s)
    notes = []
    try:
        res = is_sO_free(g, spec.s, spec.max_cycles)
        if res.free:
            rec.verdict = "FREE"
        else:
            assert res.witness.is_valid(g, spec.s), "witness failed re-validation"
            rec.verdict = "WITNESS"
    except CapExceeded as e:
        rec.verdict = "INCONCLUSIVE"
        notes.append(e.cap)
    try:
        rec.induced_paths = count_induced_paths(g, max_steps=spec.max_paths)
    except CapExceeded as e:
        notes.append(e.cap)
    cover = None
    try:
        cover = min_feedback_vertex_set(Multigraph.from_graph(g), spec.max_fvs_nodes)
        rec.min_hitting_set = len(cover)
    except CapExceeded as e:
        notes.append(e.cap)
    if spec.run_pipeline and cover is not None:
        try:
            report = run_pipeline(g, cover, spec.s, covering_cap=spec.covering_cap)
            rec.bounds_ok = {"PASS": "yes", "FAIL": "no", "WITNESS": "witness"}[report.verdict]
            if report.witness is not None:
                assert report.witness.is_valid(g, spec.s)
                if rec.verdict == "FREE":
                    raise AssertionError(f"{name}: pipeline found a witness in a free graph")
        except (CapExceeded, PhiTableError) as e:
            notes.append(getattr(e, "cap", "phi_table"))
    if spec.timing:
        rec.wall_time = time.perf_counter() - start
    rec.note = ";".join(notes)
    return rec


def _run_one(args: tuple[ExperimentSpec, str, Graph]) -> RunRecord:
    return run_instance(*args)


def run_records(spec: ExperimentSpec) -> list[RunRecord]:
    jobs = [(spec, name, g) for name, g in instances(spec)]
    if spec.workers == 1:
        return [_run_one(j) for j in jobs]
    with ProcessPoolExecutor(spec.workers) as pool:
        return list(pool.map(_run_one, jobs))


def records_to_csv(records: list[RunRecord]) -> str:
    buf = io.StringIO()
    buf.write(SCHEMA_LINE + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in records:
        w.writerow(r.row())
    return buf.getvalue()


def run_experiment(spec: ExperimentSpec, out_path: str | None = None) -> str:
    text = records_to_csv(run_records(spec))
    if out_path is not None:
        with open(out_path, "w") as fh:
            fh.write(text)
    return text


def read_csv_rows(text: str) -> list[dict[str, str]]:
    lines = [line for line in text.splitlines() if not line.startswith("#")]
    return list(csv.DictReader(lines))


@dataclass(frozen=True)
class Fit:
    slope: float
    intercept: float
    residual: float
    points: int


def fit_exponent(rows: list[dict[str, str]], x_col: str, y_col: str, x_transform: str = "log") -> Fit:
    """Least-squares slope of ``log y`` against ``log x`` (or ``log log x``).

    Rows with a blank cell are skipped.
    """
    xs, ys = [], []
    for r in rows:
        if x_col not in r or y_col not in r:
            raise GraphInputError(f"missing column {x_col!r} or {y_col!r}")
        if not r[x_col] or not r[y_col]:
            continue
        x, y = float(r[x_col]), float(r[y_col])
        if x <= 0 or y <= 0:
            raise GraphInputError(f"values must be positive for a log fit, got x={x}, y={y}")
        lx = math.log(x)
        if x_transform == "loglog":
            if lx <= 0:
                raise GraphInputError(f"log log x needs x > e, got {x}")
            lx = math.log(lx)
        elif x_transform != "log":
            raise GraphInputError(f"unknown x transform {x_transform!r}")
        xs.append(lx)
        ys.append(math.log(y))
    if len(xs) < 3:
        raise GraphInputError(f"need at least 3 usable rows, got {len(xs)}")
    if len(set(xs)) == 1:
        raise GraphInputError("x values are all equal")
    slope, intercept = statistics.linear_regression(xs, ys)
    residual = sum((y - (slope * x + intercept)) ** 2 for x, y in zip(xs, ys))
    return Fit(slope, intercept, residual, len(xs))

