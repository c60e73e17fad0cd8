"""End-to-end reduction run on one plantation, with every bound checked."""

from __future__ import annotations

from dataclasses import dataclass, field

from .covering import FinalCount, count_z_covering, verify_finalcount_bound
from .graph import Graph, popcount
from .plantation import Plantation, make_plantation
from .recognizer import PackingWitness
from .reductions import BoundCheck, boundary_reduction, make_dyadic

DEFAULT_COVERING_CAP = 20


@dataclass
class StageReport:
    name: str
    status: str
    exploded: int = 0
    deleted: int = 0
    contracted: int = 0
    checks: list[BoundCheck] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "stage": self.name,
            "status": self.status,
            "exploded": self.exploded,
            "deleted": self.deleted,
            "contracted": self.contracted,
            "checks": [
                {"name": c.name, "value": c.value, "op": c.op, "bound": c.bound, "holds": c.holds}
                for c in self.checks
            ],
        }


@dataclass
class PipelineReport:
    s: int
    stages: list[StageReport] = field(default_factory=list)
    witness: PackingWitness | None = None
    covering: FinalCount | None = None

    @property
    def checks(self) -> list[BoundCheck]:
        return [c for st in self.stages for c in st.checks]

    @property
    def verdict(self) -> str:
        if self.witness is not None:
            return "WITNESS"
        return "PASS" if all(c.holds for c in self.checks) else "FAIL"

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "verdict": self.verdict,
            "stages": [st.to_dict() for st in self.stages],
            "witness": None if self.witness is None else [list(c) for c in self.witness.cycles],
        }

    def to_text(self) -> str:
        lines = []
        for st in self.stages:
            lines.append(
                f"{st.name}: {st.status} (exploded {st.exploded}, deleted {st.deleted}, contracted {st.contracted})"
            )
            lines += [f"  {c}" for c in st.checks]
        if self.witness is not None:
            lines.append("WITNESS")
            lines += [" ".join(map(str, c)) for c in self.witness.cycles]
        lines.append(self.verdict)
        return "\n".join(lines)


def boundary_size(p: Plantation) -> int:
    """Number of edges between z and the rest of the graph."""
    zm = p.z_mask
    return sum(popcount(p.g.masks[v] & ~zm) for v in p.z)


def run_pipeline(
    g: Graph,
    z,
    s: int,
    phi_table: dict[int, int] | None = None,
    covering_cap: int = DEFAULT_COVERING_CAP,
) -> PipelineReport:
    """make_dyadic, then the composed boundary reduction, then the covering
    count bound. Counting steps are skipped when more than ``covering_cap``
    edges leave z."""
    p = make_plantation(g, z, s)
    report = PipelineReport(s)
    counting = boundary_size(p) <= covering_cap

    d = make_dyadic(p)
    checks = []
    if counting and not d.count_zero:
        checks.append(BoundCheck("covering paths do not drop", count_z_covering(p), count_z_covering(d.plantation)))
    if counting and d.count_zero:
        checks.append(BoundCheck("covering paths with a triangle in z", count_z_covering(p), 0))
    report.stages.append(
        StageReport(
            "dyadic",
            "COUNT-ZERO" if d.count_zero else "PASS",
            deleted=len(d.trace.deleted),
            contracted=len(d.trace.contracted),
            checks=checks,
        )
    )
    if not d.count_zero:
        res = boundary_reduction(d.plantation, phi_table)
        order = ["binary", "selfless", "thickness", "normal set", "cycle cover", "boundary"]
        stop = order.index(res.stage) if res.witness is not None else len(order)
        for i, name in enumerate(order):
            cs = [c for c in res.checks if c.stage == name]
            if i == stop:
                status = "WITNESS"
            elif i > stop:
                status = "SKIPPED"
            else:
                status = "PASS" if all(c.holds for c in cs) else "FAIL"
            t = res.traces.get(name)
            report.stages.append(
                StageReport(
                    name,
                    status,
                    exploded=len(t.exploded) if t else 0,
                    deleted=len(t.deleted) if t else 0,
                    checks=cs,
                )
            )
        report.witness = res.witness

    if counting and report.witness is None:
        fc = verify_finalcount_bound(p, phi_table)
        report.covering = fc
        report.stages.append(
            StageReport("covering bound", "PASS" if fc.holds else "FAIL", checks=[BoundCheck("covering paths", fc.n, fc.bound)])
        )
    return report
