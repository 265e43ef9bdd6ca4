"""Batch experiment: solve generated instances and compare B1/B2/B3 against S."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .bounds import compute_bounds
from .instances import GeneratorConfig, Instance, generate_instance
from .solver import InvariantViolation, solve

BOUND_NAMES = ("B1", "B2", "B3")
ROW_COLUMNS = ("id", "seed", "n", "C", "W", "t", "t_prime", "S", "optimal_value",
               "B1", "B2", "B3")
PAPER_DEMO = dict(n=15, weight_lo=1, weight_hi=100, instance_count=1000)
PAPER_DEMO_SEED = 20130101


@dataclass(frozen=True)
class Row:
    id: int
    seed: int | None
    n: int
    C: int
    W: int
    t: int | None
    t_prime: int | None
    S: int
    optimal_value: int
    B1: int
    B2: int
    B3: int

    def bound(self, name: str) -> int:
        return getattr(self, name)


@dataclass(frozen=True)
class Indicators:
    average_value: Fraction
    min_ratio: Fraction
    max_ratio: Fraction
    best_bound_count: int
    precise_bound_count: int


@dataclass
class ExperimentReport:
    rows: list[Row]
    indicators: dict[str, Indicators] = field(default_factory=dict)
    average_S: Fraction = Fraction(0)


def evaluate(inst: Instance, id: int = 0, seed: int | None = None) -> Row:
    report = solve(inst)
    b = compute_bounds(inst)
    if not report.node_count <= b.b3 <= b.b1:
        raise InvariantViolation(f"instance {id}: S={report.node_count}, B3={b.b3}, B1={b.b1}")
    return Row(id, seed, inst.n, inst.capacity, inst.total_weight, b.t, b.t_prime,
               report.node_count, report.optimal_value, b.b1, b.b2, b.b3)


def _evaluate_generated(args: tuple[GeneratorConfig, int]) -> Row:
    cfg, i = args
    return evaluate(generate_instance(cfg, i), i, cfg.instance_seed(i))


def summarize(rows: list[Row]) -> ExperimentReport:
    if not rows:
        raise ValueError("experiment has no instances")
    count = len(rows)
    best = {name: 0 for name in BOUND_NAMES}
    for r in rows:
        low = min(r.bound(name) for name in BOUND_NAMES)
        for name in BOUND_NAMES:
            if r.bound(name) == low:  # ties credit every tied bound
                best[name] += 1
    indicators = {}
    for name in BOUND_NAMES:
        ratios = [Fraction(r.bound(name) - r.S, r.S) for r in rows]
        indicators[name] = Indicators(
            average_value=Fraction(sum(r.bound(name) for r in rows), count),
            min_ratio=min(ratios),
            max_ratio=max(ratios),
            best_bound_count=best[name],
            precise_bound_count=sum(r.bound(name) == r.S for r in rows),
        )
    return ExperimentReport(rows, indicators, Fraction(sum(r.S for r in rows), count))


def run_experiment(cfg: GeneratorConfig, jobs: int = 1) -> ExperimentReport:
    """Generate, solve and bound every instance of ``cfg``; rows come back in id order."""
    tasks = [(cfg, i) for i in range(cfg.instance_count)]
    if jobs <= 1:
        rows = list(map(_evaluate_generated, tasks))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_evaluate_generated, tasks, chunksize=16))
    return summarize(rows)


def run_on_instances(instances: list[Instance]) -> ExperimentReport:
    return summarize([evaluate(inst, i) for i, inst in enumerate(instances)])


def fmt3(x: Fraction) -> str:
    """Exact half-up rounding to three decimals."""
    scaled = x * 1000
    q = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)
    sign = "-" if q < 0 else ""
    q = abs(q)
    return f"{sign}{q // 1000}.{q % 1000:03d}"


def _fmt_value(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else fmt3(x)


INDICATOR_ROWS = (
    ("Average value", lambda i: _fmt_value(i.average_value)),
    ("Min ratio", lambda i: fmt3(i.min_ratio)),
    ("Max ratio", lambda i: fmt3(i.max_ratio)),
    ("Best bound", lambda i: str(i.best_bound_count)),
    ("Precise bound", lambda i: str(i.precise_bound_count)),
)


def render_csv(r: ExperimentReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(ROW_COLUMNS)
    for row in r.rows:
        w.writerow(["" if getattr(row, c) is None else getattr(row, c) for c in ROW_COLUMNS])
    w.writerow([])
    w.writerow(["indicator", *BOUND_NAMES])
    for label, get in INDICATOR_ROWS:
        w.writerow([label, *(get(r.indicators[name]) for name in BOUND_NAMES)])
    w.writerow(["Average S", fmt3(r.average_S)])
    return buf.getvalue()


def render_markdown(r: ExperimentReport) -> str:
    lines = [f"Instances: {len(r.rows)}; average MBnB complexity S = {fmt3(r.average_S)}", "",
             "| Indicator | B1 | B2 | B3 |", "|---|---|---|---|"]
    for label, get in INDICATOR_ROWS:
        cells = " | ".join(get(r.indicators[name]) for name in BOUND_NAMES)
        lines.append(f"| {label} | {cells} |")
    return "\n".join(lines) + "\n"


def render_report(r: ExperimentReport, format: str = "csv") -> str:
    if format == "csv":
        return render_csv(r)
    if format in ("md", "markdown", "markdown_table"):
        return render_markdown(r)
    raise ValueError(f"unknown report format {format!r}")
