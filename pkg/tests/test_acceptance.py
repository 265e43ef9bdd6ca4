"""Exit criteria for the package; each test records one PASS/FAIL summary line."""

import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from mbnb import checks
from mbnb.bounds import bound_b1, compute_bounds
from mbnb.experiment import PAPER_DEMO, PAPER_DEMO_SEED, render_report, run_experiment
from mbnb.instances import GeneratorConfig, parse_instance
from mbnb.solver import export_tree, solve


def record(name, ok, detail=""):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else ""))
    assert ok, f"{name}: {detail}"


def test_figure_one_exact():
    inst = parse_instance("3 5\n2 2 2")
    report = solve(inst, export_tree=True)
    dot = export_tree(report)
    nodes = sum(1 for ln in dot.splitlines() if "[label=" in ln and "->" not in ln)
    elapsed = min(_timed(lambda: solve(inst, export_tree=True)) for _ in range(50))
    ok = (report.node_count, report.leaf_count, report.optimal_value, nodes) == (7, 4, 4, 7)
    record("Figure-1 exactness (S=7, L=4, value 4, 7 DOT nodes, <1 ms)", ok and elapsed < 1e-3,
           f"S={report.node_count} L={report.leaf_count} value={report.optimal_value} "
           f"dot_nodes={nodes} t={elapsed * 1e6:.0f}us")


def _timed(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def test_bound_formulas():
    b1 = bound_b1(15)
    b3 = compute_bounds(parse_instance("3 5\n2 2 2")).b3
    record("Bound formulas (B1(15)=25739, Figure-1 B3=7)", b1 == 25739 and b3 == 7, f"B1={b1} B3={b3}")


@pytest.mark.slow
def test_soundness_sweep():
    failures, count = [], 0
    for cfg in checks.sweep_config(10_000, seed=2024, max_n=18):
        for i in range(cfg.instance_count):
            count += 1
            failures += checks.check_random_instance(cfg, i)
    record("Soundness sweep (10,000 instances, n in [1,18])", count == 10_000 and not failures,
           f"{count} instances, {len(failures)} violations" + (f"; first: {failures[0]}" if failures else ""))


def test_tight_family_one():
    r = checks.check_tight_all_twos(18)
    record("Tightness family 1 (all twos, C=2t-1, n<=18)", r.passed, f"{r.checked} cases {r.detail}".strip())


def test_tight_family_two():
    r = checks.check_tight_three_k(18)
    record("Tightness family 2 (three_k, n<=18, t=floor(n/2)+2)", r.passed,
           f"{r.checked} cases; {r.detail}" if r.detail else f"{r.checked} cases")


@pytest.mark.slow
def test_lemma_suite():
    results = checks.lemma_suite()
    bad = [r.line() for r in results if not r.passed]
    record("Combinatorics lemma suite (exhaustive)", not bad,
           "; ".join(bad) or f"{len(results)} properties, {sum(r.checked for r in results)} cases")


def test_theorems():
    results = checks.check_theorems(5)
    bad = [r.line() for r in results if not r.passed]
    record("Antichain-pair maxima (exhaustive, n<=5)", not bad,
           "; ".join(bad) or f"{sum(r.checked for r in results)} (n, s|t) cases")


@pytest.fixture(scope="module")
def paper_demo():
    cfg = GeneratorConfig(master_seed=PAPER_DEMO_SEED, **PAPER_DEMO)
    return cfg, run_experiment(cfg)


def test_experiment_reproduction(paper_demo):
    _, r = paper_demo
    ind = r.indicators
    avg_s = r.average_S
    checks_ = {
        "B1 avg == 25739": ind["B1"].average_value == 25739,
        "avg S within 40% of 2114.02": abs(avg_s - Fraction("2114.02")) <= Fraction("0.4") * Fraction("2114.02"),
        "B3 avg within 40% of 20257.82": abs(ind["B3"].average_value - Fraction("20257.82"))
        <= Fraction("0.4") * Fraction("20257.82"),
        "B3 best on majority": 2 * ind["B3"].best_bound_count > len(r.rows),
        "B2 min ratio 0": ind["B2"].min_ratio == 0,
    }
    detail = (f"avg S={float(avg_s):.2f}, B1 avg={float(ind['B1'].average_value):.2f}, "
              f"B3 avg={float(ind['B3'].average_value):.2f}, B3 best={ind['B3'].best_bound_count}, "
              f"B2 precise={ind['B2'].precise_bound_count}; failed: "
              + (", ".join(k for k, v in checks_.items() if not v) or "none"))
    record("Experiment reproduction (--paper-demo)", all(checks_.values()), detail)


def test_determinism(paper_demo):
    cfg, first = paper_demo
    again = render_report(run_experiment(cfg, jobs=1))
    parallel = render_report(run_experiment(cfg, jobs=2))
    base = render_report(first)
    record("Determinism (1 vs 2 workers, byte-identical CSV)", base == again == parallel)
