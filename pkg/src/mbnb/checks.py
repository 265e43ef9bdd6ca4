"""Exhaustive and randomized verification of the combinatorial results.

Each ``check_*`` function returns a :class:`CheckResult`; the first
counterexample found is kept in ``detail``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import oracle
from .bounds import BoundsReport, binomial, compute_bounds
from .instances import GeneratorConfig, Instance, generate_instance
from .oracle import TightFamilySpec, tight_instance
from .solver import SolveReport, solve
from .tuples import (Balance, BinaryTuple, all_tuples, cyclic_indices,
                     extremal_pair_Apt, extremal_pair_As, gamma, in_b_plus, leq,
                     match_components, pair_in_Apt, pair_in_As, project_D, segment_balance,
                     unbound_ones)


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" -- {self.detail}" if self.detail else ""
        return f"[{status}] {self.name} ({self.checked} cases){tail}"


def _run(name: str, cases: Iterator, predicate: Callable[..., str | None]) -> CheckResult:
    """Apply ``predicate`` to every case; it returns an error message or None."""
    count = 0
    for case in cases:
        count += 1
        err = predicate(case)
        if err:
            return CheckResult(name, False, count, err)
    return CheckResult(name, True, count)


def _tuples_up_to(max_n: int, plus_only: bool = False) -> Iterator[BinaryTuple]:
    for n in range(1, max_n + 1):
        for a in all_tuples(n):
            if not plus_only or in_b_plus(a):
                yield a


# -- tuple kernel ---------------------------------------------------------------

def check_matching_oracle(max_n: int = 12) -> CheckResult:
    def pred(a):
        fast, slow = match_components(a), oracle.definitional_matching(a)
        if fast != slow:
            return f"{a}: matcher {sorted(fast.pairs)} vs definition {sorted(slow.pairs)}"
    return _run("match_components == definitional matching", _tuples_up_to(max_n), pred)


def check_matching_structure(max_n: int = 12) -> CheckResult:
    """Pairs and unbound sets partition the indices; connected segments are balanced
    and every component inside one is connected within it."""
    def pred(a):
        m = match_components(a)
        idx = [k for p in m.pairs for k in p] + list(m.unbound_ones) + list(m.unbound_zeros)
        if sorted(idx) != list(range(1, a.n + 1)):
            return f"{a}: matching does not partition indices"
        partner = {}
        for i, j in m.pairs:
            partner[i], partner[j] = j, i
        for i, j in m.pairs:
            if segment_balance(a, i, j) is not Balance.BALANCED:
                return f"{a}: connected segment [{i}:{j}] not balanced"
            seg = set(cyclic_indices(a.n, i, j))
            if any(partner.get(k) not in seg for k in seg):
                return f"{a}: segment [{i}:{j}] has a component connected outside it"
    return _run("connected segments: partition, balanced, closed", _tuples_up_to(max_n), pred)


def _segments_ending_before(n: int, p: int) -> Iterator[list[int]]:
    """Cyclic segments that end just before p and do not contain p."""
    end = n if p == 1 else p - 1
    for length in range(1, n):
        start = (end - length) % n + 1
        yield cyclic_indices(n, start, end)


def _segments_starting_after(n: int, p: int) -> Iterator[list[int]]:
    start = 1 if p == n else p + 1
    for length in range(1, n):
        end = (start + length - 2) % n + 1
        yield cyclic_indices(n, start, end)


def _count(a: BinaryTuple, idx: list[int]) -> tuple[int, int]:
    ones = sum(a.component(k) for k in idx)
    return len(idx) - ones, ones


def check_bound_criteria(max_n: int = 12) -> CheckResult:
    """A 1 is bound iff some 0-dominated segment precedes it; a 0 is bound iff
    some 1-dominated segment succeeds it."""
    def pred(a):
        m = match_components(a)
        bound = m.bound
        for p in range(1, a.n + 1):
            if a.component(p):
                crit = any(z > o for z, o in map(lambda s: _count(a, s), _segments_ending_before(a.n, p)))
            else:
                crit = any(o > z for z, o in map(lambda s: _count(a, s), _segments_starting_after(a.n, p)))
            if crit != (p in bound):
                return f"{a}: component {p} bound={p in bound} but criterion={crit}"
    return _run("bound-component criteria (0-/1-dominated neighbours)", _tuples_up_to(max_n), pred)


def check_b_plus_zeros_bound(max_n: int = 12) -> CheckResult:
    def pred(a):
        if match_components(a).unbound_zeros:
            return f"{a}: unbound 0-component in B+^n"
    return _run("every 0-component of a B+^n tuple is bound", _tuples_up_to(max_n, True), pred)


def check_unbound_monotone(max_n: int = 10) -> CheckResult:
    """alpha <= alpha' in B+^n: unbound 1s of alpha stay unbound 1s in alpha'."""
    def cases():
        for a in _tuples_up_to(max_n, True):
            rest = ~a.bits & ((1 << a.n) - 1)
            sub = rest
            while True:
                yield a, BinaryTuple(a.n, a.bits | sub)
                if sub == 0:
                    break
                sub = (sub - 1) & rest

    def pred(case):
        a, b = case
        missing = unbound_ones(a) - unbound_ones(b)
        if missing:
            return f"{a} <= {b}: unbound 1s {sorted(missing)} become bound"
    return _run("unbound 1-components are monotone on B+^n", cases(), pred)


def check_projection_keeps_unbound(max_n: int = 12) -> CheckResult:
    """If alpha = D(alpha') with both in B+^n, unbound 1s of alpha are unbound in alpha'."""
    def pred(a):
        d = project_D(a)
        if in_b_plus(d) and not unbound_ones(d) <= unbound_ones(a):
            return f"D({a}) = {d}: unbound {sorted(unbound_ones(d) - unbound_ones(a))} bound in preimage"
    return _run("projection preserves unbound 1-components", _tuples_up_to(max_n, True), pred)


def check_projection_injective(max_n: int = 14) -> CheckResult:
    checked = 0
    for n in range(1, max_n + 1):
        seen: dict[int, BinaryTuple] = {}
        for a in all_tuples(n):
            if not in_b_plus(a):
                continue
            checked += 1
            d = project_D(a)
            if d.weight() != a.weight() - 1 or not leq(d, a):
                return CheckResult("projection is injective on B+^n", False, checked,
                                   f"D({a}) = {d} is not a one-bit reduction")
            if d.bits in seen:
                return CheckResult("projection is injective on B+^n", False, checked,
                                   f"D({seen[d.bits]}) = D({a}) = {d}")
            seen[d.bits] = a
    return CheckResult("projection is injective on B+^n", True, checked)


def _with_gammas(max_n: int) -> Iterator[tuple[BinaryTuple, int]]:
    for a in _tuples_up_to(max_n, True):
        for s in range(a.n // 2 + 1, a.n + 1):
            yield a, s


def check_projection_incomparable(max_n: int = 12) -> CheckResult:
    """weight >= n/2 + 1 and alpha not <= gamma_s imply D(alpha) not <= gamma_s."""
    def pred(case):
        a, s = case
        g = gamma(a.n, s)
        if 2 * a.weight() >= a.n + 2 and not leq(a, g) and leq(project_D(a), g):
            return f"{a}, s={s}: D = {project_D(a)} <= {g}"
    return _run("projection keeps tuples off gamma_s's down-set", _with_gammas(max_n), pred)


def check_projection_no_preimage(max_n: int = 12) -> CheckResult:
    """alpha not <= gamma_s but D(alpha) <= gamma_s implies alpha is not in D(B+^n)."""
    images: dict[int, set[int]] = {}

    def image(n):
        if n not in images:
            images[n] = {project_D(x).bits for x in all_tuples(n) if in_b_plus(x)}
        return images[n]

    def pred(case):
        a, s = case
        g = gamma(a.n, s)
        if not leq(a, g) and leq(project_D(a), g) and a.bits in image(a.n):
            return f"{a}, s={s}: has a preimage under D"
    return _run("tuples dropping into gamma_s's down-set have no preimage",
                _with_gammas(max_n), pred)


LEMMA_CHECKS = (
    (check_matching_oracle, 12),
    (check_matching_structure, 12),
    (check_bound_criteria, 12),
    (check_unbound_monotone, 10),
    (check_b_plus_zeros_bound, 12),
    (check_projection_keeps_unbound, 12),
    (check_projection_injective, 14),
    (check_projection_incomparable, 12),
    (check_projection_no_preimage, 12),
)


def lemma_suite(max_n: int | None = None) -> list[CheckResult]:
    """Run every tuple-kernel check, each at its default size or ``max_n`` if smaller."""
    return [fn(default if max_n is None else min(default, max_n)) for fn, default in LEMMA_CHECKS]


# -- antichain theorems --------------------------------------------------------

def as_formula(n: int, s: int) -> int:
    half = n // 2 + 1
    return 1 + binomial(n + 1, half) - binomial(s + 1, half)


def check_theorems(max_n: int = 5) -> list[CheckResult]:
    out = []
    cases_as, cases_apt = [], []
    for n in range(1, max_n + 1):
        cases_as += [(n, s) for s in range(n // 2 + 1, n + 1)]
        cases_apt += [(n, t) for t in range(1, n // 2 + 2)]

    def pred_as(case):
        n, s = case
        best, witness = oracle.max_antichain_pair_As(n, s)
        want = as_formula(n, s)
        if best != want or not pair_in_As(witness, s, n):
            return f"n={n}, s={s}: exhaustive max {best}, formula {want}"
        ext = extremal_pair_As(n, s)
        if ext.cardinality != want or not pair_in_As(ext, s, n):
            return f"n={n}, s={s}: constructed pair has {ext.cardinality} or is not a member"

    def pred_apt(case):
        n, t = case
        best, witness = oracle.max_antichain_pair_Apt(n, t)
        want = binomial(n + 1, t)
        if best != want or not pair_in_Apt(witness, t):
            return f"n={n}, t={t}: exhaustive max {best}, formula {want}"
        ext = extremal_pair_Apt(n, t)
        if ext.cardinality != want or not pair_in_Apt(ext, t):
            return f"n={n}, t={t}: constructed pair has {ext.cardinality} or is not a member"

    out.append(_run("max over pairs holding gamma_s == 1+C(n+1,h)-C(s+1,h)", iter(cases_as), pred_as))
    out.append(_run("max over pairs of weight <= t == C(n+1,t)", iter(cases_apt), pred_apt))
    return out


# -- solver invariants ---------------------------------------------------------

def _as_array(ts) -> np.ndarray:
    return np.fromiter((t.bits for t in ts), dtype=np.uint64)


def _down_closure(members: np.ndarray, n: int) -> np.ndarray:
    """Boolean table over B^n: entry x is set iff some member y has y <= x."""
    table = np.zeros(1 << n, dtype=bool)
    table[members.astype(np.int64)] = True
    for b in range(n):
        view = table.reshape(-1, 2, 1 << b)
        view[:, 1, :] |= view[:, 0, :]
    return table


def _has_leq_pair(lo: np.ndarray, hi: np.ndarray, n: int, strict: bool) -> bool:
    """Any x in lo, y in hi with x <= y (x < y when ``strict``)."""
    if not len(lo) or not len(hi):
        return False
    closure = _down_closure(lo, n)
    if not strict:
        return bool(closure[hi.astype(np.int64)].any())
    # x < y iff x <= y with one of y's ones removed
    below = np.zeros_like(closure)
    idx = np.arange(1 << n)
    for b in range(n):
        has = (idx >> b) & 1 == 1
        below[has] |= closure[idx[has] ^ (1 << b)]
    return bool(below[hi.astype(np.int64)].any())


def _tuple_values(arr: np.ndarray, n: int, weights) -> np.ndarray:
    shifts = np.arange(n - 1, -1, -1, dtype=np.uint64)
    bits = (arr[:, None] >> shifts[None, :]) & np.uint64(1)
    return bits.astype(np.int64) @ np.asarray(weights, dtype=np.int64)


def solver_violations(inst: Instance, report: SolveReport, bounds: BoundsReport | None = None,
                      optimum: int | None = None) -> list[str]:
    """Every leaf-tuple, counting and bound property of one solved instance.

    ``report`` must come from ``solve(..., collect_tuples=True)``.
    """
    bounds = bounds or compute_bounds(inst)
    errs = []
    n = inst.n
    if optimum is not None and report.optimal_value != optimum:
        errs.append(f"optimum {report.optimal_value} != brute force {optimum}")
    value = sum(w * x for w, x in zip(inst.original_weights, report.optimal_solution))
    if value != report.optimal_value or value > inst.capacity:
        errs.append(f"reported solution has value {value}, capacity {inst.capacity}")
    if report.node_count != 2 * report.leaf_count - 1:
        errs.append("S != 2L - 1")
    if not report.node_count <= bounds.b3 <= bounds.b1:
        errs.append(f"S={report.node_count}, B3={bounds.b3}, B1={bounds.b1} out of order")
    t0, t1 = _as_array(report.zero_tuples), _as_array(report.one_tuples)
    if len(t0) + len(t1) != report.leaf_count:
        errs.append("leaf tuples are not distinct")
    if _has_leq_pair(t0, t0, n, True):
        errs.append("leaf 0-tuples not an antichain")
    if _has_leq_pair(t1, t1, n, True):
        errs.append("leaf 1-tuples not an antichain")
    if _has_leq_pair(t0, t1, n, False):
        errs.append("some leaf 0-tuple <= some leaf 1-tuple")
    if len(t0) and (_tuple_values(t0, n, inst.weights) <= inst.capacity).any():
        errs.append("feasible leaf 0-tuple")
    if len(t1) and (_tuple_values(t1, n, inst.weights) > inst.capacity).any():
        errs.append("infeasible leaf 1-tuple")
    if bounds.t is None:
        if report.one_tuples != {BinaryTuple(n, (1 << n) - 1)} or report.zero_tuples:
            errs.append("degenerate instance should have the all-ones tuple as only leaf")
    else:
        t = bounds.t
        heavy = [x for x in report.zero_tuples | report.one_tuples if x.weight() > t]
        if heavy:
            errs.append(f"leaf tuple {heavy[0]} heavier than t={t}")
        if gamma(n, t - 1) not in report.one_tuples:
            errs.append(f"gamma_{t - 1} missing from leaf 1-tuples")
    return errs


def sweep_config(count: int = 10_000, seed: int = 2024, max_n: int = 18) -> list[GeneratorConfig]:
    """Configs covering n = 1..max_n round-robin, ``count`` instances in total."""
    per, extra = divmod(count, max_n)
    return [GeneratorConfig(n, 1, 100, seed + 1_000_003 * n, per + (n <= extra))
            for n in range(1, max_n + 1) if per + (n <= extra) > 0]


def check_random_instance(cfg: GeneratorConfig, i: int) -> list[str]:
    inst = generate_instance(cfg, i)
    report = solve(inst, collect_tuples=True)
    optimum, _ = oracle.brute_force_optimum(inst)
    dfs = report
    bfs = solve(inst, collect_tuples=True, order="bfs") if inst.n <= 10 else None
    errs = solver_violations(inst, report, optimum=optimum)
    if bfs is not None and (bfs.node_count, bfs.zero_tuples, bfs.one_tuples) != (
            dfs.node_count, dfs.zero_tuples, dfs.one_tuples):
        errs.append("DFS and BFS trees differ")
    return [f"n={inst.n} seed={cfg.instance_seed(i)}: {e}" for e in errs]


# -- tight families -------------------------------------------------------------

def check_tight_all_twos(max_n: int = 18) -> CheckResult:
    def cases():
        for n in range(1, max_n + 1):
            for t in range(1, n // 2 + 2):
                yield n, t

    def pred(case):
        n, t = case
        inst = tight_instance(TightFamilySpec("all_twos", n, t))
        s = solve(inst).node_count
        b = compute_bounds(inst)
        want = 2 * binomial(n + 1, t) - 1
        if b.t != t or s != want or b.b3 != want:
            return f"n={n}, t={t}: S={s}, computed t={b.t}, B3={b.b3}, expected {want}"
    return _run("all-twos family attains 2*C(n+1,t)-1", cases(), pred)


def tight_three_k_rows(max_n: int = 18) -> list[tuple[int, int | None, int | None, int | None]]:
    """(n, t, S, B3) for the three_k family; t/S/B3 None when the instance is invalid."""
    rows = []
    for n in range(1, max_n + 1):
        try:
            inst = tight_instance(TightFamilySpec("three_k", n))
        except ValueError:
            rows.append((n, None, None, None))
            continue
        b = compute_bounds(inst)
        rows.append((n, b.t, solve(inst).node_count, b.b3))
    return rows


def check_tight_three_k(max_n: int = 18) -> CheckResult:
    checked, skipped = 0, []
    for n, t, s, b3 in tight_three_k_rows(max_n):
        if t != n // 2 + 2:
            skipped.append(n)
            continue
        checked += 1
        if s != b3:
            return CheckResult("three_k family attains B3", False, checked,
                               f"n={n}: S={s} but B3={b3}")
    note = f"t != floor(n/2)+2 for n in {skipped}" if skipped else ""
    return CheckResult("three_k family attains B3", True, checked, note)


def probe_max_complexity(n: int, t: int, trials: int, seed: int = 0,
                         weight_hi: int = 30) -> tuple[int, Instance | None]:
    """Largest S seen over random instances whose t equals the requested value.

    Capacity is drawn so that the t smallest weights exceed it but the
    t - 1 smallest do not. This can only fail to refute a conjectured maximum.
    """
    from .instances import SplitMix64

    rng = SplitMix64(seed)
    best, witness = 0, None
    for _ in range(trials):
        weights = [1 + rng.next_u64() % weight_hi for _ in range(n)]
        small = sorted(weights)
        lo, hi = sum(small[:t - 1]), sum(small[:t]) - 1
        if hi < max(lo, 1):
            continue
        cap = max(lo, 1) + rng.next_u64() % (hi - max(lo, 1) + 1)
        inst = Instance.from_weights(weights, cap)
        s = solve(inst).node_count
        if s > best:
            best, witness = s, inst
    return best, witness
