"""A-priori upper bounds on the MBnB node count, in exact integer arithmetic."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .instances import Instance


def binomial(a: int, b: int) -> int:
    """C(a, b) with C(a, b) = 0 outside 0 <= b <= a."""
    if a < 0:
        raise ValueError(f"binomial needs a >= 0, got {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def compute_t(inst: Instance) -> int | None:
    """Fewest smallest weights whose sum exceeds C; None when W <= C."""
    acc = 0
    for k, w in enumerate(reversed(inst.weights), start=1):
        acc += w
        if acc > inst.capacity:
            return k
    return None


def compute_t_prime(inst: Instance) -> int | None:
    """Fewest largest weights whose sum exceeds C; None when W <= C."""
    acc = 0
    for k, w in enumerate(inst.weights, start=1):
        acc += w
        if acc > inst.capacity:
            return k
    return None


def bound_b1(n: int) -> int:
    return 2 * binomial(n + 1, n // 2 + 1) - 1


def bound_b2(n: int, t: int, t_prime: int) -> int:
    return 2 * binomial(n + 1 - t_prime + t, t) - 1


def bound_b3(n: int, t: int) -> int:
    half = n // 2 + 1
    if t <= half:
        return 2 * binomial(n + 1, t) - 1
    return 2 * (binomial(n + 1, half) - binomial(t, half)) + 1


@dataclass(frozen=True)
class BoundsReport:
    n: int
    capacity: int
    total_weight: int
    t: int | None
    t_prime: int | None
    b1: int
    b2: int
    b3: int

    @property
    def s(self) -> int | None:
        return None if self.t is None else self.t - 1

    @property
    def degenerate(self) -> bool:
        return self.t is None


def compute_bounds(inst: Instance) -> BoundsReport:
    t, tp = compute_t(inst), compute_t_prime(inst)
    n = inst.n
    if t is None:
        # W <= C: the root already satisfies C1, so the tree is a single node.
        # B1 depends on n alone and stays at its formula value.
        return BoundsReport(n, inst.capacity, inst.total_weight, None, None, bound_b1(n), 1, 1)
    return BoundsReport(n, inst.capacity, inst.total_weight, t, tp,
                        bound_b1(n), bound_b2(n, t, tp), bound_b3(n, t))


BOUNDS_COLUMNS = ("n", "C", "W", "t", "t_prime", "B1", "B2", "B3", "degenerate")


def bounds_row(r: BoundsReport) -> list[str]:
    opt = lambda v: "" if v is None else str(v)  # noqa: E731
    return [str(r.n), str(r.capacity), str(r.total_weight), opt(r.t), opt(r.t_prime),
            str(r.b1), str(r.b2), str(r.b3), str(r.degenerate).lower()]
