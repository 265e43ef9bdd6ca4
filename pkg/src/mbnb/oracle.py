"""Independent brute-force references used to check the solver and the tuple kernel."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .instances import Instance, InstanceError
from .tuples import (AntichainPair, BinaryTuple, ComponentMatching, cyclic_indices,
                     gamma)

BRUTE_FORCE_MAX_N = 25
ANTICHAIN_MAX_N = 5


def subset_sums(weights) -> np.ndarray:
    """Sums of all 2^n subsets; index bit n-1-k selects weights[k]."""
    sums = np.zeros(1, dtype=np.int64)
    for w in weights:
        sums = np.column_stack((sums, sums + w)).ravel()
    return sums


def brute_force_optimum(inst: Instance) -> tuple[int, tuple[int, ...]]:
    """Best feasible value over all 2^n tuples, in input variable order.

    Ties go to the lexicographically smallest tuple.
    """
    n = inst.n
    if n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"n={n} too large for enumeration (max {BRUTE_FORCE_MAX_N})")
    sums = subset_sums(inst.original_weights)
    feasible = np.where(sums <= inst.capacity, sums, -1)
    idx = int(np.argmax(feasible))
    return int(feasible[idx]), tuple((idx >> (n - 1 - k)) & 1 for k in range(n))


# -- definitional component matching ----------------------------------------

def is_minimal_balanced(a: BinaryTuple, i: int, j: int) -> bool:
    """Whole segment balanced and every proper prefix 0-dominated."""
    diff = 0  # zeros minus ones
    idx = cyclic_indices(a.n, i, j)
    for step, k in enumerate(idx):
        diff += 1 if a.component(k) == 0 else -1
        last = step == len(idx) - 1
        if (diff != 0) if last else (diff <= 0):
            return False
    return True


def definitional_matching(a: BinaryTuple) -> ComponentMatching:
    """Matching read straight off the definition, by trying every segment."""
    zeros = [i for i in range(1, a.n + 1) if a.component(i) == 0]
    ones = [j for j in range(1, a.n + 1) if a.component(j) == 1]
    pairs = {(i, j) for i in zeros for j in ones if is_minimal_balanced(a, i, j)}
    bound = {k for p in pairs for k in p}
    return ComponentMatching(frozenset(pairs),
                             frozenset(j for j in ones if j not in bound),
                             frozenset(i for i in zeros if i not in bound))


# -- exhaustive antichain-pair maximisation ---------------------------------

@dataclass(frozen=True)
class _Antichains:
    masks: np.ndarray      # bit x set <=> tuple with bits x is a member
    downsets: np.ndarray   # union of down-sets of the members
    sizes: np.ndarray


@lru_cache(maxsize=None)
def _antichains(n: int) -> _Antichains:
    """Every antichain of B^n, found by include/exclude backtracking."""
    size = 1 << n
    down = [0] * size
    up = [0] * size
    for x in range(size):
        for y in range(size):
            if x & ~y == 0:  # x <= y
                down[y] |= 1 << x
                up[x] |= 1 << y
    masks, downsets = [], []

    def extend(start: int, chosen: int, blocked: int, downset: int) -> None:
        masks.append(chosen)
        downsets.append(downset)
        for x in range(start, size):
            if not blocked >> x & 1:
                extend(x + 1, chosen | 1 << x, blocked | down[x] | up[x], downset | down[x])

    extend(0, 0, 0, 0)
    masks_arr = np.array(masks, dtype=np.uint64)
    sizes = np.array([bin(m).count("1") for m in masks], dtype=np.int64)
    return _Antichains(masks_arr, np.array(downsets, dtype=np.uint64), sizes)


def count_antichains(n: int) -> int:
    return len(_antichains(n).masks)


def _members(mask: int, n: int) -> list[BinaryTuple]:
    return [BinaryTuple(n, x) for x in range(1 << n) if mask >> x & 1]


def _max_pair(n: int, first_ok: np.ndarray, second_ok: np.ndarray) -> tuple[int, AntichainPair]:
    ac = _antichains(n)
    best, witness = -1, (0, 0)
    second_masks = ac.masks[second_ok]
    second_sizes = ac.sizes[second_ok]
    for k in np.flatnonzero(first_ok):
        # T' < T'' <=> no member of T'' lies in the down-set of T'
        valid = (second_masks & ac.downsets[k]) == 0
        if not valid.any():
            continue
        j = int(np.argmax(np.where(valid, second_sizes, -1)))
        total = int(ac.sizes[k] + second_sizes[j])
        if total > best:
            best, witness = total, (int(ac.masks[k]), int(second_masks[j]))
    return best, AntichainPair(_members(witness[0], n), _members(witness[1], n))


def _check_n(n: int) -> None:
    if not 1 <= n <= ANTICHAIN_MAX_N:
        raise ValueError(f"n={n} outside 1..{ANTICHAIN_MAX_N} for exhaustive antichain search")


def max_antichain_pair_As(n: int, s: int) -> tuple[int, AntichainPair]:
    """Exact maximum cardinality over pairs whose first antichain holds gamma_s."""
    _check_n(n)
    if not n / 2 < s <= n:
        raise ValueError(f"need n/2 < s <= n, got n={n}, s={s}")
    ac = _antichains(n)
    g = np.uint64(1 << gamma(n, s).bits)
    first_ok = (ac.masks & g) != 0
    return _max_pair(n, first_ok, np.ones(len(ac.masks), dtype=bool))


def max_antichain_pair_Apt(n: int, t: int) -> tuple[int, AntichainPair]:
    """Exact maximum cardinality over pairs whose tuples all weigh at most t."""
    _check_n(n)
    if not 1 <= t <= n // 2 + 1:
        raise ValueError(f"need 1 <= t <= {n // 2 + 1}, got t={t}")
    ac = _antichains(n)
    heavy = 0
    for x in range(1 << n):
        if x.bit_count() > t:
            heavy |= 1 << x
    light = (ac.masks & np.uint64(heavy)) == 0
    return _max_pair(n, light, light)


# -- tight instance families --------------------------------------------------

@dataclass(frozen=True)
class TightFamilySpec:
    kind: str  # "all_twos" or "three_k"
    n: int
    t: int | None = None  # all_twos only


def tight_instance(spec: TightFamilySpec) -> Instance:
    n = spec.n
    if n < 1:
        raise InstanceError("n must be positive")
    if spec.kind == "all_twos":
        t = spec.t
        if t is None or not 1 <= t <= n // 2 + 1:
            raise InstanceError(f"all_twos needs 1 <= t <= {n // 2 + 1}")
        return Instance.from_weights([2] * n, 2 * t - 1)
    if spec.kind == "three_k":
        k = n // 2
        if 3 * k - 2 < 1:
            raise InstanceError(f"three_k has non-positive weights for n={n}")
        weights = [3 * k] * (n - k - 1) + [3 * k - 2] * (k + 1)
        return Instance.from_weights(weights, 3 * k * k + k - 1)
    raise InstanceError(f"unknown tight family {spec.kind!r}")
