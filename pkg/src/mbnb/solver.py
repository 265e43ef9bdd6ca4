"""The majoritarian branch-and-bound (MBnB) algorithm for subset sum.

Weights are canonically sorted, so branching on the heaviest free variable
is branching on the lowest-index one and every subproblem is a prefix
assignment. Tuples reported here (leaf tuples, tree labels) use canonical
variable order; only ``optimal_solution`` is mapped back to input order.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field

from .instances import Instance
from .tuples import BinaryTuple

DEFAULT_MAX_N = 40


class InvariantViolation(AssertionError):
    """An algorithm invariant failed: a bug or a counterexample."""


def max_n() -> int:
    return int(os.environ.get("MBNB_MAX_N", DEFAULT_MAX_N))


@dataclass(frozen=True)
class PrefixAssignment:
    """Variables 1..depth fixed to ``values``; the rest free."""

    values: tuple[int, ...]
    fixed_one_weight: int
    fixed_zero_weight: int

    @property
    def depth(self) -> int:
        return len(self.values)

    @classmethod
    def of(cls, values, inst: Instance) -> PrefixAssignment:
        values = tuple(values)
        if len(values) > inst.n:
            raise ValueError("prefix longer than the instance")
        ones = sum(w for w, v in zip(inst.weights, values) if v)
        zeros = sum(w for w, v in zip(inst.weights, values) if not v)
        return cls(values, ones, zeros)


def check_c0(p: PrefixAssignment, inst: Instance) -> bool:
    return p.fixed_one_weight > inst.capacity


def check_c1(p: PrefixAssignment, inst: Instance) -> bool:
    return p.fixed_zero_weight >= inst.total_weight - inst.capacity


def complement(p: PrefixAssignment, fill: int, n: int) -> BinaryTuple:
    if fill not in (0, 1):
        raise ValueError("fill must be 0 or 1")
    return BinaryTuple.from_seq(p.values + (fill,) * (n - p.depth))


@dataclass(frozen=True)
class TreeNode:
    id: int
    parent: int | None
    depth: int
    bits: int  # fixed prefix, free positions zero
    kind: str  # "branch", "C0" or "C1"


@dataclass
class SolveReport:
    n: int
    optimal_value: int
    optimal_solution: tuple[int, ...]
    node_count: int
    leaf_count: int
    c0_leaves: int
    c1_leaves: int
    zero_tuples: frozenset[BinaryTuple] | None = None
    one_tuples: frozenset[BinaryTuple] | None = None
    tree: list[TreeNode] | None = field(default=None, repr=False)


def solve(inst: Instance, collect_tuples: bool = False, export_tree: bool = False,
          order: str = "dfs") -> SolveReport:
    """Run MBnB to completion and account for every processed subproblem."""
    if order not in ("dfs", "bfs"):
        raise ValueError(f"unknown order {order!r}")
    n = inst.n
    if n > max_n():
        raise ValueError(f"n={n} exceeds the solver cap {max_n()} (MBNB_MAX_N)")
    w = inst.weights
    cap = inst.capacity
    total = inst.total_weight
    slack = total - cap
    free_mask = [(1 << (n - d)) - 1 for d in range(n + 1)]

    best_value, best_bits = 0, 0
    nodes = c0 = c1 = 0
    zeros_found: list[int] = []
    ones_found: list[int] = []
    tree: list[TreeNode] = []

    # (depth, prefix bits, fixed-one weight, fixed-zero weight, parent id)
    frontier = deque([(0, 0, 0, 0, None)])
    pop = frontier.pop if order == "dfs" else frontier.popleft
    push = frontier.append
    while frontier:
        depth, bits, ones, zeros, parent = pop()
        node_id = nodes
        nodes += 1
        is_c0 = ones > cap
        is_c1 = zeros >= slack
        if is_c0:
            if is_c1:
                raise InvariantViolation(f"node {bits:0{n}b}@{depth} satisfies C0 and C1")
            c0 += 1
            if collect_tuples:
                zeros_found.append(bits)
            kind = "C0"
        elif is_c1:
            c1 += 1
            filled = bits | free_mask[depth]
            if collect_tuples:
                ones_found.append(filled)
            if total - zeros > best_value:
                best_value, best_bits = total - zeros, filled
            kind = "C1"
        else:
            if depth == n:
                raise InvariantViolation(f"full assignment {bits:0{n}b} is neither C0 nor C1")
            wi = w[depth]
            bit = 1 << (n - depth - 1)
            tag = node_id if export_tree else None
            push((depth + 1, bits, ones, zeros + wi, tag))
            push((depth + 1, bits | bit, ones + wi, zeros, tag))
            kind = "branch"
        if export_tree:
            tree.append(TreeNode(node_id, parent, depth, bits, kind))

    leaves = c0 + c1
    if nodes != 2 * leaves - 1:
        raise InvariantViolation(f"node count {nodes} != 2*{leaves}-1")
    canonical = [(best_bits >> (n - 1 - k)) & 1 for k in range(n)]
    report = SolveReport(
        n=n,
        optimal_value=best_value,
        optimal_solution=inst.to_original(canonical),
        node_count=nodes,
        leaf_count=leaves,
        c0_leaves=c0,
        c1_leaves=c1,
    )
    if collect_tuples:
        report.zero_tuples = frozenset(BinaryTuple(n, b) for b in zeros_found)
        report.one_tuples = frozenset(BinaryTuple(n, b) for b in ones_found)
    if export_tree:
        report.tree = tree
    return report


def export_tree(report: SolveReport) -> str:
    """Graphviz DOT text for a report produced with ``export_tree=True``."""
    if report.tree is None:
        raise ValueError("report has no tree; solve with export_tree=True")
    n = report.n
    lines = ["digraph mbnb {", "  node [shape=box, fontname=monospace];"]
    for node in report.tree:
        prefix = format(node.bits >> (n - node.depth), f"0{node.depth}b") if node.depth else ""
        label = prefix + "*" * (n - node.depth)
        if node.kind == "C0":
            label += f"\\nC0 {node.bits:0{n}b}"
        elif node.kind == "C1":
            filled = node.bits | ((1 << (n - node.depth)) - 1)
            label += f"\\nC1 {filled:0{n}b}"
        lines.append(f'  n{node.id} [label="{label}"];')
    for node in report.tree:
        if node.parent is not None:
            value = (node.bits >> (n - node.depth)) & 1
            lines.append(f'  n{node.parent} -> n{node.id} [label="x_{node.depth}={value}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
