"""Subset sum instances: data model, text/CSV formats and a seeded generator."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Iterator

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class InstanceError(ValueError):
    """Raised for malformed or invalid instance data."""


@dataclass(frozen=True)
class Instance:
    """A subset sum instance in canonical (non-increasing weight) order.

    ``perm[k]`` is the 0-based position in the input of canonical weight ``k``.
    """

    weights: tuple[int, ...]
    capacity: int
    perm: tuple[int, ...]

    def __post_init__(self):
        n = len(self.weights)
        if n == 0:
            raise InstanceError("instance needs at least one weight")
        if any(not isinstance(w, int) or w < 1 for w in self.weights):
            raise InstanceError("weights must be positive integers")
        if not isinstance(self.capacity, int) or self.capacity < 1:
            raise InstanceError("capacity must be a positive integer")
        if any(a < b for a, b in zip(self.weights, self.weights[1:])):
            raise InstanceError("weights must be non-increasing in canonical form")
        if sorted(self.perm) != list(range(n)):
            raise InstanceError("perm must be a permutation of 0..n-1")

    @classmethod
    def from_weights(cls, weights: Iterable[int], capacity: int) -> Instance:
        """Build a canonical instance from weights given in original order."""
        original = tuple(weights)
        for w in original:
            if isinstance(w, bool) or not isinstance(w, int) or w < 1:
                raise InstanceError(f"weight {w!r} is not a positive integer")
        if isinstance(capacity, bool) or not isinstance(capacity, int) or capacity < 1:
            raise InstanceError(f"capacity {capacity!r} is not a positive integer")
        # sorted() is stable, so equal weights keep their input order
        order = sorted(range(len(original)), key=lambda i: -original[i])
        return cls(tuple(original[i] for i in order), capacity, tuple(order))

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    @property
    def original_weights(self) -> tuple[int, ...]:
        out = [0] * self.n
        for k, i in enumerate(self.perm):
            out[i] = self.weights[k]
        return tuple(out)

    def to_original(self, bits: Iterable[int]) -> tuple[int, ...]:
        """Map a canonical-order 0/1 vector back to input order."""
        out = [0] * self.n
        for k, b in enumerate(bits):
            out[self.perm[k]] = b
        return tuple(out)


def parse_instance(text: str) -> Instance:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) != 2:
        raise InstanceError(f"expected 2 non-empty lines, got {len(lines)}")
    head = lines[0].split()
    if len(head) != 2:
        raise InstanceError("first line must be 'n C'")
    try:
        n, capacity = int(head[0]), int(head[1])
        weights = [int(tok) for tok in lines[1].split()]
    except ValueError as exc:
        raise InstanceError(f"non-integer token: {exc}") from None
    if n < 1:
        raise InstanceError("n must be positive")
    if len(weights) != n:
        raise InstanceError(f"header says n={n} but {len(weights)} weights given")
    return Instance.from_weights(weights, capacity)


def format_instance(inst: Instance, canonical: bool = False) -> str:
    weights = inst.weights if canonical else inst.original_weights
    return f"{inst.n} {inst.capacity}\n{' '.join(map(str, weights))}\n"


def parse_instance_list(text: str) -> list[Instance]:
    blocks, current = [], []
    for line in text.splitlines():
        if line.strip():
            current.append(line)
        elif current:
            blocks.append("\n".join(current))
            current = []
    if current:
        blocks.append("\n".join(current))
    return [parse_instance(b) for b in blocks]


def format_instance_list(instances: Iterable[Instance]) -> str:
    return "\n".join(format_instance(inst) for inst in instances)


# -- seeded generation -------------------------------------------------------

def splitmix64_mix(z: int) -> int:
    """The splitmix64 output finalizer."""
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return splitmix64_mix(self.state)

    def __iter__(self) -> Iterator[int]:
        while True:
            yield self.next_u64()


def splitmix64(x: int) -> int:
    """First output of a splitmix64 stream seeded with ``x``."""
    return SplitMix64(x).next_u64()


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    weight_lo: int = 1
    weight_hi: int = 100
    master_seed: int = 0
    instance_count: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise InstanceError("n must be >= 1")
        if not 1 <= self.weight_lo <= self.weight_hi:
            raise InstanceError("need 1 <= weight_lo <= weight_hi")
        if self.instance_count < 1:
            raise InstanceError("instance_count must be >= 1")
        if not 0 <= self.master_seed <= MASK64:
            raise InstanceError("master_seed must fit in 64 bits")

    def instance_seed(self, i: int) -> int:
        return splitmix64((self.master_seed + i) & MASK64)


def generate_instance(cfg: GeneratorConfig, i: int) -> Instance:
    """Instance ``i`` (0-based) of the stream described by ``cfg``."""
    rng = SplitMix64(cfg.instance_seed(i))
    span = cfg.weight_hi - cfg.weight_lo + 1
    weights = [cfg.weight_lo + rng.next_u64() % span for _ in range(cfg.n)]
    capacity = 1 + rng.next_u64() % sum(weights)
    return Instance.from_weights(weights, capacity)


def generate_instances(cfg: GeneratorConfig) -> list[Instance]:
    return [generate_instance(cfg, i) for i in range(cfg.instance_count)]


CSV_COLUMNS = ("id", "seed", "n", "C", "weights")


def instances_to_csv(cfg: GeneratorConfig, instances: list[Instance]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for i, inst in enumerate(instances):
        writer.writerow([i, cfg.instance_seed(i), inst.n, inst.capacity,
                         ";".join(map(str, inst.original_weights))])
    return buf.getvalue()


def instances_from_csv(text: str) -> list[Instance]:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or tuple(reader.fieldnames) != CSV_COLUMNS:
        raise InstanceError(f"CSV header must be {','.join(CSV_COLUMNS)}")
    out = []
    for row in reader:
        weights = [int(w) for w in row["weights"].split(";")]
        if len(weights) != int(row["n"]):
            raise InstanceError(f"row {row['id']}: n does not match weight count")
        out.append(Instance.from_weights(weights, int(row["C"])))
    return out
