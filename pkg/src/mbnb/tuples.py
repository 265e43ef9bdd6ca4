"""Binary tuples of B^n and the component-matching machinery on them.

A tuple is stored as an ``n``-bit integer with component 1 in the most
significant position, so ``BinaryTuple.from_str("011")`` has ``bits == 3``.
All component indices exposed here are 1-based.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_N = 64


@dataclass(frozen=True)
class BinaryTuple:
    n: int
    bits: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise ValueError(f"tuple length {self.n} outside 0..{MAX_N}")
        if not 0 <= self.bits < (1 << self.n) or (self.n == 0 and self.bits):
            raise ValueError(f"bits {self.bits} do not fit in length {self.n}")

    @classmethod
    def from_seq(cls, values: Iterable[int]) -> BinaryTuple:
        bits, n = 0, 0
        for v in values:
            if v not in (0, 1):
                raise ValueError(f"component {v!r} is not 0 or 1")
            bits = (bits << 1) | v
            n += 1
        return cls(n, bits)

    @classmethod
    def from_str(cls, s: str) -> BinaryTuple:
        s = s.strip()
        if s and set(s) - {"0", "1"}:
            raise ValueError(f"not a bitstring: {s!r}")
        return cls(len(s), int(s, 2) if s else 0)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.n}b") if self.n else ""

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[int]:
        for i in range(1, self.n + 1):
            yield self.component(i)

    def component(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"component index {i} outside 1..{self.n}")
        return (self.bits >> (self.n - i)) & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def flip(self, i: int) -> BinaryTuple:
        self.component(i)
        return BinaryTuple(self.n, self.bits ^ (1 << (self.n - i)))


def _same_length(a: BinaryTuple, b: BinaryTuple) -> None:
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")


def leq(a: BinaryTuple, b: BinaryTuple) -> bool:
    """Componentwise order: a_i <= b_i for every i."""
    _same_length(a, b)
    return a.bits & ~b.bits == 0


def comparable(a: BinaryTuple, b: BinaryTuple) -> bool:
    return leq(a, b) or leq(b, a)


def all_tuples(n: int) -> Iterator[BinaryTuple]:
    for bits in range(1 << n):
        yield BinaryTuple(n, bits)


def weight_class(n: int, k: int) -> list[BinaryTuple]:
    """All tuples of B^n with exactly ``k`` ones, in increasing bit order."""
    if not 0 <= k <= n:
        return []
    out = []
    for ones in combinations(range(n), k):
        bits = 0
        for p in ones:
            bits |= 1 << p
        out.append(BinaryTuple(n, bits))
    return sorted(out, key=lambda t: t.bits)


def gamma(n: int, s: int) -> BinaryTuple:
    """n - s zeros followed by s ones."""
    if not 0 <= s <= n:
        raise ValueError(f"s={s} outside 0..{n}")
    return BinaryTuple(n, (1 << s) - 1)


# -- segments and component matching -----------------------------------------

class Balance(enum.Enum):
    BALANCED = "balanced"
    ZERO_DOMINATED = "zero_dominated"
    ONE_DOMINATED = "one_dominated"


def cyclic_indices(n: int, i: int, j: int) -> list[int]:
    """Indices of the segment a[i:j], wrapping past n when i > j."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"segment [{i}:{j}] outside 1..{n}")
    if i <= j:
        return list(range(i, j + 1))
    return list(range(i, n + 1)) + list(range(1, j + 1))


def _classify(ones: int, length: int) -> Balance:
    zeros = length - ones
    if zeros == ones:
        return Balance.BALANCED
    return Balance.ZERO_DOMINATED if zeros > ones else Balance.ONE_DOMINATED


def segment_balance(a: BinaryTuple, i: int, j: int) -> Balance:
    idx = cyclic_indices(a.n, i, j)
    return _classify(sum(a.component(k) for k in idx), len(idx))


@dataclass(frozen=True)
class ComponentMatching:
    """Connected (0, 1) pairs plus the leftover unbound components.

    Each pair is ``(i, j)`` with a 0 at ``i`` connected to a 1 at ``j``.
    """

    pairs: frozenset[tuple[int, int]]
    unbound_ones: frozenset[int]
    unbound_zeros: frozenset[int]

    @property
    def bound(self) -> frozenset[int]:
        return frozenset(k for p in self.pairs for k in p)


def _match_bits(bits: int, n: int) -> tuple[list[tuple[int, int]], list[int], list[int]]:
    pairs = []
    open_zeros: list[int] = []
    stray_ones: list[int] = []
    for pos in range(1, n + 1):
        if (bits >> (n - pos)) & 1:
            if open_zeros:
                pairs.append((open_zeros.pop(), pos))
            else:
                stray_ones.append(pos)
        else:
            open_zeros.append(pos)
    # leftovers read 1..1 0..0 left to right; close them across the wrap
    while open_zeros and stray_ones:
        pairs.append((open_zeros.pop(), stray_ones.pop(0)))
    return pairs, stray_ones, open_zeros


def match_components(a: BinaryTuple) -> ComponentMatching:
    pairs, ones, zeros = _match_bits(a.bits, a.n)
    return ComponentMatching(frozenset(pairs), frozenset(ones), frozenset(zeros))


def unbound_ones(a: BinaryTuple) -> frozenset[int]:
    return frozenset(_match_bits(a.bits, a.n)[1])


def in_b_plus(a: BinaryTuple) -> bool:
    """True iff the tuple has more ones than zeros."""
    return 2 * a.weight() > a.n


def project_D(a: BinaryTuple) -> BinaryTuple:
    """Zero out the unbound 1-component of largest index (defined on B+^n only)."""
    if not in_b_plus(a):
        raise ValueError(f"{a} has weight {a.weight()} <= n/2; projection undefined")
    free = _match_bits(a.bits, a.n)[1]
    if not free:
        raise AssertionError(f"{a} in B+^n has no unbound 1-component")
    return a.flip(max(free))


# -- antichains ---------------------------------------------------------------

def is_antichain(ts: Iterable[BinaryTuple]) -> bool:
    items = list(ts)
    for a, b in combinations(items, 2):
        _same_length(a, b)
        if a == b or comparable(a, b):
            return False
    return True


def precedes(first: Iterable[BinaryTuple], second: Iterable[BinaryTuple]) -> bool:
    """T' < T'': no tuple of ``first`` is >= a tuple of ``second``."""
    second = list(second)
    return not any(leq(b, a) for a in first for b in second)


@dataclass(frozen=True)
class AntichainPair:
    first: frozenset[BinaryTuple]
    second: frozenset[BinaryTuple]

    def __init__(self, first: Iterable[BinaryTuple] = (), second: Iterable[BinaryTuple] = ()):
        object.__setattr__(self, "first", frozenset(first))
        object.__setattr__(self, "second", frozenset(second))

    @property
    def cardinality(self) -> int:
        return len(self.first) + len(self.second)

    def tuples(self) -> frozenset[BinaryTuple]:
        return self.first | self.second

    def length(self) -> int | None:
        lengths = {t.n for t in self.tuples()}
        if len(lengths) > 1:
            raise ValueError(f"mixed tuple lengths {sorted(lengths)}")
        return lengths.pop() if lengths else None


def _is_valid_pair(p: AntichainPair) -> bool:
    try:
        p.length()
    except ValueError:
        return False
    return is_antichain(p.first) and is_antichain(p.second) and precedes(p.first, p.second)


def pair_in_As(p: AntichainPair, s: int, n: int | None = None) -> bool:
    """Membership in the family of antichain pairs whose first part holds gamma_s."""
    n = p.length() if n is None else n
    if n is None:
        return False
    if 2 * s <= n:
        raise ValueError(f"s={s} must exceed n/2={n / 2}")
    if s > n or gamma(n, s) not in p.first:
        return False
    return _is_valid_pair(p)


def pair_in_Apt(p: AntichainPair, t: int) -> bool:
    """Membership in the family of antichain pairs with all weights <= t."""
    if any(x.weight() > t for x in p.tuples()):
        return False
    return _is_valid_pair(p)


def extremal_pair_As(n: int, s: int) -> AntichainPair:
    """Maximum-cardinality pair containing gamma_s: middle layers minus gamma's down-set."""
    if not n / 2 < s <= n:
        raise ValueError(f"need n/2 < s <= n, got n={n}, s={s}")
    g = gamma(n, s)
    half = n // 2
    lower = [x for x in weight_class(n, half) if not comparable(x, g)]
    upper = [x for x in weight_class(n, half + 1) if not comparable(x, g)]
    return AntichainPair([g, *lower], upper)


def extremal_pair_Apt(n: int, t: int) -> AntichainPair:
    if not 1 <= t <= n // 2 + 1:
        raise ValueError(f"need 1 <= t <= {n // 2 + 1}, got t={t}")
    return AntichainPair(weight_class(n, t - 1), weight_class(n, t))


def format_antichain_pair(p: AntichainPair) -> str:
    """Bitstrings one per line; ``--`` separates the two antichains."""
    first = sorted(p.first, key=lambda t: t.bits)
    second = sorted(p.second, key=lambda t: t.bits)
    return "\n".join([*map(str, first), "--", *map(str, second)]) + "\n"


def parse_antichain_pair(text: str) -> AntichainPair:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if lines.count("--") != 1:
        raise ValueError("antichain pair dump needs exactly one '--' separator")
    cut = lines.index("--")
    return AntichainPair(map(BinaryTuple.from_str, lines[:cut]),
                         map(BinaryTuple.from_str, lines[cut + 1:]))
