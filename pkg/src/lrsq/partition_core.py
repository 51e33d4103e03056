"""Integer partitions, type vectors and the centralizer order z_lambda."""

from __future__ import annotations

from collections import Counter
from math import factorial, prod
from typing import Iterable, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are accepted on input and stripped, so ``Partition((2, 1, 0))
    == Partition((2, 1))``.  The empty tuple is the zero partition.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"partition has a negative part: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition is not weakly decreasing: {parts}")
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        return super().__new__(cls, parts[:end])

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        return ",".join(map(str, self))

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero past the end."""
        return self[i] if i < len(self) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self):
            raise ValueError(f"cannot pad {self} to length {length}")
        return tuple(self) + (0,) * (length - len(self))

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def contains(self, other: Sequence[int]) -> bool:
        """Young diagram containment, other <= self cellwise."""
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def dominates(self, other: Sequence[int]) -> bool:
        if sum(self) != sum(other):
            return False
        a = b = 0
        for i in range(max(len(self), len(other))):
            a += self.part(i)
            b += other[i] if i < len(other) else 0
            if a < b:
                return False
        return True


class PartitionTuple(tuple):
    """Finite sequence of partitions; empty entries are allowed."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[Iterable[int]] = ()):
        return super().__new__(cls, (e if isinstance(e, Partition) else Partition(e) for e in entries))

    def __repr__(self):
        return f"PartitionTuple({tuple(tuple(e) for e in self)})"

    def __str__(self):
        return ";".join(str(e) for e in self)

    def total_size(self) -> int:
        return sum(e.size() for e in self)

    def sizes(self) -> tuple[int, ...]:
        return tuple(e.size() for e in self)


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,1"``; the empty string and ``"0"`` give the empty partition."""
    text = text.strip()
    if text in ("", "0"):
        return Partition()
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}: parts must be integers") from None
    return Partition(parts)


def parse_partition_tuple(text: str) -> PartitionTuple:
    """Parse ``"2,1;3;1,1"`` into a PartitionTuple."""
    return PartitionTuple(parse_partition(chunk) for chunk in text.split(";"))


def partitions_of(n: int, max_length: int | None = None, max_part: int | None = None) -> list[Partition]:
    """All partitions of n satisfying the bounds, in reverse-lexicographic order.

    >>> partitions_of(3)
    [Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    out: list[Partition] = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if max_length is not None and len(prefix) >= max_length:
            return
        for p in range(min(remaining, cap), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n if max_part is None else max_part, [])
    return out


def compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    """Weak compositions of total into exactly ``parts`` non-negative entries, lex order."""
    if parts == 0:
        return [()] if total == 0 else []
    if parts == 1:
        return [(total,)]
    return [(first,) + rest for first in range(total + 1) for rest in compositions(total - first, parts - 1)]


def type_vector(lam: Sequence[int]) -> tuple[int, ...]:
    """Multiplicities (v_1, v_2, ...) of the parts of lam; ``()`` for the empty partition."""
    lam = Partition(lam)
    if not lam:
        return ()
    counts = Counter(lam)
    return tuple(counts.get(i, 0) for i in range(1, lam[0] + 1))


def from_type_vector(v: Sequence[int]) -> Partition:
    return Partition(i for i in range(len(v), 0, -1) for _ in range(v[i - 1]))


def z_lambda(lam: Sequence[int]) -> int:
    """Order of the centralizer of a permutation of cycle type lam."""
    return prod(factorial(v) * i**v for i, v in enumerate(type_vector(lam), start=1))


def conjugacy_class_size(lam: Sequence[int]) -> int:
    lam = Partition(lam)
    return factorial(lam.size()) // z_lambda(lam)


def concat(mus: Iterable[Iterable[int]]) -> Partition:
    """Sorted multiset union of the parts of every entry."""
    return Partition(sorted((p for mu in mus for p in mu), reverse=True))


def hook_length_count(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    lam = Partition(lam)
    conj = lam.conjugate()
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(lam.size()) // hooks
