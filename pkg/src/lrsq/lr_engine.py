"""Littlewood-Richardson and Kostka coefficients by direct tableau enumeration."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .partition_core import Partition, PartitionTuple, compositions, partitions_of


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    if lam.size() != mu.size() + nu.size() or not lam.contains(mu) or not lam.contains(nu):
        return 0
    if not nu:
        return 1
    # cells of lam/mu in reverse reading order: rows top to bottom, right to left
    cells = [(i, j) for i in range(len(lam)) for j in range(lam[i] - 1, mu.part(i) - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(nu) + 1)  # counts[k] = occurrences of letter k so far (1-based)

    def rec(pos):
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        # row weakly increasing left to right: bounded above by the cell to the right
        hi = filling.get((i, j + 1), len(nu))
        # column strictly increasing downward
        lo = filling[(i - 1, j)] + 1 if (i - 1, j) in filling else 1
        # a letter k can only sit in row >= k-1 (0-based) of a lattice filling
        hi = min(hi, i + 1)
        total = 0
        for k in range(lo, hi + 1):
            if counts[k] >= nu[k - 1]:
                continue
            if k > 1 and counts[k] + 1 > counts[k - 1]:
                continue
            counts[k] += 1
            filling[(i, j)] = k
            total += rec(pos + 1)
            del filling[(i, j)]
            counts[k] -= 1
        return total

    return rec(0)


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """c^lam_{mu nu}: LR tableaux of shape lam/mu and content nu."""
    return _lr(Partition(lam), Partition(mu), Partition(nu))


def lr_coefficient_sym(lam, mu, nu) -> int:
    """Same value, querying with the smaller skew shape first (commutativity)."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if mu.size() < nu.size():
        mu, nu = nu, mu
    return _lr(lam, mu, nu)


@lru_cache(maxsize=None)
def _expand_product(mus: PartitionTuple) -> tuple[tuple[Partition, int], ...]:
    # prefix recursion so tuples sharing a prefix share work
    if not mus:
        return ((Partition(), 1),)
    *head, last = mus
    prev = _expand_product(PartitionTuple(head))
    out: dict[Partition, int] = {}
    for kappa, c in prev:
        size = kappa.size() + last.size()
        for lam in partitions_of(size, max_length=len(kappa) + len(last)):
            k = lr_coefficient_sym(lam, kappa, last)
            if k:
                out[lam] = out.get(lam, 0) + c * k
    return tuple(sorted(out.items(), reverse=True))


def product_expansion(mus: Iterable[Sequence[int]]) -> dict[Partition, int]:
    """lam -> c^lam_mus for the product s_{mu1} s_{mu2} ... s_{mum}."""
    return dict(_expand_product(PartitionTuple(mus)))


def lr_multi(lam: Sequence[int], mus: Iterable[Sequence[int]]) -> int:
    """Multiplicity of F^lam in the tensor product of the F^{mu(j)}.

    A sum over chains of intermediate shapes of products of two-factor
    coefficients.
    """
    return product_expansion(mus).get(Partition(lam), 0)


@lru_cache(maxsize=None)
def _kostka(lam: Partition, nu: tuple[int, ...]) -> int:
    if lam.size() != sum(nu):
        return 0
    cells = [(i, j) for i in range(len(lam)) for j in range(lam[i])]
    filling: dict[tuple[int, int], int] = {}
    remaining = list(nu)
    letters = len(nu)

    def rec(pos):
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        lo = max(filling.get((i, j - 1), 1), filling[(i - 1, j)] + 1 if i else 1)
        total = 0
        for k in range(lo, letters + 1):
            if remaining[k - 1]:
                remaining[k - 1] -= 1
                filling[(i, j)] = k
                total += rec(pos + 1)
                del filling[(i, j)]
                remaining[k - 1] += 1
        return total

    return rec(0)


def kostka(lam: Sequence[int], nu: Sequence[int]) -> int:
    """K_{lam nu}: semistandard tableaux of shape lam and content nu, filled cell by cell."""
    return _kostka(Partition(lam), tuple(nu))


def _tuples_of_partitions(profile: Sequence[int], bounds: Sequence[int | None]):
    if not profile:
        yield ()
        return
    head = partitions_of(profile[0], max_length=bounds[0])
    for rest in _tuples_of_partitions(profile[1:], bounds[1:]):
        for mu in head:
            yield (mu,) + rest


def profile_lr_squared(profile: Sequence[int], lam_bound: int | None = None,
                       mu_bounds: Sequence[int | None] | None = None) -> int:
    """sum over lam and mus with |mu(j)| = profile[j] of (c^lam_mus)^2, with length bounds."""
    profile = tuple(profile)
    if mu_bounds is None:
        mu_bounds = (None,) * len(profile)
    if len(mu_bounds) != len(profile):
        raise ValueError("one length bound per tensor factor is required")
    if lam_bound is None and all(b is None for b in mu_bounds):
        return _unbounded_profile_sum(tuple(sorted(p for p in profile if p)))
    total = 0
    for mus in _tuples_of_partitions(profile, tuple(mu_bounds)):
        for lam, c in _expand_product(PartitionTuple(mus)):
            if lam_bound is None or len(lam) <= lam_bound:
                total += c * c
    return total


@lru_cache(maxsize=None)
def _unbounded_profile_sum(profile: tuple[int, ...]) -> int:
    # empty slots are trivial factors and the product is commutative, so the sorted
    # nonzero profile is a complete cache key
    total = 0
    for mus in _tuples_of_partitions(profile, (None,) * len(profile)):
        total += sum(c * c for _, c in _expand_product(PartitionTuple(mus)))
    return total


def sum_lr_squared(d: int, m: int, degree_profile: Sequence[int] | None = None,
                   length_bounds: Sequence[int | None] | None = None) -> int:
    """sum (c^lam_mus)^2 over lam |- d and m-tuples mus with |mus| = d.

    degree_profile fixes |mu(j)|; without it every weak profile of d into m
    parts is summed.  length_bounds is (n, n_1, ..., n_m): n bounds l(lam),
    n_j bounds l(mu(j)); a shorter tuple bounds only lam.
    """
    if m < 1:
        raise ValueError("m must be positive")
    lam_bound, mu_bounds = None, None
    if length_bounds:
        lam_bound = length_bounds[0]
        if len(length_bounds) > 1:
            mu_bounds = tuple(length_bounds[1:])
            if len(mu_bounds) != m:
                raise ValueError(f"expected {m} tensor-factor bounds, got {len(mu_bounds)}")
    if degree_profile is not None:
        if len(degree_profile) != m:
            raise ValueError(f"degree profile must have {m} entries")
        if sum(degree_profile) != d:
            raise ValueError(f"degree profile {tuple(degree_profile)} does not sum to {d}")
        return profile_lr_squared(degree_profile, lam_bound, mu_bounds)
    return sum(profile_lr_squared(p, lam_bound, mu_bounds) for p in compositions(d, m))
