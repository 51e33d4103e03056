"""Necklaces, colored conjugacy classes of S_d, and conjugacy classes of GL_m(q)."""

from __future__ import annotations

from itertools import permutations, product
from typing import Sequence

import numpy as np

from .hilbert_identities import IdentityReport, compare
from .lr_engine import sum_lr_squared
from .power_series import TruncatedSeries, inverse_one_minus, product_over_k

ORBIT_MAX_DEGREE = 8
GLQ_MAX_MATRICES = 3**9


def totient(r: int) -> int:
    """Euler's phi by trial factorization."""
    if r < 1:
        raise ValueError("r must be positive")
    result, rest, p = r, r, 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def divisors(k: int) -> list[int]:
    return [r for r in range(1, k + 1) if k % r == 0]


def necklace_count(k: int, m: int) -> int:
    """N_k(m) = (1/k) sum_{r | k} phi(r) m^(k/r): k-bead necklaces in m colors up to rotation."""
    if k < 1 or m < 1:
        raise ValueError("k and m must be positive")
    total = sum(totient(r) * m ** (k // r) for r in divisors(k))
    if total % k:
        raise ArithmeticError(f"necklace sum {total} not divisible by {k}")
    return total // k


def necklace_count_brute(k: int, m: int) -> int:
    """Rotation orbits of the m^k colored strings, by canonical representative."""
    return len({min(s[i:] + s[:i] for i in range(k)) for s in product(range(m), repeat=k)})


def eta_series(m: int, D: int) -> TruncatedSeries:
    """prod_k (1/(1 - t^k))^{N_k(m)}: unions of m-colored necklaces counted by beads."""
    def factor(k):
        return inverse_one_minus(TruncatedSeries.variable(0, 1, D, k)) ** necklace_count(k, m)

    return product_over_k(factor, D)


# colored conjugation orbits

def _lehmer_rank(perm: Sequence[int]) -> int:
    n = len(perm)
    rank = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if perm[j] < perm[i])
        rank = rank * (n - i) + smaller
    return rank


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)

    def count(self) -> int:
        return sum(1 for i, p in enumerate(self.parent) if i == p)


def young_generators(composition: Sequence[int]) -> list[tuple[int, int]]:
    """Adjacent transpositions inside each contiguous block of the composition."""
    gens, start = [], 0
    for size in composition:
        gens.extend((i, i + 1) for i in range(start, start + size - 1))
        start += size
    return gens


def orbit_count_brute(composition: Sequence[int]) -> int:
    """Orbits of S_d under conjugation by the Young subgroup S_d1 x ... x S_dm."""
    composition = tuple(composition)
    if any(x < 0 for x in composition):
        raise ValueError("composition entries must be non-negative")
    d = sum(composition)
    if d > ORBIT_MAX_DEGREE:
        raise ValueError(f"brute-force orbit count supports d <= {ORBIT_MAX_DEGREE}, got {d}")
    perms = list(permutations(range(d)))
    uf = UnionFind(len(perms))
    for a, b in young_generators(composition):
        for idx, sigma in enumerate(perms):
            # g sigma g^{-1} for the transposition g = (a b): relabel a <-> b on both sides
            swap = list(range(d))
            swap[a], swap[b] = b, a
            conj = [0] * d
            for x in range(d):
                conj[swap[x]] = swap[sigma[x]]
            uf.union(idx, _lehmer_rank(conj))
    return uf.count()


def orbit_count_lr(composition: Sequence[int]) -> int:
    """sum over lam of (c^lam_mus)^2 with mu(j) |- d_j."""
    composition = tuple(composition)
    return sum_lr_squared(sum(composition), len(composition), composition)


def partitions_by_length_series(D: int) -> TruncatedSeries:
    """prod_k 1/(1 - q t^k) in (q, t); q^l t^n counts partitions of n with exactly l parts.

    Truncated at total degree 2D, which keeps every term with t-degree <= D.
    """
    names = ("q", "t")
    total = 2 * D

    def factor(k):
        return inverse_one_minus(TruncatedSeries.monomial((1, k), 2, total, names=names))

    return product_over_k(factor, total)


def glq_class_series(q: int, D: int) -> TruncatedSeries:
    """prod_k (1 - t^k)/(1 - q t^k); q is used as a formal integer."""
    if q < 2:
        raise ValueError("q must be at least 2")

    def factor(k):
        tk = TruncatedSeries.variable(0, 1, D, k)
        return (1 - tk) * inverse_one_minus(tk * q)

    return product_over_k(factor, D)


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q**0.5) + 1))


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank over F_p by Gaussian elimination."""
    a = np.array(matrix, dtype=np.int64) % p
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if a[r, c]), None)
        if pivot is None:
            continue
        a[[rank, pivot]] = a[[pivot, rank]]
        a[rank] = (a[rank] * pow(int(a[rank, c]), -1, p)) % p
        for r in range(rows):
            if r != rank and a[r, c]:
                a[r] = (a[r] - a[r, c] * a[rank]) % p
        rank += 1
    return rank


def general_linear_group(m: int, q: int) -> np.ndarray:
    """All invertible m x m matrices over F_q (q prime), shape (|GL_m(q)|, m, m)."""
    if not _is_prime(q):
        raise ValueError(f"q={q} must be prime (prime-power fields are not supported)")
    if m < 1 or q ** (m * m) > GLQ_MAX_MATRICES:
        raise ValueError(f"brute force needs q^(m^2) <= 3^9 = {GLQ_MAX_MATRICES}, got q={q}, m={m}")
    mats = np.array(list(product(range(q), repeat=m * m)), dtype=np.int64).reshape(-1, m, m)
    keep = [rank_mod_p(a, q) == m for a in mats]
    return mats[np.array(keep)]


def glq_class_count_brute(m: int, q: int) -> int:
    """Number of conjugacy classes of GL_m(F_q) by Burnside: commuting ordered pairs / |G|."""
    if m > 3 or q > 5:
        raise ValueError(f"brute force supports m <= 3 and prime q <= 5, got m={m}, q={q}")
    group = general_linear_group(m, q)
    commuting = 0
    for a in group:
        left = np.einsum("ij,njk->nik", a, group) % q
        right = np.einsum("nij,jk->nik", group, a) % q
        commuting += int(np.all(left == right, axis=(1, 2)).sum())
    order = len(group)
    if commuting % order:
        raise ArithmeticError(f"{commuting} commuting pairs not divisible by |G| = {order}")
    return commuting // order


def eta_glq_identity(q: int, D: int) -> IdentityReport:
    """prod(1 - t^k)/(1 - q t^k) = prod(1 - t^k) * eta_q(t) = prod (1/(1 - t^k))^{N_k(q) - 1}."""
    classes = glq_class_series(q, D)
    euler = product_over_k(lambda k: 1 - TruncatedSeries.variable(0, 1, D, k), D)
    via_eta = euler * eta_series(q, D)

    def factor(k):
        return inverse_one_minus(TruncatedSeries.variable(0, 1, D, k)) ** (necklace_count(k, q) - 1)

    via_necklaces = product_over_k(factor, D)
    return compare(classes, via_eta, necklace_product=via_necklaces)


def weak_composition_lr_sum(m: int, d: int) -> int:
    """Sum of orbit_count_lr over all weak m-compositions of d."""
    return sum_lr_squared(d, m)
