"""Type A root data, Lusztig's q-analog of Kostant's partition function and
Hesselink's graded multiplicities of irreducibles in the harmonic polynomials.

Graded multiplicities are plain dicts ``{degree: coefficient}`` with zero
entries dropped.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import permutations
from math import prod
from typing import Iterable, Sequence

log = logging.getLogger(__name__)

Weight = tuple[int, ...]

MAX_RANK = 10


class NotDominantError(ValueError):
    pass


def _check_n(n: int):
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_RANK:
        raise ValueError(f"Weyl group sums are limited to n <= {MAX_RANK} ({n}! terms requested)")


def _dominant(n: int, lam: Sequence[int]) -> Weight:
    lam = tuple(int(x) for x in lam)
    if len(lam) != n:
        raise ValueError(f"weight {lam} does not have {n} coordinates")
    if any(lam[i] < lam[i + 1] for i in range(n - 1)):
        raise NotDominantError(f"weight {lam} is not dominant (coordinates must weakly decrease)")
    return lam


def positive_roots(n: int) -> list[Weight]:
    """e_i - e_j for i < j, ordered by (i, j)."""
    if n < 1:
        raise ValueError("n must be positive")
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            v = [0] * n
            v[i], v[j] = 1, -1
            roots.append(tuple(v))
    return roots


def _add_poly(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + sign * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


@lru_cache(maxsize=None)
def _kostant(n: int, xi: Weight, k_max: int) -> tuple[tuple[int, int], ...]:
    roots = positive_roots(n)

    # residual state is kept as prefix sums s_p = xi_1 + ... + xi_p (p < n);
    # root e_i - e_j adds 1 to s_p for i <= p < j, so feasibility is s >= 0
    @lru_cache(maxsize=None)
    def rec(idx: int, sums: tuple[int, ...], budget: int) -> tuple[tuple[int, int], ...]:
        if not any(sums):
            return ((0, 1),)
        if idx == len(roots) or budget == 0:
            return ()
        i = roots[idx].index(1)
        j = roots[idx].index(-1)
        cap = min(sums[i:j])
        out: dict[int, int] = {}
        cur = list(sums)
        for c in range(0, min(cap, budget) + 1):
            for deg, v in rec(idx + 1, tuple(cur), budget - c):
                out[deg + c] = out.get(deg + c, 0) + v
            for p in range(i, j):
                cur[p] -= 1
        return tuple(sorted(out.items()))

    sums = []
    s = 0
    for x in xi[:-1]:
        s += x
        sums.append(s)
    if sum(xi) != 0 or any(v < 0 for v in sums):
        return ()
    return rec(0, tuple(sums), k_max)


def kostant_partition_q(n: int, xi: Sequence[int], k_max: int) -> dict[int, int]:
    """Coefficient of t^k: number of multisets of k positive roots summing to xi (k <= k_max).

    Zero whenever xi is outside the positive root cone (coordinate sum nonzero
    or a negative prefix sum).
    """
    xi = tuple(int(x) for x in xi)
    if len(xi) != n:
        raise ValueError(f"weight {xi} does not have {n} coordinates")
    if n == 1:
        return {0: 1} if xi == (0,) else {}
    return dict(_kostant(n, xi, k_max))


def _sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
    return -1 if inversions % 2 else 1


def weyl_orbit_terms(n: int, lam: Sequence[int]) -> list[tuple[int, Weight]]:
    """Pairs ((-1)^{l(w)}, w(lam + rho) - rho) over w in S_n, identity first.

    Uses the integer shift (n-1, ..., 1, 0) in place of rho; the difference is
    a multiple of (1, ..., 1), which S_n fixes, so w(lam + rho) - rho is unchanged.
    """
    _check_n(n)
    lam = _dominant(n, lam)
    shift = tuple(range(n - 1, -1, -1))
    shifted = tuple(a + b for a, b in zip(lam, shift))
    terms = []
    for perm in permutations(range(n)):
        moved = tuple(shifted[perm[i]] for i in range(n))
        terms.append((_sign(perm), tuple(a - b for a, b in zip(moved, shift))))
    return terms


def hesselink_multiplicity(n: int, lam: Sequence[int], d_max: int) -> dict[int, int]:
    """m_lam(t) = sum_w (-1)^{l(w)} P_t(w(lam + rho) - rho), through degree d_max."""
    terms = weyl_orbit_terms(n, lam)
    if sum(lam) != 0:
        log.warning("weight %s has nonzero coordinate sum; it does not occur in the harmonics", tuple(lam))
        return {}
    out: dict[int, int] = {}
    for sign, xi in terms:
        out = _add_poly(out, kostant_partition_q(n, xi, d_max), sign)
    return out


def weyl_dimension(n: int, lam: Sequence[int]) -> int:
    """dim L(lam) = prod_{i<j} (lam_i - lam_j + j - i) / (j - i)."""
    lam = _dominant(n, lam)
    num = prod(lam[i] - lam[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den


def spherical_hilbert(n: int, weights: Iterable[Sequence[int]], d_max: int) -> dict[int, int]:
    """sum_{lam in S} m_lam(t): the Hilbert series of K-invariant harmonics for a spherical set S."""
    out: dict[int, int] = {}
    for lam in weights:
        out = _add_poly(out, hesselink_multiplicity(n, lam, d_max))
    return out


def dominant_weights(n: int, low: int, high: int, total: int | None = 0) -> list[Weight]:
    """Dominant weights with coordinates in [low, high] and, if given, the stated coordinate sum."""
    out = []

    def rec(prefix, cap):
        if len(prefix) == n:
            if total is None or sum(prefix) == total:
                out.append(tuple(prefix))
            return
        for x in range(cap, low - 1, -1):
            rec(prefix + [x], x)

    rec([], high)
    return out


def parse_weight(text: str) -> Weight:
    try:
        return tuple(int(x) for x in text.strip().split(","))
    except ValueError:
        raise ValueError(f"malformed weight {text!r}: expected comma-separated integers") from None
