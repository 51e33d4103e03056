"""Symmetric functions in the monomial basis, with exact integer coefficients.

This module is deliberately independent of :mod:`lrsq.lr_engine`: Schur
functions are built from semistandard tableaux counted as chains of
horizontal strips, and Schur coefficients are read off by unitriangular
elimination.  The LR engine is checked against it.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Mapping, Sequence

from .partition_core import Partition, partitions_of


class SymFunc:
    """Homogeneous symmetric function sum_delta coeffs[delta] * m_delta."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Mapping[Sequence[int], int] | None = None):
        self.degree = degree
        self.coeffs: dict[Partition, int] = {}
        for key, c in (coeffs or {}).items():
            key = Partition(key)
            if key.size() != degree:
                raise ValueError(f"{key} does not have degree {degree}")
            if c:
                self.coeffs[key] = self.coeffs.get(key, 0) + c
        self.coeffs = {k: v for k, v in self.coeffs.items() if v}

    @classmethod
    def zero(cls, degree: int) -> "SymFunc":
        return cls(degree)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def __repr__(self):
        body = " + ".join(f"{c}*m{tuple(k)}" for k, c in sorted(self.coeffs.items(), reverse=True))
        return f"SymFunc[{self.degree}]({body or '0'})"

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        if self.degree != other.degree:
            raise ValueError("cannot add symmetric functions of different degrees")
        out = Counter(self.coeffs)
        out.update(other.coeffs)
        return SymFunc(self.degree, out)

    def __neg__(self):
        return SymFunc(self.degree, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, c: int) -> "SymFunc":
        return SymFunc(self.degree, {k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return multiply(self, other)

    __rmul__ = __mul__


def monomial(delta: Sequence[int]) -> SymFunc:
    delta = Partition(delta)
    return SymFunc(delta.size(), {delta: 1})


def _distinct_arrangements(parts: Sequence[int], length: int):
    """Distinct vectors of the given length whose nonzero entries are a rearrangement of parts."""
    counts = Counter(parts)
    counts[0] += length - len(parts)
    values = sorted(counts)
    vec = [0] * length

    def rec(pos):
        if pos == length:
            yield tuple(vec)
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                vec[pos] = v
                yield from rec(pos + 1)
                counts[v] += 1

    yield from rec(0)


@lru_cache(maxsize=None)
def _monomial_product(alpha: Partition, beta: Partition) -> tuple[tuple[Partition, int], ...]:
    # [m_gamma] m_alpha m_beta = #{b in orbit(beta) : gamma - b in orbit(alpha)}, gamma as a fixed vector
    n = len(alpha) + len(beta)
    candidates = {Partition(sorted((a + b for a, b in zip(alpha.padded(n), arr)), reverse=True))
                  for arr in _distinct_arrangements(beta, n)}
    out = []
    for gamma in candidates:
        count = 0
        for arr in _distinct_arrangements(beta, len(gamma)):
            rest = [g - b for g, b in zip(gamma, arr)]
            if min(rest, default=0) >= 0 and Partition(sorted(rest, reverse=True)) == alpha:
                count += 1
        out.append((gamma, count))
    return tuple(out)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in the ring of symmetric functions (stable in the number of variables)."""
    out: Counter = Counter()
    for a, ca in f.coeffs.items():
        for b, cb in g.coeffs.items():
            for gamma, k in _monomial_product(a, b):
                out[gamma] += ca * cb * k
    return SymFunc(f.degree + g.degree, out)


@lru_cache(maxsize=None)
def power_sum(nu: Sequence[int]) -> SymFunc:
    """p_nu = prod_j p_{nu_j}, with p_k = m_(k)."""
    nu = Partition(nu)
    result = monomial(())
    for k in nu:
        result = multiply(result, monomial((k,)))
    return result


def power_sum_to_monomial(gamma: Sequence[int]) -> dict[Partition, int]:
    """Row L_{gamma, .} of the power-sum to monomial transition matrix."""
    return dict(power_sum(Partition(gamma)).coeffs)


def _horizontal_strips(outer: Partition, size: int):
    """Partitions kappa with outer/kappa a horizontal strip of the given size."""
    n = len(outer)
    parts = list(outer)

    def rec(i, remaining):
        if i == n:
            if remaining == 0:
                yield Partition(parts)
            return
        lower = outer.part(i + 1)
        original = parts[i]
        for take in range(0, min(remaining, original - lower) + 1):
            parts[i] = original - take
            yield from rec(i + 1, remaining - take)
        parts[i] = original

    yield from rec(0, size)


@lru_cache(maxsize=None)
def ssyt_count(shape: Partition, content: tuple[int, ...]) -> int:
    """Semistandard tableaux of the given shape and content, peeling off the largest letter.

    The cells holding the largest letter form a horizontal strip, so the count
    recurses over strips of size content[-1].
    """
    if not content:
        return 1 if not shape else 0
    if shape.size() != sum(content):
        return 0
    *rest, last = content
    return sum(ssyt_count(inner, tuple(rest)) for inner in _horizontal_strips(shape, last))


@lru_cache(maxsize=None)
def schur(lam: Sequence[int]) -> SymFunc:
    """s_lambda = sum_delta K_{lambda delta} m_delta."""
    lam = Partition(lam)
    d = lam.size()
    return SymFunc(d, {delta: ssyt_count(lam, tuple(delta)) for delta in partitions_of(d)})


def schur_expand(f: SymFunc) -> dict[Partition, int]:
    """Coefficients c with f = sum c[lambda] s_lambda.

    Reverse-lexicographic order refines dominance, and the Kostka matrix is
    unitriangular for dominance, so the largest remaining key is always the
    leading term of exactly one Schur function.
    """
    residual = dict(f.coeffs)
    out: dict[Partition, int] = {}
    while residual:
        lead = max(residual)
        c = residual[lead]
        s = schur(lead)
        if s.coeffs.get(lead) != 1:
            raise ArithmeticError(f"Kostka diagonal at {lead} is not 1")
        out[lead] = c
        for key, k in s.coeffs.items():
            v = residual.get(key, 0) - c * k
            if v:
                residual[key] = v
            else:
                residual.pop(key, None)
        if lead in residual:
            raise ArithmeticError(f"elimination failed to clear {lead}")
    return out


def hall(f: SymFunc, g: SymFunc) -> int:
    """Hall scalar product; Schur functions are orthonormal."""
    if not f.coeffs or not g.coeffs or f.degree != g.degree:
        return 0
    a, b = schur_expand(f), schur_expand(g)
    return sum(c * b.get(lam, 0) for lam, c in a.items())


def count_functions(gamma: Sequence[int], delta: Sequence[int]) -> int:
    """Number of f: {1..l(gamma)} -> {1, 2, ...} with f(gamma) = delta as sequences.

    f(gamma)_i is the sum of gamma_j over j with f(j) = i.  Any index sent
    past l(delta) would make a zero entry positive, so the range {1..l(delta)}
    is exhaustive.
    """
    gamma, delta = Partition(gamma), Partition(delta)
    if gamma.size() != delta.size():
        return 0
    remaining = list(delta)

    def rec(j):
        if j == len(gamma):
            return 1 if not any(remaining) else 0
        total = 0
        for i in range(len(remaining)):
            if remaining[i] >= gamma[j]:
                remaining[i] -= gamma[j]
                total += rec(j + 1)
                remaining[i] += gamma[j]
        return total

    return rec(0)


def macdonald_corollary_count(delta: Sequence[int]) -> int:
    """Number of pairs (gamma, f) with f(gamma) = delta."""
    delta = Partition(delta)
    return sum(count_functions(gamma, delta) for gamma in partitions_of(delta.size()))
