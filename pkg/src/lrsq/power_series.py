"""Exact multivariate formal power series truncated by total degree.

Coefficients are Python ints, so nothing overflows.  Every operation keeps
the invariant that no stored key has total degree above ``max_degree`` and
no stored coefficient is zero; results are therefore exact modulo terms of
total degree > max_degree.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class TruncationError(ValueError):
    """Raised when a request needs information beyond the truncation degree."""


class TruncatedSeries:
    __slots__ = ("num_vars", "max_degree", "coeffs", "names")

    def __init__(self, num_vars: int, max_degree: int, coeffs: Mapping[Sequence[int], int] | None = None,
                 names: Sequence[str] | None = None):
        if num_vars < 1:
            raise ValueError("num_vars must be positive")
        if max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        self.num_vars = num_vars
        self.max_degree = max_degree
        self.names = tuple(names) if names is not None else default_names(num_vars)
        if len(self.names) != num_vars:
            raise ValueError("one name per variable is required")
        self.coeffs: dict[Exponent, int] = {}
        for exp, c in (coeffs or {}).items():
            exp = tuple(exp)
            if len(exp) != num_vars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for {num_vars} variables")
            if c and sum(exp) <= max_degree:
                self.coeffs[exp] = self.coeffs.get(exp, 0) + c
        self.coeffs = {e: c for e, c in self.coeffs.items() if c}

    # constructors

    @classmethod
    def constant(cls, value: int, num_vars: int, max_degree: int, names=None) -> "TruncatedSeries":
        return cls(num_vars, max_degree, {(0,) * num_vars: value}, names)

    @classmethod
    def monomial(cls, exp: Sequence[int], num_vars: int, max_degree: int, coeff: int = 1,
                 names=None) -> "TruncatedSeries":
        return cls(num_vars, max_degree, {tuple(exp): coeff}, names)

    @classmethod
    def variable(cls, index: int, num_vars: int, max_degree: int, power: int = 1, coeff: int = 1,
                 names=None) -> "TruncatedSeries":
        exp = [0] * num_vars
        exp[index] = power
        return cls(num_vars, max_degree, {tuple(exp): coeff}, names)

    @classmethod
    def from_univariate(cls, coeffs: Sequence[int], max_degree: int | None = None, name: str = "t"):
        D = len(coeffs) - 1 if max_degree is None else max_degree
        return cls(1, D, {(i,): c for i, c in enumerate(coeffs)}, (name,))

    def _like(self, coeffs: dict[Exponent, int]) -> "TruncatedSeries":
        out = TruncatedSeries.__new__(TruncatedSeries)
        out.num_vars, out.max_degree, out.names = self.num_vars, self.max_degree, self.names
        out.coeffs = coeffs
        return out

    def _check_shape(self, other: "TruncatedSeries"):
        if self.num_vars != other.num_vars or self.max_degree != other.max_degree:
            raise ValueError(
                f"shape mismatch: ({self.num_vars} vars, D={self.max_degree}) vs "
                f"({other.num_vars} vars, D={other.max_degree})")

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries.constant(other, self.num_vars, self.max_degree, self.names)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_shape(other)
        return other

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self._like({e: c * other for e, c in self.coeffs.items()} if other else {})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported; use inverse_one_minus")
        result = TruncatedSeries.constant(1, self.num_vars, self.max_degree, self.names)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.num_vars, self.max_degree, self.coeffs) == (other.num_vars, other.max_degree, other.coeffs)

    def __hash__(self):
        return hash((self.num_vars, self.max_degree, frozenset(self.coeffs.items())))

    def __repr__(self):
        return f"TruncatedSeries({self.num_vars}, {self.max_degree}, {self.coeffs!r})"

    def __str__(self):
        return format_series(self)

    # queries

    def coefficient(self, exp: Sequence[int]) -> int:
        exp = tuple(exp)
        if len(exp) != self.num_vars:
            raise ValueError(f"expected an exponent vector of length {self.num_vars}")
        if sum(exp) > self.max_degree:
            raise TruncationError(
                f"degree {sum(exp)} exceeds the truncation degree {self.max_degree}")
        return self.coeffs.get(exp, 0)

    def constant_term(self) -> int:
        return self.coeffs.get((0,) * self.num_vars, 0)

    def min_degree(self) -> int | None:
        """Smallest total degree carrying a nonzero coefficient."""
        return min((sum(e) for e in self.coeffs), default=None)

    def univariate(self) -> list[int]:
        """Coefficient list [c_0, ..., c_D] of a one-variable series."""
        if self.num_vars != 1:
            raise ValueError("univariate() needs a one-variable series")
        return [self.coeffs.get((d,), 0) for d in range(self.max_degree + 1)]

    def truncate(self, max_degree: int) -> "TruncatedSeries":
        if max_degree > self.max_degree:
            raise TruncationError("cannot raise the truncation degree")
        return TruncatedSeries(self.num_vars, max_degree, self.coeffs, self.names)

    def with_names(self, names: Sequence[str]) -> "TruncatedSeries":
        out = self._like(dict(self.coeffs))
        out.names = tuple(names)
        return out

    def terms(self) -> list[tuple[Exponent, int]]:
        """Nonzero terms sorted by total degree, then lexicographically."""
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def to_json(self) -> dict:
        return {
            "vars": list(self.names),
            "max_degree": self.max_degree,
            "terms": [{"exp": list(e), "coeff": str(c)} for e, c in self.terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "TruncatedSeries":
        names = data["vars"]
        coeffs = {tuple(t["exp"]): int(t["coeff"]) for t in data["terms"]}
        return cls(len(names), int(data["max_degree"]), coeffs, names)


def default_names(num_vars: int) -> tuple[str, ...]:
    if num_vars == 1:
        return ("t",)
    return tuple(f"t{i}" for i in range(1, num_vars + 1))


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Exact product truncated to the common degree bound."""
    a._check_shape(b)
    D = a.max_degree
    # bucket b by total degree so the inner loop can stop early
    by_deg: dict[int, list[tuple[Exponent, int]]] = {}
    for e, c in b.coeffs.items():
        by_deg.setdefault(sum(e), []).append((e, c))
    degs = sorted(by_deg)
    out: dict[Exponent, int] = {}
    for ea, ca in a.coeffs.items():
        room = D - sum(ea)
        for d in degs:
            if d > room:
                break
            for eb, cb in by_deg[d]:
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, 0) + ca * cb
    return a._like({e: c for e, c in out.items() if c})


def inverse_one_minus(f: TruncatedSeries) -> TruncatedSeries:
    """1 / (1 - f) = sum of f**u, for f with zero constant term."""
    if f.constant_term() != 0:
        raise ValueError("inverse_one_minus needs a series with zero constant term")
    one = TruncatedSeries.constant(1, f.num_vars, f.max_degree, f.names)
    result = one
    power = one
    # f**u starts in degree >= u, so D + 1 rounds suffice
    for _ in range(f.max_degree):
        power = power * f
        if not power.coeffs:
            break
        result = result + power
    return result


def product_over_k(factor: Callable[[int], TruncatedSeries], max_degree: int) -> TruncatedSeries:
    """prod_{k>=1} factor(k), exact to total degree max_degree.

    Requires factor(k) - 1 to vanish below degree k; only k <= max_degree
    can then contribute and the infinite product is a finite one.
    """
    result = None
    for k in range(1, max_degree + 1):
        fk = factor(k)
        if fk.max_degree != max_degree:
            raise ValueError(f"factor({k}) is truncated at {fk.max_degree}, expected {max_degree}")
        low = (fk - 1).min_degree()
        if low is not None and low < k:
            raise ValueError(f"factor({k}) differs from 1 in degree {low} < {k}")
        result = fk if result is None else result * fk
    if result is None:
        probe = factor(1)
        return TruncatedSeries.constant(1, probe.num_vars, max_degree, probe.names)
    return result


def substitute(f: TruncatedSeries, images: Sequence[Sequence[int]], max_degree: int,
               names: Sequence[str] | None = None) -> TruncatedSeries:
    """Replace variable i of f by the monomial with exponent vector images[i].

    Each image must have positive total degree so that truncation stays sound.
    """
    if len(images) != f.num_vars:
        raise ValueError(f"need {f.num_vars} images, got {len(images)}")
    images = [tuple(im) for im in images]
    target_vars = len(images[0])
    if any(len(im) != target_vars for im in images):
        raise ValueError("all images must live in the same number of variables")
    if any(sum(im) <= 0 or min(im) < 0 for im in images):
        raise ValueError("every image must be a monomial of positive total degree")
    # a term of source degree s maps to degree >= s * min image degree
    needed = max_degree // min(sum(im) for im in images)
    if f.max_degree < needed:
        raise TruncationError(
            f"source truncated at {f.max_degree}; substitution up to degree {max_degree} needs degree {needed}")
    out: dict[Exponent, int] = {}
    for e, c in f.coeffs.items():
        target = [0] * target_vars
        for power, im in zip(e, images):
            if power:
                for j, x in enumerate(im):
                    target[j] += power * x
        if sum(target) <= max_degree:
            key = tuple(target)
            out[key] = out.get(key, 0) + c
    return TruncatedSeries(target_vars, max_degree, out, names)


def coefficient(f: TruncatedSeries, exp: Sequence[int]) -> int:
    return f.coefficient(exp)


def exponents_up_to(num_vars: int, max_degree: int) -> Iterable[Exponent]:
    """Every exponent vector with total degree <= max_degree, by degree then lex."""
    from .partition_core import compositions

    for d in range(max_degree + 1):
        yield from compositions(d, num_vars)


def format_series(f: TruncatedSeries) -> str:
    if not f.coeffs:
        return f"0 + O(deg {f.max_degree + 1})"
    pieces = []
    for e, c in f.terms():
        mono = "*".join(n if p == 1 else f"{n}^{p}" for n, p in zip(f.names, e) if p)
        if not mono:
            pieces.append(str(c))
        elif c == 1:
            pieces.append(mono)
        elif c == -1:
            pieces.append("-" + mono)
        else:
            pieces.append(f"{c}*{mono}")
    return " + ".join(pieces).replace("+ -", "- ") + f" + O(deg {f.max_degree + 1})"
