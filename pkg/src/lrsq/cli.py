"""Command-line front end: ``lrsq <verb> [flags]``.

Exit codes: 0 success or identity verified, 1 identity mismatch, 2 usage error.
Output is a plain-text table by default and sorted-key JSON with ``--json``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Any

from . import finite_combinatorics as fc
from . import hesselink as hs
from . import hilbert_identities as hi
from .lr_engine import kostka, lr_coefficient, lr_multi, sum_lr_squared
from .partition_core import compositions, parse_partition, parse_partition_tuple
from .power_series import TruncatedSeries

# guardrails, checked before any computation starts
MAX_SERIES_DEGREE = 40
MAX_MAIN_FORMULA_DEGREE = 12
MAX_LR_DEGREE = 20
MAX_BIGRADED_DEGREE = 10


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")


@dataclass
class CommandOutcome:
    verb: str
    parameters: dict[str, Any]
    payload: Any  # already JSON-ready: series use their own schema, counts are decimal strings
    verified: bool | None = None
    table: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"verb": self.verb, "parameters": _stringify(self.parameters), "payload": self.payload}
        if self.verified is not None:
            out["verified"] = self.verified
        return out

    def exit_code(self) -> int:
        return 1 if self.verified is False else 0


def _stringify(value):
    """Integers become decimal strings; containers are walked recursively."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _stringify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    return value


# argument types; argparse turns ArgumentTypeError into "argument --flag: message"

def _partition(text):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _partition_tuple(text):
    try:
        return parse_partition_tuple(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text):
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer list {text!r}") from None
    return values


def _nonneg_list(text):
    values = _int_list(text)
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError(f"entries of {text!r} must be non-negative")
    return values


def _weight(text):
    try:
        return hs.parse_weight(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _check(ok: bool, flag: str, message: str):
    if not ok:
        raise UsageError(flag, message)


def _check_degree(args, bound, flag="--degree"):
    _check(args.degree is not None, flag, "is required")
    _check(0 <= args.degree <= bound, flag, f"must lie in [0, {bound}], got {args.degree}")


def _check_m(args, low=1):
    _check(args.m is not None, "--m", "is required")
    _check(args.m >= low, "--m", f"must be at least {low}, got {args.m}")


# text rendering

def _table(headers, rows) -> list[str]:
    cells = [list(map(str, headers))] + [[str(x) for x in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    return ["  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in cells]


def _monomial(series: TruncatedSeries, exp) -> str:
    parts = [n if p == 1 else f"{n}^{p}" for n, p in zip(series.names, exp) if p]
    return "*".join(parts) or "1"


def _series_table(series: TruncatedSeries) -> list[str]:
    if series.num_vars == 1:
        return _table(["degree", "coefficient"], list(enumerate(series.univariate())))
    return _table(["monomial", "coefficient"], [(_monomial(series, e), c) for e, c in series.terms()])


def _report_table(report: hi.IdentityReport) -> list[str]:
    columns = [("lhs", report.lhs), ("rhs", report.rhs)] + sorted(report.others.items())
    keys = set()
    for _, s in columns:
        keys |= set(s.coeffs)
    rows = []
    for e in sorted(keys, key=lambda e: (sum(e), e)):
        values = [s.coeffs.get(e, 0) for _, s in columns]
        rows.append([_monomial(report.lhs, e)] + values + ["" if len(set(values)) == 1 else "*"])
    lines = _table(["monomial"] + [name for name, _ in columns] + [""], rows)
    lines.append(f"equal: {'yes' if report.equal else 'no'}")
    if report.first_discrepancy is not None:
        lines.append(f"first discrepancy: {_monomial(report.lhs, report.first_discrepancy)}")
    return lines


def _scalar(verb, params, value) -> CommandOutcome:
    return CommandOutcome(verb, params, str(value), table=[str(value)])


def _series_outcome(verb, params, series) -> CommandOutcome:
    return CommandOutcome(verb, params, series.to_json(), table=_series_table(series))


def _report_outcome(verb, params, report) -> CommandOutcome:
    return CommandOutcome(verb, params, report.to_json(), report.equal, _report_table(report))


def _graded(d: dict) -> dict:
    return {str(k): str(d[k]) for k in sorted(d)}


def _graded_table(d: dict) -> list[str]:
    return _table(["degree", "coefficient"], sorted(d.items()))


# verbs

def cmd_lr(args) -> CommandOutcome:
    _check(args.lam is not None, "--lambda", "is required")
    if args.mus is not None:
        _check(args.mu is None and args.nu is None, "--mus", "cannot be combined with --mu/--nu")
        _check(args.mus.total_size() <= MAX_LR_DEGREE, "--mus", f"total size must be <= {MAX_LR_DEGREE}")
        return _scalar("lr", {"lambda": str(args.lam), "mus": str(args.mus)}, lr_multi(args.lam, args.mus))
    _check(args.mu is not None, "--mu", "is required (or give --mus)")
    _check(args.nu is not None, "--nu", "is required (or give --mus)")
    _check(args.lam.size() <= MAX_LR_DEGREE, "--lambda", f"size must be <= {MAX_LR_DEGREE}")
    params = {"lambda": str(args.lam), "mu": str(args.mu), "nu": str(args.nu)}
    return _scalar("lr", params, lr_coefficient(args.lam, args.mu, args.nu))


def cmd_kostka(args) -> CommandOutcome:
    _check(args.lam is not None, "--lambda", "is required")
    _check(args.nu is not None, "--nu", "is required")
    _check(args.lam.size() <= MAX_LR_DEGREE, "--lambda", f"size must be <= {MAX_LR_DEGREE}")
    return _scalar("kostka", {"lambda": str(args.lam), "nu": str(args.nu)}, kostka(args.lam, args.nu))


def cmd_lrsum(args) -> CommandOutcome:
    _check_m(args)
    _check_degree(args, MAX_LR_DEGREE)
    params = {"degree": args.degree, "m": args.m}
    if args.profile is not None:
        _check(len(args.profile) == args.m, "--profile", f"needs {args.m} entries, got {len(args.profile)}")
        _check(sum(args.profile) == args.degree, "--profile", f"must sum to --degree {args.degree}")
        params["profile"] = ",".join(map(str, args.profile))
    bounds = None
    if args.n is not None:
        _check(len(args.n) in (1, args.m + 1), "--n", f"give n or n,n_1,...,n_{args.m}")
        _check(all(x >= 1 for x in args.n), "--n", "length bounds must be positive")
        bounds = args.n
        params["n"] = ",".join(map(str, args.n))
    return _scalar("lrsum", params, sum_lr_squared(args.degree, args.m, args.profile, bounds))


def cmd_series(args) -> CommandOutcome:
    kind = args.kind
    if kind == "main-formula":
        _check_m(args)
        _check_degree(args, MAX_MAIN_FORMULA_DEGREE)
        series = hi.main_formula_lhs(args.m, args.degree)
        params = {"m": args.m, "degree": args.degree}
    elif kind == "partitions-by-length":
        _check_degree(args, MAX_SERIES_DEGREE // 2)
        series = fc.partitions_by_length_series(args.degree)
        params = {"degree": args.degree}
    elif kind == "glq":
        _check(args.q is not None and args.q >= 2, "--q", "must be an integer >= 2")
        _check_degree(args, MAX_SERIES_DEGREE)
        series = fc.glq_class_series(args.q, args.degree)
        params = {"q": args.q, "degree": args.degree}
    else:
        _check_m(args, 2 if kind == "harmonic" else 1)
        _check_degree(args, MAX_SERIES_DEGREE)
        build = {"stable-block": hi.stable_block_series, "harmonic": hi.harmonic_stable_series,
                 "eta": fc.eta_series}[kind]
        series = build(args.m, args.degree)
        params = {"m": args.m, "degree": args.degree}
    return _series_outcome(f"series {kind}", params, series)


def cmd_verify(args) -> CommandOutcome:
    kind = args.kind
    if kind == "main-formula":
        _check_m(args)
        _check_degree(args, MAX_MAIN_FORMULA_DEGREE)
        report = hi.verify_main_formula(args.m, args.degree, args.threads)
        return _report_outcome("verify main-formula", {"m": args.m, "degree": args.degree}, report)
    if kind == "bigraded":
        _check_degree(args, MAX_BIGRADED_DEGREE)
        return _report_outcome("verify bigraded", {"degree": args.degree}, hi.bigraded_identity(args.degree))
    if kind == "eta-glq":
        _check(args.q is not None and args.q >= 2, "--q", "must be an integer >= 2")
        _check_degree(args, MAX_SERIES_DEGREE)
        return _report_outcome("verify eta-glq", {"q": args.q, "degree": args.degree},
                               fc.eta_glq_identity(args.q, args.degree))
    if kind == "block-stable":
        _check_m(args)
        _check_degree(args, 8)
        return _report_outcome("verify block-stable", {"m": args.m, "degree": args.degree},
                               hi.verify_block_stable(args.m, args.degree))
    # orbit: every strict composition of each d <= degree, or the single --composition
    if args.composition is not None:
        comps = [args.composition]
        params = {"composition": ",".join(map(str, args.composition))}
    else:
        _check_degree(args, fc.ORBIT_MAX_DEGREE)
        comps = [c for d in range(1, args.degree + 1) for k in range(1, d + 1) for c in compositions(d, k) if all(c)]
        params = {"degree": args.degree}
    _check(all(sum(c) <= fc.ORBIT_MAX_DEGREE for c in comps), "--composition",
           f"brute force needs total <= {fc.ORBIT_MAX_DEGREE}")
    rows = [(",".join(map(str, c)), fc.orbit_count_brute(c), fc.orbit_count_lr(c)) for c in comps]
    ok = all(b == r for _, b, r in rows)
    payload = {"rows": _stringify([{"composition": c, "brute": b, "lr": r} for c, b, r in rows]), "equal": ok}
    table = _table(["composition", "brute", "lr"], rows) + [f"equal: {'yes' if ok else 'no'}"]
    return CommandOutcome("verify orbit", params, payload, ok, table)


def cmd_dim(args) -> CommandOutcome:
    kind = args.kind
    _check(args.n is not None, "--n", "is required")
    _check(all(x >= 1 for x in args.n), "--n", "sizes must be positive")
    if kind == "invariants":
        _check(len(args.n) == 1, "--n", "takes a single matrix size for invariants")
        _check(args.profile is not None, "--profile", "is required")
        _check(sum(args.profile) <= MAX_LR_DEGREE, "--profile", f"total degree must be <= {MAX_LR_DEGREE}")
        n = args.n[0]
        value = hi.finite_invariant_dim(n, args.profile)
        params = {"n": n, "profile": ",".join(map(str, args.profile))}
        return _scalar("dim invariants", params, value)
    _check_degree(args, MAX_LR_DEGREE // 2)
    params = {"n": ",".join(map(str, args.n)), "degree": args.degree}
    if kind == "block":
        return _scalar("dim block", params, hi.block_invariant_dim(args.n, args.degree))
    return _scalar("dim harmonic", params, hi.harmonic_finite_dim(args.n, args.degree))


def _check_weight(n, lam, flag):
    _check(1 <= n <= hs.MAX_RANK, "--n", f"must lie in [1, {hs.MAX_RANK}], got {n}")
    _check(len(lam) == n, flag, f"weight {lam} needs {n} coordinates")
    _check(all(lam[i] >= lam[i + 1] for i in range(n - 1)), flag, f"weight {lam} is not dominant")


def cmd_hesselink(args) -> CommandOutcome:
    _check(args.n is not None and len(args.n) == 1, "--n", "is required (one integer)")
    _check(args.lam is not None, "--lambda", "is required")
    _check(args.dmax is not None and 0 <= args.dmax <= MAX_SERIES_DEGREE, "--dmax",
           f"must lie in [0, {MAX_SERIES_DEGREE}]")
    n = args.n[0]
    _check_weight(n, args.lam, "--lambda")
    value = hs.hesselink_multiplicity(n, args.lam, args.dmax)
    params = {"n": n, "lambda": ",".join(map(str, args.lam)), "dmax": args.dmax}
    return CommandOutcome("hesselink", params, _graded(value), table=_graded_table(value))


def cmd_spherical(args) -> CommandOutcome:
    _check(args.n is not None and len(args.n) == 1, "--n", "is required (one integer)")
    _check(args.weights is not None, "--weights", "is required")
    _check(args.dmax is not None and 0 <= args.dmax <= MAX_SERIES_DEGREE, "--dmax",
           f"must lie in [0, {MAX_SERIES_DEGREE}]")
    n = args.n[0]
    try:
        with open(args.weights) as fh:
            lines = [ln.strip() for ln in fh]
    except OSError as exc:
        raise UsageError("--weights", f"cannot read {args.weights}: {exc.strerror}") from None
    weights = []
    for ln in lines:
        if ln and not ln.startswith("#"):
            try:
                weights.append(hs.parse_weight(ln))
            except ValueError as exc:
                raise UsageError("--weights", str(exc)) from None
    for lam in weights:
        _check_weight(n, lam, "--weights")
    value = hs.spherical_hilbert(n, weights, args.dmax)
    params = {"n": n, "weights": [",".join(map(str, w)) for w in weights], "dmax": args.dmax}
    return CommandOutcome("spherical", params, _graded(value), table=_graded_table(value))


def cmd_necklace(args) -> CommandOutcome:
    _check_m(args)
    _check(args.k is not None and args.k >= 1, "--k", "must be a positive integer")
    params = {"m": args.m, "k": args.k}
    value = fc.necklace_count(args.k, args.m)
    if not args.brute:
        return _scalar("necklace", params, value)
    _check(args.m ** args.k <= 10**6, "--k", "brute force needs m^k <= 10^6")
    brute = fc.necklace_count_brute(args.k, args.m)
    payload = _stringify({"formula": value, "brute": brute})
    table = _table(["formula", "brute"], [(value, brute)])
    return CommandOutcome("necklace", params, payload, value == brute, table)


def cmd_eta(args) -> CommandOutcome:
    _check_m(args)
    _check_degree(args, MAX_SERIES_DEGREE)
    return _series_outcome("eta", {"m": args.m, "degree": args.degree}, fc.eta_series(args.m, args.degree))


def cmd_orbits(args) -> CommandOutcome:
    _check(args.composition is not None, "--composition", "is required")
    comp = args.composition
    params = {"composition": ",".join(map(str, comp))}
    brute = args.brute or args.both
    lr = args.lr or args.both or not args.brute
    if brute:
        _check(sum(comp) <= fc.ORBIT_MAX_DEGREE, "--composition",
               f"brute force needs d <= {fc.ORBIT_MAX_DEGREE}, got {sum(comp)}")
    else:
        _check(sum(comp) <= MAX_LR_DEGREE, "--composition", f"total must be <= {MAX_LR_DEGREE}")
    payload = {}
    if brute:
        payload["brute"] = fc.orbit_count_brute(comp)
    if lr:
        payload["lr"] = fc.orbit_count_lr(comp)
    verified = payload["brute"] == payload["lr"] if len(payload) == 2 else None
    table = _table(list(payload), [list(payload.values())])
    return CommandOutcome("orbits", params, _stringify(payload), verified, table)


def cmd_glq(args) -> CommandOutcome:
    _check(args.q is not None and args.q >= 2, "--q", "must be an integer >= 2")
    if args.brute:
        _check(args.m is not None and 1 <= args.m <= 3, "--m", "brute force needs 1 <= m <= 3")
        _check(fc._is_prime(args.q) and args.q <= 5, "--q", "brute force needs a prime q <= 5")
        _check(args.q ** (args.m**2) <= fc.GLQ_MAX_MATRICES, "--m",
               f"brute force needs q^(m^2) <= 3^9 = {fc.GLQ_MAX_MATRICES}")
        count = fc.glq_class_count_brute(args.m, args.q)
        series_value = fc.glq_class_series(args.q, args.m).univariate()[args.m]
        payload = _stringify({"brute": count, "series": series_value})
        table = _table(["brute", "series"], [(count, series_value)])
        return CommandOutcome("glq", {"q": args.q, "m": args.m}, payload, count == series_value, table)
    _check_degree(args, MAX_SERIES_DEGREE)
    return _series_outcome("glq", {"q": args.q, "degree": args.degree}, fc.glq_class_series(args.q, args.degree))


# parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker processes")

    parser = _Parser(prog="lrsq", description="Littlewood-Richardson squares and Hilbert series identities",
                     parents=[common])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, func, help_text, choices=None):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if choices:
            p.add_argument("kind", choices=choices)
        p.set_defaults(func=func)
        return p

    p = verb("lr", cmd_lr, "Littlewood-Richardson coefficient")
    p.add_argument("--lambda", dest="lam", type=_partition)
    p.add_argument("--mu", type=_partition)
    p.add_argument("--nu", type=_partition)
    p.add_argument("--mus", type=_partition_tuple, help='";"-separated partitions')

    p = verb("kostka", cmd_kostka, "Kostka number")
    p.add_argument("--lambda", dest="lam", type=_partition)
    p.add_argument("--nu", type=_partition)

    p = verb("lrsum", cmd_lrsum, "sum of squared LR coefficients")
    p.add_argument("--degree", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--profile", type=_nonneg_list)
    p.add_argument("--n", type=_int_list, help="n or n,n_1,...,n_m")

    p = verb("series", cmd_series, "truncated product series",
             ["main-formula", "stable-block", "harmonic", "eta", "glq", "partitions-by-length"])
    p.add_argument("--m", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--degree", type=int)

    p = verb("verify", cmd_verify, "check an identity to a given degree",
             ["main-formula", "bigraded", "eta-glq", "orbit", "block-stable"])
    p.add_argument("--m", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument("--composition", type=_nonneg_list)

    p = verb("dim", cmd_dim, "invariant and harmonic dimensions", ["invariants", "block", "harmonic"])
    p.add_argument("--n", type=_int_list, help="matrix size, or block sizes n_1,...,n_m")
    p.add_argument("--profile", type=_nonneg_list)
    p.add_argument("--degree", type=int)

    p = verb("hesselink", cmd_hesselink, "graded multiplicity m_lambda(t)")
    p.add_argument("--n", type=_int_list)
    p.add_argument("--lambda", dest="lam", type=_weight, help="use --lambda=-1,... for a leading minus")
    p.add_argument("--dmax", type=int)

    p = verb("spherical", cmd_spherical, "sum of m_lambda(t) over a weight file")
    p.add_argument("--n", type=_int_list)
    p.add_argument("--weights", help="file with one comma-separated weight per line")
    p.add_argument("--dmax", type=int)

    p = verb("necklace", cmd_necklace, "necklace count N_k(m)")
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--brute", action="store_true")

    p = verb("eta", cmd_eta, "necklace series eta_m(t)")
    p.add_argument("--m", type=int)
    p.add_argument("--degree", type=int)

    p = verb("orbits", cmd_orbits, "conjugation orbits of a Young subgroup on S_d")
    p.add_argument("--composition", type=_nonneg_list)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--brute", action="store_true")
    mode.add_argument("--lr", action="store_true")
    mode.add_argument("--both", action="store_true")

    p = verb("glq", cmd_glq, "conjugacy classes of GL_m(q)")
    p.add_argument("--q", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument("--brute", action="store_true")
    return parser


def run(argv=None) -> tuple[CommandOutcome | None, int, str]:
    """Parse and dispatch; returns (outcome, exit code, rendered stdout)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)
    args.threads = getattr(args, "threads", 1)
    try:
        _check(args.threads >= 1, "--threads", "must be positive")
        outcome = args.func(args)
    except UsageError as exc:
        print(f"lrsq {args.verb}: error: {exc}", file=sys.stderr)
        return None, 2, ""
    if as_json:
        text = json.dumps(outcome.to_json(), sort_keys=True, indent=2)
    else:
        text = "\n".join(outcome.table)
    return outcome, outcome.exit_code(), text + "\n"


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    _, code, text = run(argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
