"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 consistency error (two routes to the
same number disagree), 3 resource error (oracle budget exceeded).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import random
import sys
import tempfile
from math import comb
from typing import Optional, Sequence

from . import __version__
from .algebra import RationalPolynomial, rational_str
from .combinatorics import IndexSet, complement, parse_index_set, psi_via_minors
from .errors import ConsistencyError, InputError, LascouxError
from .identities import verify_identities
from .polynomials import (DEFAULT_MEMO, LascouxMemo, format_key, lp_polynomial, lp_value,
                          parse_key, recompute)
from .schur_oracle import OracleBudget, alpha_oracle, alpha_two_element, d_oracle, psi_oracle
from .sdp_degree import DeltaQuery, delta_polynomial, delta_value, lc_delta_s1

CACHE_ENV = "LASCOUX_CACHE"
CACHE_VERSION = 1

log = logging.getLogger("lascoux")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# --- cache file -------------------------------------------------------------

def save_cache(memo: LascouxMemo, path: str):
    """Write the memo table atomically (temp file in the same directory, then rename)."""
    entries = {format_key(k): str(v) for k, v in memo.items()}
    payload = {"version": CACHE_VERSION, "entries": dict(sorted(entries.items()))}
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".lascoux-cache-", dir=directory)
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh, indent=0)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_cache(memo: LascouxMemo, path: str) -> int:
    try:
        with open(path) as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read cache {path}: {exc}") from exc
    if not isinstance(payload, dict) or payload.get("version") != CACHE_VERSION:
        raise InputError(f"cache {path}: unsupported version {payload.get('version') if isinstance(payload, dict) else None}")
    entries = {}
    for key, value in payload.get("entries", {}).items():
        try:
            entries[parse_key(key)] = int(value)
        except ValueError as exc:
            raise InputError(f"cache {path}: bad value for {key}") from exc
    memo.update(entries)
    return len(entries)


# --- helpers ----------------------------------------------------------------

def _poly_json(p: RationalPolynomial) -> dict:
    return {"degree": None if p.is_zero else p.degree, "coefficients": p.to_json(),
            "lc": rational_str(p.leading_coefficient)}


def _budget(args) -> OracleBudget:
    return OracleBudget(max_vars=args.max_vars, max_degree=args.max_degree)


def _agree(name: str, results: dict):
    values = set(results.values())
    if len(values) > 1:
        raise ConsistencyError(f"{name}: methods disagree: {results}")


def _coefficient(args, name: str, methods: dict) -> dict:
    """Run the chosen method, or every applicable one under --cross-check."""
    applicable = {k: f for k, f in methods.items() if f is not None}
    if args.cross_check:
        results = {k: f() for k, f in applicable.items()}
        _agree(name, results)
        value = next(iter(results.values()))
        return {name: str(value), "methods": {k: str(v) for k, v in results.items()}}
    method = args.method or next(iter(applicable))
    if method not in methods:
        raise InputError(f"{name}: unknown method {method!r}")
    if methods[method] is None:
        raise InputError(f"{name}: method {method!r} does not apply to this input")
    return {name: str(methods[method]())}


# --- subcommands -------------------------------------------------------------

def cmd_psi(args):
    i_set = parse_index_set(args.set)
    budget = _budget(args)
    return _coefficient(args, "psi", {
        "minors": lambda: psi_via_minors(i_set),
        "schur": lambda: psi_oracle(i_set, budget),
        "formula": (lambda: 2 ** i_set[0]) if len(i_set) == 1 else None,
    })


def cmd_d(args):
    i_set, j_set = parse_index_set(args.set), parse_index_set(args.set_j)
    budget = _budget(args)
    return _coefficient(args, "d", {
        "schur": lambda: d_oracle(i_set, j_set, budget),
        "formula": (lambda: comb(i_set[0] + j_set[0], i_set[0]))
        if len(i_set) == 1 and len(j_set) == 1 else None,
    })


def cmd_alpha(args):
    i_set = parse_index_set(args.set)
    budget = _budget(args)
    return _coefficient(args, "alpha", {
        "schur": lambda: alpha_oracle(i_set, budget),
        "formula": (lambda: alpha_two_element(*i_set)) if len(i_set) == 2 else None,
    })


def cmd_lp(args):
    kind = args.type
    i_set = parse_index_set(args.set)
    j_set = parse_index_set(args.set_j) if kind == "A" else None
    if kind == "A" and args.set_j is None:
        raise InputError("lp --type A needs --set-j")
    if args.poly == (args.n is not None):
        raise InputError("lp needs exactly one of --n or --poly")
    if args.n is not None:
        value = lp_value(kind, i_set, args.n, j_set)
        out = {"value": str(value)}
        if args.cross_check:
            oracle = _lp_oracle(kind, i_set, j_set, args.n, _budget(args))
            _agree("lp", {"recurrence": value, "oracle": oracle})
            out["oracle"] = str(oracle)
        return out
    lp = lp_polynomial(kind, i_set, j_set, extra_points=args.extra_points)
    if kind == "D":
        out = {"even": _poly_json(lp.body.even_branch), "odd": _poly_json(lp.body.odd_branch)}
    else:
        out = _poly_json(lp.body)
    if args.details:
        out["closed_form"] = {"degree": lp.expected.degree,
                              "lc": rational_str(lp.expected.leading_coefficient),
                              "parity_note": lp.expected.parity_note}
        out["validity_floor"] = lp.validity_floor
        out["verified_up_to"] = lp.verified_up_to
    return out


def _lp_oracle(kind, i_set, j_set, n, budget) -> int:
    if not IndexSet(i_set).fits(n) or (j_set is not None and not IndexSet(j_set).fits(n)):
        return 0
    if kind == "C":
        return psi_via_minors(complement(i_set, n))
    if kind == "A":
        return d_oracle(complement(i_set, n), complement(j_set, n), budget)
    return alpha_oracle(complement(i_set, n), budget)


def cmd_delta(args):
    q = DeltaQuery(args.type, args.m, args.n, args.r)
    return {"delta": str(delta_value(q, _budget(args)))}


def cmd_delta_table(args):
    budget = _budget(args)
    n_min = args.n_min if args.n_min is not None else args.s + 1
    rows = []
    for m in range(args.m_min, args.m_max + 1):
        for n in range(max(n_min, args.s + 1), args.n_max + 1):
            rows.append({"m": m, "n": n, "delta": str(delta_value(DeltaQuery(args.type, m, n, n - args.s), budget))})
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["m", "n", "delta"], lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    return {"type": args.type, "s": args.s, "rows": rows}


def cmd_delta_poly(args):
    p = delta_polynomial(args.type, args.m, args.s, extra_points=args.extra_points, budget=_budget(args))
    out = _poly_json(p)
    if args.s == 1:
        closed = lc_delta_s1(args.type, args.m)
        out["lc_closed_form"] = rational_str(closed)
        out["lc_match"] = p.leading_coefficient == closed
        if not out["lc_match"]:
            raise ConsistencyError(f"delta_{args.type}({args.m}, n, n-1): LC {p.leading_coefficient} != {closed}")
    return out


def cmd_verify_identities(args):
    report = verify_identities(args.r_max, args.trials, args.seed)
    failures = sum(len(v["failed"]) for v in report.values())
    out = {"checks": sum(v["passed"] + len(v["failed"]) for v in report.values()),
           "failures": failures,
           "identities": {k: {"passed": v["passed"], "failed": [list(f) for f in v["failed"]]}
                          for k, v in report.items()}}
    if failures:
        raise ConsistencyError(json.dumps(out))
    return out


def cmd_cache(args):
    out = {}
    if args.load:
        out["loaded"] = load_cache(DEFAULT_MEMO, args.load)
    out["entries"] = len(DEFAULT_MEMO)
    if args.verify:
        keys = sorted(k for k, _ in DEFAULT_MEMO.items())
        sample = random.Random(args.seed).sample(keys, min(args.verify, len(keys)))
        for key in sample:
            got, stored = recompute(key), DEFAULT_MEMO.get(key)
            if got != stored:
                raise ConsistencyError(f"cache entry {format_key(key)} = {stored}, recomputed {got}")
        out["verified"] = len(sample)
    if args.save:
        save_cache(DEFAULT_MEMO, args.save)
        out["saved"] = args.save
    return out


# --- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False, allow_abbrev=False)
    common.add_argument("--cache", default=os.environ.get(CACHE_ENV),
                        help=f"memo cache file, loaded before and saved after the command (default ${CACHE_ENV})")
    common.add_argument("--max-vars", type=int, default=6, help="oracle budget: variables per set (default 6)")
    common.add_argument("--max-degree", type=int, default=12, help="oracle budget: Schur degree (default 12)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="lascoux", allow_abbrev=False,
                     description="Lascoux coefficients, Lascoux polynomials and SDP degrees.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], allow_abbrev=False, **kw)

    for name, methods, func in (("psi", ("minors", "schur", "formula"), cmd_psi),
                                ("d", ("schur", "formula"), cmd_d),
                                ("alpha", ("schur", "formula"), cmd_alpha)):
        p = add(name, help=f"Lascoux coefficient {name}")
        p.add_argument("--set", required=True, help="index set I, e.g. 0,2")
        if name == "d":
            p.add_argument("--set-j", required=True, help="index set J")
        p.add_argument("--method", choices=methods)
        p.add_argument("--cross-check", action="store_true", help="run every applicable method; exit 2 on disagreement")
        p.set_defaults(func=func)

    p = add("lp", help="Lascoux polynomial value or polynomial")
    p.add_argument("--type", choices="CAD", required=True)
    p.add_argument("--set", required=True)
    p.add_argument("--set-j")
    p.add_argument("--n", type=int)
    p.add_argument("--poly", action="store_true")
    p.add_argument("--extra-points", type=int, default=3)
    p.add_argument("--details", action="store_true", help="add closed form and validity floor")
    p.add_argument("--cross-check", action="store_true", help="with --n, compare against the coefficient oracle")
    p.set_defaults(func=cmd_lp)

    p = add("delta", help="algebraic degree delta(m, n, r)")
    p.add_argument("--type", choices="CAD", default="C")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_delta)

    p = add("delta-table", help="grid of delta(m, n, n - s)")
    p.add_argument("--type", choices="CAD", default="C")
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--m-min", type=int, default=1)
    p.add_argument("--m-max", type=int, default=5)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_delta_table)

    p = add("delta-poly", help="n -> delta(m, n, n - s) as a polynomial")
    p.add_argument("--type", choices="CAD", default="C")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--extra-points", type=int, default=2)
    p.set_defaults(func=cmd_delta_poly)

    p = add("verify-identities", help="random exact checks of the four rational identities")
    p.add_argument("--r-max", type=int, default=5)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_identities)

    p = add("cache", help="load / verify / save the memo cache")
    p.add_argument("--load")
    p.add_argument("--save")
    p.add_argument("--verify", type=int, default=0, metavar="K", help="recompute K random entries")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_cache)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    saved_err = sys.stderr
    sys.stderr = stderr
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return int(exc.code or 0)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=stderr)
        try:
            if args.cache and os.path.exists(args.cache):
                load_cache(DEFAULT_MEMO, args.cache)
            result = args.func(args)
            if args.cache:
                save_cache(DEFAULT_MEMO, args.cache)
        except LascouxError as exc:
            print(f"lascoux: {type(exc).__name__}: {exc}", file=stderr)
            return exc.exit_code
    finally:
        sys.stderr = saved_err
    stdout.write(result if isinstance(result, str) else json.dumps(result) + "\n")
    return 0


def main():
    sys.exit(run())
