"""Command-line front end.

Every command prints either CSV or a JSON document of the form
``{command, config, rows, warnings, failures}``.  Exact rationals are
always written as ``"p/q"`` strings.  Exit status: 0 success, 1 when a
check failed, 2 for usage errors.  Warnings (known misprints in the
published formulas) never change the exit status.
"""
import argparse
from concurrent.futures import ProcessPoolExecutor
import csv
from fractions import Fraction
from itertools import permutations, product
import io
import json
import random
import sys

from . import __version__
from .closed import (QuadIndex, closed_H1, closed_H2, closed_H3, closed_H4,
                     expanded_coeff_H1, expanded_coeff_H2, printed_H2, recurrence_H4)
from .det import CATALOGUE, DetSpec, approx, asym_table, dn_paths, log_magnitude
from .errors import CatalogueError, DomainError
from .exact import sign_power
from .fixtures import MAX_FIXTURE, paper_pk
from .moments import oracle_H
from .pk import (h4_identity_check, hsq_signs, pk_ansatz_solve, pk_interpolate,
                 pk_recursion_check, pk_value_via_recurrence, ratio_identity_check,
                 triviality_product)
from .series import exponent_tuples, gf_coefficient_H, gf_rhs

PK_MAX_DEFAULT = 8
COMMANDS = ("hvalue", "pk", "verify", "gfcheck", "dn", "asym", "table")

OUTPUT_SCHEMA = {
    "type": "object",
    "required": ["command", "config", "rows", "warnings", "failures"],
    "additionalProperties": False,
    "properties": {
        "command": {"enum": list(COMMANDS)},
        "config": {"type": "object"},
        "rows": {"type": "array", "items": {"type": "object"}},
        "warnings": {"type": "array", "items": {"type": "string"}},
        "failures": {"type": "array", "items": {"type": "string"}},
    },
}


class UsageError(Exception):
    pass


def rat_str(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _map(fn, items, jobs):
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(i) for i in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


class Report:
    def __init__(self, command, config):
        self.command = command
        self.config = config
        self.rows = []
        self.warnings = []
        self.failures = []

    def check(self, name, ok, detail=""):
        self.rows.append({"check": name, "status": "pass" if ok else "FAIL",
                          "detail": detail})
        if not ok:
            self.failures.append(f"{name}: {detail}" if detail else name)


# ---------------------------------------------------------------- hvalue

def _h_by_method(indices, method, order):
    n = len(indices)
    if method == "oracle":
        return oracle_H(indices)
    if n > 4:
        raise UsageError(f"method {method!r} supports 1-4 indices, got {n}")
    if method == "closed":
        return (closed_H1, closed_H2, closed_H3)[n - 1](*indices) if n < 4 else \
            closed_H4(QuadIndex(*indices))
    if method == "recurrence":
        return recurrence_H4(QuadIndex.of(indices))
    if method == "gf":
        order = sum(indices) if order is None else order
        if sum(indices) > order:
            raise UsageError(f"index sum {sum(indices)} exceeds --order {order}")
        return gf_coefficient_H(indices, gf_rhs(n, order))
    raise UsageError(f"unknown method {method!r}")


def cmd_hvalue(args, report):
    value = _h_by_method(args.indices, args.method, args.order)
    row = {"indices": " ".join(map(str, args.indices)), "method": args.method,
           "value": rat_str(value), "approx": approx(value)}
    if args.check:
        ref = oracle_H(args.indices)
        row["oracle"] = rat_str(ref)
        row["agree"] = value == ref
        if value != ref:
            report.failures.append(f"{args.method} disagrees with oracle: {value} != {ref}")
    report.rows.append(row)


# ---------------------------------------------------------------- pk

def cmd_pk(args, report):
    if not 0 <= args.k <= args.k_max:
        raise UsageError(f"--k must be in 0..{args.k_max}")
    poly = pk_interpolate(args.k)
    for (a, b, c), coef in poly.sorted_terms():
        report.rows.append({"a": a, "b": b, "c": c, "coefficient": rat_str(coef)})
    report.text = poly.dumps()
    if args.compare_paper:
        if args.k > MAX_FIXTURE:
            report.warnings.append(f"no published expression for P_{args.k}")
        else:
            ref = paper_pk(args.k)
            diff = sorted(set(ref.coeffs) ^ set(poly.coeffs)) + sorted(
                e for e in set(ref.coeffs) & set(poly.coeffs) if ref.coeffs[e] != poly.coeffs[e])
            report.check(f"P_{args.k} matches published expression", not diff,
                         "" if not diff else f"{len(diff)} monomials differ, first {diff[0]}")


# ---------------------------------------------------------------- verify

def _pairs(n):
    return product(range(n + 1), repeat=2)


def _claim1(args, report):
    N = args.max_index
    report.check(f"H_n closed form = oracle, n <= {N}",
                 all(closed_H1(n) == oracle_H([n]) for n in range(N + 1)))
    report.check(f"H_nm closed form = oracle, n,m <= {N}",
                 all(closed_H2(n, m) == oracle_H([n, m]) for n, m in _pairs(N)))
    report.check(f"H_nml closed form = oracle, n,m,l <= {N}",
                 all(closed_H3(*t) == oracle_H(t) for t in product(range(N + 1), repeat=3)))
    report.check("embedding H_n0 = H_n, H_nm0 = H_nm",
                 all(closed_H2(n, 0) == closed_H1(n) for n in range(N + 1))
                 and all(closed_H3(n, m, 0) == closed_H2(n, m) for n, m in _pairs(N)))
    report.check("one-variable series expansion = closed form",
                 all(expanded_coeff_H1(n) == closed_H1(n) for n in range(0, N + 1, 2)))
    report.check("two-variable series expansion = closed form",
                 all(expanded_coeff_H2(n, m) == closed_H2(n, m)
                     for n, m in _pairs(N) if (n + m) % 2 == 0))
    bad = [(n, m) for n, m in _pairs(N) if printed_H2(n, m) != oracle_H([n, m])]
    if bad:
        n, m = bad[0]
        report.warnings.append(
            f"printed sign (-1)^((n+m)/2) for H_nm fails on {len(bad)} pairs, e.g. "
            f"({n},{m}): oracle {rat_str(oracle_H([n, m]))} vs printed {rat_str(printed_H2(n, m))}; "
            f"(-1)^((n-m)/2) is used")


def _claim2_one(item):
    k, N = item
    bad = []
    for n, m, l in product(range(N + 1), repeat=3):
        if (n + m + l + k) % 2 == 0 and closed_H4(QuadIndex(n, m, l, k)) != oracle_H([n, m, l, k]):
            bad.append((n, m, l, k))
    return bad


def _claim2(args, report):
    N, K = args.max_index, args.k
    for k, bad in zip(range(K + 1), _map(_claim2_one, [(k, N) for k in range(K + 1)], args.jobs)):
        report.check(f"prefactor * P_{k} = oracle, n,m,l <= {N}", not bad,
                     f"first mismatch {bad[0]}" if bad else "")
    for k in range(1, K + 1):
        p = pk_interpolate(k)
        report.check(f"P_{k} symmetric of degree {2 * k}",
                     p.is_symmetric() and p.total_degree() == 2 * k)
    for k in range(min(K, MAX_FIXTURE) + 1):
        report.check(f"P_{k} matches published expression", pk_interpolate(k) == paper_pk(k))


def _recursion(args, report, rng):
    N, K = args.max_index, args.k
    report.check(f"descent relations for 0 <= j < k <= {K}",
                 all(pk_recursion_check(k, j) for k in range(1, K + 1) for j in range(k)))
    quads = list(product(range(N + 1), repeat=4))
    report.check(f"four-index recurrence = oracle, entries <= {N}",
                 all(recurrence_H4(QuadIndex(*q)) == oracle_H(q) for q in quads if sum(q) % 2 == 0))
    sample = [tuple(rng.randint(0, N) for _ in range(4)) for _ in range(20)]
    report.check("recurrence permutation invariance (seeded sample)",
                 all(len({recurrence_H4(QuadIndex(*p)) for p in permutations(q)}) == 1
                     for q in sample))
    for k in range(K + 1):
        p = pk_interpolate(k)
        report.check(f"P_{k}: polynomial recurrence = interpolation, args <= {N}",
                     all(pk_value_via_recurrence(k, *t) == p(*t)
                         for t in product(range(N + 1), repeat=3)))
    for k in range(1, min(K, 4) + 1):
        report.check(f"P_{k}: ansatz solve = interpolation", pk_ansatz_solve(k) == pk_interpolate(k))


def _identities(args, report):
    N, K = args.max_index, args.k
    even = [q for q in product(range(N + 1), repeat=4) if sum(q) % 2 == 0]
    report.check(f"six-fold product = (-1)^(sum/2), entries <= {N}",
                 all(triviality_product(*q) == sign_power(sum(q) // 2) for q in even))
    counts = {1: 0, -1: 0}
    for q in even:
        counts[int(triviality_product(*q))] += 1
    report.warnings.append(
        f"six-fold double-factorial product is not identically 1: "
        f"+1 on {counts[1]} quadruples, -1 on {counts[-1]} (e.g. (0,0,0,2) -> -1)")
    report.check(f"H^4 identity, entries <= {N}", all(h4_identity_check(q) for q in even))
    signs = [hsq_signs(q) for q in even]
    report.check(f"H^2 identity with sign +1, entries <= {N}", all(s["verified"] for s in signs))
    printed_bad = sum(not s["printed"] for s in signs)
    if printed_bad:
        report.warnings.append(
            f"printed sign (-1)^(sum/2) in the H^2 identity fails on {printed_bad} of "
            f"{len(signs)} quadruples; sign +1 holds on all")
    report.check(f"ratio identity for 0 <= l <= k <= {K}",
                 all(ratio_identity_check(k, l) for k in range(K + 1) for l in range(k + 1)))


def cmd_verify(args, report):
    rng = random.Random(args.seed)
    suites = ["claim1", "claim2", "recursion", "identities"] if args.suite == "all" else [args.suite]
    for s in suites:
        if s == "claim1":
            _claim1(args, report)
        elif s == "claim2":
            _claim2(args, report)
        elif s == "recursion":
            _recursion(args, report, rng)
        else:
            _identities(args, report)


# ---------------------------------------------------------------- gfcheck

def _gf_one(item):
    nf, order = item
    series = gf_rhs(nf, order)
    tuples = list(exponent_tuples(nf, order))
    bad = [t for t in tuples if gf_coefficient_H(t, series) != oracle_H(t)]
    return len(tuples), bad


def cmd_gfcheck(args, report):
    items = [(nf, args.order) for nf in range(1, 5)]
    for (nf, order), (count, bad) in zip(items, _map(_gf_one, items, args.jobs)):
        report.rows.append({"num_factors": nf, "order": order, "tuples": count,
                            "mismatches": len(bad)})
        if bad:
            report.failures.append(f"{nf}-variable series disagrees at {bad[0]}")


# ---------------------------------------------------------------- dn / asym / table

def parse_range(text):
    """'5' -> [5]; '0..16' -> [0..16]; '64,128,256' -> list."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out or min(out) < 0:
        raise argparse.ArgumentTypeError(f"bad index range {text!r}")
    return out


def _dn_row(item):
    n, r = item
    a, b = dn_paths(DetSpec(n, r))
    return {"n": n, "size": r, "value": rat_str(a), "approx": approx(a),
            "log_magnitude": log_magnitude(a) if a else None, "paths_agree": a == b}


def cmd_dn(args, report):
    if args.size < 1:
        raise UsageError("--size must be >= 1")
    for row in _map(_dn_row, [(n, args.size) for n in args.n], args.jobs):
        report.rows.append(row)
        if not row["paths_agree"]:
            report.failures.append(f"determinant paths disagree at n={row['n']}")
    report.config["conversion_factor"] = "multiply by sqrt(pi/2) for the unnormalized integral"


def _asym_rows(item):
    q, n = item
    r = asym_table(q, [n])[0]
    return {"quantity": r.quantity, "n": r.n, "exact_value": rat_str(r.exact_value),
            "exact": r.exact, "predicted": float(r.predicted), "abs_error": r.abs_error,
            "scale": r.scale}


def cmd_asym(args, report):
    quantities = args.quantity or list(CATALOGUE)
    for q in quantities:
        if q not in CATALOGUE:
            raise UsageError(f"unknown quantity {q!r}; catalogue: {', '.join(CATALOGUE)}")
    items = [(q, n) for q in quantities for n in args.n]
    report.rows.extend(_map(_asym_rows, items, args.jobs))


def _table_row(item):
    q, check = item
    v = recurrence_H4(QuadIndex(*q))
    row = {"n": q[0], "m": q[1], "l": q[2], "k": q[3], "value": rat_str(v)}
    if check:
        row["agree"] = v == oracle_H(q) == closed_H4(QuadIndex(*q))
    return row


def cmd_table(args, report):
    N = args.max_index
    quads = [q for q in product(range(N, -1, -1), repeat=4)
             if q[0] >= q[1] >= q[2] >= q[3] and sum(q) % 2 == 0]
    quads.sort(key=lambda q: (q[::-1]))
    for row in _map(_table_row, [(q, args.check) for q in quads], args.jobs):
        report.rows.append(row)
        if args.check and not row["agree"]:
            report.failures.append(f"evaluation paths disagree at {(row['n'], row['m'], row['l'], row['k'])}")


# ---------------------------------------------------------------- plumbing

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="hermint", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hvalue", parents=[common], help="evaluate one integral")
    s.add_argument("indices", type=int, nargs="+")
    s.add_argument("--method", choices=["oracle", "closed", "recurrence", "gf"], default="oracle")
    s.add_argument("--order", type=int)
    s.add_argument("--check", action="store_true")

    s = sub.add_parser("pk", help="print P_k in monomial form")
    s.add_argument("--format", choices=["text", "csv", "json"], default="text")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--k-max", type=int, default=PK_MAX_DEFAULT)
    s.add_argument("--compare-paper", action="store_true")

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("--suite", choices=["claim1", "claim2", "recursion", "identities", "all"],
                   default="all")
    s.add_argument("--max-index", type=int, default=8)
    s.add_argument("--k", type=int, default=4)

    s = sub.add_parser("gfcheck", parents=[common], help="series coefficients vs oracle")
    s.add_argument("--order", type=int, default=8)

    s = sub.add_parser("dn", parents=[common], help="determinant integrals")
    s.add_argument("--n", type=parse_range, default=[0])
    s.add_argument("--size", type=int, default=4)

    s = sub.add_parser("asym", parents=[common], help="large-n diagnostics")
    s.add_argument("--quantity", action="append")
    s.add_argument("--n", type=parse_range, default=[64, 128, 256])

    s = sub.add_parser("table", parents=[common], help="table of four-index integrals")
    s.add_argument("--max-index", type=int, default=6)
    s.add_argument("--check", action="store_true")
    return p


HANDLERS = {"hvalue": cmd_hvalue, "pk": cmd_pk, "verify": cmd_verify, "gfcheck": cmd_gfcheck,
            "dn": cmd_dn, "asym": cmd_asym, "table": cmd_table}


def _config(args):
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "format")}


def render(report, fmt):
    if fmt == "json":
        doc = {"command": report.command, "config": report.config, "rows": report.rows,
               "warnings": report.warnings, "failures": report.failures}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if fmt == "text":
        return getattr(report, "text", "") + "\n"
    buf = io.StringIO()
    if report.rows:
        fields = list(dict.fromkeys(k for row in report.rows for k in row))
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        w.writerows(report.rows)
    return buf.getvalue()


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    report = Report(args.command, _config(args))
    try:
        HANDLERS[args.command](args, report)
    except (UsageError, CatalogueError, DomainError) as exc:
        print(f"hermint {args.command}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(report, args.format))
    if args.format != "json":
        for w in report.warnings:
            print(f"WARN: {w}", file=sys.stderr)
        for f in report.failures:
            print(f"FAIL: {f}", file=sys.stderr)
    return 1 if report.failures else 0


if __name__ == "__main__":
    sys.exit(main())
