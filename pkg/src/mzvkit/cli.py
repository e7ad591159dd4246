"""Command-line front end.

Subcommands: eval, reg, finite (eval/modp), modp, dsh (dim/prop66/groupring),
relations.  Global flags --digits, --cache, --format {json,csv}.  The exit
code is 0 exactly when every requested verdict is confirmed; informational
queries always exit 0 unless they raise.
"""

import argparse
import csv
import json
import sys

from .dsh import cyclic_invariance_kernel, dimension_table, dsh_dimension
from .finite import (
    primes_in_range,
    zeta_A_component,
    zeta_F,
    zeta_F_sharp,
    zeta_natural_A_component,
    zeta_natural_F,
)
from .groupring import groupring_identity_check
from .indices import check_index, format_index
from .numeric import DEFAULT_DIGITS, configure_cache, eval_admissible, eval_combo
from .regularization import (
    natural_regularize,
    shuffle_regularize,
    stuffle_regularize,
)
from .relations import (
    build_spanning_set,
    check_main_congruence,
    opposite_parity_indices,
    verify_congruence,
    verify_contraction_congruence,
    verify_word_dual_congruence,
)
from .series import normalize_scheme
from .indices import word_of_index

__all__ = ["build_parser", "main"]


def parse_index(text):
    """Accepts the canonical form "(1,2,3)" as well as bare "1,2,3"."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return ()
    try:
        return check_index(tuple(int(p) for p in body.split(",")))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def parse_int_range(text):
    """"0..12" or "5..100"; a single integer means a one-element range."""
    body = text.strip().replace(":", "..")
    if ".." in body:
        lo, hi = body.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(body)
    if hi < lo:
        raise argparse.ArgumentTypeError("empty range %r" % text)
    return lo, hi


def combo_json(combo):
    items = sorted(combo.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
    return {format_index(k): str(c) for k, c in items}


def regpoly_json(poly):
    return {"T^%d" % j: combo_json(poly.coefficient(j))
            for j in sorted(poly.coeffs)}


# ---------------------------------------------------------------------------
# handlers return (payload, rows, all_confirmed)

def cmd_eval(args):
    k = args.index
    # plain evaluation requires an admissible index; non-admissible input
    # belongs to the reg and finite subcommands
    value = eval_admissible(k, args.digits)
    row = {"index": format_index(k), "digits": args.digits,
           "value": value.to_decimal()}
    return row, [row], True


def cmd_reg(args):
    k = args.index
    scheme = normalize_scheme(args.scheme)
    if scheme == "stuffle":
        poly = stuffle_regularize(k)
    elif scheme == "shuffle":
        poly = shuffle_regularize(word_of_index(k))
    else:
        poly = natural_regularize(k)
    payload = {
        "index": format_index(k),
        "scheme": scheme,
        "polynomial": regpoly_json(poly),
        "constant_term": combo_json(poly.constant_term()),
    }
    rows = [{"T_degree": j, "combo": json.dumps(combo_json(poly.coefficient(j)))}
            for j in sorted(poly.coeffs)]
    return payload, rows, True


FINITE_SCHEMES = {"F": zeta_F, "Fsharp": zeta_F_sharp, "natural": zeta_natural_F}


def cmd_finite_eval(args):
    k = args.index
    combo = FINITE_SCHEMES[args.scheme](k)
    value = eval_combo(combo, args.digits)
    payload = {
        "index": format_index(k),
        "scheme": args.scheme,
        "combo": combo_json(combo),
        "value": value.to_decimal(),
        "digits": args.digits,
    }
    rows = [{"index": format_index(k), "scheme": args.scheme,
             "value": value.to_decimal()}]
    return payload, rows, True


def cmd_finite_modp(args):
    k = args.index
    lo, hi = args.primes
    component = zeta_natural_A_component if args.natural else zeta_A_component
    rows = []
    for p in primes_in_range(lo, hi):
        try:
            value = component(k, p)
        except ValueError:
            # small primes cannot invert the tie weights; skip them
            continue
        rows.append({"prime": value.prime, "residue": value.residue})
    payload = {
        "index": format_index(k),
        "variant": "natural" if args.natural else "plain",
        "rows": rows,
    }
    return payload, rows, True


def cmd_dsh_dim(args):
    lo, hi = args.d
    table = dimension_table(args.n, range(lo, hi + 1))
    rows = [{"n": args.n, "d": d, "weight": args.n + d, "dim": dim}
            for d, dim in sorted(table.items())]
    return {"n": args.n, "dims": {str(d): v for d, v in sorted(table.items())},
            "rows": rows}, rows, True


def cmd_dsh_prop66(args):
    basis_left = cyclic_invariance_kernel(args.n, args.d, pivot_order="left")
    basis_right = cyclic_invariance_kernel(args.n, args.d, pivot_order="right")
    agree = len(basis_left) == len(basis_right)
    row = {"n": args.n, "d": args.d, "kernel_dim": len(basis_left),
           "pivot_orders_agree": agree}
    payload = dict(row)
    payload["basis"] = [str(f) for f in basis_left]
    return payload, [row], agree


def cmd_dsh_groupring(args):
    holds = groupring_identity_check(args.n)
    row = {"n": args.n, "identity_holds": holds}
    return row, [row], holds


def _report_row(report):
    return {
        "target": report.target,
        "verdict": report.verdict,
        "height": report.height(),
        "residual": report.residual,
        "coefficients": "; ".join(
            "%s: %s" % (label, q) for label, q in report.coefficients if q != 0),
    }


def cmd_relations(args):
    reports = []
    if args.action == "main":
        reports.append(check_main_congruence(args.index, args.digits,
                                             args.denom_bound))
    elif args.action == "sweep":
        for k in opposite_parity_indices(args.max_weight, args.max_depth):
            reports.append(check_main_congruence(k, args.digits,
                                                 args.denom_bound))
    elif args.action == "contraction":
        both = verify_contraction_congruence(args.index, args.digits,
                                             args.denom_bound)
        reports.extend(both[r] for r in sorted(both))
        # only the weight-homogeneous reading is expected to hold
        rows = [_report_row(r) for r in reports]
        ok = both["weight_homogeneous"].confirmed()
        return {"reports": [r.to_json() for r in reports]}, rows, ok
    elif args.action == "word":
        reports.append(verify_word_dual_congruence(args.index, args.digits,
                                                   args.denom_bound))
    elif args.action == "health":
        from .numeric import BigReal
        target = eval_admissible((1, 3), args.digits)
        zero = BigReal.from_rational(0, args.digits)
        reports.append(verify_congruence(
            target, zero, build_spanning_set(4, 0, args.digits),
            denom_bound=args.denom_bound, digits=args.digits,
            target="z(1,3) in weight-4 product span"))
    rows = [_report_row(r) for r in reports]
    ok = all(r.confirmed() for r in reports)
    return {"reports": [r.to_json() for r in reports]}, rows, ok


# ---------------------------------------------------------------------------
# parser

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=argparse.SUPPRESS,
                        help="working precision in decimal digits")
    common.add_argument("--cache", default=argparse.SUPPRESS,
                        help="path to a JSON-lines value cache")
    common.add_argument("--format", choices=("json", "csv"),
                        default=argparse.SUPPRESS, dest="fmt",
                        help="output format")

    parser = argparse.ArgumentParser(
        prog="mzv",
        description="exact and high-precision multiple zeta value toolkit")
    parser.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    parser.add_argument("--cache", default=None)
    parser.add_argument("--format", choices=("json", "csv"), default="json",
                        dest="fmt")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common],
                       help="evaluate an admissible index numerically")
    p.add_argument("--index", type=parse_index, required=True)
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("reg", parents=[common],
                       help="regularization polynomial in T")
    p.add_argument("--index", type=parse_index, required=True)
    p.add_argument("--scheme", default="stuffle",
                   help="stuffle, shuffle, or natural (aliases *, #)")
    p.set_defaults(handler=cmd_reg)

    p = sub.add_parser("finite", parents=[common],
                       help="finite symmetric values, exact and mod p")
    fin = p.add_subparsers(dest="finite_action", required=True)
    fe = fin.add_parser("eval", parents=[common])
    fe.add_argument("--index", type=parse_index, required=True)
    fe.add_argument("--scheme", choices=sorted(FINITE_SCHEMES), default="F")
    fe.set_defaults(handler=cmd_finite_eval)
    fm = fin.add_parser("modp", parents=[common])
    fm.add_argument("--index", type=parse_index, required=True)
    fm.add_argument("--primes", type=parse_int_range, default=(5, 50))
    fm.add_argument("--natural", action="store_true")
    fm.set_defaults(handler=cmd_finite_modp)

    p = sub.add_parser("modp", parents=[common],
                       help="mod-p components (shorthand for finite modp)")
    p.add_argument("--index", type=parse_index, required=True)
    p.add_argument("--primes", type=parse_int_range, default=(5, 50))
    p.add_argument("--natural", action="store_true")
    p.set_defaults(handler=cmd_finite_modp)

    p = sub.add_parser("dsh", parents=[common],
                       help="linearized double-shuffle linear algebra")
    dsh = p.add_subparsers(dest="dsh_action", required=True)
    dd = dsh.add_parser("dim", parents=[common])
    dd.add_argument("--n", type=int, required=True)
    dd.add_argument("--d", type=parse_int_range, required=True)
    dd.set_defaults(handler=cmd_dsh_dim)
    dp = dsh.add_parser("prop66", parents=[common])
    dp.add_argument("--n", type=int, required=True)
    dp.add_argument("--d", type=int, required=True)
    dp.set_defaults(handler=cmd_dsh_prop66)
    dg = dsh.add_parser("groupring", parents=[common])
    dg.add_argument("--n", type=int, required=True)
    dg.set_defaults(handler=cmd_dsh_groupring)

    p = sub.add_parser("relations", parents=[common],
                       help="numeric congruence verdicts")
    p.add_argument("action",
                   choices=("main", "sweep", "contraction", "word", "health"))
    p.add_argument("--index", type=parse_index)
    p.add_argument("--max-weight", type=int, default=6)
    p.add_argument("--max-depth", type=int, default=3)
    p.add_argument("--denom-bound", type=int, default=10 ** 4)
    p.set_defaults(handler=cmd_relations)

    return parser


def _emit(payload, rows, fmt, out):
    if fmt == "json":
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        if not rows:
            return
        writer = csv.DictWriter(out, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "relations" and args.action in ("main", "contraction",
                                                       "word"):
        if args.index is None:
            parser.error("this relations action needs --index")
    if args.cache:
        configure_cache(args.cache)
    try:
        payload, rows, ok = args.handler(args)
    except ValueError as exc:
        print("mzv: error: %s" % exc, file=sys.stderr)
        return 2
    _emit(payload, rows, args.fmt, out)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
