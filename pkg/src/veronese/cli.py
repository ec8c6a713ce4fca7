"""Command-line entry point.

Exit codes: 0 success, 1 verification-negative (a check that was asked
to certify something came back false, or a full survey found a
witness), 2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import functools
import json
import sys

from . import checks, jsonio
from .cohomology import CyclicAction, cohomology_orders, invariant_element
from .combinatorics import VeroneseParams, exponent_vectors, parametrize
from .fields import PrimeField
from .geometry import RootOfUnityError, fiber_check, jacobian_rank
from .gluing import GluingNotFoundError, SemigroupGens, completely_p_glued
from .groebner import PairLimitExceeded
from .polys import monomial_text
from .sci import (
    DEFAULT_ENUM_BUDGET,
    MODE_FULL,
    MODE_IMAGE,
    BudgetExceededError,
    build_certificate,
    full_ideal_point_survey,
    point_survey,
    verify_char_p,
)
from .toric import ZeroBinomialError, quadratic_generators, rewrite

OK, NEGATIVE, USAGE, BUDGET = 0, 1, 2, 3


def _emit(args, obj: dict, text_lines) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        for line in text_lines:
            print(line)


def _params_of(args) -> VeroneseParams:
    return VeroneseParams(args.n, args.p, args.h)


def _cmd_enumerate(args) -> int:
    params = _params_of(args)
    obj = jsonio.enumeration_obj(params)
    lines = [f"|T| = {params.cardinality()} for n = {params.n}, q = {params.q}"]
    lines += [
        f"  t = {e['tuple']}  a = {e['exponent']}" for e in obj["elements"]
    ]
    _emit(args, obj, lines)
    return OK


def _cmd_generators(args) -> int:
    params = _params_of(args)
    gens = quadratic_generators(params, full=args.full)
    obj = jsonio.generators_obj(params, gens)
    lines = [f"{len(gens)} quadratic generators"] + [
        f"  {g.text()}" for g in gens
    ]
    _emit(args, obj, lines)
    return OK


def _cmd_rewrite(args) -> int:
    raw = sys.stdin.read() if args.input == "-" else open(args.input).read()
    payload = json.loads(raw)
    if "params" not in payload:
        payload = dict(payload, params={"n": args.n, "p": args.p, "h": args.h})
    tsb = jsonio.type_star_from_obj(payload)
    cert = rewrite(tsb)
    obj = jsonio.rewrite_obj(cert, tsb.poly())
    lines = [f"input: {tsb.poly().text()}", f"{len(cert)} steps"]
    for st in cert.steps:
        sign = "+" if st.sign > 0 else "-"
        cof = monomial_text(st.cofactor.ring, st.cofactor.exps)
        lines.append(f"  {sign} ({st.quadratic.text()}) * {cof}")
    _emit(args, obj, lines)
    return OK


def _cmd_certificate(args) -> int:
    params = _params_of(args)
    cert = build_certificate(params)
    obj = jsonio.certificate_obj(cert)
    lines = [f"{len(cert)} binomials (N = |T| - n)"] + [
        f"  {g.text()}" for g in cert.binomials
    ]
    _emit(args, obj, lines)
    return OK


def _cmd_verify_sci(args) -> int:
    params = _params_of(args)
    report = verify_char_p(build_certificate(params), k_max=args.k_max)
    obj = jsonio.frobenius_obj(report)
    lines = [f"success: {report.success} (k_max = {report.k_max})"]
    for g, k in report.entries:
        mark = f"k = {k}" if k is not None else "NO k FOUND"
        lines.append(f"  {g.text()}: {mark}")
    _emit(args, obj, lines)
    return OK if report.success else NEGATIVE


def _cmd_points(args) -> int:
    params = _params_of(args)
    mode = MODE_IMAGE if args.mode == "image-only" else MODE_FULL
    if args.set == "certificate":
        report = point_survey(
            build_certificate(params), args.r, mode=mode, budget=args.budget
        )
    else:
        report = full_ideal_point_survey(params, args.r, mode=mode, budget=args.budget)
    obj = jsonio.points_obj(report)
    lines = [
        f"set = {report.set_label}, mode = {report.mode}, r = {report.r}",
        f"|V(F_{report.r})| = {report.count_image}",
    ]
    if report.count_zero_set is not None:
        lines.append(f"|Zero(F_{report.r})| = {report.count_zero_set}")
    lines.append(f"witness: {report.witness}")
    _emit(args, obj, lines)
    negative = report.mode == MODE_FULL and report.witness is not None
    return NEGATIVE if negative else OK


def _cmd_gluing(args) -> int:
    params = _params_of(args)
    gens = SemigroupGens.of(exponent_vectors(params))
    tree = completely_p_glued(gens, args.p, args.h, s_cap=args.s_cap)
    obj = jsonio.gluing_obj(params, tree)

    lines = []

    def walk(node, depth):
        pad = "  " * depth
        if node["type"] == "free":
            lines.append(f"{pad}free: {node['generators']}")
        else:
            w = node["witness"]
            lines.append(
                f"{pad}glued: alpha = {w['alpha']}, s = {w['s']}"
            )
            walk(node["left"], depth + 1)
            walk(node["right"], depth + 1)

    walk(obj["tree"], 0)
    _emit(args, obj, lines)
    return OK


def _cmd_jacobian(args) -> int:
    params = _params_of(args)
    if (args.u is None) == (args.point is None):
        raise ValueError("give exactly one of --u or --point")
    if args.u is not None:
        u = _int_list(args.u, params.n)
        w = parametrize(params, u, PrimeField(args.r))
    else:
        w = tuple(_int_list(args.point, params.cardinality()))
    report = jacobian_rank(params, quadratic_generators(params), w, args.r)
    obj = jsonio.jacobian_obj(report)
    big_n = params.cardinality() - params.n
    lines = [
        f"rank = {report.rank} (N = {big_n}) over F_{args.r}",
        f"triangular submatrix ok: {report.triangular_ok}",
        f"diagonal value: {report.diagonal_value}",
        f"index permutation: {report.permutation}",
    ]
    _emit(args, obj, lines)
    return OK


def _cmd_fibers(args) -> int:
    params = _params_of(args)
    u = tuple(_int_list(args.u, params.n))
    report = fiber_check(params, args.r, u)
    obj = jsonio.fiber_obj(report)
    lines = [
        f"mu_{params.q} = {list(report.roots_of_unity)} in F_{args.r}",
        f"fiber over phi({list(u)}): {[list(v) for v in report.fiber]}",
        f"orbit: {[list(v) for v in report.orbit]}",
        f"equal: {report.equal}",
    ]
    _emit(args, obj, lines)
    return OK if report.equal else NEGATIVE


def _cmd_cohomology(args) -> int:
    action = CyclicAction(args.q, args.a)
    table = cohomology_orders(action, i_max=args.i_max)
    obj = jsonio.cohomology_obj(table)
    lines = [f"q = {args.q}, a = {args.a}, invariant p^(h-1) = "
             f"{invariant_element(action)}"]
    lines += [f"  |H^{i}| = {o}" for i, o in table.as_dict().items()]
    _emit(args, obj, lines)
    return OK


def _cmd_reproduce(args) -> int:
    names = checks.CHECK_NAMES if not args.only else tuple(args.only)
    results = []
    for name in names:
        res = checks.run_check(name)
        results.append(res)
        status = "PASS" if res.passed else "FAIL"
        print(f"{name}: {status} ({res.elapsed:.2f} s <= {res.budget:.0f} s)  "
              f"{res.detail}")
    failed = [r.name for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed"
          + (f"; failing: {', '.join(failed)}" if failed else ""))
    return NEGATIVE if failed else OK


def _int_list(text: str, want: int) -> list:
    parts = [x.strip() for x in text.split(",")]
    vals = [int(x) for x in parts if x != ""]
    if len(vals) != want:
        raise ValueError(f"expected {want} comma-separated integers, got {len(vals)}")
    return vals


def _add_params(sp, with_r: bool = False) -> None:
    sp.add_argument("--n", type=int, required=True, help="number of parameters")
    sp.add_argument("--p", type=int, required=True, help="prime")
    sp.add_argument("--h", type=int, required=True, help="exponent, q = p^h")
    if with_r:
        sp.add_argument("--r", type=int, required=True, help="field modulus")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="veronese",
        description="Exact computations on degree-q Veronese cones over "
        "prime fields and the integers.",
    )
    ap.add_argument("--format", choices=("text", "json"), default="text")
    # accepted after the subcommand too; SUPPRESS keeps a pre-subcommand
    # value from being clobbered by the subparser default
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"),
                     default=argparse.SUPPRESS)
    sub = ap.add_subparsers(
        dest="command",
        required=True,
        parser_class=functools.partial(argparse.ArgumentParser, parents=[fmt]),
    )

    sp = sub.add_parser("enumerate", help="list index tuples and exponent vectors")
    _add_params(sp)
    sp.set_defaults(fn=_cmd_enumerate)

    sp = sub.add_parser("generators", help="quadratic binomial generators")
    _add_params(sp)
    sp.add_argument("--full", action="store_true",
                    help="all pairwise differences, not one leader per class")
    sp.set_defaults(fn=_cmd_generators)

    sp = sub.add_parser(
        "rewrite",
        help="certificate writing a block-permutation binomial over the quadrics",
    )
    _add_params(sp)
    sp.add_argument("--input", default="-",
                    help='JSON file with "blocks" and "sigma" ("-" = stdin)')
    sp.set_defaults(fn=_cmd_rewrite)

    sp = sub.add_parser("certificate", help="the N codimension binomials")
    _add_params(sp)
    sp.set_defaults(fn=_cmd_certificate)

    sp = sub.add_parser(
        "verify-sci",
        help="Frobenius radical-membership verification in characteristic p",
    )
    _add_params(sp)
    sp.add_argument("--k-max", type=int, default=None)
    sp.set_defaults(fn=_cmd_verify_sci)

    sp = sub.add_parser("points", help="finite-field point survey")
    _add_params(sp, with_r=True)
    sp.add_argument("--set", choices=("certificate", "ideal"), default="certificate")
    sp.add_argument("--mode", choices=("full-enumeration", "image-only"),
                    default="full-enumeration")
    sp.add_argument("--budget", type=int, default=DEFAULT_ENUM_BUDGET)
    sp.set_defaults(fn=_cmd_points)

    sp = sub.add_parser("gluing", help="complete p-gluing tree for T")
    _add_params(sp)
    sp.add_argument("--s-cap", type=int, default=None)
    sp.set_defaults(fn=_cmd_gluing)

    sp = sub.add_parser("jacobian", help="Jacobian rank and triangular submatrix")
    _add_params(sp, with_r=True)
    sp.add_argument("--u", default=None, help="parameter point, e.g. 1,2,3")
    sp.add_argument("--point", default=None, help="ambient point, |T| coordinates")
    sp.set_defaults(fn=_cmd_jacobian)

    sp = sub.add_parser("fibers", help="covering fiber vs root-of-unity orbit")
    _add_params(sp, with_r=True)
    sp.add_argument("--u", required=True, help="parameter point, e.g. 1,2,3")
    sp.set_defaults(fn=_cmd_fibers)

    sp = sub.add_parser("cohomology", help="cyclic group cohomology orders")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--i-max", type=int, default=6)
    sp.set_defaults(fn=_cmd_cohomology)

    sp = sub.add_parser("reproduce-paper",
                        help="run the pinned acceptance matrix")
    sp.add_argument("--only", nargs="*", choices=checks.CHECK_NAMES,
                    default=None, metavar="NAME")
    sp.set_defaults(fn=_cmd_reproduce)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (BudgetExceededError, PairLimitExceeded) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return BUDGET
    except GluingNotFoundError as exc:
        print(f"verification negative: {exc}", file=sys.stderr)
        return NEGATIVE
    except (RootOfUnityError, ZeroBinomialError, ValueError, OSError,
            json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
