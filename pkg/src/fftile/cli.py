"""Command-line front end.

Exit codes: 0 property holds / object found, 1 property fails / nothing
found, 2 usage or input error, 3 a computed object contradicts a proven
structural theorem.  JSON reports go to stdout, a one-line summary to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import manifest
from .errors import BudgetExceeded, FFTileError, InternalContradiction, NotATiling
from .ffvec import PointSet, directions, norm, vsub
from .fourier import (
    dft,
    equidistribution_check,
    hyperplane_stats,
    tiling_fourier_check,
    trace_identity,
    variance_decomposition,
    zero_set,
)
from .packing import (
    disjoint,
    isotropic_pack,
    pack_circles,
    packing_number,
    realize,
    sphere_pack_check,
    optimal_packing_set,
)
from .polyring import moment_identity_first, moment_identity_second, tiling_poly_check
from .tiling import (
    GraphWitness,
    classify_1_tiling,
    decompose_k_tiling,
    graph_tiling_partner,
    graphical_check,
    search_tilings,
    tiling_direct_check,
    verify_witness,
)

OK, FAIL, USAGE, CONTRADICTION = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _emit(report: dict, summary: str) -> None:
    json.dump(report, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")
    print(summary, file=sys.stderr)


def _vec(text: str) -> tuple:
    try:
        return tuple(int(a) for a in text.split(","))
    except ValueError as exc:
        raise _UsageError(f"cannot parse vector {text!r}") from exc


def _check_space(args, *objs) -> None:
    p, d = objs[0].p, objs[0].d
    for o in objs[1:]:
        if (o.p, o.d) != (p, d):
            raise _UsageError("inputs live in different spaces")
    if getattr(args, "p", None) is not None and args.p != p:
        raise _UsageError(f"--p {args.p} but the manifests use p = {p}")
    if getattr(args, "d", None) is not None and args.d != d:
        raise _UsageError(f"--d {args.d} but the manifests use d = {d}")


def _frac(x: Fraction) -> str:
    return str(x)


# -- tile ---------------------------------------------------------------------


def cmd_tile_verify(args) -> int:
    E, A = manifest.load_set(args.e), manifest.load_set(args.a)
    _check_space(args, E, A)
    direct = tiling_direct_check(E, A, args.k)
    fourier = tiling_fourier_check(E, A, args.k)
    poly = tiling_poly_check(E, A, args.k)
    agree = direct.holds == fourier == poly
    report = {
        "command": "tile verify", "p": E.p, "d": E.d, "k": args.k,
        "direct": direct.holds, "fourier": fourier, "poly": poly, "agree": agree,
        "histogram": {str(m): c for m, c in direct.histogram.items()},
    }
    _emit(report, f"direct={direct.holds} fourier={fourier} poly={poly}")
    if not agree:
        return CONTRADICTION
    return OK if direct.holds else FAIL


def cmd_tile_classify(args) -> int:
    E, A = manifest.load_set(args.e), manifest.load_set(args.a)
    _check_space(args, E, A)
    report = {"command": "tile classify", "p": E.p, "d": E.d}
    if E.d == 2:
        cls = classify_1_tiling(E, A)
        report.update(case=cls.case, witness=cls.witness.to_json(),
                      partner=graph_tiling_partner(cls.witness).to_list())
        _emit(report, f"{cls.case}: {cls.witness.kind} along {cls.witness.direction}")
        return OK
    res = graphical_check(E, A)
    report.update(graph=res.which, guaranteed=res.guaranteed, notes=list(res.notes),
                  witness=res.witness.to_json() if res.witness else None)
    _emit(report, f"graph: {res.which}")
    return OK if res.which else FAIL


def cmd_tile_decompose(args) -> int:
    E, A = manifest.load_set(args.e), manifest.load_set(args.a)
    _check_space(args, E, A)
    dec = decompose_k_tiling(E, A, args.k)
    report = {
        "command": "tile decompose", "p": E.p, "d": E.d, "k": args.k, "case": dec.case,
        "s": dec.s, "direction": list(dec.direction) if dec.direction else None,
        "parts": [w.to_json() for w in dec.parts],
    }
    _emit(report, f"{dec.case}, s = {dec.s}")
    return OK


def cmd_tile_search(args) -> int:
    pairs = []
    for E, A in search_tilings(args.p, args.d, args.size, args.limit, args.per_set):
        res = graphical_check(E, A)
        pairs.append({"E": E.to_list(), "A": A.to_list(), "graph": res.which})
    report = {"command": "tile search", "p": args.p, "d": args.d, "size": args.size,
              "pairs": pairs, "non_graphical": sum(1 for x in pairs if x["graph"] is None)}
    _emit(report, f"{len(pairs)} tiling pairs, {report['non_graphical']} undecided or non-graphical")
    return OK if pairs else FAIL


# -- fourier --------------------------------------------------------------------


def cmd_fourier_spectrum(args) -> int:
    f = manifest.load_function(args.f)
    F = dft(f)
    report = {"command": "fourier spectrum", "p": f.p, "d": f.d,
              "coefficients": [{"m": list(m), "value": c.to_json()} for m, c in F.items()]}
    _emit(report, f"{len(F.coeffs)} coefficients")
    return OK


def cmd_fourier_zeros(args) -> int:
    f = manifest.load_function(args.f)
    zs = zero_set(dft(f))
    dirs = [m for m in directions(f.p, f.d) if m in set(zs)]
    report = {"command": "fourier zeros", "p": f.p, "d": f.d,
              "zeros": [list(m) for m in zs], "directions": [list(m) for m in dirs]}
    _emit(report, f"{len(zs)} vanishing frequencies on {len(dirs)} lines")
    return OK if zs else FAIL


def cmd_fourier_stats(args) -> int:
    f = manifest.load_function(args.f)
    ms = [_vec(args.m)] if args.m else list(directions(f.p, f.d))
    stats = []
    for m in ms:
        h = hyperplane_stats(f, m)
        tr = trace_identity(f, m)
        stats.append({
            "direction": list(h.direction),
            "averages": [_frac(u) for u in h.averages],
            "mean": _frac(h.mean), "variance": _frac(h.variance),
            "trace_abs_sq": _frac(h.trace_abs_sq),
            "trace_plain": [_frac(x) for x in tr["plain"]],
            "trace_squared": [_frac(x) for x in tr["squared"]],
        })
    report = {"command": "fourier stats", "p": f.p, "d": f.d, "stats": stats}
    if not args.m:
        lhs, rhs = variance_decomposition(f)
        report["decomposition"] = {"mean_square": _frac(lhs), "mu_sq_plus_variances": _frac(rhs)}
    _emit(report, f"stats for {len(stats)} directions")
    return OK


def cmd_fourier_equi(args) -> int:
    E = manifest.load_set(args.f)
    ms = [_vec(args.m)] if args.m else list(directions(E.p, E.d))
    rows = [equidistribution_check(E, m) for m in ms]
    report = {"command": "fourier equi", "p": E.p, "d": E.d,
              "directions": [{"m": list(r.direction), "counts": list(r.counts),
                              "equidistributed": r.equidistributed} for r in rows]}
    hits = sum(r.equidistributed for r in rows)
    _emit(report, f"equidistributed along {hits} of {len(rows)} directions")
    return OK if hits else FAIL


# -- poly -------------------------------------------------------------------------


def cmd_poly_check(args) -> int:
    E, A = manifest.load_set(args.e), manifest.load_set(args.a)
    _check_space(args, E, A)
    ok = tiling_poly_check(E, A, args.k)
    _emit({"command": "poly check", "p": E.p, "d": E.d, "k": args.k, "holds": ok}, f"poly identity: {ok}")
    return OK if ok else FAIL


def cmd_poly_moments(args) -> int:
    E, A = manifest.load_set(args.e), manifest.load_set(args.a)
    _check_space(args, E, A)
    first = moment_identity_first(E, A)
    second = [moment_identity_second(E, A, j) for j in range(1, E.d + 1)]
    vanish = not any(first) and not any(second)
    report = {"command": "poly moments", "p": E.p, "d": E.d,
              "first": list(first), "second": second, "vanish": vanish}
    _emit(report, f"first={first} second={second}")
    return OK if vanish else FAIL


# -- pack ------------------------------------------------------------------------


def cmd_pack_circles(args) -> int:
    res = pack_circles(args.p, args.c, args.k, args.allow_zero_distance, budget=args.budget)
    report = {"command": "pack circles", "p": args.p, "c": args.c, "k": args.k,
              "found": res is not None, "packing": res.to_json() if res else None}
    _emit(report, f"{args.k} circles: {'found' if res else 'impossible'}")
    return OK if res else FAIL


def cmd_pack_number(args) -> int:
    value, res = packing_number(args.p, args.c, args.mode, budget=args.budget)
    report = {"command": "pack number", "p": args.p, "c": args.c, "mode": args.mode,
              "value": value, "packing": res.to_json()}
    _emit(report, f"P({args.p},{args.c}) = {value} ({args.mode})")
    return OK


def cmd_pack_isotropic(args) -> int:
    rep = isotropic_pack(args.p, args.c)
    report = {"command": "pack isotropic", "p": args.p, "c": args.c, "i": rep.i,
              "packing": rep.result.to_json(), "complement": rep.complement.to_list(),
              "complement_is_line": rep.complement_is_line}
    _emit(report, f"{len(rep.result.centers)} circles on {{(t,{rep.i}t)}}")
    return OK if rep.result.certified and rep.complement_is_line else FAIL


def cmd_pack_sphere(args) -> int:
    rep = sphere_pack_check(args.p, args.d, args.t, exploratory=args.exploratory, budget=args.budget)
    report = {"command": "pack sphere", "p": args.p, "d": args.d, "t": args.t, "size": rep.size,
              "shifts_checked": len(rep.witnesses),
              "counterexample": list(rep.counterexample) if rep.counterexample else None}
    if args.witnesses:
        report["witnesses"] = [[list(v), list(x), list(y)] for v, (x, y) in rep.witnesses.items()]
    _emit(report, f"optimal packing of S_{args.t} in F_{args.p}^{args.d}: {rep.size}")
    return OK if rep.size == 1 else FAIL


def cmd_pack_set(args) -> int:
    E = manifest.load_set(args.e)
    res = optimal_packing_set(E, budget=args.budget)
    report = {"command": "pack set", "p": E.p, "d": E.d, "packing": res.to_json()}
    _emit(report, f"|A| = {len(res.centers)}, density {res.density}")
    return OK


# -- verify ------------------------------------------------------------------------


def _verify_packing(data: dict) -> bool:
    p, d = data["p"], data["d"]
    centers = [tuple(c) for c in data["centers"]]
    if "tile" in data:
        tile = PointSet(p, d, tuple(tuple(x) for x in data["tile"]))
        sets = [tile.translate(c) for c in centers]
    else:
        sets = [realize(p, c, data["radius"]) for c in centers]
    for i, j, dist in data.get("distances", []):
        if norm(vsub(centers[i], centers[j], p), p) != dist:
            return False
    size = len(sets[0]) if sets else 0
    return disjoint(sets) and Fraction(data["density"]) == Fraction(size * len(centers), p ** d)


def cmd_verify(args) -> int:
    try:
        with open(args.report) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _UsageError(f"cannot read report: {exc}") from exc
    checks = {}
    if data.get("witness"):
        checks["witness"] = verify_witness(GraphWitness.from_json(data["witness"]))
    for j, part in enumerate(data.get("parts") or []):
        checks[f"part{j}"] = verify_witness(GraphWitness.from_json(part))
    if data.get("packing"):
        checks["packing"] = _verify_packing(data["packing"])
    if not checks:
        raise _UsageError("report carries no witness to verify")
    ok = all(checks.values())
    _emit({"command": "verify", "checks": checks, "valid": ok}, f"valid={ok}")
    return OK if ok else FAIL


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fftile", description="Tilings and packings over prime fields.")
    parser.add_argument("--threads", type=int, default=1,
                        help="accepted for interface compatibility; results never depend on it")
    parser.add_argument("--budget", type=int, default=None,
                        help="clique search node budget (default: FFTILE_NODE_BUDGET or 1e8)")
    top = parser.add_subparsers(dest="group", required=True)

    def pair(sp, with_k=True):
        sp.add_argument("--e", required=True, help="set manifest path or fixture:NAME")
        sp.add_argument("--a", required=True, help="set manifest path or fixture:NAME")
        sp.add_argument("--p", type=int)
        sp.add_argument("--d", type=int)
        if with_k:
            sp.add_argument("--k", type=int, required=True)

    tile = top.add_parser("tile").add_subparsers(dest="cmd", required=True)
    sp = tile.add_parser("verify"); pair(sp); sp.set_defaults(func=cmd_tile_verify)
    sp = tile.add_parser("classify"); pair(sp, False); sp.set_defaults(func=cmd_tile_classify)
    sp = tile.add_parser("decompose"); pair(sp); sp.set_defaults(func=cmd_tile_decompose)
    sp = tile.add_parser("search")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--limit", type=int, default=20)
    sp.add_argument("--per-set", type=int, default=None)
    sp.set_defaults(func=cmd_tile_search)

    four = top.add_parser("fourier").add_subparsers(dest="cmd", required=True)
    for name, func in (("spectrum", cmd_fourier_spectrum), ("zeros", cmd_fourier_zeros),
                       ("stats", cmd_fourier_stats), ("equi", cmd_fourier_equi)):
        sp = four.add_parser(name)
        sp.add_argument("--f", required=True, help="function or set manifest")
        sp.add_argument("--m", help="direction as comma-separated residues")
        sp.set_defaults(func=func)

    poly = top.add_parser("poly").add_subparsers(dest="cmd", required=True)
    sp = poly.add_parser("check"); pair(sp); sp.set_defaults(func=cmd_poly_check)
    sp = poly.add_parser("moments"); pair(sp, False); sp.set_defaults(func=cmd_poly_moments)

    pack = top.add_parser("pack").add_subparsers(dest="cmd", required=True)
    sp = pack.add_parser("circles")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--allow-zero-distance", action="store_true")
    sp.set_defaults(func=cmd_pack_circles)
    sp = pack.add_parser("number")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--mode", choices=["full", "nonzero"], default="full")
    sp.set_defaults(func=cmd_pack_number)
    sp = pack.add_parser("isotropic")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)
    sp.set_defaults(func=cmd_pack_isotropic)
    sp = pack.add_parser("sphere")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--exploratory", action="store_true")
    sp.add_argument("--witnesses", action="store_true", help="include the shift witness table")
    sp.set_defaults(func=cmd_pack_sphere)
    sp = pack.add_parser("set")
    sp.add_argument("--e", required=True)
    sp.set_defaults(func=cmd_pack_set)

    sp = top.add_parser("verify", help="re-verify a witness embedded in a report")
    sp.add_argument("report")
    sp.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except InternalContradiction as exc:
        print(f"internal contradiction: {exc}", file=sys.stderr)
        return CONTRADICTION
    except NotATiling as exc:
        print(f"not a tiling: {exc}", file=sys.stderr)
        return USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return USAGE
    except (_UsageError, manifest.ManifestError, FFTileError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
