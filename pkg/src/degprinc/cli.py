"""Command-line front end: ``degprinc <command> ...``.

Structured output is one JSON document on stdout; diagnostics go to stderr.
Exit codes: 0 solved/ok, 2 infeasible-numerically or a failed check, 1 error,
64 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction

import numpy as np

from . import __version__
from .coxeter import GroupError, parse_group

EXIT_OK, EXIT_ERROR, EXIT_INFEASIBLE, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _jsonable(obj):
    from .field import Coefficient
    from .poly import Polynomial

    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, Coefficient):
        return obj.to_json()
    if isinstance(obj, Polynomial):
        return obj.to_string()
    if isinstance(obj, (float, np.floating)):
        return float(f"{float(obj):.12g}")
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    return str(obj)


def _strip_timing(obj):
    if isinstance(obj, dict):
        return {k: _strip_timing(v) for k, v in obj.items() if k != "timing"}
    if isinstance(obj, list):
        return [_strip_timing(v) for v in obj]
    return obj


def _emit(args, doc: dict, text: str | None = None) -> None:
    doc = _jsonable(doc)
    if not args.timing:
        doc = _strip_timing(doc)
    if args.format == "json" or text is None:
        print(json.dumps(doc, sort_keys=True, indent=1))
    else:
        print(text)


def _point(text: str) -> list:
    out = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        try:
            out.append(Fraction(tok))
        except ValueError:
            try:
                out.append(float(tok))
            except ValueError:
                raise UsageError(f"bad coordinate {tok!r}") from None
    return out


def _group(text: str):
    try:
        return parse_group(text)
    except GroupError as e:
        raise UsageError(str(e)) from None


def _basis(g, variant=None, tie=None, count=None):
    from .invariants import basic_invariants

    tie_t = tuple(Fraction(v) for v in tie.split(",")) if tie else (1, 0)
    return basic_invariants(g, variant, tie_t, count)


# ---------------------------------------------------------------------------
# commands


def cmd_invariants(args) -> int:
    g = _group(args.group)
    b = _basis(g, args.variant, args.tie, args.count)
    doc = {"group": g.label, "variant": b.variant, "degrees": list(b.degrees),
           "invariants": [{"degree": p.degree(), "poly": p.to_string()} for p in b.polys]}
    text = "\n".join(f"pi{i + 1} (degree {p.degree()}): {p.to_string()}"
                     for i, p in enumerate(b.polys))
    _emit(args, doc, text)
    return EXIT_OK


def cmd_degrees(args) -> int:
    g = _group(args.group)
    _emit(args, {"group": g.label, "degrees": list(g.degrees)},
          ",".join(map(str, g.degrees)))
    return EXIT_OK


def cmd_parnum(args) -> int:
    from .parabolic import parnum_detail

    g = _group(args.group)
    r = parnum_detail(g, args.d)
    doc = {"group": g.label, "d": args.d, "parnum": r.value, "W": r.witness_type,
           "top_W": r.witness_top, "nodes": list(r.subset)}
    _emit(args, doc, f"{r.value} (W = {r.witness_type}, top degree {r.witness_top})")
    return EXIT_OK


def cmd_secparnum(args) -> int:
    from .parabolic import secparnum

    g = _group(args.group)
    v = secparnum(g, args.k)
    _emit(args, {"group": g.label, "k": args.k, "secparnum": v}, str(v))
    return EXIT_OK


def cmd_table1(args) -> int:
    from .parabolic import table1

    b = table1(_group(args.group))
    _emit(args, b.to_json(), b.to_text())
    return EXIT_OK


def cmd_strata(args) -> int:
    from .arrangement import flats, patterns

    g = _group(args.group)
    doc = {"group": g.label, "k": args.k}
    lines = []
    if args.list_patterns or not args.count_flats:
        if g.family not in ("A", "B", "D"):
            if args.list_patterns:
                raise UsageError("patterns exist for A, B and D only")
        else:
            pats = patterns(g.family, g.ambient, args.k)
            doc["patterns"] = [p.to_json() for p in pats]
            lines += [str(p) for p in pats]
    if args.count_flats or g.family not in ("A", "B", "D"):
        n = len(flats(g, args.k))
        doc["flats"] = n
        lines.append(f"{n} flats of dimension {args.k}")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_stratum_dim(args) -> int:
    from .arrangement import stratum_dim

    g = _group(args.group)
    p = _point(args.point)
    if len(p) != g.ambient:
        raise UsageError(f"{g.label} acts on R^{g.ambient}; got {len(p)} coordinates")
    v = stratum_dim(g, p, essential=args.essential)
    _emit(args, {"group": g.label, "point": p, "stratum_dim": v}, str(v))
    return EXIT_OK


def cmd_jacobian_rank(args) -> int:
    from .arrangement import jacobian_rank

    g = _group(args.group)
    p = _point(args.point)
    if len(p) != g.ambient:
        raise UsageError(f"{g.label} acts on R^{g.ambient}; got {len(p)} coordinates")
    b = _basis(g, args.variant)
    v = jacobian_rank(b.polys, p, args.k)
    _emit(args, {"group": g.label, "point": p, "k": args.k, "rank": v}, str(v))
    return EXIT_OK


def _objective(g, text: str, k, variant, tie):
    from .invariants import SparseObjective
    from .poly import parse

    # the top H4 invariants take minutes to average; build only those used
    count = max(parse(text, "y").nvars, 1) if g.family == "H4" else None
    b = _basis(g, variant, tie, count)
    F = parse(text, "y", nvars=len(b))
    return SparseObjective(F, b, k or 0)


def _solution_exit(status: str) -> int:
    return EXIT_OK if status == "solved" else EXIT_INFEASIBLE


def cmd_solve(args) -> int:
    from .invariants import basic_invariants
    from .reduce import Constraint, Problem, brute_oracle, solve_on_strata

    g = _group(args.group)
    c = Constraint.parse(args.constraint)
    if args.sense == "feasible":
        obj = None
        basis = _basis(g, args.variant, args.tie, max(len(c.targets), 1) if g.family == "H4" else None)
    else:
        if not args.objective:
            raise UsageError("--objective is required for min/max")
        obj = _objective(g, args.objective, args.k, args.variant, args.tie)
        basis = obj.basis
    p = Problem(g, obj, c, args.sense, coercive=args.coercive, budget=args.budget,
                seed=args.seed, basis=basis)
    sol = solve_on_strata(p, jobs=args.jobs)
    doc = {"group": g.label, "constraint": c.to_json(), "sense": args.sense, **sol.to_json()}
    if args.oracle:
        ref = brute_oracle(p)
        doc["oracle"] = ref.to_json()
        if sol.value is not None and ref.value is not None:
            doc["oracle_gap"] = abs(sol.value - ref.value)
    text = "\n".join(f"{k}: {v}" for k, v in _strip_timing(_jsonable(doc)).items())
    _emit(args, doc, text)
    return _solution_exit(sol.status)


def cmd_nonneg(args) -> int:
    from .reduce import check_nonneg

    g = _group(args.group)
    f = _objective(g, args.objective, None, args.variant, args.tie)
    cons = [_objective(g, c, None, args.variant, args.tie) for c in args.constraint or []]
    r = check_nonneg(f, cons, sphere=args.sphere, budget=args.budget, seed=args.seed)
    doc = {"group": g.label, **r}
    _emit(args, doc, f"{r['verdict']} (min {r['min']})")
    return EXIT_OK if r["verdict"] == "nonneg" else EXIT_INFEASIBLE


def cmd_f4(args) -> int:
    from .certificates import f4_certificate

    r = f4_certificate()
    text = (f"F4 degree-6 invariant on S^3: min {r['min']}, max {r['max']}; interior critical"
            f" values {', '.join(r['interior_values'])}")
    _emit(args, r, text)
    return EXIT_OK


def cmd_h4(args) -> int:
    from .certificates import h4_evidence

    r = h4_evidence(budget=args.budget or 64, seed=args.seed)
    text = "\n".join(
        f"{s}: value {r[s]['value']:.12g}, stratum_dim {r[s]['stratum_dim']}, orbit distance "
        f"e1 {r[s]['orbit_distance']['e1']:.1e}, e1+e2 {r[s]['orbit_distance']['e1+e2']:.1e}"
        for s in ("min", "max"))
    _emit(args, r, text)
    return EXIT_OK


def cmd_lie_solve(args) -> int:
    from .lie import lie_reduce, lie_solve, parse_lie

    F = parse_lie(args.kind, args.n, args.objective)
    targets = {}
    for t in args.target or []:
        name, _, val = t.partition("=")
        if not val:
            raise UsageError(f"bad target {t!r}; use name=value")
        targets[name.strip()] = float(val)
    lp = lie_reduce(args.kind, args.n, F, targets, args.sense, seed=args.seed, budget=args.budget)
    out = lie_solve(lp)
    sol = out.pop("solution")
    doc = {"kind": args.kind, "n": args.n, **out}
    text = "\n".join(f"{k}: {v}" for k, v in _strip_timing(_jsonable(doc)).items())
    _emit(args, doc, text)
    return _solution_exit(sol.status)


def cmd_selftest(args) -> int:
    from .acceptance import run_all

    sel = {int(v) for v in args.criteria.split(",")} if args.criteria else None
    results = run_all(sel, stream=sys.stderr)
    doc = {"criteria": [{"number": r.number, "title": r.title, "passed": r.passed,
                         "detail": r.detail, "timing": r.elapsed,
                         "failures": r.failures[:20]} for r in results]}
    text = "\n".join(r.line() for r in results)
    _emit(args, doc, text)
    return EXIT_OK if all(r.passed for r in results) else EXIT_INFEASIBLE


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for all randomness")
    common.add_argument("--jobs", type=int, default=1, help="worker threads for slice searches")
    common.add_argument("--format", choices=("text", "json"), default="json")
    common.add_argument("--timing", action="store_true", help="include wall-clock timings")

    ap = _Parser(prog="degprinc", description="Degree-principle tools for finite reflection groups.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(fn=fn)
        return p

    def basis_flags(p):
        p.add_argument("--variant", help="basic invariant family (powersum, elementary, ...)")
        p.add_argument("--tie", help="alpha,beta for the repeated degree of D_n, n even")

    p = add("invariants", cmd_invariants, "basic invariants in ascending degree")
    p.add_argument("group")
    basis_flags(p)
    p.add_argument("--count", type=int, help="build only the first COUNT invariants")
    p = add("degrees", cmd_degrees, "degrees of the basic invariants")
    p.add_argument("group")
    p = add("parnum", cmd_parnum, "parabolic bound at degree d")
    p.add_argument("group")
    p.add_argument("d", type=int)
    p = add("secparnum", cmd_secparnum, "parabolic bound at twice the k-th degree")
    p.add_argument("group")
    p.add_argument("k", type=int)
    p = add("table1", cmd_table1, "all parabolic bounds of a group")
    p.add_argument("group")
    p = add("strata", cmd_strata, "stratum patterns or flat counts")
    p.add_argument("group")
    p.add_argument("k", type=int)
    p.add_argument("--list-patterns", action="store_true")
    p.add_argument("--count-flats", action="store_true")
    p = add("stratum-dim", cmd_stratum_dim, "dimension of the smallest flat through a point")
    p.add_argument("group")
    p.add_argument("point", help="comma-separated coordinates, e.g. 1,1,1/2,0")
    p.add_argument("--essential", action="store_true", help="drop the fixed subspace")
    p = add("jacobian-rank", cmd_jacobian_rank, "rank of the Jacobian of pi_1..pi_{k+1}")
    p.add_argument("group")
    p.add_argument("point")
    p.add_argument("k", type=int)
    p.add_argument("--variant")

    p = add("solve", cmd_solve, "optimize or find a point over the k-stratum")
    p.add_argument("--group", required=True)
    p.add_argument("--objective", help="polynomial in y1, y2, ... (the basic invariants)")
    p.add_argument("--k", type=int, help="sparsity (defaults to the largest y used)")
    p.add_argument("--constraint", default="none", help="sphere:R | principal:v1,..,vj | none")
    p.add_argument("--sense", choices=("min", "max", "feasible"), default="min")
    p.add_argument("--oracle", action="store_true", help="also run the brute-force search")
    p.add_argument("--coercive", action="store_true", help="allow unconstrained min/max")
    p.add_argument("--budget", type=int, help="local searches per slice")
    basis_flags(p)

    p = add("nonneg", cmd_nonneg, "check f >= 0 on {g_i >= 0} (optionally on a sphere)")
    p.add_argument("--group", required=True)
    p.add_argument("--objective", required=True)
    p.add_argument("--constraint", action="append", help="polynomial g_i in y (repeatable)")
    p.add_argument("--sphere", type=float, help="restrict to the sphere of this radius")
    p.add_argument("--budget", type=int)
    basis_flags(p)

    add("f4-certificate", cmd_f4, "exact extremes of the F4 degree-6 invariant on S^3")
    p = add("h4-evidence", cmd_h4, "numeric extremizers of the H4 degree-12 surrogate")
    p.add_argument("--budget", type=int)

    p = add("lie-solve", cmd_lie_solve, "sl_n / so_n problems in trace powers and Pfaffian")
    p.add_argument("--kind", choices=("sl", "so"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--objective", required=True, help="polynomial in t2, t3, ... (and pf)")
    p.add_argument("--target", action="append", help="fixed invariant, e.g. t2=1 (repeatable)")
    p.add_argument("--sense", choices=("min", "max"), default="min")
    p.add_argument("--budget", type=int)

    p = add("selftest", cmd_selftest, "run the acceptance criteria")
    p.add_argument("--criteria", help="comma-separated subset, e.g. 1,3,9")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("a command is required")
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return args.fn(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        ap.print_usage(sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:  # --help / --version
        return int(e.code or 0)
    except Exception as e:  # noqa: BLE001 - reported as a plain error
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
