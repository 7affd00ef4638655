"""Command-line front end.  Every subcommand prints a JSON report.

Exit status: 0 when every asserted property holds, 1 on an assertion
failure, 2 on bad input.  Contested comparisons against claimed bounds
are reported under ``findings`` and never change the exit status.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, geometry, pattern, surface as surf, witness
from .pattern import PatternFormatError
from .surface import RotationFormatError
from .geometry import DegenerateError, PointMapFormatError

SCHEMA = 1


class InputError(Exception):
    pass


def _report(command: str, config: dict, results: dict, assertions: dict, findings: dict | None = None) -> dict:
    return {
        "schema": SCHEMA,
        "tool": f"patternlab {__version__}",
        "command": command,
        "config": config,
        "results": results,
        "assertions": assertions,
        "findings": findings or {},
        "ok": all(assertions.values()),
    }


def _checks_json(A: pattern.PatternMatrix) -> dict:
    return {name: rep.to_json() for name, rep in pattern.check_all(A).items()}


def cmd_check_matrix(args) -> dict:
    try:
        A = pattern.load(args.file)
    except OSError as exc:
        raise InputError(f"{args.file}: {exc.strerror}") from None
    checks = _checks_json(A)
    results = {
        "n": A.n,
        "k": A.k,
        "size": A.size,
        "rank": A.rank(),
        "even": pattern.is_even(A),
        "conditions": checks,
    }
    assertions = {name: c["holds"] for name, c in checks.items()}
    return _report("check-matrix", {"file": str(args.file)}, results, assertions)


def _witness_json(res: witness.MinRankResult) -> dict:
    out = res.summary()
    out["evaluations"] = res.evaluations
    out["log"] = res.log
    if res.witness is not None:
        out["witness_rank"] = res.witness.rank()
        out["witness_even"] = pattern.is_even(res.witness)
        out["witness_checks"] = {k: v.holds for k, v in pattern.check_all(res.witness).items()}
        out["witness_text"] = pattern.dumps(res.witness)
    return out


def _witness_assertions(prefix: str, res: witness.MinRankResult) -> dict:
    if res.witness is None:
        return {}
    ok = pattern.passes_conditions(res.witness, even=res.even_mode) and pattern.check_heredity(res.witness).holds
    return {f"{prefix}witness_passes_checkers": ok}


def cmd_search(args) -> dict:
    if args.k < 0 or args.n < args.k + 2:
        raise InputError("need k >= 0 and n >= k+2")
    model = witness.build_model(args.n, args.k, args.even)
    hints = witness.shipped_hints(args.n, args.k) if args.hints else []
    res = witness.min_rank(model, budget=args.budget, seed=args.seed, hints=hints)
    row = witness.RankRow(args.n, None if args.even else res, res if args.even else None)
    table = witness.RankTable(args.k, [row], args.budget, args.seed)
    bounds = witness.bounds_report(table)
    results = {
        "model": {
            "variables": len(model.variables),
            "equations": model.kind_counts(),
            "solution_space_dimension": model.solution_space.dimension,
        },
        "min_rank": _witness_json(res),
    }
    assertions = _witness_assertions("", res)
    if res.even_mode and res.status == witness.EXACT:
        assertions["even_min_rank_is_even"] = res.value % 2 == 0
    findings = {"bounds": bounds}
    config = {"n": args.n, "k": args.k, "even": args.even, "budget": args.budget, "seed": args.seed, "hints": args.hints}
    return _report("search", config, results, assertions, findings)


def cmd_table(args) -> dict:
    if args.k < 0 or args.nmax < args.k + 2:
        raise InputError("need k >= 0 and nmax >= k+2")
    modes = (True,) if args.even else (False, True)
    table = witness.build_table(args.k, args.nmax, budget=args.budget, seed=args.seed, modes=modes,
                                use_hints=args.hints)
    bounds = witness.bounds_report(table)
    assertions = {}
    for row in table.rows:
        for col in (row.any, row.even):
            if col is not None:
                tag = "even" if col.even_mode else "any"
                assertions.update(_witness_assertions(f"n{row.n}_{tag}_", col))
    for even in modes:
        col = table.column(even)
        exact = [(n, c.value) for n, c in sorted(col.items()) if c.status == witness.EXACT]
        assertions[f"monotone_in_n_{'even' if even else 'any'}"] = all(
            a[1] <= b[1] for a, b in zip(exact, exact[1:]))
        if even:
            assertions["even_exact_ranks_are_even"] = all(v % 2 == 0 for _, v in exact)
    for check in bounds["recursion_checks"]:
        if check["recursion"] in ("even_sharp", "any_sharp"):
            assertions[f"recursion_{check['recursion']}_r{check['r']}"] = check["holds"]
    results = {
        "table": [
            {"n": row.n, "status": row.status,
             "any": _witness_json(row.any) if row.any else None,
             "even": _witness_json(row.even) if row.even else None}
            for row in table.rows
        ],
        "thresholds": bounds["thresholds"],
        "recursion_checks": bounds["recursion_checks"],
    }
    findings = {"flags": bounds["flags"], "bounds_rows": bounds["rows"]}
    config = {"k": args.k, "nmax": args.nmax, "even_only": args.even, "budget": args.budget,
              "seed": args.seed, "hints": args.hints}
    return _report("table", config, results, assertions, findings)


def cmd_vkf(args) -> dict:
    if args.input is not None:
        try:
            m = geometry.loads_pointmap(Path(args.input).read_text(), source=str(args.input))
        except OSError as exc:
            raise InputError(f"{args.input}: {exc.strerror}") from None
        try:
            rep = geometry.parity_for(m)
        except DegenerateError as exc:
            raise InputError(f"{args.input}: not in general position ({exc})") from None
        return _report("vkf", {"input": str(args.input), "d": m.d}, {"instance": rep.to_json()},
                       {"parity_is_one": rep.total == 1})
    if args.d not in (1, 2, 3):
        raise InputError("--d must be 1, 2 or 3")
    if args.d == 1:
        reports = geometry.all_orders_d1()
        results = {
            "orders": len(reports),
            "parity_failures": sum(r.total != 1 for r in reports),
            "single_interleaving": all(r.count == 1 for r in reports),
            "random": geometry.campaign(1, args.trials, args.seed, args.magnitude),
        }
        failures = results["parity_failures"] + results["random"]["parity_failures"]
    else:
        results = geometry.campaign(args.d, args.trials, args.seed, args.magnitude)
        failures = results["parity_failures"]
    config = {"d": args.d, "trials": args.trials, "seed": args.seed, "magnitude": args.magnitude}
    return _report("vkf", config, results, {"all_parities_one": failures == 0})


def _resolve_rotation(path_text: str) -> surf.RotationSystem:
    path = Path(path_text)
    if path.exists():
        try:
            return surf.load_rotation(path)
        except OSError as exc:
            raise InputError(f"{path}: {exc.strerror}") from None
    if path.name in surf.SHIPPED:
        return surf.load_shipped(path.name).rotation
    raise InputError(f"{path}: no such file")


def cmd_surface(args) -> dict:
    rot = _resolve_rotation(args.file)
    try:
        s = surf.trace_faces(rot)
    except ValueError as exc:
        raise InputError(f"{args.file}: {exc}") from None
    basis = surf.homology_basis(s)
    gram_rank = surf.gf2.rank(surf.pairing_gram(s, basis))
    results = {
        "vertices": rot.num_vertices,
        "edges": len(rot.edges),
        "faces": len(s.faces),
        "euler_characteristic": s.euler_char,
        "genus": s.genus,
        "homology_rank": surf.homology_rank(s),
        "pairing_gram_rank": gram_rank,
    }
    assertions = {
        "euler_even": s.euler_char % 2 == 0,
        "gram_rank_equals_2g": gram_rank == 2 * s.genus,
        "basis_size_equals_2g": len(basis) == 2 * s.genus,
    }
    findings: dict = {}
    if rot.is_complete() and rot.num_vertices >= 3:
        A = surf.build_pattern_matrix(s)
        checks = pattern.check_all(A)
        rk = A.rank()
        results.update({
            "matrix_size": A.size,
            "matrix_rank": rk,
            "matrix_even": pattern.is_even(A),
            "conditions": {name: rep.to_json() for name, rep in checks.items()},
            "matrix_text": pattern.dumps(A),
        })
        assertions.update({
            "matrix_symmetric": A.entries.is_symmetric(),
            "matrix_even": pattern.is_even(A),
            "triviality": checks["triviality"].holds,
            "linear_dependence": checks["linear_dependence"].holds,
            "heredity": checks["heredity"].holds,
            "rank_at_most_2g": rk <= 2 * s.genus,
        })
        n, k = rot.num_vertices, 1
        claims = witness.claimed_bounds(n, k)
        findings["nontriviality"] = {
            "holds": checks["nontriviality"].holds,
            "violations": checks["nontriviality"].total,
            "vacuous": checks["nontriviality"].vacuous,
            "provenance": "computed",
        }
        findings["bound_comparison"] = {
            "n": n,
            "k": k,
            "matrix_rank": {"value": rk, "provenance": "computed"},
            "rank_bound_any": {**witness._frac(claims["rank_bound_any"]), "provenance": "claimed",
                         "exceeds_computed_rank": claims["rank_bound_any"] > rk},
            "rank_bound_even": {**witness._frac(claims["rank_bound_even"]), "provenance": "claimed",
                          "exceeds_computed_rank": claims["rank_bound_even"] > rk},
            "heawood_genus": {**witness._frac(witness.Fraction((n - 3) * (n - 4), 12)), "provenance": "claimed"},
            "genus": {"value": s.genus, "provenance": "computed"},
        }
        if n >= 5:
            sweep = surf.cone_pairing_sweep(s)
            findings["cone_pairing"] = {
                "evaluated": len(sweep),
                "all_one": all(v == 1 for v in sweep.values()),
                "failures": [[list(five), cone] for (five, cone), v in sweep.items() if v != 1][:50],
                "provenance": "computed",
            }
            results["cone_pairing_1to5"] = surf.cone_pairing_sum(s, (1, 2, 3, 4, 5))
    else:
        findings["pattern_matrix"] = "skipped: graph is not complete"
    return _report("surface", {"file": str(args.file)}, results, assertions, findings)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="patternlab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", help="write the JSON report here instead of stdout")

    sp = sub.add_parser("check-matrix", help="run all condition checkers on a pattern-matrix file")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_check_matrix)

    for name, helptext in (("search", "minimum-rank witness search for one (n, k)"),
                           ("table", "minimum-rank table for n up to nmax")):
        sp = sub.add_parser(name, help=helptext)
        if name == "search":
            sp.add_argument("--n", type=int, required=True)
        else:
            sp.add_argument("--nmax", type=int, required=True)
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--even", action="store_true")
        sp.add_argument("--budget", type=int, default=witness.DEFAULT_BUDGET)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--no-hints", dest="hints", action="store_false",
                        help="do not seed the search with bundled surface embeddings")
        common(sp)
        sp.set_defaults(func=cmd_search if name == "search" else cmd_table)

    sp = sub.add_parser("vkf", help="parity campaign for random straight-line maps")
    sp.add_argument("--d", type=int, default=2)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--magnitude", type=int, default=geometry.DEFAULT_MAGNITUDE)
    sp.add_argument("--input", help="evaluate one pointmap v1 instance file instead")
    common(sp)
    sp.set_defaults(func=cmd_vkf)

    sp = sub.add_parser("surface", help="surface pipeline for a rotation v1 file")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_surface)
    return p


def run(argv: list[str] | None = None) -> tuple[int, dict | None]:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except (InputError, PatternFormatError, RotationFormatError, PointMapFormatError) as exc:
        print(f"patternlab: error: {exc}", file=sys.stderr)
        return 2, None
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return (0 if report["ok"] else 1), report


def main(argv: list[str] | None = None) -> int:
    try:
        code, _ = run(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return code


if __name__ == "__main__":
    sys.exit(main())
