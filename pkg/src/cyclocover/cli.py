"""Command line front end.

Every command emits a JSON envelope {command, inputs, results,
schema_version} with sorted keys, so identical invocations are
byte-identical.  Rational values are rendered as reduced "num/den" strings
(plain "num" when integral).  Exit codes: 0 success, 1 domain failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import conemetrics, covers, lifts, periods, polyhedra, selfcheck, wronski
from .covers import BranchingData, InvalidCoverError
from .exactmath import Polynomial, RationalFunction, log_derivative, order_at

SCHEMA_VERSION = "1"

# Which library operations each command exercises (kept current by a test).
COMMAND_OPERATIONS = {
    "enumerate": (
        "covers.enumerate_covers",
        "covers.normalize",
        "covers.degree_bounds",
    ),
    "info": (
        "covers.validate",
        "covers.genus",
        "covers.genus_oracle",
        "covers.degree_bounds",
        "covers.normalize",
        "covers.lift_closure",
    ),
    "admissible": (
        "conemetrics.all_admissible",
        "conemetrics.is_admissible_oracle",
        "conemetrics.divisor_of",
        "conemetrics.count_checks",
        "conemetrics.involution_pairing",
        "conemetrics.monomial_relations",
    ),
    "wronski": (
        "wronski.default_basis",
        "wronski.wronskian",
        "wronski.total_weight",
        "wronski.weight_census",
        "wronski.hyperelliptic_test",
        "exactmath.derivative",
        "exactmath.log_derivative",
        "exactmath.order_at",
        "exactmath.rational_roots",
        "exactmath.squarefree_decomposition",
    ),
    "lifts": (
        "lifts.compatible_mus",
        "lifts.affine_order",
        "lifts.lift_order",
        "lifts.preimage_action",
        "lifts.enumerate_lifts",
    ),
    "graphs": (
        "polyhedra.quotient_graph_params",
        "polyhedra.tiling_genus",
    ),
    "catalog": (
        "polyhedra.catalog",
        "polyhedra.catalog_json",
    ),
    "periods": (
        "periods.jacobian",
        "periods.solve_coefficients",
    ),
    "selfcheck": ("selfcheck.run_selfcheck",),
}


class DomainError(Exception):
    """Input was syntactically fine but mathematically rejected."""


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return _fmt_rational(obj)
    if isinstance(obj, (Polynomial, RationalFunction)):
        return str(obj)
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, np.ndarray):
        return [_jsonable(row) for row in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _envelope(command: str, inputs: dict, results) -> str:
    payload = {
        "command": command,
        "inputs": _jsonable(inputs),
        "results": _jsonable(results),
        "schema_version": SCHEMA_VERSION,
    }
    return json.dumps(payload, sort_keys=True, indent=2)


def _parse_indices(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise DomainError(f"could not parse indices {text!r}: {exc}") from exc


def _parse_rationals(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(part) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"could not parse rational list {text!r}: {exc}") from exc


def _cover(args) -> BranchingData:
    problems = covers.check(args.degree, _parse_indices(args.indices))
    if problems:
        raise DomainError("; ".join(problems))
    return BranchingData(args.degree, _parse_indices(args.indices))


def _cover_dict(b: BranchingData, g: int) -> dict:
    return {"degree": b.degree, "indices": list(b.indices), "genus": g}


# -- command handlers ------------------------------------------------------


def _cmd_enumerate(args) -> int:
    min_genus = args.min_genus if args.min_genus else min(3, args.max_genus)
    rows = covers.enumerate_covers(args.max_genus, n=args.punctures, min_genus=min_genus)
    if args.format == "tsv":
        for b, g in rows:
            print(f"{b.degree}\t{{{','.join(map(str, b.indices))}}}\t{g}")
        return 0
    results = {"covers": [_cover_dict(b, g) for b, g in rows], "count": len(rows)}
    print(
        _envelope(
            "enumerate",
            {
                "max_genus": args.max_genus,
                "min_genus": min_genus,
                "punctures": args.punctures,
            },
            results,
        )
    )
    return 0


def _cmd_info(args) -> int:
    b = _cover(args)
    summary = covers.genus(b)
    lower, upper = covers.degree_bounds(summary.genus, b.num_punctures)
    results = {
        "degree": b.degree,
        "indices": list(b.indices),
        "genus": summary.genus,
        "genus_oracle": covers.genus_oracle(b),
        "preimage_counts": list(summary.preimage_counts),
        "degree_at_preimage": list(summary.degree_at_preimage),
        "degree_bounds": {"lower": lower, "upper": upper},
    }
    if args.normalize:
        results["normal_form"] = list(covers.normalize(b).indices)
    if args.winding:
        winding = _parse_indices(args.winding)
        closure = covers.lift_closure(b, winding)
        results["lift_closure"] = {
            "winding": list(winding),
            "closed": closure.closed,
            "length_multiplier": closure.length_multiplier,
            "components": closure.components,
        }
    print(_envelope("info", {"degree": args.degree, "indices": args.indices}, results))
    return 0


def _cmd_admissible(args) -> int:
    b = _cover(args)
    metrics = conemetrics.all_admissible(b)
    census = conemetrics.count_checks(b)
    oracle_agrees = all(
        conemetrics.is_admissible_oracle(b, m.angles) for m in metrics
    )
    results = {
        "metrics": [
            {
                "multiplier": m.multiplier,
                "angles": list(m.angles),
                "divisor": str(conemetrics.divisor_of(m)),
            }
            for m in metrics
        ],
        "count": census.count,
        "genus": census.genus,
        "exactly_genus": census.exactly_g,
        "at_least_genus": census.at_least_g,
        "oracle_agrees": oracle_agrees,
    }
    if b.num_punctures == 3:
        results["involution_pairs"] = [
            {"admissible": list(a), "non_admissible": list(na)}
            for a, na in conemetrics.involution_pairing(b)
        ]
    basis = wronski.default_basis(b)
    divisors = [conemetrics.divisor_of(m) for m in basis]
    results["basis"] = [list(m.angles) for m in basis]
    results["relations"] = [
        {
            "left": list(rel.left),
            "right": list(rel.right),
            "rank_le_3_candidate": rel.square_side,
            "text": str(rel),
        }
        for rel in conemetrics.monomial_relations(divisors, args.relation_degree)
    ]
    print(
        _envelope(
            "admissible",
            {
                "degree": args.degree,
                "indices": args.indices,
                "relation_degree": args.relation_degree,
            },
            results,
        )
    )
    return 0


def _factored_form(report: wronski.WronskiReport) -> str:
    if not report.extra_points:
        return "1"
    return " * ".join(
        f"({f.factor})" + (f"^{f.multiplicity}" if f.multiplicity > 1 else "")
        for f in report.extra_points
    )


def _cmd_wronski(args) -> int:
    b = _cover(args)
    g = covers.genus(b).genus
    punctures = _parse_rationals(args.punctures) if args.punctures else None
    if args.metrics:
        basis = [
            conemetrics.metric_from_angles(b, _parse_indices(chunk))
            for chunk in args.metrics.split(";")
        ]
    else:
        basis = wronski.default_basis(b, punctures)
    report = wronski.wronskian(b, basis, punctures)
    total = wronski.total_weight(report, b, g)
    log_rows = [
        str(log_derivative(RationalFunction(
            Polynomial.from_roots(
                [p for p, a in zip(report.punctures, m.angles) for _ in range(a)]
            )
        )))
        for m in basis
    ]
    results = {
        "genus": g,
        "basis": [list(m.angles) for m in basis],
        "punctures": list(report.punctures),
        "w1": str(report.w1),
        "w1_factored": _factored_form(report),
        "w1_scale": report.w1_scale,
        "orders_b": list(report.orders),
        "weights": list(report.weights),
        "extra_points": [
            {
                "factor": str(f.factor),
                "multiplicity": f.multiplicity,
                "root": f.root,
                "order_check": order_at(RationalFunction(report.w1), f.root)
                if f.root is not None
                else None,
            }
            for f in report.extra_points
        ],
        "infinity_weight": report.infinity_weight,
        "total_weight": total,
        "total_weight_expected": (g - 1) * g * (g + 1),
        "weight_census": wronski.weight_census(report),
        "hyperelliptic": wronski.hyperelliptic_test(report, g),
        "log_derivative_rows": log_rows,
    }
    print(
        _envelope(
            "wronski",
            {
                "degree": args.degree,
                "indices": args.indices,
                "punctures": args.punctures,
                "metrics": args.metrics,
            },
            results,
        )
    )
    return 0


def _cmd_lifts(args) -> int:
    b = _cover(args)
    n = b.num_punctures
    if args.phi == "id":
        images = tuple(range(n))
    else:
        images = tuple(i - 1 for i in _parse_indices(args.phi))
    try:
        index_map = lifts.IndexMap(source=b, target=b, images=images)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    mus = lifts.compatible_mus(index_map)
    families = lifts.enumerate_lifts(index_map)
    results = {
        "phi": list(images),
        "perm_order": index_map.perm_order,
        "compatible_mus": mus,
        "families": [
            {
                "mu": fam.mu,
                "nus": list(fam.nus),
                "orders": list(fam.orders),
                "affine_orders": [
                    lifts.affine_order(lifts.AffineLift(fam.mu, nu, b.degree))
                    for nu in fam.nus
                ],
                "fixed_labels": [list(p) for p in fam.action.fixed],
                "swapped_labels": [
                    [list(p), list(q)] for p, q in fam.action.swapped
                ],
            }
            for fam in families
        ],
    }
    print(
        _envelope(
            "lifts",
            {"degree": args.degree, "indices": args.indices, "phi": args.phi},
            results,
        )
    )
    return 0


def _cmd_graphs(args) -> int:
    results = {}
    if args.genus is not None:
        params = polyhedra.quotient_graph_params(args.genus)
        results["parameters"] = [
            {"vertices": p.vertices, "degree": p.degree, "edges": p.edges}
            for p in params
        ]
    if args.tiling:
        p, q, faces = _parse_indices(args.tiling)
        results["tiling_genus"] = polyhedra.tiling_genus(p, q, faces)
    if not results:
        raise DomainError("nothing to do: pass --genus and/or --tiling")
    print(
        _envelope(
            "graphs", {"genus": args.genus, "tiling": args.tiling}, results
        )
    )
    return 0


def _cmd_catalog(args) -> int:
    if args.name:
        try:
            entry = polyhedra.catalog_entry(args.name)
        except KeyError as exc:
            raise DomainError(str(exc)) from exc
        entries = [entry]
    else:
        entries = list(polyhedra.catalog())
    results = {"entries": [e.to_dict() for e in entries]}
    print(_envelope("catalog", {"name": args.name}, results))
    return 0


def _cmd_periods(args) -> int:
    if args.pi or args.p:
        if not (args.pi and args.p):
            raise DomainError("pass both --pi and --p, or neither for the fixture")
        pm = periods.period_matrix_from_json(args.pi)
        lat = periods.lattice_from_json(args.p)
        source = "files"
    else:
        pm, lat = periods.octa4_fixture()
        source = "octa4-fixture"
    jac, diag = periods.jacobian(pm)
    coeffs, residual = periods.solve_coefficients(pm, lat)
    results = {
        "source": source,
        "genus": pm.genus,
        "jacobian": jac,
        "max_asymmetry": diag.max_asymmetry,
        "min_imag_eigenvalue": diag.min_imag_eigenvalue,
        "coefficients": coeffs,
        "residual": residual,
    }
    print(_envelope("periods", {"pi": args.pi, "p": args.p}, results))
    return 0


def _cmd_selfcheck(args) -> int:
    entries = None
    if args.catalog_json:
        try:
            entries = polyhedra.catalog_from_json(args.catalog_json)
        except (OSError, ValueError, KeyError, TypeError, InvalidCoverError) as exc:
            print(f"FAIL catalog: could not load {args.catalog_json}: {exc}")
            return 1
    results = selfcheck.run_selfcheck(args.max_genus, catalog_entries=entries)
    failed = False
    for suite in results:
        status = "PASS" if suite.passed else "FAIL"
        failed = failed or not suite.passed
        print(f"{status} {suite.name}")
        for line in suite.details:
            print(f"    {line}")
    return 1 if failed else 0


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclocover",
        description=(
            "Exact tools for cyclically branched covers of punctured spheres: "
            "enumeration, cone metrics, Wronskian Weierstrass weights, map "
            "lifts, the polyhedral-surface catalog and period-matrix checks."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list covers up to a genus bound")
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--min-genus", type=int, default=None)
    p.add_argument("--punctures", type=int, default=None)
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("info", help="validate a cover and report its genus data")
    p.add_argument("degree", type=int)
    p.add_argument("indices")
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--winding", default=None, help="comma list of cut intersections")
    p.set_defaults(handler=_cmd_info)

    p = sub.add_parser("admissible", help="admissible cone metrics and divisors")
    p.add_argument("degree", type=int)
    p.add_argument("indices")
    p.add_argument("--relation-degree", type=int, default=2)
    p.set_defaults(handler=_cmd_admissible)

    p = sub.add_parser("wronski", help="Wronskian, Weierstrass weights, census")
    p.add_argument("degree", type=int)
    p.add_argument("indices")
    p.add_argument("--punctures", default=None, help="comma list of chart positions")
    p.add_argument(
        "--metrics",
        default=None,
        help="semicolon-separated angle tuples, e.g. '1,2,5;2,4,2;5,2,1'",
    )
    p.set_defaults(handler=_cmd_wronski)

    p = sub.add_parser("lifts", help="lifts of a cut-preserving self-map")
    p.add_argument("degree", type=int)
    p.add_argument("indices")
    p.add_argument(
        "--phi",
        required=True,
        help="'id' or 1-based image list, e.g. '2,3,1' for a cycle",
    )
    p.set_defaults(handler=_cmd_lifts)

    p = sub.add_parser("graphs", help="symmetric quotient-graph parameters")
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--tiling", default=None, help="p,q,faces")
    p.set_defaults(handler=_cmd_graphs)

    p = sub.add_parser("catalog", help="polyhedral surface catalog")
    p.add_argument("name", nargs="?", default=None)
    p.set_defaults(handler=_cmd_catalog)

    p = sub.add_parser("periods", help="Jacobian and lattice coefficient solve")
    p.add_argument("--pi", default=None, help="period matrix JSON ([re, im] pairs)")
    p.add_argument("--p", default=None, help="lattice matrix JSON")
    p.set_defaults(handler=_cmd_periods)

    p = sub.add_parser("selfcheck", help="run the verification suites")
    p.add_argument("--max-genus", type=int, default=5)
    p.add_argument("--catalog-json", default=None, help="check this catalog instead")
    p.set_defaults(handler=_cmd_selfcheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_genus", None) is not None and args.max_genus < 2:
        parser.error("--max-genus must be at least 2")
    if getattr(args, "min_genus", None) is not None and args.min_genus < 2:
        parser.error("--min-genus must be at least 2")
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InvalidCoverError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
