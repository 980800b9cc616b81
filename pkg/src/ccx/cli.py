"""Command line surface: complex, fvector, hvector, dissect, invariants, verify.

JSON on stdout by default; exit code 0 on success, 1 on domain errors
(with a structured error object on stderr), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .diagram import CoxeterDiagram, DiagramError, classify, parse_diagram
from .formulas import (
    TypeInfo,
    f_k_closed,
    f_polys_recursive,
    h_vector_from_f,
    reduced_euler,
)
from .gcc import BudgetExceeded, NotFiniteTypeError, build_complex
from .invariants import METHOD_ALIASES, compute_all
from .polygon import (
    TypeBModel,
    TypeDModel,
    allowable_diagonals,
    count_dissection_faces,
    dissection_facets,
    render_svg,
)
from .rootsys import NotFiniteType
from .verify import run_suites


class DomainError(Exception):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


def _emit(payload: dict, emit: str):
    payload = {"version": __version__, **payload}
    if emit == "json":
        print(json.dumps(payload, sort_keys=True))
    elif emit == "text":
        for key in sorted(payload):
            print(f"{key}: {payload[key]}")
    else:
        raise DomainError("bad-emit", f"unsupported emit format {emit!r}")


def _load_diagram(args) -> CoxeterDiagram:
    if getattr(args, "type", None):
        return parse_diagram(args.type)
    if getattr(args, "diagram", None):
        return parse_diagram(args.diagram)
    raise DomainError("usage", "one of --type/--diagram is required")


def cmd_complex(args) -> int:
    G = _load_diagram(args)
    try:
        cx = build_complex(G, args.m)
    except NotFiniteTypeError as e:
        raise DomainError("not-finite-type", str(e))
    except BudgetExceeded as e:
        raise DomainError("budget", str(e))
    fv = cx.f_vector()
    payload = {
        "diagram": G.to_spec(),
        "m": args.m,
        "rank": cx.n,
        "num_vertices": cx.num_vertices(),
        "f_vector": fv,
        "facet_count": fv[cx.n],
        "positive_facet_count": cx.positive_facet_count(),
        "reduced_euler": reduced_euler(fv),
        "audit_pure": cx.audit_pure(),
        "audit_ridge_degree": cx.audit_ridge_degree(),
    }
    if args.facets:
        payload["facets"] = [list(f) for f in cx.facets()]
        payload["vertices"] = cx.export_json()["vertices"]
    _emit(payload, args.emit)
    return 0


def _face_table(G: CoxeterDiagram, m: int) -> tuple[list, list]:
    cls = classify(G)
    if cls.kind == "finite":
        info = TypeInfo.of(G)
        fv = [f_k_closed(info, k)(m) for k in range(G.rank + 1)]
    elif cls.is_finite:
        fv = [p(m) for p in f_polys_recursive(G)]
    else:
        raise DomainError("not-finite-type", f"{G.to_spec()} is not of finite type")
    return fv, h_vector_from_f(fv)


def _emit_face_csv(G: CoxeterDiagram, m: int, fv, hv):
    cls = classify(G)
    name = cls.type_name or G.to_spec()
    print("type,n,m,k,f_k,h_k")
    for k in range(G.rank + 1):
        print(f"{name},{G.rank},{m},{k},{fv[k]},{hv[k]}")


def cmd_fvector(args) -> int:
    G = _load_diagram(args)
    fv, hv = _face_table(G, args.m)
    if args.emit == "csv":
        _emit_face_csv(G, args.m, fv, hv)
        return 0
    _emit(
        {
            "diagram": G.to_spec(),
            "m": args.m,
            "f_vector": [str(x) for x in fv],
            "h_vector": [str(x) for x in hv],
        },
        args.emit,
    )
    return 0


def cmd_hvector(args) -> int:
    return cmd_fvector(args)


def cmd_dissect(args) -> int:
    n, m = args.n, args.m
    if args.family == "A":
        N = (n + 1) * m + 2
        diags = allowable_diagonals(n, m)
        counts = [count_dissection_faces(n, m, k) for k in range(n + 1)]
        if args.emit == "svg":
            facets = dissection_facets(n, m)
            if not 0 <= args.facet < len(facets):
                raise DomainError(
                    "bad-parameters", f"facet index {args.facet} out of range"
                )
            chords = [(d, "plain") for d in facets[args.facet]]
            print(render_svg(N, chords))
            return 0
        _emit(
            {
                "family": "A",
                "n": n,
                "m": m,
                "polygon": N,
                "allowable_diagonals": len(diags),
                "noncrossing_subset_counts": counts,
            },
            args.emit,
        )
        return 0
    model_cls = {"B": TypeBModel, "D": TypeDModel}[args.family]
    try:
        model = model_cls(n, m)
    except ValueError as e:
        raise DomainError("bad-parameters", str(e))
    facets = model.faces(model.n)
    if args.emit == "svg":
        idx = args.facet
        if not 0 <= idx < len(facets):
            raise DomainError("bad-parameters", f"facet index {idx} out of range")
        chords = []
        for i in facets[idx]:
            v = model.vertices[i]
            style = "plain" if v.kind == "pair" else getattr(v, "flavor", "plain")
            for c in v.chords:
                chords.append((c, style))
        print(render_svg(model.N, chords))
        return 0
    _emit(
        {
            "family": args.family,
            "n": n,
            "m": m,
            "polygon": model.N,
            "model_vertices": len(model.vertices),
            "facet_count": len(facets),
            "face_counts": [len(model.faces(k)) for k in range(model.n + 1)],
        },
        args.emit,
    )
    return 0


def cmd_invariants(args) -> int:
    G = _load_diagram(args)
    if args.method == "all":
        methods = None
    else:
        methods = [METHOD_ALIASES[args.method]]
    report = compute_all(G, methods)
    print(json.dumps({"version": __version__, **report.to_json()}, sort_keys=True))
    return 0


def cmd_verify(args) -> int:
    suites = ["oracle", "models", "catalog"] if args.suite == "all" else [args.suite]
    checks = run_suites(suites, args.max_rank, args.max_m)
    failed = 0
    for name, ok, detail in checks:
        mark = "PASS" if ok else "FAIL"
        line = f"{mark} {name}"
        if detail and not ok:
            line += f"  [{detail}]"
        print(line)
        failed += 0 if ok else 1
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ccx",
        description="generalized cluster complexes and Coxeter diagram invariants",
    )
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add_diagram_opts(sp):
        sp.add_argument("--type", help="named type, e.g. B3, I2(7), ~A3")
        sp.add_argument("--diagram", help="explicit spec: 'n=3; 1-2:3 2-3:4'")

    sp = sub.add_parser("complex", help="build a colored cluster complex")
    add_diagram_opts(sp)
    sp.add_argument("-m", type=int, required=True, help="number of colors")
    sp.add_argument("--facets", action="store_true", help="include the facet list")
    sp.add_argument("--emit", default="json", choices=["json", "text"])
    sp.set_defaults(func=cmd_complex)

    for name, help_text in (
        ("fvector", "face numbers from the closed forms"),
        ("hvector", "face and h numbers from the closed forms"),
    ):
        sp = sub.add_parser(name, help=help_text)
        add_diagram_opts(sp)
        sp.add_argument("-m", type=int, required=True)
        sp.add_argument("--emit", default="json", choices=["json", "text", "csv"])
        sp.set_defaults(func=cmd_fvector)

    sp = sub.add_parser("dissect", help="polygon dissection models")
    sp.add_argument("--family", required=True, choices=["A", "B", "D"])
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-m", type=int, required=True)
    sp.add_argument("--facet", type=int, default=0, help="facet index for svg")
    sp.add_argument("--emit", default="json", choices=["json", "text", "svg"])
    sp.set_defaults(func=cmd_dissect)

    sp = sub.add_parser("invariants", help="run the diagram invariant methods")
    add_diagram_opts(sp)
    sp.add_argument(
        "--method",
        default="all",
        choices=["all", "euler", "symmetry", "recip", "recipm", "mg"],
    )
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--max-rank", type=int, default=8)
    sp.add_argument("--max-m", type=int, default=3)
    sp.add_argument(
        "--suite", default="all", choices=["oracle", "models", "catalog", "all"]
    )
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as e:
        print(
            json.dumps({"error": e.kind, "message": str(e)}, sort_keys=True),
            file=sys.stderr,
        )
        return 1
    except (DiagramError, NotFiniteType, BudgetExceeded, ValueError) as e:
        kind = "not-finite-type" if isinstance(e, NotFiniteType) else "domain-error"
        print(
            json.dumps({"error": kind, "message": str(e)}, sort_keys=True),
            file=sys.stderr,
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
