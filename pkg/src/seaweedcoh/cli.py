"""Command-line front end: construct, inspect, verify, enumerate.

All commands emit a single JSON document on stdout; `enumerate` writes JSON
lines to a file and prints a summary document.  Rationals are serialized as
strings ("p/q" or an integer string) so no consumer loses exactness.
"""

from __future__ import annotations

import argparse
import json
import sys
from functools import lru_cache

from . import chevalley, rootsystem
from .casimir import OperatorContext, rigidity_certificate
from .cochain import (adjoint_context, invariant_cohomology_dims,
                      nilradical_context, reductive_generators)
from .gerstenhaber import cg_dims
from .seaweed import (SeaweedSpec, Seaweed, build_seaweed, center,
                      is_indecomposable, quotient_components,
                      render_split_dynkin, seaweed_from_algebra,
                      split_over_center)

SCHEMA_VERSION = "1"

INFORMATIONAL = "informational"
ERROR = "error"


@lru_cache(maxsize=None)
def _ambient(type_label, rank):
    return chevalley.construct(rootsystem.build(type_label, rank))


def _parse_pi(text):
    if text is None or text.strip() == "":
        return frozenset()
    try:
        return frozenset(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated indices, got {text!r}") from None


def _vec_json(L, vec):
    return {L.labels[i]: str(c) for i, c in sorted(vec.items())}


def _spec_json(spec, fixture=None):
    out = {
        "type": spec.type_label if spec else None,
        "rank": spec.rank if spec else None,
        "pi1": sorted(spec.pi1) if spec else [],
        "pi2": sorted(spec.pi2) if spec else [],
    }
    if fixture:
        out["fixture"] = fixture
    return out


def _default_degree_cap(dim_s):
    return dim_s if dim_s <= 8 else 3


def build_from_args(args):
    """(seaweed, spec, fixture_name) from the common flags."""
    fixture_name = None
    if args.fixture:
        L = chevalley.load_fixture(args.fixture)
        fixture_name = str(args.fixture)
        if args.type:
            spec = SeaweedSpec.make(args.type, args.rank, args.pi1, args.pi2)
            if L.root_system is not None and (
                    L.root_system.type_label != args.type
                    or L.root_system.rank != args.rank):
                raise SystemExit("fixture type does not match --type/--rank")
            return build_seaweed(L, spec), spec, fixture_name
        return seaweed_from_algebra(L), None, fixture_name
    if not args.type or args.rank is None:
        raise SystemExit("need --type and --rank (or --fixture)")
    spec = SeaweedSpec.make(args.type, args.rank, args.pi1, args.pi2)
    return build_seaweed(_ambient(args.type, args.rank), spec), spec, fixture_name


def info_fragment(sw: Seaweed, spec):
    zs = center(sw)
    frag = {
        "diagram": render_split_dynkin(spec) if spec else None,
        "dims": {
            "s": sw.dim,
            "r": len(sw.reductive),
            "n": len(sw.nilradical),
            "center": len(zs),
        },
        "center_basis": [_vec_json(sw.ambient, z) for z in zs],
        "indecomposable": (is_indecomposable(spec) if spec
                           else len(zs) == 0),
    }
    if spec:
        comps = quotient_components(spec)
        frag["components"] = [
            {"type": c.type_label, "rank": c.rank,
             "pi1": sorted(c.pi1), "pi2": sorted(c.pi2)} for c in comps]
    return frag


def cohomology_rows(sw, max_degree):
    ctx = adjoint_context(sw)
    rows = []
    for q in range(max_degree + 1):
        dims = ctx.cohomology_dims(q)
        rows.append({"q": q, "cocycles": dims.cocycles,
                     "coboundaries": dims.coboundaries,
                     "cohomology": dims.cohomology})
    return rows


def verify_report(sw, spec, max_degree=None, strict_paper=False,
                  with_certificates=True, fixture=None):
    """The full check battery for one seaweed; used by verify and enumerate."""
    discrepancies = []

    def flag(code, detail, severity=ERROR):
        discrepancies.append({"code": code, "severity": severity,
                              "detail": detail})

    report = {"schema_version": SCHEMA_VERSION, "spec": _spec_json(spec, fixture)}
    report.update(info_fragment(sw, spec))
    zdim = report["dims"]["center"]

    if spec is not None:
        indec = is_indecomposable(spec)
        if (zdim == 0) != indec:
            flag("center_decomposability_mismatch",
                 f"center dim {zdim} vs indecomposable {indec}")
        expected = spec.rank - len(spec.pi1 | spec.pi2)
        if zdim != expected:
            flag("center_dimension_formula",
                 f"center dim {zdim}, expected rank - |pi1 u pi2| = {expected}")
    indec = report["indecomposable"]

    cap = max_degree if max_degree is not None else _default_degree_cap(sw.dim)
    cap = min(cap, sw.dim)
    report["cohomology"] = cohomology_rows(sw, cap)
    if indec:
        for row in report["cohomology"]:
            if row["cohomology"] != 0:
                flag("indecomposable_cohomology_nonzero",
                     f"H^{row['q']}(s,s) = {row['cohomology']}")

    # invariant cohomology of the nilradical
    nctx = nilradical_context(sw)
    gens = reductive_generators(sw)
    inv_rows = []
    for q in range(1, len(sw.nilradical) + 1):
        dims = invariant_cohomology_dims(nctx, q, gens)
        inv_rows.append({"q": q, "cocycles": dims.cocycles,
                         "coboundaries": dims.coboundaries,
                         "cohomology": dims.cohomology})
        if dims.cohomology != 0:
            flag("invariant_cohomology_nonzero",
                 f"H^{q}(n,s)^r = {dims.cohomology}")
        if not dims.coboundaries_match_full:
            flag("invariant_coboundary_mismatch",
                 f"delta-invariants != B^{q} cap invariants at q={q}")
    report["invariant_cohomology"] = inv_rows

    # rigidity certificates, where the ambient admits dual bases
    certs = []
    if with_certificates:
        try:
            octx = OperatorContext(sw.ambient, sw)
        except ValueError:
            octx = None
        if octx is not None:
            for q in range(1, len(sw.nilradical) + 1):
                cert = rigidity_certificate(octx, q)
                certs.append(cert.as_dict())
                if not cert.success:
                    flag("certificate_failure",
                         f"rigidity certificate failed at q={q}: {cert.failure}")
    report["certificates"] = certs

    # formula vs direct for the decomposable case
    cg = []
    split = split_over_center(sw)
    for n in range(0, min(cap, 3) + 1):
        rep = cg_dims(sw, n, split=split, adjoint_ctx=adjoint_context(sw))
        cg.append(rep.as_dict())
        if not rep.match:
            flag("cg_mismatch",
                 f"CG formula {rep.formula_total} != direct "
                 f"{rep.direct_total} at n={n}")
        if not rep.h0_equals_center:
            flag("quotient_h0_not_center", f"H^0(Q,s) != Z(s) at n={n}")
    report["cg"] = cg
    if zdim > 0:
        for n in range(1, min(cap, 3) + 1):
            h = next((t[2] for r in cg if r["n"] == n for t in r["terms"]
                      if t[0] == 0), 0)
            if h != 0:
                flag("quotient_cohomology_nonzero",
                     f"H^{n}(Q,s) = {h}, contradicting the vanishing claim "
                     f"for n >= 1 (the worked example needs H^1(Q,s) = 1)",
                     ERROR if strict_paper else INFORMATIONAL)

    report["discrepancies"] = discrepancies
    report["ok"] = not any(d["severity"] == ERROR for d in discrepancies)
    return report


def cmd_info(args):
    sw, spec, fixture = build_from_args(args)
    report = {"schema_version": SCHEMA_VERSION, "spec": _spec_json(spec, fixture)}
    report.update(info_fragment(sw, spec))
    print(json.dumps(report, indent=2))
    return 0


def cmd_cohomology(args):
    sw, spec, fixture = build_from_args(args)
    cap = args.max_degree if args.max_degree is not None else \
        _default_degree_cap(sw.dim)
    report = {"schema_version": SCHEMA_VERSION, "spec": _spec_json(spec, fixture)}
    report.update(info_fragment(sw, spec))
    report["cohomology"] = cohomology_rows(sw, min(cap, sw.dim))
    if report["dims"]["center"] > 0:
        split = split_over_center(sw)
        report["cg"] = [cg_dims(sw, n, split=split,
                                adjoint_ctx=adjoint_context(sw)).as_dict()
                        for n in range(0, min(cap, 3) + 1)]
    print(json.dumps(report, indent=2))
    return 0


def cmd_verify(args):
    sw, spec, fixture = build_from_args(args)
    report = verify_report(sw, spec, max_degree=args.max_degree,
                           strict_paper=args.strict_paper, fixture=fixture)
    print(json.dumps(report, indent=2))
    return 0 if report["ok"] else 1


def _all_specs(type_label, max_rank):
    specs = []
    for rank in range(1, max_rank + 1):
        if not rootsystem.VALID_RANKS[type_label](rank):
            continue
        nodes = list(range(1, rank + 1))
        subsets = []
        for mask in range(1 << rank):
            subsets.append(frozenset(n for i, n in enumerate(nodes)
                                     if mask >> i & 1))
        for p1 in subsets:
            for p2 in subsets:
                specs.append(SeaweedSpec(type_label, rank, p1, p2))
    return specs


def _enumerate_one(packed):
    type_label, rank, pi1, pi2, max_degree, strict = packed
    spec = SeaweedSpec(type_label, rank, frozenset(pi1), frozenset(pi2))
    sw = build_seaweed(_ambient(type_label, rank), spec)
    report = verify_report(sw, spec, max_degree=max_degree,
                           strict_paper=strict)
    return json.dumps(report)


def cmd_enumerate(args):
    specs = _all_specs(args.type, args.max_rank)
    packed = [(s.type_label, s.rank, tuple(sorted(s.pi1)),
               tuple(sorted(s.pi2)), args.max_degree, args.strict_paper)
              for s in specs]
    if args.jobs > 1:
        import multiprocessing
        with multiprocessing.Pool(args.jobs) as pool:
            lines = pool.map(_enumerate_one, packed)
    else:
        lines = [_enumerate_one(p) for p in packed]
    summary = {"schema_version": SCHEMA_VERSION, "type": args.type,
               "max_rank": args.max_rank, "total": len(lines),
               "indecomposable": 0, "decomposable": 0,
               "rigid_verified": 0, "cg_verified": 0, "failures": 0}
    out = open(args.out, "w") if args.out else None
    try:
        for line in lines:
            rec = json.loads(line)
            if rec["indecomposable"]:
                summary["indecomposable"] += 1
                if rec["ok"]:
                    summary["rigid_verified"] += 1
            else:
                summary["decomposable"] += 1
                if rec["ok"] and all(r["match"] for r in rec["cg"]):
                    summary["cg_verified"] += 1
            if not rec["ok"]:
                summary["failures"] += 1
            if out:
                out.write(line + "\n")
    finally:
        if out:
            out.close()
    print(json.dumps(summary, indent=2))
    return 0 if summary["failures"] == 0 else 1


def make_parser():
    parser = argparse.ArgumentParser(
        prog="seaweedcoh",
        description="Seaweed subalgebras and their adjoint cohomology, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_flags(p, with_fixture=True):
        p.add_argument("--type", choices=sorted(rootsystem.VALID_RANKS))
        p.add_argument("--rank", type=int)
        p.add_argument("--pi1", type=_parse_pi, default=frozenset())
        p.add_argument("--pi2", type=_parse_pi, default=frozenset())
        if with_fixture:
            p.add_argument("--fixture", help="structure-constant file")

    p_info = sub.add_parser("info", help="dimensions, diagram, center, components")
    add_spec_flags(p_info)
    p_info.set_defaults(func=cmd_info)

    p_coh = sub.add_parser("cohomology", help="per-degree cohomology dimensions")
    add_spec_flags(p_coh)
    p_coh.add_argument("--max-degree", type=int, default=None)
    p_coh.set_defaults(func=cmd_cohomology)

    p_ver = sub.add_parser("verify", help="run every check; exit 1 on discrepancy")
    add_spec_flags(p_ver)
    p_ver.add_argument("--max-degree", type=int, default=None)
    p_ver.add_argument("--strict-paper", action="store_true")
    p_ver.set_defaults(func=cmd_verify)

    p_enum = sub.add_parser("enumerate", help="verify all (pi1, pi2) pairs")
    p_enum.add_argument("--type", required=True,
                        choices=sorted(rootsystem.VALID_RANKS))
    p_enum.add_argument("--max-rank", type=int, required=True)
    p_enum.add_argument("--max-degree", type=int, default=3)
    p_enum.add_argument("--out", default=None)
    p_enum.add_argument("--strict-paper", action="store_true")
    p_enum.add_argument("--jobs", type=int, default=1)
    p_enum.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None):
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
