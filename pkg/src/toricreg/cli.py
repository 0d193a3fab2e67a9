"""Command-line interface.

Subcommands: reg, degree, hilbert, member, show, verify.  Monomials on
the command line are comma-separated exponent lists in edge order; the
`show` command prints the edge numbering so exponents and --edge flags
(1-based, matching the variable names t_1..t_s) can be addressed
unambiguously.

Exit codes: 0 on success and agreement, 1 on a verification mismatch,
2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .errors import (
    InvalidSpecError,
    NotHomogeneousError,
    NotPrimePowerError,
    ParseError,
    TooLargeError,
)
from .field import Field
from .graph import graph_stats
from .harness import (
    NOT_APPLICABLE,
    NOT_RUN,
    default_catalog,
    evaluate_entry,
    CatalogEntry,
    load_catalog,
    parse_graph_spec,
    reports_to_json,
    verify_suite,
    write_csv,
)
from .hilbert import hilbert_value, regularity_rank
from .ideal import (
    binomial_in_ideal,
    monomial_in_ideal_plus_edge,
    reachable_residues,
    regularity_sieve,
)
from .points import degree_formula, enumerate_points


def _parse_exponents(text: str, s: int):
    parts = [tok.strip() for tok in text.split(",")]
    try:
        vec = tuple(int(tok) for tok in parts)
    except ValueError:
        raise ParseError(f"bad exponent list {text!r}") from None
    if len(vec) != s:
        raise ParseError(f"expected {s} exponents, got {len(vec)}")
    if any(e < 0 for e in vec):
        raise ParseError("exponents must be nonnegative")
    return vec


def _entry_for(spec_text: str) -> CatalogEntry:
    parsed = parse_graph_spec(spec_text)
    return CatalogEntry(
        label=parsed.label,
        graph=parsed.graph,
        kind=parsed.kind,
        params=parsed.params,
    )


def _cmd_show(args) -> int:
    parsed = parse_graph_spec(args.spec)
    g = parsed.graph
    stats = graph_stats(g)
    print(f"{parsed.label}: {g.n} vertices, {g.s} edges")
    print(f"components: {stats.m}, non-bipartite: {stats.gamma}")
    for i, (u, w) in enumerate(g.edges):
        print(f"  t_{i + 1} = {{{u}, {w}}}")
    return 0


def _cmd_reg(args) -> int:
    entry = _entry_for(args.spec)
    g = entry.graph
    if args.method == "all":
        report, _ = evaluate_entry(entry, args.q, with_bounds=False)
        if args.json:
            print(json.dumps(report.to_json_dict(), indent=2))
        else:
            print(f"spec: {report.spec}  q={report.q}")
            print(
                f"degree: {report.degree_formula} (formula), "
                f"{report.degree_enum} (enumerated)"
            )
            print(f"rank:    {report.rank}  ({report.rank_ms:.1f} ms)")
            print(f"sieve:   {report.sieve}  ({report.sieve_ms:.1f} ms)")
            print(f"formula: {report.formula}  [{report.formula_rule}]")
            print(f"agreement: {'true' if report.agree else 'false'}")
        return 0 if report.agree else 1
    edge = args.edge - 1 if args.edge is not None else 0
    t0 = time.perf_counter()
    if args.method == "rank":
        value = regularity_rank(g, args.q).regularity
    elif args.method == "sieve":
        value = regularity_sieve(g, args.q, edge=edge)
    else:
        report, _ = evaluate_entry(entry, args.q, with_bounds=False)
        value = report.formula
        if value == NOT_APPLICABLE:
            print(f"formula: NOT_APPLICABLE ({report.note})")
            return 0
    ms = (time.perf_counter() - t0) * 1000.0
    if args.json:
        print(json.dumps({"spec": args.spec, "q": args.q, "method": args.method,
                          "value": value, "ms": ms}))
    else:
        print(value)
    return 0


def _cmd_degree(args) -> int:
    parsed = parse_graph_spec(args.spec)
    value = degree_formula(graph_stats(parsed.graph), args.q)
    if not args.enumerate:
        print(value)
        return 0
    enum = enumerate_points(parsed.graph, args.q).size
    print(f"formula {value}, enumerated {enum}")
    return 0 if enum == value else 1


def _cmd_hilbert(args) -> int:
    parsed = parse_graph_spec(args.spec)
    g = parsed.graph
    field = Field(args.q)
    ps = enumerate_points(g, args.q)
    target = ps.size
    max_d = args.max_degree
    reg = None
    d = 0
    while True:
        h = hilbert_value(ps, d, field)
        print(f"H({d}) = {h}")
        if h == target and reg is None:
            reg = d
        if max_d is not None:
            if d >= max_d:
                break
        elif reg is not None:
            break
        d += 1
    if reg is not None:
        print(f"regularity: {reg}  (degree {target})")
    else:
        print(f"regularity not reached by degree {max_d} (degree {target})")
    return 0


def _cmd_member(args) -> int:
    parsed = parse_graph_spec(args.spec)
    g = parsed.graph
    a = _parse_exponents(args.monomial, g.s)
    if (args.binomial is None) == (args.mod_edge is None):
        raise ParseError("choose exactly one of --binomial and --mod-edge")
    if args.binomial is not None:
        b = _parse_exponents(args.binomial, g.s)
        verdict = binomial_in_ideal(g, args.q, a, b)
        print(("IN I(X)" if verdict else "NOT IN I(X)"))
        return 0
    j = args.mod_edge
    if not (1 <= j <= g.s):
        raise ParseError(f"edge index must be in 1..{g.s}")
    reach = reachable_residues(g, args.q, max(sum(a) - 1, 0))
    verdict = monomial_in_ideal_plus_edge(g, args.q, a, j - 1, reach)
    print(f"IN (I(X), t_{j})" if verdict else f"NOT IN (I(X), t_{j})")
    return 0


def _cmd_verify(args) -> int:
    entries = load_catalog(args.catalog) if args.catalog else default_catalog()
    q_list = tuple(int(tok) for tok in args.q.split(","))
    result = verify_suite(
        entries,
        q_list=q_list,
        jobs=args.jobs,
        with_bounds=not args.skip_bounds,
    )
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            write_csv(result.reports, fh)
    if args.json:
        print(reports_to_json(result.reports))
    else:
        for r in result.reports:
            status = "ok" if r.agree else "MISMATCH"
            print(
                f"{status:8s} {r.spec} q={r.q}: rank={r.rank} sieve={r.sieve} "
                f"formula={r.formula} degree={r.degree_formula}/{r.degree_enum}"
            )
        bad_bounds = [t for t in result.bound_rows if not t[2].satisfied]
        print(
            f"{len(result.reports)} instance checks, "
            f"{len(result.bound_rows)} bound rows, "
            f"{sum(1 for r in result.reports if not r.agree)} mismatches, "
            f"{len(bad_bounds)} bound failures"
        )
        for label, q, row in bad_bounds:
            print(
                f"BOUND FAIL {label} q={q}: {row.name} "
                f"{row.lhs} {row.relation} {row.rhs} ({row.detail})"
            )
    return 0 if result.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricreg",
        description=(
            "Degree, Hilbert function and regularity of the graded ring of a "
            "graph-parameterized projective toric set over GF(q), computed by "
            "mutually cross-checking methods."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reg", help="regularity of an instance")
    p.add_argument("spec")
    p.add_argument("-q", type=int, required=True)
    p.add_argument(
        "--method", choices=("rank", "sieve", "formula", "all"), default="all"
    )
    p.add_argument("--edge", type=int, default=None, help="1-based edge for the sieve")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_reg)

    p = sub.add_parser("degree", help="degree (point count) of an instance")
    p.add_argument("spec")
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--enumerate", action="store_true")
    p.set_defaults(func=_cmd_degree)

    p = sub.add_parser("hilbert", help="Hilbert function values")
    p.add_argument("spec")
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("member", help="ideal membership tests")
    p.add_argument("spec")
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--monomial", required=True, help="a1,...,as")
    p.add_argument("--binomial", default=None, help="b1,...,bs")
    p.add_argument("--mod-edge", type=int, default=None, help="1-based edge index")
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("show", help="print the edge numbering of a spec")
    p.add_argument("spec")
    p.set_defaults(func=_cmd_show)

    p = sub.add_parser("verify", help="run the cross-check suite")
    p.add_argument("--catalog", default=None)
    p.add_argument("--q", default="3,4,5")
    p.add_argument("--report", default=None, help="write a CSV report here")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--skip-bounds", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        ParseError,
        InvalidSpecError,
        NotPrimePowerError,
        NotHomogeneousError,
        OverflowError,
        OSError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
