"""Verification harness: graph DSL, instance catalog, cross-check suite.

Every catalog instance is checked three ways (evaluation-matrix rank,
residue sieve, closed form) plus a degree cross-check (closed form vs
brute-force enumeration), and optionally a set of structural bound rows
with auto-generated witnesses.  Methods that exceed the work caps are
recorded as NOT_RUN, closed forms outside their guard as
NOT_APPLICABLE; agreement is judged on the values that are present.
"""

from __future__ import annotations

import json
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import combinations_with_replacement
from math import comb

from . import caps
from .errors import ParseError, TooLargeError
from .formulas import (
    BipartiteBoundWitness,
    BoundRow,
    ContractionWitness,
    CoverWitness,
    IndependentSetWitness,
    ParitySplitWitness,
    PendantWitness,
    detect_closed_form,
    reg_closed_form,
    verify_bounds,
)
from .graph import (
    Multigraph,
    bipartition,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    connected_components,
    cycle_graph,
    graph_stats,
    parallel_composition,
    path_graph,
    star_graph,
)
from .hilbert import regularity_rank
from .ideal import regularity_sieve
from .points import degree_formula, enumerate_points

NOT_RUN = "NOT_RUN"
NOT_APPLICABLE = "NOT_APPLICABLE"

CSV_HEADER = "spec,q,method,value,degree_formula,degree_enum,agree,ms"

_ROW_CELL_BUDGET = 20_000_000


# -- graph spec DSL -------------------------------------------------------


@dataclass(frozen=True)
class ParsedSpec:
    label: str
    kind: str
    params: tuple
    graph: Multigraph


_CONSTRUCTORS = {
    "path": (path_graph, "path"),
    "cycle": (cycle_graph, "cycle"),
    "complete": (complete_graph, "complete"),
    "biclique": (complete_bipartite, "biclique"),
    "multipartite": (complete_multipartite, "multipartite"),
    "parallel": (parallel_composition, "parallel"),
}


def parse_graph_spec(text: str) -> ParsedSpec:
    """Parse `name(i1,...,ik)` or `file:PATH` into a graph.

    The JSON file format is {"n": int, "edges": [[u, w], ...]} with
    0-indexed vertices; the edge-list order defines the variables.
    """
    text = text.strip()
    if not text:
        raise ParseError("empty graph spec")
    if text.startswith("file:"):
        path = text[len("file:"):]
        with open(path, encoding="utf-8") as fh:
            try:
                payload = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad JSON in {path}: {exc}") from exc
        try:
            g = Multigraph(int(payload["n"]), [tuple(e) for e in payload["edges"]])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad graph file {path}: {exc}") from exc
        return ParsedSpec(label=text, kind="graph", params=(), graph=g)
    m = re.fullmatch(r"([a-z_]+)\((.*)\)", text)
    if not m:
        pos = next(
            (i for i, ch in enumerate(text) if not (ch.isalnum() or ch in "_(),")),
            len(text),
        )
        raise ParseError(f"cannot parse {text!r} (unexpected input at position {pos})")
    name, arg_text = m.group(1), m.group(2)
    if name not in _CONSTRUCTORS:
        raise ParseError(f"unknown constructor {name!r} at position 0")
    params = []
    for tok in arg_text.split(","):
        tok = tok.strip()
        if not tok:
            raise ParseError(f"empty argument in {text!r} at position {len(name) + 1}")
        try:
            params.append(int(tok))
        except ValueError:
            raise ParseError(
                f"bad integer {tok!r} at position {text.index(tok)}"
            ) from None
    builder, kind = _CONSTRUCTORS[name]
    if name in ("parallel", "multipartite"):
        graph = builder(params) if name == "parallel" else builder(*params)
    else:
        graph = builder(*params)
    return ParsedSpec(label=text, kind=kind, params=tuple(params), graph=graph)


# -- reports --------------------------------------------------------------


@dataclass(frozen=True)
class RegularityReport:
    spec: str
    q: int
    rank: int | str
    sieve: int | str
    formula: int | str
    formula_rule: str
    degree_formula: int
    degree_enum: int | str
    agree: bool
    rank_ms: float
    sieve_ms: float
    formula_ms: float
    note: str = ""

    def method_values(self):
        return {"rank": self.rank, "sieve": self.sieve, "formula": self.formula}

    def csv_rows(self):
        out = []
        for method, value, ms in (
            ("rank", self.rank, self.rank_ms),
            ("sieve", self.sieve, self.sieve_ms),
            ("formula", self.formula, self.formula_ms),
        ):
            out.append(
                [
                    self.spec,
                    str(self.q),
                    method,
                    str(value),
                    str(self.degree_formula),
                    str(self.degree_enum),
                    "true" if self.agree else "false",
                    f"{ms:.3f}",
                ]
            )
        return out

    def to_json_dict(self):
        return asdict(self)

    @classmethod
    def from_json_dict(cls, d) -> "RegularityReport":
        return cls(**d)


def _agreement(values, degree_formula, degree_enum) -> bool:
    present = [v for v in values if isinstance(v, int)]
    if any(a != b for a, b in zip(present, present[1:])):
        return False
    if isinstance(degree_enum, int) and degree_enum != degree_formula:
        return False
    return True


# -- catalog --------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    graph: Multigraph
    kind: str
    params: tuple = ()
    expect_reg: int | None = None
    qs: tuple | None = None


def _parallel_entry(ks) -> CatalogEntry:
    label = f"parallel({','.join(map(str, ks))})"
    return CatalogEntry(label, parallel_composition(ks), "parallel", tuple(ks))


def default_catalog() -> list:
    """Catalog covering the parallel-composition sweep (r in {2, 3}, path
    lengths up to 5, at most 9 edges), one four-path instance for the last
    mixed-parity case, the closed-form families, small trees, a two-block
    cactus, and a disconnected graph."""
    entries = []
    for r in (2, 3):
        for ks in combinations_with_replacement(range(1, 6), r):
            if sum(ks) <= 9:
                entries.append(_parallel_entry(ks))
    entries.append(_parallel_entry((2, 2, 3, 3)))
    for k in (3, 4, 5, 6):
        entries.append(
            CatalogEntry(f"cycle({k})", cycle_graph(k), "cycle", (k,))
        )
    entries.append(
        CatalogEntry("biclique(2,2)", complete_bipartite(2, 2), "biclique", (2, 2))
    )
    entries.append(
        CatalogEntry("biclique(2,3)", complete_bipartite(2, 3), "biclique", (2, 3))
    )
    entries.append(CatalogEntry("complete(4)", complete_graph(4), "complete", (4,)))
    entries.append(
        CatalogEntry(
            "multipartite(1,1,2)",
            complete_multipartite(1, 1, 2),
            "multipartite",
            (1, 1, 2),
        )
    )
    for k in range(1, 6):
        entries.append(CatalogEntry(f"path({k})", path_graph(k), "path", (k,)))
    for k in (2, 3, 4):
        entries.append(CatalogEntry(f"star({k})", star_graph(k), "star", (k,)))
    entries.append(
        CatalogEntry(
            "tree[0-1;1-2;1-3;3-4;3-5]",
            Multigraph(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]),
            "graph",
        )
    )
    entries.append(
        CatalogEntry(
            "cactus[C4;C4]",
            Multigraph(
                7,
                [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5), (5, 6), (0, 6)],
            ),
            "graph",
        )
    )
    entries.append(
        CatalogEntry(
            "disjoint-edges[2]", Multigraph(4, [(0, 1), (2, 3)]), "graph"
        )
    )
    return entries


def load_catalog(path) -> list:
    """User catalog: JSON list of {"spec": str, "q": [ints]?, "expect_reg": int?}."""
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    if not isinstance(payload, list):
        raise ParseError("catalog file must hold a JSON list")
    entries = []
    for item in payload:
        parsed = parse_graph_spec(item["spec"])
        entries.append(
            CatalogEntry(
                label=parsed.label,
                graph=parsed.graph,
                kind=parsed.kind,
                params=parsed.params,
                expect_reg=item.get("expect_reg"),
                qs=tuple(item["q"]) if "q" in item else None,
            )
        )
    return entries


# -- witnesses ------------------------------------------------------------


def auto_witnesses(g: Multigraph, kind: str = "graph", params=()):
    """Structural witnesses derivable from the graph itself: a pendant
    vertex, one contraction pair, one overlapping edge cover, one
    independent set missing an edge, the bipartition bound, and (for
    mixed-parity parallel compositions) the parity split."""
    ws = []
    for v in range(g.n):
        if g.degree(v) == 1 and g.s > 1:
            (eid,) = g.edges_at(v)
            a, b = g.edges[eid]
            mate = b if v == a else a
            if g.degree(mate) >= 2:
                ws.append(PendantWitness(v))
                break
    edge_set = set(g.edges)
    non_edge = next(
        (
            (u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if (u, v) not in edge_set
        ),
        None,
    )
    if non_edge:
        ws.append(ContractionWitness(*non_edge))
    if g.s >= 2:
        mid = g.s // 2
        ws.append(CoverWitness(tuple(range(mid + 1)), tuple(range(mid, g.s))))
    adj = {v: set() for v in range(g.n)}
    for u, w in g.edges:
        adj[u].add(w)
        adj[w].add(u)
    eu, ew = g.edges[-1]
    chosen = []
    for v in range(g.n):
        if v in (eu, ew):
            continue
        if any(c in adj[v] for c in chosen):
            continue
        chosen.append(v)
    if chosen:
        ws.append(IndependentSetWitness(tuple(chosen)))
    if bipartition(g) is not None and len(connected_components(g)) == 1:
        ws.append(BipartiteBoundWitness())
    if kind == "parallel" and params:
        if any(k % 2 for k in params) and any(k % 2 == 0 for k in params):
            ws.append(ParitySplitWitness(tuple(params)))
    return ws


# -- per-instance evaluation ----------------------------------------------


def _formula_for_entry(entry: CatalogEntry, q: int):
    stats = graph_stats(entry.graph)
    if stats.m > 1:
        # disconnected: the rank method is the reference value
        return detect_closed_form(entry.graph, q)
    if entry.kind == "graph":
        return detect_closed_form(entry.graph, q)
    return reg_closed_form(entry.kind, entry.params, q)


def _sieve_estimate_fits(g, sieve_value, size, matrix_cap_val) -> bool:
    if not isinstance(sieve_value, int):
        return False
    cells = size * comb(g.s + sieve_value - 1, sieve_value)
    return cells <= matrix_cap_val


def evaluate_entry(
    entry: CatalogEntry,
    q: int,
    with_bounds: bool = True,
    bound_point_budget: int = 1024,
    state_cap=None,
    matrix_cap=None,
) -> tuple:
    """Run all methods on one (instance, q) pair.  Returns the report and
    the list of (bound row) results."""
    g = entry.graph
    stats = graph_stats(g)
    deg_formula = degree_formula(stats, q)

    ps = None
    try:
        ps = enumerate_points(g, q, cap=state_cap)
        deg_enum = ps.size
    except TooLargeError:
        deg_enum = NOT_RUN

    t0 = time.perf_counter()
    try:
        sieve_value = regularity_sieve(g, q, cap=state_cap)
    except TooLargeError:
        sieve_value = NOT_RUN
    sieve_ms = (time.perf_counter() - t0) * 1000.0

    t0 = time.perf_counter()
    fr = _formula_for_entry(entry, q)
    formula_value = fr.value if fr.applicable else NOT_APPLICABLE
    formula_ms = (time.perf_counter() - t0) * 1000.0

    mc = caps.matrix_cap(matrix_cap)
    rank_value = NOT_RUN
    rank_ms = 0.0
    if ps is not None and _sieve_estimate_fits(g, sieve_value, ps.size, mc):
        t0 = time.perf_counter()
        try:
            profile = regularity_rank(
                g, q, points=ps, state_cap=state_cap, matrix_cap=matrix_cap
            )
            rank_value = profile.regularity
        except TooLargeError:
            rank_value = NOT_RUN
        rank_ms = (time.perf_counter() - t0) * 1000.0

    values = [rank_value, sieve_value, formula_value]
    if entry.expect_reg is not None:
        values.append(entry.expect_reg)
    agree = _agreement(values, deg_formula, deg_enum)
    note = "" if fr.applicable else (fr.reason or "")
    if entry.expect_reg is not None:
        note = (note + f" expected reg {entry.expect_reg}").strip()

    report = RegularityReport(
        spec=entry.label,
        q=q,
        rank=rank_value,
        sieve=sieve_value,
        formula=formula_value,
        formula_rule=fr.rule,
        degree_formula=deg_formula,
        degree_enum=deg_enum,
        agree=agree,
        rank_ms=rank_ms,
        sieve_ms=sieve_ms,
        formula_ms=formula_ms,
        note=note,
    )

    bound_rows = []
    if (
        with_bounds
        and ps is not None
        and isinstance(rank_value, int)
        and ps.size <= bound_point_budget
    ):
        for w in auto_witnesses(g, entry.kind, entry.params):
            try:
                rows = verify_bounds(
                    g,
                    q,
                    rank_value,
                    [w],
                    state_cap=state_cap,
                    matrix_cap=_ROW_CELL_BUDGET,
                )
            except TooLargeError:
                continue
            bound_rows.extend(rows)
    return report, bound_rows


def _evaluate_job(args):
    entry, q, with_bounds, budget, state_cap, matrix_cap = args
    try:
        return evaluate_entry(
            entry,
            q,
            with_bounds=with_bounds,
            bound_point_budget=budget,
            state_cap=state_cap,
            matrix_cap=matrix_cap,
        )
    except Exception as exc:  # record, never abort the sweep
        report = RegularityReport(
            spec=entry.label,
            q=q,
            rank=NOT_RUN,
            sieve=NOT_RUN,
            formula=NOT_RUN,
            formula_rule="error",
            degree_formula=-1,
            degree_enum=NOT_RUN,
            agree=False,
            rank_ms=0.0,
            sieve_ms=0.0,
            formula_ms=0.0,
            note=f"error: {exc}",
        )
        return report, []


@dataclass
class SuiteResult:
    reports: list
    bound_rows: list  # (spec label, q, BoundRow)

    @property
    def ok(self) -> bool:
        return all(r.agree for r in self.reports) and all(
            row.satisfied for _, _, row in self.bound_rows
        )


def verify_suite(
    entries=None,
    q_list=(3, 4, 5),
    jobs: int = 1,
    with_bounds: bool = True,
    bound_point_budget: int = 1024,
    state_cap=None,
    matrix_cap=None,
) -> SuiteResult:
    """Cross-check every catalog instance at every q.  Jobs fan out to a
    process pool; results are merged in sorted (spec, q) order either way."""
    if entries is None:
        entries = default_catalog()
    work = []
    for entry in entries:
        for q in entry.qs or q_list:
            work.append(
                (entry, q, with_bounds, bound_point_budget, state_cap, matrix_cap)
            )
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_evaluate_job, work))
    else:
        outcomes = [_evaluate_job(args) for args in work]
    keyed = sorted(
        zip(work, outcomes), key=lambda pair: (pair[0][0].label, pair[0][1])
    )
    reports = []
    bound_rows = []
    for (entry, q, *_), (report, rows) in keyed:
        reports.append(report)
        bound_rows.extend((entry.label, q, row) for row in rows)
    return SuiteResult(reports=reports, bound_rows=bound_rows)


# -- serialisation ---------------------------------------------------------


def write_csv(reports, fh):
    import csv as _csv

    writer = _csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER.split(","))
    for report in reports:
        writer.writerows(report.csv_rows())


def reports_to_json(reports) -> str:
    return json.dumps([r.to_json_dict() for r in reports], indent=2)


def parse_reports_json(text: str):
    return [RegularityReport.from_json_dict(d) for d in json.loads(text)]
