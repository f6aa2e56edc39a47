"""Colon and add decompositions used in the family induction arguments.

Every catalogued rule says: take the edge ideal of a family member,
colon out (or add) a pivot monomial, strip killed and free variables,
and the leftover graph splits into components isomorphic to smaller
catalogue members.  The rules record the expected factors and the
expected number of freed variables; verify_decomposition replays one
mechanically and reports per-factor isomorphism results.

Factor indices can drop to 0 or below; those degenerate members resolve
to stars, bristled stars, loose variables, or nothing at all.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RuleInapplicableError
from .families import (FamilySpec, build_extended, bristled, find_vertex,
                       star, tsnake_star, tsnake_starstar, validate_spec)
from .graphs import LabeledGraph, apex, is_isomorphic, path_bristle, path_vertex
from .ideals import (MonomialIdeal, add_variable, colon_by, edge_ideal,
                     graph_parts, vars_of)


@dataclass(frozen=True)
class DecompositionRule:
    rule_id: str
    family: str  # "tsnake", "brs-tsnake-star", ...
    kind: str  # "colon" or "add"
    pivot_desc: str
    min_n: int = 1


_RULES = [
    DecompositionRule("tsnake:colon-xn", "tsnake", "colon", "x_n"),
    DecompositionRule("tsnake:add-xn", "tsnake", "add", "x_n"),
    DecompositionRule("tsnake-star:colon-xn", "tsnake_star", "colon", "x_n"),
    DecompositionRule("tsnake-star:add-xn", "tsnake_star", "add", "x_n"),
    DecompositionRule("tsnake-starstar:colon-xn", "tsnake_starstar", "colon", "x_n"),
    DecompositionRule("tsnake-starstar:add-xn", "tsnake_starstar", "add", "x_n"),
    DecompositionRule("ouroboros:colon-xn", "ouroboros", "colon", "x_n", 3),
    DecompositionRule("ouroboros:add-xn", "ouroboros", "add", "x_n", 3),
    DecompositionRule("brs-tsnake:colon-end", "brs-tsnake", "colon", "x_{n+1}"),
    DecompositionRule("brs-tsnake:add-end", "brs-tsnake", "add", "x_{n+1}"),
    DecompositionRule("brs-tsnake:colon-brush", "brs-tsnake", "colon",
                      "x_{(n+1)1}..x_{(n+1)q}"),
    DecompositionRule("brs-tsnake-star:colon-end", "brs-tsnake_star", "colon",
                      "x_{n+1}"),
    DecompositionRule("brs-tsnake-star:add-end", "brs-tsnake_star", "add",
                      "x_{n+1}"),
    DecompositionRule("brs-tsnake-star:colon-row", "brs-tsnake_star", "colon",
                      "y_{(n+1)1}..y_{(n+1)p}"),
    DecompositionRule("brs-tsnake-starstar:colon-end", "brs-tsnake_starstar",
                      "colon", "x_{n+1}"),
    DecompositionRule("brs-tsnake-starstar:add-end", "brs-tsnake_starstar",
                      "add", "x_{n+1}"),
    DecompositionRule("brs-tsnake-starstar:colon-row", "brs-tsnake_starstar",
                      "colon", "y_{(n+1)1}..y_{(n+1)p}"),
    DecompositionRule("brs-ouroboros:colon-xn", "brs-ouroboros", "colon",
                      "x_n", 3),
    DecompositionRule("brs-ouroboros:add-xn", "brs-ouroboros", "add", "x_n", 3),
    DecompositionRule("brs-ouroboros:colon-brush", "brs-ouroboros", "colon",
                      "x_{n1}..x_{nq}", 3),
]

RULES_BY_ID = {r.rule_id: r for r in _RULES}


def family_key(spec: FamilySpec) -> str:
    if spec.kind == "brs":
        return f"brs-{spec.inner.kind}"
    return spec.kind


def rules_for(spec: FamilySpec) -> list[DecompositionRule]:
    key = family_key(spec)
    n = spec.n if spec.inner is None else spec.inner.n
    return [r for r in _RULES if r.family == key and n is not None and n >= r.min_n]


def _params(spec: FamilySpec) -> tuple[int, int, int | None]:
    """(n, p, q) of a snake-family spec; q is None when unbristled."""
    if spec.kind == "brs":
        return spec.inner.n, spec.inner.p, spec.q
    return spec.n, spec.p, None


def pivot_mask(rule: DecompositionRule, spec: FamilySpec,
               graph: LabeledGraph) -> int:
    n, p, q = _params(spec)
    if rule.pivot_desc == "x_n":
        return 1 << find_vertex(graph, path_vertex(n))
    if rule.pivot_desc == "x_{n+1}":
        return 1 << find_vertex(graph, path_vertex(n + 1))
    if rule.pivot_desc.startswith("y_"):
        mask = 0
        for k in range(1, p + 1):
            mask |= 1 << find_vertex(graph, apex(n + 1, k))
        return mask
    # bristle brushes: the q leaves hanging off one spine vertex
    host = n + 1 if "(n+1)" in rule.pivot_desc else n
    mask = 0
    for t in range(1, q + 1):
        mask |= 1 << find_vertex(graph, path_bristle(host, t))
    return mask


def expected_outcome(rule: DecompositionRule,
                     spec: FamilySpec) -> tuple[list[FamilySpec], int]:
    """(expected factor specs, expected count of freed variables).

    Factor specs may carry n <= 0; resolve_factor turns those into
    concrete graphs or extra free variables.
    """
    n, p, q = _params(spec)
    rid = rule.rule_id
    if rid == "tsnake:colon-xn":
        return [tsnake_star(n - 3, p)], 1
    if rid == "tsnake:add-xn":
        return [tsnake_star(n - 2, p), star(p)], 0
    if rid == "tsnake-star:colon-xn":
        return [tsnake_star(n - 3, p)], 1 + p
    if rid == "tsnake-star:add-xn":
        return [tsnake_star(n - 2, p), star(2 * p)], 0
    if rid == "tsnake-starstar:colon-xn":
        return [tsnake_starstar(n - 3, p)], 1 + p
    if rid == "tsnake-starstar:add-xn":
        return [tsnake_starstar(n - 2, p), star(2 * p)], 0
    if rid == "ouroboros:colon-xn":
        return [tsnake_starstar(n - 4, p)], 1
    if rid == "ouroboros:add-xn":
        return [tsnake_starstar(n - 2, p)], 0
    if rid == "brs-tsnake:colon-end":
        return [bristled(q, tsnake_star(n - 2, p))], 1 + q + p * q
    if rid == "brs-tsnake:add-end":
        return [bristled(q, tsnake_star(n - 1, p))], q
    if rid == "brs-tsnake:colon-brush":
        return [bristled(q, tsnake_star(n - 1, p))], q
    if rid == "brs-tsnake-star:colon-end":
        return [bristled(q, tsnake_star(n - 2, p))], 1 + q + 2 * p * q
    if rid == "brs-tsnake-star:add-end":
        return [bristled(q, tsnake_star(n - 1, p))] + [star(q)] * p, q
    if rid == "brs-tsnake-star:colon-row":
        return [bristled(q, tsnake_star(n - 1, p))], q + p
    if rid == "brs-tsnake-starstar:colon-end":
        return [bristled(q, tsnake_starstar(n - 2, p))], 1 + q + 2 * p * q
    if rid == "brs-tsnake-starstar:add-end":
        return [bristled(q, tsnake_starstar(n - 1, p))] + [star(q)] * p, q
    if rid == "brs-tsnake-starstar:colon-row":
        return [bristled(q, tsnake_starstar(n - 1, p))], q + p
    if rid == "brs-ouroboros:colon-xn":
        return [bristled(q, tsnake_starstar(n - 4, p))], 1 + 2 * q + 2 * p * q
    if rid == "brs-ouroboros:add-xn":
        return [bristled(q, tsnake_starstar(n - 2, p))], q
    if rid == "brs-ouroboros:colon-brush":
        return [bristled(q, tsnake_starstar(n - 2, p))], q
    raise RuleInapplicableError(f"unknown rule {rid}")


def resolve_factor(fspec: FamilySpec) -> tuple[list[LabeledGraph], int]:
    """Concrete graphs (plus stray free variables) for a factor spec.

    Degenerate indices: a starred snake at n=0 is a star, at n<0 nothing;
    a doubly starred snake at n=-1 leaves p loose variables (p loose
    q-stars once bristled).
    """
    inner = fspec.inner
    if fspec.kind == "brs" and inner.kind in ("tsnake_star", "tsnake_starstar"):
        if inner.n >= 0:
            return [build_extended(fspec)], 0
        if inner.kind == "tsnake_starstar" and inner.n == -1:
            return [build_extended(star(fspec.q)) for _ in range(inner.p)], 0
        return [], 0
    if fspec.kind == "tsnake_star":
        if fspec.n >= 0:
            return [build_extended(fspec)], 0
        return [], 0
    if fspec.kind == "tsnake_starstar":
        if fspec.n >= 0:
            return [build_extended(fspec)], 0
        if fspec.n == -1:
            return [], fspec.p
        return [], 0
    return [build_extended(fspec)], 0


@dataclass(frozen=True)
class FactorReport:
    expected: str
    matched: bool
    detail: str = ""


@dataclass(frozen=True)
class DecompositionReport:
    rule_id: str
    spec: FamilySpec
    pivot: str
    ok: bool
    factors: tuple[FactorReport, ...]
    expected_free: int
    actual_free: int
    killed: int
    accounting_ok: bool

    def as_dict(self) -> dict:
        return {
            "rule": self.rule_id, "family": str(self.spec),
            "pivot": self.pivot, "ok": self.ok,
            "factors": [{"expected": f.expected, "matched": f.matched,
                         "detail": f.detail} for f in self.factors],
            "expected_free": self.expected_free,
            "actual_free": self.actual_free, "killed": self.killed,
            "accounting_ok": self.accounting_ok,
        }


def _component_graphs(ideal: MonomialIdeal) -> list[LabeledGraph]:
    _, edges, _, higher = graph_parts(ideal)
    if higher:
        raise ValueError("decomposition result is not an edge ideal")
    parent = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in edges:
        parent.setdefault(a, a)
        parent.setdefault(b, b)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups: dict[int, list[tuple[int, int]]] = {}
    for a, b in edges:
        groups.setdefault(find(a), []).append((a, b))
    out = []
    for root in sorted(groups, key=lambda r: min(min(e) for e in groups[r])):
        pairs = groups[root]
        verts = sorted({v for e in pairs for v in e})
        local = {v: i for i, v in enumerate(verts)}
        out.append(LabeledGraph.from_edge_list(
            len(verts), [(local[a], local[b]) for a, b in pairs]))
    return out


def verify_decomposition(rule: DecompositionRule,
                         spec: FamilySpec) -> DecompositionReport:
    validate_spec(spec)
    if rule not in rules_for(spec):
        raise RuleInapplicableError(
            f"rule {rule.rule_id} does not apply to {spec}")
    graph = build_extended(spec)
    ideal = edge_ideal(graph)
    pivot = pivot_mask(rule, spec, graph)
    if rule.kind == "colon":
        result = colon_by(ideal, pivot)
    else:
        result = add_variable(ideal, vars_of(pivot)[0])
    killed, _, free, _ = graph_parts(result)
    components = _component_graphs(result)
    factor_specs, rule_free = expected_outcome(rule, spec)
    expected_graphs: list[LabeledGraph] = []
    names: list[str] = []
    expected_free = rule_free
    for fs in factor_specs:
        graphs, extra = resolve_factor(fs)
        expected_graphs.extend(graphs)
        names.extend([str(fs)] * len(graphs))
        expected_free += extra
    assignment = _match_graphs(expected_graphs, components)
    reports = []
    for i, g in enumerate(expected_graphs):
        if assignment is not None:
            reports.append(FactorReport(names[i], True))
        else:
            hit = any(is_isomorphic(g, c) for c in components)
            detail = "no unused component matches" if hit else "no component matches"
            reports.append(FactorReport(names[i], False, detail))
    count_ok = len(expected_graphs) == len(components)
    actual_free = free.bit_count()
    free_ok = actual_free == expected_free
    ambient = ideal.n_vars
    accounting = (sum(g.n_vertices for g in expected_graphs)
                  + expected_free + killed.bit_count() == ambient)
    ok = (assignment is not None) and count_ok and free_ok and accounting
    return DecompositionReport(
        rule.rule_id, spec, rule.pivot_desc, ok, tuple(reports),
        expected_free, actual_free, killed.bit_count(), accounting)


def _match_graphs(expected: list[LabeledGraph],
                  found: list[LabeledGraph]) -> list[int] | None:
    """Injective assignment of expected factors to isomorphic components."""
    if len(expected) != len(found):
        return None
    used = [False] * len(found)
    pick: list[int] = []

    def go(i: int) -> bool:
        if i == len(expected):
            return True
        for j in range(len(found)):
            if not used[j] and is_isomorphic(expected[i], found[j]):
                used[j] = True
                pick.append(j)
                if go(i + 1):
                    return True
                used[j] = False
                pick.pop()
        return False

    return pick if go(0) else None


def replay_family(spec: FamilySpec) -> list[DecompositionReport]:
    return [verify_decomposition(rule, spec) for rule in rules_for(spec)]


def replay_catalogue(max_n: int = 4, max_p: int = 2,
                     max_q: int = 2) -> list[DecompositionReport]:
    """Replay every rule over its full desk-scale parameter box."""
    from .families import ouroboros, tsnake

    reports = []
    for n in range(1, max_n + 1):
        for p in range(1, max_p + 1):
            for base in (tsnake(n, p), tsnake_star(n, p), tsnake_starstar(n, p)):
                reports.extend(replay_family(base))
                for q in range(1, max_q + 1):
                    reports.extend(replay_family(bristled(q, base)))
    for n in range(3, max_n + 1):
        for p in range(1, max_p + 1):
            reports.extend(replay_family(ouroboros(n, p)))
            for q in range(1, max_q + 1):
                reports.extend(replay_family(bristled(q, ouroboros(n, p))))
    return reports
