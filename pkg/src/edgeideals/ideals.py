"""Squarefree monomial ideals on at most 64 variables, stored as bitmasks.

A squarefree monomial is the bitmask of its support.  An ideal keeps the
sorted antichain of minimal generators; mask 0 denotes the monomial 1,
so gens == (0,) is the unit ideal and gens == () the zero ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import MembershipError, TooManyVariablesError
from .graphs import LabeledGraph

MAX_VARS = 64


def mask_of(variables: Iterable[int]) -> int:
    m = 0
    for v in variables:
        m |= 1 << v
    return m


def vars_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def minimize(gens: Iterable[int]) -> tuple[int, ...]:
    """Reduce a generating set to the antichain of minimal monomials."""
    ordered = sorted(set(gens), key=lambda g: (g.bit_count(), g))
    kept: list[int] = []
    for g in ordered:
        if not any(k & g == k for k in kept):
            kept.append(g)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    n_vars: int
    gens: tuple[int, ...]

    @classmethod
    def make(cls, n_vars: int, gens: Iterable[int]) -> "MonomialIdeal":
        if not 0 <= n_vars <= MAX_VARS:
            raise TooManyVariablesError(
                f"n_vars must be between 0 and {MAX_VARS}, got {n_vars}")
        gens = minimize(gens)
        top = 1 << n_vars
        if any(g >= top for g in gens):
            raise ValueError("generator uses a variable outside the ring")
        return cls(n_vars, gens)

    @classmethod
    def zero(cls, n_vars: int) -> "MonomialIdeal":
        return cls.make(n_vars, [])

    @classmethod
    def unit(cls, n_vars: int) -> "MonomialIdeal":
        return cls.make(n_vars, [0])

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (0,)

    @property
    def support(self) -> int:
        m = 0
        for g in self.gens:
            m |= g
        return m

    @property
    def max_degree(self) -> int:
        return max((g.bit_count() for g in self.gens), default=0)

    def contains(self, monomial: int) -> bool:
        """Membership test: some generator divides the monomial."""
        return any(g & monomial == g for g in self.gens)


def edge_ideal(graph: LabeledGraph) -> MonomialIdeal:
    """Edge ideal of a simple graph on its canonical variable order."""
    gens = [(1 << a) | (1 << b) for a, b in graph.edges]
    return MonomialIdeal.make(graph.n_vertices, gens)


def colon_by(ideal: MonomialIdeal, monomial: int) -> MonomialIdeal:
    """Colon ideal (I : m) for a squarefree monomial m not in I.

    Generators are g with g's intersection with m removed, reminimized.
    Colon by 1 returns the ideal unchanged.
    """
    if ideal.contains(monomial):
        raise MembershipError("colon pivot lies in the ideal; quotient is the unit ideal")
    return MonomialIdeal.make(ideal.n_vars, (g & ~monomial for g in ideal.gens))


def add_variable(ideal: MonomialIdeal, v: int) -> MonomialIdeal:
    """The ideal (I, x_v); generators containing v become redundant."""
    if not 0 <= v < ideal.n_vars:
        raise ValueError(f"variable {v} outside the ring")
    return MonomialIdeal.make(ideal.n_vars, ideal.gens + (1 << v,))


@dataclass(frozen=True)
class ComponentSplit:
    """Variable-disjoint splitting of an ideal.

    components: (compacted sub-ideal, original variable indices) pairs,
    one per connected block of the generator-overlap graph.
    free: variables appearing in no generator.
    """

    components: tuple[tuple[MonomialIdeal, tuple[int, ...]], ...]
    free: tuple[int, ...]


def compact(ideal: MonomialIdeal, variables: Iterable[int]) -> MonomialIdeal:
    """Restrict to the given variables and renumber them 0..k-1."""
    varlist = sorted(variables)
    pos = {v: i for i, v in enumerate(varlist)}
    keep = mask_of(varlist)
    gens = []
    for g in ideal.gens:
        if g & keep == g:
            gens.append(mask_of(pos[v] for v in vars_of(g)))
    return MonomialIdeal.make(len(varlist), gens)


def ideal_components(ideal: MonomialIdeal) -> ComponentSplit:
    """Split into variable-disjoint components plus free variables.

    Two generators are linked when their supports overlap; each block of
    generators becomes one component on its own compacted variables.
    """
    if ideal.is_unit:
        raise ValueError("the unit ideal has no component splitting")
    gens = list(ideal.gens)
    parent = list(range(len(gens)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict[int, int] = {}
    for i, g in enumerate(gens):
        for v in vars_of(g):
            if v in owner:
                ri, rj = find(i), find(owner[v])
                if ri != rj:
                    parent[ri] = rj
            else:
                owner[v] = i
    blocks: dict[int, list[int]] = {}
    for i in range(len(gens)):
        blocks.setdefault(find(i), []).append(i)
    comps = []
    for root in sorted(blocks, key=lambda r: min(gens[i] for i in blocks[r])):
        sub = [gens[i] for i in blocks[root]]
        varmask = 0
        for g in sub:
            varmask |= g
        variables = tuple(vars_of(varmask))
        comps.append((compact(MonomialIdeal.make(ideal.n_vars, sub), variables),
                      variables))
    free = tuple(v for v in range(ideal.n_vars) if not (ideal.support >> v) & 1)
    return ComponentSplit(tuple(comps), free)


def graph_parts(ideal: MonomialIdeal) -> tuple[int, list[tuple[int, int]], int, list[int]]:
    """Split generators into (killed mask, edge pairs, free mask, higher gens).

    killed collects degree-1 generators, edges the degree-2 ones, free
    the variables missing from every generator.  Degree >= 3 generators
    are returned as-is so callers can refuse them.
    """
    killed = 0
    edges = []
    higher = []
    for g in ideal.gens:
        d = g.bit_count()
        if d == 0:
            raise ValueError("unit ideal has no graph form")
        if d == 1:
            killed |= g
        elif d == 2:
            a, b = vars_of(g)
            edges.append((a, b))
        else:
            higher.append(g)
    free = ((1 << ideal.n_vars) - 1) & ~ideal.support
    return killed, edges, free, higher


def ideal_to_text(ideal: MonomialIdeal, names: list[str]) -> str:
    """One generator per line, variables joined by '*', e.g. x2*y11."""
    lines = []
    for g in sorted(ideal.gens, key=lambda g: (g.bit_count(), g)):
        if g == 0:
            lines.append("1")
        else:
            lines.append("*".join(names[v] for v in vars_of(g)))
    return "\n".join(lines) + ("\n" if lines else "")


def ideal_from_text(text: str, names: list[str], n_vars: int | None = None) -> MonomialIdeal:
    """Inverse of ideal_to_text given the same variable name list."""
    index = {name: i for i, name in enumerate(names)}
    if n_vars is None:
        n_vars = len(names)
    gens = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line == "1":
            gens.append(0)
            continue
        try:
            gens.append(mask_of(index[part] for part in line.split("*")))
        except KeyError as exc:
            raise ValueError(f"unknown variable {exc.args[0]!r}") from None
    return MonomialIdeal.make(n_vars, gens)
