"""Regularity of edge-ideal quotients by the colon/add recursion.

For a variable y not in I, reg(S/I) is determined by reg(S/(I:y)) and
reg(S/(I,y)): strictly larger colon wins plus one, strictly larger add
wins as is, and a tie only pins the value to a two-element range.  The
recursion normalizes at every node (drop killed variables, drop free
variables, split connected components and add their values) and bottoms
out at the zero ideal (0) and a single edge (1).

A tie does not have to be the last word: any variable is a valid pivot,
so on a tie we retry the remaining pivots and intersect the resulting
ranges, returning a point whenever one pivot is decisive.  The result
type is an interval either way; callers assert is_point where the
catalogue predicts an exact value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RecursionCapError
from .ideals import MonomialIdeal, ideal_components, vars_of

DEFAULT_MAX_STEPS = 200_000


@dataclass(frozen=True)
class RegInterval:
    lo: int
    hi: int

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> int:
        if not self.is_point:
            raise ValueError(f"range [{self.lo}, {self.hi}] is not a point")
        return self.lo

    def __add__(self, other: "RegInterval") -> "RegInterval":
        return RegInterval(self.lo + other.lo, self.hi + other.hi)


_POINT_ZERO = RegInterval(0, 0)
_POINT_ONE = RegInterval(1, 1)


def _combine(colon: RegInterval, add: RegInterval) -> RegInterval:
    # sound envelope of the trichotomy; exact when both inputs are points
    if colon.lo > add.hi:
        return RegInterval(colon.lo + 1, colon.hi + 1)
    if colon.hi < add.lo:
        return add
    return RegInterval(min(add.lo, colon.lo + 1), max(add.hi, colon.hi + 1))


def _intersect(a: RegInterval, b: RegInterval) -> RegInterval:
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    if lo > hi:
        raise ValueError("pivot results are contradictory; this is a bug")
    return RegInterval(lo, hi)


class _Engine:
    def __init__(self, max_steps: int):
        self.memo: dict[tuple[int, tuple[int, ...]], RegInterval] = {}
        self.steps = 0
        self.max_steps = max_steps

    def reg(self, ideal: MonomialIdeal) -> RegInterval:
        """reg of S/I after normalization; I has generators of degree <= 2."""
        self.steps += 1
        if self.steps > self.max_steps:
            raise RecursionCapError(
                f"regularity recursion exceeded {self.max_steps} steps")
        gens2 = [g for g in ideal.gens if g.bit_count() == 2]
        if not gens2:
            return _POINT_ZERO
        if len(gens2) == 1:
            return _POINT_ONE
        split = ideal_components(ideal)
        total = _POINT_ZERO
        for comp, _ in split.components:
            if comp.gens and comp.gens[0].bit_count() == 1 and len(comp.gens) == 1:
                continue  # a killed variable contributes nothing
            total = total + self._component(comp)
        return total

    def _component(self, comp: MonomialIdeal) -> RegInterval:
        edges = [g for g in comp.gens if g.bit_count() == 2]
        if not edges:
            return _POINT_ZERO
        if len(edges) == 1:
            return _POINT_ONE
        key = (comp.n_vars, comp.gens)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        result: RegInterval | None = None
        for v in self._pivots(comp):
            colon = self.reg(_colon_var(comp, v))
            add = self.reg(_add_var(comp, v))
            step = _combine(colon, add)
            result = step if result is None else _intersect(result, step)
            if result.is_point:
                break
        self.memo[key] = result
        return result

    def _pivots(self, comp: MonomialIdeal) -> list[int]:
        # highest degree first; ties broken toward lower variable index
        degree = [0] * comp.n_vars
        for g in comp.gens:
            for v in vars_of(g):
                degree[v] += 1
        order = sorted(range(comp.n_vars), key=lambda v: (-degree[v], v))
        return [v for v in order if degree[v] > 0]


def _colon_var(ideal: MonomialIdeal, v: int) -> MonomialIdeal:
    pivot = 1 << v
    gens = [g & ~pivot for g in ideal.gens]
    return MonomialIdeal.make(ideal.n_vars, gens)


def _add_var(ideal: MonomialIdeal, v: int) -> MonomialIdeal:
    pivot = 1 << v
    gens = [g for g in ideal.gens if not g & pivot]
    gens.append(pivot)
    return MonomialIdeal.make(ideal.n_vars, gens)


def regularity_by_recursion(ideal: MonomialIdeal,
                            first_pivot: int | None = None,
                            max_steps: int = DEFAULT_MAX_STEPS) -> RegInterval:
    """reg(S/I) for an edge-type ideal by the colon/add trichotomy.

    Generators must have degree at most two.  first_pivot forces the
    variable used at the top level (the family proofs always name one);
    deeper levels pick their own pivots.
    """
    if ideal.is_unit:
        raise ValueError("S/I is the zero module")
    if ideal.max_degree > 2:
        raise ValueError("recursion is only defined for edge-type ideals")
    engine = _Engine(max_steps)
    if first_pivot is None:
        return engine.reg(ideal)
    if ideal.contains(1 << first_pivot):
        raise ValueError("first_pivot already lies in the ideal")
    colon = engine.reg(_colon_var(ideal, first_pivot))
    add = engine.reg(_add_var(ideal, first_pivot))
    return _combine(colon, add)
