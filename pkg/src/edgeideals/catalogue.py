"""Predicted invariant values for the catalogued graph families.

Each entry evaluates the closed formulas for depth, Stanley depth,
regularity, and projective dimension where such formulas exist.  Star
and bristled-star families carry all four; the plain snake and cycle
families carry regularity only.  A prediction is "stated" when the
parameters sit inside the range the formula is claimed for; outside
that range the same expression can still be evaluated on request and
is then flagged observational.

Degenerate indices n in {0, -1, -2} for the starred snake families are
resolved here (they denote stars, bristled stars, copies of the ground
field, or loose polynomial variables) even though the graph builder
refuses them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameterError, OutOfStatedRangeError
from .families import FamilySpec, validate_spec


@dataclass(frozen=True)
class ClosedForm:
    spec: FamilySpec
    stated: bool
    values: dict[str, int]  # keys among depth, sdepth, reg, pdim


def _star_values(u: int) -> dict[str, int]:
    return {"depth": 1, "sdepth": 1, "reg": 1, "pdim": u}


def _bstar_values(u: int, q: int) -> dict[str, int]:
    return {"depth": u + q, "sdepth": u + q, "reg": u, "pdim": u * q + 1}


def _base_case(spec: FamilySpec) -> dict[str, int] | None:
    """Values for the degenerate starred-family indices, or None.

    n = 0 collapses a starred snake to a star (and its bristling to a
    bristled star); n = -1 leaves either nothing or a batch of loose
    variables; n = -2 leaves nothing.  "Nothing" means the quotient is
    the field itself: every invariant is 0.
    """
    if spec.kind == "brs" and spec.inner is not None:
        inner = spec.inner
        if inner.kind == "tsnake_star" and inner.n is not None and inner.n <= 0:
            if inner.n == 0:
                return _bstar_values(inner.p, spec.q)
            return {"depth": 0, "sdepth": 0, "reg": 0, "pdim": 0}
        if inner.kind == "tsnake_starstar" and inner.n is not None and inner.n <= 0:
            if inner.n == 0:
                return _bstar_values(2 * inner.p, spec.q)
            if inner.n == -1:
                # p disjoint q-star quotients; invariants add across the
                # tensor factors
                p, q = inner.p, spec.q
                return {"depth": p, "sdepth": p, "reg": p, "pdim": p * q}
            return {"depth": 0, "sdepth": 0, "reg": 0, "pdim": 0}
        return None
    if spec.kind == "tsnake_star" and spec.n is not None and spec.n <= 0:
        if spec.n == 0:
            return _star_values(spec.p)
        return {"depth": 0, "sdepth": 0, "reg": 0, "pdim": 0}
    if spec.kind == "tsnake_starstar" and spec.n is not None and spec.n <= 0:
        if spec.n == 0:
            return _star_values(2 * spec.p)
        if spec.n == -1:
            return {"depth": spec.p, "sdepth": spec.p, "reg": 0, "pdim": 0}
        return {"depth": 0, "sdepth": 0, "reg": 0, "pdim": 0}
    return None


def closed_form(spec: FamilySpec, allow_observational: bool = False) -> ClosedForm:
    """Catalogued invariant predictions for a family instance.

    Raises OutOfStatedRangeError when the parameters fall outside the
    range the formulas are claimed for, unless allow_observational is
    set, in which case the formulas are evaluated anyway and the result
    is marked stated=False.
    """
    base = _base_case(spec)
    if base is not None:
        return ClosedForm(spec, True, base)
    validate_spec(spec)
    kind = spec.kind
    if kind == "star":
        return ClosedForm(spec, True, _star_values(spec.u))
    if kind == "brs" and spec.inner.kind == "star":
        return ClosedForm(spec, True, _bstar_values(spec.inner.u, spec.q))
    if kind in ("tsnake", "tsnake_star", "tsnake_starstar"):
        n = spec.n
        return ClosedForm(spec, True, {"reg": (n + 2) // 2})
    if kind == "ouroboros":
        stated = spec.n >= 3 and spec.p >= 3
        if not stated and not allow_observational:
            raise OutOfStatedRangeError(
                f"cycle-snake regularity formula is only claimed for "
                f"n >= 3 and p >= 3, got n={spec.n}, p={spec.p}")
        return ClosedForm(spec, stated, {"reg": spec.n // 2})
    if kind == "brs":
        inner = spec.inner
        q = spec.q
        if inner.kind == "tsnake":
            n, p = inner.n, inner.p
            return ClosedForm(spec, True, {
                "depth": (p + q) * n + q, "sdepth": (p + q) * n + q,
                "reg": n * p, "pdim": (1 + p * q) * n + 1})
        if inner.kind == "tsnake_star":
            n, p = inner.n, inner.p
            return ClosedForm(spec, True, {
                "depth": (p + q) * (n + 1), "sdepth": (p + q) * (n + 1),
                "reg": (n + 1) * p, "pdim": (1 + p * q) * (n + 1)})
        if inner.kind == "tsnake_starstar":
            n, p = inner.n, inner.p
            return ClosedForm(spec, True, {
                "depth": (p + q) * (n + 1) + p, "sdepth": (p + q) * (n + 1) + p,
                "reg": (n + 2) * p, "pdim": (1 + p * q) * (n + 1) + p * q})
        if inner.kind == "ouroboros":
            n, p = inner.n, inner.p
            return ClosedForm(spec, True, {
                "depth": n * (p + q), "sdepth": n * (p + q),
                "reg": n * p, "pdim": (1 + p * q) * n})
    raise InvalidParameterError(f"no catalogued formulas for {spec}")
