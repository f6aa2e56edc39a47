"""Grid verification of the catalogued formulas against computed values.

A claim pairs a family with the invariants its formula predicts.  For
every grid cell the runner builds the edge ideal, computes invariants
from homology, re-derives regularity through the colon/add recursion,
runs the exact Stanley depth search when the instance is small enough,
replays the decomposition rules, and compares everything against the
catalogue.  Each comparison becomes one report row with a status:

  pass / fail      the cell is inside the formula's stated range
  observational    outside the stated range; never affects the exit code
  skipped          an engine cap excluded the computation

Reports are deterministic byte-for-byte for a fixed configuration; wall
clock durations are only included on request for that reason.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .betti import DEFAULT_MAX_VARS, invariants
from .catalogue import closed_form
from .decompositions import rules_for, verify_decomposition
from .errors import CapExceededError, EdgeIdealsError
from .families import (FamilySpec, build_extended, bristled, ouroboros, star,
                       tsnake, tsnake_star, tsnake_starstar)
from .ideals import edge_ideal
from .recursion import regularity_by_recursion
from .sdepth import DEFAULT_EXACT_CAP, stanley_depth

SCHEMA_VERSION = 1
DEFAULT_SEED = 20240820


@dataclass(frozen=True)
class RunConfig:
    characteristic: int = 2
    cross_field: bool = False
    hochster_cap: int = DEFAULT_MAX_VARS
    sdepth_cap: int = DEFAULT_EXACT_CAP
    threads: int = 1
    seed: int = DEFAULT_SEED
    include_durations: bool = False
    decompositions: bool = True

    def as_dict(self) -> dict:
        return {
            "characteristic": self.characteristic,
            "cross_field": self.cross_field,
            "hochster_cap": self.hochster_cap,
            "sdepth_cap": self.sdepth_cap,
            "threads": self.threads,
            "seed": self.seed,
            "decompositions": self.decompositions,
        }


@dataclass(frozen=True)
class Claim:
    claim_id: str
    param_names: tuple[str, ...]
    builder: object  # params dict -> FamilySpec
    default_cells: tuple[tuple[int, ...], ...]
    description: str


def _snake_cells(ns, ps, var_cap, count):
    cells = []
    for n in ns:
        for p in ps:
            if count(n, p) <= var_cap:
                cells.append((n, p))
    return tuple(cells)


CLAIMS: dict[str, Claim] = {}


def _register(claim: Claim) -> None:
    CLAIMS[claim.claim_id] = claim


_register(Claim(
    "star", ("u",), lambda d: star(d["u"]),
    tuple((u,) for u in range(1, 7)),
    "star quotients: depth = sdepth = reg = 1, pdim = u"))
_register(Claim(
    "bstar", ("u", "q"), lambda d: bristled(d["q"], star(d["u"])),
    ((1, 1), (2, 1), (1, 2)),
    "bristled stars: depth = sdepth = u+q, reg = u, pdim = uq+1"))
_register(Claim(
    "tsnake-reg", ("n", "p"), lambda d: tsnake(d["n"], d["p"]),
    _snake_cells(range(1, 5), range(1, 4), 13, lambda n, p: 1 + n + n * p),
    "snake quotients: reg = ceil((n+1)/2)"))
_register(Claim(
    "tsnake-star-reg", ("n", "p"), lambda d: tsnake_star(d["n"], d["p"]),
    _snake_cells(range(1, 5), range(1, 3), 14,
                 lambda n, p: 1 + n + (n + 1) * p),
    "end-starred snake quotients: reg = ceil((n+1)/2)"))
_register(Claim(
    "tsnake-starstar-reg", ("n", "p"),
    lambda d: tsnake_starstar(d["n"], d["p"]),
    _snake_cells(range(1, 4), range(1, 3), 12,
                 lambda n, p: 1 + n + (n + 2) * p),
    "doubly starred snake quotients: reg = ceil((n+1)/2)"))
_register(Claim(
    "ouroboros-reg", ("n", "p"), lambda d: ouroboros(d["n"], d["p"]),
    ((3, 1), (3, 2), (3, 3), (4, 1), (4, 2)),
    "cycle-snake quotients: reg = ceil((n-1)/2), claimed for n,p >= 3"))
_register(Claim(
    "brs-tsnake", ("n", "p", "q"),
    lambda d: bristled(d["q"], tsnake(d["n"], d["p"])),
    ((1, 1, 1), (1, 2, 1), (2, 1, 1), (1, 1, 2)),
    "bristled snakes: depth = sdepth = (p+q)n+q, reg = np, pdim = (1+pq)n+1"))
_register(Claim(
    "brs-tsnake-star", ("n", "p", "q"),
    lambda d: bristled(d["q"], tsnake_star(d["n"], d["p"])),
    ((1, 1, 1), (2, 1, 1)),
    "bristled end-starred snakes: depth = sdepth = (p+q)(n+1)"))
_register(Claim(
    "brs-tsnake-starstar", ("n", "p", "q"),
    lambda d: bristled(d["q"], tsnake_starstar(d["n"], d["p"])),
    ((0, 1, 1), (1, 1, 1)),
    "bristled doubly starred snakes: depth = sdepth = (p+q)(n+1)+p"))
_register(Claim(
    "brs-ouroboros", ("n", "p", "q"),
    lambda d: bristled(d["q"], ouroboros(d["n"], d["p"])),
    ((3, 1, 1),),
    "bristled cycle-snakes: depth = sdepth = n(p+q), claimed for n >= 3"))


@dataclass(frozen=True)
class CheckRow:
    claim: str
    family: str
    params: tuple[tuple[str, int], ...]
    invariant: str
    computed: object
    predicted: object
    status: str

    def as_dict(self) -> dict:
        return {
            "claim": self.claim, "family": self.family,
            "params": dict(self.params), "invariant": self.invariant,
            "computed": self.computed, "predicted": self.predicted,
            "status": self.status,
        }


@dataclass
class VerificationReport:
    config: RunConfig
    rows: list[CheckRow] = field(default_factory=list)
    durations: dict[str, float] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.rows)

    def summary(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "observational": 0, "skipped": 0}
        for r in self.rows:
            out[r.status] += 1
        return out

    def as_dict(self) -> dict:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "config": self.config.as_dict(),
            "summary": self.summary(),
            "ok": self.ok,
            "cells": [r.as_dict() for r in self.rows],
        }
        if self.config.include_durations:
            doc["durations"] = {k: round(v, 3)
                                for k, v in sorted(self.durations.items())}
        return doc

    def as_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"

    def as_csv(self) -> str:
        lines = ["claim,family,params,invariant,computed,predicted,status"]
        for r in self.rows:
            params = ";".join(f"{k}={v}" for k, v in r.params)
            fam = r.family.replace(",", ";")
            lines.append(f"{r.claim},{fam},{params},{r.invariant},"
                         f"{r.computed},{r.predicted},{r.status}")
        return "\n".join(lines) + "\n"

    def as_text(self) -> str:
        lines = []
        for r in self.rows:
            params = ",".join(f"{k}={v}" for k, v in r.params)
            lines.append(f"[{r.status:<13}] {r.claim}({params}) "
                         f"{r.invariant}: computed={r.computed} "
                         f"predicted={r.predicted}")
        s = self.summary()
        lines.append(f"pass={s['pass']} fail={s['fail']} "
                     f"observational={s['observational']} "
                     f"skipped={s['skipped']}")
        return "\n".join(lines) + "\n"


def run_cell(claim: Claim, cell: tuple[int, ...],
             config: RunConfig) -> list[CheckRow]:
    params = dict(zip(claim.param_names, cell))
    key = tuple(sorted(params.items()))
    spec: FamilySpec = claim.builder(params)

    def row(invariant, computed, predicted, status):
        return CheckRow(claim.claim_id, str(spec), key, invariant,
                        computed, predicted, status)

    try:
        graph = build_extended(spec)
    except EdgeIdealsError as exc:
        return [row("build", str(exc), None, "skipped")]
    ideal = edge_ideal(graph)
    prediction = closed_form(spec, allow_observational=True)
    rows = []
    if ideal.n_vars > config.hochster_cap:
        for name in sorted(prediction.values):
            rows.append(row(name, None, prediction.values[name], "skipped"))
        return rows
    inv = invariants(ideal, config.characteristic,
                     max_vars=config.hochster_cap, jobs=config.threads)
    computed = {"reg": inv.regularity, "pdim": inv.projective_dimension,
                "depth": inv.depth}
    sdepth_value = None
    if "sdepth" in prediction.values:
        try:
            sdepth_value, _ = stanley_depth(ideal, config.sdepth_cap)
            computed["sdepth"] = sdepth_value
        except CapExceededError:
            pass
    for name in sorted(prediction.values):
        want = prediction.values[name]
        if name == "sdepth" and sdepth_value is None:
            rows.append(row(name, None, want, "skipped"))
            continue
        got = computed[name]
        if prediction.stated:
            status = "pass" if got == want else "fail"
        else:
            status = "observational"
        rows.append(row(name, got, want, status))
    rec = regularity_by_recursion(ideal)
    rec_shown = rec.lo if rec.is_point else f"[{rec.lo},{rec.hi}]"
    rec_ok = rec.is_point and rec.value == inv.regularity
    rows.append(row("reg-recursion", rec_shown, inv.regularity,
                    "pass" if rec_ok else "fail"))
    if config.cross_field:
        other = 3 if config.characteristic == 2 else 2
        inv_b = invariants(ideal, other, max_vars=config.hochster_cap,
                           jobs=config.threads)
        same = (inv_b.regularity == inv.regularity
                and inv_b.projective_dimension == inv.projective_dimension)
        rows.append(row("field-agree",
                        f"GF({other}):reg={inv_b.regularity},"
                        f"pdim={inv_b.projective_dimension}",
                        f"GF({config.characteristic}):reg={inv.regularity},"
                        f"pdim={inv.projective_dimension}",
                        "pass" if same else "fail"))
    if config.decompositions:
        for rule in rules_for(spec):
            report = verify_decomposition(rule, spec)
            rows.append(row(f"decomp:{rule.rule_id}",
                            "ok" if report.ok else "mismatch", "ok",
                            "pass" if report.ok else "fail"))
    return rows


def run_claims(claim_ids: list[str], config: RunConfig,
               grid_override: dict[str, list[int]] | None = None
               ) -> VerificationReport:
    report = VerificationReport(config)
    for cid in claim_ids:
        claim = CLAIMS[cid]
        cells = claim.default_cells
        if grid_override:
            axes = []
            for name in claim.param_names:
                values = grid_override.get(name)
                if values is None:
                    values = sorted({c[claim.param_names.index(name)]
                                     for c in claim.default_cells})
                axes.append(values)
            cells = []
            stack = [()]
            for axis in axes:
                stack = [t + (v,) for t in stack for v in axis]
            cells = tuple(stack)
        started = time.monotonic()
        for cell in cells:
            report.rows.extend(run_cell(claim, cell, config))
        report.durations[cid] = time.monotonic() - started
    report.rows.sort(key=lambda r: (r.claim, r.params, r.invariant))
    return report
