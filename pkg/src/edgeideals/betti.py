"""Multigraded Betti numbers of squarefree quotients by subset scanning.

For a squarefree ideal I and a vertex subset W, the induced subcomplex
of the Stanley-Reisner complex contributes its reduced homology in
degree d to beta_{|W|-d-1, |W|}(S/I).  Conventions used throughout:

  * the empty subset W contributes beta_{0,0} = 1 through the reduced
    homology of the complex {emptyset} in degree -1;
  * a one-point complex has no reduced homology at all, so singleton W
    with a surviving vertex contributes nothing;
  * a subset whose induced complex is a cone is skipped outright.

Degree-1 generators kill their variable: it belongs to no face, but the
subset W still counts it, which is what produces the linear beta_{i,i}
strands.  Homology is taken over GF(p); ranks over GF(2) run on packed
bitmask rows and other primes go through dense elimination.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import CapExceededError, TooManyVariablesError
from .gf import check_prime, gf2_rank, gfp_rank
from .graphs import LabeledGraph
from .ideals import MonomialIdeal, edge_ideal, graph_parts, mask_of, vars_of

DEFAULT_MAX_VARS = 16


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# the Stanley-Reisner complex as an object


class StanleyReisnerComplex:
    """Faces are the squarefree monomials outside the ideal."""

    def __init__(self, ideal: MonomialIdeal):
        if ideal.is_unit:
            raise ValueError("the unit ideal has the void complex")
        self.ideal = ideal

    @property
    def n_vars(self) -> int:
        return self.ideal.n_vars

    def is_face(self, mask: int) -> bool:
        return not self.ideal.contains(mask)

    def faces(self, within: int | None = None, max_vars: int = 20) -> list[int]:
        """All faces (the empty face included) inside the given subset."""
        if self.n_vars > max_vars:
            raise CapExceededError(
                f"face enumeration capped at {max_vars} variables")
        cand = (1 << self.n_vars) - 1 if within is None else within
        gens_by_var: dict[int, list[int]] = {}
        for g in self.ideal.gens:
            for v in vars_of(g):
                gens_by_var.setdefault(v, []).append(g)
        out = [0]
        stack = [(0, cand)]
        while stack:
            cur, rest = stack.pop()
            r = rest
            while r:
                low = r & -r
                r ^= low
                v = low.bit_length() - 1
                nxt = cur | low
                if any(g & nxt == g for g in gens_by_var.get(v, ())):
                    continue
                out.append(nxt)
                stack.append((nxt, r))
        out.sort(key=lambda f: (f.bit_count(), f))
        return out

    def f_vector(self, max_vars: int = 20) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for f in self.faces(max_vars=max_vars):
            k = f.bit_count()
            counts[k] = counts.get(k, 0) + 1
        return tuple(counts.get(k, 0) for k in range(max(counts) + 1))


def independence_complex(graph: LabeledGraph) -> StanleyReisnerComplex:
    """Independence complex, i.e. the Stanley-Reisner complex of the edge ideal."""
    return StanleyReisnerComplex(edge_ideal(graph))


# ---------------------------------------------------------------------------
# homology of one induced complex


def _independent_sets(m: int, adj: list[int]) -> list[int]:
    """All nonempty independent sets of a graph on vertices 0..m-1."""
    out = []

    def rec(cur: int, cand: int):
        c = cand
        while c:
            low = c & -c
            c ^= low
            nxt = cur | low
            out.append(nxt)
            rec(nxt, c & ~adj[low.bit_length() - 1])

    rec(0, (1 << m) - 1)
    return out


def _homology_dims(faces: list[int], char: int) -> tuple[tuple[int, int], ...]:
    """Nonzero reduced homology dimensions [(degree, dim)] over GF(char).

    faces lists the nonempty faces; the empty face is implicit.  With at
    least one vertex present the augmentation has rank 1, so reduced
    homology in degree -1 (possible only for the empty complex) never
    appears here; callers handle that case directly.
    """
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    max_k = max(by_size)
    index: dict[int, dict[int, int]] = {}
    for k, lst in by_size.items():
        lst.sort()
        index[k] = {f: i for i, f in enumerate(lst)}
    # rank_map[k] is the rank of the boundary from size-k to size-(k-1) faces
    rank_map = [0] * (max_k + 2)
    rank_map[1] = 1
    for k in range(2, max_k + 1):
        sources = by_size[k]
        cols = index[k - 1]
        if char == 2:
            rows = []
            for f in sources:
                row = 0
                rem = f
                while rem:
                    low = rem & -rem
                    rem ^= low
                    row |= 1 << cols[f ^ low]
                rows.append(row)
            rank_map[k] = gf2_rank(rows)
        else:
            mat = np.zeros((len(sources), len(cols)), dtype=np.int64)
            for r, f in enumerate(sources):
                sign = 1
                rem = f
                while rem:
                    low = rem & -rem
                    rem ^= low
                    mat[r, cols[f ^ low]] = sign
                    sign = -sign
            rank_map[k] = gfp_rank(mat, char)
    dims = []
    for k in range(1, max_k + 1):
        h = len(by_size[k]) - rank_map[k] - rank_map[k + 1]
        if h:
            dims.append((k - 1, h))
    return tuple(dims)


def _fold_down(verts: int, adj: tuple[int, ...]) -> int | None:
    """Shrink an induced graph by dominated-vertex folds.

    If N(v) is contained in N(u) for distinct u, v then the independence
    complex deformation retracts onto the one without u, so u can be
    dropped without changing homotopy type.  Returns None as soon as a
    vertex becomes isolated (the complex is then a cone, hence
    contractible), otherwise the surviving vertex mask.
    """
    while True:
        vlist = _bits(verts)
        neigh = []
        for v in vlist:
            nv = adj[v] & verts
            if nv == 0:
                return None
            neigh.append(nv)
        removed = False
        for iu, u in enumerate(vlist):
            nu = neigh[iu]
            for iv, v in enumerate(vlist):
                if iv != iu and neigh[iv] | nu == nu:
                    verts ^= 1 << u
                    removed = True
                    break
            if removed:
                break
        if not removed:
            return verts


def _core_key(verts: int, adj: tuple[int, ...]) -> tuple[int, tuple[tuple[int, int], ...]]:
    vlist = _bits(verts)
    pos = {v: i for i, v in enumerate(vlist)}
    edges = []
    for v in vlist:
        rem = adj[v] & verts
        while rem:
            low = rem & -rem
            rem ^= low
            w = low.bit_length() - 1
            if w > v:
                edges.append((pos[v], pos[w]))
    return (len(vlist), tuple(sorted(edges)))


def _graph_homology(verts: int, adj: tuple[int, ...], char: int, do_fold: bool,
                    memo: dict) -> tuple[tuple[int, int], ...]:
    if do_fold:
        core = _fold_down(verts, adj)
        if core is None:
            return ()
    else:
        core = verts
        for v in _bits(core):
            if adj[v] & core == 0:
                return ()
    key = _core_key(core, adj)
    cached = memo.get(key)
    if cached is not None:
        return cached
    m, edges = key
    cadj = [0] * m
    for a, b in edges:
        cadj[a] |= 1 << b
        cadj[b] |= 1 << a
    dims = _homology_dims(_independent_sets(m, cadj), char)
    memo[key] = dims
    return dims


def _generic_homology(w2: int, live: list[int], char: int,
                      memo: dict) -> tuple[tuple[int, int], ...]:
    vlist = _bits(w2)
    m = len(vlist)
    pos = {v: i for i, v in enumerate(vlist)}
    cgens = tuple(sorted(mask_of(pos[v] for v in _bits(g)) for g in live))
    key = (m, cgens)
    cached = memo.get(key)
    if cached is not None:
        return cached
    gens_by_var: list[list[int]] = [[] for _ in range(m)]
    for g in cgens:
        for v in _bits(g):
            gens_by_var[v].append(g)
    faces = []

    def rec(cur: int, cand: int):
        c = cand
        while c:
            low = c & -c
            c ^= low
            nxt = cur | low
            if any(g & nxt == g for g in gens_by_var[low.bit_length() - 1]):
                continue
            faces.append(nxt)
            rec(nxt, c)

    rec(0, (1 << m) - 1)
    dims = _homology_dims(faces, char) if faces else ()
    memo[key] = dims
    return dims


# ---------------------------------------------------------------------------
# the subset scan


def _scan_range(ideal: MonomialIdeal, char: int, do_fold: bool,
                lo: int, hi: int) -> dict[tuple[int, int], int]:
    killed, edge_pairs, _free, higher = graph_parts(ideal)
    n = ideal.n_vars
    adj = [0] * n
    for a, b in edge_pairs:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    adj = tuple(adj)
    gens2 = [(1 << a) | (1 << b) for a, b in edge_pairs]
    entries: dict[tuple[int, int], int] = {}
    core_memo: dict = {}
    generic_memo: dict = {}
    for w in range(lo, hi):
        w2 = w & ~killed
        j = w.bit_count()
        if w2 == 0:
            # all of W killed by linear generators: reduced homology of
            # {emptyset} in degree -1, landing in beta_{j,j}
            entries[(j, j)] = entries.get((j, j), 0) + 1
            continue
        if higher:
            live = [g for g in gens2 if g & w == g]
            live += [g for g in higher if g & w == g]
            union = 0
            for g in live:
                union |= g
            if w2 & ~union:
                continue  # some vertex lies in no generator inside W: a cone
            if any(g.bit_count() > 2 for g in live):
                dims = _generic_homology(w2, live, char, generic_memo)
            else:
                dims = _graph_homology(w2, adj, char, do_fold, core_memo)
        else:
            skip = False
            rem = w2
            while rem:
                low = rem & -rem
                rem ^= low
                if adj[low.bit_length() - 1] & w2 == 0:
                    skip = True  # isolated vertex cones the complex off
                    break
            if skip:
                continue
            dims = _graph_homology(w2, adj, char, do_fold, core_memo)
        for d, dim in dims:
            key = (j - d - 1, j)
            entries[key] = entries.get(key, 0) + dim
    return entries


def _chunk_worker(args) -> dict[tuple[int, int], int]:
    n_vars, gens, char, do_fold, lo, hi = args
    return _scan_range(MonomialIdeal(n_vars, gens), char, do_fold, lo, hi)


# ---------------------------------------------------------------------------
# public results


@dataclass(frozen=True)
class BettiTable:
    """Total Betti numbers beta_{i,j}(S/I) over one field."""

    n_vars: int
    characteristic: int
    entries: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, n_vars: int, characteristic: int,
                  data: dict[tuple[int, int], int]) -> "BettiTable":
        items = tuple(sorted((ij, b) for ij, b in data.items() if b))
        return cls(n_vars, characteristic, items)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def beta(self, i: int, j: int) -> int:
        return self.as_dict().get((i, j), 0)

    @property
    def regularity(self) -> int:
        return max(j - i for (i, j), _ in self.entries)

    @property
    def projective_dimension(self) -> int:
        return max(i for (i, _), _ in self.entries)

    def to_csv(self) -> str:
        lines = ["i,j,beta"]
        lines += [f"{i},{j},{b}" for (i, j), b in self.entries]
        return "\n".join(lines) + "\n"

    def pretty(self) -> str:
        """Triangle layout: row r column i holds beta_{i, i+r}."""
        data = self.as_dict()
        pd = self.projective_dimension
        rg = self.regularity
        cells = [[data.get((i, i + r), 0) for i in range(pd + 1)]
                 for r in range(rg + 1)]
        totals = [sum(cells[r][i] for r in range(rg + 1)) for i in range(pd + 1)]
        width = max(5, max(len(str(t)) for t in totals) + 2)
        def fmt(vals):
            return "".join(str(v if v else ".").rjust(width) for v in vals)
        lines = ["      " + fmt(range(pd + 1)),
                 "total:" + fmt(totals)]
        for r in range(rg + 1):
            lines.append(f"{r}:".ljust(6) + fmt(cells[r]))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class InvariantBundle:
    """Regularity, projective dimension and depth of S/I."""

    n_vars: int
    characteristic: int
    regularity: int
    projective_dimension: int
    depth: int

    def as_dict(self) -> dict[str, int]:
        return {"reg": self.regularity, "pdim": self.projective_dimension,
                "depth": self.depth}


def betti_table(ideal: MonomialIdeal, characteristic: int = 2,
                max_vars: int = DEFAULT_MAX_VARS, fold: bool = True,
                jobs: int = 1) -> BettiTable:
    """Betti table of S/I by the subset scan.

    fold=False disables the dominated-vertex reduction and computes the
    homology of every induced complex head-on; results must agree.
    jobs > 1 splits the subset range over worker processes and sums the
    partial tables, which is order-independent by construction.
    """
    check_prime(characteristic)
    if ideal.is_unit:
        raise ValueError("S/I is the zero module; its Betti table is empty")
    if ideal.n_vars > max_vars:
        raise TooManyVariablesError(
            f"{ideal.n_vars} variables exceeds the cap of {max_vars}")
    total = 1 << ideal.n_vars
    if jobs <= 1:
        entries = _scan_range(ideal, characteristic, fold, 0, total)
    else:
        step = max(1, total // (jobs * 4))
        chunks = [(ideal.n_vars, ideal.gens, characteristic, fold,
                   lo, min(lo + step, total))
                  for lo in range(0, total, step)]
        entries = {}
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_chunk_worker, chunks):
                for key, val in part.items():
                    entries[key] = entries.get(key, 0) + val
    return BettiTable.from_dict(ideal.n_vars, characteristic, entries)


def invariants(ideal: MonomialIdeal, characteristic: int = 2,
               max_vars: int = DEFAULT_MAX_VARS, fold: bool = True,
               jobs: int = 1) -> InvariantBundle:
    """Regularity, projective dimension and depth via the Betti table.

    depth comes out of the Auslander-Buchsbaum formula
    depth = n_vars - pdim.
    """
    table = betti_table(ideal, characteristic, max_vars, fold, jobs)
    pd = table.projective_dimension
    return InvariantBundle(ideal.n_vars, characteristic,
                           table.regularity, pd, ideal.n_vars - pd)
