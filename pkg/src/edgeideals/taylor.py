"""Betti numbers through the Taylor complex, as an independent oracle.

The Taylor complex on the r minimal generators is a (generally
non-minimal) free resolution indexed by generator subsets.  Tensoring
with the residue field keeps exactly the unit entries of the
differential, i.e. the pairs A, A minus g with equal lcm.  The complex
therefore splits into strands, one per lcm value, and the homology of
the strand in homological degree i is beta_{i, lcm}.  Nothing here is
shared with the subset-scan engine beyond the rank routines.
"""

from __future__ import annotations

import numpy as np

from .errors import TooManyGeneratorsError
from .gf import check_prime, gf2_rank, gfp_rank
from .ideals import MonomialIdeal
from .betti import BettiTable

DEFAULT_MAX_GENS = 12


def betti_table_taylor(ideal: MonomialIdeal, characteristic: int = 2,
                       max_gens: int = DEFAULT_MAX_GENS) -> BettiTable:
    check_prime(characteristic)
    if ideal.is_unit:
        raise ValueError("S/I is the zero module; its Betti table is empty")
    gens = sorted(ideal.gens, key=lambda g: (g.bit_count(), g))
    r = len(gens)
    if r > max_gens:
        raise TooManyGeneratorsError(
            f"{r} generators exceeds the Taylor cap of {max_gens}")
    # lcm of every generator subset, built one lowest bit at a time
    lcm = [0] * (1 << r)
    for a in range(1, 1 << r):
        low = a & -a
        lcm[a] = lcm[a ^ low] | gens[low.bit_length() - 1]
    strands: dict[int, dict[int, list[int]]] = {}
    for a in range(1 << r):
        strands.setdefault(lcm[a], {}).setdefault(a.bit_count(), []).append(a)
    entries: dict[tuple[int, int], int] = {}
    for mu, levels in strands.items():
        j = mu.bit_count()
        for lst in levels.values():
            lst.sort()
        index = {i: {a: c for c, a in enumerate(lst)} for i, lst in levels.items()}
        top = max(levels)
        # rank of the differential from level i to level i-1 within the strand
        rank = [0] * (top + 2)
        for i in range(1, top + 1):
            sources = levels.get(i, ())
            targets = index.get(i - 1, {})
            if not sources or not targets:
                continue
            if characteristic == 2:
                rows = []
                for a in sources:
                    row = 0
                    rem = a
                    while rem:
                        low = rem & -rem
                        rem ^= low
                        b = a ^ low
                        if lcm[b] == mu:
                            row |= 1 << targets[b]
                    rows.append(row)
                rank[i] = gf2_rank(rows)
            else:
                mat = np.zeros((len(sources), len(targets)), dtype=np.int64)
                for rr, a in enumerate(sources):
                    sign = 1
                    rem = a
                    while rem:
                        low = rem & -rem
                        rem ^= low
                        b = a ^ low
                        if lcm[b] == mu:
                            mat[rr, targets[b]] = sign
                        sign = -sign
                rank[i] = gfp_rank(mat, characteristic)
        for i, lst in levels.items():
            h = len(lst) - rank[i] - rank[i + 1]
            if h:
                entries[(i, j)] = entries.get((i, j), 0) + h
    return BettiTable.from_dict(ideal.n_vars, characteristic, entries)
