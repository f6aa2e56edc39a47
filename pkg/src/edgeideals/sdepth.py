"""Stanley depth of squarefree quotients via interval partitions.

For squarefree I the Stanley depth of S/I is the best possible
min |tau| over partitions of the face poset (all squarefree monomials
outside I) into boolean intervals [sigma, tau].  The exact search runs
a binary search on the target d: a feasibility check covers the poset
smallest-face-first, each uncovered face must start an interval, and
candidate tops of size at least d are tried largest first with failed
cover states memoized.

Free variables and killed variables both factor out: sdepth goes up by
one per free variable and is untouched by a variable that appears as a
generator, so the search always runs on the support-compacted ideal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError, MembershipError
from .ideals import MonomialIdeal, colon_by, compact, mask_of, vars_of

DEFAULT_EXACT_CAP = 10
DEFAULT_POSET_CAP = 14


@dataclass(frozen=True)
class FacePoset:
    """Sorted nonfaces-excluded subset poset of an ideal."""

    n_vars: int
    faces: tuple[int, ...]  # sorted by (size, mask); includes the empty face


def face_poset(ideal: MonomialIdeal, cap: int = DEFAULT_POSET_CAP) -> FacePoset:
    if ideal.is_unit:
        raise ValueError("the unit ideal has an empty face poset")
    if ideal.n_vars > cap:
        raise CapExceededError(
            f"face poset capped at {cap} variables, got {ideal.n_vars}")
    faces = [w for w in range(1 << ideal.n_vars) if not ideal.contains(w)]
    faces.sort(key=lambda f: (f.bit_count(), f))
    return FacePoset(ideal.n_vars, tuple(faces))


@dataclass(frozen=True)
class IntervalPartition:
    """Disjoint intervals [bottom, top] covering a face poset."""

    n_vars: int
    intervals: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return min(t.bit_count() for _, t in self.intervals)

    def to_json_dict(self, names: list[str]) -> list[dict[str, list[str]]]:
        return [{"lower": [names[v] for v in vars_of(s)],
                 "upper": [names[v] for v in vars_of(t)]}
                for s, t in self.intervals]


def validate_partition(poset: FacePoset, partition: IntervalPartition) -> None:
    """Check the partition is made of disjoint poset intervals covering it.

    Raises ValueError on any violation; meant as an independent witness
    checker, so it recomputes everything from scratch.
    """
    face_set = set(poset.faces)
    seen: set[int] = set()
    for s, t in partition.intervals:
        if s & ~t:
            raise ValueError(f"interval bottom {s:b} not below top {t:b}")
        if t not in face_set:
            raise ValueError(f"interval top {t:b} is not a face")
        extra = t & ~s
        sub = extra
        members = []
        while True:
            members.append(s | sub)
            if sub == 0:
                break
            sub = (sub - 1) & extra
        for f in members:
            if f not in face_set:
                raise ValueError(f"interval member {f:b} is not a face")
            if f in seen:
                raise ValueError(f"face {f:b} covered twice")
            seen.add(f)
    if len(seen) != len(face_set):
        raise ValueError("partition does not cover the face poset")


def _interval_members(s: int, t: int) -> list[int]:
    extra = t & ~s
    out = []
    sub = extra
    while True:
        out.append(s | sub)
        if sub == 0:
            break
        sub = (sub - 1) & extra
    return out


class _Search:
    def __init__(self, faces: tuple[int, ...], d: int):
        self.faces = faces
        self.index = {f: i for i, f in enumerate(faces)}
        self.face_set = set(faces)
        self.d = d
        self.full = (1 << len(faces)) - 1
        self.failed: set[int] = set()

    def run(self) -> list[tuple[int, int]] | None:
        return self._extend(0)

    def _tops(self, sigma: int, covered: int) -> list[int]:
        """Faces above sigma of size >= d whose whole interval is uncovered."""
        dirs = []
        for f in self.faces:
            if f.bit_count() == sigma.bit_count() + 1 and f & sigma == sigma:
                v = f & ~sigma
                if not covered >> self.index[f] & 1:
                    dirs.append(v)
        found: list[int] = []

        def grow(top: int, rest: list[int]):
            for i, v in enumerate(rest):
                cand = top | v
                if cand not in self.face_set:
                    continue
                ok = True
                for member in _interval_members(sigma, cand):
                    if member not in self.face_set or covered >> self.index[member] & 1:
                        ok = False
                        break
                if ok:
                    found.append(cand)
                    grow(cand, rest[i + 1:])

        found.append(sigma)
        grow(sigma, dirs)
        good = [t for t in found if t.bit_count() >= self.d]
        good.sort(key=lambda t: (-t.bit_count(), t))
        return good

    def _extend(self, covered: int) -> list[tuple[int, int]] | None:
        if covered == self.full:
            return []
        if covered in self.failed:
            return None
        # lowest uncovered index; faces are sorted smallest-first, so this
        # face is minimal among the uncovered ones and must start an interval
        idx = (~covered & (covered + 1)).bit_length() - 1
        sigma = self.faces[idx]
        for top in self._tops(sigma, covered):
            bits = 0
            for member in _interval_members(sigma, top):
                bits |= 1 << self.index[member]
            rest = self._extend(covered | bits)
            if rest is not None:
                return [(sigma, top)] + rest
        self.failed.add(covered)
        return None


def _feasible(faces: tuple[int, ...], d: int) -> list[tuple[int, int]] | None:
    return _Search(faces, d).run()


def stanley_depth(ideal: MonomialIdeal, exact_cap: int = DEFAULT_EXACT_CAP,
                  lower_hint: int | None = None) -> tuple[int, IntervalPartition]:
    """Exact Stanley depth of S/I with an interval-partition witness.

    The cap applies to the variable count after stripping free and
    killed variables.  lower_hint, when given, must be a sound lower
    bound (it prunes the binary search from below; passing a wrong hint
    can only inflate the result, so tests never pass one).
    """
    if ideal.is_unit:
        raise ValueError("S/I is the zero module")
    support = ideal.support
    killed = mask_of(vars_of(g)[0] for g in ideal.gens if g.bit_count() == 1)
    live = support & ~killed
    free_count = ideal.n_vars - support.bit_count()
    reduced = compact(ideal, vars_of(live))
    if reduced.n_vars > exact_cap:
        raise CapExceededError(
            f"exact Stanley depth capped at {exact_cap} live variables, "
            f"got {reduced.n_vars}")
    poset = face_poset(reduced, cap=max(exact_cap, DEFAULT_POSET_CAP))
    faces = poset.faces
    alpha = max(f.bit_count() for f in faces)
    lo = 0 if lower_hint is None else max(0, lower_hint - free_count)
    best = _feasible(faces, lo)
    if best is None:
        raise ValueError("lower_hint was not a valid lower bound")
    hi = alpha
    while lo < hi:
        mid = (lo + hi + 1) // 2
        attempt = _feasible(faces, mid)
        if attempt is None:
            hi = mid - 1
        else:
            best = attempt
            lo = mid
    witness = _lift_partition(ideal, reduced, vars_of(live), best)
    return lo + free_count, witness


def _lift_partition(ideal: MonomialIdeal, reduced: MonomialIdeal,
                    live_vars: list[int], intervals: list[tuple[int, int]]
                    ) -> IntervalPartition:
    """Send a reduced-poset partition back to the ambient variables.

    Each interval top gains every free variable: the ambient face poset
    is the reduced one times a full cube on the free variables.
    """
    free = ((1 << ideal.n_vars) - 1) & ~ideal.support
    lifted = []
    for s, t in intervals:
        ls = mask_of(live_vars[v] for v in vars_of(s))
        lt = mask_of(live_vars[v] for v in vars_of(t)) | free
        lifted.append((ls, lt))
    return IntervalPartition(ideal.n_vars, tuple(sorted(lifted)))


def _greedy_partition(faces: tuple[int, ...]) -> list[tuple[int, int]]:
    """Smallest-face-first cover, always extending to a largest valid top."""
    face_set = set(faces)
    index = {f: i for i, f in enumerate(faces)}
    covered = 0
    out = []
    for i, sigma in enumerate(faces):
        if covered >> i & 1:
            continue
        top = sigma
        grown = True
        while grown:
            grown = False
            for v in range(64):
                cand = top | (1 << v)
                if cand == top or cand not in face_set:
                    continue
                ok = all(m in face_set and not covered >> index[m] & 1
                         for m in _interval_members(sigma, cand))
                if ok:
                    top = cand
                    grown = True
                    break
        for m in _interval_members(sigma, top):
            covered |= 1 << index[m]
        out.append((sigma, top))
    return out


def sdepth_bounds(ideal: MonomialIdeal, exact_cap: int = DEFAULT_EXACT_CAP,
                  poset_cap: int = DEFAULT_POSET_CAP) -> tuple[int, int]:
    """(lower, upper) bounds on the Stanley depth of S/I.

    Within the exact cap both bounds are the exact value.  Beyond it the
    lower bound comes from a greedy interval partition and the upper
    bound from the maximal face size and from colon pivots: sdepth can
    only grow along (I : v), so any variable whose colon lands back
    inside the exact cap yields an upper bound.
    """
    if ideal.is_unit:
        raise ValueError("S/I is the zero module")
    support = ideal.support
    free_count = ideal.n_vars - support.bit_count()
    killed = mask_of(vars_of(g)[0] for g in ideal.gens if g.bit_count() == 1)
    reduced = compact(ideal, vars_of(support & ~killed))
    if reduced.n_vars <= exact_cap:
        value, _ = stanley_depth(ideal, exact_cap)
        return value, value
    if reduced.n_vars > poset_cap:
        raise CapExceededError(
            f"sdepth bounds capped at {poset_cap} live variables")
    poset = face_poset(reduced, cap=poset_cap)
    greedy = _greedy_partition(poset.faces)
    lower = min(t.bit_count() for _, t in greedy) + free_count
    upper = max(f.bit_count() for f in poset.faces) + free_count
    for v in range(ideal.n_vars):
        pivot = 1 << v
        if ideal.contains(pivot):
            continue
        try:
            quotient = colon_by(ideal, pivot)
        except MembershipError:
            continue
        q_support = quotient.support
        q_killed = mask_of(vars_of(g)[0] for g in quotient.gens
                           if g.bit_count() == 1)
        q_free = ideal.n_vars - q_support.bit_count()
        q_reduced = compact(quotient, vars_of(q_support & ~q_killed))
        if q_reduced.n_vars <= exact_cap:
            q_value, _ = stanley_depth(quotient, exact_cap)
            upper = min(upper, q_value)
        else:
            q_poset = face_poset(q_reduced, cap=poset_cap)
            q_alpha = max(f.bit_count() for f in q_poset.faces)
            upper = min(upper, q_alpha + q_free)
    return lower, max(lower, upper)
