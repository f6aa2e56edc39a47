"""Parameterized graph families and their compact spec strings.

The snake families: tsnake(n,p) is a path on n+1 spine vertices with p
triangle apexes over every spine edge.  tsnake_star adds p pendants at
the far end of the spine, tsnake_starstar adds p more at the near end,
and ouroboros(n,p) closes the spine into a cycle.  brs(q, g) attaches q
pendant bristles to every vertex of g.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FamilySpecParseError, InvalidParameterError
from .graphs import (LabeledGraph, VertexLabel, apex, bristle, path_vertex)


@dataclass(frozen=True)
class FamilySpec:
    """Immutable family description; brs wraps an inner spec."""

    kind: str
    n: int | None = None
    p: int | None = None
    q: int | None = None
    u: int | None = None
    inner: "FamilySpec | None" = None

    def __str__(self) -> str:
        if self.kind == "brs":
            return f"brs(q={self.q},{self.inner})"
        args = [f"{name}={getattr(self, name)}"
                for name in ("n", "p", "q", "u") if getattr(self, name) is not None]
        return f"{self.kind}({','.join(args)})"


def path(n: int) -> FamilySpec:
    return FamilySpec("path", n=n)


def cycle(n: int) -> FamilySpec:
    return FamilySpec("cycle", n=n)


def star(u: int) -> FamilySpec:
    return FamilySpec("star", u=u)


def tsnake(n: int, p: int) -> FamilySpec:
    return FamilySpec("tsnake", n=n, p=p)


def tsnake_star(n: int, p: int) -> FamilySpec:
    return FamilySpec("tsnake_star", n=n, p=p)


def tsnake_starstar(n: int, p: int) -> FamilySpec:
    return FamilySpec("tsnake_starstar", n=n, p=p)


def ouroboros(n: int, p: int) -> FamilySpec:
    return FamilySpec("ouroboros", n=n, p=p)


def bristled(q: int, inner: FamilySpec) -> FamilySpec:
    return FamilySpec("brs", q=q, inner=inner)


def bristled_star(u: int, q: int) -> FamilySpec:
    return bristled(q, star(u))


# scalar parameters accepted by each kind, in positional order
_PARAMS = {
    "path": ("n",),
    "cycle": ("n",),
    "star": ("u",),
    "bstar": ("u", "q"),
    "tsnake": ("n", "p"),
    "tsnake_star": ("n", "p"),
    "tsnake_starstar": ("n", "p"),
    "ouroboros": ("n", "p"),
    "brs": ("q",),
}


def validate_spec(spec: FamilySpec) -> None:
    """Raise InvalidParameterError unless spec is buildable."""
    kind = spec.kind
    if kind in ("path", "cycle"):
        low = 1 if kind == "path" else 3
        if spec.n is None or spec.n < low:
            raise InvalidParameterError(f"{kind} needs n >= {low}")
    elif kind == "star":
        if spec.u is None or spec.u < 1:
            raise InvalidParameterError("star needs u >= 1")
    elif kind in ("tsnake", "tsnake_star", "tsnake_starstar"):
        if spec.n is None or spec.n < 1:
            raise InvalidParameterError(f"{kind} needs n >= 1")
        if spec.p is None or spec.p < 1:
            raise InvalidParameterError(f"{kind} needs p >= 1")
    elif kind == "ouroboros":
        # n <= 2 would force multi-edges or loops when the spine closes up
        if spec.n is None or spec.n < 3:
            raise InvalidParameterError("ouroboros needs n >= 3")
        if spec.p is None or spec.p < 1:
            raise InvalidParameterError("ouroboros needs p >= 1")
    elif kind == "brs":
        if spec.q is None or spec.q < 1:
            raise InvalidParameterError("brs needs q >= 1")
        if spec.inner is None:
            raise InvalidParameterError("brs needs an inner family")
        validate_spec(spec.inner)
    else:
        raise InvalidParameterError(f"unknown family kind {kind!r}")


def _path_graph(n: int) -> LabeledGraph:
    labels = [path_vertex(i) for i in range(1, n + 1)]
    return LabeledGraph(labels, [(labels[i], labels[i + 1]) for i in range(n - 1)])


def _cycle_graph(n: int) -> LabeledGraph:
    labels = [path_vertex(i) for i in range(1, n + 1)]
    edges = [(labels[i], labels[(i + 1) % n]) for i in range(n)]
    return LabeledGraph(labels, edges)


def _star_graph(u: int) -> LabeledGraph:
    """Star with center x1 and leaves y11..y1u, matching tsnake_star at n=0."""
    center = path_vertex(1)
    leaves = [apex(1, k) for k in range(1, u + 1)]
    return LabeledGraph([center] + leaves, [(center, leaf) for leaf in leaves])


def _tsnake_graph(n: int, p: int, close: bool = False,
                  end_star: bool = False, start_star: bool = False) -> LabeledGraph:
    """Shared builder for the snake variants.

    close=True identifies the spine ends into a cycle of length n with
    apexes over every cycle edge (the ouroboros).  end_star/start_star
    add p pendant apexes at x_{n+1} and x_1 respectively.
    """
    spine_len = n if close else n + 1
    spine = [path_vertex(i) for i in range(1, spine_len + 1)]
    labels = list(spine)
    edges = []
    for j in range(1, n + 1):
        a = spine[j - 1]
        b = spine[j % spine_len] if close else spine[j]
        edges.append((a, b))
        for k in range(1, p + 1):
            y = apex(j, k)
            labels.append(y)
            edges.append((a, y))
            edges.append((b, y))
    if end_star:
        for k in range(1, p + 1):
            y = apex(n + 1, k)
            labels.append(y)
            edges.append((spine[-1], y))
    if start_star:
        for k in range(1, p + 1):
            y = apex(n + 2, k)
            labels.append(y)
            edges.append((spine[0], y))
    return LabeledGraph(labels, edges)


def _build(spec: FamilySpec, allow_base: bool) -> LabeledGraph:
    kind = spec.kind
    if kind == "path":
        return _path_graph(spec.n)
    if kind == "cycle":
        return _cycle_graph(spec.n)
    if kind == "star":
        return _star_graph(spec.u)
    if kind == "brs":
        return bristle(_build(spec.inner, allow_base), spec.q)
    n, p = spec.n, spec.p
    if kind == "tsnake":
        return _tsnake_graph(n, p)
    if kind == "tsnake_star":
        if n == 0 and allow_base:
            return _star_graph(p)
        return _tsnake_graph(n, p, end_star=True)
    if kind == "tsnake_starstar":
        if n == 0 and allow_base:
            return _star_graph(2 * p)
        return _tsnake_graph(n, p, end_star=True, start_star=True)
    if kind == "ouroboros":
        return _tsnake_graph(n, p, close=True)
    raise InvalidParameterError(f"unknown family kind {kind!r}")


def build_family(spec: FamilySpec) -> LabeledGraph:
    """Build the graph for a validated family spec."""
    validate_spec(spec)
    return _build(spec, allow_base=False)


def build_extended(spec: FamilySpec) -> LabeledGraph:
    """Like build_family but also accepts the n=0 degenerations.

    tsnake_star(0,p) is the star on p leaves and tsnake_starstar(0,p)
    the star on 2p leaves; bristled versions follow by bristling.
    Used when resolving decomposition factors.
    """
    base = spec.inner if spec.kind == "brs" else spec
    if base.kind in ("tsnake_star", "tsnake_starstar") and base.n == 0:
        if base.p is None or base.p < 1:
            raise InvalidParameterError(f"{base.kind} needs p >= 1")
        if spec.kind == "brs" and (spec.q is None or spec.q < 1):
            raise InvalidParameterError("brs needs q >= 1")
        return _build(spec, allow_base=True)
    return build_family(spec)


def expected_counts(spec: FamilySpec) -> tuple[int, int]:
    """Closed-form (vertices, edges) for a family spec."""
    kind = spec.kind
    if kind == "path":
        return spec.n, spec.n - 1
    if kind == "cycle":
        return spec.n, spec.n
    if kind == "star":
        return spec.u + 1, spec.u
    if kind == "brs":
        v, e = expected_counts(spec.inner)
        return v * (1 + spec.q), e + v * spec.q
    n, p = spec.n, spec.p
    if kind == "tsnake":
        return 1 + n + n * p, (2 * p + 1) * n
    if kind == "tsnake_star":
        if n == 0:
            return 1 + p, p
        return 1 + n + (n + 1) * p, (2 * p + 1) * n + p
    if kind == "tsnake_starstar":
        if n == 0:
            return 1 + 2 * p, 2 * p
        return 1 + n + (n + 2) * p, (2 * p + 1) * n + 2 * p
    if kind == "ouroboros":
        return (p + 1) * n, (2 * p + 1) * n
    raise InvalidParameterError(f"unknown family kind {kind!r}")


# ---------------------------------------------------------------------------
# compact spec strings, e.g. brs(q=3,tsnake(n=3,p=3)) or path(4)


def parse_family(text: str) -> FamilySpec:
    """Parse a compact family spec; errors carry the offending position."""
    parser = _Parser(text)
    spec = parser.parse_call()
    parser.skip_ws()
    if parser.pos != len(text):
        raise FamilySpecParseError("trailing input after family spec", parser.pos)
    return spec


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def error(self, message: str):
        raise FamilySpecParseError(message, self.pos)

    def parse_name(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()
                                             or self.text[self.pos] == "_"):
            self.pos += 1
        if self.pos == start:
            self.error("expected a family or parameter name")
        return self.text[start:self.pos]

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse_call(self) -> FamilySpec:
        at = self.pos
        name = self.parse_name()
        if name not in _PARAMS:
            self.pos = at
            self.error(f"unknown family {name!r}")
        self.expect("(")
        scalars: dict[str, int] = {}
        positional = list(_PARAMS[name])
        inner: FamilySpec | None = None
        if self.peek() != ")":
            while True:
                inner, positional = self._parse_arg(name, scalars, positional, inner)
                if self.peek() != ",":
                    break
                self.expect(",")
        self.expect(")")
        return self._assemble(name, scalars, inner)

    def _parse_arg(self, name, scalars, positional, inner):
        self.skip_ws()
        at = self.pos
        if self.text[self.pos:self.pos + 1].isdigit():
            if not positional:
                self.error(f"too many positional values for {name!r}")
            scalars[positional[0]] = self.parse_int()
            return inner, positional[1:]
        arg_name = self.parse_name()
        if self.peek() == "=":
            self.expect("=")
            if arg_name not in _PARAMS[name]:
                self.pos = at
                self.error(f"{name!r} takes no parameter {arg_name!r}")
            if arg_name in scalars:
                self.pos = at
                self.error(f"duplicate parameter {arg_name!r}")
            scalars[arg_name] = self.parse_int()
            return inner, [p for p in positional if p != arg_name]
        # otherwise it must be a nested family call
        if name != "brs":
            self.pos = at
            self.error(f"{name!r} takes no nested family")
        if inner is not None:
            self.pos = at
            self.error("duplicate inner family")
        self.pos = at
        return self.parse_call(), positional

    def _assemble(self, name, scalars, inner) -> FamilySpec:
        for param in _PARAMS[name]:
            if param not in scalars:
                self.error(f"{name!r} is missing parameter {param!r}")
        if name == "brs":
            if inner is None:
                self.error("brs needs an inner family")
            return FamilySpec("brs", q=scalars["q"], inner=inner)
        if name == "bstar":
            return bristled_star(scalars["u"], scalars["q"])
        # range checks are the builders' business, not the grammar's
        return FamilySpec(name, **scalars)


def find_vertex(g: LabeledGraph, label: VertexLabel) -> int:
    """Index of a structured label, raising KeyError with a readable name."""
    if not g.has_label(label):
        raise KeyError(f"graph has no vertex {label.name}")
    return g.index_of(label)
