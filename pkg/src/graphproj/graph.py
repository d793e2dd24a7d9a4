"""Finite directed multigraphs with named vertices and edges.

A graph is an immutable value: a tuple of vertices and a tuple of directed
edges between them.  Loops and parallel edges are allowed.  Vertex and edge
names live in one shared namespace, which keeps word literals unambiguous.

Every edge carries an orientation flag.  Graphs read from files contain only
``forward`` edges; ``shadow`` edges (reversed twins named ``<id>^-1``) are
produced by :func:`shadow_edge`, :func:`shadow` and :func:`shadowed_graph`.

File format (UTF-8, line oriented)::

    # comment
    vertex x
    vertex y
    edge e x y

``#`` starts a comment, blank lines are ignored, and vertices must be
declared before any edge that uses them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

FORWARD = "forward"
SHADOW = "shadow"

SHADOW_MARKER = "^-1"

# "*" and "." are word syntax, "#" starts a file comment; none may appear
# inside a name.
_FORBIDDEN_CHARS = frozenset("*.#")


class GraphError(ValueError):
    """Invalid graph structure or invalid use of graph data."""


class GraphParseError(GraphError):
    """Malformed graph file.  Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def _check_name(kind: str, name: str) -> None:
    if not name:
        raise GraphError(f"empty {kind} name")
    if any(c.isspace() for c in name):
        raise GraphError(f"{kind} name {name!r} contains whitespace")
    bad = _FORBIDDEN_CHARS.intersection(name)
    if bad:
        raise GraphError(
            f"{kind} name {name!r} contains reserved character {sorted(bad)[0]!r}"
        )


@dataclass(frozen=True, slots=True)
class Vertex:
    id: str

    def __post_init__(self) -> None:
        _check_name("vertex", self.id)

    def __str__(self) -> str:
        return self.id


@dataclass(frozen=True, slots=True)
class Edge:
    """A directed edge from ``source`` to ``range``.

    ``base_id`` names the forward edge this edge or its reversal came from;
    for forward edges it equals ``id``.  A shadow edge and its forward twin
    therefore share ``base_id`` and differ in ``orientation``.
    """

    id: str
    source: Vertex
    range: Vertex
    orientation: str = FORWARD
    base_id: str = field(default="")

    def __post_init__(self) -> None:
        if self.orientation not in (FORWARD, SHADOW):
            raise GraphError(f"unknown orientation {self.orientation!r}")
        if self.orientation == FORWARD:
            _check_name("edge", self.id)
        if not self.base_id:
            object.__setattr__(self, "base_id", self.id)

    def __str__(self) -> str:
        return self.id


def shadow_edge(e: Edge) -> Edge:
    """The reversed twin of an edge.  An involution on edge values."""
    if e.orientation == FORWARD:
        return Edge(e.id + SHADOW_MARKER, e.range, e.source, SHADOW, e.id)
    return Edge(e.base_id, e.range, e.source, FORWARD, e.base_id)


class DirectedGraph:
    """Immutable directed multigraph with a shared id namespace.

    ``vertices`` and ``edges`` are exposed as tuples sorted by id, so every
    traversal of a graph is deterministic.
    """

    __slots__ = ("vertices", "edges", "_by_id", "_out", "_hash")

    def __init__(self, vertices, edges):
        by_id: dict[str, Vertex | Edge] = {}
        for v in vertices:
            if not isinstance(v, Vertex):
                raise GraphError(f"not a vertex: {v!r}")
            if v.id in by_id:
                raise GraphError(f"duplicate id {v.id!r}")
            by_id[v.id] = v
        if not by_id:
            raise GraphError("a graph needs at least one vertex")
        vertex_ids = set(by_id)
        for e in edges:
            if not isinstance(e, Edge):
                raise GraphError(f"not an edge: {e!r}")
            if e.id in by_id:
                raise GraphError(f"duplicate id {e.id!r}")
            for endpoint in (e.source, e.range):
                if endpoint.id not in vertex_ids:
                    raise GraphError(f"unknown vertex {endpoint.id!r}")
            by_id[e.id] = e
        self.vertices = tuple(sorted((v for v in by_id.values() if isinstance(v, Vertex)), key=lambda v: v.id))
        self.edges = tuple(sorted((e for e in by_id.values() if isinstance(e, Edge)), key=lambda e: e.id))
        self._by_id = by_id
        out: dict[Vertex, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.source].append(e)
        self._out = {v: tuple(es) for v, es in out.items()}
        self._hash = hash((self.vertices, self.edges))

    def vertex(self, vertex_id: str) -> Vertex:
        v = self._by_id.get(vertex_id)
        if not isinstance(v, Vertex):
            raise GraphError(f"unknown vertex {vertex_id!r}")
        return v

    def edge(self, edge_id: str) -> Edge:
        e = self._by_id.get(edge_id)
        if not isinstance(e, Edge):
            raise GraphError(f"unknown edge {edge_id!r}")
        return e

    def has_vertex_id(self, name: str) -> bool:
        return isinstance(self._by_id.get(name), Vertex)

    def has_edge_id(self, name: str) -> bool:
        return isinstance(self._by_id.get(name), Edge)

    def out_edges(self, v: Vertex) -> tuple[Edge, ...]:
        """Edges whose source is ``v``, sorted by id."""
        try:
            return self._out[v]
        except KeyError:
            raise GraphError(f"vertex {v.id!r} is not in this graph") from None

    def contains_vertex(self, v: Vertex) -> bool:
        return self._by_id.get(v.id) == v

    def contains_edge(self, e: Edge) -> bool:
        return self._by_id.get(e.id) == e

    @property
    def forward_only(self) -> bool:
        return all(e.orientation == FORWARD for e in self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return (
            f"DirectedGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"
        )


def shadow(g: DirectedGraph) -> DirectedGraph:
    """The graph with every edge reversed, on the same vertices.

    Input must contain only forward edges; reversing twice is the identity
    at the level of edge values (see :func:`shadow_edge`).
    """
    if not g.forward_only:
        raise GraphError("shadow of a graph that already contains shadow edges")
    return DirectedGraph(g.vertices, tuple(shadow_edge(e) for e in g.edges))


def shadowed_graph(g: DirectedGraph) -> DirectedGraph:
    """The disjoint union of a graph and its shadow, on the same vertices."""
    if not g.forward_only:
        raise GraphError("graph already contains shadow edges")
    return DirectedGraph(g.vertices, g.edges + tuple(shadow_edge(e) for e in g.edges))


def parse_graph(text: str) -> DirectedGraph:
    """Parse the line-oriented graph format.  Raises :class:`GraphParseError`."""
    vertices: dict[str, Vertex] = {}
    edges: dict[str, Edge] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword = tokens[0]
        try:
            if keyword == "vertex":
                if len(tokens) != 2:
                    raise GraphParseError(
                        f"expected 'vertex <id>', got {raw.strip()!r}", lineno
                    )
                name = tokens[1]
                if name in vertices or name in edges:
                    raise GraphParseError(f"duplicate id {name!r}", lineno)
                vertices[name] = Vertex(name)
            elif keyword == "edge":
                if len(tokens) != 4:
                    raise GraphParseError(
                        f"expected 'edge <id> <source> <range>', got {raw.strip()!r}",
                        lineno,
                    )
                name, src, rng = tokens[1], tokens[2], tokens[3]
                if name in vertices or name in edges:
                    raise GraphParseError(f"duplicate id {name!r}", lineno)
                for endpoint in (src, rng):
                    if endpoint not in vertices:
                        raise GraphParseError(f"unknown vertex {endpoint}", lineno)
                edges[name] = Edge(name, vertices[src], vertices[rng])
            else:
                raise GraphParseError(f"unknown directive {keyword!r}", lineno)
        except GraphParseError:
            raise
        except GraphError as exc:
            raise GraphParseError(str(exc), lineno) from exc
    if not vertices:
        raise GraphParseError("no vertices declared")
    return DirectedGraph(vertices.values(), edges.values())


def serialize_graph(g: DirectedGraph) -> str:
    """Render a graph in the file format: sorted vertices, then sorted edges.

    Defined for forward graphs (the only kind the format describes); the
    orientation flag of shadow edges would not survive a round trip.
    """
    lines = [f"vertex {v.id}" for v in g.vertices]
    lines += [f"edge {e.id} {e.source.id} {e.range.id}" for e in g.edges]
    return "\n".join(lines) + "\n"
