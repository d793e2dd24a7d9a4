"""Units and admissible edge paths of a graph, under composition.

The elements here are the index set of the whole package: a vertex ``v``
contributes a unit element, and every admissible sequence of edges
``e1 e2 ... ek`` (range of each edge equal to the source of the next)
contributes a path of length ``k``.  Composition reads left to right:
``compose(w1, w2)`` is "w1 then w2" and is defined exactly when
``w1.range == w2.source``.  Units compose as one-sided identities, and two
distinct units do not compose at all: the result is ``None``, a value,
not an error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import DirectedGraph, Edge, GraphError, SHADOW_MARKER, Vertex


class WordParseError(ValueError):
    """Malformed path or word literal."""


@dataclass(frozen=True, slots=True)
class Unit:
    """The empty path at a vertex."""

    vertex: Vertex

    @property
    def source(self) -> Vertex:
        return self.vertex

    @property
    def range(self) -> Vertex:
        return self.vertex

    @property
    def length(self) -> int:
        return 0

    def __str__(self) -> str:
        return self.vertex.id


@dataclass(frozen=True, slots=True)
class Path:
    """A nonempty admissible sequence of edges."""

    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if not self.edges:
            raise GraphError("a path needs at least one edge")
        for a, b in zip(self.edges, self.edges[1:]):
            if a.range != b.source:
                raise GraphError(
                    f"inadmissible path: {a.id} ends at {a.range.id}, "
                    f"{b.id} starts at {b.source.id}"
                )

    @property
    def source(self) -> Vertex:
        return self.edges[0].source

    @property
    def range(self) -> Vertex:
        return self.edges[-1].range

    @property
    def length(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        return ".".join(e.id for e in self.edges)


SemigroupoidElement = Unit | Path


def compose(w1: SemigroupoidElement, w2: SemigroupoidElement) -> SemigroupoidElement | None:
    """``w1`` then ``w2``, or ``None`` when the endpoints do not meet."""
    if isinstance(w1, Unit):
        if isinstance(w2, Unit):
            return w1 if w1.vertex == w2.vertex else None
        return w2 if w1.vertex == w2.source else None
    if isinstance(w2, Unit):
        return w1 if w1.range == w2.vertex else None
    if w1.range != w2.source:
        return None
    return Path(w1.edges + w2.edges)


def enumerate_elements(g: DirectedGraph, max_len: int) -> list[SemigroupoidElement]:
    """All units plus all paths of length at most ``max_len``.

    Ordered by length, then lexicographically by the tuple of edge ids, so
    the result is deterministic and closed under taking prefixes.
    """
    if max_len < 0:
        raise GraphError("max_len must be nonnegative")
    out: list[SemigroupoidElement] = [Unit(v) for v in g.vertices]
    generation: list[Path] = [Path((e,)) for e in g.edges]
    length = 1
    while length <= max_len and generation:
        generation.sort(key=lambda p: tuple(e.id for e in p.edges))
        out.extend(generation)
        generation = [
            Path(p.edges + (e,)) for p in generation for e in g.out_edges(p.range)
        ]
        length += 1
    return out


def _resolve_edge(g: DirectedGraph, token: str) -> Edge:
    if g.has_edge_id(token):
        return g.edge(token)
    # Shadow edges may be written with a trailing star: "e*" for "e^-1".
    if token.endswith("*") and g.has_edge_id(token[:-1] + SHADOW_MARKER):
        return g.edge(token[:-1] + SHADOW_MARKER)
    raise WordParseError(f"unknown edge {token!r}")


def parse_element(text: str, g: DirectedGraph) -> SemigroupoidElement:
    """Parse a path literal: a vertex id, or edge ids joined by dots."""
    token = text.strip()
    if not token:
        raise WordParseError("empty path literal")
    if g.has_vertex_id(token):
        return Unit(g.vertex(token))
    edges = tuple(_resolve_edge(g, part) for part in token.split("."))
    try:
        return Path(edges)
    except GraphError as exc:
        raise WordParseError(str(exc)) from exc
