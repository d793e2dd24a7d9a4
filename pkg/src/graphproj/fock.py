"""Exact matrix model of creation and annihilation on a truncated basis.

The basis consists of all units and all paths up to a length cutoff; an
operator is stored as a partial injection on basis indices, equivalently a
0/1 matrix with at most one 1 per row and per column.  All arithmetic is
integer dictionary composition: no floating point, no tolerances.

Creation by ``w`` sends a basis element ``h`` to ``w`` then ``h`` when that
composes and still fits inside the cutoff, and to zero otherwise.
Annihilation by ``w`` strips ``w`` as a prefix, which is unique when it
exists.  For a unit both act as the same projection, onto basis elements
whose source is that vertex.

Truncation means a long intermediate result can be cut off even though the
untruncated operator would map the vector somewhere; equality statements
are therefore made on a *safe region* of inputs, computed per word from
the largest intermediate length gain (see :func:`safe_input_length`).
Every mapping a truncated product does produce agrees with the untruncated
operator, so subset statements need no such guard.
"""

from __future__ import annotations

from functools import reduce as fold

from .graph import DirectedGraph, FORWARD, GraphError, shadow_edge
from .groupoid import GroupoidWord, Letter, OperatorWord, ZeroWord
from .semigroupoid import Path, SemigroupoidElement, Unit, compose, enumerate_elements

ZERO_CLASS = "zero"
PROJECTION = "projection"
PARTIAL_ISOMETRY = "partial_isometry"
OTHER = "other"


class BasisMismatchError(ValueError):
    """Two operators over different bases were combined."""


class FockBasis:
    """All units and paths of length at most ``max_len``, indexed."""

    __slots__ = ("graph", "max_len", "elements", "index")

    def __init__(self, graph: DirectedGraph, max_len: int):
        if max_len < 1:
            raise GraphError("basis cutoff must be a positive integer")
        self.graph = graph
        self.max_len = max_len
        self.elements: tuple[SemigroupoidElement, ...] = tuple(
            enumerate_elements(graph, max_len)
        )
        self.index: dict[SemigroupoidElement, int] = {
            el: i for i, el in enumerate(self.elements)
        }

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockBasis):
            return NotImplemented
        return self.graph == other.graph and self.max_len == other.max_len

    def __hash__(self) -> int:
        return hash((self.graph, self.max_len))

    def __repr__(self) -> str:
        return f"FockBasis(max_len={self.max_len}, size={len(self.elements)})"


class FockOperator:
    """A partial injection on the indices of a basis."""

    __slots__ = ("basis", "mapping")

    def __init__(self, basis: FockBasis, mapping: dict[int, int]):
        size = len(basis)
        targets = set()
        for h, t in mapping.items():
            if not (0 <= h < size and 0 <= t < size):
                raise GraphError(f"index out of range in mapping: {h} -> {t}")
            if t in targets:
                raise GraphError(f"mapping is not injective at target {t}")
            targets.add(t)
        self.basis = basis
        self.mapping = dict(mapping)

    @classmethod
    def _unchecked(cls, basis: FockBasis, mapping: dict[int, int]) -> "FockOperator":
        # Composition and transposition of partial injections stay partial
        # injections; skip revalidation on those internal paths.
        op = object.__new__(cls)
        op.basis = basis
        op.mapping = mapping
        return op

    @property
    def is_zero(self) -> bool:
        return not self.mapping

    def __matmul__(self, other: "FockOperator") -> "FockOperator":
        """Operator product ``self @ other``: ``other`` acts first."""
        if self.basis != other.basis:
            raise BasisMismatchError("operator product across different bases")
        own = self.mapping
        out = {}
        for h, t in other.mapping.items():
            u = own.get(t)
            if u is not None:
                out[h] = u
        return FockOperator._unchecked(self.basis, out)

    def transpose(self) -> "FockOperator":
        return FockOperator._unchecked(
            self.basis, {t: h for h, t in self.mapping.items()}
        )

    def restrict(self, max_input_length: int) -> "FockOperator":
        """Drop mappings whose input is longer than ``max_input_length``."""
        elements = self.basis.elements
        return FockOperator._unchecked(
            self.basis,
            {
                h: t
                for h, t in self.mapping.items()
                if elements[h].length <= max_input_length
            },
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockOperator):
            return NotImplemented
        return self.basis == other.basis and self.mapping == other.mapping

    def __repr__(self) -> str:
        return f"FockOperator({len(self.mapping)} of {len(self.basis)} mapped)"


def zero_operator(b: FockBasis) -> FockOperator:
    return FockOperator._unchecked(b, {})


def identity_operator(b: FockBasis) -> FockOperator:
    return FockOperator._unchecked(b, {i: i for i in range(len(b))})


def _check_membership(w: SemigroupoidElement, b: FockBasis) -> None:
    g = b.graph
    if isinstance(w, Unit):
        if not g.contains_vertex(w.vertex):
            raise GraphError(f"element {w} is not over the basis graph")
    elif not all(g.contains_edge(e) for e in w.edges):
        raise GraphError(f"element {w} is not over the basis graph")


def creation_matrix(w: SemigroupoidElement, b: FockBasis) -> FockOperator:
    """``h -> w then h`` where defined and within the cutoff."""
    _check_membership(w, b)
    mapping = {}
    for i, h in enumerate(b.elements):
        wh = compose(w, h)
        if wh is not None and wh.length <= b.max_len:
            mapping[i] = b.index[wh]
    return FockOperator._unchecked(b, mapping)


def annihilation_matrix(w: SemigroupoidElement, b: FockBasis) -> FockOperator:
    """Strip the prefix ``w``; for a unit this equals the creation matrix."""
    _check_membership(w, b)
    if isinstance(w, Unit):
        return creation_matrix(w, b)
    k = w.length
    mapping = {}
    for i, h in enumerate(b.elements):
        if isinstance(h, Unit) or h.length < k or h.edges[:k] != w.edges:
            continue
        rest: SemigroupoidElement
        rest = Path(h.edges[k:]) if h.length > k else Unit(w.range)
        mapping[i] = b.index[rest]
    return FockOperator._unchecked(b, mapping)


def letter_matrix(letter: Letter, b: FockBasis) -> FockOperator:
    if letter.star:
        return annihilation_matrix(letter.element, b)
    return creation_matrix(letter.element, b)


def evaluate(t: OperatorWord, b: FockBasis) -> FockOperator:
    """The word as an operator; the rightmost letter acts first."""
    return fold(lambda acc, letter: acc @ letter_matrix(letter, b), t.letters[1:],
                letter_matrix(t.letters[0], b))


def shadow_word_matrix(w: GroupoidWord, b: FockBasis) -> FockOperator:
    """The operator of a shadow word: each edge letter acts by creation,
    each shadow letter by annihilation of its forward twin."""
    if isinstance(w, ZeroWord):
        return zero_operator(b)
    if isinstance(w, Unit):
        return creation_matrix(w, b)
    ops = []
    for e in w.letters:
        if e.orientation == FORWARD:
            ops.append(creation_matrix(Path((e,)), b))
        else:
            ops.append(annihilation_matrix(Path((shadow_edge(e),)), b))
    return fold(lambda acc, op: acc @ op, ops[1:], ops[0])


def safe_input_length(t: OperatorWord, b: FockBasis) -> int:
    """Largest input length on which truncation cannot interfere.

    Applying the word to an input of length ``n`` visits intermediate
    lengths ``n + gain`` for each suffix of the word; as long as the
    largest gain keeps every intermediate inside the cutoff, the truncated
    product agrees with the untruncated operator.  May be negative, in
    which case no input is guaranteed safe.
    """
    gain = 0
    max_gain = 0
    for letter in reversed(t.letters):
        k = letter.element.length
        gain += -k if letter.star else k
        max_gain = max(max_gain, gain)
    return b.max_len - max_gain


def classify(op: FockOperator) -> str:
    """One of ``zero``, ``projection``, ``partial_isometry``, ``other``.

    A projection here means a restriction of the identity map.  Any
    partial injection passes the partial isometry test ``t t* t == t``;
    the last bucket is kept for completeness.
    """
    if op.is_zero:
        return ZERO_CLASS
    if all(h == t for h, t in op.mapping.items()):
        return PROJECTION
    if op @ op.transpose() @ op == op:
        return PARTIAL_ISOMETRY
    return OTHER


def equals(a: FockOperator, b: FockOperator) -> bool:
    if a.basis != b.basis:
        raise BasisMismatchError("comparing operators over different bases")
    return a.mapping == b.mapping


def subprojection_leq(a: FockOperator, b: FockOperator) -> bool:
    """Whether every mapping of ``a`` is also a mapping of ``b``."""
    if a.basis != b.basis:
        raise BasisMismatchError("comparing operators over different bases")
    return a.mapping.items() <= b.mapping.items()


def dump_operator(op: FockOperator) -> str:
    """One ``source -> target`` line per mapped pair, in basis order."""
    elements = op.basis.elements
    return "".join(
        f"{elements[h]} -> {elements[op.mapping[h]]}\n"
        for h in sorted(op.mapping)
    )
