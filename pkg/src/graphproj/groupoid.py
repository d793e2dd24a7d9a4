"""Operator words and their reduction to a normal form.

An operator word is a finite product of letters ``L_w`` (creation by an
element ``w``) and ``L_w*`` (annihilation by ``w``).  Each word flattens to
a *shadow word*: a sequence of single edges of the shadowed graph, where a
starred letter contributes the reversed sequence of shadow edges of its
path.  Unit letters contribute no edges; they only constrain the junction
where they sit (``L_v* == L_v``, so the exponent of a unit letter is
irrelevant).  Any junction mismatch makes the whole word the zero element.

On shadow words, an adjacent pair of twin edges cancels:

    e^-1 e  ->  unit at range(e)          e e^-1  ->  unit at source(e)

Cancelling until no pair remains is confluent; :func:`reduce` performs it
deterministically, always cancelling the leftmost pair first.  A word is a
vertex projection exactly when its shadow word reduces to a unit, which is
what :func:`is_projection` reports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .graph import DirectedGraph, Edge, FORWARD, GraphError, Vertex, shadow_edge
from .semigroupoid import (
    Path,
    SemigroupoidElement,
    Unit,
    WordParseError,
    parse_element,
)


@dataclass(frozen=True, slots=True)
class Letter:
    """One factor of an operator word: an element with an exponent."""

    element: SemigroupoidElement
    star: bool = False

    def __str__(self) -> str:
        return f"{self.element}*" if self.star else str(self.element)


@dataclass(frozen=True, slots=True)
class OperatorWord:
    letters: tuple[Letter, ...]

    def __post_init__(self) -> None:
        if not self.letters:
            raise GraphError("an operator word needs at least one letter")

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters)


@dataclass(frozen=True, slots=True)
class ZeroWord:
    """The zero element; absorbing for every product."""

    def __str__(self) -> str:
        return "Zero"


ZERO = ZeroWord()


@dataclass(frozen=True, slots=True)
class ShadowPath:
    """A nonempty admissible edge sequence over the shadowed graph."""

    letters: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if not self.letters:
            raise GraphError("a shadow path needs at least one edge")
        for a, b in zip(self.letters, self.letters[1:]):
            if a.range != b.source:
                raise GraphError(
                    f"inadmissible shadow word at {a.id} -> {b.id}"
                )

    @property
    def source(self) -> Vertex:
        return self.letters[0].source

    @property
    def range(self) -> Vertex:
        return self.letters[-1].range

    def __str__(self) -> str:
        return ".".join(e.id for e in self.letters)


GroupoidWord = ZeroWord | Unit | ShadowPath


def _letter_edges(letter: Letter) -> tuple[Edge, ...]:
    # Unit letters are handled separately by the caller.
    edges = letter.element.edges
    if letter.star:
        return tuple(shadow_edge(e) for e in reversed(edges))
    return edges


def to_shadow_word(t: OperatorWord) -> GroupoidWord:
    """Flatten an operator word into the shadowed graph.

    Returns ``ZERO`` on any junction mismatch, a ``Unit`` when every letter
    is a unit letter, and a ``ShadowPath`` otherwise.  No cancellation
    happens here; this is pure concatenation.
    """
    out: list[Edge] = []
    pending_unit: Vertex | None = None
    for letter in t.letters:
        if isinstance(letter.element, Unit):
            v = letter.element.vertex
            if out:
                if out[-1].range != v:
                    return ZERO
            elif pending_unit is None:
                pending_unit = v
            elif pending_unit != v:
                return ZERO
            continue
        contribution = _letter_edges(letter)
        if out:
            if out[-1].range != contribution[0].source:
                return ZERO
        elif pending_unit is not None and pending_unit != contribution[0].source:
            return ZERO
        out.extend(contribution)
    if out:
        return ShadowPath(tuple(out))
    assert pending_unit is not None
    return Unit(pending_unit)


def cancels(a: Edge, b: Edge) -> bool:
    """Whether the adjacent pair ``a b`` is a twin pair and may cancel."""
    return a.base_id == b.base_id and a.orientation != b.orientation


def reduce(w: GroupoidWord) -> GroupoidWord:
    """Normal form under twin cancellation, leftmost pair first."""
    if not isinstance(w, ShadowPath):
        return w
    letters = list(w.letters)
    source = w.source
    i = 0
    while i < len(letters) - 1:
        if cancels(letters[i], letters[i + 1]):
            del letters[i : i + 2]
            # Pairs strictly left of i were checked and do not cancel; the
            # deletion can only create a new pair at i-1.
            i = max(i - 1, 0)
        else:
            i += 1
    if not letters:
        # Cancellation preserves the endpoints of the word, so a word that
        # vanishes entirely leaves the unit at its own source (== range).
        return Unit(source)
    return ShadowPath(tuple(letters))


def reduce_steps(w: GroupoidWord) -> Iterator[GroupoidWord]:
    """Yield ``w`` and every intermediate word of the leftmost reduction.

    The last item yielded equals ``reduce(w)``.
    """
    yield w
    if not isinstance(w, ShadowPath):
        return
    letters = list(w.letters)
    source = w.source
    i = 0
    while i < len(letters) - 1:
        if cancels(letters[i], letters[i + 1]):
            del letters[i : i + 2]
            yield ShadowPath(tuple(letters)) if letters else Unit(source)
            i = max(i - 1, 0)
        else:
            i += 1


def reduce_random(w: GroupoidWord, rng: random.Random) -> GroupoidWord:
    """Normal form reached by cancelling randomly chosen pairs.

    Exists to cross-check :func:`reduce`: by confluence the result must
    agree with the leftmost strategy on every input.
    """
    if not isinstance(w, ShadowPath):
        return w
    letters = list(w.letters)
    source = w.source
    while True:
        positions = [
            i for i in range(len(letters) - 1) if cancels(letters[i], letters[i + 1])
        ]
        if not positions:
            break
        i = rng.choice(positions)
        del letters[i : i + 2]
    if not letters:
        return Unit(source)
    return ShadowPath(tuple(letters))


def signed_length(w: GroupoidWord) -> int:
    """Forward letters minus shadow letters; zero for units and zero."""
    if not isinstance(w, ShadowPath):
        return 0
    return sum(1 if e.orientation == FORWARD else -1 for e in w.letters)


def is_projection(t: OperatorWord) -> Vertex | None:
    """The vertex whose projection ``t`` equals, or ``None``.

    A word is a vertex projection exactly when its shadow word reduces to
    a unit.
    """
    normal_form = reduce(to_shadow_word(t))
    if isinstance(normal_form, Unit):
        return normal_form.vertex
    return None


def parse_word(text: str, g: DirectedGraph) -> OperatorWord:
    """Parse a word literal: whitespace-separated letters, ``*`` for stars.

    Example: ``"e1.e2* e1 y*"`` is the product of the starred path e1.e2,
    the plain edge e1 and the starred unit at y.
    """
    tokens = text.split()
    if not tokens:
        raise WordParseError("empty operator word")
    letters = []
    for token in tokens:
        star = token.endswith("*")
        core = token[:-1] if star else token
        letters.append(Letter(parse_element(core, g), star))
    return OperatorWord(tuple(letters))
