"""Projections in graph W*-algebras, decided three ways.

The package answers one question exactly: given a directed graph and a
word in the creation and annihilation operators of its edge paths, is
the resulting operator a projection onto a vertex subspace?  Three
independent routes to the answer are implemented and cross-checked:

* reduction of the word's shadow image to a normal form in the free
  groupoid over the doubled graph (:func:`is_projection`);
* a length-bookkeeping lattice path whose endpoint sits on the star
  axis exactly when the word balances (:func:`check_projection_lattice`);
* exact integer arithmetic on a truncated Fock space
  (:func:`evaluate`, :func:`classify`).

The first route is authoritative.  The second agrees with it on graphs
where no two distinct edges share a source or share a range, and
over-approximates otherwise; :func:`verify_graph` measures the gap.
"""

from .graph import (
    DirectedGraph,
    Edge,
    GraphError,
    GraphParseError,
    Vertex,
    parse_graph,
    serialize_graph,
    shadow_edge,
    shadowed_graph,
)
from .semigroupoid import (
    Path,
    Unit,
    WordParseError,
    compose,
    enumerate_elements,
    parse_element,
)
from .groupoid import (
    Letter,
    OperatorWord,
    ShadowPath,
    ZERO,
    ZeroWord,
    is_projection,
    parse_word,
    reduce,
    reduce_steps,
    signed_length,
    to_shadow_word,
)
from .lattice import (
    LatticePath,
    check_projection_lattice,
    export_path,
    has_star_axis_property,
    lattice_path,
    render_path_figure,
)
from .fock import (
    FockBasis,
    FockOperator,
    annihilation_matrix,
    classify,
    creation_matrix,
    equals,
    evaluate,
    safe_input_length,
    subprojection_leq,
)
from .verify import GraphReport, random_graph, run_fuzz, verify_graph

__version__ = "0.1.0"

__all__ = [
    "DirectedGraph",
    "Edge",
    "FockBasis",
    "FockOperator",
    "GraphError",
    "GraphParseError",
    "GraphReport",
    "LatticePath",
    "Letter",
    "OperatorWord",
    "Path",
    "ShadowPath",
    "Unit",
    "WordParseError",
    "ZERO",
    "ZeroWord",
    "annihilation_matrix",
    "check_projection_lattice",
    "classify",
    "compose",
    "creation_matrix",
    "enumerate_elements",
    "equals",
    "evaluate",
    "export_path",
    "has_star_axis_property",
    "is_projection",
    "lattice_path",
    "parse_element",
    "parse_graph",
    "parse_word",
    "random_graph",
    "reduce",
    "reduce_steps",
    "render_path_figure",
    "run_fuzz",
    "safe_input_length",
    "serialize_graph",
    "shadow_edge",
    "shadowed_graph",
    "signed_length",
    "to_shadow_word",
    "verify_graph",
]
