"""Construct, verify, count within and exhaustively search k-geodetic digraphs."""

from __future__ import annotations

__version__ = "0.1.0"

from ._backend import BACKEND
from .canon import CanonicalForm, canonical_form, is_isomorphic
from .digraph import (
    DegreeProfile,
    Digraph,
    DigraphError,
    add_arc,
    converse,
    directed_girth,
    induced_subdigraph,
    is_strongly_connected,
    new_digraph,
    sources_and_sinks,
    underlying_contains_diamond,
)
from .digraph6 import Digraph6Error, emit_digraph6, parse_digraph6
from .geodecity import GeodecityReport, Walk, geodetic_girth, is_k_geodetic, walk_count_matrix
from .search import (
    CensusRecord,
    SearchBudget,
    SearchConstraints,
    exclusion_bound,
    extremal_search,
    verify_extremal_witness,
)

__all__ = [
    "BACKEND",
    "CanonicalForm",
    "CensusRecord",
    "DegreeProfile",
    "Digraph",
    "Digraph6Error",
    "DigraphError",
    "GeodecityReport",
    "SearchBudget",
    "SearchConstraints",
    "Walk",
    "add_arc",
    "canonical_form",
    "converse",
    "directed_girth",
    "emit_digraph6",
    "exclusion_bound",
    "extremal_search",
    "geodetic_girth",
    "induced_subdigraph",
    "is_isomorphic",
    "is_k_geodetic",
    "is_strongly_connected",
    "new_digraph",
    "parse_digraph6",
    "sources_and_sinks",
    "underlying_contains_diamond",
    "verify_extremal_witness",
    "walk_count_matrix",
]
