"""Strongly invertible links as pairs of palindromic braids.

Braid words, the Garside word problem, palindromic factorizations, closure
diagrams, Jones and Alexander polynomials, equivariant Markov moves and a
bounded search for move sequences relating two pairs.
"""

from __future__ import annotations

from .braid import (
    BraidWord,
    Permutation,
    concat,
    embed_e,
    format_word,
    free_reduce,
    generator,
    identity,
    inverse,
    mirror,
    parse_word,
    reverse,
    shift_s,
    underlying_permutation,
)
from .closure import (
    Crossing,
    EquivariantPair,
    LinkDiagram,
    closure_diagram,
    closure_word,
    component_count,
    diagram_from_pd,
    format_pair,
    make_pair,
    parse_pair,
)
from .corpus import CorpusEntry, CorpusReport, corpus_verify, load_corpus
from .errors import (
    BraidError,
    FactorizationNotFound,
    MalformedToken,
    NonExactDivision,
    NotFoundWithinBound,
    NotPalindromic,
    OutOfRangeGenerator,
    ParseError,
    PreconditionFailed,
    ReplayError,
    StrandMismatch,
    TooManyCrossings,
)
from .garside import NormalForm, is_identity, is_palindromic, normal_form, words_equal
from .invariants import alexander, alexander_from_diagram, jones, kauffman_bracket, writhe
from .laurent import LaurentPoly
from .moves import (
    MoveDescriptor,
    MoveTag,
    apply_move,
    double_stab,
    eq_conjugate,
    format_move,
    parse_move,
    stab_e,
    stab_s,
    swap,
)
from .palindromic import DeloupFactorization, deloup_factorize
from .search import (
    MoveTrace,
    NotFoundWithinBudget,
    SearchBudget,
    canonical_key,
    find_trace,
    parse_trace,
    verify_trace,
)

__version__ = "0.1.0"
