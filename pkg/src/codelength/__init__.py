"""Forbidden systems, minimal absent words and Rauzy graphs of periodic words."""

from .antidictionary import ForbiddenSystem, codelength, is_reduced, minimal_forbidden_words, reduce
from .automaton import (
    DefinednessVerdict,
    MultipleWordsError,
    NotDefinedError,
    NoWordError,
    PatternAutomaton,
    avoids,
    build_automaton,
    classify,
    defined_word,
)
from .extremal import (
    BoundRow,
    BudgetExceededError,
    InconclusiveError,
    bound_violations,
    codelength_table,
    enumerate_primitive_words,
    max_period_for_codelength,
    verify_tightness,
)
from .rauzy import IdentityReport, LevelStats, RauzyGraph, evolve, level_stats, rauzy_graph, to_dot, verify_identities
from .words import (
    Alphabet,
    PeriodicWord,
    WordError,
    canonicalize,
    factors,
    fibonacci_number,
    fibonacci_word,
    is_factor,
)

__version__ = "0.1.0"
