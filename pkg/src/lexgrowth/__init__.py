"""Minimal Hilbert-function growth of monomial sets in F[x1..xn] and its pure-power quotients."""

from .census import CensusRecord, enumerate_gotzmann
from .errors import BudgetExceeded, DefinednessError, LexGrowthError, OracleMismatch, ParseError, UsageError
from .gotzmann import (
    GotzmannReport,
    component_theorem_check,
    is_gotzmann,
    slice_growth_check,
    slice_lex_compress,
    verify_transfer,
)
from .growth import (
    BinomialRep,
    GrowthTable,
    b_set,
    growth_R,
    growth_S,
    is_lexsegment,
    lex_segment,
    macaulay_rep,
)
from .monomials import (
    INF,
    Monomial,
    MonomialSet,
    RingSpec,
    SliceProfile,
    compare_lex,
    deflate,
    dim_degree,
    enumerate_degree,
    shadow,
    slice_profile,
    slice_set,
)

__version__ = "0.1.0"
