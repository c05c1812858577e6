"""Counting and asymptotics of well-rounded sublattices of planar lattices.

Exact layers: scalar arithmetic in a real quadratic field, Gram form
reduction and classification, Hermite-normal-form sublattice censuses,
Dirichlet coefficient streams for the square and hexagonal lattices, and
the general rational / non-rational counting theory.  The asympt module is
the single float-bearing layer (constants, growth models, Epstein sums).
"""

from .dirichlet import ArithSeq, OutOfRangeError, convolve
from .general import (
    CslInfo,
    ExistenceVerdict,
    NoFrameError,
    NotApplicableError,
    ReflectionFrame,
    brs_index,
    brs_parity,
    commensurate_to_hexagonal,
    count_wr_nonrational,
    count_wr_rational,
    enumerate_frames,
    existence,
    g_star,
    gamma_tilde_and_csl,
    unique_frame,
)
from .gram import (
    GramForm,
    LatticeType,
    NotPositiveDefiniteError,
    Unimodular,
    classify,
    classify_reduced,
    gauss_reduce,
    is_rational,
    is_well_rounded,
    rational_normalize,
)
from .hexagonal import a_hex, b_hex, b_hex_primitive
from .scalar import MixedRadicandError, NotRationalError, Scalar
from .square import (
    a_square,
    b_square,
    b_square_primitive,
    is_admissible_index_square,
)
from .sublattices import (
    CensusReport,
    SublatticeBasis,
    g_count,
    hnf_enumerate,
    sublattice_gram,
    wr_census_bruteforce,
)

__version__ = "0.1.0"

__all__ = [
    "ArithSeq",
    "CensusReport",
    "CslInfo",
    "ExistenceVerdict",
    "GramForm",
    "LatticeType",
    "MixedRadicandError",
    "NoFrameError",
    "NotApplicableError",
    "NotPositiveDefiniteError",
    "NotRationalError",
    "OutOfRangeError",
    "ReflectionFrame",
    "Scalar",
    "SublatticeBasis",
    "Unimodular",
    "a_hex",
    "a_square",
    "b_hex",
    "b_hex_primitive",
    "b_square",
    "b_square_primitive",
    "brs_index",
    "brs_parity",
    "classify",
    "classify_reduced",
    "commensurate_to_hexagonal",
    "convolve",
    "count_wr_nonrational",
    "count_wr_rational",
    "enumerate_frames",
    "existence",
    "g_count",
    "g_star",
    "gamma_tilde_and_csl",
    "gauss_reduce",
    "hnf_enumerate",
    "is_admissible_index_square",
    "is_rational",
    "is_well_rounded",
    "rational_normalize",
    "sublattice_gram",
    "unique_frame",
    "wr_census_bruteforce",
]
