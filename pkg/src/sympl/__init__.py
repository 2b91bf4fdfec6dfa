"""Exact-arithmetic toolkit for symplectic weight combinatorics.

Weights over several real places, the signed-permutation Weyl group and
its dot orbits, parabolic induction embedding data, unitarity bounds for
highest weight modules, unramified local L-factor products, and formal
Fourier expansions with exact positive-definiteness tests.
"""

from .ehw import (
    EhwProfile,
    ehw_normalize,
    first_reduction_point,
    is_unitary_highest_weight,
)
from .embeddings import (
    CharacterDatum,
    InductionDatum,
    gl_degenerate_convergence,
    klingen_convergence,
    klingen_embedding_datum,
    klingen_embedding_inverse,
    principal_series_datum,
    siegel_degenerate_datum,
)
from .errors import DomainError
from .fourier import (
    FourierExpansion,
    PdGrid,
    SymMatrix,
    build_pd_grid,
    corank,
    cusp_condition_check,
    filtration_index,
    format_expansion,
    gl_transform,
    grid_variable,
    in_sym_j,
    is_cuspidal,
    is_pd,
    is_psd,
    parse_expansion,
    pit_vanishes,
    rank,
    rigidity_check,
    siegel_phi,
    slash_invariance_check,
)
from .laurent import LaurentPoly
from .lfactors import (
    RationalFunction,
    SatakeDatum,
    abelian_L,
    evaluate,
    gk_value,
    standard_L,
    xi,
)
from .orbitclassify import (
    DecompositionReport,
    OrbitClassification,
    SurjectivityVerdict,
    classify_levels,
    decomposition_report,
    duality_check,
    hc_parameter,
    is_squarefree,
    level_from_primes,
    siegel_surjectivity_check,
    theorem_main_necessary,
)
from .scalars import as_scalar, format_scalar
from .weights import (
    VanishingVerdict,
    Weight,
    format_weight,
    holomorphy_vanishing,
    is_integral,
    is_k_dominant,
    parity_class,
    parse_weight,
    rho,
)
from .weyl import (
    InfChar,
    WeylElement,
    act,
    compose,
    dominant_orbit_elements,
    dot_act,
    enumerate_weyl,
    identity,
    infchar_canonical,
    infchar_equal,
    inverse,
    is_regular,
    is_sufficiently_regular,
    orbit_cap,
    orbit_dichotomy_check,
)

__version__ = "0.1.0"
