"""Exact arc-space invariants of monomial ideals.

Colengths, multiplicities, log canonical thresholds, volumes of graded
sequences and of contact loci, all in rational arithmetic.
"""

from .contact import (
    ArcSetModel,
    ContactLocusModel,
    bp_ideal,
    bp_ideal_set,
    build_contact,
    check_inclusion_exclusion,
    intersection,
    jet_codim_contact,
    ord_contact,
    union,
    verify_lct_jets,
    verify_vol_codim,
    verify_vol_cont,
    volume_contact,
    volume_set,
)
from .errors import (
    ArcvolError,
    DimensionMismatch,
    HypothesisViolated,
    InfiniteVolume,
    NotPrimary,
    OutOfRange,
    ParseError,
    UnitIdeal,
    ZeroIdeal,
)
from .graded import (
    ClosurePowers,
    ContactIdeals,
    GradedSequence,
    Powers,
    Table,
    ValuationIdeals,
    VolumeEstimate,
    check_graded,
    check_nested,
    fekete_limit,
    volume,
)
from .monomial import (
    MonomialIdeal,
    colength,
    contains,
    ideal_sum,
    intersect,
    is_subideal,
    minimalize,
    parse_ideal,
    power,
    product,
    standard_monomials,
)
from .newton import (
    Facet,
    NewtonPolyhedron,
    build,
    integral_closure_power,
    lct,
    multiplicity,
    newton_covolume,
    radical_valuation,
)
from .psval import (
    MonomialPseudoValuation,
    WeightRay,
    b_ideal,
    evaluate,
    ideal_adic_valuation,
    scale,
    single_ray,
    volume_exact,
)

__version__ = "0.1.0"
