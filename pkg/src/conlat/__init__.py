"""Computational toolkit for finite lattices, their congruence lattices,
join-semilattice refinement properties, and small von Neumann regular rings.

Everything is table-driven and exhaustively checkable: congruences, weakly
distributive maps, uniform refinement witnesses, congruence splitting, and
the ideal correspondences of finite regular rings.
"""

__version__ = "0.1.0"

from .lattice import (  # noqa: F401
    FiniteLattice,
    LatticeHom,
    IntervalSublattice,
    NotALattice,
    CyclicCovers,
    IndexOutOfRange,
    NotComparable,
    BoundExceeded,
    boolean,
    canonical_form,
    chain,
    check_hom,
    enumerate_lattice_homs,
    enumerate_lattices,
    has_convex_range,
    interval,
    is_atomistic,
    is_complemented,
    is_distributive,
    is_isomorphic,
    is_modular,
    is_relatively_complemented,
    is_sectionally_complemented,
    are_perspective,
    m3,
    n5,
)
from .congruence import (  # noqa: F401
    Chain,
    Congruence,
    CongruenceLattice,
    ConNidCorrespondence,
    HostMismatch,
    HypothesesFail,
    NotAHom,
    NotAnIdeal,
    NotJoined,
    alternating_chain,
    con_lattice,
    con_nid_iso,
    congruence_from_blocks,
    congruence_join,
    congruence_meet,
    ideals,
    induced_con_map,
    is_neutral_ideal,
    monotonize_chain,
    neutral_ideals,
    principal_congruence,
)
from .semilattice import (  # noqa: F401
    FiniteJoinSemilattice,
    InvalidInputWitness,
    RefinementResult,
    RefinementSquare,
    SemilatticeHom,
    TargetNotDistributive,
    WdAtResult,
    WdWitness,
    check_semilattice_hom,
    enumerate_semilattice_homs,
    has_refinement_property,
    is_weakly_distributive,
    is_weakly_distributive_at,
    refinement_square,
    wd_join_combine,
    weakly_distributive_points,
)
from .urp import (  # noqa: F401
    DEFAULT_SEARCH_BUDGET,
    BadDecomposition,
    IndexMismatch,
    NoSourceWitness,
    NotDistributive,
    NotSplitting,
    NotWeaklyDistributive,
    PreconditionFail,
    SearchBudgetExceeded,
    UrpInstance,
    UrpVerification,
    UrpWitness,
    canonical_instance,
    check_refinement_square_consequence,
    csurp_witness,
    holds_urp_at,
    refine_instance,
    satisfies_urp,
    search_urp_witness,
    urp_join_combine,
    urp_transfer,
    verify_urp_witness,
)
from .splitting import (  # noqa: F401
    CChain,
    NoChain,
    PropertyCResult,
    SplitInstance,
    SplittingResult,
    has_property_C,
    is_congruence_splitting,
    property_c_chain,
    rel_lessdot,
    splitting_from_property_C,
    splitting_witness,
)
from .regring import (  # noqa: F401
    DecompositionFail,
    FiniteRing,
    IsoCertificate,
    NotIdempotent,
    NotNeutral,
    NotRegular,
    NotTwoSided,
    PiMap,
    RightIdealLattice,
    RingTooLarge,
    SpecParse,
    SupportQuotient,
    TwoSidedIdealLattice,
    VMonoid,
    algebraic_below,
    conc_idc_iso,
    ideals_isomorphic,
    is_regular,
    max_semilattice_quotient,
    neutral_iff_iso_closed,
    parse_ring_spec,
    phi,
    pi_map,
    principal_right_ideals,
    psi,
    refine_nonneg_vectors,
    two_sided_ideals,
    v_monoid,
    verify_nid_id_iso,
    verify_pi_map,
)
