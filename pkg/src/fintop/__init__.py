"""fintop: finite topological spaces, separation axioms, reflections, and
exhaustive enumeration."""

from .core import (
    FiniteSpace,
    NotATopology,
    PointMap,
    Preorder,
    SizeLimit,
    build_space,
    closure,
    example_space,
    generate_topology,
    initial_topology,
    interior,
    is_continuous,
    minimal_basis,
    minimal_open,
    product,
    quotient,
    space_from_doc,
    space_from_partition,
    space_from_preorder,
    space_to_doc,
    specialization_preorder,
    subspace,
)
from .separation import (
    PairSeparation,
    SeparationProfile,
    axiom_profile,
    double_negation_is_identity,
    irreducible_closed_sets,
    is_borel_field,
    is_normal,
    is_pre_hausdorff,
    is_regular,
    is_sober,
    is_zero_dimensional,
    pair_separation,
)
from .reflectors import (
    CodomainNotTi,
    NotContinuous,
    NotPreHausdorff,
    PreHausdorffReport,
    compose_reflections_check,
    factor_through_quotient,
    hausdorff_reflection_of_preH,
    pre_hausdorff_report,
    r_relation,
    reflect,
    reflect_pre_hausdorff,
)
from .enumeration import (
    CensusTable,
    are_homeomorphic,
    bell_number,
    census,
    census_to_csv,
    count_preH_classes,
    enumerate_pre_hausdorff,
    enumerate_topologies,
    integer_partition_count,
    preH_invariant,
)

__version__ = "0.1.0"
