"""Exact certificates for unramified abelian covers with extra symmetry.

Core areas:
  - `zmod`: Howell-form linear algebra over Z/k (subgroups, kernels,
    intersections, invariant subgroup enumeration)
  - `presentations`: orbifold and surface group presentations and their
    mod-k homology
  - `arithmetic`: genus/automorphism bookkeeping and uniqueness certificates
  - `fields`: prime fields, square roots, splitting prime search
  - `curve`: the quadric-intersection curve model and its sign-flip action
  - `covers`: Galois closures, deck groups, fiber product certificates
"""

from .arithmetic import (
    AutOrderCertificate,
    HyperellipticExclusionCertificate,
    SylowUniquenessCertificate,
    aut_order,
    base_genus_from_cover,
    cover_genus,
    hurwitz_bound,
    hyperelliptic_exclusion,
    sylow_uniqueness_certificate,
    teichmuller_dimension,
)
from .covers import (
    ClosureReport,
    FiberProductCertificate,
    GilmanAction,
    InvariantRankScan,
    LiftExponentReport,
    elementary_rank,
    fiber_product_check,
    galois_closure,
    gilman_action,
    invariant_s_values,
    kernel_of_surjection,
    order_p_lift_exponent,
    subgroup_invariant_factors,
)
from .curve import (
    CaseAReport,
    CaseBReport,
    CurveVerifyReport,
    DiagonalClass,
    FermatCurve,
    FixedPointReport,
    FreeSubgroupReport,
    SwapInvolution,
    case_a_involution,
    case_b_involution,
    enumerate_points,
    fixed_point_classes,
    free_index_two_subgroup,
    sample_points,
    verify_curve,
)
from .errors import (
    BUDGET_CODES,
    BudgetError,
    CertificationError,
    FermatcoverError,
    InputError,
)
from .fields import PrimeField, RadicandRequest, find_splitting_prime, is_prime, sqrt_mod
from .presentations import (
    AbelianInvariants,
    ChainCheckCertificate,
    GroupPresentation,
    abelian_invariants,
    homology_cover_degree,
    homology_mod_k,
    hyperelliptic_chain_check,
    orbifold_presentation,
    surface_presentation,
)
from .zmod import ResidueMatrix, ResidueVector, Subgroup

__version__ = "0.1.0"

__all__ = [
    "AbelianInvariants",
    "AutOrderCertificate",
    "BUDGET_CODES",
    "BudgetError",
    "CaseAReport",
    "CaseBReport",
    "CertificationError",
    "ChainCheckCertificate",
    "ClosureReport",
    "CurveVerifyReport",
    "DiagonalClass",
    "FermatCurve",
    "FermatcoverError",
    "FiberProductCertificate",
    "FixedPointReport",
    "FreeSubgroupReport",
    "GilmanAction",
    "GroupPresentation",
    "HyperellipticExclusionCertificate",
    "InputError",
    "InvariantRankScan",
    "LiftExponentReport",
    "PrimeField",
    "RadicandRequest",
    "ResidueMatrix",
    "ResidueVector",
    "Subgroup",
    "SwapInvolution",
    "SylowUniquenessCertificate",
    "abelian_invariants",
    "aut_order",
    "base_genus_from_cover",
    "case_a_involution",
    "case_b_involution",
    "cover_genus",
    "elementary_rank",
    "enumerate_points",
    "fiber_product_check",
    "find_splitting_prime",
    "fixed_point_classes",
    "free_index_two_subgroup",
    "galois_closure",
    "gilman_action",
    "homology_cover_degree",
    "homology_mod_k",
    "hurwitz_bound",
    "hyperelliptic_chain_check",
    "hyperelliptic_exclusion",
    "invariant_s_values",
    "is_prime",
    "kernel_of_surjection",
    "orbifold_presentation",
    "order_p_lift_exponent",
    "sample_points",
    "sqrt_mod",
    "subgroup_invariant_factors",
    "surface_presentation",
    "sylow_uniqueness_certificate",
    "teichmuller_dimension",
    "verify_curve",
]
