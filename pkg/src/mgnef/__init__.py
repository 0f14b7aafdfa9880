"""Exact divisor-class arithmetic and nef-cone decisions on moduli of
pointed stable curves."""

from .errors import (
    BadSplit,
    DegenerateInput,
    DependentGenerators,
    DimensionTooLarge,
    DuplicateLabel,
    ExprError,
    ExprSyntaxError,
    GenusTooSmall,
    InvalidPair,
    MgnefError,
    NegativeSeed,
    NotInSpan,
    SignatureMismatch,
    SpecMismatch,
    UnknownAtom,
    UnstableSignature,
    UnsupportedBasisElement,
    WrongHomeSpace,
)
from .moduli import (
    IRR,
    BoundaryIndex,
    GenusMarking,
    ModuliSignature,
    canonical_pair,
    enumerate_boundary,
    enumerate_upsilon,
    halving_weight,
    sep_index,
    validate_signature,
)
from .divisors import (
    D_IRR,
    LAM,
    DivisorClass,
    MuCoordinates,
    d_sep,
    from_mu_basis,
    linear_combine,
    mu,
    mu_prime,
    mu_prime_e,
    named_class,
    psi,
    render,
    sigma,
    theta,
    theta1,
    theta12,
    theta12_prime,
    theta_prime_e,
    to_mu_basis,
    zero,
)
from .clutching import (
    AlphaComponentCoefficients,
    AlphaMapSpec,
    BetaDecomposition,
    BetaMapSpec,
    alpha_pullback,
    alpha_star_closed_form,
    beta_pullback,
    beta_star_closed_form,
    decompose,
    genus_one_point_reduction,
    standard_alpha_spec,
    standard_beta_spec,
)
from .polyhedra import (
    HRep,
    ImpliesResult,
    LinearInequality,
    SystemsEqualResult,
    VRep,
    brute_force_vertices,
    fm_eliminate,
    h_to_v,
    implies,
    primitive,
    systems_equal,
    v_to_h,
)
from .cone import (
    ChainValues,
    MembershipVerdict,
    PartialVerdict,
    chain_values,
    generator_walk_bounds,
    is_nef_over_M1,
    mgn1_subcone_check,
    mgn2_subcone_check,
    proof_system,
    slice_system,
    slice_vertices,
    theorem_system,
    walk_check,
)
from .parse import parse_divisor

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "1.0.0"
