//! Exact computer algebra for partial differential operators with
//! rational-function coefficients.
//!
//! The crate has four layers:
//!
//! * [`poly`] — sparse multivariate polynomials over arbitrary-precision
//!   rationals, rational functions, gcd, and fraction-free linear algebra;
//! * [`operator`] — the noncommutative operator algebra (Leibniz
//!   composition, commutators, the action on exponential functions,
//!   conjugation);
//! * [`darboux`] — factorization witnesses, normalized eigenfunctions,
//!   kernel-function membership, and the structure ring of polynomials whose
//!   first partials vanish on a hyperbola;
//! * [`resultant`] — shifted differential resultants: the row matrix, its
//!   maximal minors, gcd accumulation, rank-based zero detection, the
//!   decomposition of minors over the generating operators, and symbol
//!   zeros at infinity.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything can be freely shared between threads.

pub mod darboux;
pub mod operator;
pub mod poly;
pub mod resultant;

#[cfg(test)]
pub(crate) mod testgen;

pub use operator::{
    conjugate_through, eval_poly_at_operators, solve_left_factor, DMono, DiffOp, ExpFunction,
    OpError,
};
pub use darboux::{
    build_example_k, isom_check, kernel_membership, normalized_eigenfunction, rlambda_decompose,
    rlambda_membership, verify_factorization, DarbouxError, DarbouxExample, EigenfunctionData,
    FactorizationWitness, SpectralConstraint,
};
pub use poly::{
    bareiss_det, matrix_rank_over_fraction_field, poly_gcd, poly_gcd_many, rat, ratio,
    reduce_mod_binomial, Monomial, MultiPoly, PolyError, RatFun, Rational, VarClass, VarId,
};
pub use resultant::{
    build_resultant_matrix, coeff_vector, dform_decomposition, differential_resultant,
    differential_resultant_of, homogenized_symbol_zero_check, minor_value, omega_basis,
    partial_resultants, resultant_rank, split_shift_content, verify_annihilation, MinorMode,
    MonomialBasis, PartialResultant, RankReport, ResultantError, ResultantKind, ResultantMatrix,
    ResultantMode, ResultantOutcome,
};
