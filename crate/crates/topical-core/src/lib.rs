//! Exact calculus over a top-enlarged idempotent semifield.
//!
//! The carrier is K̄ = K ∪ {⊤}, where K is either the max-plus rationals or
//! the two-element Boolean chain.  The enlargement carries two products (a
//! lower one where ε wins against ⊤ and an upper one where ⊤ wins against
//! ε), an order-reversing involution exchanging them, and a total
//! residuation.  On top of the scalars this crate builds:
//!
//! * free semimodules Kⁿ with join, scaling and vector residuation x/y;
//! * topical (increasing, multiplicative) and anti-topical functions, with
//!   checkers for the inequality characterizations of both classes;
//! * upper and lower conjugations of Fenchel–Moreau type for the couplings
//!   derived from x/y, with exactness-tagged results and biconjugates;
//! * polar sets of the level-set kind, bipolar membership with exact
//!   separation witnesses, and support sets of topical functions;
//! * an exhaustive verifier that sweeps every function on the Boolean cube
//!   (dimension ≤ 2) and confirms each implemented theorem, reporting any
//!   counterexample found.
//!
//! Everything is exact: finite values are arbitrary-precision rationals and
//! no comparison is ever approximate.  The crate is `no_std` (it allocates
//! but performs no IO); serialization and the command-line driver live in
//! the companion crate.

#![no_std]

extern crate alloc;

pub mod conjugation;
pub mod error;
pub mod function;
pub mod oracle;
pub mod polar;
pub mod scalar;
pub mod support;
pub mod vector;

pub use conjugation::{
    biconjugate_phi, biconjugate_phi_sampled, check_tantibiconj, conjugate_phi,
    conjugate_phi_sampled, conjugate_psi, conjugate_psi_sampled, conjugate_reflected,
    conjugate_reflected_sampled, lower_conjugate_phi, lower_conjugate_phi_sampled,
    lower_conjugate_psi, lower_conjugate_psi_sampled, ConjugateValue, CouplingKind, Exactness,
    FixedPointReport,
};
pub use error::{Error, Result};
pub use function::{
    check_anti_topical, check_topical, classify_majorant_law, classify_minorant_law,
    default_lambda_sample, is_anti_topical_on, is_topical_on, s_yd, sbar_yd, CheckOutcome,
    Counterexample, FinGenTopicalFn, FnHandle, FnShape, MajorantClass, MinorantClass, ProbeSet,
    Strength, TabulatedFn, Verdict, MAX_EXHAUSTIVE_DIM,
};
pub use oracle::{
    census, enumerate_functions, verify, verify_all, Census, TheoremId, VerificationReport,
    VerificationResult,
};
pub use polar::{
    bar_polar_membership, bipolar_membership, bipolar_membership_on, dual_polar_membership,
    is_downward, is_upward, polar_membership, support_function, BipolarResult, FiniteSet,
    SeparationWitness,
};
pub use scalar::{chain_carrier, ExtendedScalar, Rational, SemifieldKind};
pub use support::{
    phi_subdiff_membership, supp_at_point_x, supp_at_point_xk, supp_membership, supp_reconstruct,
};
pub use vector::{boolean_cube, min_plus_coupling, Vector};
