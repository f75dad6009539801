//! Primitive idempotents of `H(m,1,n)`.
//!
//! Two independent constructions are provided. [`Oracle`] multiplies out
//! the Jucys-Murphy separating factors tableau by tableau. The fusion
//! procedure ([`fusion_idempotent`]) evaluates the product
//! `Phi = phi_N ... phi_1` of Baxterized factors at the contents of the
//! tableau, one spectral variable at a time: stage `k` forms
//! `phi_k(c_1, ..., c_{k-1}, u) A_{k-1}` as a rational function of the single
//! variable `u` with linear denominators and takes its value at `u = c_k`.

mod checks;
mod identities;
mod oracle;
mod procedure;
mod rational;

pub use checks::{is_complete, orthogonality_failures, pairwise_failures};
pub use identities::{
    f_t_closed_form, f_t_rational, partial_ratio, printed_example_m2, spectral_identity_check, schur_ratio, schur_ratio_check,
    PartialRatio, SchurRatio,
};
pub use oracle::{eigenvalue_failures, jm_idempotent, Oracle};
pub use procedure::{apply_phi, fusion_idempotent, fusion_run, phi_factor, FusionRun, FusionStage};
pub use rational::{AlgebraRationalFunction, FactoredRatFunc};
