//! The cyclotomic Hecke algebra `H(m,1,n)`.
//!
//! Generators `tau, sigma_1, ..., sigma_{n-1}` satisfy the braid relations,
//! `tau sigma_1 tau sigma_1 = sigma_1 tau sigma_1 tau`, `tau sigma_i = sigma_i tau`
//! for `i > 1`, `sigma_i^2 = (q - q^-1) sigma_i + 1` and
//! `(tau - v_1)...(tau - v_m) = 0`. Elements are stored in the tower basis
//! described on [`HeckeAlgebra`]; multiplication is exact.

mod algebra;
mod baxter;
mod element;
mod polynomial;
mod validate;

pub use algebra::{Generator, HeckeAlgebra};
pub use baxter::{
    baxter_coefficient, baxterized_sigma, frak_a, inversion_check, inversion_scalar,
    reflection_identity_check, reflection_sides, shifted_generator, tau_rho, tau_rho_identity_holds,
    tau_rho_polynomial, yang_baxter_check, yang_baxter_sides,
};
pub use element::Element;
pub use polynomial::AlgebraPolynomial;
pub use validate::{validate_presentation, PresentationReport};
