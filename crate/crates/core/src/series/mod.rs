//! Truncated power series in the z- and x-variables, and the substitution
//! oracles that realize theta and eta polynomials as symmetric functions.

pub mod bialternant;
pub mod generators;
pub mod powersum;
pub mod symmetric;
pub mod truncated;
pub mod weyl;

pub use bialternant::{alternant, bialternant_schur, grassmannian_alternant_quotient, x_polynomial_series};
pub use generators::{
    eta_oracle, eta_symmetric, generator_series, p_tilde, q_tilde, schur_oracle, substitute_eta, substitute_theta,
    theta_oracle, theta_symmetric, Alphabet, Which,
};
pub use powersum::PowerSumSeries;
pub use symmetric::SymmetricSeries;
pub use truncated::TruncatedSeries;
pub use weyl::{alternating_quotient_check, weyl_action, GammaModel};
