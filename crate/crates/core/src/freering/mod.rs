//! Polynomials in the generator families and the raising-operator engine.

mod element;
mod json;
mod raising;

pub use element::{rat, Family, FreeElement, Generator, Monomial};
pub use raising::{
    determinant_formula, eta_level0, eta_plain_sum, eta_spec, eta_star_expand, expand_sequences, pfaffian_formula,
    raising_expand, theta_polynomial, theta_spec, theta_spec_padded, EvaluationRule, RaisingOperatorSpec,
};
