//! NilCoxeter algebras, Stanley symmetric functions, transition trees and
//! Schubert polynomials.

pub mod nilcoxeter;
pub mod schubert;
pub mod trees;

pub use nilcoxeter::{
    graded_parts, mixed_stanley_all, mixed_stanley_full_product, nilcoxeter_mixed_stanley, schubert_a_by_monomials,
    Coefficient, NilCoxeterElement,
};
pub use trees::{stanley_coefficients, ShapeLabel, TransitionTree};
pub use schubert::{
    complete_flag_sum_a, complete_flag_sum_bc, flag_coefficients, is_minimal_coset_rep, schubert_a, schubert_a_product,
    schubert_poly,
};
