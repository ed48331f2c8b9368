//! Quotient rings, normal forms and basis conversion.

mod basis;
mod ring;

pub use basis::{
    basis_element, basis_element_monomials, basis_expand, eta_basis_expand, label_monomial, monomial_expansion,
    monomial_label, schur_basis_expand, theta_basis_expand, BasisExpansion, BasisKind, Label,
};
pub use ring::{normal_form, quotient_equal, RingDescriptor, REWRITE_CAP};
