//! Exact computations with theta and eta polynomials, Pieri rules, tableau
//! formulas and Stanley symmetric functions for the classical groups.

pub mod combinat;
pub mod freering;
pub mod pieri;
pub mod quotient;
pub mod series;
pub mod stanley;
pub mod tableaux;
pub mod verify;
pub mod error;

pub use error::{Error, Result};
