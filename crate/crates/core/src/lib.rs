//! Hyperelliptic integrals reduced to complete elliptic integrals, evaluated
//! alongside Lauricella `F_D` representations and checked against
//! independent quadrature.

pub mod cli;
pub mod elliptic;
pub mod error;
pub mod formulae;
pub mod gamma;
pub mod lauricella;
pub mod quadrature;
pub mod reduction;
pub mod singular;
pub mod verify;

pub use error::{Error, Result};
