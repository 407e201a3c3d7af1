//! Exact q-analogues of weight multiplicities for the classical root systems.

pub mod cli;
pub mod crystal;
pub mod error;
pub mod kostka;
pub mod lrbranch;
pub mod partfn;
pub mod qmult;
pub mod qpoly;
pub mod table;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use qpoly::LaurentPoly;
