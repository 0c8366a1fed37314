//! Exact computations with spin class functions of twisted hyperoctahedral
//! wreath products, Schur Q-functions, twisted Heisenberg Fock spaces and
//! Q-lambda-ring operations.

pub mod cyclo;
pub mod error;
pub mod fock;
pub mod lambdaops;
pub mod linalg;
pub mod partitions;
pub mod series;
pub mod spinchar;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
