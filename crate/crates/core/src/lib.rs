//! Polynomial identities of a five-dimensional upper triangular algebra and
//! its graded, involution and graded-involution variants.

pub mod algebra;
pub mod cli;
pub mod consequence;
pub mod error;
pub mod free;
pub mod gradings;
pub mod identity;
pub mod linalg;
pub mod multilinear;
pub mod parse;
pub mod rational;
pub mod representation;
pub mod theorems;
pub mod verify;

pub use algebra::{AlgebraSpec, Element};
pub use error::{Error, Result};
pub use free::{Kind, Mode, Monomial, Polynomial, Variable};
pub use rational::Rational;
