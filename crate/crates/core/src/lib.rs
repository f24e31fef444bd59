//! Exact computer algebra for the quantum Clifford superalgebra
//! Cliff_q(lambda) attached to the queer Lie superalgebra q(n).
//!
//! The crate provides:
//! - exact arithmetic in towers of quadratic extensions over cyclotomic
//!   fields, and rational functions in q over them ([`tower`], [`ratfunc`]);
//! - the 2n x 2n matrix realization of q(n) and a verifier for its
//!   defining relations ([`qn`]);
//! - Cliff_q(lambda) basis arithmetic and the classification of its simple
//!   modules ([`clifford`]);
//! - the ternary-conic solver, Witt decomposition, and explicit simple
//!   module matrices ([`witt`]);
//! - weight combinatorics and the generic character formula
//!   ([`characters`]);
//! - the q -> 1 degeneration suite ([`limit`]).

pub mod characters;
pub mod clifford;
pub mod cyclotomic;
pub mod qn;
pub mod ratfunc;
pub mod error;
pub mod example;
pub mod limit;
pub mod matrix;
pub mod poly;
pub mod pretty;
pub mod tower;
pub mod weights;
pub mod witt;

pub use error::{Error, Result};
pub use poly::{Coeff, Poly};
pub use tower::{embed, sqrt_in_tower, sqrt_or_adjoin, unify, FieldElement, Tower};
