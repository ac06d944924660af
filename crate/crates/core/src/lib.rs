//! Homomorphisms from graded Specht modules into hook Specht modules over
//! cyclotomic KLR algebras of type `A^(1)_{e-1}`.
//!
//! Two independent routes are provided. [`hom::bruteforce_hom`] realizes the
//! hook module explicitly and solves the Specht relations as a linear system;
//! [`hom::classify_hom`] reads the answer off the shape of `mu` and a binomial
//! gcd. The two are expected to agree on every input.

pub mod arith;
pub mod combinatorics;
pub mod error;
pub mod hom;
pub mod hook;
pub mod klr;
pub mod linalg;
pub mod presentation;
pub mod shuffles;
pub mod sweep;

pub use error::{Error, Result};
