//! Two parallel function theories built on SL(2,R): classical complex
//! analysis on the unit disk (discrete-series side) and a hyperbolic function
//! theory on the double-cover unit disk in R^{1,1} (principal-series side).
//!
//! The crate provides the Cl(1,1) algebra substrate, the three group
//! realizations with their Moebius actions, the concrete unitary
//! representations with coherent states, Cauchy/Bergman/principal-value
//! integral transforms, invariant Dirac and Laplace operators, and the
//! discrete and continuous Taylor decompositions, each with machine-checkable
//! identities.

pub mod boundary;
pub mod clifford;
pub mod error;
pub mod moebius;
pub mod operators;
pub mod representations;
pub mod sampling;
pub mod taylor;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
