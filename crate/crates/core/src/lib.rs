//! Exact computations with graded affine Hecke algebras attached to the
//! classical real groups `GL(n,R)`, `U(p,q)`, `Sp(2n,R)` and `O(p,q)`, and
//! with the tensor-space model of the functor from Harish-Chandra modules to
//! Hecke modules.

pub mod enveloping;
pub mod error;
pub mod exact_kernel;
pub mod hecke_algebra;
pub mod lie_models;
pub mod principal_series;
pub mod report;
pub mod root_data;
pub mod tensor_model;

pub use error::{Error, Result};
pub use exact_kernel::{ExactMatrix, Field, GaussRational, NuPoly, Rational, Ring, Signature};
