//! Exact structured linear algebra over the Gaussian rationals ℚ(i).
//!
//! The crate classifies Hamiltonian and skew-Hamiltonian matrices up to
//! symplectic similarity and produces symplectic (skew-)involutions `g` with
//! `g·X·g⁻¹ = −X`, each verified by exact arithmetic.
//!
//! ```
//! use spreal_core::{reality, Matrix};
//!
//! let x = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
//! let cert = reality::skew_reverser(&x).unwrap();
//! assert!(cert.checks.all());
//! ```

pub mod batch;
pub mod canonical;
pub mod corpus;
pub mod error;
pub mod field;
pub mod gaussint;
pub mod jordan;
pub mod matrix;
pub mod poly;
pub mod random;
pub mod reality;
pub mod skew_hamiltonian;
pub mod structure;

pub use error::{Error, Result};
pub use field::{GaussianRational, Rational};
pub use matrix::Matrix;
