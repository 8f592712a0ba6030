//! Numerical core for a quantum system built on Meixner-Pollaczek
//! orthogonal polynomials: special functions, the three polynomial
//! families with weights and orthogonality checkers, tridiagonal
//! eigensolvers, and spectrum / wavefunction reconstruction.

pub mod error;
pub mod linalg;
pub mod polys;
pub mod quad;
pub mod specfun;

pub use error::{Error, Result};
pub use num_complex::Complex64;
