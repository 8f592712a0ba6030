//! The three orthogonal polynomial families carrying the system's
//! spectral information: the continuous Meixner-Pollaczek family on the
//! real line, its discrete Meixner counterpart on the non-negative
//! integers, and the finite Krawtchouk family. Each comes with dual
//! evaluation paths (hypergeometric definition and three-term
//! recursion), its normalized weight, and a Gram-matrix orthogonality
//! checker.

mod continuous;
mod discrete;
mod gram;

pub use continuous::{
    mp_asymptotic, mp_asymptotic_envelope, mp_eval_hypergeometric, mp_eval_recursion,
    mp_ln_weight, mp_scattering, mp_weight,
};
pub use discrete::{
    krawtchouk_eval, krawtchouk_recursion_residual, krawtchouk_weight, meixner_eval,
    meixner_recursion_residual, meixner_weight,
};
pub use gram::{
    gram_continuous, gram_discrete_krawtchouk, gram_discrete_meixner, GramReport, QuadratureSpec,
};

use crate::error::{Error, Result};

/// Parameters of the continuous Meixner-Pollaczek family: mu > 0 and
/// 0 < theta < pi.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MPParams {
    mu: f64,
    theta: f64,
}

impl MPParams {
    pub fn new(mu: f64, theta: f64) -> Result<Self> {
        if !(mu.is_finite() && mu > 0.0) {
            return Err(Error::Domain(format!("MPParams: mu must be > 0, got {mu}")));
        }
        if !(theta.is_finite() && theta > 0.0 && theta < std::f64::consts::PI) {
            return Err(Error::Domain(format!(
                "MPParams: theta must lie in (0, pi), got {theta}"
            )));
        }
        Ok(Self { mu, theta })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// Parameters of the discrete Meixner family: mu > 0 and beta = e^{-2 theta}
/// in (0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeixnerParams {
    mu: f64,
    beta: f64,
}

impl MeixnerParams {
    pub fn new(mu: f64, beta: f64) -> Result<Self> {
        if !(mu.is_finite() && mu > 0.0) {
            return Err(Error::Domain(format!(
                "MeixnerParams: mu must be > 0, got {mu}"
            )));
        }
        if !(beta.is_finite() && beta > 0.0 && beta < 1.0) {
            return Err(Error::Domain(format!(
                "MeixnerParams: beta must lie in (0, 1), got {beta}"
            )));
        }
        Ok(Self { mu, beta })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// Parameters of the finite Krawtchouk family on {0, ..., N} with
/// 0 < gamma < 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KrawtchoukParams {
    n_max: usize,
    gamma: f64,
}

impl KrawtchoukParams {
    pub fn new(n_max: usize, gamma: f64) -> Result<Self> {
        if !(gamma.is_finite() && gamma > 0.0 && gamma < 1.0) {
            return Err(Error::Domain(format!(
                "KrawtchoukParams: gamma must lie in (0, 1), got {gamma}"
            )));
        }
        Ok(Self { n_max, gamma })
    }

    /// The spectrum size N; degree and argument indices run 0..=N.
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// Polynomial values P_0..P_nmax at a fixed argument. All families are
/// normalized so that values[0] = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct PolySequence {
    values: Vec<f64>,
}

impl PolySequence {
    fn from_values(values: Vec<f64>) -> Self {
        debug_assert!(!values.is_empty() && values[0] == 1.0);
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl std::ops::Index<usize> for PolySequence {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.values[i]
    }
}
