//! Discrete families: Meixner polynomials on the non-negative integers
//! and the finite Krawtchouk family, with their normalized weights and
//! recursion-residual certificates.

use num_complex::Complex64;

use super::{KrawtchoukParams, MeixnerParams, PolySequence};
use crate::error::{Error, Result};
use crate::specfun::{hyp2f1_terminating, ln_gamma_real};

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// M_0..M_nmax at integer argument m:
///
///   M_n(m; beta) = sqrt((2 mu)_n / n!) beta^{n/2}
///                  2F1(-n, -m; 2 mu | 1 - 1/beta)
///
/// The returned sequence satisfies the discrete three-term recursion
/// (see `meixner_recursion_residual`).
pub fn meixner_eval(p: &MeixnerParams, m: usize, nmax: usize) -> PolySequence {
    let (mu, beta) = (p.mu(), p.beta());
    let x = real(1.0 - 1.0 / beta);
    let ln_gamma_2mu = ln_gamma_real(2.0 * mu).expect("2 mu > 0");
    let mut values = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        let nf = n as f64;
        let ln_pref = 0.5
            * (ln_gamma_real(2.0 * mu + nf).expect("positive argument") - ln_gamma_2mu
                - ln_gamma_real(nf + 1.0).expect("positive argument")
                + nf * beta.ln());
        let f = hyp2f1_terminating(n, real(-(m as f64)), real(2.0 * mu), x)
            .expect("2 mu > 0 is never a non-positive integer");
        debug_assert_eq!(f.im, 0.0);
        values.push(ln_pref.exp() * f.re);
    }
    PolySequence::from_values(values)
}

/// Normalized Meixner weight
///
///   w_m = (1 - beta)^{2 mu} beta^m Gamma(m + 2 mu) / (Gamma(2 mu) m!)
///
/// which satisfies sum_m w_m = 1 by the negative binomial series.
pub fn meixner_weight(p: &MeixnerParams, m: usize) -> f64 {
    let (mu, beta) = (p.mu(), p.beta());
    let mf = m as f64;
    let ln_w = 2.0 * mu * (1.0 - beta).ln()
        + mf * beta.ln()
        + ln_gamma_real(mf + 2.0 * mu).expect("positive argument")
        - ln_gamma_real(2.0 * mu).expect("2 mu > 0")
        - ln_gamma_real(mf + 1.0).expect("positive argument");
    ln_w.exp()
}

/// Max absolute residual of the Meixner three-term recursion
///
///   (beta - 1) m M_n = -[n (1 + beta) + 2 mu beta] M_n
///                      + sqrt(n (n + 2 mu - 1) beta) M_{n-1}
///                      + sqrt((n+1)(n + 2 mu) beta) M_{n+1}
///
/// over n = 0..nmax-1, with the hypergeometric values substituted in.
pub fn meixner_recursion_residual(p: &MeixnerParams, m: usize, nmax: usize) -> f64 {
    let (mu, beta) = (p.mu(), p.beta());
    let seq = meixner_eval(p, m, nmax);
    let mut worst = 0.0f64;
    for n in 0..nmax {
        let nf = n as f64;
        let prev = if n == 0 { 0.0 } else { seq[n - 1] };
        let lhs = (beta - 1.0) * m as f64 * seq[n];
        let rhs = -(nf * (1.0 + beta) + 2.0 * mu * beta) * seq[n]
            + (nf * (nf + 2.0 * mu - 1.0) * beta).sqrt() * prev
            + ((nf + 1.0) * (nf + 2.0 * mu) * beta).sqrt() * seq[n + 1];
        worst = worst.max((lhs - rhs).abs());
    }
    worst
}

fn check_kraw_index(p: &KrawtchoukParams, label: &str, i: usize) -> Result<()> {
    if i > p.n_max() {
        return Err(Error::Domain(format!(
            "krawtchouk: {label} = {i} outside [0, {}]",
            p.n_max()
        )));
    }
    Ok(())
}

/// Binomial coefficient C(n, k). The multiplicative form keeps small
/// cases near exact; beyond the f64 overflow range the log-gamma route
/// takes over.
fn binomial(n: usize, k: usize) -> f64 {
    debug_assert!(k <= n);
    let k = k.min(n - k);
    if n > 500 {
        let (nf, kf) = (n as f64, k as f64);
        return (ln_gamma_real(nf + 1.0).expect("positive")
            - ln_gamma_real(kf + 1.0).expect("positive")
            - ln_gamma_real(nf - kf + 1.0).expect("positive"))
        .exp();
    }
    let mut c = 1.0;
    for j in 1..=k {
        c = c * (n - k + j) as f64 / j as f64;
    }
    c
}

/// q^{n/2} with an integer power and at most one square root.
fn half_power(q: f64, n: usize) -> f64 {
    let p = q.powi((n / 2) as i32);
    if n % 2 == 1 {
        p * q.sqrt()
    } else {
        p
    }
}

/// Normalized Krawtchouk polynomial
///
///   K_n(m; gamma) = sqrt(C(N, n)) (gamma / (1 - gamma))^{n/2}
///                   2F1(-n, -m; -N | 1/gamma)
///
/// for 0 <= n, m <= N. The hypergeometric sum hits the degenerate
/// denominator c = -N; the term-ratio evaluation cancels the shared
/// zero structure of (-n)_k and (-N)_k factor by factor.
pub fn krawtchouk_eval(p: &KrawtchoukParams, m: usize, n: usize) -> Result<f64> {
    check_kraw_index(p, "argument m", m)?;
    check_kraw_index(p, "degree n", n)?;
    let nn = p.n_max() as f64;
    let gamma = p.gamma();
    let pref = binomial(p.n_max(), n).sqrt() * half_power(gamma / (1.0 - gamma), n);
    let f = hyp2f1_terminating(n, real(-(m as f64)), real(-nn), real(1.0 / gamma))?;
    debug_assert_eq!(f.im, 0.0);
    Ok(pref * f.re)
}

/// Binomial weight C(N, m) gamma^m (1 - gamma)^{N-m}; sums to one over
/// m = 0..N by the binomial theorem.
pub fn krawtchouk_weight(p: &KrawtchoukParams, m: usize) -> Result<f64> {
    check_kraw_index(p, "argument m", m)?;
    let gamma = p.gamma();
    Ok(binomial(p.n_max(), m)
        * gamma.powi(m as i32)
        * (1.0 - gamma).powi((p.n_max() - m) as i32))
}

/// Max absolute residual of the Krawtchouk three-term recursion
///
///   m K_n = [N gamma + n (1 - 2 gamma)] K_n
///           - sqrt(n (N - n + 1) gamma (1 - gamma)) K_{n-1}
///           - sqrt((n+1)(N - n) gamma (1 - gamma)) K_{n+1}
///
/// over all 0 <= n, m <= N.
pub fn krawtchouk_recursion_residual(p: &KrawtchoukParams) -> Result<f64> {
    let nn = p.n_max();
    let nnf = nn as f64;
    let gamma = p.gamma();
    let mut worst = 0.0f64;
    for m in 0..=nn {
        let values: Vec<f64> = (0..=nn)
            .map(|n| krawtchouk_eval(p, m, n))
            .collect::<Result<_>>()?;
        for n in 0..=nn {
            let nf = n as f64;
            let prev = if n == 0 { 0.0 } else { values[n - 1] };
            let next = if n == nn { 0.0 } else { values[n + 1] };
            // fused multiply-adds keep the residual rounding at the
            // level of the inputs' own representation error
            let mid = m as f64 - nnf * gamma - nf * (1.0 - 2.0 * gamma);
            let c_prev = (nf * (nnf - nf + 1.0) * gamma * (1.0 - gamma)).sqrt();
            let c_next = ((nf + 1.0) * (nnf - nf) * gamma * (1.0 - gamma)).sqrt();
            let r = mid.mul_add(values[n], c_prev.mul_add(prev, c_next * next));
            worst = worst.max(r.abs());
        }
    }
    Ok(worst)
}
