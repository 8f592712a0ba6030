//! Continuous Meixner-Pollaczek polynomials: hypergeometric and
//! recursive evaluation, normalized weight, large-n asymptotics, and
//! the scattering amplitude / phase-shift pair.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::{MPParams, PolySequence};
use crate::error::{Error, Result};
use crate::specfun::{hyp2f1_terminating, ln_gamma_complex, ln_gamma_real};

fn ln_gamma_mu_iz(p: &MPParams, z: f64) -> Complex64 {
    ln_gamma_complex(Complex64::new(p.mu(), z)).expect("Re(mu + iz) = mu > 0")
}

/// P_0..P_nmax at argument z through the three-term recursion
///
///   sqrt((n+1)(n+2 mu)) P_{n+1}
///       = 2 (z sin th + (n+mu) cos th) P_n - sqrt(n(n+2 mu - 1)) P_{n-1}
///
/// with P_0 = 1 (the n = 0 instance has no P_{n-1} term).
pub fn mp_eval_recursion(p: &MPParams, z: f64, nmax: usize) -> PolySequence {
    let (mu, theta) = (p.mu(), p.theta());
    let (sin_t, cos_t) = theta.sin_cos();
    let mut values = Vec::with_capacity(nmax + 1);
    values.push(1.0);
    let mut prev = 0.0;
    let mut cur = 1.0;
    for n in 0..nmax {
        let nf = n as f64;
        let next = (2.0 * (z * sin_t + (nf + mu) * cos_t) * cur
            - (nf * (nf + 2.0 * mu - 1.0)).sqrt() * prev)
            / ((nf + 1.0) * (nf + 2.0 * mu)).sqrt();
        values.push(next);
        prev = cur;
        cur = next;
    }
    PolySequence::from_values(values)
}

/// P_n at argument z through the hypergeometric definition
///
///   P_n = sqrt((2 mu)_n / n!) e^{i n th} 2F1(-n, mu + iz; 2 mu | 1 - e^{-2 i th})
///
/// evaluated in complex arithmetic. The value is real; the imaginary
/// part is asserted to be below 1e-9 (1 + |value|) and discarded.
pub fn mp_eval_hypergeometric(p: &MPParams, z: f64, n: usize) -> Result<f64> {
    let (mu, theta) = (p.mu(), p.theta());
    // sqrt((2 mu)_n / n!) through logs so large n cannot overflow
    let ln_ratio = ln_gamma_real(2.0 * mu + n as f64)?
        - ln_gamma_real(2.0 * mu)?
        - ln_gamma_real(n as f64 + 1.0)?;
    let prefactor = (0.5 * ln_ratio).exp();
    let phase = Complex64::from_polar(1.0, n as f64 * theta);
    let x = Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, -2.0 * theta);
    let f = hyp2f1_terminating(n, Complex64::new(mu, z), Complex64::new(2.0 * mu, 0.0), x)?;
    let value = prefactor * phase * f;
    if value.im.abs() > 1e-9 * (1.0 + value.re.abs()) {
        return Err(Error::Inconsistent(format!(
            "mp_eval_hypergeometric: imaginary part {:e} too large at n = {n}, z = {z}",
            value.im
        )));
    }
    Ok(value.re)
}

/// ln of the normalized weight
///
///   rho(z) = (2 sin th)^{2 mu} / (2 pi Gamma(2 mu))
///            * e^{(2 th - pi) z} |Gamma(mu + iz)|^2
pub fn mp_ln_weight(p: &MPParams, z: f64) -> f64 {
    let (mu, theta) = (p.mu(), p.theta());
    let lg = ln_gamma_mu_iz(p, z);
    2.0 * mu * (2.0 * theta.sin()).ln() + (2.0 * theta - PI) * z + 2.0 * lg.re
        - (2.0 * PI).ln()
        - ln_gamma_real(2.0 * mu).expect("2 mu > 0")
}

/// The normalized weight itself; underflows to 0 for large |z|.
pub fn mp_weight(p: &MPParams, z: f64) -> f64 {
    mp_ln_weight(p, z).exp()
}

/// Envelope of the large-n oscillation: the n-dependent scattering
/// amplitude A(z) / sqrt(n).
pub fn mp_asymptotic_envelope(p: &MPParams, z: f64, n: usize) -> f64 {
    debug_assert!(n >= 1);
    mp_scattering(p, z).0 / (n as f64).sqrt()
}

/// Large-n asymptotic form of P_n(z):
///
///   P_n ~ A(z) n^{-1/2} cos[n th - z ln(2 n sin th)
///                            + mu th - mu pi/2 + arg Gamma(mu + iz)]
///
/// with A(z) the scattering amplitude. The relative (envelope
/// normalized) error is O(1/n).
pub fn mp_asymptotic(p: &MPParams, z: f64, n: usize) -> f64 {
    debug_assert!(n >= 1);
    let (mu, theta) = (p.mu(), p.theta());
    let lg = ln_gamma_mu_iz(p, z);
    let nf = n as f64;
    let phase = nf * theta - z * (2.0 * nf * theta.sin()).ln() + mu * theta - 0.5 * mu * PI + lg.im;
    mp_asymptotic_envelope(p, z, n) * phase.cos()
}

/// Scattering amplitude and phase shift of the family:
///
///   A(z) = 2 sqrt(Gamma(2 mu)) e^{(pi/2 - th) z}
///          / ((2 sin th)^mu |Gamma(mu + iz)|),
///   delta(z) = arg Gamma(mu + iz).
///
/// A(z) is exactly the coefficient of n^{-1/2} cos(...) in the large-n
/// form above; it satisfies rho(z) A(z)^2 = 2/pi.
pub fn mp_scattering(p: &MPParams, z: f64) -> (f64, f64) {
    let (mu, theta) = (p.mu(), p.theta());
    let lg = ln_gamma_mu_iz(p, z);
    let ln_amp = 2.0f64.ln() + 0.5 * ln_gamma_real(2.0 * mu).expect("2 mu > 0")
        + (0.5 * PI - theta) * z
        - mu * (2.0 * theta.sin()).ln()
        - lg.re;
    (ln_amp.exp(), lg.im)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::integrate;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    fn params(mu: f64, theta: f64) -> MPParams {
        MPParams::new(mu, theta).unwrap()
    }

    #[test]
    fn parameter_validation() {
        assert!(MPParams::new(0.0, 1.0).is_err());
        assert!(MPParams::new(-1.0, 1.0).is_err());
        assert!(MPParams::new(1.0, 0.0).is_err());
        assert!(MPParams::new(1.0, PI).is_err());
        assert!(MPParams::new(1.0, 1.0).is_ok());
    }

    #[test]
    fn recursion_degree_zero() {
        let p = params(1.1, PI / 3.0);
        let seq = mp_eval_recursion(&p, 0.7, 0);
        assert_eq!(seq.values(), &[1.0]);
    }

    #[test]
    fn first_degree_closed_form() {
        // P_1 = sqrt(2/mu) (z sin th + mu cos th)
        for &(mu, theta, z) in &[(1.1, PI / 3.0, 0.7), (0.4, 1.9, -2.3), (3.2, 0.3, 0.0)] {
            let p = params(mu, theta);
            let seq = mp_eval_recursion(&p, z, 1);
            let want = (2.0 / mu).sqrt() * (z * theta.sin() + mu * theta.cos());
            assert!((seq[1] - want).abs() <= 1e-14 * want.abs().max(1.0));
        }
    }

    #[test]
    fn parity_zero_at_origin() {
        // z sin th + mu cos th = 0 at z = 0, th = pi/2 (up to the
        // rounding of cos(pi/2) itself)
        let p = params(1.3, PI / 2.0);
        let seq = mp_eval_recursion(&p, 0.0, 1);
        assert!(seq[1].abs() < 1e-15);
    }

    #[test]
    fn hypergeometric_degree_zero_and_one() {
        let p = params(1.0, PI / 2.0);
        assert_eq!(mp_eval_hypergeometric(&p, 1.0, 0).unwrap(), 1.0);
        // n = 1, mu = 1, th = pi/2, z = 1: sqrt(2/1) (1*1 + 1*0) = sqrt 2
        let got = mp_eval_hypergeometric(&p, 1.0, 1).unwrap();
        assert!((got - 2.0f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn dual_paths_agree() {
        let p = params(1.1, PI / 3.0);
        let seq = mp_eval_recursion(&p, 0.7, 15);
        for n in 0..=15 {
            let hyp = mp_eval_hypergeometric(&p, 0.7, n).unwrap();
            assert!(
                (hyp - seq[n]).abs() <= 1e-10 * seq[n].abs().max(1.0),
                "n = {n}: {hyp} vs {}",
                seq[n]
            );
        }
    }

    #[test]
    fn weight_positive_and_normalized() {
        let p = params(1.1, PI / 3.0);
        assert!(mp_weight(&p, 0.0) > 0.0);
        let total = integrate(|z| mp_weight(&p, z), -60.0, 60.0, 0.5, 32).unwrap();
        assert!((total - 1.0).abs() < 1e-10, "integral = {total}");
    }

    #[test]
    fn weight_matches_gamma_identity_at_mu_one() {
        // rho(z; mu=1, th=pi/2) = (2/pi) |Gamma(1+iz)|^2 = 2 z / sinh(pi z)
        let p = params(1.0, PI / 2.0);
        for &z in &[0.3, 1.0, 2.5] {
            let got = mp_weight(&p, z);
            let want = 2.0 * z / (PI * z).sinh();
            assert!((got - want).abs() <= 1e-12 * want);
        }
    }

    #[test]
    fn weight_underflows_cleanly() {
        let p = params(1.1, PI / 3.0);
        let w = mp_weight(&p, 500.0);
        assert_eq!(w, 0.0);
        assert!(mp_weight(&p, -500.0) == 0.0);
    }

    #[test]
    fn asymptotic_envelope_at_reference_point() {
        // z = 0, mu = 1, th = pi/2: amplitude 2 sqrt(Gamma 2)/(2 * 1) = 1,
        // so the envelope is n^{-1/2}.
        let p = params(1.0, PI / 2.0);
        for &n in &[10usize, 100, 10_000] {
            let env = mp_asymptotic_envelope(&p, 0.0, n);
            assert!((env - (n as f64).powf(-0.5)).abs() < 1e-14);
        }
    }

    #[test]
    fn asymptotic_matches_recursion_at_large_n() {
        let p = params(1.1, PI / 3.0);
        for &z in &[0.5, 1.0] {
            let n = 10_000;
            let seq = mp_eval_recursion(&p, z, n);
            let asym = mp_asymptotic(&p, z, n);
            let env = mp_asymptotic_envelope(&p, z, n);
            let dev = (seq[n] - asym).abs() / env;
            assert!(dev <= 1e-2, "z = {z}: envelope-normalized deviation {dev:e}");
        }
    }

    #[test]
    fn asymptotic_error_decreases_on_average() {
        // averaged over a phase-sampling window, the envelope-normalized
        // error at 2n is below the error at n
        let p = params(1.1, PI / 3.0);
        let z = 0.5;
        let window = 64usize;
        let avg_dev = |n0: usize| -> f64 {
            let seq = mp_eval_recursion(&p, z, n0 + window);
            let mut s = 0.0;
            for n in n0..n0 + window {
                s += (seq[n] - mp_asymptotic(&p, z, n)).abs() / mp_asymptotic_envelope(&p, z, n);
            }
            s / window as f64
        };
        let mut n = 1000usize;
        let mut prev = avg_dev(n);
        for _ in 0..3 {
            n *= 2;
            let cur = avg_dev(n);
            assert!(cur < prev, "avg deviation did not shrink: {prev:e} -> {cur:e} at n = {n}");
            prev = cur;
        }
    }

    #[test]
    fn asymptotic_bounded_by_envelope() {
        let p = params(0.8, 1.2);
        for n in (100..2000).step_by(137) {
            let a = mp_asymptotic(&p, 0.9, n).abs();
            let env = mp_asymptotic_envelope(&p, 0.9, n);
            assert!(a <= env * (1.0 + 1e-12));
        }
    }

    #[test]
    fn scattering_phase_reference_values() {
        // Gamma(mu) is real positive at z = 0
        for &mu in &[0.3, 1.0, 4.2] {
            let p = params(mu, 1.0);
            assert_eq!(mp_scattering(&p, 0.0).1, 0.0);
        }
        // amplitude at z = 0, mu = 1, th = pi/2 is 2/(2*1*1) = 1
        let p = params(1.0, PI / 2.0);
        assert!((mp_scattering(&p, 0.0).0 - 1.0).abs() < 1e-14);
        // arg Gamma(1+i) against the independent digamma series
        let mut series = -EULER_GAMMA;
        for k in 1..200_000 {
            let kf = k as f64;
            series += 1.0 / kf - (1.0 / kf).atan();
        }
        let got = mp_scattering(&p, 1.0).1;
        assert!((got - series).abs() < 1e-10);
    }

    #[test]
    fn scattering_phase_is_odd_in_z() {
        let p = params(1.7, 0.9);
        for &z in &[0.25, 1.0, 3.5] {
            let plus = mp_scattering(&p, z).1;
            let minus = mp_scattering(&p, -z).1;
            assert!((plus + minus).abs() < 1e-13);
        }
    }

    #[test]
    fn amplitude_squares_against_weight() {
        // rho(z) A(z)^2 = 2/pi links the envelope to the weight
        let p = params(1.1, PI / 3.0);
        for &z in &[-2.0, 0.0, 0.5, 3.0] {
            let (a, _) = mp_scattering(&p, z);
            let got = mp_weight(&p, z) * a * a;
            assert!((got - 2.0 / PI).abs() < 1e-13);
        }
    }
}
