//! Gram-matrix orthogonality checkers for the three families. The
//! continuous family is integrated with composite Gauss-Legendre panels
//! on a symmetric interval whose cutoff is scanned from the weight
//! decay; the discrete families are summed directly.

use super::{
    krawtchouk_eval, krawtchouk_weight, meixner_eval, meixner_weight, mp_eval_recursion,
    mp_ln_weight, KrawtchoukParams, MPParams, MeixnerParams,
};
use crate::error::{Error, Result};
use crate::quad::{gauss_legendre, panel_nodes};

/// Settings for the continuous orthogonality quadrature.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec {
    /// Width of each Gauss-Legendre panel.
    pub panel_width: f64,
    /// Nodes per panel.
    pub nodes_per_panel: usize,
    /// The cutoff Z is grown until rho(+-Z) * max_n P_n(+-Z)^2 drops
    /// below this threshold.
    pub tail_eps: f64,
    /// When set, the integral is recomputed on a refined rule and the
    /// entrywise difference must stay below this tolerance.
    pub target_tol: Option<f64>,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            panel_width: 0.5,
            nodes_per_panel: 32,
            tail_eps: 1e-16,
            target_tol: None,
        }
    }
}

/// A Gram matrix together with its deviation from the identity and the
/// knobs that produced it.
#[derive(Debug, Clone)]
pub struct GramReport {
    /// Row-major (nmax+1) x (nmax+1) matrix of inner products.
    pub matrix: Vec<Vec<f64>>,
    /// max_{n,m} |G_{nm} - delta_{nm}|
    pub max_deviation: f64,
    /// Integration cutoff Z for the continuous family.
    pub cutoff: Option<f64>,
    /// Entrywise difference against a once-refined quadrature, when a
    /// target tolerance was requested.
    pub refinement_estimate: Option<f64>,
    /// Number of terms summed for the (infinite) discrete family.
    pub truncation_terms: Option<usize>,
}

fn max_identity_deviation(g: &[Vec<f64>]) -> f64 {
    let mut worst = 0.0f64;
    for (n, row) in g.iter().enumerate() {
        for (m, v) in row.iter().enumerate() {
            let target = if n == m { 1.0 } else { 0.0 };
            worst = worst.max((v - target).abs());
        }
    }
    worst
}

/// Scan outward until the weighted squared polynomial values at both
/// endpoints fall below `tail_eps`.
fn choose_cutoff(p: &MPParams, nmax: usize, tail_eps: f64) -> f64 {
    let ln_eps = tail_eps.ln();
    let small_enough = |z: f64| -> bool {
        let seq = mp_eval_recursion(p, z, nmax);
        let max_p = seq
            .values()
            .iter()
            .fold(0.0f64, |a, b| a.max(b.abs()))
            .max(1.0);
        mp_ln_weight(p, z) + 2.0 * max_p.ln() < ln_eps
    };
    let mut z = 5.0;
    while z < 400.0 && !(small_enough(z) && small_enough(-z)) {
        z += 2.0;
    }
    z
}

/// Per-panel contributions to the Gram matrix, in panel order. Entries
/// are flat (nmax+1)^2 row-major blocks; summing them in any order must
/// agree to rounding, which the tests exercise.
fn panel_contributions(
    p: &MPParams,
    nmax: usize,
    cutoff: f64,
    panel_width: f64,
    nodes_per_panel: usize,
) -> Result<Vec<Vec<f64>>> {
    let rule = gauss_legendre(nodes_per_panel)?;
    let k = ((2.0 * cutoff / panel_width).ceil() as usize).max(1);
    let w = 2.0 * cutoff / k as f64;
    let dim = nmax + 1;
    let mut panels = Vec::with_capacity(k);
    for i in 0..k {
        let lo = -cutoff + i as f64 * w;
        let mut block = vec![0.0; dim * dim];
        for (z, wt) in panel_nodes(&rule, lo, lo + w) {
            let rho = mp_ln_weight(p, z).exp();
            if rho == 0.0 {
                continue;
            }
            let seq = mp_eval_recursion(p, z, nmax);
            let vals = seq.values();
            for n in 0..dim {
                let c = wt * rho * vals[n];
                for m in n..dim {
                    block[n * dim + m] += c * vals[m];
                }
            }
        }
        panels.push(block);
    }
    Ok(panels)
}

fn assemble(panels: &[Vec<f64>], dim: usize) -> Vec<Vec<f64>> {
    let mut flat = vec![0.0; dim * dim];
    for block in panels {
        for (acc, v) in flat.iter_mut().zip(block) {
            *acc += v;
        }
    }
    let mut g = vec![vec![0.0; dim]; dim];
    for n in 0..dim {
        for m in n..dim {
            g[n][m] = flat[n * dim + m];
            g[m][n] = flat[n * dim + m];
        }
    }
    g
}

/// Gram matrix of the continuous family:
/// G_{nm} = int rho(z) P_n(z) P_m(z) dz over the real line.
pub fn gram_continuous(p: &MPParams, nmax: usize, quad: &QuadratureSpec) -> Result<GramReport> {
    let dim = nmax + 1;
    let cutoff = choose_cutoff(p, nmax, quad.tail_eps);
    let panels = panel_contributions(p, nmax, cutoff, quad.panel_width, quad.nodes_per_panel)?;
    let g = assemble(&panels, dim);

    let refinement_estimate = match quad.target_tol {
        None => None,
        Some(tol) => {
            let fine =
                panel_contributions(p, nmax, cutoff, quad.panel_width, 2 * quad.nodes_per_panel)?;
            let gf = assemble(&fine, dim);
            let mut est = 0.0f64;
            for n in 0..dim {
                for m in 0..dim {
                    est = est.max((g[n][m] - gf[n][m]).abs());
                }
            }
            if est > tol {
                return Err(Error::Accuracy {
                    requested: tol,
                    achieved: est,
                });
            }
            Some(est)
        }
    };

    Ok(GramReport {
        max_deviation: max_identity_deviation(&g),
        matrix: g,
        cutoff: Some(cutoff),
        refinement_estimate,
        truncation_terms: None,
    })
}

/// Gram matrix of the Meixner family from the truncated sum
/// G_{na} = sum_m w_m M_n(m) M_a(m), truncated once the weighted
/// squared values fall below 1e-18 (well under the 1e-14 tail target).
pub fn gram_discrete_meixner(p: &MeixnerParams, nmax: usize) -> GramReport {
    let dim = nmax + 1;
    let mut g = vec![vec![0.0; dim]; dim];
    let mut m = 0usize;
    let m_floor = 2 * nmax + 20;
    loop {
        let w = meixner_weight(p, m);
        let seq = meixner_eval(p, m, nmax);
        let vals = seq.values();
        for n in 0..dim {
            for a in n..dim {
                g[n][a] += w * vals[n] * vals[a];
            }
        }
        let max_sq = vals.iter().fold(0.0f64, |acc, v| acc.max(v * v));
        if m >= m_floor && w * max_sq < 1e-18 {
            break;
        }
        m += 1;
        if m > 100_000 {
            break;
        }
    }
    for n in 0..dim {
        for a in (n + 1)..dim {
            g[a][n] = g[n][a];
        }
    }
    GramReport {
        max_deviation: max_identity_deviation(&g),
        matrix: g,
        cutoff: None,
        refinement_estimate: None,
        truncation_terms: Some(m + 1),
    }
}

/// Gram matrix of the Krawtchouk family from the exact finite sum over
/// m = 0..N.
pub fn gram_discrete_krawtchouk(p: &KrawtchoukParams) -> GramReport {
    let dim = p.n_max() + 1;
    let mut g = vec![vec![0.0; dim]; dim];
    for m in 0..dim {
        let w = krawtchouk_weight(p, m).expect("m in range by construction");
        let vals: Vec<f64> = (0..dim)
            .map(|n| krawtchouk_eval(p, m, n).expect("indices in range by construction"))
            .collect();
        for n in 0..dim {
            for a in n..dim {
                g[n][a] += w * vals[n] * vals[a];
            }
        }
    }
    for n in 0..dim {
        for a in (n + 1)..dim {
            g[a][n] = g[n][a];
        }
    }
    GramReport {
        max_deviation: max_identity_deviation(&g),
        matrix: g,
        cutoff: None,
        refinement_estimate: None,
        truncation_terms: Some(dim),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn continuous_gram_is_identity() {
        let p = MPParams::new(1.1, PI / 3.0).unwrap();
        let report = gram_continuous(&p, 10, &QuadratureSpec::default()).unwrap();
        assert!((report.matrix[0][0] - 1.0).abs() < 1e-10);
        assert!(
            report.max_deviation <= 1e-8,
            "max |G - I| = {:e}",
            report.max_deviation
        );
    }

    #[test]
    fn continuous_gram_is_exactly_symmetric() {
        let p = MPParams::new(0.6, 2.0 * PI / 3.0).unwrap();
        let report = gram_continuous(&p, 6, &QuadratureSpec::default()).unwrap();
        for n in 0..report.matrix.len() {
            for m in 0..report.matrix.len() {
                assert_eq!(report.matrix[n][m], report.matrix[m][n]);
            }
        }
    }

    #[test]
    fn continuous_gram_refines_monotonically() {
        let p = MPParams::new(1.1, PI / 3.0).unwrap();
        let mut prev = f64::INFINITY;
        for nodes in [2usize, 4, 8] {
            let spec = QuadratureSpec {
                nodes_per_panel: nodes,
                panel_width: 1.0,
                ..QuadratureSpec::default()
            };
            let dev = gram_continuous(&p, 4, &spec).unwrap().max_deviation;
            assert!(dev < prev, "nodes = {nodes}: {dev:e} !< {prev:e}");
            prev = dev;
        }
    }

    #[test]
    fn continuous_gram_panel_order_does_not_matter() {
        let p = MPParams::new(1.1, PI / 3.0).unwrap();
        let cutoff = choose_cutoff(&p, 5, 1e-16);
        let panels = panel_contributions(&p, 5, cutoff, 0.5, 16).unwrap();
        let forward = assemble(&panels, 6);
        let reversed_panels: Vec<Vec<f64>> = panels.into_iter().rev().collect();
        let reversed = assemble(&reversed_panels, 6);
        for n in 0..6 {
            for m in 0..6 {
                assert!((forward[n][m] - reversed[n][m]).abs() <= 1e-14);
            }
        }
    }

    #[test]
    fn continuous_gram_accuracy_error_carries_bound() {
        let p = MPParams::new(1.1, PI / 3.0).unwrap();
        let spec = QuadratureSpec {
            target_tol: Some(1e-30),
            ..QuadratureSpec::default()
        };
        match gram_continuous(&p, 3, &spec) {
            Err(crate::error::Error::Accuracy {
                requested,
                achieved,
            }) => {
                assert_eq!(requested, 1e-30);
                assert!(achieved > 1e-30);
            }
            other => panic!("expected accuracy error, got {other:?}"),
        }
        // a realistic target passes and reports the estimate
        let spec = QuadratureSpec {
            target_tol: Some(1e-10),
            ..QuadratureSpec::default()
        };
        let report = gram_continuous(&p, 3, &spec).unwrap();
        assert!(report.refinement_estimate.unwrap() <= 1e-10);
    }

    #[test]
    fn meixner_gram_is_identity() {
        let p = MeixnerParams::new(1.1, 0.4).unwrap();
        let report = gram_discrete_meixner(&p, 8);
        assert!((report.matrix[0][0] - 1.0).abs() < 1e-12);
        assert!(
            report.max_deviation <= 1e-10,
            "max |G - I| = {:e}",
            report.max_deviation
        );
        for n in 0..9 {
            for m in 0..9 {
                assert_eq!(report.matrix[n][m], report.matrix[m][n]);
            }
        }
    }

    #[test]
    fn krawtchouk_gram_is_identity() {
        let p1 = KrawtchoukParams::new(1, 0.3).unwrap();
        let r1 = gram_discrete_krawtchouk(&p1);
        assert!(r1.max_deviation <= 1e-14);

        let p8 = KrawtchoukParams::new(8, 0.3).unwrap();
        let r8 = gram_discrete_krawtchouk(&p8);
        assert!(
            r8.max_deviation <= 1e-12,
            "max |G - I| = {:e}",
            r8.max_deviation
        );
        for n in 0..=8 {
            assert!((r8.matrix[n][n] - 1.0).abs() <= 1e-12);
        }
    }
}
