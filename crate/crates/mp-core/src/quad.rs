//! Gauss-Legendre quadrature: nodes and weights from the Golub-Welsch
//! eigenproblem of the Legendre Jacobi matrix, plus a composite-panel
//! integrator used by the continuous orthogonality checks.

use crate::error::Result;
use crate::linalg::{sym_eigensolve, SymTridiag};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
///
/// The Jacobi matrix of the Legendre polynomials has zero diagonal and
/// off-diagonal k / sqrt(4 k^2 - 1); its eigenvalues are the nodes and
/// the weights are 2 * (first eigenvector component)^2.
pub fn gauss_legendre(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    assert!(n >= 1);
    if n == 1 {
        return Ok((vec![0.0], vec![2.0]));
    }
    let diag = vec![0.0; n];
    let off: Vec<f64> = (1..n)
        .map(|k| {
            let kf = k as f64;
            kf / (4.0 * kf * kf - 1.0).sqrt()
        })
        .collect();
    let jacobi = SymTridiag::new(diag, off)?;
    let eig = sym_eigensolve(&jacobi)?;
    let weights = eig
        .eigenvectors
        .iter()
        .map(|v| 2.0 * v[0] * v[0])
        .collect();
    Ok((eig.eigenvalues, weights))
}

/// One integration panel: the rule mapped onto [a, b].
pub fn panel_nodes(rule: &(Vec<f64>, Vec<f64>), a: f64, b: f64) -> Vec<(f64, f64)> {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    rule.0
        .iter()
        .zip(&rule.1)
        .map(|(x, w)| (mid + half * x, half * w))
        .collect()
}

/// Composite Gauss-Legendre integral of `f` over [a, b] with panels of
/// width at most `panel_width`.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    panel_width: f64,
    nodes_per_panel: usize,
) -> Result<f64> {
    let rule = gauss_legendre(nodes_per_panel)?;
    let k = (((b - a) / panel_width).ceil() as usize).max(1);
    let w = (b - a) / k as f64;
    let mut total = 0.0;
    for i in 0..k {
        let lo = a + i as f64 * w;
        for (x, wt) in panel_nodes(&rule, lo, lo + w) {
            total += wt * f(x);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn rule_is_symmetric_and_normalized() {
        let (x, w) = gauss_legendre(32).unwrap();
        let wsum: f64 = w.iter().sum();
        assert!((wsum - 2.0).abs() < 1e-14);
        for i in 0..x.len() {
            assert!((x[i] + x[x.len() - 1 - i]).abs() < 1e-14);
            assert!((w[i] - w[x.len() - 1 - i]).abs() < 1e-14);
        }
    }

    #[test]
    fn rule_integrates_high_degree_monomials_exactly() {
        // an n-point rule is exact through degree 2n - 1
        let (x, w) = gauss_legendre(32).unwrap();
        let got: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(62)).sum();
        assert!((got - 2.0 / 63.0).abs() < 1e-14);
        let odd: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(63)).sum();
        assert!(odd.abs() < 5e-15);
    }

    #[test]
    fn composite_matches_closed_forms() {
        let got = integrate(f64::exp, 0.0, 3.0, 0.5, 16).unwrap();
        assert!((got - (3.0f64.exp() - 1.0)).abs() < 1e-12);
        let got = integrate(f64::sin, 0.0, PI, 0.25, 12).unwrap();
        assert!((got - 2.0).abs() < 1e-12);
    }

    #[test]
    fn composite_refines_monotonically() {
        let f = |x: f64| (-(x * x)).exp() * (5.0 * x).cos();
        let exact = PI.sqrt() * (-25.0f64 / 4.0).exp();
        let mut prev = f64::INFINITY;
        for nodes in [2usize, 4, 8, 12] {
            let got = integrate(f, -8.0, 8.0, 1.0, nodes).unwrap();
            let err = (got - exact).abs();
            assert!(err < prev, "nodes = {nodes}: {err:e} !< {prev:e}");
            prev = err;
        }
        assert!(prev < 1e-12);
    }
}
