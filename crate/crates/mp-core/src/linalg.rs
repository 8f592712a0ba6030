//! Symmetric tridiagonal matrices, a dense symmetric eigensolver
//! (Householder tridiagonalization + implicit-shift QL), and the
//! generalized symmetric-definite problem A v = eps B v reduced through
//! a bidiagonal Cholesky factor of B.

use crate::error::{Error, Result};

/// Iteration cap per eigenvalue for the QL sweep.
const MAX_SWEEPS: usize = 50;

/// Symmetric tridiagonal matrix stored as its diagonal and off-diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiag {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl SymTridiag {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::Domain("SymTridiag: empty diagonal".into()));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::Domain(format!(
                "SymTridiag: offdiag length {} does not match diagonal length {}",
                offdiag.len(),
                diag.len()
            )));
        }
        if diag.iter().chain(offdiag.iter()).any(|v| !v.is_finite()) {
            return Err(Error::Domain("SymTridiag: non-finite entry".into()));
        }
        Ok(Self { diag, offdiag })
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// Largest absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        let n = self.order();
        let mut best = 0.0f64;
        for i in 0..n {
            let mut row = self.diag[i].abs();
            if i > 0 {
                row += self.offdiag[i - 1].abs();
            }
            if i + 1 < n {
                row += self.offdiag[i].abs();
            }
            best = best.max(row);
        }
        best
    }

    /// y = M x
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        let n = self.order();
        assert_eq!(x.len(), n);
        let mut y = vec![0.0; n];
        for i in 0..n {
            let mut s = self.diag[i] * x[i];
            if i > 0 {
                s += self.offdiag[i - 1] * x[i - 1];
            }
            if i + 1 < n {
                s += self.offdiag[i] * x[i + 1];
            }
            y[i] = s;
        }
        y
    }
}

/// Spectrum of a (generalized) symmetric eigenproblem, sorted ascending.
#[derive(Debug, Clone)]
pub struct EigenResult {
    /// Eigenvalues in ascending order.
    pub eigenvalues: Vec<f64>,
    /// eigenvectors[i] pairs with eigenvalues[i].
    pub eigenvectors: Vec<Vec<f64>>,
    /// residual_norms[i] = || A v_i - eps_i B v_i ||_inf
    pub residual_norms: Vec<f64>,
    /// max over i != j of |v_i^T B v_j|, combined with max_i |v_i^T B v_i - 1|.
    pub b_orthogonality_defect: f64,
}

/// Lower bidiagonal Cholesky factor of a symmetric positive definite
/// tridiagonal matrix: B = L L^T.
struct BidiagCholesky {
    diag: Vec<f64>,
    sub: Vec<f64>,
}

fn cholesky_bidiag(b: &SymTridiag) -> Result<BidiagCholesky> {
    let n = b.order();
    let mut ld = vec![0.0; n];
    let mut ls = vec![0.0; n.saturating_sub(1)];
    let mut pivot = b.diag[0];
    if pivot <= 0.0 || !pivot.is_finite() {
        return Err(Error::NotPositiveDefinite {
            index: 0,
            value: pivot,
        });
    }
    ld[0] = pivot.sqrt();
    for i in 1..n {
        ls[i - 1] = b.offdiag[i - 1] / ld[i - 1];
        pivot = b.diag[i] - ls[i - 1] * ls[i - 1];
        if pivot <= 0.0 || !pivot.is_finite() {
            return Err(Error::NotPositiveDefinite {
                index: i,
                value: pivot,
            });
        }
        ld[i] = pivot.sqrt();
    }
    Ok(BidiagCholesky { diag: ld, sub: ls })
}

impl BidiagCholesky {
    /// Solve L y = x in place.
    fn forward(&self, x: &mut [f64]) {
        let n = self.diag.len();
        x[0] /= self.diag[0];
        for i in 1..n {
            x[i] = (x[i] - self.sub[i - 1] * x[i - 1]) / self.diag[i];
        }
    }

    /// Solve L^T y = x in place.
    fn backward(&self, x: &mut [f64]) {
        let n = self.diag.len();
        x[n - 1] /= self.diag[n - 1];
        for i in (0..n - 1).rev() {
            x[i] = (x[i] - self.sub[i] * x[i + 1]) / self.diag[i];
        }
    }
}

fn hypot(a: f64, b: f64) -> f64 {
    a.hypot(b)
}

/// Implicit-shift QL iteration on a tridiagonal matrix held in (d, e),
/// accumulating the transformations into the column-major matrix v.
///
/// Follows the classic EISPACK tql2 scheme. `e` uses the convention
/// e[i] = subdiagonal entry between rows i-1 and i, with e[0] unused.
fn tql2(d: &mut [f64], e: &mut [f64], v: &mut [f64], n: usize) -> Result<()> {
    if n == 1 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let eps = f64::EPSILON;
    let mut f = 0.0f64;
    let mut tst1 = 0.0f64;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            let mut iter = 0usize;
            loop {
                iter += 1;
                if iter > MAX_SWEEPS {
                    return Err(Error::Convergence {
                        index: l,
                        sweeps: MAX_SWEEPS,
                    });
                }
                // implicit shift from the 2x2 leading block
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = hypot(p, 1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for i in (l + 2)..n {
                    d[i] -= h;
                }
                f += h;

                // QL transformation
                p = d[m];
                let mut c = 1.0f64;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0f64;
                let mut s2 = 0.0f64;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    h = c * p;
                    r = hypot(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for k in 0..n {
                        let h = v[k * n + i + 1];
                        v[k * n + i + 1] = s * v[k * n + i] + c * h;
                        v[k * n + i] = c * v[k * n + i] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

/// Householder reduction of a dense symmetric matrix (row-major, n x n)
/// to tridiagonal form, accumulating the orthogonal transformation into
/// the same storage. Classic EISPACK/JAMA tred2 scheme: on return `d`
/// holds the diagonal, `e` the subdiagonal (e[0] = 0), and `v` the
/// accumulated orthogonal matrix.
fn tred2(v: &mut [f64], d: &mut [f64], e: &mut [f64], n: usize) {
    for j in 0..n {
        d[j] = v[(n - 1) * n + j];
    }
    for i in (1..n).rev() {
        let mut scale = 0.0f64;
        let mut h = 0.0f64;
        for k in 0..i {
            scale += d[k].abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[(i - 1) * n + j];
                v[i * n + j] = 0.0;
                v[j * n + i] = 0.0;
            }
        } else {
            for k in 0..i {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for j in 0..i {
                e[j] = 0.0;
            }
            for j in 0..i {
                f = d[j];
                v[j * n + i] = f;
                g = e[j] + v[j * n + j] * f;
                for k in (j + 1)..i {
                    g += v[k * n + j] * d[k];
                    e[k] += v[k * n + j] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[k * n + j] -= f * e[k] + g * d[k];
                }
                d[j] = v[(i - 1) * n + j];
                v[i * n + j] = 0.0;
            }
        }
        d[i] = h;
    }
    // accumulate the Householder transformations
    for i in 0..(n - 1) {
        v[(n - 1) * n + i] = v[i * n + i];
        v[i * n + i] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[k * n + i + 1] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[k * n + i + 1] * v[k * n + j];
                }
                for k in 0..=i {
                    v[k * n + j] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[k * n + i + 1] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[(n - 1) * n + j];
        v[(n - 1) * n + j] = 0.0;
    }
    v[(n - 1) * n + n - 1] = 1.0;
    e[0] = 0.0;
}

/// Sort eigenpairs ascending and fix the sign convention: the first
/// component with magnitude above 1e-12 is made positive.
fn finalize_pairs(d: Vec<f64>, v: Vec<f64>, n: usize) -> (Vec<f64>, Vec<Vec<f64>>) {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    let eigenvalues: Vec<f64> = order.iter().map(|&k| d[k]).collect();
    let mut eigenvectors = Vec::with_capacity(n);
    for &k in &order {
        let mut col: Vec<f64> = (0..n).map(|r| v[r * n + k]).collect();
        if let Some(lead) = col.iter().find(|c| c.abs() > 1e-12) {
            if *lead < 0.0 {
                for c in &mut col {
                    *c = -*c;
                }
            }
        }
        eigenvectors.push(col);
    }
    (eigenvalues, eigenvectors)
}

/// Dense symmetric eigensolve (row-major input), used internally after
/// the Cholesky reduction of a generalized problem.
fn dense_sym_eigensolve(mut a: Vec<f64>, n: usize) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    if n == 1 {
        return Ok((vec![a[0]], vec![vec![1.0]]));
    }
    tred2(&mut a, &mut d, &mut e, n);
    tql2(&mut d, &mut e, &mut a, n)?;
    Ok(finalize_pairs(d, a, n))
}

/// Full spectrum of a symmetric tridiagonal matrix.
pub fn sym_eigensolve(a: &SymTridiag) -> Result<EigenResult> {
    let n = a.order();
    let mut d = a.diag.clone();
    let mut e = vec![0.0; n];
    e[1..n].copy_from_slice(&a.offdiag);
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    tql2(&mut d, &mut e, &mut v, n)?;
    let (eigenvalues, eigenvectors) = finalize_pairs(d, v, n);

    let mut residual_norms = Vec::with_capacity(n);
    for (val, vec_) in eigenvalues.iter().zip(&eigenvectors) {
        let av = a.mul_vec(vec_);
        let r = av
            .iter()
            .zip(vec_)
            .map(|(avi, vi)| (avi - val * vi).abs())
            .fold(0.0f64, f64::max);
        residual_norms.push(r);
    }
    // identity-B orthogonality defect
    let mut defect = 0.0f64;
    for i in 0..n {
        for j in i..n {
            let dot: f64 = eigenvectors[i]
                .iter()
                .zip(&eigenvectors[j])
                .map(|(x, y)| x * y)
                .sum();
            let target = if i == j { 1.0 } else { 0.0 };
            defect = defect.max((dot - target).abs());
        }
    }
    Ok(EigenResult {
        eigenvalues,
        eigenvectors,
        residual_norms,
        b_orthogonality_defect: defect,
    })
}

/// Generalized symmetric-definite eigenproblem A v = eps B v.
///
/// B is factored as L L^T (L lower bidiagonal since B is tridiagonal),
/// the dense symmetric C = L^-1 A L^-T is formed explicitly and solved
/// with the standard Householder + QL path, and the vectors are
/// back-transformed as v = L^-T u. Vectors come out B-orthonormal.
pub fn generalized_eigensolve(a: &SymTridiag, b: &SymTridiag) -> Result<EigenResult> {
    let n = a.order();
    if b.order() != n {
        return Err(Error::Domain(format!(
            "generalized_eigensolve: dimension mismatch {} vs {}",
            n,
            b.order()
        )));
    }
    let l = cholesky_bidiag(b)?;

    // W = L^-1 A, column by column
    let mut w = vec![0.0; n * n];
    for j in 0..n {
        let mut col = vec![0.0; n];
        if j > 0 {
            col[j - 1] = a.offdiag[j - 1];
        }
        col[j] = a.diag[j];
        if j + 1 < n {
            col[j + 1] = a.offdiag[j];
        }
        l.forward(&mut col);
        for i in 0..n {
            w[i * n + j] = col[i];
        }
    }
    // C = W L^-T, row by row (L c_i^T = w_i^T)
    let mut cmat = vec![0.0; n * n];
    for i in 0..n {
        let mut row: Vec<f64> = (0..n).map(|j| w[i * n + j]).collect();
        l.forward(&mut row);
        cmat[i * n..(i + 1) * n].copy_from_slice(&row);
    }
    // kill the rounding asymmetry before the symmetric solver
    for i in 0..n {
        for j in (i + 1)..n {
            let s = 0.5 * (cmat[i * n + j] + cmat[j * n + i]);
            cmat[i * n + j] = s;
            cmat[j * n + i] = s;
        }
    }

    let (eigenvalues, us) = dense_sym_eigensolve(cmat, n)?;

    let mut eigenvectors = Vec::with_capacity(n);
    for u in us {
        let mut vvec = u;
        l.backward(&mut vvec);
        if let Some(lead) = vvec.iter().find(|c| c.abs() > 1e-12) {
            if *lead < 0.0 {
                for c in &mut vvec {
                    *c = -*c;
                }
            }
        }
        eigenvectors.push(vvec);
    }

    let mut residual_norms = Vec::with_capacity(n);
    for (val, vvec) in eigenvalues.iter().zip(&eigenvectors) {
        let av = a.mul_vec(vvec);
        let bv = b.mul_vec(vvec);
        let r = av
            .iter()
            .zip(&bv)
            .map(|(x, y)| (x - val * y).abs())
            .fold(0.0f64, f64::max);
        residual_norms.push(r);
    }

    let mut defect = 0.0f64;
    let bvs: Vec<Vec<f64>> = eigenvectors.iter().map(|v| b.mul_vec(v)).collect();
    for i in 0..n {
        for j in i..n {
            let dot: f64 = eigenvectors[i]
                .iter()
                .zip(&bvs[j])
                .map(|(x, y)| x * y)
                .sum();
            let target = if i == j { 1.0 } else { 0.0 };
            defect = defect.max((dot - target).abs());
        }
    }

    Ok(EigenResult {
        eigenvalues,
        eigenvectors,
        residual_norms,
        b_orthogonality_defect: defect,
    })
}
