//! Gaussian quadrature rules built by the Golub-Welsch algorithm.
//!
//! Nodes are the eigenvalues of the symmetric Jacobi matrix of the
//! orthogonal-polynomial recurrence; weights come from the squared first
//! components of the eigenvectors scaled by the zeroth moment of the
//! weight function.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Nodes and weights of a Gaussian rule. The weight function is implicit
/// in the rule: sums `sum_k w_k f(x_k)` approximate `int w(x) f(x) dx`.
#[derive(Debug, Clone)]
pub(crate) struct Rule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Rule {
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Diagonalizes a symmetric tridiagonal Jacobi matrix given by `diag` and
/// `offdiag` and converts eigenpairs to a quadrature rule with zeroth
/// moment `mu0`.
fn golub_welsch(diag: &[f64], offdiag: &[f64], mu0: f64) -> Result<Rule> {
    let n = diag.len();
    let mut jac = DMatrix::<f64>::zeros(n, n);
    for (i, &d) in diag.iter().enumerate() {
        jac[(i, i)] = d;
    }
    for (i, &e) in offdiag.iter().enumerate() {
        jac[(i, i + 1)] = e;
        jac[(i + 1, i)] = e;
    }
    let eig = jac
        .try_symmetric_eigen(1e-14, 0)
        .ok_or(Error::Eigensolve { size: n })?;
    let mut pairs: Vec<(f64, f64)> = eig
        .eigenvalues
        .iter()
        .enumerate()
        .map(|(k, &x)| {
            let v0 = eig.eigenvectors[(0, k)];
            (x, mu0 * v0 * v0)
        })
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(Rule {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
    })
}

/// Gauss-Hermite rule: weight `exp(-t^2)` on the whole real line.
pub(crate) fn gauss_hermite(n: usize) -> Result<Rule> {
    let diag = vec![0.0; n];
    let offdiag: Vec<f64> = (1..n).map(|k| (k as f64 / 2.0).sqrt()).collect();
    golub_welsch(&diag, &offdiag, std::f64::consts::PI.sqrt())
}

/// Gauss-Legendre rule on [-1, 1] (unit weight).
///
/// Unlike the exponential-weight rules, Legendre weights are all O(1/n),
/// so the eigenvector-based weights carry no dynamic-range noise; this is
/// the rule of choice when the integrand keeps its own decay factor.
pub(crate) fn gauss_legendre(n: usize) -> Result<Rule> {
    let diag = vec![0.0; n];
    let offdiag: Vec<f64> = (1..n)
        .map(|k| {
            let kf = k as f64;
            kf / (4.0 * kf * kf - 1.0).sqrt()
        })
        .collect();
    golub_welsch(&diag, &offdiag, 2.0)
}

/// Gauss-Legendre rule mapped to [0, upper].
pub(crate) fn gauss_legendre_mapped(n: usize, upper: f64) -> Result<Rule> {
    let base = gauss_legendre(n)?;
    let half = 0.5 * upper;
    Ok(Rule {
        nodes: base.nodes.iter().map(|&x| half * (x + 1.0)).collect(),
        weights: base.weights.iter().map(|&w| half * w).collect(),
    })
}

/// Generalized Gauss-Laguerre rule: weight `u^alpha exp(-u)` on `[0, inf)`.
///
/// Only the moments needed in this crate are wired in (`alpha` of 0 and 1/2).
/// The far-tail weights carry an absolute noise floor of ~1e-30 from the
/// eigenvector solve; keep integrands polynomial-sized (no e^{+u} growth)
/// or the noise amplifies.
pub(crate) fn gauss_laguerre(n: usize, alpha: f64) -> Result<Rule> {
    let mu0 = if alpha == 0.0 {
        1.0
    } else if alpha == 0.5 {
        0.5 * std::f64::consts::PI.sqrt()
    } else {
        return Err(Error::InvalidSpec("unsupported Laguerre alpha"));
    };
    let diag: Vec<f64> = (0..n).map(|k| 2.0 * k as f64 + alpha + 1.0).collect();
    let offdiag: Vec<f64> = (1..n)
        .map(|k| (k as f64 * (k as f64 + alpha)).sqrt())
        .collect();
    golub_welsch(&diag, &offdiag, mu0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn hermite_moments() {
        let rule = gauss_hermite(20).unwrap();
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert_relative_eq!(rule.integrate(|_| 1.0), sqrt_pi, max_relative = 1e-14);
        assert_relative_eq!(rule.integrate(|t| t * t), sqrt_pi / 2.0, max_relative = 1e-14);
        assert_relative_eq!(
            rule.integrate(|t| t.powi(4)),
            3.0 * sqrt_pi / 4.0,
            max_relative = 1e-13
        );
    }

    #[test]
    fn laguerre_moments() {
        let rule = gauss_laguerre(30, 0.0).unwrap();
        assert_relative_eq!(rule.integrate(|_| 1.0), 1.0, max_relative = 1e-14);
        assert_relative_eq!(rule.integrate(|u| u * u), 2.0, max_relative = 1e-13);

        let half = gauss_laguerre(30, 0.5).unwrap();
        let gamma_3_2 = 0.5 * std::f64::consts::PI.sqrt();
        assert_relative_eq!(half.integrate(|_| 1.0), gamma_3_2, max_relative = 1e-14);
        // Gamma(5/2) = 3/2 * Gamma(3/2)
        assert_relative_eq!(half.integrate(|u| u), 1.5 * gamma_3_2, max_relative = 1e-13);
    }

    #[test]
    fn legendre_moments() {
        let rule = gauss_legendre(24).unwrap();
        assert_relative_eq!(rule.integrate(|_| 1.0), 2.0, max_relative = 1e-14);
        assert_relative_eq!(rule.integrate(|x| x * x), 2.0 / 3.0, max_relative = 1e-13);
        let mapped = gauss_legendre_mapped(24, 3.0).unwrap();
        assert_relative_eq!(mapped.integrate(|x| x), 4.5, max_relative = 1e-13);
        // Gaussian moment with the decay kept in the integrand
        let wide = gauss_legendre_mapped(96, 10.0).unwrap();
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert_relative_eq!(
            wide.integrate(|t| t * t * (-t * t).exp()),
            sqrt_pi / 4.0,
            max_relative = 1e-13
        );
    }

    #[test]
    fn large_rules_stay_finite() {
        for rule in [gauss_hermite(160).unwrap(), gauss_laguerre(200, 0.5).unwrap()] {
            assert!(rule.nodes.iter().all(|x| x.is_finite()));
            assert!(rule.weights.iter().all(|w| w.is_finite() && *w >= 0.0));
        }
    }
}
