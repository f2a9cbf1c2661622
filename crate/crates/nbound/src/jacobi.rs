//! Jacobi relative coordinates for N identical particles.
//!
//! The orthogonal matrix B maps individual coordinates to a center-of-mass
//! row plus N-1 relative rows: the first row is constant 1/sqrt(N), and
//! row k (k >= 2) has k-1 leading entries 1/sqrt(k(k-1)), then
//! -sqrt((k-1)/k), then zeros. The geometry coefficients derived from N
//! (alpha, beta, delta, lambda, a, gamma) are the ones that appear in the
//! reduced two-variable Hamiltonian and in all the bound formulas.

use nalgebra::DMatrix;

use crate::error::{Constraint, Error, Result};

/// Geometry of the Jacobi transformation for N particles.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiGeometry {
    pub n: usize,
    /// sqrt(N/(N-1)) > 1
    pub alpha: f64,
    /// sqrt((N-2)/(N-1)) < 1
    pub beta: f64,
    /// sqrt((N-2)/N) = beta/alpha
    pub delta: f64,
    /// (N-1)/N = 1/alpha^2
    pub lambda: f64,
    /// 1/sqrt(N(N-1)), the repeated entry of the last row of B
    pub a: f64,
    /// N(N-1)/2, the number of pairs
    pub gamma: f64,
    /// The orthogonal N x N transformation matrix.
    pub b: DMatrix<f64>,
}

/// Builds the Jacobi geometry for `n >= 2`.
pub fn build_geometry(n: usize) -> Result<JacobiGeometry> {
    if n < 2 {
        return Err(Error::domain(Constraint::ParticleCount, n as f64 - 2.0));
    }
    let nf = n as f64;
    let alpha = (nf / (nf - 1.0)).sqrt();
    let beta = ((nf - 2.0) / (nf - 1.0)).sqrt();
    let delta = ((nf - 2.0) / nf).sqrt();
    let lambda = (nf - 1.0) / nf;
    let a = 1.0 / (nf * (nf - 1.0)).sqrt();
    let gamma = nf * (nf - 1.0) / 2.0;

    let mut b = DMatrix::<f64>::zeros(n, n);
    for j in 0..n {
        b[(0, j)] = 1.0 / nf.sqrt();
    }
    for k in 2..=n {
        let kf = k as f64;
        let head = 1.0 / (kf * (kf - 1.0)).sqrt();
        for j in 0..k - 1 {
            b[(k - 1, j)] = head;
        }
        b[(k - 1, k - 1)] = -((kf - 1.0) / kf).sqrt();
    }

    Ok(JacobiGeometry {
        n,
        alpha,
        beta,
        delta,
        lambda,
        a,
        gamma,
        b,
    })
}

/// Deviations of the two coefficient identities that make the
/// N-representability statement hold for boson-symmetric states:
/// for all rows i, j > 1,
/// `sum_k B_ik B_jk = delta_ij` and `sum_{k != l} B_ik B_jl = -delta_ij`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepresentabilityReport {
    /// max |sum_k B_ik B_jk - delta_ij| over i, j > 1
    pub max_orthonormality_dev: f64,
    /// max |sum_{k != l} B_ik B_jl + delta_ij| over i, j > 1
    pub max_cross_sum_dev: f64,
    pub pairs_checked: usize,
}

impl RepresentabilityReport {
    pub fn max_dev(&self) -> f64 {
        self.max_orthonormality_dev.max(self.max_cross_sum_dev)
    }
}

/// Verifies the coefficient identities behind the representability
/// expectations, returning the worst absolute deviation per identity.
pub fn check_representability(geom: &JacobiGeometry) -> RepresentabilityReport {
    let n = geom.n;
    let b = &geom.b;
    let mut max_orth: f64 = 0.0;
    let mut max_cross: f64 = 0.0;
    let mut pairs = 0;
    for i in 1..n {
        for j in 1..n {
            let diag: f64 = (0..n).map(|k| b[(i, k)] * b[(j, k)]).sum();
            // sum_{k != l} B_ik B_jl = (sum_k B_ik)(sum_l B_jl) - sum_k B_ik B_jk
            let row_i: f64 = (0..n).map(|k| b[(i, k)]).sum();
            let row_j: f64 = (0..n).map(|k| b[(j, k)]).sum();
            let cross = row_i * row_j - diag;
            let kron = if i == j { 1.0 } else { 0.0 };
            max_orth = max_orth.max((diag - kron).abs());
            max_cross = max_cross.max((cross + kron).abs());
            pairs += 1;
        }
    }
    RepresentabilityReport {
        max_orthonormality_dev: max_orth,
        max_cross_sum_dev: max_cross,
        pairs_checked: pairs,
    }
}

/// Entrywise deviation of B B^T from the identity.
pub fn orthogonality_deviation(geom: &JacobiGeometry) -> f64 {
    let n = geom.n;
    let prod = &geom.b * geom.b.transpose();
    let mut max_dev: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let expect = if i == j { 1.0 } else { 0.0 };
            max_dev = max_dev.max((prod[(i, j)] - expect).abs());
        }
    }
    max_dev
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn n2_geometry_is_exact() {
        let geo = build_geometry(2).unwrap();
        assert_relative_eq!(geo.alpha, std::f64::consts::SQRT_2, epsilon = 1e-15);
        assert_eq!(geo.beta, 0.0);
        assert_eq!(geo.delta, 0.0);
        assert_relative_eq!(geo.lambda, 0.5, epsilon = 1e-15);
        assert_relative_eq!(geo.gamma, 1.0, epsilon = 1e-15);
        let s = 1.0 / std::f64::consts::SQRT_2;
        assert_relative_eq!(geo.b[(0, 0)], s, epsilon = 1e-15);
        assert_relative_eq!(geo.b[(0, 1)], s, epsilon = 1e-15);
        assert_relative_eq!(geo.b[(1, 0)], s, epsilon = 1e-15);
        assert_relative_eq!(geo.b[(1, 1)], -s, epsilon = 1e-15);

        let rep = check_representability(&geo);
        assert_eq!(rep.pairs_checked, 1);
        assert!(rep.max_dev() < 1e-15);
    }

    #[test]
    fn n3_last_row_structure() {
        let geo = build_geometry(3).unwrap();
        let a = 1.0 / 6.0f64.sqrt();
        assert_relative_eq!(geo.a, a, epsilon = 1e-15);
        assert_relative_eq!(geo.b[(2, 0)], a, epsilon = 1e-15);
        assert_relative_eq!(geo.b[(2, 1)], a, epsilon = 1e-15);
        assert_relative_eq!(geo.b[(2, 2)], -2.0 * a, epsilon = 1e-14);
        assert_relative_eq!(geo.lambda, 2.0 / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn coefficient_identities_hold() {
        for n in [2usize, 3, 5, 17, 50] {
            let geo = build_geometry(n).unwrap();
            let nf = n as f64;
            assert_relative_eq!(geo.alpha * geo.alpha + geo.beta * geo.beta, 2.0, epsilon = 1e-12);
            assert_relative_eq!(
                geo.a * geo.a + geo.beta * geo.beta,
                geo.lambda,
                epsilon = 1e-12
            );
            assert_relative_eq!(1.0 / (geo.alpha * geo.alpha), geo.lambda, epsilon = 1e-12);
            assert_relative_eq!((nf - 1.0) * geo.a, 1.0 / geo.alpha, epsilon = 1e-12);
            assert_relative_eq!(nf * geo.a, geo.alpha, epsilon = 1e-12);
            assert_relative_eq!(geo.delta, geo.beta / geo.alpha, epsilon = 1e-12);
            assert_relative_eq!(1.0 + geo.delta * geo.delta, 2.0 * geo.lambda, epsilon = 1e-12);
        }
    }

    #[test]
    fn orthogonality_across_sizes() {
        for n in 2..=50 {
            let geo = build_geometry(n).unwrap();
            assert!(
                orthogonality_deviation(&geo) <= 1e-12,
                "B B^T deviates at n = {n}"
            );
            // first row sums to sqrt(N)
            let sum: f64 = (0..n).map(|j| geo.b[(0, j)]).sum();
            assert_relative_eq!(sum, (n as f64).sqrt(), epsilon = 1e-12);
        }
    }

    #[test]
    fn representability_at_5_and_30() {
        let rep5 = check_representability(&build_geometry(5).unwrap());
        assert_eq!(rep5.pairs_checked, 16);
        assert!(rep5.max_dev() <= 1e-12);

        let rep30 = check_representability(&build_geometry(30).unwrap());
        assert!(rep30.max_dev() <= 1e-11);
    }

    #[test]
    fn rejects_small_n() {
        assert!(matches!(build_geometry(0), Err(Error::Domain(_))));
        assert!(matches!(build_geometry(1), Err(Error::Domain(_))));
    }
}
