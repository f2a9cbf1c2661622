//! Randomized check of the triangle inequality that proves the spectral
//! ordering of the reduced Hamiltonians.
//!
//! With k a unit vector perpendicular to the plane spanned by (p, P),
//! `sqrt(m^2 + (p + delta P)^2) = |m k + p + delta P|`, and splitting
//! `m k + p` symmetrically gives
//! `|m k + p| <= |m k + p + delta P|/2 + |m k + p - delta P|/2`.
//! The inequality is a theorem; the sampler exists to catch
//! implementation mistakes in the geometry it rests on.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{require_positive, Constraint, Result};
use crate::jacobi::build_geometry;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleReport {
    pub samples: usize,
    pub delta: f64,
    /// max over samples of lhs - rhs; a correct implementation keeps this
    /// at rounding level (<= ~1e-13 for standard-normal magnitudes).
    pub max_violation: f64,
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm(a: [f64; 3]) -> f64 {
    (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt()
}

fn add(a: [f64; 3], b: [f64; 3], s: f64) -> [f64; 3] {
    [a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]]
}

/// Unit vector perpendicular to both `p` and `pp`, with deterministic
/// fallbacks when the pair is degenerate (parallel or zero).
fn unit_normal(p: [f64; 3], pp: [f64; 3]) -> [f64; 3] {
    let c = cross(p, pp);
    let nc = norm(c);
    if nc > 1e-300 {
        return [c[0] / nc, c[1] / nc, c[2] / nc];
    }
    // degenerate plane: any unit vector orthogonal to p works
    let np = norm(p);
    if np > 1e-300 {
        let axis = if p[0].abs() <= p[1].abs() && p[0].abs() <= p[2].abs() {
            [1.0, 0.0, 0.0]
        } else if p[1].abs() <= p[2].abs() {
            [0.0, 1.0, 0.0]
        } else {
            [0.0, 0.0, 1.0]
        };
        let c = cross(p, axis);
        let nc = norm(c);
        return [c[0] / nc, c[1] / nc, c[2] / nc];
    }
    [0.0, 0.0, 1.0]
}

/// Signed violation `|mk + p| - (|mk + p + delta P| + |mk + p - delta P|)/2`
/// of the triangle inequality; nonpositive up to rounding.
pub fn triangle_violation(m: f64, p: [f64; 3], pp: [f64; 3], delta: f64) -> f64 {
    let k = unit_normal(p, pp);
    let base = add([0.0; 3], k, m);
    let base_p = add(base, p, 1.0);
    let lhs = norm(base_p);
    let plus = norm(add(base_p, pp, delta));
    let minus = norm(add(base_p, pp, -delta));
    lhs - 0.5 * (plus + minus)
}

/// Draws `sample_count` isotropic-Gaussian pairs (p, P) from a seeded
/// ChaCha stream and reports the worst triangle-inequality violation for
/// the delta of the N-particle Jacobi geometry.
pub fn triangle_inequality_sample(
    n: usize,
    m: f64,
    sample_count: usize,
    seed: u64,
) -> Result<TriangleReport> {
    require_positive(m, Constraint::MassPositive)?;
    if sample_count == 0 {
        return Err(crate::error::Error::InvalidSpec(
            "sample_count must be at least 1",
        ));
    }
    let delta = build_geometry(n)?.delta;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_violation = f64::NEG_INFINITY;
    for _ in 0..sample_count {
        let mut draw = || -> [f64; 3] {
            [
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
            ]
        };
        let p = draw();
        let pp = draw();
        max_violation = max_violation.max(triangle_violation(m, p, pp, delta));
    }
    Ok(TriangleReport {
        samples: sample_count,
        delta,
        max_violation,
    })
}
