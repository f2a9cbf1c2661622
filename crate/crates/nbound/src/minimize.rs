//! Derivative-free one-dimensional minimization over (0, inf).
//!
//! The Gaussian upper bound needs the minimum of `[2 g(mu^2/4) - a] / mu`,
//! which for 0 < a < 2 is unimodal with a single interior minimum; for
//! a >= 2 it decreases without bound toward mu = 0, and as a -> 0+ the
//! minimizer runs off to mu = +inf. Bracketing therefore has to detect
//! "no interior minimum in the scan window" as a first-class outcome
//! rather than an error.

use crate::error::Error;

/// Upper end of the bracketing scan. Beyond it the variational objective
/// is within ~1e-12 of its mu -> inf asymptote `sqrt(pi/2) - a/mu`, so a
/// scan that is still descending here has its infimum at infinity for all
/// practical purposes.
pub const MU_CEILING: f64 = 1e6;

/// Lower end of the bracketing scan; descending through it means the
/// objective is unbounded below toward mu = 0.
pub const MU_FLOOR: f64 = 1e-9;

const GROWTH: f64 = 2.0;
const MAX_ITERATIONS: usize = 200;

/// A triple lo < mid < hi with f(mid) < f(lo) and f(mid) < f(hi).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub mid: f64,
    pub hi: f64,
}

/// Why no bracket exists inside the scan window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NoMinimum {
    /// f still decreasing at [`MU_CEILING`]; the infimum sits at mu = inf.
    DecreasingTowardInfinity { mu_limit: f64, f_limit: f64 },
    /// f still decreasing at [`MU_FLOOR`]; f is unbounded below at mu = 0.
    DecreasingTowardZero { mu_limit: f64, f_limit: f64 },
}

impl From<NoMinimum> for Error {
    fn from(n: NoMinimum) -> Error {
        let (mu_limit, f_limit) = match n {
            NoMinimum::DecreasingTowardInfinity { mu_limit, f_limit }
            | NoMinimum::DecreasingTowardZero { mu_limit, f_limit } => (mu_limit, f_limit),
        };
        Error::NoMinimum { mu_limit, f_limit }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MinimizationResult {
    pub mu_star: f64,
    pub f_star: f64,
    /// The bracket the search started from.
    pub bracket: (f64, f64, f64),
    pub iterations: usize,
    pub converged: bool,
}

/// Brackets a minimum of `f` on (0, inf) by geometric expansion and
/// contraction from `mu0`.
///
/// Returns [`NoMinimum`] when the scan reaches [`MU_CEILING`] (or
/// [`MU_FLOOR`]) with `f` still decreasing.
pub fn bracket_minimum(
    f: impl Fn(f64) -> f64,
    mu0: f64,
) -> std::result::Result<Bracket, NoMinimum> {
    assert!(mu0 > 0.0 && mu0.is_finite(), "mu0 must be positive");
    let mu0 = mu0.clamp(MU_FLOOR * GROWTH, MU_CEILING / GROWTH);

    let f0 = f(mu0);
    let up = f(mu0 * GROWTH);

    if up < f0 {
        // walk right until f rises
        let mut a = mu0;
        let (mut b, mut fb) = (mu0 * GROWTH, up);
        loop {
            let c = b * GROWTH;
            if c > MU_CEILING {
                return Err(NoMinimum::DecreasingTowardInfinity {
                    mu_limit: b,
                    f_limit: fb,
                });
            }
            let fc = f(c);
            if fc >= fb {
                return Ok(Bracket {
                    lo: a,
                    mid: b,
                    hi: c,
                });
            }
            a = b;
            (b, fb) = (c, fc);
        }
    }

    // walk left until f rises
    let mut b = mu0;
    let (mut a, mut fa) = (mu0 / GROWTH, f(mu0 / GROWTH));
    if fa >= f0 {
        // mu0 already sits between two larger values
        return Ok(Bracket {
            lo: mu0 / GROWTH,
            mid: mu0,
            hi: mu0 * GROWTH,
        });
    }
    loop {
        let c = a / GROWTH;
        if c < MU_FLOOR {
            return Err(NoMinimum::DecreasingTowardZero {
                mu_limit: a,
                f_limit: fa,
            });
        }
        let fc = f(c);
        if fc >= fa {
            return Ok(Bracket {
                lo: c,
                mid: a,
                hi: b,
            });
        }
        b = a;
        (a, fa) = (c, fc);
    }
}

/// Golden-section search inside a valid bracket.
///
/// Deterministic; stops when the interval shrinks below
/// `tol * (1 + mu_star)` or after 200 iterations, in which case the best
/// point so far is returned with `converged = false`.
///
/// Near a smooth minimum the objective is flat to machine precision over
/// a width ~sqrt(eps), so the location `mu_star` resolves to about
/// sqrt(eps) * scale no matter how small `tol` is; the value `f_star`
/// converges to full precision regardless.
pub fn minimize_scalar(
    f: impl Fn(f64) -> f64,
    bracket: &Bracket,
    tol: f64,
) -> MinimizationResult {
    const INV_PHI: f64 = 0.618_033_988_749_894_9; // (sqrt(5)-1)/2

    let (mut a, mut b) = (bracket.lo, bracket.hi);
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);

    let mut iterations = 0;
    let mut converged = false;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
        let mid = 0.5 * (a + b);
        if (b - a).abs() <= tol * (1.0 + mid.abs()) {
            converged = true;
            break;
        }
    }

    let (mu_star, f_star) = if f1 < f2 { (x1, f1) } else { (x2, f2) };
    MinimizationResult {
        mu_star,
        f_star,
        bracket: (bracket.lo, bracket.mid, bracket.hi),
        iterations,
        converged,
    }
}

/// Default relative tolerance for the variational minimizations.
pub const DEFAULT_TOL: f64 = 1e-10;

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn brackets_quadratic() {
        let f = |mu: f64| (mu - 2.0) * (mu - 2.0);
        let b = bracket_minimum(f, 1.0).unwrap();
        assert!(b.lo < 2.0 && 2.0 < b.hi);
        assert!(f(b.mid) < f(b.lo) && f(b.mid) < f(b.hi));
    }

    #[test]
    fn minimizes_quadratic() {
        let f = |mu: f64| (mu - 2.0) * (mu - 2.0);
        let b = Bracket {
            lo: 0.5,
            mid: 1.5,
            hi: 5.0,
        };
        let r = minimize_scalar(f, &b, 1e-10);
        assert!(r.converged);
        assert_relative_eq!(r.mu_star, 2.0, epsilon = 1e-9);
        assert!(r.f_star <= f(b.lo) && r.f_star <= f(b.hi));
    }

    #[test]
    fn minimizes_cosh() {
        let f = |mu: f64| (mu - 3.0).cosh();
        let b = Bracket {
            lo: 1.0,
            mid: 2.5,
            hi: 6.0,
        };
        let r = minimize_scalar(f, &b, 1e-10);
        assert!(r.converged);
        // location resolution is sqrt(eps)-limited on flat minima
        assert_relative_eq!(r.mu_star, 3.0, epsilon = 5e-8);
        assert_relative_eq!(r.f_star, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn detects_minimum_at_infinity() {
        // strictly decreasing toward an asymptote
        let f = |mu: f64| 1.0 + 1.0 / mu;
        match bracket_minimum(f, 1.0) {
            Err(NoMinimum::DecreasingTowardInfinity { mu_limit, .. }) => {
                assert!(mu_limit <= MU_CEILING)
            }
            other => panic!("expected no-minimum toward infinity, got {other:?}"),
        }
    }

    #[test]
    fn detects_unbounded_toward_zero() {
        // strictly increasing on (0, inf): descending toward mu = 0
        let f = |mu: f64| mu;
        match bracket_minimum(f, 1.0) {
            Err(NoMinimum::DecreasingTowardZero { mu_limit, .. }) => {
                assert!(mu_limit >= MU_FLOOR)
            }
            other => panic!("expected no-minimum toward zero, got {other:?}"),
        }
    }

    #[test]
    fn determinism() {
        let f = |mu: f64| (mu - 2.0).powi(2) + (3.0 * mu).sin() * 1e-3;
        let b = bracket_minimum(f, 1.0).unwrap();
        let r1 = minimize_scalar(&f, &b, 1e-10);
        let r2 = minimize_scalar(&f, &b, 1e-10);
        assert_eq!(r1, r2);
    }

    #[test]
    fn grid_scan_never_beats_result_by_more_than_tol() {
        let f = |mu: f64| (mu - 2.0).cosh() + 0.1 * mu;
        let b = bracket_minimum(f, 1.0).unwrap();
        let r = minimize_scalar(&f, &b, 1e-10);
        let mut best = f64::INFINITY;
        let mut mu = b.lo;
        while mu <= b.hi {
            best = best.min(f(mu));
            mu += 1e-4;
        }
        assert!(r.f_star <= best + 1e-10 * (1.0 + r.f_star.abs()));
    }
}
