//! Closed-form energy bounds for the semirelativistic gravitating
//! N-boson Hamiltonian `H = sum_i sqrt(p_i^2 + m^2) - sum_{i<j} v/r_ij`.
//!
//! One-body bounds (Herbst, Martin-Roy, the Kratzer reduction behind
//! them), the simple N/2 reduction bound, the improved relative-coordinate
//! bound, the scale-optimized Gaussian upper bound, their large-N rescaled
//! forms with v = c/N, and the small-coupling parabolas.
//!
//! Every bound is evaluated strictly inside its validity domain; outside
//! it the operation returns a typed domain error carrying the violated
//! constraint and its margin. Values are never clamped.

use crate::error::{require_positive, Constraint, Error, Result};
use crate::minimize::{
    bracket_minimum, minimize_scalar, MinimizationResult, NoMinimum, DEFAULT_TOL,
};
use crate::specfun::g;

/// Coupling of the pair potential -v/r.
///
/// `Rescaled(c)` means v = c/N, the large-N normalization under which the
/// energy per particle stays finite. The rescaled formulas use the
/// substituted coefficient forms (lambda^2 c^2, lambda c^2/2,
/// sqrt(lambda/2) c); these coincide algebraically with inserting
/// v = c/N into the raw expressions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coupling {
    Raw(f64),
    Rescaled(f64),
}

impl Coupling {
    pub fn magnitude(self) -> f64 {
        match self {
            Coupling::Raw(x) | Coupling::Rescaled(x) => x,
        }
    }
}

/// Parameters of an N-boson system in natural units (hbar = c = 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    pub n: usize,
    pub mass: f64,
    pub coupling: Coupling,
}

impl SystemParams {
    pub fn new(n: usize, mass: f64, coupling: Coupling) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(Constraint::ParticleCount, n as f64 - 2.0));
        }
        require_positive(mass, Constraint::MassPositive)?;
        require_positive(coupling.magnitude(), Constraint::CouplingPositive)?;
        Ok(SystemParams { n, mass, coupling })
    }

    /// lambda = (N-1)/N
    pub fn lambda(&self) -> f64 {
        let nf = self.n as f64;
        (nf - 1.0) / nf
    }

    /// gamma = N(N-1)/2, the number of pairs
    pub fn gamma(&self) -> f64 {
        let nf = self.n as f64;
        nf * (nf - 1.0) / 2.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    SimpleLower,
    ImprovedLower,
    GaussianUpper,
    HerbstOneBody,
    MartinRoyOneBody,
    SmallCouplingLower,
    SmallCouplingUpper,
}

impl BoundKind {
    /// Short stable code used in CLI output.
    pub fn code(self) -> &'static str {
        match self {
            BoundKind::SimpleLower => "sl",
            BoundKind::ImprovedLower => "l",
            BoundKind::GaussianUpper => "u",
            BoundKind::HerbstOneBody => "herbst",
            BoundKind::MartinRoyOneBody => "mr",
            BoundKind::SmallCouplingLower => "scl",
            BoundKind::SmallCouplingUpper => "scu",
        }
    }
}

/// A bound magnitude with its kind and validity record.
///
/// `constraint_margin` measures the distance from the domain boundary in
/// the constraint's own units (documented per operation); operations only
/// construct values with a positive margin, so `valid` is always true on
/// the success path -- the error path carries the violation otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundValue {
    pub value: f64,
    pub kind: BoundKind,
    pub valid: bool,
    pub constraint_margin: f64,
}

fn bound_value(value: f64, kind: BoundKind, constraint_margin: f64) -> BoundValue {
    BoundValue {
        value,
        kind,
        valid: constraint_margin > 0.0,
        constraint_margin,
    }
}

/// Herbst's one-body lower bound `E >= m sqrt(1 - (pi v / 2)^2)`,
/// valid for 0 < v < 2/pi. Margin: 2/pi - v.
pub fn herbst_lower(m: f64, v: f64) -> Result<BoundValue> {
    require_positive(m, Constraint::MassPositive)?;
    require_positive(v, Constraint::CouplingPositive)?;
    let margin = 2.0 / std::f64::consts::PI - v;
    if margin <= 0.0 {
        return Err(Error::domain(Constraint::HerbstCritical, margin));
    }
    let s = std::f64::consts::FRAC_PI_2 * v;
    let value = m * (1.0 - s * s).sqrt();
    Ok(bound_value(value, BoundKind::HerbstOneBody, margin))
}

/// The Martin-Roy one-body lower bound
/// `E >= m sqrt((1 + sqrt(1 - (2v)^2)) / 2)`, valid for 0 < v < 1/2.
/// Margin: 1/2 - v.
pub fn martin_roy_lower(m: f64, v: f64) -> Result<BoundValue> {
    require_positive(m, Constraint::MassPositive)?;
    require_positive(v, Constraint::CouplingPositive)?;
    let margin = 0.5 - v;
    if margin <= 0.0 {
        return Err(Error::domain(Constraint::MartinRoyCritical, margin));
    }
    let s = 2.0 * v;
    let value = m * ((1.0 + (1.0 - s * s).sqrt()) / 2.0).sqrt();
    Ok(bound_value(value, BoundKind::MartinRoyOneBody, margin))
}

/// Ground value of the Kratzer comparison operator:
/// `-E^2 v^2 / (l + 1)^2` with `l(l+1) = -v^2` resolved to the root
/// satisfying |l| < 1/2, i.e. `l = (-1 + sqrt(1 - 4 v^2)) / 2`.
///
/// Solving `E^2 - m^2 = kratzer_reduction(E, v)` for E reproduces the
/// Martin-Roy bound exactly; the tests assert that fixed-point identity.
pub fn kratzer_reduction(e_guess: f64, v: f64) -> Result<f64> {
    require_positive(e_guess, Constraint::ArgumentPositive)?;
    require_positive(v, Constraint::CouplingPositive)?;
    let margin = 0.5 - v;
    if margin <= 0.0 {
        return Err(Error::domain(Constraint::MartinRoyCritical, margin));
    }
    let ell = (-1.0 + (1.0 - 4.0 * v * v).sqrt()) / 2.0;
    let d = ell + 1.0;
    Ok(-(e_guess * e_guess) * (v * v) / (d * d))
}

/// The simple N/2 lower bound
/// `E >= N m sqrt((1 + sqrt(1 - (N-1)^2 v^2)) / 2)`.
///
/// Raw domain (N-1)v < 1 (margin `1 - (N-1)v`); rescaled form replaces
/// the coefficient by lambda^2 c^2 with domain c < 1 (margin `1 - c`).
pub fn simple_lower(params: &SystemParams) -> Result<BoundValue> {
    let nm = params.n as f64 * params.mass;
    let (s, margin, constraint) = match params.coupling {
        Coupling::Raw(v) => {
            let t = (params.n as f64 - 1.0) * v;
            (t * t, 1.0 - t, Constraint::SimpleLowerRaw)
        }
        Coupling::Rescaled(c) => {
            let lam = params.lambda();
            ((lam * lam) * (c * c), 1.0 - c, Constraint::SimpleLowerRescaled)
        }
    };
    if margin <= 0.0 {
        return Err(Error::domain(constraint, margin));
    }
    let value = nm * ((1.0 + (1.0 - s).sqrt()) / 2.0).sqrt();
    Ok(bound_value(value, BoundKind::SimpleLower, margin))
}

/// The improved lower bound from the relative-coordinate reduction:
/// `E >= N m sqrt((1 + sqrt(1 - gamma v^2)) / 2)`.
///
/// Raw domain gamma v^2 < 1 (margin `1 - gamma v^2`); rescaled form
/// replaces gamma v^2 by lambda c^2 / 2 with domain c < sqrt(2)
/// (margin `sqrt(2) - c`). Coincides with [`simple_lower`] exactly when
/// N = 2 and exceeds it strictly for N >= 3.
pub fn improved_lower(params: &SystemParams) -> Result<BoundValue> {
    let nm = params.n as f64 * params.mass;
    let (s, margin, constraint) = match params.coupling {
        Coupling::Raw(v) => {
            let s = params.gamma() * (v * v);
            (s, 1.0 - s, Constraint::ImprovedLowerRaw)
        }
        Coupling::Rescaled(c) => {
            let lam = params.lambda();
            (
                (0.5 * lam) * (c * c),
                std::f64::consts::SQRT_2 - c,
                Constraint::ImprovedLowerRescaled,
            )
        }
    };
    if margin <= 0.0 {
        return Err(Error::domain(constraint, margin));
    }
    let value = nm * ((1.0 + (1.0 - s).sqrt()) / 2.0).sqrt();
    Ok(bound_value(value, BoundKind::ImprovedLower, margin))
}

/// The dimensionless strength entering the Gaussian bound:
/// a = sqrt(gamma) v (raw) or sqrt(lambda/2) c (rescaled).
pub fn gaussian_strength(params: &SystemParams) -> f64 {
    match params.coupling {
        Coupling::Raw(v) => params.gamma().sqrt() * v,
        Coupling::Rescaled(c) => (params.lambda() / 2.0).sqrt() * c,
    }
}

/// The variational objective `[2 g(mu^2/4) - a] / mu` whose minimum over
/// mu > 0 gives the Gaussian upper bound (times `N m sqrt(2/pi)`).
pub fn variational_objective(a: f64) -> impl Fn(f64) -> f64 {
    move |mu: f64| {
        let x = 0.25 * mu * mu;
        (2.0 * g(x).expect("mu > 0 implies x > 0") - a) / mu
    }
}

/// Where the variational optimum was found.
#[derive(Debug, Clone, PartialEq)]
pub enum VariationalOptimum {
    /// Interior minimum located by bracketing plus golden-section search.
    Interior(MinimizationResult),
    /// The objective was still descending at the bracketing ceiling. This
    /// happens only at tiny couplings, where the true minimizer sits
    /// beyond the scan window while the objective is already within
    /// ~1e-12 of its mu -> inf asymptote; the value at the ceiling is a
    /// rigorous upper bound regardless (any mu is admissible).
    ScanLimit { mu: f64 },
}

/// Result of the scale-optimized Gaussian upper bound.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianUpper {
    pub bound: BoundValue,
    pub optimum: VariationalOptimum,
}

impl GaussianUpper {
    /// The width parameter at which the bound was evaluated.
    pub fn mu_star(&self) -> f64 {
        match &self.optimum {
            VariationalOptimum::Interior(r) => r.mu_star,
            VariationalOptimum::ScanLimit { mu } => *mu,
        }
    }
}

/// The scale-optimized Gaussian upper bound
/// `E <= N m sqrt(2/pi) min_{mu > 0} [2 g(mu^2/4) - a] / mu`.
///
/// A finite minimum exists only for a < 2 (margin `2 - a`); at a >= 2 the
/// objective is unbounded below toward mu = 0 and the operation returns a
/// domain error. A genuine bracketing failure inside the valid domain is
/// reported as [`Error::MinimizerFailure`].
pub fn gaussian_upper(params: &SystemParams) -> Result<GaussianUpper> {
    let a = gaussian_strength(params);
    let margin = 2.0 - a;
    if margin <= 0.0 {
        return Err(Error::domain(Constraint::GaussianCoupling, margin));
    }
    let objective = variational_objective(a);
    // Large-mu stationarity gives mu* ~ 3 sqrt(pi/2) / a; seed the
    // bracketing near it. The scan expands both ways, so the clamp only
    // affects how many doublings are needed.
    let mu0 = (3.0 * (std::f64::consts::PI / 2.0).sqrt() / a).clamp(1e-3, 1e5);
    let prefactor = params.n as f64 * params.mass * (2.0 / std::f64::consts::PI).sqrt();
    match bracket_minimum(&objective, mu0) {
        Ok(bracket) => {
            let result = minimize_scalar(&objective, &bracket, DEFAULT_TOL);
            let value = prefactor * result.f_star;
            Ok(GaussianUpper {
                bound: bound_value(value, BoundKind::GaussianUpper, margin),
                optimum: VariationalOptimum::Interior(result),
            })
        }
        Err(NoMinimum::DecreasingTowardInfinity { mu_limit, f_limit }) => Ok(GaussianUpper {
            bound: bound_value(prefactor * f_limit, BoundKind::GaussianUpper, margin),
            optimum: VariationalOptimum::ScanLimit { mu: mu_limit },
        }),
        Err(NoMinimum::DecreasingTowardZero { .. }) => Err(Error::MinimizerFailure(
            "objective descending toward mu = 0 inside a < 2",
        )),
    }
}

/// Kinetic expectation of the Gaussian trial state:
/// `(phi, sqrt(lambda p^2 + m^2) phi) = (2m/mu) sqrt(2/pi) g(mu^2/4)`.
///
/// The width parameter mu = m sqrt(2N/((N-1) alpha)) already absorbs the
/// lambda factor, so the value depends on N only through mu.
pub fn kinetic_expectation_gaussian(n: usize, m: f64, mu: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain(Constraint::ParticleCount, n as f64 - 2.0));
    }
    require_positive(m, Constraint::MassPositive)?;
    require_positive(mu, Constraint::WidthPositive)?;
    Ok((2.0 * m / mu) * (2.0 / std::f64::consts::PI).sqrt() * g(0.25 * mu * mu)?)
}

/// Potential expectation of the Gaussian trial state:
/// `(phi, V(sqrt(2) r) phi) = -(N m v / mu) sqrt(2 / (pi gamma))`.
pub fn potential_expectation_gaussian(n: usize, m: f64, v: f64, mu: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain(Constraint::ParticleCount, n as f64 - 2.0));
    }
    require_positive(m, Constraint::MassPositive)?;
    require_positive(v, Constraint::CouplingPositive)?;
    require_positive(mu, Constraint::WidthPositive)?;
    let nf = n as f64;
    let gamma = nf * (nf - 1.0) / 2.0;
    Ok(-(nf * m * v / mu) * (2.0 / (std::f64::consts::PI * gamma)).sqrt())
}

/// Small-coupling parabolas for the rescaled family:
/// `N m (1 - lambda c^2 / 16) <= E(c) <= N m (1 - lambda c^2 / (6 pi))`.
///
/// Valid as quadratic approximations for small c; there is no hard domain
/// edge, so the margin is reported as +infinity.
pub fn small_coupling_bounds(n: usize, m: f64, c: f64) -> Result<(BoundValue, BoundValue)> {
    if n < 2 {
        return Err(Error::domain(Constraint::ParticleCount, n as f64 - 2.0));
    }
    require_positive(m, Constraint::MassPositive)?;
    if c < 0.0 || !c.is_finite() {
        return Err(Error::domain(Constraint::CouplingPositive, c));
    }
    let nf = n as f64;
    let lam = (nf - 1.0) / nf;
    let nm = nf * m;
    let lower = nm * (1.0 - lam * c * c / 16.0);
    let upper = nm * (1.0 - lam * c * c / (6.0 * std::f64::consts::PI));
    Ok((
        bound_value(lower, BoundKind::SmallCouplingLower, f64::INFINITY),
        bound_value(upper, BoundKind::SmallCouplingUpper, f64::INFINITY),
    ))
}
