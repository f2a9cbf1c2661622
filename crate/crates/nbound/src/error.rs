//! Error types shared across the crate.
//!
//! Every bound has a strict validity domain; evaluating outside it is an
//! error, never a clamped value. Domain errors carry the violated
//! constraint together with its signed margin so callers (and the CLI)
//! can report exactly how far outside the domain the request was.

use thiserror::Error;

/// The strict inequalities that delimit where each quantity is defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    /// N >= 2.
    ParticleCount,
    /// m > 0.
    MassPositive,
    /// v > 0 (raw) or c > 0 (rescaled).
    CouplingPositive,
    /// x > 0 for the special functions.
    ArgumentPositive,
    /// mu > 0 for the Gaussian variational expectations.
    WidthPositive,
    /// v < 2/pi, the critical coupling of the Friedrichs extension.
    HerbstCritical,
    /// v < 1/2, where the Kratzer exponent stays real.
    MartinRoyCritical,
    /// (N-1) v < 1 for the simple N-body lower bound.
    SimpleLowerRaw,
    /// c < 1 for the rescaled simple lower bound.
    SimpleLowerRescaled,
    /// gamma v^2 < 1 for the improved lower bound, gamma = N(N-1)/2.
    ImprovedLowerRaw,
    /// c < sqrt(2) for the rescaled improved lower bound.
    ImprovedLowerRescaled,
    /// a < 2 for the Gaussian upper bound, a = sqrt(gamma) v or sqrt(lambda/2) c.
    GaussianCoupling,
    /// v < 1 for the one-body Gaussian variational bound.
    OneBodyGaussianCoupling,
}

impl Constraint {
    /// Short stable identifier, used in CLI output.
    pub fn name(self) -> &'static str {
        match self {
            Constraint::ParticleCount => "N >= 2",
            Constraint::MassPositive => "m > 0",
            Constraint::CouplingPositive => "coupling > 0",
            Constraint::ArgumentPositive => "x > 0",
            Constraint::WidthPositive => "mu > 0",
            Constraint::HerbstCritical => "v < 2/pi",
            Constraint::MartinRoyCritical => "v < 1/2",
            Constraint::SimpleLowerRaw => "(N-1)v < 1",
            Constraint::SimpleLowerRescaled => "c < 1",
            Constraint::ImprovedLowerRaw => "gamma v^2 < 1",
            Constraint::ImprovedLowerRescaled => "c < sqrt(2)",
            Constraint::GaussianCoupling => "a < 2",
            Constraint::OneBodyGaussianCoupling => "v < 1",
        }
    }
}

/// A violated domain constraint with its signed margin.
///
/// The margin is the distance from the boundary measured so that positive
/// means "inside the domain"; a violation therefore carries `margin <= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainViolation {
    pub constraint: Constraint,
    pub margin: f64,
}

impl std::fmt::Display for DomainViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "constraint {} violated (margin {:e})",
            self.constraint.name(),
            self.margin
        )
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(DomainViolation),

    /// K1(x) rounds to zero in f64 even through the scaled evaluation path.
    #[error("underflow: K1({x:e}) is below the smallest positive normal f64")]
    Underflow { x: f64 },

    /// The variational objective decreases all the way to the scan limit,
    /// so no interior minimum exists.
    #[error("no interior minimum: objective still decreasing at mu = {mu_limit:e}")]
    NoMinimum { mu_limit: f64, f_limit: f64 },

    /// A minimizer failed where an interior minimum was expected.
    #[error("minimizer failure: {0}")]
    MinimizerFailure(&'static str),

    /// The dense symmetric eigensolver did not converge.
    #[error("eigensolver failed to converge for a {size}x{size} matrix")]
    Eigensolve { size: usize },

    /// A quadrature produced a non-finite result.
    #[error("quadrature failure: {0}")]
    Quadrature(&'static str),

    /// A quadrature specification broke one of its invariants.
    #[error("invalid quadrature spec: {0}")]
    InvalidSpec(&'static str),
}

impl Error {
    pub(crate) fn domain(constraint: Constraint, margin: f64) -> Self {
        Error::Domain(DomainViolation { constraint, margin })
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Checks `value > 0`, reporting `constraint` with margin `value` otherwise.
pub(crate) fn require_positive(value: f64, constraint: Constraint) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(constraint, value))
    }
}
