//! Rigorous lower and upper bounds for the ground-state energy of
//! semirelativistic gravitating N-boson systems,
//!
//! ```text
//! H = sum_{i=1}^N sqrt(p_i^2 + m^2) - sum_{i<j} v / r_ij,   v > 0,
//! ```
//!
//! together with the numerical oracles that verify them independently.
//!
//! * [`specfun`] -- the modified Bessel function K1 and the kinetic-energy
//!   profile g(x) = x e^x K1(x), with a quadrature oracle for the integral
//!   identity behind g.
//! * [`jacobi`] -- the orthogonal Jacobi transformation matrix and the
//!   geometry coefficients used by the bounds, plus deterministic checks
//!   of the representability identities.
//! * [`bounds`] -- every closed-form bound: Herbst, Martin-Roy, the
//!   Kratzer reduction, the simple N/2 bound, the improved
//!   relative-coordinate bound, the scale-optimized Gaussian upper bound,
//!   the rescaled v = c/N family, and the small-coupling parabolas.
//! * [`minimize`] -- bracketing and golden-section search for the
//!   variational width parameter, with explicit no-interior-minimum
//!   detection.
//! * [`verify`] -- independent oracles: a Rayleigh-Ritz solver for the
//!   one-body semirelativistic Coulomb problem, Gaussian-expectation
//!   quadratures, a seeded triangle-inequality sampler, the
//!   nonrelativistic oscillator sanity identity, and the bundled
//!   verification suites.
//!
//! All operations are pure functions of their arguments and safe to call
//! concurrently. Natural units (hbar = c = 1) throughout.

pub mod bounds;
pub mod error;
pub mod jacobi;
pub mod minimize;
mod quad;
pub mod specfun;
pub mod verify;

pub use error::{Constraint, DomainViolation, Error, Result};
