//! Crate-wide error type.

use num_complex::Complex64;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("function has a pole at the origin")]
    PoleAtOrigin,

    #[error("|f| fell below the safety floor on the contour near {at}; perturb the rectangle")]
    ContourThroughZero { at: Complex64 },

    #[error("winding integral did not settle near an integer (last value {value})")]
    WindingNonConvergent { value: f64 },

    #[error("newton refinement did not converge within {max_iters} iterations from {start}")]
    NewtonDivergence { start: Complex64, max_iters: usize },

    #[error("zero search lost roots: contour count {expected} but {found} refined zeros")]
    CountMismatch { expected: usize, found: usize },

    #[error("modal denominator vanished (|den| = {denom_mag:.3e}) at k = {k}: interior resonance")]
    Resonance { k: f64, denom_mag: f64 },

    #[error("k^2 n hits a Dirichlet eigenvalue of the disk (|J_{mode}(k sqrt n)| = {mag:.3e})")]
    DirichletEigenvalue { mode: u32, mag: f64 },

    #[error("quadrature did not converge: doubling changed the result by {change:.3e}")]
    QuadratureNonConvergence { change: f64 },

    #[error("series truncation did not converge")]
    TruncationNonConvergence,

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Format(String),
}
