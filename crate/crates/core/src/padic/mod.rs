//! Capped absolute-precision p-adic integers and the analytic tools built on
//! them: the logarithm, iterated integrals on the thrice-punctured line, and
//! Strassmann zero counting.

mod iterated;
mod log;
mod number;
mod series;

use thiserror::Error;

pub use iterated::{iterated_integral, shuffle_check, shuffles, word_series, DlogWord, Letter};
pub use log::{log_truncation_index, padic_log};
pub use number::PadicNumber;
pub use series::{locate_zeros, strassmann_bound, PadicSeries, ZeroClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadicError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("precision must be at least 1")]
    ZeroPrecision,
    #[error("{0} is not a p-adic integer: its denominator is divisible by p")]
    NotIntegral(String),
    #[error("{0} is not a unit")]
    NotUnit(String),
    #[error("outside the convergence disk: log needs u = 1 mod {modulus}")]
    OutsideConvergenceDisk { modulus: u64 },
    #[error("iterated integrals need an odd prime")]
    EvenPrime,
    #[error("z must satisfy v(z) >= 1 to stay in the residue disk of 0")]
    OutsideResidueDisk,
    #[error("divergent at basepoint: the innermost form must be w1")]
    DivergentAtBasepoint,
    #[error("empty word")]
    EmptyWord,
    #[error("invalid letter `{0}`; use 0 for w0 and 1 for w1")]
    InvalidLetter(char),
    #[error("the integral at this point is not a p-adic integer")]
    ResultNotIntegral,
    #[error("series indistinguishable from zero at working precision")]
    IndistinguishableFromZero,
    #[error("series not admissible: tail bound {tail} does not exceed the minimal valuation {min}")]
    Inadmissible { min: u32, tail: u32 },
    #[error("coefficient {index} is zero to precision {precision}, which does not separate it from the minimal valuation {min}")]
    InsufficientPrecision { index: usize, precision: u32, min: u32 },
    #[error("depth {depth} exceeds the working precision {precision}")]
    DepthExceedsPrecision { depth: u32, precision: u32 },
    #[error("mixed primes {0} and {1}")]
    PrimeMismatch(u64, u64),
}
