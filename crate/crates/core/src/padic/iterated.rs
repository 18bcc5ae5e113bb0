//! Iterated integrals of `w0 = dt/t` and `w1 = dt/(1-t)` from the basepoint 0.
//!
//! A word is read right to left: the rightmost letter is integrated first.
//! So `[w0, w1]` is the dilogarithm `sum z^k / k^2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::log::ilog;
use super::{PadicError, PadicNumber};
use crate::integer::mod_inverse;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// `dt/t`
    Omega0,
    /// `dt/(1-t)`
    Omega1,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DlogWord(Vec<Letter>);

impl DlogWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self, PadicError> {
        if letters.is_empty() {
            return Err(PadicError::EmptyWord);
        }
        Ok(DlogWord(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Convergent at 0 exactly when the innermost form is `w1`.
    pub fn converges_at_basepoint(&self) -> bool {
        self.0.last() == Some(&Letter::Omega1)
    }
}

impl fmt::Display for DlogWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::Omega0 => "0",
                Letter::Omega1 => "1",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DlogWord {
    type Err = PadicError;

    /// Letters `0` (`w0`) and `1` (`w1`), leftmost outermost.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(Letter::Omega0),
                '1' => Ok(Letter::Omega1),
                other => Err(PadicError::InvalidLetter(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        DlogWord::new(letters)
    }
}

/// Exact coefficients `a_0..a_{len-1}` of the power series of the integral
/// of `word` from 0 to `t`.
pub fn word_series(word: &DlogWord, len: usize) -> Result<Vec<Rational>, PadicError> {
    let mut c = vec![Rational::zero(); len];
    if len > 0 {
        c[0] = Rational::one();
    }
    for letter in word.letters().iter().rev() {
        let mut next = vec![Rational::zero(); len];
        match letter {
            Letter::Omega1 => {
                // Multiply by 1/(1-t), then integrate.
                let mut partial = Rational::zero();
                for k in 1..len {
                    partial += &c[k - 1];
                    next[k] = &partial / Rational::from_integer(k.into());
                }
            }
            Letter::Omega0 => {
                if !c.first().is_none_or(Zero::is_zero) {
                    return Err(PadicError::DivergentAtBasepoint);
                }
                for k in 1..len {
                    next[k] = &c[k] / Rational::from_integer(k.into());
                }
            }
        }
        c = next;
    }
    Ok(c)
}

/// First index `K` such that every term `a_k z^k` with `k >= K` has valuation
/// at least `prec`, given `v(z) = v` and a word of length `m`.
///
/// Each integration divides by an index at most `k`, so
/// `v(a_k) >= -m floor(log_p k)`.
fn series_length(p: u64, v: u32, m: u32, prec: u32) -> usize {
    let (v, m, prec) = (v as f64, m as f64, prec as f64);
    // Beyond k0 the bound k v - m log_p k is increasing.
    let k0 = (m / (v * (p as f64).ln())).ceil() as u64 + 1;
    let mut k = 1u64;
    loop {
        let conservative = k as f64 * v - m * (ilog(p, k) as f64 + 1.0);
        if k >= k0 && conservative >= prec {
            return k as usize;
        }
        k += 1;
    }
}

/// The iterated integral of `word` from 0 to `z`, modulo `p^prec`.
///
/// The representative of `z` is taken as exact. Requires an odd prime,
/// `v(z) >= 1`, and a result in `Z_p`.
pub fn iterated_integral(word: &DlogWord, z: &PadicNumber, prec: u32) -> Result<PadicNumber, PadicError> {
    let p = z.p();
    if p == 2 {
        return Err(PadicError::EvenPrime);
    }
    if prec == 0 {
        return Err(PadicError::ZeroPrecision);
    }
    if !word.converges_at_basepoint() {
        return Err(PadicError::DivergentAtBasepoint);
    }
    if z.valuation() < 1 {
        return Err(PadicError::OutsideResidueDisk);
    }
    if z.is_zero() {
        return Ok(PadicNumber::reduced(p, prec, BigInt::zero()));
    }
    let len = series_length(p, z.valuation(), word.len() as u32, prec);
    let coeffs = word_series(word, len)?;
    let zr = Rational::from_integer(z.rep().clone());
    let mut sum = Rational::zero();
    let mut power = Rational::one();
    for a in &coeffs {
        sum += a * &power;
        power *= &zr;
    }
    let modulus = BigInt::from(p).pow(prec);
    let inv = mod_inverse(sum.denom(), &modulus).ok_or(PadicError::ResultNotIntegral)?;
    Ok(PadicNumber::reduced(p, prec, sum.numer() * inv))
}

/// Every interleaving of `a` and `b`, with multiplicity.
pub fn shuffles(a: &[Letter], b: &[Letter]) -> Vec<Vec<Letter>> {
    match (a.split_first(), b.split_first()) {
        (None, _) => vec![b.to_vec()],
        (_, None) => vec![a.to_vec()],
        (Some((x, ra)), Some((y, rb))) => {
            let mut out = Vec::new();
            for mut w in shuffles(ra, b) {
                w.insert(0, *x);
                out.push(w);
            }
            for mut w in shuffles(a, rb) {
                w.insert(0, *y);
                out.push(w);
            }
            out
        }
    }
}

/// Checks `I(A) I(B) = sum over shuffles S of I(S)` modulo `p^prec`.
///
/// Every integral is a `Z_p` value correct modulo `p^prec`, so the identity
/// is tested with no loss of precision.
pub fn shuffle_check(a: &DlogWord, b: &DlogWord, z: &PadicNumber, prec: u32) -> Result<bool, PadicError> {
    let lhs = iterated_integral(a, z, prec)?.mul(&iterated_integral(b, z, prec)?);
    let mut rhs = PadicNumber::reduced(z.p(), prec, BigInt::zero());
    for s in shuffles(a.letters(), b.letters()) {
        rhs = rhs.add(&iterated_integral(&DlogWord(s), z, prec)?);
    }
    Ok(lhs.truncate(prec) == rhs)
}
