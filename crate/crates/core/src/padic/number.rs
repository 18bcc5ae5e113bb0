use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::PadicError;
use crate::integer::{is_prime_u64, mod_inverse};
use crate::rational::Rational;

/// An element of `Z_p` known modulo `p^N`.
///
/// The representative lies in `[0, p^N)`. A zero representative means the
/// value has valuation at least `N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PadicNumber {
    p: u64,
    prec: u32,
    rep: BigInt,
}

impl PadicNumber {
    pub fn new(p: u64, prec: u32, value: &BigInt) -> Result<Self, PadicError> {
        if !is_prime_u64(p) {
            return Err(PadicError::NotPrime(p));
        }
        if prec == 0 {
            return Err(PadicError::ZeroPrecision);
        }
        Ok(Self::reduced(p, prec, value.clone()))
    }

    pub fn from_i64(p: u64, prec: u32, value: i64) -> Result<Self, PadicError> {
        Self::new(p, prec, &BigInt::from(value))
    }

    /// Embeds a rational whose denominator is prime to `p`.
    pub fn from_rational(p: u64, prec: u32, value: &Rational) -> Result<Self, PadicError> {
        let zero = Self::new(p, prec, &BigInt::zero())?;
        let modulus = zero.modulus();
        let inv = mod_inverse(value.denom(), &modulus).ok_or_else(|| PadicError::NotIntegral(value.to_string()))?;
        Ok(Self::reduced(p, prec, value.numer() * inv))
    }

    /// Trusted constructor; `p` prime and `prec >= 1` are the caller's duty.
    pub(super) fn reduced(p: u64, prec: u32, value: BigInt) -> Self {
        let modulus = BigInt::from(p).pow(prec);
        PadicNumber {
            p,
            prec,
            rep: value.mod_floor(&modulus),
        }
    }

    pub fn zero(p: u64, prec: u32) -> Result<Self, PadicError> {
        Self::new(p, prec, &BigInt::zero())
    }

    pub fn one(p: u64, prec: u32) -> Result<Self, PadicError> {
        Self::new(p, prec, &BigInt::one())
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// Representative in `[0, p^N)`.
    pub fn rep(&self) -> &BigInt {
        &self.rep
    }

    pub fn modulus(&self) -> BigInt {
        BigInt::from(self.p).pow(self.prec)
    }

    /// Zero to the known precision.
    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// Exact valuation when nonzero, otherwise the lower bound `N`.
    pub fn valuation(&self) -> u32 {
        if self.rep.is_zero() {
            return self.prec;
        }
        let p = BigInt::from(self.p);
        let mut m = self.rep.clone();
        let mut v = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            v += 1;
        }
        v
    }

    /// The same value known only modulo `p^prec`, `prec <= N`.
    pub fn truncate(&self, prec: u32) -> Self {
        assert!(prec >= 1 && prec <= self.prec, "cannot truncate to precision {prec}");
        Self::reduced(self.p, prec, self.rep.clone())
    }

    /// Whether the two values agree modulo `p^min(N, N')`.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.same_prime(other);
        let prec = self.prec.min(other.prec);
        self.truncate(prec).rep == other.truncate(prec).rep
    }

    fn same_prime(&self, other: &Self) {
        assert_eq!(self.p, other.p, "mixed p-adic numbers with different primes");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_prime(other);
        Self::reduced(self.p, self.prec.min(other.prec), &self.rep + &other.rep)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_prime(other);
        Self::reduced(self.p, self.prec.min(other.prec), &self.rep - &other.rep)
    }

    pub fn neg(&self) -> Self {
        Self::reduced(self.p, self.prec, -&self.rep)
    }

    /// Product, known modulo `p^min(N + v', N' + v)`.
    pub fn mul(&self, other: &Self) -> Self {
        self.same_prime(other);
        let prec = (self.prec + other.valuation()).min(other.prec + self.valuation());
        Self::reduced(self.p, prec, &self.rep * &other.rep)
    }

    pub fn inverse(&self) -> Result<Self, PadicError> {
        let inv = mod_inverse(&self.rep, &self.modulus()).ok_or_else(|| PadicError::NotUnit(self.to_string()))?;
        Ok(Self::reduced(self.p, self.prec, inv))
    }
}

impl fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+O({}^{})", self.rep, self.p, self.prec)
    }
}
