//! Étaleness of monogenic extensions `A -> A[x]/(f)` for a handful of
//! symbolic base rings, decided by whether `disc(f)` is a unit in `A`.
//!
//! Ring elements are polynomials in `t` with rational coefficients; the
//! numeric rings only accept constants. Ring text syntax:
//! `Z`, `Z[1/N]`, `F_p`, `Q`, `Q[t]`, `Q[t,1/g]`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::integer::{is_prime_u64, prime_factors};
use crate::parser::{parse_polynomial, ParseError};
use crate::poly::{discriminant, UniPoly};
use crate::rational::{is_integer, Rational};

/// Polynomials in the auxiliary variable `t`.
pub type TPoly = UniPoly<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EtaleError {
    #[error("unrecognized ring `{0}`; expected Z, Z[1/N], F_p, Q, Q[t] or Q[t,1/g]")]
    InvalidRing(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("Z[1/N] needs N >= 1")]
    ZeroModulus,
    #[error("Q[t,1/g] needs g nonzero")]
    ZeroLocalizer,
    #[error("{element} is not an element of {ring}")]
    NotInRing { element: String, ring: String },
    #[error("polynomial must be monic in x")]
    NotMonic,
    #[error("polynomial must have degree at least 1 in x")]
    Constant,
    #[error("polynomial must have integer coefficients")]
    NonIntegralCoefficients,
    #[error("polynomial may only involve x and t")]
    UnexpectedVariable,
    #[error("the cover needs at least one map")]
    EmptyCover,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingDescriptor {
    /// `Z[1/N]`; `N = 1` is `Z` itself.
    IntegersLocalized(BigUint),
    PrimeField(u64),
    Rationals,
    /// `Q[t, 1/g]`; `g = 1` is `Q[t]`.
    PolyLocalized(TPoly),
}

impl RingDescriptor {
    pub fn integers_localized(n: BigUint) -> Result<Self, EtaleError> {
        if n.is_zero() {
            return Err(EtaleError::ZeroModulus);
        }
        Ok(RingDescriptor::IntegersLocalized(n))
    }

    pub fn prime_field(p: u64) -> Result<Self, EtaleError> {
        if !is_prime_u64(p) {
            return Err(EtaleError::NotPrime(p));
        }
        Ok(RingDescriptor::PrimeField(p))
    }

    pub fn poly_localized(g: TPoly) -> Result<Self, EtaleError> {
        if g.is_zero() {
            return Err(EtaleError::ZeroLocalizer);
        }
        Ok(RingDescriptor::PolyLocalized(g.monic()))
    }

    /// Whether `e` lies in the ring.
    pub fn contains(&self, e: &TPoly) -> bool {
        let c = e.coeff(0);
        match self {
            RingDescriptor::PolyLocalized(_) => true,
            _ if !e.is_constant() => false,
            RingDescriptor::Rationals => true,
            RingDescriptor::PrimeField(p) => !(c.denom() % BigInt::from(*p)).is_zero(),
            RingDescriptor::IntegersLocalized(n) => strip_support(c.denom().magnitude(), n).is_one(),
        }
    }

    fn check(&self, e: &TPoly) -> Result<(), EtaleError> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(EtaleError::NotInRing {
                element: e.display_in("t").to_string(),
                ring: self.to_string(),
            })
        }
    }
}

/// Removes from `m` every prime factor it shares with `n`.
fn strip_support(m: &BigUint, n: &BigUint) -> BigUint {
    let mut m = m.clone();
    loop {
        let g = m.gcd(n);
        if g.is_one() || m.is_zero() {
            return m;
        }
        m /= g;
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::IntegersLocalized(n) if n.is_one() => write!(f, "Z"),
            RingDescriptor::IntegersLocalized(n) => write!(f, "Z[1/{n}]"),
            RingDescriptor::PrimeField(p) => write!(f, "F_{p}"),
            RingDescriptor::Rationals => write!(f, "Q"),
            RingDescriptor::PolyLocalized(g) if g.is_one() => write!(f, "Q[t]"),
            RingDescriptor::PolyLocalized(g) => write!(f, "Q[t,1/({})]", g.display_in("t")),
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = EtaleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || EtaleError::InvalidRing(s.trim().to_string());
        match compact.as_str() {
            "Z" => return Ok(RingDescriptor::IntegersLocalized(BigUint::one())),
            "Q" => return Ok(RingDescriptor::Rationals),
            "Q[t]" => return Ok(RingDescriptor::PolyLocalized(TPoly::one())),
            _ => {}
        }
        if let Some(n) = compact.strip_prefix("Z[1/").and_then(|r| r.strip_suffix(']')) {
            let n: BigUint = n.parse().map_err(|_| bad())?;
            return Self::integers_localized(n);
        }
        if let Some(p) = compact.strip_prefix("F_") {
            let p: u64 = p.parse().map_err(|_| bad())?;
            return Self::prime_field(p);
        }
        if let Some(g) = compact.strip_prefix("Q[t,1/").and_then(|r| r.strip_suffix(']')) {
            let g = parse_polynomial(g)?.to_unipoly("t").ok_or(EtaleError::UnexpectedVariable)?;
            return Self::poly_localized(g);
        }
        Err(bad())
    }
}

/// Why an element fails to be a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    Zero,
    /// A prime dividing the element that the ring does not invert.
    Prime(BigUint),
    /// A monic factor in `t` that the ring does not invert; irreducible
    /// whenever it is linear.
    Factor(TPoly),
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::Zero => write!(f, "zero"),
            Obstruction::Prime(p) => write!(f, "prime {p}"),
            Obstruction::Factor(g) => write!(f, "factor {}", g.display_in("t")),
        }
    }
}

/// `None` when `e` is a unit of `ring`, otherwise the reason it is not.
pub fn unit_obstruction(ring: &RingDescriptor, e: &TPoly) -> Result<Option<Obstruction>, EtaleError> {
    ring.check(e)?;
    if e.is_zero() {
        return Ok(Some(Obstruction::Zero));
    }
    let c = e.coeff(0);
    Ok(match ring {
        RingDescriptor::Rationals => None,
        RingDescriptor::PrimeField(p) => {
            let p = BigInt::from(*p);
            (c.numer() % &p).is_zero().then(|| Obstruction::Prime(p.magnitude().clone()))
        }
        RingDescriptor::IntegersLocalized(n) => {
            let rest = strip_support(c.numer().magnitude(), n);
            prime_factors(&BigInt::from(rest)).into_iter().next().map(Obstruction::Prime)
        }
        RingDescriptor::PolyLocalized(g) => {
            let mut rest = e.monic();
            loop {
                let h = rest.gcd(g);
                if h.is_constant() {
                    break;
                }
                rest = rest.div_rem(&h).0;
            }
            (!rest.is_constant()).then(|| Obstruction::Factor(pick_factor(&rest)))
        }
    })
}

/// A linear factor when one exists, otherwise the whole monic polynomial.
fn pick_factor(r: &TPoly) -> TPoly {
    match r.rational_roots().ok().and_then(|roots| roots.into_iter().next()) {
        Some(root) => TPoly::new(vec![-root, Rational::one()]),
        None => r.monic(),
    }
}

pub fn is_unit(ring: &RingDescriptor, e: &TPoly) -> Result<bool, EtaleError> {
    Ok(unit_obstruction(ring, e)?.is_none())
}

/// A monic `f` in `x` over a base ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaleCandidate {
    base: RingDescriptor,
    f: UniPoly<TPoly>,
}

impl EtaleCandidate {
    pub fn new(base: RingDescriptor, f: UniPoly<TPoly>) -> Result<Self, EtaleError> {
        match f.degree() {
            None | Some(0) => return Err(EtaleError::Constant),
            Some(_) if !f.is_monic() => return Err(EtaleError::NotMonic),
            _ => {}
        }
        for c in f.coeffs() {
            base.check(c)?;
        }
        Ok(EtaleCandidate { base, f })
    }

    /// Parses `f` written in `x` (and `t` for polynomial bases).
    pub fn parse(base: RingDescriptor, f: &str) -> Result<Self, EtaleError> {
        let f = parse_polynomial(f)?
            .to_unipoly_over("x", "t")
            .ok_or(EtaleError::UnexpectedVariable)?;
        Self::new(base, f)
    }

    pub fn base(&self) -> &RingDescriptor {
        &self.base
    }

    pub fn f(&self) -> &UniPoly<TPoly> {
        &self.f
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaleVerdict {
    pub etale: bool,
    pub discriminant: TPoly,
    pub obstruction: Option<Obstruction>,
}

pub fn is_etale(candidate: &EtaleCandidate) -> EtaleVerdict {
    let disc = discriminant(&candidate.f).expect("candidate has degree >= 1");
    let obstruction =
        unit_obstruction(&candidate.base, &disc).expect("discriminant of ring elements lies in the ring");
    EtaleVerdict {
        etale: obstruction.is_none(),
        discriminant: disc,
        obstruction,
    }
}

fn integer_coeffs(f: &UniPoly<Rational>) -> Result<Vec<BigInt>, EtaleError> {
    if !f.coeffs().iter().all(is_integer) {
        return Err(EtaleError::NonIntegralCoefficients);
    }
    match f.degree() {
        None | Some(0) => Err(EtaleError::Constant),
        Some(_) if !f.is_monic() => Err(EtaleError::NotMonic),
        _ => Ok(f.coeffs().iter().map(|c| c.numer().clone()).collect()),
    }
}

/// Number of distinct roots of `f mod p` over an algebraic closure of `F_p`.
pub fn geometric_fiber_count(f: &UniPoly<Rational>, p: u64) -> Result<usize, EtaleError> {
    let coeffs = integer_coeffs(f)?;
    if !is_prime_u64(p) {
        return Err(EtaleError::NotPrime(p));
    }
    let pb = BigInt::from(p);
    let reduced: Vec<u64> = coeffs
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue below p"))
        .collect();
    Ok(fp::radical_degree(&fp::trim(reduced), p))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateReport {
    pub f: UniPoly<Rational>,
    pub n: BigUint,
    pub verdict: EtaleVerdict,
    /// Prime factors of `N`.
    pub inverted: Vec<BigUint>,
    /// Prime factors of `disc(f)`; empty when the discriminant is zero.
    pub ramified: Vec<BigUint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub covers: bool,
    pub candidates: Vec<CandidateReport>,
    /// Primes inverted by every map, so missed by every image.
    pub uncovered: Vec<BigUint>,
}

/// Whether the maps `Spec Z[1/N_i][x]/(f_i) -> Spec Z` are étale and
/// jointly surjective.
pub fn covers_spec_z(maps: &[(UniPoly<Rational>, BigUint)]) -> Result<CoverReport, EtaleError> {
    if maps.is_empty() {
        return Err(EtaleError::EmptyCover);
    }
    let mut candidates = Vec::with_capacity(maps.len());
    let mut common = BigUint::zero();
    for (f, n) in maps {
        integer_coeffs(f)?;
        let base = RingDescriptor::integers_localized(n.clone())?;
        let lifted = UniPoly::new(f.coeffs().iter().cloned().map(TPoly::constant).collect());
        let verdict = is_etale(&EtaleCandidate::new(base, lifted)?);
        let disc = verdict.discriminant.coeff(0).numer().clone();
        let ramified = if disc.is_zero() { Vec::new() } else { prime_factors(&disc) };
        common = common.gcd(n);
        candidates.push(CandidateReport {
            f: f.clone(),
            n: n.clone(),
            inverted: prime_factors(&BigInt::from(n.clone())),
            ramified,
            verdict,
        });
    }
    let uncovered = prime_factors(&BigInt::from(common));
    let covers = uncovered.is_empty() && candidates.iter().all(|c| c.verdict.etale);
    Ok(CoverReport {
        covers,
        candidates,
        uncovered,
    })
}

/// Dense polynomials over `F_p`, lowest degree first, no trailing zeros.
mod fp {
    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 * b as u128) % p as u128) as u64
    }

    fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(acc, a, p);
            }
            a = mul_mod(a, a, p);
            e >>= 1;
        }
        acc
    }

    fn inv(a: u64, p: u64) -> u64 {
        pow_mod(a, p - 2, p)
    }

    fn derivative(a: &[u64], p: u64) -> Vec<u64> {
        trim(a.iter().enumerate().skip(1).map(|(k, &c)| mul_mod(c, k as u64 % p, p)).collect())
    }

    pub fn div_rem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let db = b.len() - 1;
        let lead_inv = inv(b[db], p);
        let mut r = a.to_vec();
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let mut q = vec![0; r.len() - db];
        for k in (db..r.len()).rev() {
            let c = mul_mod(r[k], lead_inv, p);
            if c == 0 {
                continue;
            }
            for (j, &bc) in b.iter().enumerate() {
                r[k - db + j] = (r[k - db + j] + p - mul_mod(c, bc, p)) % p;
            }
            q[k - db] = c;
        }
        (trim(q), trim(r))
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let r = div_rem(&a, &b, p).1;
            a = b;
            b = r;
        }
        a
    }

    fn degree(a: &[u64]) -> usize {
        a.len().saturating_sub(1)
    }

    /// Degree of the product of the distinct monic irreducible factors of `f`.
    pub fn radical_degree(f: &[u64], p: u64) -> usize {
        degree(&radical(f, p))
    }

    fn radical(f: &[u64], p: u64) -> Vec<u64> {
        if f.len() <= 1 {
            return vec![1];
        }
        let d = derivative(f, p);
        if d.is_empty() {
            // f(x) = g(x^p) = g(x)^p, as Frobenius fixes F_p.
            let g: Vec<u64> = f.iter().step_by(p as usize).copied().collect();
            return radical(&g, p);
        }
        let g = gcd(f, &d, p);
        let w = div_rem(f, &g, p).0;
        let rg = radical(&g, p);
        let common = gcd(&w, &rg, p);
        let mut out = vec![0; w.len() + rg.len() - 1];
        for (i, &a) in w.iter().enumerate() {
            for (j, &b) in rg.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        div_rem(&out, &common, p).0
    }
}
