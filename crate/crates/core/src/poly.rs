//! Dense univariate polynomials over an exact coefficient ring.
//!
//! Coefficients are stored lowest degree first with trailing zeros trimmed,
//! so the zero polynomial is the empty vector and `degree = len - 1`
//! otherwise. The coefficient ring is either [`Rational`] or `UniPoly<Rational>`
//! (polynomials in an auxiliary variable `t`), which is all the discriminant
//! computations over `Q[t]` need.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::integer::{mod_inverse, next_prime};
use crate::rational::{common_denominator, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("indeterminate roots: the zero polynomial vanishes everywhere")]
    IndeterminateRoots,
    #[error("resultant of two zero polynomials is undefined")]
    BothZero,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial must have degree at least 1")]
    Constant,
}

/// Commutative ring with exact division where it exists.
pub trait Ring:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    /// `Some(q)` with `q * rhs == self`, `None` if `rhs` does not divide `self`.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    fn from_i64(n: i64) -> Self;
}

impl Ring for Rational {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }

    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    /// Builds a polynomial from coefficients, lowest degree first.
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * R::from_i64(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn scale(&self, by: &R) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * by.clone()).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(R::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<R: Ring> Zero for UniPoly<R> {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for UniPoly<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Ring> Add<&UniPoly<R>> for &UniPoly<R> {
    type Output = UniPoly<R>;

    fn add(self, rhs: &UniPoly<R>) -> UniPoly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<R: Ring> Sub<&UniPoly<R>> for &UniPoly<R> {
    type Output = UniPoly<R>;

    fn sub(self, rhs: &UniPoly<R>) -> UniPoly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<R: Ring> Mul<&UniPoly<R>> for &UniPoly<R> {
    type Output = UniPoly<R>;

    fn mul(self, rhs: &UniPoly<R>) -> UniPoly<R> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let slot = std::mem::replace(&mut out[i + j], R::zero());
                out[i + j] = slot + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }
}

impl<R: Ring> Neg for &UniPoly<R> {
    type Output = UniPoly<R>;

    fn neg(self) -> UniPoly<R> {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<R: Ring> $tr for UniPoly<R> {
            type Output = UniPoly<R>;
            fn $m(self, rhs: UniPoly<R>) -> UniPoly<R> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<R: Ring> Neg for UniPoly<R> {
    type Output = UniPoly<R>;

    fn neg(self) -> UniPoly<R> {
        -&self
    }
}

impl UniPoly<Rational> {
    /// Builds a polynomial from integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_i64(c)).collect())
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - d];
        for k in (d..rem.len()).rev() {
            let c = &rem[k] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k - d + j] -= &c * dc;
            }
            quot[k - d] = c;
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Integer coefficients of the primitive multiple with positive leading
    /// coefficient.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        let den = common_denominator(&self.coeffs);
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if !content.is_zero() {
            let sign = if ints.last().is_some_and(|l| l.is_negative()) { -1 } else { 1 };
            let content = content * sign;
            for c in &mut ints {
                *c /= &content;
            }
        }
        ints
    }

    /// Every rational root, each exactly once, ascending.
    ///
    /// The squarefree part `s` is scaled to a primitive integer polynomial with
    /// leading coefficient `d`; substituting `x = y / d` gives a monic integer
    /// polynomial whose rational roots are integers. Those are found by
    /// Hensel-lifting the simple roots modulo a small prime past twice the
    /// Cauchy bound, so completeness does not depend on factoring `s(0)` or `d`.
    pub fn rational_roots(&self) -> Result<Vec<Rational>, PolyError> {
        let n = self.degree().ok_or(PolyError::IndeterminateRoots)?;
        if n == 0 {
            return Ok(Vec::new());
        }
        let a = self.primitive_integer_coeffs();
        let g = integer_poly_gcd(&a, &integer_derivative(&a));
        let a = integer_exact_quotient(&a, &g);
        let deg = a.len() - 1;
        let lead = a[deg].clone();
        let mut monic: Vec<BigInt> = (0..deg)
            .map(|i| &a[i] * num_traits::pow(lead.clone(), deg - 1 - i))
            .collect();
        monic.push(BigInt::one());
        let mut roots: Vec<Rational> = integer_roots_of_monic(&monic)
            .into_iter()
            .map(|y| Rational::new(y, lead.clone()))
            .collect();
        roots.sort();
        roots.dedup();
        debug_assert!(roots.iter().all(|r| self.eval(r).is_zero()));
        Ok(roots)
    }

    /// Renders with `var` as the indeterminate, e.g. `x^2 - 3/4*x + 1`.
    pub fn display_in<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        DisplayIn { poly: self, var }
    }
}

struct DisplayIn<'a> {
    poly: &'a UniPoly<Rational>,
    var: &'a str,
}

impl fmt::Display for DisplayIn<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .poly
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let mono = match k {
                    0 => String::new(),
                    1 => self.var.to_string(),
                    _ => format!("{}^{}", self.var, k),
                };
                (c, mono)
            });
        write_terms(f, terms)
    }
}

impl fmt::Display for UniPoly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("x"))
    }
}

impl<R: fmt::Debug> fmt::Debug for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("UniPoly").field(&self.coeffs).finish()
    }
}

/// Shared term printer: `-x^2 + 3/4*x*y - 1`, or `0` for no terms.
pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Rational, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        let negative = c.is_negative();
        if first {
            if negative {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if negative { " - " } else { " + " })?;
        }
        let mag = c.abs();
        match (mono.is_empty(), mag.is_one()) {
            (true, _) => write!(f, "{mag}")?,
            (false, true) => f.write_str(&mono)?,
            (false, false) => write!(f, "{mag}*{mono}")?,
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl Ring for UniPoly<Rational> {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }

    fn from_i64(n: i64) -> Self {
        Self::constant(Rational::from_i64(n))
    }
}

/// Sylvester matrix of `p` (degree n) and `q` (degree m): m shifted rows of
/// p's coefficients followed by n shifted rows of q's, highest degree first.
pub fn sylvester_matrix<R: Ring>(p: &UniPoly<R>, q: &UniPoly<R>) -> Vec<Vec<R>> {
    let n = p.degree().unwrap_or(0);
    let m = q.degree().unwrap_or(0);
    let size = n + m;
    let mut rows = Vec::with_capacity(size);
    for (poly, shifts, deg) in [(p, m, n), (q, n, m)] {
        for s in 0..shifts {
            let mut row = vec![R::zero(); size];
            for k in 0..=deg {
                row[s + deg - k] = poly.coeff(k);
            }
            rows.push(row);
        }
    }
    rows
}

/// Determinant by fraction-free (Bareiss) elimination; every division is exact.
pub fn bareiss_determinant<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let size = m.len();
    if size == 0 {
        return R::one();
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step must divide exactly");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Resultant as the determinant of the Sylvester matrix. Zero when exactly
/// one argument is the zero polynomial.
pub fn resultant<R: Ring>(p: &UniPoly<R>, q: &UniPoly<R>) -> Result<R, PolyError> {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => Err(PolyError::BothZero),
        (true, false) | (false, true) => Ok(R::zero()),
        (false, false) => Ok(bareiss_determinant(sylvester_matrix(p, q))),
    }
}

/// `disc(p) = (-1)^(n(n-1)/2) * res(p, p')` for monic `p` of degree `n >= 1`.
///
/// For quadratics this is the familiar `b^2 - 4c`, so `disc(x^2 - t) = 4t`.
pub fn discriminant<R: Ring>(p: &UniPoly<R>) -> Result<R, PolyError> {
    let n = match p.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(PolyError::Constant),
    };
    if !p.is_monic() {
        return Err(PolyError::NotMonic);
    }
    let res = resultant(p, &p.derivative())?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -res } else { res })
}

fn integer_derivative(a: &[BigInt]) -> Vec<BigInt> {
    a.iter().enumerate().skip(1).map(|(k, c)| c * k).collect()
}

fn primitive_part(mut a: Vec<BigInt>) -> Vec<BigInt> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    let content = a.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if content.is_zero() {
        return a;
    }
    let content = if a.last().is_some_and(|l| l.is_negative()) { -content } else { content };
    a.iter().map(|c| c / &content).collect()
}

/// `lc(b)^k * a mod b` with contents removed along the way.
fn pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[dr - db + j] -= &lr * bc;
        }
        r = primitive_part(r);
    }
    r
}

/// Primitive gcd of integer polynomials (positive leading coefficient).
fn integer_poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = (primitive_part(a.to_vec()), primitive_part(b.to_vec()));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive_part(pseudo_remainder(&a, &b));
        a = b;
        b = r;
    }
    a
}

/// `a / b` for integer polynomials where `b` divides `a` over the rationals;
/// the result is scaled to a primitive integer polynomial.
fn integer_exact_quotient(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let to_q = |v: &[BigInt]| UniPoly::new(v.iter().cloned().map(Rational::from_integer).collect());
    let (q, r) = to_q(a).div_rem(&to_q(b));
    debug_assert!(r.is_zero());
    q.primitive_integer_coeffs()
}

fn eval_int(coeffs: &[BigInt], at: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * at + c)
}

fn eval_mod_small(coeffs: &[u64], at: u64, q: u64) -> u64 {
    coeffs
        .iter()
        .rev()
        .fold(0u128, |acc, &c| (acc * at as u128 + c as u128) % q as u128) as u64
}

/// Integer roots of a monic squarefree integer polynomial (lowest degree first).
fn integer_roots_of_monic(t: &[BigInt]) -> Vec<BigInt> {
    let deg = t.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    let bound = t[..deg]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default()
        + 1;
    let dt: Vec<BigInt> = (1..=deg).map(|k| &t[k] * k).collect();

    // A prime where every root of t mod q is simple, so each lifts uniquely.
    let mut q = 2u64;
    let simple_roots = loop {
        let qb = BigInt::from(q);
        let reduce = |cs: &[BigInt]| -> Vec<u64> {
            cs.iter()
                .map(|c| c.mod_floor(&qb).try_into().expect("residue fits in u64"))
                .collect()
        };
        let (tq, dq) = (reduce(t), reduce(&dt));
        let roots: Vec<u64> = (0..q).filter(|&r| eval_mod_small(&tq, r, q) == 0).collect();
        if roots.iter().all(|&r| eval_mod_small(&dq, r, q) != 0) {
            break roots;
        }
        q = next_prime(q);
    };

    let target = bound * 2;
    let mut found = Vec::new();
    for r0 in simple_roots {
        let mut modulus = BigInt::from(q);
        let mut r = BigInt::from(r0);
        while modulus <= target {
            modulus = &modulus * &modulus;
            let inv = mod_inverse(&eval_int(&dt, &r), &modulus)
                .expect("derivative is a unit at a simple root");
            r = (&r - eval_int(t, &r) * inv).mod_floor(&modulus);
        }
        let half = &modulus / 2;
        let candidate = if r > half { r - &modulus } else { r };
        if eval_int(t, &candidate).is_zero() {
            found.push(candidate);
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn p(c: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_ints(c)
    }

    #[test]
    fn trims_and_reports_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
        assert!(p(&[]).is_zero());
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]); // x^2 - 1
        let b = p(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
        let g = p(&[-1, 0, 1]).gcd(&p(&[2, 2]).scale(&frac(1, 3)));
        assert_eq!(g, p(&[1, 1]));
    }

    #[test]
    fn display_format() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "x^2 - 1");
        let q = UniPoly::new(vec![int(0), frac(-3, 4), int(-1)]);
        assert_eq!(q.display_in("t").to_string(), "-t^2 - 3/4*t");
        assert_eq!(UniPoly::<Rational>::zero().to_string(), "0");
    }

    #[test]
    fn rational_roots_examples() {
        assert_eq!(p(&[-1, 0, 1]).rational_roots().unwrap(), vec![int(-1), int(1)]);
        assert!(p(&[-8, -8, 0, -8, 1]).rational_roots().unwrap().is_empty());
        assert_eq!(
            p(&[99, 200, 101]).rational_roots().unwrap(),
            vec![int(-1), frac(-99, 101)]
        );
        assert_eq!(
            p(&[]).rational_roots(),
            Err(PolyError::IndeterminateRoots)
        );
        assert!(p(&[5]).rational_roots().unwrap().is_empty());
    }

    #[test]
    fn rational_roots_with_multiplicity_and_fractions() {
        // (2x - 3)^3 (x + 5) x^2 / 7
        let f = p(&[-3, 2]).pow(3) * p(&[5, 1]) * p(&[0, 0, 1]);
        let f = f.scale(&frac(1, 7));
        assert_eq!(f.rational_roots().unwrap(), vec![int(-5), int(0), frac(3, 2)]);
    }

    /// Roots by testing every `±(divisor of a_k)/(divisor of a_n)`, where
    /// `a_k` is the lowest nonzero coefficient.
    fn roots_by_candidates(c: &[i64]) -> Vec<Rational> {
        use crate::integer::divisors;
        let f = p(c);
        let k = c.iter().position(|&a| a != 0).unwrap();
        let lead = BigInt::from(*c.iter().rev().find(|&&a| a != 0).unwrap());
        let mut roots: Vec<Rational> = if k > 0 { vec![int(0)] } else { Vec::new() };
        for num in divisors(&BigInt::from(c[k])) {
            for den in divisors(&lead) {
                for sign in [-1, 1] {
                    let r = Rational::new(&num * sign, den.clone());
                    if f.eval(&r).is_zero() && !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig {
            cases: 64,
            rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha,
            ..proptest::prelude::ProptestConfig::default()
        })]

        #[test]
        fn rational_roots_match_candidate_enumeration(
            roots in proptest::collection::vec((-6i64..=6, 1i64..=4), 0..4),
            extra in proptest::collection::vec(-5i64..=5, 1..4),
        ) {
            // prod (den x - num) times a random factor with nonzero leading coefficient
            let mut c = extra.clone();
            if *c.last().unwrap() == 0 {
                *c.last_mut().unwrap() = 1;
            }
            let mut f = p(&c);
            for (num, den) in &roots {
                f = f * p(&[-num, *den]);
            }
            if f.is_zero() {
                return Ok(());
            }
            let ints: Vec<i64> = f.coeffs().iter().map(|a| i64::try_from(a.to_integer()).unwrap()).collect();
            proptest::prop_assert_eq!(f.rational_roots().unwrap(), roots_by_candidates(&ints));
        }
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p(&[-1, 1]), &p(&[1, 1])).unwrap(), int(2));
        assert_eq!(resultant(&p(&[1, 0, 1]), &p(&[0, 2])).unwrap(), int(4));
        assert_eq!(resultant(&p(&[0, 1]), &p(&[0, 1])).unwrap(), int(0));
        assert_eq!(resultant(&p(&[]), &p(&[])), Err(PolyError::BothZero));
        // constant against degree m gives c^m
        assert_eq!(resultant(&p(&[3]), &p(&[1, 0, 1])).unwrap(), int(9));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&p(&[1, 0, 1])).unwrap(), int(-4));
        assert_eq!(discriminant(&p(&[2, -1, 1])).unwrap(), int(-7));
        assert_eq!(discriminant(&p(&[1, 0, 2])), Err(PolyError::NotMonic));
        assert_eq!(discriminant(&p(&[4])), Err(PolyError::Constant));
        // cubic: x^3 + a x + b has discriminant -4a^3 - 27b^2
        assert_eq!(discriminant(&p(&[1, 0, 0, 1])).unwrap(), int(-27));
        assert_eq!(discriminant(&p(&[0, 1, 0, 1])).unwrap(), int(-4));
    }

    #[test]
    fn discriminant_over_polynomial_coefficients() {
        // x^2 - t with coefficients in Q[t]
        let t = UniPoly::from_ints(&[0, 1]);
        let f: UniPoly<UniPoly<Rational>> =
            UniPoly::new(vec![-t.clone(), UniPoly::zero(), UniPoly::one()]);
        let d = discriminant(&f).unwrap();
        assert_eq!(d, UniPoly::from_ints(&[0, 4]));
        assert_eq!(d.display_in("t").to_string(), "4*t");
    }
}
