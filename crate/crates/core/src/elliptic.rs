//! Short Weierstrass curves `y^2 = x^3 + a x + b` over the rationals:
//! group law, scalar multiplication and rational torsion.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::integer::factorize;
use crate::point::Point;
use crate::poly::UniPoly;
use crate::rational::{is_integer, Rational, RationalParseError};

/// Orders up to this bound are searched when deciding torsion. Rational
/// torsion never exceeds order 12, so 16 leaves headroom.
pub const TORSION_ORDER_BOUND: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("singular curve: discriminant -16(4a^3 + 27b^2) is zero")]
    Singular,
    #[error("point ({0}) is not on the curve")]
    NotOnCurve(Box<Point>),
    #[error("curve coefficients must be integers; clear denominators first")]
    NonIntegralCoefficients,
    #[error("multiplier n = {0} is outside the supported range 1..=8")]
    MultiplierOutOfRange(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurvePoint {
    /// The point at infinity, the group identity.
    Infinity,
    Affine(Point),
}

impl CurvePoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        CurvePoint::Affine(Point::new(x, y))
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn as_affine(&self) -> Option<&Point> {
        match self {
            CurvePoint::Affine(p) => Some(p),
            CurvePoint::Infinity => None,
        }
    }

    pub fn neg(&self) -> CurvePoint {
        match self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(p) => CurvePoint::affine(p.x.clone(), -&p.y),
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => f.write_str("O"),
            CurvePoint::Affine(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for CurvePoint {
    type Err = RationalParseError;

    /// `O` for the identity, otherwise `x,y`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "O" | "o" | "inf" => Ok(CurvePoint::Infinity),
            other => other.parse().map(CurvePoint::Affine),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeierstrassCurve {
    pub a: Rational,
    pub b: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonTorsionCertificate {
    /// `[multiple]P` has a non-integral coordinate.
    NonIntegral { multiple: u32, point: Point },
    /// `[multiple]P = (x, y)` with `y != 0` and `y^2` not dividing the discriminant.
    SquareDoesNotDivide {
        multiple: u32,
        y: BigInt,
        discriminant: BigInt,
    },
    /// Every multiple up to the bound passed both conditions without reaching O.
    NoSmallOrder { bound: u32 },
}

impl fmt::Display for NonTorsionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonTorsionCertificate::NonIntegral { multiple, point } => {
                write!(f, "[{multiple}]P = ({point}) has a non-integral coordinate")
            }
            NonTorsionCertificate::SquareDoesNotDivide {
                multiple,
                y,
                discriminant,
            } => write!(f, "[{multiple}]P has y = {y} with y^2 not dividing {discriminant}"),
            NonTorsionCertificate::NoSmallOrder { bound } => {
                write!(f, "passed integrality but no small order (checked up to {bound})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorsionVerdict {
    Torsion { order: u32 },
    NonTorsion(NonTorsionCertificate),
}

impl WeierstrassCurve {
    pub fn new(a: Rational, b: Rational) -> Result<Self, CurveError> {
        let curve = WeierstrassCurve { a, b };
        if curve.discriminant().is_zero() {
            return Err(CurveError::Singular);
        }
        Ok(curve)
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self, CurveError> {
        Self::new(Rational::from_integer(a.into()), Rational::from_integer(b.into()))
    }

    /// `-16 (4a^3 + 27b^2)`
    pub fn discriminant(&self) -> Rational {
        let (a, b) = (&self.a, &self.b);
        Rational::from_integer((-16).into())
            * (Rational::from_integer(4.into()) * a * a * a + Rational::from_integer(27.into()) * b * b)
    }

    /// The cubic `x^3 + a x + b` as a polynomial in `x`.
    pub fn rhs(&self) -> UniPoly<Rational> {
        UniPoly::new(vec![self.b.clone(), self.a.clone(), Rational::zero(), Rational::one()])
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(p) => &p.y * &p.y == self.rhs().eval(&p.x),
        }
    }

    pub fn check(&self, p: &CurvePoint) -> Result<(), CurveError> {
        match p {
            CurvePoint::Affine(q) if !self.contains(p) => Err(CurveError::NotOnCurve(Box::new(q.clone()))),
            _ => Ok(()),
        }
    }

    pub fn has_integer_coefficients(&self) -> bool {
        is_integer(&self.a) && is_integer(&self.b)
    }

    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (p, q) = match (p, q) {
            (CurvePoint::Infinity, other) | (other, CurvePoint::Infinity) => return other.clone(),
            (CurvePoint::Affine(p), CurvePoint::Affine(q)) => (p, q),
        };
        let slope = if p.x == q.x {
            if p.y != q.y || p.y.is_zero() {
                return CurvePoint::Infinity;
            }
            let three = Rational::from_integer(3.into());
            (three * &p.x * &p.x + &self.a) / (&p.y + &p.y)
        } else {
            (&q.y - &p.y) / (&q.x - &p.x)
        };
        let x = &slope * &slope - &p.x - &q.x;
        let y = slope * (&p.x - &x) - &p.y;
        CurvePoint::affine(x, y)
    }

    pub fn double(&self, p: &CurvePoint) -> CurvePoint {
        self.add(p, p)
    }

    /// `[n]P` by double-and-add; negative `n` multiplies `-P`.
    pub fn multiply(&self, n: i64, p: &CurvePoint) -> CurvePoint {
        let mut base = if n < 0 { p.neg() } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.double(&base);
            k >>= 1;
        }
        acc
    }

    fn integer_discriminant(&self) -> Result<BigInt, CurveError> {
        if !self.has_integer_coefficients() {
            return Err(CurveError::NonIntegralCoefficients);
        }
        Ok(self.discriminant().to_integer())
    }

    /// Decides torsion for `P` on a curve with integer coefficients.
    ///
    /// A rational torsion point has integer coordinates and `y = 0` or
    /// `y^2 | disc`, and so does every multiple of it. Multiples `[k]P` for
    /// `k <= TORSION_ORDER_BOUND` are walked in turn: reaching O gives the
    /// order, and the first multiple violating either condition certifies
    /// infinite order.
    pub fn nagell_lutz_test(&self, p: &CurvePoint) -> Result<TorsionVerdict, CurveError> {
        let disc = self.integer_discriminant()?;
        self.check(p)?;
        let mut q = p.clone();
        for k in 1..=TORSION_ORDER_BOUND {
            let pt = match &q {
                CurvePoint::Infinity => return Ok(TorsionVerdict::Torsion { order: k }),
                CurvePoint::Affine(pt) => pt,
            };
            if !is_integer(&pt.x) || !is_integer(&pt.y) {
                return Ok(TorsionVerdict::NonTorsion(NonTorsionCertificate::NonIntegral {
                    multiple: k,
                    point: pt.clone(),
                }));
            }
            let y = pt.y.to_integer();
            if !y.is_zero() && !(&disc % (&y * &y)).is_zero() {
                return Ok(TorsionVerdict::NonTorsion(
                    NonTorsionCertificate::SquareDoesNotDivide {
                        multiple: k,
                        y,
                        discriminant: disc,
                    },
                ));
            }
            q = self.add(&q, p);
        }
        Ok(TorsionVerdict::NonTorsion(NonTorsionCertificate::NoSmallOrder {
            bound: TORSION_ORDER_BOUND,
        }))
    }

    /// All rational torsion points (O first, then affine points ascending).
    ///
    /// Candidates are `y = 0` or `y^2 | disc`, with `x` an integer root of
    /// `x^3 + a x + b - y^2`; a candidate is kept when it reaches O within
    /// `TORSION_ORDER_BOUND` steps.
    pub fn torsion_subgroup(&self) -> Result<Vec<CurvePoint>, CurveError> {
        let disc = self.integer_discriminant()?;
        let mut ys = vec![BigInt::one()];
        for (p, e) in factorize(&disc) {
            let p = BigInt::from(p);
            let mut next = Vec::new();
            for y in &ys {
                let mut pk = y.clone();
                for _ in 0..=e / 2 {
                    next.push(pk.clone());
                    pk *= &p;
                }
            }
            ys = next;
        }
        let mut candidates: Vec<BigInt> = vec![BigInt::zero()];
        for y in ys {
            candidates.push(-&y);
            candidates.push(y);
        }

        let mut points = vec![CurvePoint::Infinity];
        for y in candidates {
            let y = Rational::from_integer(y);
            let poly = &self.rhs() - &UniPoly::constant(&y * &y);
            for x in poly.rational_roots().expect("cubic is nonzero") {
                if !is_integer(&x) {
                    continue;
                }
                let cand = CurvePoint::affine(x, y.clone());
                if let TorsionVerdict::Torsion { .. } = self.nagell_lutz_test(&cand)? {
                    points.push(cand);
                }
            }
        }
        points.sort();
        points.dedup();
        Ok(points)
    }

    /// Order of a point known to be torsion, by repeated addition.
    pub fn order(&self, p: &CurvePoint, bound: u32) -> Option<u32> {
        let mut q = p.clone();
        for k in 1..=bound {
            if q.is_infinity() {
                return Some(k);
            }
            q = self.add(&q, p);
        }
        None
    }
}

impl fmt::Display for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = {}", self.rhs())
    }
}
