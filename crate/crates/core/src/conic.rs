//! Rational points on conics by sweeping lines through a known point.
//!
//! A line through a rational point of a conic meets it in one more point,
//! and Vieta's formula for the sum of the two roots keeps that point
//! rational whenever the slope is. On `x^2 + y^2 = 1` through `(-1, 0)` this
//! is the classical parametrization behind Pythagorean triples.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::parser::Equation;
use crate::point::Point;
use crate::rational::{parse_rational, Rational, RationalParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConicError {
    #[error("a conic needs exactly two variables, found {0}")]
    VariableCount(usize),
    #[error("equation has total degree {0:?}, a conic has total degree 2")]
    NotQuadratic(Option<u32>),
    #[error("conic is degenerate (its 3x3 matrix is singular)")]
    Degenerate,
    #[error("point ({0}) is not on the conic")]
    NotOnConic(Box<Point>),
    #[error("slope undefined; use tangent (the two points are equal)")]
    SamePoint,
    #[error("second intersection is at infinity for this slope")]
    AtInfinity,
    #[error("degenerate triple: slope must be a positive rational other than 1")]
    DegenerateTriple,
}

/// Direction of a line through the base point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Slope {
    Finite(Rational),
    Vertical,
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(m) => write!(f, "{m}"),
            Slope::Vertical => f.write_str("vertical"),
        }
    }
}

impl FromStr for Slope {
    type Err = RationalParseError;

    /// A rational, or `vertical` / `inf`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "vertical" | "inf" | "infinity" => Ok(Slope::Vertical),
            other => parse_rational(other).map(Slope::Finite),
        }
    }
}

/// `a x^2 + b xy + c y^2 + d x + e y + f = 0`, non-degenerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conic {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
    e: Rational,
    f: Rational,
}

impl Conic {
    /// Coefficients in the order `(a, b, c, d, e, f)`.
    pub fn new(coeffs: [Rational; 6]) -> Result<Self, ConicError> {
        let [a, b, c, d, e, f] = coeffs;
        if a.is_zero() && b.is_zero() && c.is_zero() {
            let degree = if d.is_zero() && e.is_zero() {
                (!f.is_zero()).then_some(0)
            } else {
                Some(1)
            };
            return Err(ConicError::NotQuadratic(degree));
        }
        let conic = Conic { a, b, c, d, e, f };
        if conic.matrix_determinant().is_zero() {
            return Err(ConicError::Degenerate);
        }
        Ok(conic)
    }

    /// The conic `lhs = 0` with the first variable (by name) as `x`.
    pub fn from_equation(eq: &Equation) -> Result<Self, ConicError> {
        if eq.variables.len() != 2 {
            return Err(ConicError::VariableCount(eq.variables.len()));
        }
        if eq.degree() != Some(2) {
            return Err(ConicError::NotQuadratic(eq.degree()));
        }
        Self::new(eq.lhs.quadratic_coefficients(&eq.variables[0], &eq.variables[1]))
    }

    pub fn unit_circle() -> Self {
        let one = Rational::one;
        let zero = Rational::zero;
        Self::new([one(), zero(), one(), zero(), zero(), -one()]).expect("circle is smooth")
    }

    /// Determinant of the symmetric matrix `[[a, b/2, d/2], [b/2, c, e/2], [d/2, e/2, f]]`.
    pub fn matrix_determinant(&self) -> Rational {
        let two = Rational::from_integer(2.into());
        let (a, c, f) = (&self.a, &self.c, &self.f);
        let (h, g, k) = (&self.b / &two, &self.d / &two, &self.e / &two);
        a * (c * f - &k * &k) - &h * (&h * f - &k * &g) + &g * (&h * &k - c * &g)
    }

    pub fn eval(&self, p: &Point) -> Rational {
        let (x, y) = (&p.x, &p.y);
        &self.a * x * x + &self.b * x * y + &self.c * y * y + &self.d * x + &self.e * y + &self.f
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    fn check_on(&self, p: &Point) -> Result<(), ConicError> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(ConicError::NotOnConic(Box::new(p.clone())))
        }
    }

    /// Second intersection of the line through `base` with the given slope.
    /// A tangent line returns `base` itself.
    pub fn sweep(&self, base: &Point, slope: &Slope) -> Result<Point, ConicError> {
        self.check_on(base)?;
        let (a, b, c, d, e) = (&self.a, &self.b, &self.c, &self.d, &self.e);
        match slope {
            Slope::Finite(m) => {
                // y = m x + k turns the conic into A x^2 + B x + C = 0.
                let k = &base.y - m * &base.x;
                let quad = a + b * m + c * m * m;
                let lin = b * &k + c * m * &k * Rational::from_integer(2.into()) + d + e * m;
                if quad.is_zero() {
                    return Err(ConicError::AtInfinity);
                }
                let x = -lin / &quad - &base.x;
                let y = m * &x + &k;
                Ok(Point::new(x, y))
            }
            Slope::Vertical => {
                // x = x0 turns the conic into c y^2 + (b x0 + e) y + (a x0^2 + d x0 + f) = 0.
                if c.is_zero() {
                    return Err(ConicError::AtInfinity);
                }
                let y = -(b * &base.x + e) / c - &base.y;
                Ok(Point::new(base.x.clone(), y))
            }
        }
    }

    /// The slope taking `base` to `other` under [`Conic::sweep`].
    pub fn slope_between(&self, base: &Point, other: &Point) -> Result<Slope, ConicError> {
        self.check_on(base)?;
        self.check_on(other)?;
        if base == other {
            return Err(ConicError::SamePoint);
        }
        if base.x == other.x {
            return Ok(Slope::Vertical);
        }
        Ok(Slope::Finite((&other.y - &base.y) / (&other.x - &base.x)))
    }
}

/// Primitive triple `(|b^2 - a^2|, 2ab, a^2 + b^2) / gcd` for `m = a/b`.
///
/// This is the unit-circle point swept out by slope `m` from `(-1, 0)`,
/// cleared of denominators.
pub fn pythagorean_triple(m: &Rational) -> Result<(BigInt, BigInt, BigInt), ConicError> {
    if !m.is_positive() || m.is_one() {
        return Err(ConicError::DegenerateTriple);
    }
    let (a, b) = (m.numer(), m.denom());
    let leg1 = (b * b - a * a).abs();
    let leg2 = BigInt::from(2) * a * b;
    let hyp = a * a + b * b;
    let g = leg1.gcd(&leg2).gcd(&hyp);
    Ok((leg1 / &g, leg2 / &g, hyp / &g))
}
