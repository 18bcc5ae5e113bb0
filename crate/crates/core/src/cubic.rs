//! Chord-and-tangent constructions on the diagonal cubic `x^3 + y^3 = c`.
//!
//! A line `y = m x + k` meets the curve where
//! `(1 + m^3) x^3 + 3 m^2 k x^2 + 3 m k^2 x + (k^3 - c) = 0`.
//! Two known roots fix the third through the sum of the roots. Vertical lines
//! are handled by exchanging coordinates, which maps the curve to itself.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::elliptic::{CurveError, CurvePoint, WeierstrassCurve};
use crate::point::Point;
use crate::poly::UniPoly;
use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubicError {
    #[error("c must be nonzero; x^3 + y^3 = 0 is singular")]
    ZeroConstant,
    #[error("point ({0}) is not on the cubic")]
    NotOnCurve(Box<Point>),
    #[error("third point at infinity: the line meets the curve only twice in the affine plane")]
    AtInfinity,
    #[error("the two points coincide; use tangent_step")]
    SamePoint,
    #[error("point maps to infinity: x + y = 0")]
    MapsToInfinity,
    #[error("the identity has no preimage on the cubic")]
    IdentityHasNoPreimage,
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// `a x + b y + c = 0`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl Line {
    /// True when `other` is a nonzero multiple of `self`.
    pub fn is_proportional_to(&self, other: &Line) -> bool {
        let cross = |p: &Rational, q: &Rational, r: &Rational, s: &Rational| p * s == q * r;
        cross(&self.a, &self.b, &other.a, &other.b)
            && cross(&self.a, &self.c, &other.a, &other.c)
            && cross(&self.b, &self.c, &other.b, &other.c)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*x + ({})*y + ({}) = 0", self.a, self.b, self.c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalCubic {
    c: Rational,
}

impl DiagonalCubic {
    pub fn new(c: Rational) -> Result<Self, CubicError> {
        if c.is_zero() {
            return Err(CubicError::ZeroConstant);
        }
        Ok(DiagonalCubic { c })
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn contains(&self, p: &Point) -> bool {
        &p.x * &p.x * &p.x + &p.y * &p.y * &p.y == self.c
    }

    fn check(&self, p: &Point) -> Result<(), CubicError> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(CubicError::NotOnCurve(Box::new(p.clone())))
        }
    }

    /// The tangent `x_P^2 (x - x_P) + y_P^2 (y - y_P) = 0`, simplified with the
    /// curve equation.
    pub fn tangent_line(&self, p: &Point) -> Result<Line, CubicError> {
        self.check(p)?;
        Ok(Line {
            a: &p.x * &p.x,
            b: &p.y * &p.y,
            c: -self.c.clone(),
        })
    }

    /// The cubic in `x` obtained by substituting `y = m x + k`.
    pub fn substituted(&self, m: &Rational, k: &Rational) -> UniPoly<Rational> {
        let three = int(3);
        UniPoly::new(vec![
            k * k * k - &self.c,
            &three * m * k * k,
            &three * m * m * k,
            Rational::one() + m * m * m,
        ])
    }

    /// The cubic cut out by the tangent at `p` together with the orientation
    /// used: `true` when coordinates were exchanged to avoid a vertical tangent.
    pub fn tangent_substitution(&self, p: &Point) -> Result<(UniPoly<Rational>, bool), CubicError> {
        self.check(p)?;
        let swap = p.y.is_zero();
        let q = if swap { p.swapped() } else { p.clone() };
        let m = -(&q.x * &q.x) / (&q.y * &q.y);
        let k = &q.y - &m * &q.x;
        Ok((self.substituted(&m, &k), swap))
    }

    /// Third intersection of the tangent at `p`.
    pub fn tangent_step(&self, p: &Point) -> Result<Point, CubicError> {
        self.check(p)?;
        let swap = p.y.is_zero();
        let q = if swap { p.swapped() } else { p.clone() };
        let m = -(&q.x * &q.x) / (&q.y * &q.y);
        let r = self.third_on_line(&m, &q, &q.x)?;
        Ok(if swap { r.swapped() } else { r })
    }

    /// Third intersection of the line through the distinct points `p` and `q`.
    pub fn secant_step(&self, p: &Point, q: &Point) -> Result<Point, CubicError> {
        self.check(p)?;
        self.check(q)?;
        if p == q {
            return Err(CubicError::SamePoint);
        }
        let swap = p.x == q.x;
        let (p, q) = if swap { (p.swapped(), q.swapped()) } else { (p.clone(), q.clone()) };
        let m = (&q.y - &p.y) / (&q.x - &p.x);
        let r = self.third_on_line(&m, &p, &q.x)?;
        Ok(if swap { r.swapped() } else { r })
    }

    /// Line of slope `m` through `p`; `other_x` is the second known root.
    fn third_on_line(&self, m: &Rational, p: &Point, other_x: &Rational) -> Result<Point, CubicError> {
        let k = &p.y - m * &p.x;
        let cubic = self.substituted(m, &k);
        let lead = cubic.coeff(3);
        if lead.is_zero() {
            return Err(CubicError::AtInfinity);
        }
        let x = -cubic.coeff(2) / lead - &p.x - other_x;
        let y = m * &x + &k;
        let r = Point::new(x, y);
        debug_assert!(self.contains(&r));
        Ok(r)
    }

    /// `steps` successive tangent images starting from `p` (excluding `p`).
    pub fn tangent_iterates(&self, p: &Point, steps: usize) -> Result<Vec<Point>, CubicError> {
        let mut out = Vec::with_capacity(steps);
        let mut cur = p.clone();
        for _ in 0..steps {
            cur = self.tangent_step(&cur)?;
            out.push(cur.clone());
        }
        Ok(out)
    }

    /// The curve `v^2 = u^3 - 432 c^2`.
    pub fn weierstrass_model(&self) -> WeierstrassCurve {
        WeierstrassCurve::new(Rational::zero(), int(-432) * &self.c * &self.c)
            .expect("c is nonzero so the model is smooth")
    }

    /// `(u, v) = (12c/(x+y), 36c(x-y)/(x+y))`.
    pub fn to_weierstrass(&self, p: &Point) -> Result<(WeierstrassCurve, CurvePoint), CubicError> {
        self.check(p)?;
        let s = &p.x + &p.y;
        if s.is_zero() {
            return Err(CubicError::MapsToInfinity);
        }
        let u = int(12) * &self.c / &s;
        let v = int(36) * &self.c * (&p.x - &p.y) / &s;
        let curve = self.weierstrass_model();
        let image = CurvePoint::affine(u, v);
        debug_assert!(curve.contains(&image));
        Ok((curve, image))
    }

    /// Inverse of [`Self::to_weierstrass`]: `x = (36c + v)/(6u)`, `y = (36c - v)/(6u)`.
    pub fn from_weierstrass(&self, image: &CurvePoint) -> Result<Point, CubicError> {
        let curve = self.weierstrass_model();
        curve.check(image)?;
        let q = image.as_affine().ok_or(CubicError::IdentityHasNoPreimage)?;
        let t = int(36) * &self.c;
        let six_u = int(6) * &q.x;
        Ok(Point::new((&t + &q.y) / &six_u, (&t - &q.y) / &six_u))
    }
}

impl fmt::Display for DiagonalCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^3 + y^3 = {}", self.c)
    }
}
