//! Division polynomials and rational division points.
//!
//! `x([n](x, y)) = phi_n(x) / psi_n(x)^2` where `psi_n` comes from the usual
//! recurrences. Even-index `psi_n` carry a factor of `y`; they are stored as
//! `y * g(x)` and reduced with `y^2 = x^3 + a x + b`.

use num_traits::{One, Zero};

use crate::elliptic::{CurveError, CurvePoint, WeierstrassCurve};
use crate::poly::UniPoly;
use crate::rational::{rational_sqrt, Rational};

/// Largest multiplier supported for division polynomials and preimages.
pub const MAX_DIVISION_ORDER: i64 = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionPolynomials {
    pub phi: UniPoly<Rational>,
    pub psi_squared: UniPoly<Rational>,
}

/// `poly(x) * y^(has_y as u32)`
#[derive(Debug, Clone)]
struct Psi {
    poly: UniPoly<Rational>,
    has_y: bool,
}

struct Reducer<'a> {
    cubic: &'a UniPoly<Rational>,
}

impl Reducer<'_> {
    fn mul(&self, l: &Psi, r: &Psi) -> Psi {
        let mut poly = &l.poly * &r.poly;
        if l.has_y && r.has_y {
            poly = &poly * self.cubic;
        }
        Psi {
            poly,
            has_y: l.has_y ^ r.has_y,
        }
    }

    fn sub(&self, l: &Psi, r: &Psi) -> Psi {
        debug_assert!(l.poly.is_zero() || r.poly.is_zero() || l.has_y == r.has_y);
        Psi {
            poly: &l.poly - &r.poly,
            has_y: l.has_y || r.has_y,
        }
    }

    fn cube(&self, p: &Psi) -> Psi {
        self.mul(&self.mul(p, p), p)
    }

    fn square(&self, p: &Psi) -> Psi {
        self.mul(p, p)
    }

    /// Exact division by `2y`.
    fn div_two_y(&self, p: &Psi) -> Psi {
        let half = Rational::new(1.into(), 2.into());
        if p.has_y {
            Psi {
                poly: p.poly.scale(&half),
                has_y: false,
            }
        } else {
            let (q, r) = p.poly.div_rem(self.cubic);
            debug_assert!(r.is_zero(), "psi recurrence must divide by the cubic");
            Psi {
                poly: q.scale(&half),
                has_y: true,
            }
        }
    }

    fn as_poly(&self, p: &Psi) -> UniPoly<Rational> {
        assert!(!p.has_y || p.poly.is_zero(), "expected a y-free expression");
        p.poly.clone()
    }
}

fn psi_table(curve: &WeierstrassCurve, upto: usize) -> Vec<Psi> {
    let (a, b) = (&curve.a, &curve.b);
    let r = |n: i64| Rational::from_integer(n.into());
    let cubic = curve.rhs();
    let red = Reducer { cubic: &cubic };
    let psi3 = UniPoly::new(vec![
        -(a * a),
        r(12) * b,
        r(6) * a,
        Rational::zero(),
        r(3),
    ]);
    let psi4 = UniPoly::new(vec![
        -(r(8) * b * b) - a * a * a,
        -(r(4) * a * b),
        -(r(5) * a * a),
        r(20) * b,
        r(5) * a,
        Rational::zero(),
        Rational::one(),
    ])
    .scale(&r(4));
    let mut psi = vec![
        Psi { poly: UniPoly::zero(), has_y: true },
        Psi { poly: UniPoly::one(), has_y: false },
        Psi { poly: UniPoly::constant(r(2)), has_y: true },
        Psi { poly: psi3, has_y: false },
        Psi { poly: psi4, has_y: true },
    ];
    for n in 5..=upto {
        let m = n / 2;
        let next = if n % 2 == 1 {
            // psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
            red.sub(
                &red.mul(&psi[m + 2], &red.cube(&psi[m])),
                &red.mul(&psi[m - 1], &red.cube(&psi[m + 1])),
            )
        } else {
            // psi_{2m} = psi_m / (2y) * (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2)
            let bracket = red.sub(
                &red.mul(&psi[m + 2], &red.square(&psi[m - 1])),
                &red.mul(&psi[m - 2], &red.square(&psi[m + 1])),
            );
            red.div_two_y(&red.mul(&psi[m], &bracket))
        };
        psi.push(next);
    }
    psi
}

/// `(phi_n, psi_n^2)` for `1 <= n <= 8`.
pub fn division_polynomial(curve: &WeierstrassCurve, n: i64) -> Result<DivisionPolynomials, CurveError> {
    if !(1..=MAX_DIVISION_ORDER).contains(&n) {
        return Err(CurveError::MultiplierOutOfRange(n));
    }
    let n = n as usize;
    let cubic = curve.rhs();
    let red = Reducer { cubic: &cubic };
    let psi = psi_table(curve, (n + 1).max(4));
    let psi_squared = red.as_poly(&red.square(&psi[n]));
    let phi = &(&UniPoly::x() * &psi_squared) - &red.as_poly(&red.mul(&psi[n + 1], &psi[n - 1]));
    Ok(DivisionPolynomials { phi, psi_squared })
}

/// Every rational `Q` with `[n]Q = P`, for `1 <= n <= 8`.
///
/// The x-coordinates are the rational roots of `phi_n(X) - x_P psi_n(X)^2`
/// (or of `psi_n^2` when `P = O`); each is lifted to `y = ±sqrt(X^3 + aX + b)`
/// when that is rational and kept only if `[n]Q = P` holds exactly.
pub fn division_preimages(
    curve: &WeierstrassCurve,
    p: &CurvePoint,
    n: i64,
) -> Result<Vec<CurvePoint>, CurveError> {
    curve.check(p)?;
    let polys = division_polynomial(curve, n)?;
    let mut out = Vec::new();
    let equation = match p {
        CurvePoint::Infinity => {
            out.push(CurvePoint::Infinity);
            polys.psi_squared.clone()
        }
        CurvePoint::Affine(pt) => &polys.phi - &polys.psi_squared.scale(&pt.x),
    };
    let cubic = curve.rhs();
    if !equation.is_zero() {
        for x in equation.rational_roots().expect("nonzero polynomial") {
            let Some(y) = rational_sqrt(&cubic.eval(&x)) else {
                continue;
            };
            let mut ys = vec![y.clone()];
            if !y.is_zero() {
                ys.push(-y);
            }
            for y in ys {
                let q = CurvePoint::affine(x.clone(), y);
                if curve.multiply(n, &q) == *p {
                    out.push(q);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}
