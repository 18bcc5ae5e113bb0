use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};

use dioph_core::conic::{pythagorean_triple, Conic, Slope};
use dioph_core::cubic::DiagonalCubic;
use dioph_core::division::{division_polynomial, division_preimages};
use dioph_core::elliptic::{CurvePoint, NonTorsionCertificate, TorsionVerdict, WeierstrassCurve};
use dioph_core::etale::{
    covers_spec_z, geometric_fiber_count, is_etale, unit_obstruction, EtaleCandidate, Obstruction, TPoly,
};
use dioph_core::padic::{
    iterated_integral, locate_zeros, padic_log, shuffle_check, shuffles, strassmann_bound, PadicNumber,
    PadicSeries,
};
use dioph_core::parser::{assignment_for, is_point, search_integer_points, MultiPoly};
use dioph_core::point::Point;
use dioph_core::poly::{discriminant, resultant, UniPoly};
use dioph_core::rational::{is_integer, Rational};

use crate::args::Command;

/// Largest number of tangent steps `cubic-iterate` accepts; heights roughly
/// quadruple with every step.
pub const MAX_ITERATE_STEPS: usize = 8;

/// A successful result: the structured payload and its text rendering.
pub struct Output {
    pub payload: Value,
    pub text: String,
}

type Outcome = Result<Output, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn rat(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn point_json(p: &Point) -> Value {
    json!({ "x": rat(&p.x), "y": rat(&p.y) })
}

fn curve_point_json(p: &CurvePoint) -> Value {
    match p {
        CurvePoint::Infinity => Value::String("O".into()),
        CurvePoint::Affine(q) => point_json(q),
    }
}

fn curve_json(c: &WeierstrassCurve) -> Value {
    json!({ "a": rat(&c.a), "b": rat(&c.b) })
}

fn padic_json(x: &PadicNumber) -> Value {
    json!({ "rep": x.rep().to_string(), "p": x.p(), "prec": x.precision() })
}

fn big_list(v: &[BigUint]) -> Value {
    Value::Array(v.iter().map(|n| Value::String(n.to_string())).collect())
}

fn verdict_json(v: &TorsionVerdict) -> Value {
    match v {
        TorsionVerdict::Torsion { order } => json!({ "verdict": "torsion", "order": order }),
        TorsionVerdict::NonTorsion(cert) => {
            let certificate = match cert {
                NonTorsionCertificate::NonIntegral { multiple, point } => json!({
                    "kind": "non-integral",
                    "multiple": multiple,
                    "point": point_json(point),
                }),
                NonTorsionCertificate::SquareDoesNotDivide {
                    multiple,
                    y,
                    discriminant,
                } => json!({
                    "kind": "square-does-not-divide",
                    "multiple": multiple,
                    "y": y.to_string(),
                    "discriminant": discriminant.to_string(),
                }),
                NonTorsionCertificate::NoSmallOrder { bound } => json!({
                    "kind": "no-small-order",
                    "bound": bound,
                }),
            };
            json!({ "verdict": "non-torsion", "certificate": certificate })
        }
    }
}

fn verdict_text(v: &TorsionVerdict) -> String {
    match v {
        TorsionVerdict::Torsion { order } => format!("torsion of order {order}"),
        TorsionVerdict::NonTorsion(cert) => format!("non-torsion: {cert}"),
    }
}

fn obstruction_json(o: &Option<Obstruction>) -> Value {
    match o {
        None => Value::Null,
        Some(Obstruction::Zero) => json!({ "kind": "zero" }),
        Some(Obstruction::Prime(p)) => json!({ "kind": "prime", "value": p.to_string() }),
        Some(Obstruction::Factor(g)) => json!({ "kind": "factor", "value": g.display_in("t").to_string() }),
    }
}

fn in_x(poly: &MultiPoly) -> Result<UniPoly<Rational>, String> {
    poly.to_unipoly("x").ok_or_else(|| "polynomial must involve only x".to_string())
}

fn in_x_over_t(poly: &MultiPoly) -> Result<UniPoly<TPoly>, String> {
    poly.to_unipoly_over("x", "t")
        .ok_or_else(|| "polynomial may only involve x and t".to_string())
}

fn uses_t(poly: &MultiPoly) -> bool {
    poly.variables().iter().any(|v| v == "t")
}

fn padic_integer(p: u64, prec: u32, value: &Rational) -> Result<PadicNumber, String> {
    PadicNumber::from_rational(p, prec, value).map_err(err)
}

fn padic_series(p: u64, prec: u32, coeffs: &[Rational]) -> Result<PadicSeries, String> {
    let coeffs = coeffs
        .iter()
        .map(|c| padic_integer(p, prec, c))
        .collect::<Result<Vec<_>, _>>()?;
    PadicSeries::new(p, coeffs, None).map_err(err)
}

pub fn run(command: &Command) -> Outcome {
    match command {
        Command::Parse { eq } => Ok(Output {
            payload: json!({
                "equation": eq.to_string(),
                "variables": eq.variables,
                "degree": eq.degree(),
            }),
            text: eq.to_string(),
        }),
        Command::CheckPoint { eq, point } => {
            if point.0.len() != eq.variables.len() {
                return Err(format!(
                    "expected {} coordinates for variables ({}), got {}",
                    eq.variables.len(),
                    eq.variables.join(", "),
                    point.0.len()
                ));
            }
            let assignment: BTreeMap<String, Rational> = assignment_for(eq, &point.0);
            let on = is_point(eq, &assignment).map_err(err)?;
            let residual = eq.lhs.eval(&assignment).map_err(err)?;
            Ok(Output {
                payload: json!({ "on_curve": on, "residual": rat(&residual) }),
                text: if on {
                    "on the curve".into()
                } else {
                    format!("not on the curve (residual {residual})")
                },
            })
        }
        Command::Search { eq, bound } => {
            let points = search_integer_points(eq, *bound).map_err(err)?;
            let rows: Vec<Vec<String>> = points
                .iter()
                .map(|p| p.iter().map(BigInt::to_string).collect())
                .collect();
            let mut text = format!("{} solutions with |coordinates| <= {bound}", rows.len());
            for r in &rows {
                write!(text, "\n{}", r.join(", ")).unwrap();
            }
            Ok(Output {
                payload: json!({ "variables": eq.variables, "points": rows }),
                text,
            })
        }
        Command::ConicSweep { eq, base, slope } => {
            let conic = Conic::from_equation(eq).map_err(err)?;
            let p = conic.sweep(base, slope).map_err(err)?;
            Ok(Output {
                payload: point_json(&p),
                text: p.to_string(),
            })
        }
        Command::ConicSlope { eq, base, point } => {
            let conic = Conic::from_equation(eq).map_err(err)?;
            let s = conic.slope_between(base, point).map_err(err)?;
            let value = match &s {
                Slope::Finite(m) => rat(m),
                Slope::Vertical => Value::String("vertical".into()),
            };
            Ok(Output {
                payload: json!({ "slope": value }),
                text: s.to_string(),
            })
        }
        Command::Triples { slope } => {
            let (a, b, c) = pythagorean_triple(slope).map_err(err)?;
            Ok(Output {
                payload: json!({ "triple": [a.to_string(), b.to_string(), c.to_string()] }),
                text: format!("{a} {b} {c}"),
            })
        }
        Command::CubicTangent { c, point } => {
            let cubic = DiagonalCubic::new(c.clone()).map_err(err)?;
            let r = cubic.tangent_step(point).map_err(err)?;
            Ok(Output {
                payload: point_json(&r),
                text: r.to_string(),
            })
        }
        Command::CubicSecant { c, p, q } => {
            let cubic = DiagonalCubic::new(c.clone()).map_err(err)?;
            let r = cubic.secant_step(p, q).map_err(err)?;
            Ok(Output {
                payload: point_json(&r),
                text: r.to_string(),
            })
        }
        Command::CubicIterate { c, point, steps } => cubic_iterate(c, point, *steps),
        Command::WeierstrassMap { c, point } => {
            let cubic = DiagonalCubic::new(c.clone()).map_err(err)?;
            let (curve, image) = cubic.to_weierstrass(point).map_err(err)?;
            Ok(Output {
                payload: json!({ "curve": curve_json(&curve), "point": curve_point_json(&image) }),
                text: format!("({image}) on {curve}"),
            })
        }
        Command::EcAdd { curve, p, q } => {
            curve.check(p).map_err(err)?;
            curve.check(q).map_err(err)?;
            let r = curve.add(p, q);
            Ok(Output {
                payload: curve_point_json(&r),
                text: r.to_string(),
            })
        }
        Command::EcMul { curve, point, n } => {
            curve.check(point).map_err(err)?;
            let r = curve.multiply(*n, point);
            Ok(Output {
                payload: curve_point_json(&r),
                text: r.to_string(),
            })
        }
        Command::TorsionTest { curve, point } => {
            let v = curve.nagell_lutz_test(point).map_err(err)?;
            Ok(Output {
                payload: verdict_json(&v),
                text: verdict_text(&v),
            })
        }
        Command::TorsionSubgroup { curve } => {
            let pts = curve.torsion_subgroup().map_err(err)?;
            let text = std::iter::once(format!("order {}", pts.len()))
                .chain(pts.iter().map(CurvePoint::to_string))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output {
                payload: json!({
                    "order": pts.len(),
                    "points": pts.iter().map(curve_point_json).collect::<Vec<_>>(),
                }),
                text,
            })
        }
        Command::Divide { curve, point, n } => {
            let pts = division_preimages(curve, point, *n).map_err(err)?;
            let text = if pts.is_empty() {
                format!("no rational point Q with [{n}]Q = {point}")
            } else {
                pts.iter().map(CurvePoint::to_string).collect::<Vec<_>>().join("\n")
            };
            Ok(Output {
                payload: json!({ "preimages": pts.iter().map(curve_point_json).collect::<Vec<_>>() }),
                text,
            })
        }
        Command::Divpoly { curve, n } => {
            let d = division_polynomial(curve, *n).map_err(err)?;
            let (phi, psi2) = (d.phi.to_string(), d.psi_squared.to_string());
            Ok(Output {
                payload: json!({ "phi": phi, "psi_squared": psi2 }),
                text: format!("phi = {phi}\npsi^2 = {psi2}"),
            })
        }
        Command::Roots { poly } => {
            let roots = in_x(poly)?.rational_roots().map_err(err)?;
            let text = if roots.is_empty() {
                "no rational roots".into()
            } else {
                roots.iter().map(Rational::to_string).collect::<Vec<_>>().join("\n")
            };
            Ok(Output {
                payload: json!({ "roots": roots.iter().map(rat).collect::<Vec<_>>() }),
                text,
            })
        }
        Command::Discriminant { poly } => {
            let d = if uses_t(poly) {
                discriminant(&in_x_over_t(poly)?).map_err(err)?.display_in("t").to_string()
            } else {
                discriminant(&in_x(poly)?).map_err(err)?.to_string()
            };
            Ok(Output {
                payload: json!({ "discriminant": d }),
                text: d,
            })
        }
        Command::Resultant { p, q } => {
            let r = if uses_t(p) || uses_t(q) {
                resultant(&in_x_over_t(p)?, &in_x_over_t(q)?).map_err(err)?.display_in("t").to_string()
            } else {
                resultant(&in_x(p)?, &in_x(q)?).map_err(err)?.to_string()
            };
            Ok(Output {
                payload: json!({ "resultant": r }),
                text: r,
            })
        }
        Command::IsUnit { ring, element } => {
            let e = element
                .to_unipoly("t")
                .ok_or_else(|| "ring elements are polynomials in t".to_string())?;
            let o = unit_obstruction(ring, &e).map_err(err)?;
            let text = match &o {
                None => format!("unit in {ring}"),
                Some(o) => format!("not a unit in {ring}: {o}"),
            };
            Ok(Output {
                payload: json!({ "unit": o.is_none(), "obstruction": obstruction_json(&o) }),
                text,
            })
        }
        Command::EtaleCheck { ring, poly } => {
            let f = in_x_over_t(poly)?;
            let candidate = EtaleCandidate::new(ring.clone(), f).map_err(err)?;
            let v = is_etale(&candidate);
            let disc = v.discriminant.display_in("t").to_string();
            let text = match &v.obstruction {
                None => format!("etale over {ring}: discriminant {disc} is a unit"),
                Some(o) => format!("not etale over {ring}: discriminant {disc} is not a unit ({o})"),
            };
            Ok(Output {
                payload: json!({
                    "etale": v.etale,
                    "discriminant": disc,
                    "obstruction": obstruction_json(&v.obstruction),
                }),
                text,
            })
        }
        Command::Fiber { poly, prime } => {
            let f = in_x(poly)?;
            let count = geometric_fiber_count(&f, *prime).map_err(err)?;
            let degree = f.degree().unwrap_or(0);
            Ok(Output {
                payload: json!({ "count": count, "degree": degree }),
                text: format!(
                    "{count} geometric point{} over p = {prime} (degree {degree})",
                    if count == 1 { "" } else { "s" }
                ),
            })
        }
        Command::CoverCheck { maps } => {
            let maps = maps
                .iter()
                .map(|(f, n)| Ok((in_x(f)?, n.clone())))
                .collect::<Result<Vec<_>, String>>()?;
            let r = covers_spec_z(&maps).map_err(err)?;
            let mut text = (if r.covers { "covers Spec Z" } else { "does not cover Spec Z" }).to_string();
            let mut entries = Vec::new();
            for c in &r.candidates {
                let disc = c.verdict.discriminant.coeff(0).to_string();
                let join = |v: &[BigUint]| v.iter().map(BigUint::to_string).collect::<Vec<_>>().join(",");
                write!(
                    text,
                    "\n{} over Z[1/{}]: {}, disc {disc}, inverted {{{}}}, ramified {{{}}}",
                    c.f.display_in("x"),
                    c.n,
                    if c.verdict.etale { "etale" } else { "not etale" },
                    join(&c.inverted),
                    join(&c.ramified)
                )
                .unwrap();
                entries.push(json!({
                    "poly": c.f.display_in("x").to_string(),
                    "n": c.n.to_string(),
                    "etale": c.verdict.etale,
                    "discriminant": disc,
                    "inverted": big_list(&c.inverted),
                    "ramified": big_list(&c.ramified),
                }));
            }
            if !r.uncovered.is_empty() {
                let list: Vec<String> = r.uncovered.iter().map(BigUint::to_string).collect();
                write!(text, "\nuncovered primes: {}", list.join(", ")).unwrap();
            }
            Ok(Output {
                payload: json!({ "covers": r.covers, "maps": entries, "uncovered": big_list(&r.uncovered) }),
                text,
            })
        }
        Command::PadicLog { p, prec, u } => {
            let u = padic_integer(*p, *prec, u)?;
            let v = padic_log(&u).map_err(err)?;
            Ok(Output {
                payload: json!({ "value": padic_json(&v) }),
                text: v.to_string(),
            })
        }
        Command::Iterint { p, prec, word, z } => {
            let z = padic_integer(*p, *prec, z)?;
            let v = iterated_integral(word, &z, *prec).map_err(err)?;
            Ok(Output {
                payload: json!({ "value": padic_json(&v) }),
                text: v.to_string(),
            })
        }
        Command::Shuffle { p, prec, a, b, z } => {
            let z = padic_integer(*p, *prec, z)?;
            let holds = shuffle_check(a, b, &z, *prec).map_err(err)?;
            let count = shuffles(a.letters(), b.letters()).len();
            Ok(Output {
                payload: json!({ "holds": holds, "shuffles": count }),
                text: format!(
                    "shuffle identity {} over {count} shuffles modulo {p}^{prec}",
                    if holds { "holds" } else { "fails" }
                ),
            })
        }
        Command::Strassmann { p, coeffs, prec } => {
            let s = padic_series(*p, *prec, &coeffs.0)?;
            let bound = strassmann_bound(&s).map_err(err)?;
            Ok(Output {
                payload: json!({ "bound": bound }),
                text: format!("at most {bound} zero{} in Z_{p}", if bound == 1 { "" } else { "s" }),
            })
        }
        Command::Zeros { p, depth, coeffs, prec } => {
            let s = padic_series(*p, *prec, &coeffs.0)?;
            let bound = strassmann_bound(&s).map_err(err)?;
            let classes = locate_zeros(&s, *depth).map_err(err)?;
            let modulus = BigInt::from(*p).pow(*depth);
            let text = std::iter::once(format!("{} class(es), Strassmann bound {bound}", classes.len()))
                .chain(classes.iter().map(|c| c.to_string()))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output {
                payload: json!({
                    "strassmann_bound": bound,
                    "modulus": modulus.to_string(),
                    "classes": classes.iter().map(|c| json!({
                        "residue": c.residue.to_string(),
                        "bound": c.bound,
                        "resolved": c.resolved,
                    })).collect::<Vec<_>>(),
                }),
                text,
            })
        }
    }
}

fn cubic_iterate(c: &Rational, start: &Point, steps: usize) -> Outcome {
    if steps > MAX_ITERATE_STEPS {
        return Err(format!("--steps must be at most {MAX_ITERATE_STEPS}"));
    }
    let cubic = DiagonalCubic::new(c.clone()).map_err(err)?;
    let points = cubic.tangent_iterates(start, steps).map_err(err)?;
    let mut entries = Vec::new();
    let mut text = String::new();
    for (i, p) in points.iter().enumerate() {
        let (curve, image) = cubic.to_weierstrass(p).map_err(err)?;
        let verdict = if is_integer(&curve.b) {
            Some(curve.nagell_lutz_test(&image).map_err(err)?)
        } else {
            None
        };
        if i > 0 {
            text.push('\n');
        }
        write!(
            text,
            "{}: ({p}) -> ({image}): {}",
            i + 1,
            verdict.as_ref().map_or_else(|| "no verdict (non-integral model)".into(), verdict_text)
        )
        .unwrap();
        entries.push(json!({
            "point": point_json(p),
            "weierstrass": curve_point_json(&image),
            "torsion": verdict.as_ref().map_or(Value::Null, verdict_json),
        }));
    }
    Ok(Output {
        payload: json!({ "iterates": entries }),
        text,
    })
}
