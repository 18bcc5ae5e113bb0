use clap::{Parser, Subcommand, ValueEnum};

use dioph_core::conic::Slope;
use dioph_core::elliptic::{CurvePoint, WeierstrassCurve};
use dioph_core::etale::RingDescriptor;
use dioph_core::padic::DlogWord;
use dioph_core::parser::{parse_polynomial, Equation, MultiPoly};
use dioph_core::point::Point;
use dioph_core::rational::{parse_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "dioph",
    version,
    about = "Exact computations with rational points, étale covers and p-adic series"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse an equation and print it in canonical form.
    ///
    /// Every `--eq` option accepts `@path` to read the equation from a file.
    Parse {
        #[arg(long, value_parser = equation, allow_hyphen_values = true)]
        eq: Equation,
    },
    /// Check whether a point satisfies an equation (values in sorted variable order).
    CheckPoint {
        #[arg(long, value_parser = equation, allow_hyphen_values = true)]
        eq: Equation,
        #[arg(long, value_parser = rational_list, allow_hyphen_values = true)]
        point: Rationals,
    },
    /// Enumerate integer solutions with every coordinate in [-bound, bound].
    Search {
        #[arg(long, value_parser = equation, allow_hyphen_values = true)]
        eq: Equation,
        #[arg(long)]
        bound: u64,
    },
    /// Second intersection of a conic with the line of given slope through a base point.
    ConicSweep {
        #[arg(long, value_parser = equation, allow_hyphen_values = true)]
        eq: Equation,
        #[arg(long, value_parser = point, allow_hyphen_values = true)]
        base: Point,
        /// A rational slope or `vertical`.
        #[arg(long, value_parser = slope, allow_hyphen_values = true)]
        slope: Slope,
    },
    /// Slope of the line joining two points of a conic.
    ConicSlope {
        #[arg(long, value_parser = equation, allow_hyphen_values = true)]
        eq: Equation,
        #[arg(long, value_parser = point, allow_hyphen_values = true)]
        base: Point,
        #[arg(long, value_parser = point, allow_hyphen_values = true)]
        point: Point,
    },
    /// Primitive Pythagorean triple swept out by a slope.
    Triples {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        slope: Rational,
    },
    /// Third intersection of the tangent to x^3 + y^3 = c.
    CubicTangent {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        c: Rational,
        #[arg(long, value_parser = point, allow_hyphen_values = true)]
        point: Point,
    },
    /// Third intersection of the secant through two points of x^3 + y^3 = c.
    CubicSecant {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        c: Rational,
        #[arg(long, value_parser = point, allow_hyphen_values = true)]
        p: Point,
        #[arg(long, value_parser = point, allow_hyphen_values = true)]
        q: Point,
    },
    /// Repeated tangent steps with Weierstrass images and torsion verdicts.
    CubicIterate {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        c: Rational,
        #[arg(long, value_parser = point, allow_hyphen_values = true)]
        point: Point,
        /// At most 8.
        #[arg(long, default_value_t = 5)]
        steps: usize,
    },
    /// Map a point of x^3 + y^3 = c to v^2 = u^3 - 432 c^2.
    WeierstrassMap {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        c: Rational,
        #[arg(long, value_parser = point, allow_hyphen_values = true)]
        point: Point,
    },
    /// Sum of two points on y^2 = x^3 + a x + b (`O` is the identity).
    EcAdd {
        #[arg(long, value_parser = curve, allow_hyphen_values = true)]
        curve: WeierstrassCurve,
        #[arg(long, value_parser = curve_point, allow_hyphen_values = true)]
        p: CurvePoint,
        #[arg(long, value_parser = curve_point, allow_hyphen_values = true)]
        q: CurvePoint,
    },
    /// Scalar multiple [n]P.
    EcMul {
        #[arg(long, value_parser = curve, allow_hyphen_values = true)]
        curve: WeierstrassCurve,
        #[arg(long, value_parser = curve_point, allow_hyphen_values = true)]
        point: CurvePoint,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Nagell-Lutz torsion test.
    TorsionTest {
        #[arg(long, value_parser = curve, allow_hyphen_values = true)]
        curve: WeierstrassCurve,
        #[arg(long, value_parser = curve_point, allow_hyphen_values = true)]
        point: CurvePoint,
    },
    /// Rational torsion subgroup of an integral curve.
    TorsionSubgroup {
        #[arg(long, value_parser = curve, allow_hyphen_values = true)]
        curve: WeierstrassCurve,
    },
    /// Rational points Q with [n]Q = P, 1 <= n <= 8.
    Divide {
        #[arg(long, value_parser = curve, allow_hyphen_values = true)]
        curve: WeierstrassCurve,
        #[arg(long, value_parser = curve_point, allow_hyphen_values = true)]
        point: CurvePoint,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Division polynomials phi_n and psi_n^2, 1 <= n <= 8.
    Divpoly {
        #[arg(long, value_parser = curve, allow_hyphen_values = true)]
        curve: WeierstrassCurve,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Rational roots of a polynomial in x.
    Roots {
        #[arg(long, value_parser = polynomial, allow_hyphen_values = true)]
        poly: MultiPoly,
    },
    /// Discriminant of a polynomial in x (coefficients may involve t).
    Discriminant {
        #[arg(long, value_parser = polynomial, allow_hyphen_values = true)]
        poly: MultiPoly,
    },
    /// Resultant of two polynomials in x (coefficients may involve t).
    Resultant {
        #[arg(long, value_parser = polynomial, allow_hyphen_values = true)]
        p: MultiPoly,
        #[arg(long, value_parser = polynomial, allow_hyphen_values = true)]
        q: MultiPoly,
    },
    /// Whether an element (a polynomial in t) is a unit of a ring.
    IsUnit {
        /// Q, F_p, Z, Z[1/N], Q[t] or Q[t,1/g].
        #[arg(long, value_parser = ring)]
        ring: RingDescriptor,
        #[arg(long, value_parser = polynomial, allow_hyphen_values = true)]
        element: MultiPoly,
    },
    /// Whether A -> A[x]/(f) is étale.
    EtaleCheck {
        /// Q, F_p, Z, Z[1/N], Q[t] or Q[t,1/g].
        #[arg(long, value_parser = ring)]
        ring: RingDescriptor,
        #[arg(long, value_parser = polynomial, allow_hyphen_values = true)]
        poly: MultiPoly,
    },
    /// Number of geometric points of f mod p.
    Fiber {
        #[arg(long, value_parser = polynomial, allow_hyphen_values = true)]
        poly: MultiPoly,
        #[arg(long)]
        prime: u64,
    },
    /// Whether the maps Spec Z[1/N][x]/(f) -> Spec Z form an étale cover.
    CoverCheck {
        /// `f,N`; repeat for each map.
        #[arg(long = "map", value_parser = cover_map, allow_hyphen_values = true, required = true)]
        maps: Vec<(MultiPoly, num_bigint::BigUint)>,
    },
    /// p-adic logarithm.
    PadicLog {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        prec: u32,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        u: Rational,
    },
    /// Iterated integral from 0 to z; word letters 0 = dt/t, 1 = dt/(1-t), leftmost outermost.
    Iterint {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        prec: u32,
        #[arg(long, value_parser = word)]
        word: DlogWord,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        z: Rational,
    },
    /// Check the shuffle product identity for two words at z.
    Shuffle {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        prec: u32,
        #[arg(long, value_parser = word)]
        a: DlogWord,
        #[arg(long, value_parser = word)]
        b: DlogWord,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        z: Rational,
    },
    /// Strassmann bound of a polynomial over Z_p.
    Strassmann {
        #[arg(long)]
        p: u64,
        /// Coefficients, lowest degree first.
        #[arg(long, value_parser = rational_list, allow_hyphen_values = true)]
        coeffs: Rationals,
        #[arg(long, default_value_t = 20)]
        prec: u32,
    },
    /// Residue classes mod p^depth containing all zeros in Z_p.
    Zeros {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        depth: u32,
        /// Coefficients, lowest degree first.
        #[arg(long, value_parser = rational_list, allow_hyphen_values = true)]
        coeffs: Rationals,
        #[arg(long, default_value_t = 20)]
        prec: u32,
    },
}

/// An equation given inline or, as `@path`, read from a file.
fn equation(s: &str) -> Result<Equation, String> {
    let text = match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("cannot read `{path}`: {e}"))?,
        None => s.to_string(),
    };
    text.trim().parse().map_err(|e| format!("{e}"))
}

fn polynomial(s: &str) -> Result<MultiPoly, String> {
    parse_polynomial(s).map_err(|e| format!("{e}"))
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| format!("{e}"))
}

/// A comma-separated list of rationals given as one argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rationals(pub Vec<Rational>);

fn rational_list(s: &str) -> Result<Rationals, String> {
    s.split(',').map(rational).collect::<Result<_, _>>().map(Rationals)
}

fn point(s: &str) -> Result<Point, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn curve_point(s: &str) -> Result<CurvePoint, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn slope(s: &str) -> Result<Slope, String> {
    s.parse().map_err(|e| format!("{e}; expected a rational or `vertical`"))
}

fn curve(s: &str) -> Result<WeierstrassCurve, String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `a,b`, got `{s}`"))?;
    WeierstrassCurve::new(rational(a)?, rational(b)?).map_err(|e| format!("{e}"))
}

fn ring(s: &str) -> Result<RingDescriptor, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn word(s: &str) -> Result<DlogWord, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn cover_map(s: &str) -> Result<(MultiPoly, num_bigint::BigUint), String> {
    let (f, n) = s.rsplit_once(',').ok_or_else(|| format!("expected `f,N`, got `{s}`"))?;
    let n = n.trim().parse().map_err(|_| format!("invalid N `{}`", n.trim()))?;
    Ok((polynomial(f)?, n))
}
