//! Polynomial equations: parsing, canonical printing, point checks and
//! brute-force integer point search.
//!
//! Grammar (whitespace between tokens is ignored):
//!
//! ```text
//! equation := expr ( "=" expr )?
//! expr     := term ( ("+" | "-") term )*
//! term     := unary ( "*" unary )*
//! unary    := ("-" | "+") unary | power
//! power    := atom ( "^" INTEGER )?
//! atom     := NUMBER | IDENT | "(" expr ")"
//! NUMBER   := DIGITS ( "/" DIGITS )?
//! IDENT    := [A-Za-z]+
//! ```
//!
//! Juxtaposition is not multiplication: `2x` is a syntax error. Exponents
//! are nonnegative integer literals, and `x^2^3` must be parenthesized.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::{write_terms, UniPoly};
use crate::rational::{common_denominator, Rational};

/// Largest exponent the parser accepts.
pub const MAX_EXPONENT: u32 = 1024;

/// Largest number of variables `search_integer_points` will scan.
pub const MAX_SEARCH_VARIABLES: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("exponent at offset {offset} is not a nonnegative integer literal")]
    InvalidExponent { offset: usize },
    #[error("exponent at offset {offset} exceeds {MAX_EXPONENT}")]
    ExponentTooLarge { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> Option<usize> {
        match self {
            ParseError::Empty => None,
            ParseError::Syntax { offset, .. }
            | ParseError::InvalidExponent { offset }
            | ParseError::ExponentTooLarge { offset } => Some(*offset),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("no value bound for variable `{0}`")]
    MissingVariable(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("equation has {found} variables; the box search handles at most {MAX_SEARCH_VARIABLES}")]
    TooManyVariables { found: usize },
}

/// A product of variables with positive exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(BTreeMap<String, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(name: &str) -> Self {
        Monomial(BTreeMap::from([(name.to_string(), 1)]))
    }

    pub fn from_powers<'a>(powers: impl IntoIterator<Item = (&'a str, u32)>) -> Self {
        Monomial(
            powers
                .into_iter()
                .filter(|&(_, e)| e > 0)
                .map(|(v, e)| (v.to_string(), e))
                .collect(),
        )
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn exponent(&self, var: &str) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn powers(&self) -> impl Iterator<Item = (&str, u32)> {
        self.0.iter().map(|(v, &e)| (v.as_str(), e))
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (v, e) in &other.0 {
            *out.entry(v.clone()).or_insert(0) += e;
        }
        Monomial(out)
    }

    /// Graded lexicographic order by variable name, largest first.
    fn grlex_desc(&self, other: &Monomial) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| {
            let mut names: Vec<&String> = self.0.keys().chain(other.0.keys()).collect();
            names.sort();
            names.dedup();
            for v in names {
                let c = other.exponent(v).cmp(&self.exponent(v));
                if c != Ordering::Equal {
                    return c;
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, e) in &self.0 {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if *e == 1 {
                f.write_str(v)?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial over the rationals. No stored coefficient is zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(name: &str) -> Self {
        Self::term(Rational::one(), Monomial::var(name))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Variables that occur, sorted by name.
    pub fn variables(&self) -> Vec<String> {
        let mut vars: Vec<String> = self
            .terms
            .keys()
            .flat_map(|m| m.0.keys().cloned())
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::constant(Rational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact evaluation; every occurring variable must be bound.
    pub fn eval(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational, EvalError> {
        let mut sum = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.powers() {
                let x = assignment
                    .get(v)
                    .ok_or_else(|| EvalError::MissingVariable(v.to_string()))?;
                t *= num_traits::pow(x.clone(), e as usize);
            }
            sum += t;
        }
        Ok(sum)
    }

    /// Terms in graded lexicographic order, largest first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| a.0.grlex_desc(b.0));
        ts
    }

    /// View as a polynomial in `var` alone; `None` if another variable occurs.
    pub fn to_unipoly(&self, var: &str) -> Option<UniPoly<Rational>> {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (m, c) in &self.terms {
            if m.0.keys().any(|v| v != var) {
                return None;
            }
            let k = m.exponent(var) as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] += c;
        }
        Some(UniPoly::new(coeffs))
    }

    /// View as a polynomial in `var` with coefficients in `Q[param]`.
    pub fn to_unipoly_over(&self, var: &str, param: &str) -> Option<UniPoly<UniPoly<Rational>>> {
        let mut coeffs: Vec<Vec<Rational>> = Vec::new();
        for (m, c) in &self.terms {
            if m.0.keys().any(|v| v != var && v != param) {
                return None;
            }
            let k = m.exponent(var) as usize;
            let j = m.exponent(param) as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Vec::new());
            }
            if coeffs[k].len() <= j {
                coeffs[k].resize(j + 1, Rational::zero());
            }
            coeffs[k][j] += c;
        }
        Some(UniPoly::new(coeffs.into_iter().map(UniPoly::new).collect()))
    }

    pub fn from_unipoly(p: &UniPoly<Rational>, var: &str) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(Monomial::from_powers([(var, k as u32)]), c.clone());
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| (c, m.to_string()));
        write_terms(f, terms)
    }
}

/// An equation normalized to `lhs = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: MultiPoly,
    pub variables: Vec<String>,
}

impl Equation {
    pub fn new(lhs: MultiPoly) -> Self {
        let variables = lhs.variables();
        Equation { lhs, variables }
    }

    pub fn degree(&self) -> Option<u32> {
        self.lhs.total_degree()
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0", self.lhs)
    }
}

impl std::str::FromStr for Equation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_equation(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational, bool),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Equals,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n, _) => format!("number `{n}`"),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Equals => "`=`".into(),
        Tok::End => "end of input".into(),
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        offset,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'=' => Tok::Equals,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let num: BigInt = text[start..i].parse().expect("digits");
                let mut den = BigInt::one();
                let mut is_fraction = false;
                if i < bytes.len() && bytes[i] == b'/' {
                    let slash = i;
                    i += 1;
                    let ds = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if ds == i {
                        return Err(syntax(slash, "expected digits after `/` in a fraction literal"));
                    }
                    den = text[ds..i].parse().expect("digits");
                    if den.is_zero() {
                        return Err(syntax(ds, "zero denominator"));
                    }
                    is_fraction = true;
                }
                out.push((Tok::Num(Rational::new(num, den), is_fraction), start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().expect("in bounds");
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self) -> ParseError {
        syntax(self.offset(), format!("unexpected {}", describe(self.peek())))
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let offset = self.offset();
        let e = match self.peek().clone() {
            Tok::Num(n, false) => {
                self.bump();
                n.to_integer()
                    .to_u32()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or(ParseError::ExponentTooLarge { offset })?
            }
            Tok::Num(_, true) | Tok::Minus => return Err(ParseError::InvalidExponent { offset }),
            _ => {
                return Err(syntax(
                    offset,
                    format!("expected a nonnegative integer exponent, found {}", describe(self.peek())),
                ))
            }
        };
        if *self.peek() == Tok::Caret {
            return Err(syntax(self.offset(), "chained `^`; parenthesize the base"));
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek().clone() {
            Tok::Num(n, _) => {
                self.bump();
                Ok(MultiPoly::constant(n))
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(MultiPoly::var(&name))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(syntax(
                        self.offset(),
                        format!("expected `)`, found {}", describe(self.peek())),
                    ));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Parses `lhs = rhs` (or a bare polynomial, read as `= 0`) into `lhs - rhs = 0`.
pub fn parse_equation(text: &str) -> Result<Equation, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let lhs = p.expr()?;
    let rhs = match p.peek() {
        Tok::Equals => {
            p.bump();
            p.expr()?
        }
        Tok::End => MultiPoly::zero(),
        _ => return Err(p.unexpected()),
    };
    if *p.peek() != Tok::End {
        return Err(p.unexpected());
    }
    Ok(Equation::new(lhs.sub(&rhs)))
}

/// Parses a polynomial expression (no `=`).
pub fn parse_polynomial(text: &str) -> Result<MultiPoly, ParseError> {
    if let Some(offset) = text.find('=') {
        return Err(syntax(offset, "expected a polynomial, found `=`"));
    }
    parse_equation(text).map(|eq| eq.lhs)
}

/// Whether `assignment` is a solution, i.e. defines a ring map out of
/// `Q[vars]/(lhs)`. Extra bindings are ignored.
pub fn is_point(eq: &Equation, assignment: &BTreeMap<String, Rational>) -> Result<bool, EvalError> {
    if let Some(missing) = eq.variables.iter().find(|v| !assignment.contains_key(*v)) {
        return Err(EvalError::MissingVariable(missing.clone()));
    }
    Ok(eq.lhs.eval(assignment)?.is_zero())
}

/// Convenience: bind `values` to `eq.variables` in order.
pub fn assignment_for(eq: &Equation, values: &[Rational]) -> BTreeMap<String, Rational> {
    eq.variables.iter().cloned().zip(values.iter().cloned()).collect()
}

/// Every integer solution with all coordinates in `[-bound, bound]`, in
/// lexicographic order over `eq.variables`.
pub fn search_integer_points(eq: &Equation, bound: u64) -> Result<Vec<Vec<BigInt>>, SearchError> {
    let k = eq.variables.len();
    if k > MAX_SEARCH_VARIABLES {
        return Err(SearchError::TooManyVariables { found: k });
    }
    let den = common_denominator(eq.lhs.terms().map(|(_, c)| c));
    let terms: Vec<(BigInt, Vec<u32>)> = eq
        .lhs
        .terms()
        .map(|(m, c)| {
            let coeff = (c * Rational::from_integer(den.clone())).to_integer();
            (coeff, eq.variables.iter().map(|v| m.exponent(v)).collect())
        })
        .collect();
    let max_exp: Vec<u32> = (0..k)
        .map(|i| terms.iter().map(|(_, e)| e[i]).max().unwrap_or(0))
        .collect();

    let b = bound as i64;
    let mut out = Vec::new();
    let mut point = vec![-b; k];
    loop {
        let powers: Vec<Vec<BigInt>> = (0..k)
            .map(|i| {
                let x = BigInt::from(point[i]);
                let mut ps = vec![BigInt::one()];
                for _ in 0..max_exp[i] {
                    let next = ps.last().expect("nonempty") * &x;
                    ps.push(next);
                }
                ps
            })
            .collect();
        let value: BigInt = terms
            .iter()
            .map(|(c, es)| {
                es.iter()
                    .enumerate()
                    .fold(c.clone(), |acc, (i, &e)| acc * &powers[i][e as usize])
            })
            .sum();
        if value.is_zero() {
            out.push(point.iter().map(|&x| BigInt::from(x)).collect());
        }
        // odometer increment, last coordinate fastest
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if point[i] < b {
                point[i] += 1;
                break;
            }
            point[i] = -b;
        }
    }
}

impl MultiPoly {
    /// Coefficient list view for a polynomial that is at most quadratic in
    /// two variables: `(xx, xy, yy, x, y, 1)`.
    pub fn quadratic_coefficients(&self, x: &str, y: &str) -> [Rational; 6] {
        let c = |px: u32, py: u32| self.coefficient(&Monomial::from_powers([(x, px), (y, py)]));
        [c(2, 0), c(1, 1), c(0, 2), c(1, 0), c(0, 1), c(0, 0)]
    }
}
