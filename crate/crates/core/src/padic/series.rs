//! Power series over `Z_p` with a recorded tail bound, Strassmann's bound on
//! the number of zeros in `Z_p`, and residue-class zero location.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{PadicError, PadicNumber};

/// `sum a_i t^i` with `a_0..a_M` known to their own precisions and every
/// later coefficient of valuation at least `tail`. `tail = None` means the
/// series is a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicSeries {
    p: u64,
    coeffs: Vec<PadicNumber>,
    tail: Option<u32>,
}

impl PadicSeries {
    pub fn new(p: u64, coeffs: Vec<PadicNumber>, tail: Option<u32>) -> Result<Self, PadicError> {
        if let Some(c) = coeffs.iter().find(|c| c.p() != p) {
            return Err(PadicError::PrimeMismatch(p, c.p()));
        }
        Ok(PadicSeries { p, coeffs, tail })
    }

    /// The polynomial with the given integer coefficients, lowest degree
    /// first, each known modulo `p^prec`.
    pub fn polynomial(p: u64, prec: u32, coeffs: &[BigInt]) -> Result<Self, PadicError> {
        let coeffs = coeffs
            .iter()
            .map(|c| PadicNumber::new(p, prec, c))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(p, coeffs, None)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[PadicNumber] {
        &self.coeffs
    }

    pub fn tail(&self) -> Option<u32> {
        self.tail
    }

    /// Smallest coefficient precision.
    pub fn precision(&self) -> u32 {
        self.coeffs.iter().map(PadicNumber::precision).min().unwrap_or(u32::MAX)
    }

    /// `f(r + p^d t)` as a series in `t`.
    pub fn shift(&self, r: &BigInt, d: u32) -> PadicSeries {
        let p = self.p;
        let pd = BigInt::from(p).pow(d);
        let n = self.coeffs.len();
        let mut out = Vec::with_capacity(n);
        let mut pdj = BigInt::one();
        for j in 0..n {
            let mut prec = self.coeffs[j..].iter().map(PadicNumber::precision).min().unwrap();
            if let Some(t) = self.tail {
                prec = prec.min(t);
            }
            let mut sum = BigInt::zero();
            // C(i, j) r^(i-j), built incrementally in i.
            let mut binom = BigInt::one();
            let mut rpow = BigInt::one();
            for i in j..n {
                if i > j {
                    binom = binom * i / (i - j);
                    rpow *= r;
                }
                sum += self.coeffs[i].rep() * &binom * &rpow;
            }
            out.push(PadicNumber::reduced(p, prec + d * j as u32, sum * &pdj));
            pdj *= &pd;
        }
        PadicSeries {
            p,
            coeffs: out,
            tail: self.tail.map(|t| t + d * n as u32),
        }
    }
}

/// Largest index of minimal coefficient valuation; it bounds the number of
/// zeros of the series in `Z_p`.
pub fn strassmann_bound(series: &PadicSeries) -> Result<usize, PadicError> {
    let known = series.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
    let min = known
        .clone()
        .map(|(_, c)| c.valuation())
        .min()
        .ok_or(PadicError::IndistinguishableFromZero)?;
    let index = known.filter(|(_, c)| c.valuation() == min).map(|(i, _)| i).max().unwrap();
    for (i, c) in series.coeffs.iter().enumerate() {
        if c.is_zero() && (c.precision() < min || (c.precision() == min && i > index)) {
            return Err(PadicError::InsufficientPrecision {
                index: i,
                precision: c.precision(),
                min,
            });
        }
    }
    if let Some(tail) = series.tail {
        if tail <= min {
            return Err(PadicError::Inadmissible { min, tail });
        }
    }
    Ok(index)
}

/// A residue class `r + p^depth Z_p` that may contain zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroClass {
    pub residue: BigInt,
    pub p: u64,
    pub depth: u32,
    /// Strassmann bound of the series restricted to the class.
    pub bound: usize,
    /// True when the class holds exactly one simple zero.
    pub resolved: bool,
}

impl fmt::Display for ZeroClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}^{}", self.residue, self.p, self.depth)?;
        if !self.resolved {
            write!(f, " (unresolved, up to {} zeros)", self.bound)?;
        }
        Ok(())
    }
}

/// Residue classes modulo `p^depth` containing every zero of the series in
/// `Z_p`, found by descending digit by digit and discarding classes whose
/// local Strassmann bound is 0.
///
/// A class with local bound 1 holds exactly one zero and is resolved; a
/// larger bound at full depth is reported as unresolved. The local bounds of
/// disjoint classes sum to at most the global bound, so the list never has
/// more entries than `strassmann_bound(series)`.
pub fn locate_zeros(series: &PadicSeries, depth: u32) -> Result<Vec<ZeroClass>, PadicError> {
    let precision = series.precision();
    if depth > precision {
        return Err(PadicError::DepthExceedsPrecision { depth, precision });
    }
    let p = series.p;
    let global = strassmann_bound(series)?;
    let mut frontier = if global == 0 { Vec::new() } else { vec![(BigInt::zero(), global)] };
    let pb = BigInt::from(p);
    for d in 0..depth {
        let step = pb.pow(d);
        let mut next = Vec::new();
        for (r, _) in &frontier {
            for a in 0..p {
                let child = r + &step * a;
                let bound = strassmann_bound(&series.shift(&child, d + 1))?;
                if bound > 0 {
                    next.push((child, bound));
                }
            }
        }
        frontier = next;
    }
    Ok(frontier
        .into_iter()
        .map(|(residue, bound)| ZeroClass {
            residue,
            p,
            depth,
            bound,
            resolved: bound == 1,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integer::valuation_u64;
    use crate::rational::Rational;
    use proptest::prelude::*;

    fn poly(p: u64, coeffs: &[i64]) -> PadicSeries {
        let c: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        PadicSeries::polynomial(p, 20, &c).unwrap()
    }

    fn residues(classes: &[ZeroClass]) -> Vec<i64> {
        let mut r: Vec<i64> = classes.iter().map(|c| i64::try_from(&c.residue).unwrap()).collect();
        r.sort();
        r
    }

    /// `log(1 + p u) = sum (-1)^(k+1) p^k u^k / k`, first `m` coefficients.
    fn log_series(p: u64, prec: u32, m: usize) -> PadicSeries {
        let mut coeffs = vec![PadicNumber::zero(p, prec).unwrap()];
        for k in 1..m {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let c = Rational::new(BigInt::from(sign) * BigInt::from(p).pow(k as u32), BigInt::from(k));
            coeffs.push(PadicNumber::from_rational(p, prec, &c).unwrap());
        }
        let tail = (m as u64..m as u64 + 500)
            .map(|k| k - valuation_u64(k, p) as u64)
            .min()
            .unwrap() as u32;
        PadicSeries::new(p, coeffs, Some(tail)).unwrap()
    }

    #[test]
    fn strassmann_examples() {
        assert_eq!(strassmann_bound(&poly(5, &[0, -1, 1])).unwrap(), 2);
        assert_eq!(strassmann_bound(&poly(5, &[7])).unwrap(), 0);
        assert_eq!(strassmann_bound(&poly(5, &[5, 25, 10])).unwrap(), 2);
        assert_eq!(strassmann_bound(&poly(5, &[1, 5, 25])).unwrap(), 0);
        assert_eq!(strassmann_bound(&log_series(5, 10, 8)).unwrap(), 1);
        assert_eq!(
            strassmann_bound(&poly(5, &[0, 0])),
            Err(PadicError::IndistinguishableFromZero)
        );
    }

    #[test]
    fn admissibility() {
        let s = PadicSeries::new(5, poly(5, &[5, 1]).coeffs().to_vec(), Some(0)).unwrap();
        assert_eq!(strassmann_bound(&s), Err(PadicError::Inadmissible { min: 0, tail: 0 }));
        let coarse = PadicSeries::new(
            5,
            vec![PadicNumber::from_i64(5, 1, 25).unwrap(), PadicNumber::from_i64(5, 4, 25).unwrap()],
            None,
        )
        .unwrap();
        assert!(matches!(
            strassmann_bound(&coarse),
            Err(PadicError::InsufficientPrecision { index: 0, .. })
        ));
    }

    #[test]
    fn shift_matches_direct_expansion() {
        let f = poly(5, &[3, -2, 0, 1]);
        let g = f.shift(&BigInt::from(2), 1);
        // f(2 + 5t) = 7 + 50 t + 150 t^2 + 125 t^3
        let reps: Vec<i64> = g.coeffs().iter().map(|c| i64::try_from(c.rep()).unwrap()).collect();
        assert_eq!(reps, vec![7, 50, 150, 125]);
        assert_eq!(g.coeffs()[2].precision(), 22);
    }

    #[test]
    fn zero_examples() {
        let z = locate_zeros(&poly(5, &[0, -1, 1]), 3).unwrap();
        assert_eq!(residues(&z), vec![0, 1]);
        assert!(z.iter().all(|c| c.resolved && c.depth == 3));
        assert!(locate_zeros(&poly(5, &[-2, 0, 1]), 2).unwrap().is_empty());
        let z = locate_zeros(&poly(5, &[-6, 0, 1]), 2).unwrap();
        assert_eq!(residues(&z), vec![9, 16]);
        let z = locate_zeros(&log_series(5, 10, 8), 2).unwrap();
        assert_eq!(residues(&z), vec![0]);
        assert!(z[0].resolved);
    }

    #[test]
    fn double_root_is_unresolved() {
        let z = locate_zeros(&poly(5, &[1, -2, 1]), 3).unwrap();
        assert_eq!(residues(&z), vec![1]);
        assert!(!z[0].resolved);
        assert_eq!(z[0].bound, 2);
        assert_eq!(z[0].to_string(), "1 mod 5^3 (unresolved, up to 2 zeros)");
    }

    #[test]
    fn depth_is_capped_by_precision() {
        let s = PadicSeries::polynomial(5, 3, &[BigInt::from(-1), BigInt::one()]).unwrap();
        assert_eq!(
            locate_zeros(&s, 4),
            Err(PadicError::DepthExceedsPrecision { depth: 4, precision: 3 })
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 48, rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

        #[test]
        fn zeros_are_found_and_counted(
            p in prop::sample::select(vec![3u64, 5, 7]),
            roots in prop::collection::vec(-30i64..30, 1..4),
            c in -20i64..20,
            depth in 1u32..4,
        ) {
            // prod (x - a) * (x^2 + c)
            let mut coeffs = vec![c, 0, 1];
            for a in &roots {
                let mut next = vec![0; coeffs.len() + 1];
                for (i, &k) in coeffs.iter().enumerate() {
                    next[i + 1] += k;
                    next[i] -= a * k;
                }
                coeffs = next;
            }
            let f = poly(p, &coeffs);
            let bound = strassmann_bound(&f).unwrap();
            let classes = locate_zeros(&f, depth).unwrap();
            prop_assert!(classes.len() <= bound);
            let m = (p as i64).pow(depth);
            let found = residues(&classes);
            for a in &roots {
                prop_assert!(found.contains(&a.rem_euclid(m)), "root {} missing from {:?}", a, found);
            }
        }
    }
}
