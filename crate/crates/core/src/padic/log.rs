use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{PadicError, PadicNumber};
use crate::integer::{mod_inverse, valuation_u64};

/// `floor(log_p k)` for `k >= 1`.
pub(super) fn ilog(p: u64, k: u64) -> u32 {
    k.ilog(p)
}

/// Largest `k` whose term `t^k/k` with `v(t) = v` can have valuation below
/// `N`; terms past it vanish modulo `p^N`. Returns 0 when no term matters.
pub fn log_truncation_index(p: u64, v: u32, prec: u32) -> u64 {
    assert!(v >= 1);
    let term = |k: u64| k * v as u64 - valuation_u64(k, p) as u64;
    // k v - floor(log_p k) is nondecreasing and bounds every later term below.
    let mut last = 0;
    let mut k = 1;
    while k * v as u64 - ilog(p, k) as u64 <= prec as u64 + 1 {
        if term(k) < prec as u64 {
            last = k;
        }
        k += 1;
    }
    last
}

/// `log u = sum_{k>=1} (-1)^(k+1) (u-1)^k / k` for `u = 1 mod p`
/// (`1 mod 4` when `p = 2`), with the precision of `u`.
pub fn padic_log(u: &PadicNumber) -> Result<PadicNumber, PadicError> {
    let (p, prec) = (u.p(), u.precision());
    let needed = if p == 2 { 2 } else { 1 };
    let one = PadicNumber::reduced(p, prec, BigInt::one());
    let t = u.sub(&one);
    let v = t.valuation();
    if v < needed {
        return Err(PadicError::OutsideConvergenceDisk {
            modulus: if p == 2 { 4 } else { p },
        });
    }
    let modulus = u.modulus();
    let pb = BigInt::from(p);
    let t = t.rep().clone();
    let last = if t.is_zero() { 0 } else { log_truncation_index(p, v, prec) };
    let mut sum = BigInt::zero();
    let mut power = BigInt::one();
    for k in 1..=last {
        power *= &t;
        let e = valuation_u64(k, p);
        // v(t^k) = k v >= e, so the division is exact.
        let reduced = &power / pb.pow(e);
        let unit = BigInt::from(k / p.pow(e));
        let inv = mod_inverse(&unit, &modulus).expect("k / p^v(k) is a unit");
        let term = reduced * inv;
        if k % 2 == 1 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(PadicNumber::reduced(p, prec, sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pn(p: u64, prec: u32, v: i64) -> PadicNumber {
        PadicNumber::from_i64(p, prec, v).unwrap()
    }

    /// Exact rational partial sum with a fixed, generous number of terms.
    fn log_oracle(p: u64, prec: u32, u: &BigInt) -> PadicNumber {
        let t = Rational::from_integer(u - 1);
        let mut sum = Rational::zero();
        let mut power = Rational::one();
        for k in 1..=120i64 {
            power *= &t;
            let term = &power / Rational::from_integer(k.into());
            sum = if k % 2 == 1 { sum + term } else { sum - term };
        }
        PadicNumber::from_rational(p, prec, &sum).unwrap()
    }

    #[test]
    fn log_of_one_is_zero() {
        assert!(padic_log(&pn(5, 10, 1)).unwrap().is_zero());
        let six = pn(5, 10, 6);
        let unit = six.mul(&six.inverse().unwrap()).truncate(10);
        assert!(padic_log(&unit).unwrap().is_zero());
    }

    #[test]
    fn matches_long_sum() {
        for (p, u) in [(5u64, 6i64), (5, 26), (3, 4), (7, 8), (3, -2), (2, 5), (2, -3)] {
            let got = padic_log(&pn(p, 10, u)).unwrap();
            assert_eq!(got, log_oracle(p, 10, &BigInt::from(u)), "p={p} u={u}");
        }
    }

    #[test]
    fn outside_disk() {
        assert_eq!(
            padic_log(&pn(5, 10, 2)),
            Err(PadicError::OutsideConvergenceDisk { modulus: 5 })
        );
        assert_eq!(
            padic_log(&pn(2, 10, 3)),
            Err(PadicError::OutsideConvergenceDisk { modulus: 4 })
        );
    }

    #[test]
    fn six_squared() {
        let a = padic_log(&pn(5, 10, 6)).unwrap();
        let b = padic_log(&pn(5, 10, 36)).unwrap();
        assert_eq!(a.add(&a), b);
    }

    #[test]
    fn truncation_index_is_minimal() {
        for p in [2u64, 3, 5, 7] {
            for v in 1..4 {
                for prec in 1..16 {
                    let k = log_truncation_index(p, v, prec);
                    let term = |k: u64| k * v as u64 - valuation_u64(k, p) as u64;
                    if k > 0 {
                        assert!(term(k) < prec as u64);
                    }
                    for later in k + 1..k + 200 {
                        assert!(term(later) >= prec as u64, "p={p} v={v} N={prec} k={later}");
                    }
                }
            }
        }
    }

    #[test]
    fn homomorphism_on_random_units() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let p = [3u64, 5, 7][rng.gen_range(0..3)];
            let prec = rng.gen_range(1..=12);
            let m = BigInt::from(p).pow(prec);
            let draw = |rng: &mut ChaCha8Rng| {
                let r: u64 = rng.gen_range(0..u64::MAX);
                PadicNumber::reduced(p, prec, BigInt::from(1) + BigInt::from(p) * BigInt::from(r) % &m)
            };
            let (u, w) = (draw(&mut rng), draw(&mut rng));
            let lhs = padic_log(&u.mul(&w).truncate(prec)).unwrap();
            let rhs = padic_log(&u).unwrap().add(&padic_log(&w).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn extra_precision_truncates_back() {
        for u in [6i64, 11, 31, 126] {
            let lo = padic_log(&pn(5, 8, u)).unwrap();
            let hi = padic_log(&pn(5, 12, u)).unwrap();
            assert_eq!(hi.truncate(8), lo);
        }
    }
}
