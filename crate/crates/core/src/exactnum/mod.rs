//! Exact arithmetic: rationals, polynomials in `t`, truncated exponential
//! series with polynomial coefficients, interpolation and small primes.

mod poly;
mod series;

pub use poly::{interpolate, IntPoly, RatPoly};
pub use series::{series_pow_poly_exponent, PolySeries};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Reduced arbitrary precision rational; the denominator is always positive.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Formats as `p` or `p/q`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn lcm_of_denominators<'a>(vals: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    vals.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

pub fn abs_max<'a>(vals: impl IntoIterator<Item = &'a Rat>) -> Rat {
    vals.into_iter().map(|r| r.abs()).fold(Rat::zero(), |a, b| if b > a { b } else { a })
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The `count` smallest primes strictly greater than `bound`.
pub fn primes_above(bound: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut q = bound + 1;
    while out.len() < count {
        if is_prime(q) {
            out.push(q);
        }
        q += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn primes() {
        assert_eq!(primes_above(10, 3), vec![11, 13, 17]);
        assert_eq!(primes_above(1, 1), vec![2]);
        assert_eq!(primes_above(100, 2), vec![101, 103]);
    }

    #[test]
    fn rat_text_roundtrip() {
        for s in ["0", "-5/2", "3", "7/4"] {
            assert_eq!(fmt_rat(&parse_rat(s).unwrap()), s);
        }
        assert_eq!(fmt_rat(&parse_rat("4/-6").unwrap()), "-2/3");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(factorial(5), BigInt::from(120));
    }

    proptest! {
        #[test]
        fn rat_is_a_field(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            let x = rat(a, b);
            let y = rat(c, d);
            prop_assert_eq!(&x + (-&x), Rat::zero());
            prop_assert_eq!(&x * int(b), int(a));
            prop_assert_eq!((&x + &y) - &y, x.clone());
            if !y.is_zero() {
                prop_assert_eq!((&x * &y) / &y, x);
            }
        }
    }
}
