//! Characteristic polynomials by counting points over prime fields, and
//! region / bounded-region counts from them.

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exactnum::{abs_max, int, interpolate, primes_above, IntPoly, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    pub poly: IntPoly,
    pub arrangement_dim: usize,
}

impl CharPoly {
    pub fn eval(&self, t: i64) -> BigInt {
        self.poly.eval(&BigInt::from(t))
    }

    /// Absolute values of the coefficients, constant term first.
    pub fn abs_coeffs(&self) -> Vec<BigInt> {
        (0..=self.arrangement_dim).map(|k| self.poly.coeff(k).abs()).collect()
    }
}

fn reduce(v: &BigInt, q: u64) -> u64 {
    v.mod_floor(&BigInt::from(q)).to_u64().unwrap()
}

/// Points of `(Z/q)^n` on none of the hyperplanes; the data must be integral.
pub fn count_ff_points(a: &Arrangement, q: u64) -> Result<u64> {
    let n = a.dim();
    let mut rows: Vec<(Vec<u64>, u64)> = Vec::new();
    for h in a.hyperplanes() {
        if !h.offset.is_integer() || h.normal.iter().any(|c| !c.is_integer()) {
            return Err(Error::NonIntegral(h.to_string()));
        }
        let normal: Vec<u64> = h.normal.iter().map(|c| reduce(&c.to_integer(), q)).collect();
        let offset = reduce(&h.offset.to_integer(), q);
        if normal.iter().all(|&c| c == 0) {
            if offset == 0 {
                return Err(Error::BadPrime(q));
            }
            continue;
        }
        rows.push((normal, offset));
    }
    if n == 0 {
        return Ok(1);
    }
    // A row is checked at the last coordinate it involves.
    let last: Vec<usize> = rows.iter().map(|(c, _)| c.iter().rposition(|&v| v != 0).unwrap()).collect();
    let mut x = vec![0u64; n];
    Ok(count_rec(&rows, &last, q, &mut x, 0))
}

fn count_rec(rows: &[(Vec<u64>, u64)], last: &[usize], q: u64, x: &mut [u64], k: usize) -> u64 {
    let n = x.len();
    if k + 1 == n {
        // Each row ending here forbids exactly one residue of the last coordinate.
        let mut forbidden = vec![false; q as usize];
        for (r, (c, b)) in rows.iter().enumerate() {
            if last[r] != k {
                continue;
            }
            let partial = (0..k).fold(0u64, |acc, j| (acc + c[j] * x[j]) % q);
            let rhs = (b + q - partial) % q;
            let inv = mod_inverse(c[k], q);
            forbidden[(rhs * inv % q) as usize] = true;
        }
        return q - forbidden.iter().filter(|&&f| f).count() as u64;
    }
    let mut total = 0;
    'values: for v in 0..q {
        x[k] = v;
        for (r, (c, b)) in rows.iter().enumerate() {
            if last[r] == k {
                let s = (0..=k).fold(0u64, |acc, j| (acc + c[j] * x[j]) % q);
                if s == *b {
                    continue 'values;
                }
            }
        }
        total += count_rec(rows, last, q, x, k + 1);
    }
    total
}

fn mod_inverse(a: u64, q: u64) -> u64 {
    let (mut e, mut base, mut acc) = (q - 2, a % q, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        e >>= 1;
    }
    acc
}

/// Lower bound for sampled primes: `2 n (1 + max|offset| + max|normal entry|)`
/// on the integral rescaling.
pub fn prime_bound(scaled: &Arrangement) -> u64 {
    let offsets = abs_max(scaled.hyperplanes().iter().map(|h| &h.offset));
    let normals = abs_max(scaled.hyperplanes().iter().flat_map(|h| h.normal.iter()));
    let b = (int(1) + offsets + normals) * int(2 * scaled.dim() as i64);
    b.to_integer().to_u64().expect("prime bound fits in u64")
}

fn attempt(scaled: &Arrangement, bound: u64) -> Result<CharPoly> {
    let n = scaled.dim();
    let primes = primes_above(bound, n + 2);
    let counts: Vec<u64> = primes.par_iter().map(|&q| count_ff_points(scaled, q)).collect::<Result<_>>()?;
    let points: Vec<(Rat, Rat)> = primes[..=n]
        .iter()
        .zip(&counts)
        .map(|(&q, &c)| (Rat::from_integer(q.into()), Rat::from_integer(c.into())))
        .collect();
    let poly = interpolate(&points)?.to_int_poly()?;
    let check = primes[n + 1];
    if poly.eval(&BigInt::from(check)) != BigInt::from(counts[n + 1]) {
        return Err(Error::PosetNotStabilized(format!("mismatch at q = {check}")));
    }
    if poly.degree() != Some(n) || !poly.coeff(n).is_one() {
        return Err(Error::PosetNotStabilized("polynomial is not monic of degree n".into()));
    }
    Ok(CharPoly { poly, arrangement_dim: n })
}

/// Characteristic polynomial: interpolate counts at `n + 1` primes above the
/// bound and confirm at one more; on mismatch retry once with twice the bound.
pub fn char_poly(a: &Arrangement) -> Result<CharPoly> {
    let scaled = a.scale_to_integer();
    let bound = prime_bound(&scaled).max(2);
    attempt(&scaled, bound).or_else(|_| attempt(&scaled, 2 * bound))
}

/// `(-1)^n chi(-1)`
pub fn regions_from_chi(c: &CharPoly) -> BigInt {
    let v = c.eval(-1);
    if c.arrangement_dim.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// `(-1)^rank chi(1)`
pub fn bounded_from_chi(c: &CharPoly, rank: usize) -> BigInt {
    let v = c.eval(1);
    if rank.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// Coefficients alternate in sign from the top and are never zero in the
/// wrong direction.
pub fn signs_alternate(c: &CharPoly) -> bool {
    let n = c.arrangement_dim;
    (0..=n).all(|i| {
        let v = c.poly.coeff(i);
        v.is_zero() || (v.is_positive() == (n - i).is_multiple_of(2))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{build, Family, FamilySpec};

    fn arr(f: Family, n: usize) -> Arrangement {
        build(FamilySpec::new(f, n)).unwrap()
    }

    #[test]
    fn point_counts() {
        assert_eq!(count_ff_points(&arr(Family::Braid, 2), 5).unwrap(), 20);
        assert_eq!(count_ff_points(&arr(Family::CatC, 1), 7).unwrap(), 4);
        assert_eq!(count_ff_points(&arr(Family::Boolean, 2), 5).unwrap(), 16);
    }

    #[test]
    fn bad_prime() {
        assert_eq!(count_ff_points(&arr(Family::TypeC, 1), 2), Err(Error::BadPrime(2)));
    }

    #[test]
    fn known_polynomials() {
        let c = char_poly(&arr(Family::Braid, 3)).unwrap();
        assert_eq!(c.poly, IntPoly::from_i64(&[0, 2, -3, 1]));
        assert_eq!(regions_from_chi(&c), BigInt::from(6));
        let c = char_poly(&arr(Family::TypeC, 2)).unwrap();
        assert_eq!(c.poly, IntPoly::from_i64(&[3, -4, 1]));
        assert_eq!((regions_from_chi(&c), bounded_from_chi(&c, 2)), (8.into(), 0.into()));
        let c = char_poly(&arr(Family::CatC, 1)).unwrap();
        assert_eq!(c.poly, IntPoly::from_i64(&[-3, 1]));
        assert_eq!((regions_from_chi(&c), bounded_from_chi(&c, 1)), (4.into(), 2.into()));
    }

    #[test]
    fn rescaling_and_reordering_preserve_chi() {
        let a = arr(Family::Pointed, 2);
        let c = char_poly(&a).unwrap();
        assert_eq!(char_poly(&a.scale_to_integer()).unwrap(), c);
        let mut hs = a.hyperplanes().to_vec();
        hs.reverse();
        let b = Arrangement::new(a.dim(), hs, None).unwrap();
        assert_eq!(char_poly(&b).unwrap(), c);
        assert!(signs_alternate(&c));
    }

    #[test]
    fn central_vanishes_at_one() {
        for f in [Family::Braid, Family::TypeC, Family::TypeD, Family::Threshold, Family::Fubini] {
            let c = char_poly(&arr(f, 3)).unwrap();
            assert!(c.eval(1).is_zero(), "{f}");
        }
    }

    #[test]
    fn empty_arrangement() {
        let c = char_poly(&arr(Family::TypeD, 1)).unwrap();
        assert_eq!(c.poly, IntPoly::from_i64(&[0, 1]));
    }
}
