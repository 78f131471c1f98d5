//! Closed-form region and bounded-region counts.

use crate::arrangement::{Family, FamilySpec};
use crate::exactnum::{binomial, factorial};
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn pow2(k: usize) -> BigInt {
    BigInt::one() << k
}

/// Ordered set partitions of `[n]`: 1, 1, 3, 13, 75, ...
pub fn fubini(n: usize) -> BigInt {
    let mut a = vec![BigInt::one()];
    for k in 1..=n {
        let v = (1..=k).map(|j| binomial(k as u64, j as u64) * &a[k - j]).sum();
        a.push(v);
    }
    a.swap_remove(n)
}

/// `r / (n(m+1) + r) * binom(n(m+1) + r, n)`
pub fn raney(n: usize, m: usize, r: usize) -> BigInt {
    let top = n * (m + 1) + r;
    binomial(top as u64, n as u64) * BigInt::from(r) / BigInt::from(top)
}

/// Number of regions, where a closed form is known.
pub fn regions(spec: FamilySpec) -> Option<BigInt> {
    let n = spec.n;
    let m = spec.m.unwrap_or(1) as usize;
    let f = |k: usize| factorial(k as u64);
    let c = |a: usize, b: usize| binomial(a as u64, b as u64);
    let signed = pow2(n) * f(n);
    Some(match spec.family {
        Family::Braid => f(n),
        Family::Boolean => pow2(n),
        Family::TypeC => signed,
        Family::TypeD if n == 1 => BigInt::one(),
        Family::TypeD => pow2(n - 1) * f(n),
        Family::BraidPlusBoolean => f(n + 1),
        Family::Fubini => 2 * fubini(n),
        Family::Threshold if n == 1 => BigInt::one(),
        Family::Threshold => 2 * (fubini(n) - n * fubini(n - 1)),
        Family::CatalanA => f(n) * c(2 * n, n) / (n + 1),
        Family::CatC | Family::CatB => signed * c(2 * n, n),
        Family::CatCExt => signed * c((m + 1) * n, n),
        Family::CatD => pow2(n - 1) * f(2 * n - 2) / f(n - 1) * (3 * n - 2),
        Family::Pointed => signed * c(2 * n + 2, n),
        Family::CatBC => pow2(n - 1) * f(n) * c(2 * n + 2, n + 1),
        Family::Raney => f(n) * raney(n, m, 2),
        Family::CatThreshold | Family::ShiThreshold => return None,
    })
}

/// Number of bounded regions, where a closed form is known.
pub fn bounded(spec: FamilySpec) -> Option<BigInt> {
    let n = spec.n;
    let f = |k: usize| factorial(k as u64);
    let c = |a: usize, b: usize| binomial(a as u64, b as u64);
    let signed = pow2(n) * f(n);
    let central_rank_zero = matches!(spec.family, Family::Braid | Family::TypeD | Family::Threshold) && n == 1;
    Some(match spec.family {
        _ if central_rank_zero => BigInt::one(),
        Family::Braid
        | Family::Boolean
        | Family::TypeC
        | Family::TypeD
        | Family::BraidPlusBoolean
        | Family::Fubini
        | Family::Threshold
        | Family::Raney => BigInt::zero(),
        Family::CatC | Family::CatB => signed * c(2 * n - 1, n),
        Family::CatD if n == 1 => BigInt::one(),
        Family::CatD => pow2(n - 1) * f(2 * n - 3) / f(n - 2) * (3 * n - 4),
        Family::Pointed => signed * c(2 * n + 1, n + 1),
        Family::CatBC => signed * c(2 * n, n),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(f: Family, n: usize) -> i64 {
        regions(FamilySpec::new(f, n)).unwrap().try_into().unwrap()
    }

    #[test]
    fn small_values() {
        let fub: Vec<BigInt> = (0..5).map(fubini).collect();
        assert_eq!(fub, [1, 1, 3, 13, 75].map(BigInt::from));
        assert_eq!([2, 3, 4].map(|n| r(Family::Threshold, n)), [2, 8, 46]);
        assert_eq!(r(Family::CatD, 2), 16);
        assert_eq!(r(Family::CatC, 2), 48);
        assert_eq!(r(Family::Pointed, 1), 8);
        assert_eq!(r(Family::CatalanA, 3), 30);
        let raney2 = |n, m| regions(FamilySpec::with_m(Family::Raney, n, m)).unwrap();
        assert_eq!(raney2(2, 1), BigInt::from(10));
        assert_eq!(raney2(2, 2), BigInt::from(14));
        assert_eq!(raney2(1, 5), BigInt::from(2));
        let b = |f, n| bounded(FamilySpec::new(f, n)).unwrap();
        assert_eq!(b(Family::CatD, 3), BigInt::from(120));
        assert_eq!(b(Family::Pointed, 1), BigInt::from(6));
    }
}
