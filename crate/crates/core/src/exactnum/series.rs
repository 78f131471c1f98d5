use super::{binomial, factorial, Rat, RatPoly};
use crate::error::{Error, Result};

/// Truncated power series in `x` with `RatPoly` coefficients, stored in
/// exponential form: entry `k` is the coefficient of `x^k / k!`.
/// Use [`PolySeries::from_ordinary`] / [`PolySeries::ordinary_coeff`] to cross
/// over to ordinary coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySeries {
    coeffs: Vec<RatPoly>,
}

fn binom_rat(n: usize, k: usize) -> Rat {
    Rat::from_integer(binomial(n as u64, k as u64))
}

impl PolySeries {
    /// Exponential coefficients, padded with zeros or truncated to `order`.
    pub fn new(order: usize, mut coeffs: Vec<RatPoly>) -> Self {
        coeffs.resize(order + 1, RatPoly::zero());
        PolySeries { coeffs }
    }

    pub fn from_constants(order: usize, egf: &[Rat]) -> Self {
        Self::new(order, egf.iter().cloned().map(RatPoly::constant).collect())
    }

    /// Builds from ordinary coefficients `a_k` (of `x^k`).
    pub fn from_ordinary(order: usize, ogf: &[Rat]) -> Self {
        let egf: Vec<Rat> = ogf.iter().enumerate().map(|(k, a)| a * Rat::from_integer(factorial(k as u64))).collect();
        Self::from_constants(order, &egf)
    }

    pub fn one(order: usize) -> Self {
        Self::from_constants(order, &[Rat::from_integer(1.into())])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k / k!`.
    pub fn coeff(&self, k: usize) -> &RatPoly {
        &self.coeffs[k]
    }

    /// Coefficient of `x^k`.
    pub fn ordinary_coeff(&self, k: usize) -> RatPoly {
        let f = Rat::from_integer(factorial(k as u64));
        self.coeffs[k].scale(&(Rat::from_integer(1.into()) / f))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new(n, (0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect())
    }

    pub fn scale(&self, p: &RatPoly) -> Self {
        Self::new(self.order(), self.coeffs.iter().map(|c| c * p).collect())
    }

    /// Product; in exponential form this is the binomial convolution.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(RatPoly::zero(), |acc, i| {
                    let term = &(&self.coeffs[i] * &other.coeffs[k - i]);
                    &acc + &term.scale(&binom_rat(k, i))
                })
            })
            .collect();
        Self::new(n, coeffs)
    }

    /// Substitutes `x -> -x`.
    pub fn negate_x(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() }).collect();
        Self::new(self.order(), coeffs)
    }

    /// Formal logarithm; the constant term must be exactly 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogUndefined);
        }
        let n = self.order();
        // d = H'/H, solved from H d = H' with H_0 = 1
        let mut d: Vec<RatPoly> = Vec::with_capacity(n);
        for k in 0..n {
            let mut v = self.coeffs[k + 1].clone();
            for i in 1..=k {
                let term = &self.coeffs[i] * &d[k - i];
                v = &v - &term.scale(&binom_rat(k, i));
            }
            d.push(v);
        }
        let mut coeffs = vec![RatPoly::zero()];
        coeffs.extend(d);
        Ok(Self::new(n, coeffs))
    }

    /// Formal exponential; the constant term must be 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpUndefined);
        }
        let n = self.order();
        // E' = S' E
        let mut e = vec![RatPoly::constant(Rat::from_integer(1.into()))];
        for k in 0..n {
            let mut v = RatPoly::zero();
            for i in 0..=k {
                let term = &self.coeffs[i + 1] * &e[k - i];
                v = &v + &term.scale(&binom_rat(k, i));
            }
            e.push(v);
        }
        Ok(Self::new(n, e))
    }

    /// `exp(e * log self)`, i.e. `self` raised to a polynomial exponent.
    pub fn pow_poly(&self, e: &RatPoly) -> Result<Self> {
        self.log()?.scale(e).exp()
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn inverse(&self) -> Result<Self> {
        self.pow_poly(&RatPoly::constant(-Rat::from_integer(1.into())))
    }
}

/// `H^e` for a series `H` with constant term 1 and polynomial exponent `e`.
pub fn series_pow_poly_exponent(h: &PolySeries, e: &RatPoly) -> Result<PolySeries> {
    h.pow_poly(e)
}
