use super::{fmt_rat, Rat};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer polynomial in `t`, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn to_rat_poly(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().cloned().map(Rat::from_integer).collect())
    }
}

impl fmt::Display for IntPoly {
    /// Descending powers, e.g. `t^3 - 3t^2 + 2t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let unit = mag.is_one() && k > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial in `t` over the rationals, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// `t`
    pub fn t() -> Self {
        Self::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Integer polynomial if every coefficient is integral.
    pub fn to_int_poly(&self) -> Result<IntPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return Err(Error::NonIntegral(fmt_rat(c)));
            }
            out.push(c.to_integer());
        }
        Ok(IntPoly::new(out))
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({})", fmt_rat(c)),
                1 => format!("({})t", fmt_rat(c)),
                _ => format!("({})t^{k}", fmt_rat(c)),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Lagrange interpolation: the unique polynomial of degree below the number
/// of points through all of them.
pub fn interpolate(points: &[(Rat, Rat)]) -> Result<RatPoly> {
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(Error::DegenerateInterpolation(fmt_rat(x)));
        }
    }
    let mut acc = RatPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = RatPoly::constant(Rat::one());
        let mut denom = Rat::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = &basis * &RatPoly::new(vec![-xj.clone(), Rat::one()]);
                denom *= xi - xj;
            }
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    Ok(acc)
}
