//! Rational hyperplane arrangements and builders for every family.
//!
//! All deformations are built in translated coordinates. Within a family the
//! hyperplanes come grouped by type (in the order listed on each builder),
//! then by index `i` or pair `i < j` in lexicographic order, then by offset in
//! the listed order.

use crate::error::{Error, Result};
use crate::exactnum::{fmt_rat, int, lcm_of_denominators, parse_rat, rat, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Braid,
    Boolean,
    TypeC,
    TypeD,
    BraidPlusBoolean,
    Fubini,
    Threshold,
    CatalanA,
    CatC,
    CatCExt,
    CatD,
    Pointed,
    CatB,
    CatBC,
    CatThreshold,
    ShiThreshold,
    Raney,
}

impl Family {
    pub const ALL: [Family; 17] = [
        Family::Braid,
        Family::Boolean,
        Family::TypeC,
        Family::TypeD,
        Family::BraidPlusBoolean,
        Family::Fubini,
        Family::Threshold,
        Family::CatalanA,
        Family::CatC,
        Family::CatCExt,
        Family::CatD,
        Family::Pointed,
        Family::CatB,
        Family::CatBC,
        Family::CatThreshold,
        Family::ShiThreshold,
        Family::Raney,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Braid => "braid",
            Family::Boolean => "boolean",
            Family::TypeC => "type-c",
            Family::TypeD => "type-d",
            Family::BraidPlusBoolean => "braid-plus-boolean",
            Family::Fubini => "fubini",
            Family::Threshold => "threshold",
            Family::CatalanA => "catalan-a",
            Family::CatC => "cat-c",
            Family::CatCExt => "cat-c-ext",
            Family::CatD => "cat-d",
            Family::Pointed => "pointed",
            Family::CatB => "cat-b",
            Family::CatBC => "cat-bc",
            Family::CatThreshold => "cat-threshold",
            Family::ShiThreshold => "shi-threshold",
            Family::Raney => "raney",
        }
    }

    pub fn takes_m(self) -> bool {
        matches!(self, Family::CatCExt | Family::Raney)
    }

    /// Sub-arrangements of the type C reflection arrangement whose regions
    /// are encoded by signed permutations.
    pub fn is_reflection(self) -> bool {
        matches!(
            self,
            Family::Braid
                | Family::Boolean
                | Family::TypeC
                | Family::TypeD
                | Family::BraidPlusBoolean
                | Family::Fubini
                | Family::Threshold
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidFamily(format!("unknown family {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub m: Option<u32>,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec { family, n, m: None }
    }

    pub fn with_m(family: Family, n: usize, m: u32) -> Self {
        FamilySpec { family, n, m: Some(m) }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidFamily("n must be at least 1".into()));
        }
        match (self.family.takes_m(), self.m) {
            (true, None) => Err(Error::InvalidFamily(format!("{} needs m", self.family))),
            (true, Some(0)) => Err(Error::InvalidFamily("m must be at least 1".into())),
            (false, Some(_)) => Err(Error::InvalidFamily(format!("{} takes no m", self.family))),
            _ => Ok(()),
        }
    }
}

/// The affine hyperplane `<normal, x> = offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    pub normal: Vec<Rat>,
    pub offset: Rat,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rat>, offset: Rat) -> Self {
        Hyperplane { normal, offset }
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// `<normal, x> - offset`
    pub fn eval(&self, x: &[Rat]) -> Rat {
        self.normal.iter().zip(x).fold(-self.offset.clone(), |acc, (a, v)| acc + a * v)
    }

    /// Primitive integer form with positive leading normal entry; two
    /// hyperplanes coincide iff their keys are equal.
    pub fn canonical_key(&self) -> (Vec<BigInt>, BigInt) {
        let lcm = lcm_of_denominators(self.normal.iter().chain([&self.offset]));
        let scale = Rat::from_integer(lcm);
        let mut ints: Vec<BigInt> =
            self.normal.iter().chain([&self.offset]).map(|r| (r * &scale).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
        let lead_negative = ints.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative());
        for v in ints.iter_mut() {
            *v = &*v / &g;
            if lead_negative {
                *v = -&*v;
            }
        }
        let offset = ints.pop().unwrap();
        (ints, offset)
    }

    fn is_degenerate(&self) -> bool {
        self.normal.iter().all(|a| a.is_zero())
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, a) in self.normal.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let var = format!("x{}", i + 1);
            let coef = if a.is_one() {
                String::new()
            } else if *a == -Rat::one() {
                "-".into()
            } else {
                fmt_rat(a)
            };
            terms.push(format!("{coef}{var}"));
        }
        write!(f, "{} = {}", terms.join(" + ").replace("+ -", "- "), fmt_rat(&self.offset))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
    family: Option<FamilySpec>,
}

impl Arrangement {
    /// Validates dimensions, nonzero normals and absence of repeated hyperplanes.
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane>, family: Option<FamilySpec>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.dim() != dim {
                return Err(Error::InvalidFamily(format!("hyperplane {i} has wrong dimension")));
            }
            if h.is_degenerate() {
                return Err(Error::InvalidFamily(format!("hyperplane {i} has zero normal")));
            }
            if let Some(j) = seen.insert(h.canonical_key(), i) {
                return Err(Error::InvalidFamily(format!("hyperplanes {j} and {i} coincide")));
            }
        }
        Ok(Arrangement { dim, hyperplanes, family })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn family(&self) -> Option<FamilySpec> {
        self.family
    }

    pub fn is_central(&self) -> bool {
        self.hyperplanes.iter().all(|h| h.offset.is_zero())
    }

    /// Dimension of the span of the normals.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Rat>> = self.hyperplanes.iter().map(|h| h.normal.clone()).collect();
        matrix_rank(rows)
    }

    fn integral_normals(&self) -> Vec<Hyperplane> {
        self.hyperplanes
            .iter()
            .map(|h| {
                let s = Rat::from_integer(lcm_of_denominators(&h.normal));
                Hyperplane::new(h.normal.iter().map(|a| a * &s).collect(), &h.offset * &s)
            })
            .collect()
    }

    /// Factor `lambda` by which [`Self::scale_to_integer`] multiplies offsets.
    pub fn offset_scale(&self) -> BigInt {
        lcm_of_denominators(self.integral_normals().iter().map(|h| &h.offset))
    }

    /// Rescales each equation to integral normals and substitutes
    /// `x = y / lambda` to clear the offsets.
    pub fn scale_to_integer(&self) -> Arrangement {
        let lambda = Rat::from_integer(self.offset_scale());
        let hyperplanes =
            self.integral_normals().into_iter().map(|h| Hyperplane::new(h.normal, h.offset * &lambda)).collect();
        Arrangement { dim: self.dim, hyperplanes, family: self.family }
    }

    /// Position of each hyperplane of `sub` inside `self`, if `sub` is a
    /// sub-arrangement.
    pub fn positions_of(&self, sub: &Arrangement) -> Option<Vec<usize>> {
        if sub.dim != self.dim {
            return None;
        }
        let index: HashMap<_, usize> =
            self.hyperplanes.iter().enumerate().map(|(i, h)| (h.canonical_key(), i)).collect();
        sub.hyperplanes.iter().map(|h| index.get(&h.canonical_key()).copied()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let hyperplanes: Vec<_> = self
            .hyperplanes
            .iter()
            .map(|h| {
                serde_json::json!({
                    "normal": h.normal.iter().map(fmt_rat).collect::<Vec<_>>(),
                    "offset": fmt_rat(&h.offset),
                })
            })
            .collect();
        serde_json::json!({
            "n": self.dim,
            "family": self.family.map(|f| f.family.name()),
            "m": self.family.and_then(|f| f.m),
            "hyperplanes": hyperplanes,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: RawArrangement = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let family = match raw.family {
            Some(name) => Some(FamilySpec { family: name.parse()?, n: raw.n, m: raw.m }),
            None => None,
        };
        let hyperplanes = raw
            .hyperplanes
            .iter()
            .map(|h| {
                Ok(Hyperplane::new(
                    h.normal.iter().map(|s| parse_rat(s)).collect::<Result<_>>()?,
                    parse_rat(&h.offset)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Arrangement::new(raw.n, hyperplanes, family)
    }
}

#[derive(Deserialize)]
struct RawHyperplane {
    normal: Vec<String>,
    offset: String,
}

#[derive(Deserialize)]
struct RawArrangement {
    n: usize,
    family: Option<String>,
    m: Option<u32>,
    hyperplanes: Vec<RawHyperplane>,
}

/// Rank by exact Gaussian elimination.
pub fn matrix_rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in rank + 1..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            let f = &rows[r][c] / &pivot;
            for k in c..cols {
                let d = &f * &rows[rank][k];
                rows[r][k] -= d;
            }
        }
        rank += 1;
    }
    rank
}

struct Builder {
    n: usize,
    out: Vec<Hyperplane>,
    seen: HashMap<(Vec<BigInt>, BigInt), usize>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder { n, out: Vec::new(), seen: HashMap::new() }
    }

    fn push(&mut self, terms: &[(usize, Rat)], offset: Rat) {
        let mut normal = vec![Rat::zero(); self.n];
        for (i, c) in terms {
            normal[*i] += c;
        }
        let h = Hyperplane::new(normal, offset);
        let key = h.canonical_key();
        if !self.seen.contains_key(&key) {
            self.seen.insert(key, self.out.len());
            self.out.push(h);
        }
    }

    /// `c * x_i = v` for each `i`, each `v`.
    fn singles(&mut self, c: i64, values: &[Rat]) {
        for i in 0..self.n {
            for v in values {
                self.push(&[(i, int(c))], v.clone());
            }
        }
    }

    /// `x_i + sign * x_j = v` for each pair `i < j`, each `v`.
    fn pairs(&mut self, sign: i64, values: &[Rat]) {
        for i in 0..self.n {
            for j in i + 1..self.n {
                for v in values {
                    self.push(&[(i, int(1)), (j, int(sign))], v.clone());
                }
            }
        }
    }
}

fn ints(range: impl IntoIterator<Item = i64>) -> Vec<Rat> {
    range.into_iter().map(int).collect()
}

/// Builds the arrangement of a family.
///
/// Hyperplane groups, in order:
/// - braid: `x_i - x_j = 0`
/// - boolean: `x_i = 0`
/// - type-c: `2x_i = 0`, `x_i + x_j = 0`, `x_i - x_j = 0`
/// - type-d: `x_i + x_j = 0`, `x_i - x_j = 0`
/// - braid-plus-boolean: `x_i = 0`, `x_i - x_j = 0`
/// - fubini: `2x_i = 0`, `x_i + x_j = 0`
/// - threshold: `x_i + x_j = 0`
/// - catalan-a: `x_i - x_j = -1, 0, 1`
/// - cat-c: `2x_i = -2, -1, 0`, `x_i + x_j = -2, -1, 0`, `x_i - x_j = -1, 0, 1`
/// - cat-c-ext: `2x_i = -2m..0`, `x_i + x_j = -2m..0`, `x_i - x_j = -m..m`
/// - cat-d: `x_i + x_j = -2, -1, 0`, `x_i - x_j = -1, 0, 1`
/// - pointed: `x_i = -5/2, -3/2, -1, -1/2, 0, 1/2, 3/2`, then as cat-d
/// - cat-b: `x_i = -3/2, -1/2, 1/2`, then as cat-d
/// - cat-bc: `x_i = -3/2, -1, -1/2, 0, 1/2`, then as cat-d
/// - cat-threshold: `x_i + x_j = -2, -1, 0`
/// - shi-threshold: `x_i + x_j = -1, 0`
/// - raney: `x_i = 0`, `x_i = 2^k x_j` for `k = -m..m`
pub fn build(spec: FamilySpec) -> Result<Arrangement> {
    spec.validate()?;
    let n = spec.n;
    let m = spec.m.unwrap_or(1) as i64;
    let mut b = Builder::new(n);
    let zero = [int(0)];
    let pair_sums = ints(-2..=0);
    let pair_diffs = ints(-1..=1);
    match spec.family {
        Family::Braid => b.pairs(-1, &zero),
        Family::Boolean => b.singles(1, &zero),
        Family::TypeC => {
            b.singles(2, &zero);
            b.pairs(1, &zero);
            b.pairs(-1, &zero);
        }
        Family::TypeD => {
            b.pairs(1, &zero);
            b.pairs(-1, &zero);
        }
        Family::BraidPlusBoolean => {
            b.singles(1, &zero);
            b.pairs(-1, &zero);
        }
        Family::Fubini => {
            b.singles(2, &zero);
            b.pairs(1, &zero);
        }
        Family::Threshold => b.pairs(1, &zero),
        Family::CatalanA => b.pairs(-1, &pair_diffs),
        Family::CatC | Family::CatCExt => {
            b.singles(2, &ints(-2 * m..=0));
            b.pairs(1, &ints(-2 * m..=0));
            b.pairs(-1, &ints(-m..=m));
        }
        Family::CatD => {
            b.pairs(1, &pair_sums);
            b.pairs(-1, &pair_diffs);
        }
        Family::Pointed | Family::CatB | Family::CatBC => {
            let singles: Vec<Rat> = match spec.family {
                Family::Pointed => vec![rat(-5, 2), rat(-3, 2), int(-1), rat(-1, 2), int(0), rat(1, 2), rat(3, 2)],
                Family::CatB => vec![rat(-3, 2), rat(-1, 2), rat(1, 2)],
                _ => vec![rat(-3, 2), int(-1), rat(-1, 2), int(0), rat(1, 2)],
            };
            b.singles(1, &singles);
            b.pairs(1, &pair_sums);
            b.pairs(-1, &pair_diffs);
        }
        Family::CatThreshold => b.pairs(1, &pair_sums),
        Family::ShiThreshold => b.pairs(1, &ints(-1..=0)),
        Family::Raney => {
            b.singles(1, &zero);
            for i in 0..n {
                for j in i + 1..n {
                    for k in -m..=m {
                        let p = Rat::from_integer(BigInt::from(2).pow(k.unsigned_abs() as u32));
                        let f = if k >= 0 { p } else { p.recip() };
                        b.push(&[(i, int(1)), (j, -f)], int(0));
                    }
                }
            }
        }
    }
    Arrangement::new(n, b.out, Some(spec))
}
