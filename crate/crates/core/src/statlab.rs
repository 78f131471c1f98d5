//! Compartment statistics whose distributions reproduce the coefficients of
//! characteristic polynomials, and the generating-function identities behind them.

use crate::arrangement::{build, Family, FamilySpec};
use crate::charpoly::{char_poly, regions_from_chi};
use crate::error::{Error, Result};
use crate::exactnum::{binomial, factorial, int, PolySeries, Rat, RatPoly};
use crate::formulas;
use crate::movelab::{is_canonical, MoveSystem};
use crate::regionlab::{count_bounded, enumerate_regions};
use crate::sketch::{
    decompose_nnp, enumerate_m_sketches, enumerate_sketches_of_kind, positive_compartments, signed_perms,
    to_arc_diagram, ArcDiagram, SignedPerm, Sketch, SketchKind,
};
use num_bigint::BigInt;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompartmentSplit {
    pub compartments: Vec<Vec<i32>>,
    pub positive: Vec<bool>,
}

impl CompartmentSplit {
    pub fn positive_count(&self) -> usize {
        self.positive.iter().filter(|&&p| p).count()
    }
}

/// Cuts after the entry of least absolute value in what remains, repeatedly.
pub fn compartments(p: &SignedPerm) -> CompartmentSplit {
    let v = &p.0;
    let mut out = CompartmentSplit { compartments: Vec::new(), positive: Vec::new() };
    let mut start = 0;
    while start < v.len() {
        let end = (start..v.len()).min_by_key(|&k| v[k].unsigned_abs()).unwrap_or(start);
        out.compartments.push(v[start..=end].to_vec());
        out.positive.push(v[end] > 0);
        start = end + 1;
    }
    out
}

/// Positive compartments of the unbounded part of a symmetric diagram.
pub fn nnp_positive_compartments(d: &ArcDiagram) -> usize {
    positive_compartments(&decompose_nnp(d).1)
}

/// Object counts indexed by the statistic value `j = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Distribution {
    pub counts: Vec<u64>,
}

impl Distribution {
    fn from_values(n: usize, values: impl IntoIterator<Item = usize>) -> Self {
        let mut counts = vec![0; n + 1];
        for j in values {
            counts[j] += 1;
        }
        Distribution { counts }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Index of the largest count (first one on ties).
    pub fn peak(&self) -> usize {
        let max = self.counts.iter().max().copied().unwrap_or(0);
        self.counts.iter().position(|&c| c == max).unwrap_or(0)
    }

    pub fn as_bigints(&self) -> Vec<BigInt> {
        self.counts.iter().map(|&c| BigInt::from(c)).collect()
    }
}

/// Statistic of one region object of the family.
pub fn statistic(family: Family, sk: &Sketch) -> Result<usize> {
    match sk.kind {
        SketchKind::Reflection => {
            let mut p = sk.second_half_perm();
            if family == Family::Threshold && p.0.first() == Some(&-1) {
                p.0[0] = 1;
            }
            let split = compartments(&p);
            Ok(if family == Family::Braid { split.compartments.len() } else { split.positive_count() })
        }
        _ => Ok(nnp_positive_compartments(&to_arc_diagram(sk)?)),
    }
}

/// The region objects of a family: all sketches of the ambient kind, or the
/// canonical ones for a sub-arrangement.
pub fn region_objects(spec: FamilySpec) -> Result<Vec<Sketch>> {
    spec.validate()?;
    let n = spec.n;
    Ok(match spec.family {
        Family::TypeC => enumerate_sketches_of_kind(SketchKind::Reflection, n),
        Family::CatC => enumerate_sketches_of_kind(SketchKind::Catalan { m: 1 }, n),
        Family::CatCExt => enumerate_m_sketches(n, spec.m.unwrap_or(1)),
        Family::Pointed => enumerate_sketches_of_kind(SketchKind::Pointed, n),
        Family::Boolean
        | Family::TypeD
        | Family::Braid
        | Family::Fubini
        | Family::Threshold
        | Family::CatD
        | Family::CatB
        | Family::CatBC => {
            let sys = MoveSystem::for_family(spec.family).expect("family has a move system");
            enumerate_sketches_of_kind(sys.kind(), n).into_iter().filter(|s| is_canonical(sys, s)).collect()
        }
        f => return Err(Error::Unsupported(format!("no compartment statistic for {f}"))),
    })
}

pub fn distribution(spec: FamilySpec) -> Result<Distribution> {
    let objects = region_objects(spec)?;
    let values = objects.iter().map(|s| statistic(spec.family, s)).collect::<Result<Vec<usize>>>()?;
    Ok(Distribution::from_values(spec.n, values))
}

#[derive(Clone, Debug, Serialize)]
pub struct GesaOrder {
    pub n: usize,
    pub predicted: String,
    pub chi: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GesaReport {
    pub family: Family,
    pub m: Option<u32>,
    pub orders: Vec<GesaOrder>,
    /// `F(-x) = G(-x) * S(x)` for the Catalan families, `None` elsewhere.
    pub breakup: Option<bool>,
    pub pass: bool,
}

fn spec_of(family: Family, n: usize, m: Option<u32>) -> FamilySpec {
    FamilySpec { family, n, m }
}

/// Fuss-Catalan factor `2^n n! / (mn + 1) * binom((m+1)n, n)`, as exponential coefficients.
fn nnp_series(order: usize, m: u32) -> PolySeries {
    let m = m as u64;
    let c: Vec<Rat> = (0..=order as u64)
        .map(|n| {
            let top = Rat::from_integer((BigInt::from(1) << n) * factorial(n) * binomial((m + 1) * n, n));
            top / int((m * n + 1) as i64)
        })
        .collect();
    PolySeries::from_constants(order, &c)
}

/// Feeds enumerated region and bounded-region counts into `F` and `G` and
/// compares `G^((t+1)/2) / F^((t-1)/2)` with the characteristic polynomials.
pub fn gesa_check(family: Family, m: Option<u32>, order: usize) -> Result<GesaReport> {
    let mut f = vec![int(1)];
    let mut g = vec![int(1)];
    let mut chis = vec![RatPoly::constant(int(1))];
    for n in 1..=order {
        let a = build(spec_of(family, n, m))?;
        let regions = enumerate_regions(&a);
        let sign = |k: usize| if k.is_multiple_of(2) { 1 } else { -1 };
        f.push(int(sign(n) * regions.len() as i64));
        g.push(int(sign(a.rank()) * count_bounded(&a, &regions) as i64));
        chis.push(char_poly(&a)?.poly.to_rat_poly());
    }
    let fs = PolySeries::from_constants(order, &f);
    let gs = PolySeries::from_constants(order, &g);
    let half = Rat::new(1.into(), 2.into());
    let up = RatPoly::new(vec![half.clone(), half.clone()]);
    let down = RatPoly::new(vec![-half.clone(), half]);
    let rhs = gs.log()?.scale(&up).add(&fs.log()?.scale(&(-&down))).exp()?;
    let orders: Vec<GesaOrder> = (0..=order)
        .map(|n| GesaOrder {
            n,
            predicted: rhs.coeff(n).to_int_poly().map_or_else(|_| rhs.coeff(n).to_string(), |p| p.to_string()),
            chi: chis[n].to_int_poly().map_or_else(|_| chis[n].to_string(), |p| p.to_string()),
            pass: rhs.coeff(n) == &chis[n],
        })
        .collect();
    let breakup = matches!(
        family,
        Family::CatC | Family::CatCExt | Family::CatD | Family::Pointed | Family::CatB | Family::CatBC
    )
    .then(|| fs.negate_x() == gs.negate_x().mul(&nnp_series(order, m.unwrap_or(1))));
    let pass = orders.iter().all(|o| o.pass) && breakup != Some(false);
    Ok(GesaReport { family, m, orders, breakup, pass })
}

/// Labeled non-nesting partitions of size `n` with signed labels.
pub fn signed_nnp_count(n: usize) -> BigInt {
    let n = n as u64;
    (BigInt::from(1) << n) * factorial(n) * binomial(2 * n, n) / (n + 1)
}

#[derive(Clone, Debug, Serialize)]
pub struct DCorrection {
    pub n: usize,
    pub excluded: u64,
    pub excluded_formula: String,
    pub regions: u64,
    pub assembled: String,
    pub pass: bool,
}

/// Symmetric sketches whose bounded part is empty and whose first unbounded
/// piece is a single negatively labeled block, against `n * s_{n-1}`, and the
/// assembly `r(D_n) = sum_{k != 1} binom(n,k) b(D_k) s_{n-k} - n s_{n-1}`.
pub fn d_correction_check(n: usize) -> Result<DCorrection> {
    let mut excluded = 0u64;
    for sk in enumerate_sketches_of_kind(SketchKind::Catalan { m: 1 }, n) {
        let (bounded, unbounded) = decompose_nnp(&to_arc_diagram(&sk)?);
        if bounded.len != 0 {
            continue;
        }
        if let Some(&(lo, hi)) = unbounded.pieces().first() {
            let blocks: Vec<_> = unbounded.slice(lo, hi).blocks;
            if blocks.len() == 1 && blocks[0].label.is_some_and(|l| l < 0) {
                excluded += 1;
            }
        }
    }
    let s = signed_nnp_count;
    let e = BigInt::from(n) * s(n - 1);
    let mut total = -e.clone();
    for k in (0..=n).filter(|&k| k != 1) {
        let b = if k == 0 {
            BigInt::from(1)
        } else {
            let a = build(FamilySpec::new(Family::CatD, k))?;
            BigInt::from(count_bounded(&a, &enumerate_regions(&a)))
        };
        total += binomial(n as u64, k as u64) * b * s(n - k);
    }
    let regions = enumerate_regions(&build(FamilySpec::new(Family::CatD, n))?).len() as u64;
    Ok(DCorrection {
        n,
        excluded,
        excluded_formula: e.to_string(),
        regions,
        assembled: total.to_string(),
        pass: BigInt::from(excluded) == e && BigInt::from(regions) == total,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct InequalityReport {
    /// `table[m-1][n-1][j]`
    pub table: Vec<Vec<Vec<u64>>>,
    pub violations: Vec<String>,
    pub pass: bool,
}

/// Positive-compartment counts of symmetric m-sketches, and the three
/// coefficient inequalities between them.
pub fn cmnj_inequalities(m_max: u32, n_max: usize) -> Result<InequalityReport> {
    let mut table = Vec::new();
    let mut violations = Vec::new();
    for m in 1..=m_max {
        let rows: Vec<Vec<u64>> = (1..=n_max)
            .map(|n| distribution(spec_of(Family::CatCExt, n, Some(m))).map(|d| d.counts))
            .collect::<Result<_>>()?;
        let c = |n: usize, j: usize| rows.get(n - 1).and_then(|r| r.get(j)).copied().unwrap_or(0);
        for n in 1..=n_max {
            for j in 0..=n + 1 {
                if n < n_max {
                    if c(n, j) > c(n + 1, j) {
                        violations.push(format!("C({m},{n},{j}) > C({m},{},{j})", n + 1));
                    }
                    if c(n, j) > c(n + 1, j + 1) {
                        violations.push(format!("C({m},{n},{j}) > C({m},{},{})", n + 1, j + 1));
                    }
                }
                let rhs: BigInt = (j + 1..=n).map(|k| binomial(k as u64, j as u64) * c(n, k)).sum();
                if BigInt::from(c(n, j)) < rhs {
                    violations.push(format!("C({m},{n},{j}) < {rhs}"));
                }
            }
        }
        table.push(rows);
    }
    let pass = violations.is_empty();
    Ok(InequalityReport { table, violations, pass })
}

#[derive(Clone, Debug, Serialize)]
pub struct RaneyReport {
    pub n: usize,
    pub m: u32,
    pub formula: String,
    pub enumerated: usize,
    pub from_chi: String,
    pub pass: bool,
}

pub fn raney_check(n: usize, m: u32) -> Result<RaneyReport> {
    let spec = FamilySpec::with_m(Family::Raney, n, m);
    let a = build(spec)?;
    let formula = formulas::regions(spec).unwrap_or_default();
    let enumerated = enumerate_regions(&a).len();
    let from_chi = regions_from_chi(&char_poly(&a)?);
    let pass = BigInt::from(enumerated) == formula && from_chi == formula;
    Ok(RaneyReport { n, m, formula: formula.to_string(), enumerated, from_chi: from_chi.to_string(), pass })
}

/// Signed permutations of `[n]` by number of compartments.
pub fn compartment_distribution(n: usize) -> Distribution {
    Distribution::from_values(n, signed_perms(n).iter().map(|p| compartments(p).compartments.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn seven_entry_compartment_split() {
        let s = compartments(&SignedPerm(vec![3, 1, -6, -7, -5, 2, -4]));
        assert_eq!(s.compartments, vec![vec![3, 1], vec![-6, -7, -5, 2], vec![-4]]);
        assert_eq!(s.positive_count(), 2);
    }

    #[test]
    fn trivial_splits() {
        let id = compartments(&SignedPerm(vec![1, 2, 3, 4]));
        assert_eq!((id.compartments.len(), id.positive_count()), (4, 4));
        let neg = compartments(&SignedPerm(vec![-1]));
        assert_eq!((neg.compartments.len(), neg.positive_count()), (1, 0));
    }

    fn matches_chi(spec: FamilySpec) {
        let d = distribution(spec).unwrap();
        let chi = char_poly(&build(spec).unwrap()).unwrap();
        assert_eq!(d.as_bigints(), chi.abs_coeffs(), "{spec:?}");
    }

    #[test]
    fn small_distributions() {
        assert_eq!(distribution(FamilySpec::new(Family::Braid, 3)).unwrap().counts, vec![0, 2, 3, 1]);
        assert_eq!(distribution(FamilySpec::new(Family::TypeC, 2)).unwrap().counts, vec![3, 4, 1]);
    }

    #[test]
    fn reflection_distributions_match_chi() {
        for f in [Family::TypeC, Family::Boolean, Family::TypeD, Family::Braid, Family::Fubini, Family::Threshold] {
            for n in 1..=4 {
                matches_chi(FamilySpec::new(f, n));
            }
        }
    }

    #[test]
    fn catalan_distributions_match_chi() {
        for f in [Family::CatC, Family::CatD, Family::Pointed, Family::CatB, Family::CatBC] {
            for n in 1..=2 {
                matches_chi(FamilySpec::new(f, n));
            }
        }
        matches_chi(FamilySpec::with_m(Family::CatCExt, 2, 2));
        matches_chi(FamilySpec::new(Family::CatC, 3));
    }

    #[test]
    fn unsupported_distribution() {
        assert!(distribution(FamilySpec::new(Family::CatThreshold, 2)).is_err());
    }

    #[test]
    fn gesa_identities() {
        for (f, m, order) in [
            (Family::TypeC, None, 3),
            (Family::Braid, None, 3),
            (Family::TypeD, None, 3),
            (Family::CatC, None, 2),
            (Family::CatD, None, 2),
            (Family::CatCExt, Some(2), 2),
            (Family::Threshold, None, 3),
        ] {
            let r = gesa_check(f, m, order).unwrap();
            assert!(r.pass, "{f}: {:?}", r);
        }
        let r = gesa_check(Family::TypeC, None, 2).unwrap();
        assert_eq!(r.orders[2].chi, "t^2 - 4t + 3");
    }

    #[test]
    fn d_correction() {
        for n in 1..=3 {
            let r = d_correction_check(n).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn inequalities() {
        let r = cmnj_inequalities(2, 3).unwrap();
        assert!(r.pass, "{:?}", r.violations);
        assert_eq!(r.table[0][0], vec![3, 1]);
    }

    #[test]
    fn raney_counts() {
        assert_eq!(raney_check(2, 1).unwrap().enumerated, 10);
        assert_eq!(raney_check(2, 2).unwrap().enumerated, 14);
        assert_eq!(raney_check(1, 3).unwrap().enumerated, 2);
        assert!(raney_check(3, 1).unwrap().pass);
    }

    #[test]
    fn compartments_exponential_structure() {
        let order = 5;
        let signed: Vec<Rat> = (0..=order).map(|k| int((1i64 << k) * (1..=k as i64).product::<i64>())).collect();
        let h = PolySeries::from_constants(order, &signed);
        let egf = h.pow_poly(&RatPoly::t()).unwrap();
        for n in 0..=order {
            let counts = compartment_distribution(n).counts;
            let c = egf.coeff(n);
            for (j, &k) in counts.iter().enumerate() {
                assert_eq!(c.coeff(j), int(k as i64), "n={n} j={j}");
            }
        }
    }

    proptest! {
        #[test]
        fn split_concatenates(n in 1usize..7, seed in any::<u64>()) {
            let all = signed_perms(n);
            let p = &all[(seed % all.len() as u64) as usize];
            let s = compartments(p);
            let flat: Vec<i32> = s.compartments.concat();
            prop_assert_eq!(&flat, &p.0);
            for c in &s.compartments {
                let again = compartments(&SignedPerm(c.clone()));
                prop_assert_eq!(again.compartments.len(), 1);
            }
        }
    }
}
