//! Four-way region count check: closed form, characteristic polynomial,
//! exact enumeration, and the combinatorial encoding (move classes or a
//! direct bijection with sketches).

use crate::arrangement::{build, Family, FamilySpec};
use crate::charpoly::{bounded_from_chi, char_poly, regions_from_chi};
use crate::formulas;
use crate::movelab::{classes, universe, MoveSystem};
use crate::regionlab::{count_bounded, enumerate_regions};
use crate::sketch::{enumerate_m_sketches, enumerate_sketches_of_kind, SketchKind};
use crate::Result;
use num_bigint::BigInt;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub family: Family,
    pub n: usize,
    pub m: Option<u32>,
    pub regions: u64,
    pub formula: Option<u64>,
    pub chi_minus1: u64,
    pub classes: Option<u64>,
    pub bounded: u64,
    pub bounded_formula: Option<u64>,
    pub chi_one: u64,
    pub pass: bool,
}

fn small(b: BigInt) -> u64 {
    u64::try_from(b).expect("count fits in u64")
}

/// Number of region objects in the combinatorial model, if the family has one.
pub fn combinatorial_count(spec: FamilySpec) -> Result<Option<u64>> {
    spec.validate()?;
    let n = spec.n;
    let count = match spec.family {
        Family::TypeC => enumerate_sketches_of_kind(SketchKind::Reflection, n).len(),
        Family::CatC => enumerate_sketches_of_kind(SketchKind::Catalan { m: 1 }, n).len(),
        Family::CatCExt => enumerate_m_sketches(n, spec.m.unwrap_or(1)).len(),
        Family::Pointed => enumerate_sketches_of_kind(SketchKind::Pointed, n).len(),
        f => match MoveSystem::for_family(f) {
            Some(sys) => classes(sys, &universe(sys, n))?.len(),
            None => return Ok(None),
        },
    };
    Ok(Some(count as u64))
}

pub fn verify(spec: FamilySpec) -> Result<VerifySummary> {
    spec.validate()?;
    let a = build(spec)?;
    let chi = char_poly(&a)?;
    let regions = enumerate_regions(&a);
    let bounded = count_bounded(&a, &regions) as u64;
    let regions = regions.len() as u64;
    let formula = formulas::regions(spec).map(small);
    let bounded_formula = formulas::bounded(spec).map(small);
    let chi_minus1 = small(regions_from_chi(&chi));
    let chi_one = small(bounded_from_chi(&chi, a.rank()));
    let classes = combinatorial_count(spec)?;
    let pass = formula.is_none_or(|f| f == regions)
        && chi_minus1 == regions
        && classes.is_none_or(|c| c == regions)
        && bounded_formula.is_none_or(|b| b == bounded)
        && chi_one == bounded;
    Ok(VerifySummary {
        family: spec.family,
        n: spec.n,
        m: spec.m,
        regions,
        formula,
        chi_minus1,
        classes,
        bounded,
        bounded_formula,
        chi_one,
        pass,
    })
}

/// Small instances of every family, cheap enough to run on every invocation.
pub fn seed_rows() -> Vec<FamilySpec> {
    let mut rows = Vec::new();
    for f in Family::ALL {
        match f {
            Family::Raney => {
                rows.push(FamilySpec::with_m(f, 1, 1));
                rows.push(FamilySpec::with_m(f, 2, 1));
                rows.push(FamilySpec::with_m(f, 2, 2));
            }
            Family::CatCExt => {
                rows.push(FamilySpec::with_m(f, 1, 2));
                rows.push(FamilySpec::with_m(f, 2, 2));
            }
            _ => {
                rows.push(FamilySpec::new(f, 1));
                rows.push(FamilySpec::new(f, 2));
            }
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cat_d_two() {
        let s = verify(FamilySpec::new(Family::CatD, 2)).unwrap();
        assert_eq!((s.regions, s.formula, s.chi_minus1, s.classes, s.pass), (16, Some(16), 16, Some(16), true));
        assert_eq!((s.bounded, s.bounded_formula, s.chi_one), (4, Some(4), 4));
    }

    #[test]
    fn seed_rows_pass() {
        for spec in seed_rows() {
            let s = verify(spec).unwrap();
            assert!(s.pass, "{s:?}");
        }
    }

    #[test]
    fn raney_has_no_classes() {
        let s = verify(FamilySpec::with_m(Family::Raney, 2, 2)).unwrap();
        assert_eq!((s.regions, s.classes), (14, None));
    }
}
