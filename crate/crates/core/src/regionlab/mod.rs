//! Ground-truth geometry: strict feasibility of sign vectors by exact LP,
//! incremental region enumeration, relative boundedness and the region
//! adjacency graph.

pub mod simplex;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exactnum::Rat;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use simplex::{maximize, Cmp, Constraint};
use std::collections::{HashMap, VecDeque};
use std::fmt;

pub use simplex::{LpResult, LpStatus};

/// One sign per hyperplane (`true` for `+`), in the arrangement's order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(pub Vec<bool>);

impl SignVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn restrict(&self, positions: &[usize]) -> SignVector {
        SignVector(positions.iter().map(|&i| self.0[i]).collect())
    }

    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(true),
                '-' => Ok(false),
                _ => Err(Error::Parse(format!("bad sign {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignVector)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            f.write_str(if s { "+" } else { "-" })?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub signs: SignVector,
    pub witness: Vec<Rat>,
}

/// A strict inequality `<normal, x> > offset`.
#[derive(Clone, Debug)]
pub struct Strict {
    pub normal: Vec<Rat>,
    pub offset: Rat,
}

impl Strict {
    pub fn new(normal: Vec<Rat>, offset: Rat) -> Self {
        Strict { normal, offset }
    }
}

/// Finds a point satisfying every strict inequality, or `None`.
///
/// Maximizes `eps` subject to `<a_i, x> - b_i >= eps` and `eps <= 1`, starting
/// from `x = 0`; stops at the first basic point with `eps > 0`.
pub fn strict_feasible(dim: usize, rows: &[Strict]) -> Option<Vec<Rat>> {
    // eps0 is attained at x = 0; optimize delta = eps - eps0 >= 0.
    let eps0 = rows.iter().map(|r| -r.offset.clone()).fold(Rat::one(), |a, b| if b < a { b } else { a });
    if eps0.is_positive() {
        return Some(vec![Rat::zero(); dim]);
    }
    let nvars = 2 * dim + 1;
    let mut cons: Vec<Constraint> = rows
        .iter()
        .map(|r| {
            let mut c = vec![Rat::zero(); nvars];
            for (j, a) in r.normal.iter().enumerate() {
                if !a.is_zero() {
                    c[j] = -a.clone();
                    c[dim + j] = a.clone();
                }
            }
            c[2 * dim] = Rat::one();
            Constraint::new(c, Cmp::Le, -&r.offset - &eps0)
        })
        .collect();
    let mut cap = vec![Rat::zero(); nvars];
    cap[2 * dim] = Rat::one();
    cons.push(Constraint::new(cap, Cmp::Le, Rat::one() - &eps0));
    let mut obj = vec![Rat::zero(); nvars];
    obj[2 * dim] = Rat::one();
    let threshold = -eps0.clone();
    let stop = move |v: &Rat| *v > threshold;
    let res = maximize(&obj, &cons, Some(&stop));
    let delta = res.optimum?;
    if !(delta + eps0).is_positive() {
        return None;
    }
    let y = res.witness?;
    Some((0..dim).map(|j| &y[j] - &y[dim + j]).collect())
}

fn oriented(a: &Arrangement, i: usize, positive: bool) -> Strict {
    let h = &a.hyperplanes()[i];
    if positive {
        Strict::new(h.normal.clone(), h.offset.clone())
    } else {
        Strict::new(h.normal.iter().map(|v| -v).collect(), -h.offset.clone())
    }
}

fn rows_for(a: &Arrangement, s: &[bool]) -> Vec<Strict> {
    s.iter().enumerate().map(|(i, &p)| oriented(a, i, p)).collect()
}

/// A witness point of the open region `s`, if it is nonempty.
pub fn feasible(a: &Arrangement, s: &SignVector) -> Option<Vec<Rat>> {
    assert_eq!(s.len(), a.len(), "sign vector length");
    strict_feasible(a.dim(), &rows_for(a, &s.0))
}

/// Sign vector of a point lying on no hyperplane.
pub fn classify(a: &Arrangement, x: &[Rat]) -> Result<SignVector> {
    a.hyperplanes()
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let v = h.eval(x);
            if v.is_zero() {
                Err(Error::OnHyperplane(i))
            } else {
                Ok(v.is_positive())
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(SignVector)
}

/// All regions with witnesses, sorted by sign vector. Hyperplanes are
/// inserted in order; a region is split when the far side of the new
/// hyperplane (relative to its witness) is still feasible.
pub fn enumerate_regions(a: &Arrangement) -> Vec<Region> {
    let mut regions: Vec<(Vec<bool>, Vec<Rat>)> = vec![(vec![], vec![Rat::zero(); a.dim()])];
    for k in 0..a.len() {
        let h = &a.hyperplanes()[k];
        regions = regions
            .into_par_iter()
            .flat_map_iter(|(signs, w)| {
                let v = h.eval(&w);
                let mut out = Vec::with_capacity(2);
                let mut rows = rows_for(a, &signs);
                for side in [true, false] {
                    let known = if side { v.is_positive() } else { v.is_negative() };
                    let mut s = signs.clone();
                    s.push(side);
                    if known {
                        out.push((s, w.clone()));
                    } else {
                        rows.push(oriented(a, k, side));
                        if let Some(x) = strict_feasible(a.dim(), &rows) {
                            out.push((s, x));
                        }
                        rows.pop();
                    }
                }
                out
            })
            .collect();
    }
    let mut out: Vec<Region> = regions.into_iter().map(|(s, w)| Region { signs: SignVector(s), witness: w }).collect();
    out.sort_by(|x, y| x.signs.cmp(&y.signs));
    out
}

/// True iff the closed region meets the span of the normals in a bounded set,
/// i.e. no nonzero direction `d` has `s_i <a_i, d> >= 0` for all `i` while
/// some `<a_i, d>` is nonzero.
pub fn is_bounded_region(a: &Arrangement, s: &SignVector) -> Result<bool> {
    if feasible(a, s).is_none() {
        return Err(Error::NotARegion);
    }
    Ok(bounded_given_feasible(a, s))
}

fn bounded_given_feasible(a: &Arrangement, s: &SignVector) -> bool {
    let dim = a.dim();
    if a.rank() == 0 {
        return true;
    }
    let nvars = 2 * dim;
    let mut cons = Vec::with_capacity(2 * a.len());
    let mut obj = vec![Rat::zero(); nvars];
    for (i, h) in a.hyperplanes().iter().enumerate() {
        let sign = if s.0[i] { Rat::one() } else { -Rat::one() };
        let mut c = vec![Rat::zero(); nvars];
        for (j, v) in h.normal.iter().enumerate() {
            let sv = v * &sign;
            c[dim + j] = -sv.clone();
            c[j] = sv;
        }
        for (o, v) in obj.iter_mut().zip(&c) {
            *o += v;
        }
        cons.push(Constraint::new(c.iter().map(|v| -v).collect(), Cmp::Le, Rat::zero()));
        cons.push(Constraint::new(c, Cmp::Le, Rat::one()));
    }
    let stop = |v: &Rat| v.is_positive();
    let res = maximize(&obj, &cons, Some(&stop));
    res.optimum.is_some_and(|v| v.is_zero())
}

/// Number of bounded regions among the given (feasible) regions.
pub fn count_bounded(a: &Arrangement, regions: &[Region]) -> usize {
    regions.par_iter().filter(|r| bounded_given_feasible(a, &r.signs)).count()
}

/// Regions joined when their sign vectors differ in exactly one position.
#[derive(Clone, Debug)]
pub struct RegionGraph {
    pub vertices: Vec<SignVector>,
    pub edges: Vec<(usize, usize)>,
}

impl RegionGraph {
    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

pub fn region_graph(a: &Arrangement) -> RegionGraph {
    graph_of(enumerate_regions(a).into_iter().map(|r| r.signs).collect())
}

pub fn graph_of(vertices: Vec<SignVector>) -> RegionGraph {
    let index: HashMap<&SignVector, usize> = vertices.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut edges = Vec::new();
    for (u, s) in vertices.iter().enumerate() {
        for k in 0..s.len() {
            let mut t = s.clone();
            t.0[k] = !t.0[k];
            if let Some(&v) = index.get(&t) {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
    }
    RegionGraph { vertices, edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{build, Family, FamilySpec};
    use crate::exactnum::{int, rat};

    fn arr(f: Family, n: usize) -> Arrangement {
        build(FamilySpec::new(f, n)).unwrap()
    }

    #[test]
    fn braid_two_half_plane() {
        let a = arr(Family::Braid, 2);
        let w = feasible(&a, &SignVector(vec![true])).unwrap();
        assert!(&w[0] - &w[1] > int(0));
    }

    #[test]
    fn contradictory_strip() {
        let a = arr(Family::CatC, 1);
        // hyperplanes 2x = -2, -1, 0: ask 2x > 0 and 2x < -2
        let s = SignVector(vec![false, true, true]);
        assert!(feasible(&a, &s).is_none());
    }

    #[test]
    fn threshold_all_positive() {
        let a = arr(Family::Threshold, 3);
        let s = SignVector(vec![true; 3]);
        let w = feasible(&a, &s).unwrap();
        assert_eq!(classify(&a, &w).unwrap(), s);
    }

    #[test]
    fn region_counts() {
        assert_eq!(enumerate_regions(&arr(Family::Braid, 3)).len(), 6);
        assert_eq!(enumerate_regions(&arr(Family::CatD, 2)).len(), 16);
        assert_eq!(enumerate_regions(&arr(Family::Threshold, 3)).len(), 8);
    }

    #[test]
    fn witnesses_classify_back() {
        let a = arr(Family::CatB, 2);
        for r in enumerate_regions(&a) {
            assert_eq!(classify(&a, &r.witness).unwrap(), r.signs);
        }
    }

    #[test]
    fn bounded_on_a_line() {
        let a = arr(Family::CatC, 1);
        let regions = enumerate_regions(&a);
        assert_eq!(regions.len(), 4);
        assert_eq!(count_bounded(&a, &regions), 2);
        let strip = classify(&a, &[rat(-3, 4)]).unwrap();
        assert!(is_bounded_region(&a, &strip).unwrap());
        let ray = classify(&a, &[int(-5)]).unwrap();
        assert!(!is_bounded_region(&a, &ray).unwrap());
        let p = arr(Family::Pointed, 1);
        assert_eq!(count_bounded(&p, &enumerate_regions(&p)), 6);
    }

    #[test]
    fn central_regions_unbounded() {
        let a = arr(Family::TypeC, 2);
        let regions = enumerate_regions(&a);
        assert_eq!(regions.len(), 8);
        assert_eq!(count_bounded(&a, &regions), 0);
        let b = arr(Family::Braid, 2);
        assert_eq!(count_bounded(&b, &enumerate_regions(&b)), 0);
    }

    #[test]
    fn not_a_region() {
        let a = arr(Family::CatC, 1);
        let e = is_bounded_region(&a, &SignVector(vec![false, true, true])).unwrap_err();
        assert_eq!(e, Error::NotARegion);
    }

    #[test]
    fn graphs() {
        let g = region_graph(&arr(Family::Braid, 2));
        assert_eq!((g.vertices.len(), g.edges.len()), (2, 1));
        let g = region_graph(&arr(Family::Boolean, 2));
        assert_eq!((g.vertices.len(), g.edges.len()), (4, 4));
        assert!(g.is_connected());
        let g = region_graph(&arr(Family::CatC, 1));
        assert_eq!((g.vertices.len(), g.edges.len()), (4, 3));
        assert!(g.is_connected());
    }

    #[test]
    fn empty_arrangement() {
        let a = arr(Family::TypeD, 1);
        let r = enumerate_regions(&a);
        assert_eq!(r.len(), 1);
        assert!(is_bounded_region(&a, &r[0].signs).unwrap());
    }
}
