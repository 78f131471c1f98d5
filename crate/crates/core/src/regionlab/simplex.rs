//! Dense tableau simplex over exact rationals with Bland's rule.
//! Variables are nonnegative; rows may be `<=`, `>=` or `=`.

use crate::exactnum::Rat;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub cmp: Cmp,
    pub rhs: Rat,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rat>, cmp: Cmp, rhs: Rat) -> Self {
        Constraint { coeffs, cmp, rhs }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpResult {
    pub status: LpStatus,
    pub optimum: Option<Rat>,
    pub witness: Option<Vec<Rat>>,
}

impl LpResult {
    fn without(status: LpStatus) -> Self {
        LpResult { status, optimum: None, witness: None }
    }
}

struct Tableau {
    rows: Vec<Vec<Rat>>,
    obj: Vec<Rat>,
    basis: Vec<usize>,
    /// Columns allowed to enter the basis.
    enterable: usize,
}

enum Outcome {
    Done,
    Unbounded,
    Stopped,
}

impl Tableau {
    fn width(&self) -> usize {
        self.obj.len() - 1
    }

    fn value(&self) -> &Rat {
        self.obj.last().unwrap()
    }

    fn pivot(&mut self, p: usize, e: usize) {
        let w = self.width();
        let inv = self.rows[p][e].recip();
        if !inv.is_one() {
            for v in self.rows[p].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
        }
        let nz: Vec<usize> = (0..=w).filter(|&k| !self.rows[p][k].is_zero()).collect();
        let prow = std::mem::take(&mut self.rows[p]);
        for (r, row) in self.rows.iter_mut().enumerate() {
            if r == p || row[e].is_zero() {
                continue;
            }
            let f = row[e].clone();
            for &k in &nz {
                row[k] -= &f * &prow[k];
            }
        }
        if !self.obj[e].is_zero() {
            let f = self.obj[e].clone();
            for &k in &nz {
                self.obj[k] -= &f * &prow[k];
            }
        }
        self.rows[p] = prow;
        self.basis[p] = e;
    }

    /// Runs Bland pivots until optimal; `stop` is checked after each pivot.
    fn run(&mut self, stop: &dyn Fn(&Rat) -> bool) -> Outcome {
        let w = self.width();
        loop {
            if stop(self.value()) {
                return Outcome::Stopped;
            }
            let Some(e) = (0..self.enterable).find(|&j| self.obj[j].is_negative()) else {
                return Outcome::Done;
            };
            let mut best: Option<(usize, Rat)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if !row[e].is_positive() {
                    continue;
                }
                let ratio = &row[w] / &row[e];
                let better = match &best {
                    None => true,
                    Some((b, br)) => ratio < *br || (ratio == *br && self.basis[r] < self.basis[*b]),
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                Some((p, _)) => self.pivot(p, e),
                None => return Outcome::Unbounded,
            }
        }
    }

    fn solution(&self, nvars: usize) -> Vec<Rat> {
        let w = self.width();
        let mut x = vec![Rat::zero(); nvars];
        for (r, &b) in self.basis.iter().enumerate() {
            if b < nvars {
                x[b] = self.rows[r][w].clone();
            }
        }
        x
    }

    fn set_objective(&mut self, c: &[Rat]) {
        let w = self.width();
        let mut obj = vec![Rat::zero(); w + 1];
        for (j, cj) in c.iter().enumerate() {
            obj[j] = -cj.clone();
        }
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = c.get(b).cloned().unwrap_or_else(Rat::zero);
            if cb.is_zero() {
                continue;
            }
            for k in 0..=w {
                if !self.rows[r][k].is_zero() {
                    obj[k] += &cb * &self.rows[r][k];
                }
            }
        }
        self.obj = obj;
    }
}

/// Maximizes `c . x` over `x >= 0` subject to the constraints. With `stop`,
/// returns the first basic feasible point whose objective satisfies it
/// (reported as optimal at that value).
pub fn maximize(c: &[Rat], constraints: &[Constraint], stop: Option<&dyn Fn(&Rat) -> bool>) -> LpResult {
    let nvars = c.len();
    let never = |_: &Rat| false;
    let stop: &dyn Fn(&Rat) -> bool = stop.unwrap_or(&never);

    // Normalize to nonnegative right-hand sides.
    let rows: Vec<(Vec<Rat>, Cmp, Rat)> = constraints
        .iter()
        .map(|k| {
            if k.rhs.is_negative() {
                let flipped = match k.cmp {
                    Cmp::Le => Cmp::Ge,
                    Cmp::Ge => Cmp::Le,
                    Cmp::Eq => Cmp::Eq,
                };
                (k.coeffs.iter().map(|a| -a).collect(), flipped, -k.rhs.clone())
            } else {
                (k.coeffs.clone(), k.cmp, k.rhs.clone())
            }
        })
        .collect();
    let n_slack = rows.iter().filter(|r| r.1 != Cmp::Eq).count();
    let n_art = rows.iter().filter(|r| r.1 != Cmp::Le).count();
    let art_start = nvars + n_slack;
    let w = art_start + n_art;

    let mut tab_rows = Vec::with_capacity(rows.len());
    let mut basis = Vec::with_capacity(rows.len());
    let (mut s, mut a) = (nvars, art_start);
    for (coeffs, cmp, rhs) in rows {
        let mut row = vec![Rat::zero(); w + 1];
        for (j, v) in coeffs.into_iter().enumerate() {
            row[j] = v;
        }
        row[w] = rhs;
        match cmp {
            Cmp::Le => {
                row[s] = Rat::one();
                basis.push(s);
                s += 1;
            }
            Cmp::Ge => {
                row[s] = -Rat::one();
                s += 1;
                row[a] = Rat::one();
                basis.push(a);
                a += 1;
            }
            Cmp::Eq => {
                row[a] = Rat::one();
                basis.push(a);
                a += 1;
            }
        }
        tab_rows.push(row);
    }
    let mut t = Tableau { rows: tab_rows, obj: vec![Rat::zero(); w + 1], basis, enterable: art_start };

    if n_art > 0 {
        let mut phase1 = vec![Rat::zero(); w];
        for v in phase1.iter_mut().skip(art_start) {
            *v = -Rat::one();
        }
        t.set_objective(&phase1);
        t.run(&never);
        if t.value().is_negative() {
            return LpResult::without(LpStatus::Infeasible);
        }
        // Drive artificials out of the basis; drop redundant rows.
        let mut r = 0;
        while r < t.rows.len() {
            if t.basis[r] >= art_start {
                match (0..art_start).find(|&j| !t.rows[r][j].is_zero()) {
                    Some(j) => t.pivot(r, j),
                    None => {
                        t.rows.remove(r);
                        t.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
    }
    t.set_objective(c);
    match t.run(stop) {
        Outcome::Unbounded => LpResult::without(LpStatus::Unbounded),
        Outcome::Done | Outcome::Stopped => {
            LpResult { status: LpStatus::Optimal, optimum: Some(t.value().clone()), witness: Some(t.solution(nvars)) }
        }
    }
}
