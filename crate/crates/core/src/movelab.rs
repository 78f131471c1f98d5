//! Move systems on sketches: each move flips exactly one inequality of a
//! hyperplane missing from a sub-arrangement, so move-equivalence classes
//! are the regions of the sub-arrangement.

use crate::arrangement::{Arrangement, Family};
use crate::error::{Error, Result};
use crate::regionlab::{classify, SignVector};
use crate::sketch::{enumerate_sketches_of_kind, realize, Boundary, Letter, SignedPerm, Sketch, SketchKind};
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MoveSystem {
    Boolean,
    TypeD,
    Braid,
    BraidPlusBoolean,
    Fubini,
    Threshold,
    CatD,
    CatThreshold,
    ShiThreshold,
    CatB,
    CatBC,
}

impl MoveSystem {
    pub const ALL: [MoveSystem; 11] = [
        MoveSystem::Boolean,
        MoveSystem::TypeD,
        MoveSystem::Braid,
        MoveSystem::BraidPlusBoolean,
        MoveSystem::Fubini,
        MoveSystem::Threshold,
        MoveSystem::CatD,
        MoveSystem::CatThreshold,
        MoveSystem::ShiThreshold,
        MoveSystem::CatB,
        MoveSystem::CatBC,
    ];

    pub fn kind(self) -> SketchKind {
        match self {
            MoveSystem::CatD | MoveSystem::CatThreshold | MoveSystem::ShiThreshold => SketchKind::Catalan { m: 1 },
            MoveSystem::CatB | MoveSystem::CatBC => SketchKind::Pointed,
            _ => SketchKind::Reflection,
        }
    }

    /// The sub-arrangement whose regions are the classes.
    pub fn family(self) -> Family {
        match self {
            MoveSystem::Boolean => Family::Boolean,
            MoveSystem::TypeD => Family::TypeD,
            MoveSystem::Braid => Family::Braid,
            MoveSystem::BraidPlusBoolean => Family::BraidPlusBoolean,
            MoveSystem::Fubini => Family::Fubini,
            MoveSystem::Threshold => Family::Threshold,
            MoveSystem::CatD => Family::CatD,
            MoveSystem::CatThreshold => Family::CatThreshold,
            MoveSystem::ShiThreshold => Family::ShiThreshold,
            MoveSystem::CatB => Family::CatB,
            MoveSystem::CatBC => Family::CatBC,
        }
    }

    pub fn for_family(f: Family) -> Option<Self> {
        MoveSystem::ALL.into_iter().find(|s| s.family() == f)
    }
}

impl fmt::Display for MoveSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family())
    }
}

fn mirror(len: usize, k: usize) -> usize {
    len - 2 - k
}

/// Swaps each `(k, k + 1)` together with its mirror image.
fn swap_symmetric(sk: &Sketch, ks: &[usize]) -> Option<Sketch> {
    let mut letters = sk.letters.clone();
    let mut done = BTreeSet::new();
    for &k in ks {
        for k in [k, mirror(sk.len(), k)] {
            if done.insert(k) {
                letters.swap(k, k + 1);
            }
        }
    }
    let out = Sketch { letters, ..sk.clone() };
    out.validate().ok().map(|_| out)
}

fn positive(l: Letter) -> bool {
    l.is_positive()
}

fn modv(l: Letter) -> Option<u32> {
    l.sub().map(|s| s.unsigned_abs())
}

fn reflection_moves(sys: MoveSystem, sk: &Sketch) -> Vec<Sketch> {
    let n = sk.n;
    let center = sys != MoveSystem::Boolean && sys != MoveSystem::BraidPlusBoolean && sys != MoveSystem::Fubini;
    let mut out = Vec::new();
    for k in 0..n {
        let (a, b) = (sk.letters[k], sk.letters[k + 1]);
        let ok = if k == n - 1 {
            center
        } else {
            let same = positive(a) == positive(b);
            match sys {
                MoveSystem::Boolean => true,
                MoveSystem::Braid | MoveSystem::BraidPlusBoolean => !same,
                MoveSystem::Fubini | MoveSystem::Threshold => same,
                _ => false,
            }
        };
        if ok {
            out.extend(swap_symmetric(sk, &[k]));
        }
    }
    out
}

fn nth_positions(sk: &Sketch, alpha: bool) -> Vec<usize> {
    (0..sk.len()).filter(|&k| sk.is_alpha(k) == alpha).collect()
}

/// The n-th and (n+1)-th α-letters swapped together with the n-th and
/// (n+1)-th β-letters, when both pairs are adjacent.
fn middle_pair_move(sk: &Sketch) -> Option<Sketch> {
    let n = sk.n;
    let a = nth_positions(sk, true);
    (a[n] == a[n - 1] + 1).then(|| swap_symmetric(sk, &[a[n - 1]])).flatten()
}

fn corresponding(sk: &Sketch, l: Letter) -> Option<Letter> {
    if sk.kind.is_alpha(l) {
        sk.kind.successor(l)
    } else {
        sk.kind.predecessor(l)
    }
}

fn catalan_moves(sys: MoveSystem, sk: &Sketch) -> Vec<Sketch> {
    let len = sk.len();
    let half = len / 2;
    let mut out = Vec::new();
    out.extend(swap_symmetric(sk, &[half - 1]));
    out.extend(middle_pair_move(sk));
    if sys == MoveSystem::CatD {
        return out;
    }
    let pos = sk.positions();
    for k in 0..len - 1 {
        let (a, b) = (sk.letters[k], sk.letters[k + 1]);
        if modv(a) == modv(b) {
            continue;
        }
        let (aa, ba) = (sk.kind.is_alpha(a), sk.kind.is_alpha(b));
        let same = positive(a) == positive(b);
        // x_i - x_j = ±1
        if aa != ba && same {
            out.extend(swap_symmetric(sk, &[k]));
        }
        // x_i + x_j = -2
        if sys == MoveSystem::ShiThreshold && aa != ba && !same {
            let (al, bl) = if aa { (a, b) } else { (b, a) };
            if !positive(al) && positive(bl) {
                out.extend(swap_symmetric(sk, &[k]));
            }
        }
        // x_i - x_j = 0
        if aa && ba && same {
            let (ca, cb) = (corresponding(sk, a), corresponding(sk, b));
            if let (Some(ca), Some(cb)) = (ca, cb) {
                if pos[&ca] + 1 == pos[&cb] {
                    out.extend(swap_symmetric(sk, &[k, pos[&ca]]));
                }
            }
        }
    }
    out
}

fn pointed_moves(sys: MoveSystem, sk: &Sketch) -> Vec<Sketch> {
    let half = sk.len() / 2;
    let mut out = Vec::new();
    if sys == MoveSystem::CatB && !matches!(sk.letters[half - 1], Letter::Bound(_)) {
        out.extend(swap_symmetric(sk, &[half - 1]));
    }
    let low = Letter::Bound(Boundary::NegThreeHalves);
    let k = sk.letters.iter().position(|&l| l == low).unwrap_or(0);
    for j in [k.wrapping_sub(1), k + 1] {
        if let Some(&l) = sk.letters.get(j) {
            if matches!(l, Letter::Var { .. }) && !sk.kind.is_alpha(l) {
                out.extend(swap_symmetric(sk, &[j.min(k)]));
            }
        }
    }
    out
}

/// Sketches one move away, sorted and without duplicates.
pub fn moves(sys: MoveSystem, sk: &Sketch) -> Result<Vec<Sketch>> {
    if sk.kind != sys.kind() {
        return Err(Error::KindMismatch(format!("{sys} moves act on {:?} sketches, got {:?}", sys.kind(), sk.kind)));
    }
    let mut out = match sk.kind {
        SketchKind::Reflection => reflection_moves(sys, sk),
        SketchKind::Catalan { .. } => catalan_moves(sys, sk),
        SketchKind::Pointed => pointed_moves(sys, sk),
    };
    out.sort();
    out.dedup();
    out.retain(|s| s != sk);
    Ok(out)
}

/// The move-equivalence class of a sketch, sorted.
pub fn class_of(sys: MoveSystem, sk: &Sketch) -> Result<Vec<Sketch>> {
    let mut seen = BTreeSet::from([sk.clone()]);
    let mut queue = VecDeque::from([sk.clone()]);
    while let Some(s) = queue.pop_front() {
        for t in moves(sys, &s)? {
            if seen.insert(t.clone()) {
                queue.push_back(t);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Partition of a move-closed universe into classes, ordered by least member.
pub fn classes(sys: MoveSystem, universe: &[Sketch]) -> Result<Vec<Vec<Sketch>>> {
    let index: HashMap<&Sketch, usize> = universe.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut class = vec![usize::MAX; universe.len()];
    let mut out: Vec<Vec<Sketch>> = Vec::new();
    for start in 0..universe.len() {
        if class[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        class[start] = id;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for t in moves(sys, &universe[i])? {
                let j = *index
                    .get(&t)
                    .ok_or_else(|| Error::UniverseNotClosed(format!("{} -> {} leaves the universe", universe[i], t)))?;
                if class[j] == usize::MAX {
                    class[j] = id;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        let mut c: Vec<Sketch> = members.into_iter().map(|i| universe[i].clone()).collect();
        c.sort();
        out.push(c);
    }
    out.sort();
    Ok(out)
}

pub fn universe(sys: MoveSystem, n: usize) -> Vec<Sketch> {
    enumerate_sketches_of_kind(sys.kind(), n)
}

/// Maximal runs of equal sign in a signed permutation, as (positive, absolute values).
pub fn sign_blocks(p: &SignedPerm) -> Vec<(bool, Vec<u32>)> {
    let mut out: Vec<(bool, Vec<u32>)> = Vec::new();
    for &v in &p.0 {
        match out.last_mut() {
            Some((s, b)) if *s == (v > 0) => b.push(v.unsigned_abs()),
            _ => out.push((v > 0, vec![v.unsigned_abs()])),
        }
    }
    out
}

fn ascending_blocks(p: &SignedPerm) -> bool {
    sign_blocks(p).iter().all(|(_, b)| b.windows(2).all(|w| w[0] < w[1]))
}

/// Rank in the letter order `α_n^0 > … > α_1^0 > α_{-1}^{-1} > … > α_{-n}^{-1} > α_n^1 > … > α_{-n}^0`.
pub fn letter_rank(l: Letter, n: usize) -> i64 {
    let n = n as i64;
    match l {
        Letter::Var { sub, sup } => {
            let i = sub.unsigned_abs() as i64;
            match (sub > 0, sup) {
                (true, 0) => 3 * n + i,
                (false, -1) => 3 * n + 1 - i,
                (true, _) => n + i,
                (false, _) => n + 1 - i,
            }
        }
        Letter::Bound(_) => 0,
    }
}

pub fn lex_cmp(a: &Sketch, b: &Sketch) -> Ordering {
    let key = |s: &Sketch| s.letters.iter().map(|&l| letter_rank(l, s.n)).collect::<Vec<_>>();
    key(a).cmp(&key(b))
}

fn lex_max_of_all(sk: &Sketch) -> bool {
    enumerate_sketches_of_kind(sk.kind, sk.n).iter().all(|t| lex_cmp(sk, t) != Ordering::Less)
}

fn threshold_conditions(sk: &Sketch, shi: bool) -> bool {
    let n = sk.n;
    if n == 1 {
        return lex_max_of_all(sk);
    }
    let w = &sk.letters;
    let alpha = |k: usize| sk.is_alpha(k);
    let sub = |k: usize| w[k].sub().unwrap_or(0);
    let pos = sk.positions();
    for k in 0..w.len() - 1 {
        let (a, b) = (w[k], w[k + 1]);
        if !alpha(k) && alpha(k + 1) {
            let ok = if shi {
                !positive(a) && positive(b) && modv(a) != modv(b)
            } else {
                positive(a) != positive(b) && modv(a) != modv(b)
            };
            if !ok {
                return false;
            }
        }
        if alpha(k) && alpha(k + 1) && positive(a) == positive(b) {
            if let (Some(ca), Some(cb)) = (corresponding(sk, a), corresponding(sk, b)) {
                if pos[&ca] + 1 == pos[&cb] && sub(k) < sub(k + 1) {
                    return false;
                }
            }
        }
    }
    let a = nth_positions(sk, true);
    let bt = nth_positions(sk, false);
    if a[n] == a[n - 1] + 1 {
        if a[n - 1] != a[n - 2] + 1 || !positive(w[a[n - 1]]) {
            return false;
        }
        if !positive(w[a[n - 2]]) && bt[n - 1] == bt[n - 2] + 1 && sub(a[n - 2]) < sub(a[n]) {
            return false;
        }
    }
    let (p, q) = (2 * n - 2, 2 * n);
    if !alpha(p) && !alpha(q) && positive(w[p]) == positive(w[q]) && (!shi || !positive(w[p])) {
        if let (Some(cp), Some(cq)) = (corresponding(sk, w[p]), corresponding(sk, w[q])) {
            if pos[&cp] + 1 == pos[&cq] && sub(p) < sub(q) {
                return false;
            }
        }
    }
    true
}

/// The structural characterization of lexicographically maximal sketches
/// in a Catalan threshold class.
pub fn is_ct_maximal(sk: &Sketch) -> bool {
    sk.kind == (SketchKind::Catalan { m: 1 }) && threshold_conditions(sk, false)
}

pub fn is_st_maximal(sk: &Sketch) -> bool {
    sk.kind == (SketchKind::Catalan { m: 1 }) && threshold_conditions(sk, true)
}

/// The defining condition of the representative each system picks.
pub fn is_canonical(sys: MoveSystem, sk: &Sketch) -> bool {
    if sk.kind != sys.kind() {
        return false;
    }
    let n = sk.n;
    match sys.kind() {
        SketchKind::Reflection => {
            let p = sk.second_half_perm();
            let signs: Vec<bool> = p.0.iter().map(|&v| v > 0).collect();
            match sys {
                MoveSystem::Boolean => p.0.iter().enumerate().all(|(i, v)| v.unsigned_abs() as usize == i + 1),
                MoveSystem::TypeD => signs[0],
                MoveSystem::Braid => signs.iter().all(|&s| s),
                MoveSystem::BraidPlusBoolean => signs.windows(2).all(|w| w[0] || !w[1]),
                MoveSystem::Fubini => ascending_blocks(&p),
                MoveSystem::Threshold if n == 1 => signs[0],
                MoveSystem::Threshold => sign_blocks(&p)[0].1.len() > 1 && ascending_blocks(&p),
                _ => false,
            }
        }
        SketchKind::Catalan { .. } => match sys {
            MoveSystem::CatD => {
                let a = nth_positions(sk, true);
                let b = nth_positions(sk, false);
                let nth = a[n - 1];
                let next_is_alpha_or_nth_beta = sk.is_alpha(nth + 1) || nth + 1 == b[n - 1];
                !sk.is_alpha(2 * n - 1) && (!next_is_alpha_or_nth_beta || !positive(sk.letters[nth]))
            }
            MoveSystem::CatThreshold => is_ct_maximal(sk),
            MoveSystem::ShiThreshold => is_st_maximal(sk),
            _ => false,
        },
        SketchKind::Pointed => {
            // -3/2 slides through runs of β-letters; keep it rightmost
            let low = sk.letters.iter().position(|&l| l == Letter::Bound(Boundary::NegThreeHalves));
            let placed = low.is_some_and(|k| sk.is_alpha(k + 1) || matches!(sk.letters[k + 1], Letter::Bound(_)));
            match sys {
                MoveSystem::CatB => placed && !sk.is_alpha(2 * n + 1),
                _ => placed,
            }
        }
    }
}

/// The unique canonical member of the class of `sk`.
pub fn canonical(sys: MoveSystem, sk: &Sketch) -> Result<Sketch> {
    let found: Vec<Sketch> = class_of(sys, sk)?.into_iter().filter(|s| is_canonical(sys, s)).collect();
    match found.len() {
        1 => Ok(found.into_iter().next().unwrap_or_else(|| sk.clone())),
        k => Err(Error::InvalidSketch(format!("class of {sk} has {k} canonical members"))),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MoveReport {
    pub system: MoveSystem,
    pub n: usize,
    pub sketches: usize,
    pub classes: usize,
    pub sub_regions: usize,
    pub pass: bool,
    pub failures: Vec<String>,
}

/// Realizes every sketch, and checks that moves flip exactly one hyperplane
/// of `a` missing from `b` and that classes are the fibers over regions of `b`.
pub fn verify_moves_against_geometry(sys: MoveSystem, b: &Arrangement, a: &Arrangement) -> Result<MoveReport> {
    let n = a.dim();
    let sub = a
        .positions_of(b)
        .ok_or_else(|| Error::KindMismatch("the smaller arrangement is not contained in the larger".into()))?;
    let in_b: BTreeSet<usize> = sub.iter().copied().collect();
    let all = universe(sys, n);
    let mut signs: HashMap<&Sketch, SignVector> = HashMap::new();
    let mut failures = Vec::new();
    let mut seen = BTreeSet::new();
    for sk in &all {
        let x = realize(sk, a)?;
        let s = classify(a, &x)?;
        if !seen.insert(s.clone()) {
            failures.push(format!("{sk} shares a region with another sketch"));
        }
        signs.insert(sk, s);
    }
    for sk in &all {
        for t in moves(sys, sk)? {
            let Some(st) = signs.get(&t) else {
                failures.push(format!("move {sk} -> {t} leaves the universe"));
                continue;
            };
            let diff: Vec<usize> = (0..a.len()).filter(|&i| signs[sk].0[i] != st.0[i]).collect();
            if diff.len() != 1 || in_b.contains(&diff[0]) {
                failures.push(format!("move {sk} -> {t} flips hyperplanes {diff:?}"));
            }
        }
    }
    let cls = classes(sys, &all)?;
    let mut fibers: BTreeMap<SignVector, Vec<Sketch>> = BTreeMap::new();
    for sk in &all {
        fibers.entry(signs[sk].restrict(&sub)).or_default().push(sk.clone());
    }
    let mut fiber_sets: Vec<Vec<Sketch>> = fibers.values().cloned().collect();
    for f in fiber_sets.iter_mut() {
        f.sort();
    }
    fiber_sets.sort();
    if fiber_sets != cls {
        failures.push(format!("{} classes but {} regions of the sub-arrangement", cls.len(), fiber_sets.len()));
    }
    Ok(MoveReport {
        system: sys,
        n,
        sketches: all.len(),
        classes: cls.len(),
        sub_regions: fiber_sets.len(),
        pass: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{build, FamilySpec};
    use crate::formulas;
    use crate::sketch::parse_sketch;
    use num_bigint::BigInt;

    fn v(sub: i32, sup: i32) -> Letter {
        Letter::var(sub, sup)
    }

    #[test]
    fn type_d_move_chain() {
        let h = |first: [Letter; 4]| {
            let mut l = first.to_vec();
            l.extend(first.iter().rev().map(|x| x.conj()));
            Sketch::new(SketchKind::Catalan { m: 1 }, 2, l).unwrap()
        };
        let chain = [
            h([v(-1, -1), v(2, 0), v(-2, -1), v(-1, 0)]),
            h([v(-1, -1), v(2, 0), v(-2, -1), v(1, 0)]),
            h([v(-1, -1), v(-2, -1), v(2, 0), v(1, 0)]),
            h([v(-1, -1), v(-2, -1), v(2, 0), v(-1, 0)]),
        ];
        for w in chain.windows(2) {
            assert!(moves(MoveSystem::CatD, &w[0]).unwrap().contains(&w[1]));
            assert!(moves(MoveSystem::CatD, &w[1]).unwrap().contains(&w[0]));
        }
    }

    #[test]
    fn fubini_endpoint() {
        let start = parse_sketch("-3 -6 -2 +1 +4 -5 | +5 -4 -1 +2 +6 +3").unwrap();
        let end = parse_sketch("-6 -3 -2 +4 +1 -5 | +5 -1 -4 +2 +3 +6").unwrap();
        assert_eq!(canonical(MoveSystem::Fubini, &start).unwrap(), end);
        assert_eq!(canonical(MoveSystem::Fubini, &end).unwrap(), end);
    }

    #[test]
    fn threshold_endpoint() {
        let start = parse_sketch("+5 -4 -1 +2 +6 -3 | +3 -6 -2 +1 +4 -5").unwrap();
        let end = parse_sketch("+5 -4 -1 +6 +3 +2 | -2 -3 -6 +1 +4 -5").unwrap();
        assert_eq!(canonical(MoveSystem::Threshold, &start).unwrap(), end);
    }

    #[test]
    fn reflection_move_chains() {
        let steps = |sys, words: &[&str]| {
            let s: Vec<Sketch> = words.iter().map(|w| parse_sketch(w).unwrap()).collect();
            for w in s.windows(2) {
                assert!(class_of(sys, &w[0]).unwrap().contains(&w[1]));
            }
        };
        steps(
            MoveSystem::Boolean,
            &["-4 +1 +2 -3 | +3 -2 -1 +4", "-4 +2 +1 -3 | +3 -1 -2 +4", "-4 -3 +2 +1 | -1 -2 +3 +4"],
        );
        steps(
            MoveSystem::Braid,
            &["-4 -1 +3 +2 | -2 -3 +1 +4", "-4 -1 +3 -2 | +2 -3 +1 +4", "-4 -1 -2 -3 | +3 +2 +1 +4"],
        );
        let d = parse_sketch("+4 +1 -3 +2 | -2 +3 -1 -4").unwrap();
        let e = parse_sketch("+4 +1 -3 -2 | +2 +3 -1 -4").unwrap();
        assert_eq!(moves(MoveSystem::TypeD, &d).unwrap(), vec![e.clone()]);
        assert_eq!(moves(MoveSystem::TypeD, &e).unwrap(), vec![d]);
    }

    fn class_count(sys: MoveSystem, n: usize) -> usize {
        classes(sys, &universe(sys, n)).unwrap().len()
    }

    #[test]
    fn class_counts_match_formulas() {
        for sys in MoveSystem::ALL {
            let max_n = if sys.kind() == SketchKind::Reflection { 4 } else { 3 };
            for n in 1..=max_n {
                if sys == MoveSystem::CatB && n == 3 {
                    continue;
                }
                let spec = FamilySpec::new(sys.family(), n);
                let count = class_count(sys, n);
                if let Some(expect) = formulas::regions(spec) {
                    assert_eq!(BigInt::from(count), expect, "{sys} n={n}");
                }
            }
        }
    }

    #[test]
    fn one_canonical_per_class() {
        for sys in MoveSystem::ALL {
            let max_n = if sys.kind() == SketchKind::Reflection { 4 } else { 2 };
            for n in 1..=max_n {
                for c in classes(sys, &universe(sys, n)).unwrap() {
                    let k = c.iter().filter(|s| is_canonical(sys, s)).count();
                    assert_eq!(k, 1, "{sys} n={n} class of {}", c[0]);
                }
            }
        }
    }

    #[test]
    fn threshold_maximal_is_lex_maximal() {
        for sys in [MoveSystem::CatThreshold, MoveSystem::ShiThreshold] {
            for n in 1..=3 {
                for c in classes(sys, &universe(sys, n)).unwrap() {
                    let top = c.iter().max_by(|a, b| lex_cmp(a, b)).unwrap();
                    for s in &c {
                        assert_eq!(is_canonical(sys, s), s == top, "{sys} {s}");
                    }
                }
            }
        }
    }

    #[test]
    fn threshold_maximal_counts() {
        let count = |f: fn(&Sketch) -> bool, n| crate::sketch::enumerate_sketches(n).iter().filter(|s| f(s)).count();
        assert_eq!(count(is_ct_maximal, 2), 4);
        assert_eq!(count(is_st_maximal, 2), 3);
    }

    #[test]
    fn cat_d_class_sizes() {
        for n in 2..=3 {
            for c in classes(MoveSystem::CatD, &universe(MoveSystem::CatD, n)).unwrap() {
                assert!(c.len() == 2 || c.len() == 4);
            }
        }
        assert_eq!(class_count(MoveSystem::CatD, 2), 16);
    }

    #[test]
    fn threshold_blocks_agree_within_classes() {
        for c in classes(MoveSystem::Threshold, &universe(MoveSystem::Threshold, 4)).unwrap() {
            let shapes: BTreeSet<Vec<(bool, Vec<u32>)>> = c
                .iter()
                .map(|s| sign_blocks(&s.second_half_perm()))
                .filter(|b| b[0].1.len() > 1)
                .map(|b| {
                    b.into_iter()
                        .map(|(s, mut v)| {
                            (s, {
                                v.sort();
                                v
                            })
                        })
                        .collect()
                })
                .collect();
            assert_eq!(shapes.len(), 1);
        }
    }

    #[test]
    fn moves_are_symmetric() {
        for sys in MoveSystem::ALL {
            for s in universe(sys, 2) {
                for t in moves(sys, &s).unwrap() {
                    assert!(moves(sys, &t).unwrap().contains(&s), "{sys} {s} -> {t}");
                }
            }
        }
    }

    #[test]
    fn geometry_referee() {
        let cases = [
            (MoveSystem::CatD, Family::CatD, Family::CatC, 2, 16),
            (MoveSystem::Threshold, Family::Threshold, Family::TypeC, 3, 8),
            (MoveSystem::CatThreshold, Family::CatThreshold, Family::CatC, 2, 4),
            (MoveSystem::ShiThreshold, Family::ShiThreshold, Family::CatC, 2, 3),
            (MoveSystem::CatB, Family::CatB, Family::Pointed, 2, 48),
            (MoveSystem::CatBC, Family::CatBC, Family::Pointed, 2, 80),
            (MoveSystem::BraidPlusBoolean, Family::BraidPlusBoolean, Family::TypeC, 3, 24),
        ];
        for (sys, bf, af, n, expect) in cases {
            let b = build(FamilySpec::new(bf, n)).unwrap();
            let a = build(FamilySpec::new(af, n)).unwrap();
            let r = verify_moves_against_geometry(sys, &b, &a).unwrap();
            assert!(r.pass, "{sys}: {:?}", r.failures);
            assert_eq!(r.classes, expect);
        }
    }

    #[test]
    fn kind_mismatch() {
        let s = crate::sketch::enumerate_sketches(1).remove(0);
        assert!(moves(MoveSystem::Boolean, &s).is_err());
    }

    #[test]
    fn canonical_is_idempotent() {
        for s in universe(MoveSystem::CatB, 2) {
            let c = canonical(MoveSystem::CatB, &s).unwrap();
            assert_eq!(canonical(MoveSystem::CatB, &c).unwrap(), c);
        }
    }
}
