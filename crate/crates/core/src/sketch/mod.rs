//! Sketches: total orders on the symbolic letters `±x_i + s` (plus four
//! boundary constants for pointed sketches) that encode regions.
//!
//! A letter `Var { sub, sup }` with `sub > 0` stands for `x_sub + sup`, and
//! with `sub < 0` for `-x_{-sub} + sup`. Every sketch is mirror symmetric: the
//! second half is the reversed conjugate of the first.

mod codec;
mod diagram;
mod enumerate;
mod words;

pub use codec::{format_sketch, parse_sketch};
pub use diagram::{compartment_count, decompose_nnp, positive_compartments, to_arc_diagram, ArcBlock, ArcDiagram};
pub use enumerate::{
    ballot_words, enumerate_m_sketches, enumerate_pointed, enumerate_sketches, enumerate_sketches_of_kind,
    reflection_sketches, search_sketches, signed_perms,
};
pub use words::{
    ballot_to_pointed, pair_from_pointed, pair_from_sketch, pointed_from_pair, pointed_to_ballot, sketch_from_pair,
    to_lattice_path, AbWord, LatticePath,
};

use crate::arrangement::{Arrangement, Family};
use crate::error::{Error, Result};
use crate::exactnum::{int, rat, Rat};
use crate::regionlab::{strict_feasible, Strict};
use std::collections::HashMap;
use std::fmt;

/// The four constants `-3/2 < -1/2 < 1/2 < 3/2` of pointed sketches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Boundary {
    NegThreeHalves,
    NegHalf,
    PosHalf,
    PosThreeHalves,
}

impl Boundary {
    pub fn value(self) -> Rat {
        match self {
            Boundary::NegThreeHalves => rat(-3, 2),
            Boundary::NegHalf => rat(-1, 2),
            Boundary::PosHalf => rat(1, 2),
            Boundary::PosThreeHalves => rat(3, 2),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Var { sub: i32, sup: i32 },
    Bound(Boundary),
}

impl Letter {
    pub fn var(sub: i32, sup: i32) -> Self {
        Letter::Var { sub, sup }
    }

    pub fn conj(self) -> Self {
        match self {
            Letter::Var { sub, sup } => Letter::Var { sub: -sub, sup: -sup },
            Letter::Bound(b) => Letter::Bound(match b {
                Boundary::NegThreeHalves => Boundary::PosThreeHalves,
                Boundary::NegHalf => Boundary::PosHalf,
                Boundary::PosHalf => Boundary::NegHalf,
                Boundary::PosThreeHalves => Boundary::NegThreeHalves,
            }),
        }
    }

    /// Signed subscript; `None` for boundary letters.
    pub fn sub(self) -> Option<i32> {
        match self {
            Letter::Var { sub, .. } => Some(sub),
            Letter::Bound(_) => None,
        }
    }

    pub fn is_positive(self) -> bool {
        match self {
            Letter::Var { sub, .. } => sub > 0,
            Letter::Bound(b) => b >= Boundary::PosHalf,
        }
    }

    /// Linear form `(coefficients, constant)` of the letter in `n` variables.
    pub fn value(self, n: usize) -> (Vec<Rat>, Rat) {
        let mut c = vec![int(0); n];
        match self {
            Letter::Var { sub, sup } => {
                c[sub.unsigned_abs() as usize - 1] = int(sub.signum() as i64);
                (c, int(sup as i64))
            }
            Letter::Bound(b) => (c, b.value()),
        }
    }

    pub fn eval(self, x: &[Rat]) -> Rat {
        match self {
            Letter::Var { sub, sup } => {
                let v = &x[sub.unsigned_abs() as usize - 1];
                let v = if sub > 0 { v.clone() } else { -v.clone() };
                v + int(sup as i64)
            }
            Letter::Bound(b) => b.value(),
        }
    }
}

/// Which alphabet a sketch is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SketchKind {
    /// Letters `±x_i`; regions of the type C reflection arrangement.
    Reflection,
    /// Letters `x_i + s` (`0 <= s <= m`) and `-x_i + s` (`-m <= s <= 0`);
    /// `m = 1` gives symmetric sketches.
    Catalan { m: u32 },
    /// Symmetric-sketch letters plus the four boundary constants.
    Pointed,
}

impl SketchKind {
    pub fn len(self, n: usize) -> usize {
        match self {
            SketchKind::Reflection => 2 * n,
            SketchKind::Catalan { m } => 2 * (m as usize + 1) * n,
            SketchKind::Pointed => 4 * n + 4,
        }
    }

    fn m(self) -> i32 {
        match self {
            SketchKind::Reflection => 0,
            SketchKind::Catalan { m } => m as i32,
            SketchKind::Pointed => 1,
        }
    }

    /// All letters, sorted.
    pub fn alphabet(self, n: usize) -> Vec<Letter> {
        let m = self.m();
        let mut out = Vec::new();
        for i in 1..=n as i32 {
            for s in 0..=m {
                out.push(Letter::var(i, s));
                out.push(Letter::var(-i, -s));
            }
        }
        if self == SketchKind::Pointed {
            out.extend(
                [Boundary::NegThreeHalves, Boundary::NegHalf, Boundary::PosHalf, Boundary::PosThreeHalves]
                    .map(Letter::Bound),
            );
        }
        out.sort();
        out
    }

    /// Openers of the arc diagram.
    pub fn is_alpha(self, l: Letter) -> bool {
        match (self, l) {
            (SketchKind::Reflection, _) => false,
            (_, Letter::Var { sub, sup }) => (sub > 0 && sup == 0) || (sub < 0 && sup == -self.m()),
            (SketchKind::Pointed, Letter::Bound(b)) => b == Boundary::NegThreeHalves,
            _ => false,
        }
    }

    /// The letter exceeding `l` by exactly 1, if it is in the alphabet.
    pub fn successor(self, l: Letter) -> Option<Letter> {
        match (self, l) {
            (SketchKind::Reflection, _) => None,
            (_, Letter::Var { sub, sup }) => {
                let top = if sub > 0 { self.m() } else { 0 };
                (sup < top).then(|| Letter::var(sub, sup + 1))
            }
            (_, Letter::Bound(b)) => match b {
                Boundary::NegThreeHalves => Some(Letter::Bound(Boundary::NegHalf)),
                Boundary::NegHalf => Some(Letter::Bound(Boundary::PosHalf)),
                Boundary::PosHalf => Some(Letter::Bound(Boundary::PosThreeHalves)),
                Boundary::PosThreeHalves => None,
            },
        }
    }

    pub fn predecessor(self, l: Letter) -> Option<Letter> {
        match (self, l) {
            (SketchKind::Reflection, _) => None,
            (_, Letter::Var { sub, sup }) => {
                let bottom = if sub > 0 { 0 } else { -self.m() };
                (sup > bottom).then(|| Letter::var(sub, sup - 1))
            }
            (_, Letter::Bound(b)) => match b {
                Boundary::NegThreeHalves => None,
                Boundary::NegHalf => Some(Letter::Bound(Boundary::NegThreeHalves)),
                Boundary::PosHalf => Some(Letter::Bound(Boundary::NegHalf)),
                Boundary::PosThreeHalves => Some(Letter::Bound(Boundary::PosHalf)),
            },
        }
    }

    /// The ambient arrangement whose regions these sketches encode.
    pub fn ambient_family(self) -> Family {
        match self {
            SketchKind::Reflection => Family::TypeC,
            SketchKind::Catalan { m: 1 } => Family::CatC,
            SketchKind::Catalan { .. } => Family::CatCExt,
            SketchKind::Pointed => Family::Pointed,
        }
    }
}

/// Signed permutation of `[n]`, entries `±i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm(pub Vec<i32>);

impl SignedPerm {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            let a = e.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidSketch(format!("not a signed permutation: {entries:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPerm(entries))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| format!("{v:+}")).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sketch {
    pub kind: SketchKind,
    pub n: usize,
    pub letters: Vec<Letter>,
}

impl Sketch {
    /// Checks every defining property; see [`Sketch::validate`].
    pub fn new(kind: SketchKind, n: usize, letters: Vec<Letter>) -> Result<Self> {
        let s = Sketch { kind, n, letters };
        s.validate()?;
        Ok(s)
    }

    /// The reflection sketch whose second half is `p`.
    pub fn reflection(p: &SignedPerm) -> Self {
        let n = p.len();
        let mut letters: Vec<Letter> = p.0.iter().rev().map(|&v| Letter::var(-v, 0)).collect();
        letters.extend(p.0.iter().map(|&v| Letter::var(v, 0)));
        Sketch { kind: SketchKind::Reflection, n, letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first_half(&self) -> &[Letter] {
        &self.letters[..self.len() / 2]
    }

    pub fn second_half(&self) -> &[Letter] {
        &self.letters[self.len() / 2..]
    }

    /// Second half of a reflection sketch as a signed permutation.
    pub fn second_half_perm(&self) -> SignedPerm {
        SignedPerm(self.second_half().iter().map(|l| l.sub().unwrap_or(0)).collect())
    }

    pub fn is_alpha(&self, k: usize) -> bool {
        self.kind.is_alpha(self.letters[k])
    }

    pub fn positions(&self) -> HashMap<Letter, usize> {
        self.letters.iter().enumerate().map(|(i, &l)| (l, i)).collect()
    }

    /// Alphabet, mirror symmetry, chain order and shift compatibility.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidSketch(msg.to_string()));
        let len = self.kind.len(self.n);
        if self.letters.len() != len {
            return bad("wrong length");
        }
        let mut sorted = self.letters.clone();
        sorted.sort();
        if sorted != self.kind.alphabet(self.n) {
            return bad("letters are not exactly the alphabet");
        }
        for k in 0..len {
            if self.letters[len - 1 - k] != self.letters[k].conj() {
                return bad("second half is not the mirror of the first");
            }
        }
        let pos = self.positions();
        let chained: Vec<(usize, usize)> =
            self.letters.iter().filter_map(|&l| self.kind.predecessor(l).map(|p| (pos[&p], pos[&l]))).collect();
        for &(p, l) in &chained {
            if p > l {
                return bad("a letter precedes its predecessor");
            }
        }
        for &(pa, a) in &chained {
            for &(pb, b) in &chained {
                if pa < pb && a > b {
                    return bad("shifted letters are out of order");
                }
            }
        }
        Ok(())
    }

    /// Strict inequalities between consecutive letters.
    pub fn chain(&self) -> Vec<Strict> {
        self.letters
            .windows(2)
            .map(|w| {
                let (ca, ka) = w[0].value(self.n);
                let (cb, kb) = w[1].value(self.n);
                let normal = cb.iter().zip(&ca).map(|(b, a)| b - a).collect();
                Strict::new(normal, ka - kb)
            })
            .collect()
    }

    /// True if the point orders the letters exactly as the sketch does.
    pub fn holds_at(&self, x: &[Rat]) -> bool {
        let vals: Vec<Rat> = self.letters.iter().map(|l| l.eval(x)).collect();
        vals.windows(2).all(|w| w[0] < w[1])
    }
}

impl fmt::Display for Sketch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_sketch(self))
    }
}

pub fn is_symmetric_sketch(n: usize, letters: &[Letter]) -> bool {
    Sketch::new(SketchKind::Catalan { m: 1 }, n, letters.to_vec()).is_ok()
}

pub fn is_m_sketch(n: usize, m: u32, letters: &[Letter]) -> bool {
    Sketch::new(SketchKind::Catalan { m }, n, letters.to_vec()).is_ok()
}

pub fn is_pointed_sketch(n: usize, letters: &[Letter]) -> bool {
    Sketch::new(SketchKind::Pointed, n, letters.to_vec()).is_ok()
}

/// The sketch reading the letter order off a point.
pub fn sketch_at(kind: SketchKind, n: usize, x: &[Rat]) -> Result<Sketch> {
    let mut letters = kind.alphabet(n);
    let vals: HashMap<Letter, Rat> = letters.iter().map(|&l| (l, l.eval(x))).collect();
    letters.sort_by(|a, b| vals[a].cmp(&vals[b]));
    if letters.windows(2).any(|w| vals[&w[0]] == vals[&w[1]]) {
        return Err(Error::InvalidSketch("point lies on a hyperplane".into()));
    }
    Sketch::new(kind, n, letters)
}

/// A point whose letter values are ordered as in the sketch.
pub fn realize(sk: &Sketch, a: &Arrangement) -> Result<Vec<Rat>> {
    if a.dim() != sk.n {
        return Err(Error::KindMismatch(format!("sketch has n = {}, arrangement n = {}", sk.n, a.dim())));
    }
    strict_feasible(sk.n, &sk.chain()).ok_or(Error::NotRealizable)
}

/// Whether the region of a sketch is bounded, read off its lattice path or
/// arc diagram.
pub fn is_bounded_sketch(sk: &Sketch, family: Family) -> Result<bool> {
    let heights = |len: usize| {
        let mut h = 0i32;
        sk.first_half()[..len]
            .iter()
            .map(|&l| {
                h += if sk.kind.is_alpha(l) { 1 } else { -1 };
                h
            })
            .collect::<Vec<i32>>()
    };
    let mismatch = || Error::KindMismatch(format!("{family} with {:?}", sk.kind));
    let n = sk.n;
    match family {
        Family::CatC | Family::CatD => {
            if sk.kind != (SketchKind::Catalan { m: 1 }) {
                return Err(mismatch());
            }
            Ok(heights(2 * n).iter().all(|&h| h > 0))
        }
        Family::CatCExt => {
            if !matches!(sk.kind, SketchKind::Catalan { .. }) {
                return Err(mismatch());
            }
            let (_, unbounded) = decompose_nnp(&to_arc_diagram(sk)?);
            Ok(unbounded.blocks.is_empty())
        }
        Family::Pointed | Family::CatB | Family::CatBC => {
            if sk.kind != SketchKind::Pointed {
                return Err(mismatch());
            }
            Ok(heights(2 * n + 1).iter().all(|&h| h > 0))
        }
        _ => Err(Error::Unsupported(format!("boundedness of {family} sketches"))),
    }
}
