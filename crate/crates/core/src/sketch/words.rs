use super::{Boundary, Letter, SignedPerm, Sketch, SketchKind};
use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// A word over {α, β}, `true` for α. A pointed word marks one β.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AbWord {
    pub letters: Vec<bool>,
    pub pointer: Option<usize>,
}

impl AbWord {
    pub fn new(letters: Vec<bool>) -> Self {
        AbWord { letters, pointer: None }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn alpha_count(&self) -> usize {
        self.letters.iter().filter(|&&a| a).count()
    }

    /// Every prefix has at least as many α's as β's.
    pub fn is_ballot(&self) -> bool {
        let mut h = 0i64;
        self.letters.iter().all(|&a| {
            h += if a { 1 } else { -1 };
            h >= 0
        })
    }

    /// Ballot, and the pointer sits on a β preceded by exactly `n + 1` α's.
    pub fn is_pointed_word(&self, n: usize) -> bool {
        match self.pointer {
            Some(p) => {
                self.len() == 2 * n + 2
                    && self.is_ballot()
                    && p < self.len()
                    && !self.letters[p]
                    && self.letters[..p].iter().filter(|&&a| a).count() == n + 1
            }
            None => false,
        }
    }
}

impl fmt::Display for AbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &a) in self.letters.iter().enumerate() {
            f.write_str(if a { "a" } else { "b" })?;
            if self.pointer == Some(i) {
                f.write_str("*")?;
            }
        }
        Ok(())
    }
}

impl FromStr for AbWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut w = AbWord::new(Vec::new());
        for c in s.chars() {
            match c {
                'a' | 'α' => w.letters.push(true),
                'b' | 'β' => w.letters.push(false),
                '*' if !w.letters.is_empty() && w.pointer.is_none() => w.pointer = Some(w.letters.len() - 1),
                _ => return Err(Error::Parse(format!("bad αβ-word {s:?}"))),
            }
        }
        Ok(w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticePath {
    /// `true` for an up step.
    pub steps: Vec<bool>,
    /// Labels of the first n up steps.
    pub labels: Vec<i32>,
    pub pointer: Option<usize>,
}

impl LatticePath {
    pub fn heights(&self) -> Vec<i64> {
        let mut h = 0;
        self.steps
            .iter()
            .map(|&u| {
                h += if u { 1 } else { -1 };
                h
            })
            .collect()
    }

    pub fn step_string(&self) -> String {
        self.steps.iter().map(|&u| if u { 'U' } else { 'D' }).collect()
    }
}

fn first_half_word(sk: &Sketch) -> Vec<bool> {
    sk.first_half().iter().map(|&l| sk.kind.is_alpha(l)).collect()
}

/// The αβ-word of the first half and the subscripts of the first n α-letters.
pub fn pair_from_sketch(sk: &Sketch) -> Result<(AbWord, SignedPerm)> {
    if sk.kind != (SketchKind::Catalan { m: 1 }) {
        return Err(Error::KindMismatch("pairs need a symmetric sketch".into()));
    }
    let perm = sk.letters.iter().filter(|&&l| sk.kind.is_alpha(l)).take(sk.n).filter_map(|l| l.sub()).collect();
    Ok((AbWord::new(first_half_word(sk)), SignedPerm(perm)))
}

fn alpha_letter(label: i32) -> Letter {
    Letter::var(label, if label > 0 { 0 } else { -1 })
}

fn beta_letter(label: i32) -> Letter {
    Letter::var(label, if label > 0 { 1 } else { 0 })
}

fn extend(w: &[bool], p: &SignedPerm) -> (Vec<bool>, Vec<i32>) {
    let mut word = w.to_vec();
    word.extend(w.iter().rev().map(|&a| !a));
    let mut labels = p.0.clone();
    labels.extend(p.0.iter().rev().map(|&v| -v));
    (word, labels)
}

/// Inverse of [`pair_from_sketch`]: mirror the word, extend the permutation
/// by its reversed negation, and label the k-th α and the k-th β alike.
pub fn sketch_from_pair(w: &AbWord, p: &SignedPerm) -> Result<Sketch> {
    let n = p.len();
    if w.len() != 2 * n || w.pointer.is_some() {
        return Err(Error::InvalidSketch(format!("word {w} does not fit n = {n}")));
    }
    if !w.is_ballot() {
        return Err(Error::NotBallot);
    }
    SignedPerm::new(p.0.clone())?;
    let (word, labels) = extend(&w.letters, p);
    let (mut ka, mut kb) = (0, 0);
    let letters = word
        .iter()
        .map(|&a| {
            if a {
                ka += 1;
                alpha_letter(labels[ka - 1])
            } else {
                kb += 1;
                beta_letter(labels[kb - 1])
            }
        })
        .collect();
    Sketch::new(SketchKind::Catalan { m: 1 }, n, letters)
}

/// Pointed word (pointer on `-1/2`) and the subscripts of the first n
/// non-boundary α-letters.
pub fn pair_from_pointed(sk: &Sketch) -> Result<(AbWord, SignedPerm)> {
    if sk.kind != SketchKind::Pointed {
        return Err(Error::KindMismatch("expected a pointed sketch".into()));
    }
    let perm = sk.letters.iter().filter(|&&l| sk.kind.is_alpha(l)).filter_map(|l| l.sub()).take(sk.n).collect();
    let pointer = sk.first_half().iter().position(|&l| l == Letter::Bound(Boundary::NegHalf));
    Ok((AbWord { letters: first_half_word(sk), pointer }, SignedPerm(perm)))
}

pub fn pointed_from_pair(w: &AbWord, p: &SignedPerm) -> Result<Sketch> {
    let n = p.len();
    if !w.is_pointed_word(n) {
        return Err(Error::InvalidSketch(format!("{w} is not a pointed word for n = {n}")));
    }
    SignedPerm::new(p.0.clone())?;
    let ptr = w.pointer.unwrap_or_default();
    let mut word = w.letters.clone();
    word.extend(w.letters.iter().rev().map(|&a| !a));
    // The pointed β is the k-th β; -3/2 is the k-th α, and the mirrors of
    // both sit k places from the right end.
    let k = w.letters[..ptr].iter().filter(|&&a| !a).count();
    let total = 2 * n + 2;
    let (_, full) = extend(&[], p);
    let mut plain = full.iter().copied();
    let slots: Vec<Option<i32>> = (0..total)
        .map(|i| {
            if i == k {
                None
            } else if i == total - 1 - k {
                Some(0)
            } else {
                plain.next()
            }
        })
        .collect();
    let (mut ka, mut kb) = (0, 0);
    let letters = word
        .iter()
        .map(|&a| {
            let slot = if a {
                ka += 1;
                slots[ka - 1]
            } else {
                kb += 1;
                slots[kb - 1]
            };
            match (a, slot) {
                (true, None) => Letter::Bound(Boundary::NegThreeHalves),
                (true, Some(0)) => Letter::Bound(Boundary::PosHalf),
                (false, None) => Letter::Bound(Boundary::NegHalf),
                (false, Some(0)) => Letter::Bound(Boundary::PosThreeHalves),
                (true, Some(l)) => alpha_letter(l),
                (false, Some(l)) => beta_letter(l),
            }
        })
        .collect();
    Sketch::new(SketchKind::Pointed, n, letters)
}

/// Replace the pointed β with an α: a ballot word with at least `n + 2` α's.
pub fn pointed_to_ballot(w: &AbWord) -> AbWord {
    let mut letters = w.letters.clone();
    if let Some(p) = w.pointer {
        letters[p] = true;
    }
    AbWord::new(letters)
}

/// Inverse of [`pointed_to_ballot`]: the `(n + 2)`-th α becomes the pointed β.
pub fn ballot_to_pointed(w: &AbWord, n: usize) -> Result<AbWord> {
    if w.len() != 2 * n + 2 || !w.is_ballot() {
        return Err(Error::NotBallot);
    }
    let p = w
        .letters
        .iter()
        .enumerate()
        .filter(|(_, &a)| a)
        .nth(n + 1)
        .map(|(i, _)| i)
        .ok_or_else(|| Error::InvalidSketch(format!("{w} has fewer than {} α-letters", n + 2)))?;
    let mut letters = w.letters.clone();
    letters[p] = false;
    Ok(AbWord { letters, pointer: Some(p) })
}

pub fn to_lattice_path(sk: &Sketch) -> Result<LatticePath> {
    let (w, p) = match sk.kind {
        SketchKind::Catalan { m: 1 } => pair_from_sketch(sk)?,
        SketchKind::Pointed => pair_from_pointed(sk)?,
        _ => return Err(Error::KindMismatch("lattice paths need symmetric or pointed sketches".into())),
    };
    Ok(LatticePath { steps: w.letters, labels: p.0, pointer: w.pointer })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sketch::enumerate::{ballot_words, enumerate_pointed, enumerate_sketches, search_sketches};

    fn v(sub: i32, sup: i32) -> Letter {
        Letter::var(sub, sup)
    }

    fn example_six() -> Sketch {
        let letters = vec![
            v(-3, -1),
            v(-3, 0),
            v(1, 0),
            v(-2, -1),
            v(1, 1),
            v(2, 0),
            v(-2, 0),
            v(-1, -1),
            v(2, 1),
            v(-1, 0),
            v(3, 0),
            v(3, 1),
        ];
        Sketch::new(SketchKind::Catalan { m: 1 }, 3, letters).unwrap()
    }

    #[test]
    fn twelve_letter_pair() {
        let (w, p) = pair_from_sketch(&example_six()).unwrap();
        assert_eq!(w.to_string(), "abaaba");
        assert_eq!(p.0, vec![-3, 1, -2]);
        assert_eq!(sketch_from_pair(&w, &p).unwrap(), example_six());
    }

    #[test]
    fn twelve_letter_lattice_path() {
        let path = to_lattice_path(&example_six()).unwrap();
        assert_eq!(path.step_string(), "UDUUDU");
        assert_eq!(path.labels, vec![-3, 1, -2]);
    }

    #[test]
    fn non_ballot_rejected() {
        let w: AbWord = "ba".parse().unwrap();
        assert!(matches!(sketch_from_pair(&w, &SignedPerm(vec![1])), Err(Error::NotBallot)));
    }

    #[test]
    fn round_trip_n2() {
        let all = enumerate_sketches(2);
        assert_eq!(all.len(), 48);
        for sk in &all {
            let (w, p) = pair_from_sketch(sk).unwrap();
            assert_eq!(&sketch_from_pair(&w, &p).unwrap(), sk);
        }
    }

    #[test]
    fn alpha_subscripts_are_palindromic_negation() {
        for sk in enumerate_sketches(3) {
            let subs: Vec<i32> = sk.letters.iter().filter(|&&l| sk.kind.is_alpha(l)).filter_map(|l| l.sub()).collect();
            let n = sk.n;
            for k in 0..n {
                assert_eq!(subs[2 * n - 1 - k], -subs[k]);
            }
        }
    }

    #[test]
    fn pointed_seven_letter_pair() {
        let letters = vec![
            Letter::Bound(Boundary::NegThreeHalves),
            v(2, 0),
            v(-1, -1),
            Letter::Bound(Boundary::NegHalf),
            v(1, 0),
            v(2, 1),
            v(-2, -1),
            v(-1, 0),
            Letter::Bound(Boundary::PosHalf),
            v(1, 1),
            v(-2, 0),
            Letter::Bound(Boundary::PosThreeHalves),
        ];
        let sk = Sketch::new(SketchKind::Pointed, 2, letters).unwrap();
        let (w, p) = pair_from_pointed(&sk).unwrap();
        assert_eq!(w.to_string(), "aaab*ab");
        assert_eq!(p.0, vec![2, -1]);
        assert_eq!(pointed_from_pair(&w, &p).unwrap(), sk);
    }

    #[test]
    fn pointed_pairs_round_trip() {
        for n in 1..=2 {
            let all = enumerate_pointed(n);
            assert_eq!(all, search_sketches(SketchKind::Pointed, n));
            for sk in &all {
                let (w, p) = pair_from_pointed(sk).unwrap();
                assert!(w.is_pointed_word(n));
                assert_eq!(&pointed_from_pair(&w, &p).unwrap(), sk);
            }
        }
    }

    #[test]
    fn pointed_ballot_bijection() {
        for n in 1..=4 {
            let mut count = 0;
            for w in ballot_words(2 * n + 2) {
                if w.alpha_count() < n + 2 {
                    continue;
                }
                count += 1;
                let pw = ballot_to_pointed(&w, n).unwrap();
                assert!(pw.is_pointed_word(n));
                assert_eq!(pointed_to_ballot(&pw), w);
            }
            let ballot_n = |k: usize| crate::exactnum::binomial(2 * n as u64 + 2, k as u64);
            assert_eq!(num_bigint::BigInt::from(count), ballot_n(n));
        }
    }

    #[test]
    fn word_codec() {
        let w: AbWord = "aab*b".parse().unwrap();
        assert_eq!(w.pointer, Some(2));
        assert_eq!(w.to_string(), "aab*b");
        assert!("abc".parse::<AbWord>().is_err());
    }
}
