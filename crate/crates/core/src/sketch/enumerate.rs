use super::words::{ballot_to_pointed, pointed_from_pair, sketch_from_pair, AbWord};
use super::{Letter, SignedPerm, Sketch, SketchKind};
use std::collections::HashMap;

/// All signed permutations of `[n]`, sorted.
pub fn signed_perms(n: usize) -> Vec<SignedPerm> {
    fn go(n: usize, cur: &mut Vec<i32>, used: &mut [bool], out: &mut Vec<SignedPerm>) {
        if cur.len() == n {
            out.push(SignedPerm(cur.clone()));
            return;
        }
        for v in 1..=n {
            if used[v] {
                continue;
            }
            used[v] = true;
            for s in [-(v as i32), v as i32] {
                cur.push(s);
                go(n, cur, used, out);
                cur.pop();
            }
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
    out.sort();
    out
}

/// All ballot words of the given length, in lex order with α first.
pub fn ballot_words(len: usize) -> Vec<AbWord> {
    fn go(len: usize, cur: &mut Vec<bool>, h: usize, out: &mut Vec<AbWord>) {
        if cur.len() == len {
            out.push(AbWord::new(cur.clone()));
            return;
        }
        cur.push(true);
        go(len, cur, h + 1, out);
        cur.pop();
        if h > 0 {
            cur.push(false);
            go(len, cur, h - 1, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, &mut Vec::new(), 0, &mut out);
    out
}

pub fn reflection_sketches(n: usize) -> Vec<Sketch> {
    signed_perms(n).iter().map(Sketch::reflection).collect()
}

/// Symmetric sketches, built from (ballot word, signed permutation) pairs.
pub fn enumerate_sketches(n: usize) -> Vec<Sketch> {
    let perms = signed_perms(n);
    let mut out: Vec<Sketch> = ballot_words(2 * n)
        .iter()
        .flat_map(|w| perms.iter().map(move |p| sketch_from_pair(w, p).expect("ballot pair gives a sketch")))
        .collect();
    out.sort();
    out
}

/// Pointed sketches, built from (pointed word, signed permutation) pairs.
pub fn enumerate_pointed(n: usize) -> Vec<Sketch> {
    let perms = signed_perms(n);
    let mut out = Vec::new();
    for w in ballot_words(2 * n + 2) {
        if w.alpha_count() < n + 2 {
            continue;
        }
        let pw = ballot_to_pointed(&w, n).expect("enough α-letters");
        for p in &perms {
            out.push(pointed_from_pair(&pw, p).expect("pointed pair gives a sketch"));
        }
    }
    out.sort();
    out
}

pub fn enumerate_m_sketches(n: usize, m: u32) -> Vec<Sketch> {
    search_sketches(SketchKind::Catalan { m }, n)
}

pub fn enumerate_sketches_of_kind(kind: SketchKind, n: usize) -> Vec<Sketch> {
    match kind {
        SketchKind::Reflection => reflection_sketches(n),
        SketchKind::Catalan { m: 1 } => enumerate_sketches(n),
        SketchKind::Catalan { m } => enumerate_m_sketches(n, m),
        SketchKind::Pointed => enumerate_pointed(n),
    }
}

struct Search {
    half: usize,
    conj: Vec<usize>,
    pred: Vec<Option<usize>>,
    succ: Vec<Option<usize>>,
    pos: Vec<Option<usize>>,
    word: Vec<usize>,
}

impl Search {
    fn allowed(&self, id: usize) -> bool {
        if self.pos[id].is_some() || self.pos[self.conj[id]].is_some() {
            return false;
        }
        let Some(p) = self.pred[id] else { return true };
        let Some(pp) = self.pos[p] else { return false };
        // every shifted letter whose predecessor came before ours is placed
        self.word[..pp].iter().all(|&c| self.succ[c].is_none_or(|s| self.pos[s].is_some()))
    }

    fn run(&mut self, alphabet: &[Letter], kind: SketchKind, n: usize, out: &mut Vec<Sketch>) {
        if self.word.len() == self.half {
            let mut letters: Vec<Letter> = self.word.iter().map(|&i| alphabet[i]).collect();
            letters.extend(self.word.iter().rev().map(|&i| alphabet[self.conj[i]]));
            if let Ok(sk) = Sketch::new(kind, n, letters) {
                out.push(sk);
            }
            return;
        }
        for id in 0..alphabet.len() {
            if !self.allowed(id) {
                continue;
            }
            self.pos[id] = Some(self.word.len());
            self.word.push(id);
            self.run(alphabet, kind, n, out);
            self.word.pop();
            self.pos[id] = None;
        }
    }
}

/// Exhaustive search over first halves, pruned by the sketch axioms; the
/// result is checked against the full definition.
pub fn search_sketches(kind: SketchKind, n: usize) -> Vec<Sketch> {
    let alphabet = kind.alphabet(n);
    let index: HashMap<Letter, usize> = alphabet.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let mut s = Search {
        half: kind.len(n) / 2,
        conj: alphabet.iter().map(|l| index[&l.conj()]).collect(),
        pred: alphabet.iter().map(|&l| kind.predecessor(l).map(|p| index[&p])).collect(),
        succ: alphabet.iter().map(|&l| kind.successor(l).map(|p| index[&p])).collect(),
        pos: vec![None; alphabet.len()],
        word: Vec::new(),
    };
    let mut out = Vec::new();
    s.run(&alphabet, kind, n, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{binomial, factorial};
    use num_bigint::BigInt;

    fn signed_count(n: usize, choose: BigInt) -> BigInt {
        BigInt::from(1u64 << n) * factorial(n as u64) * choose
    }

    #[test]
    fn ballot_counts() {
        for n in 0..=6u64 {
            assert_eq!(BigInt::from(ballot_words(2 * n as usize).len()), binomial(2 * n, n));
        }
    }

    #[test]
    fn signed_perm_counts() {
        assert_eq!(signed_perms(3).len(), 48);
        assert_eq!(signed_perms(0).len(), 1);
    }

    #[test]
    fn sketch_counts() {
        for n in 1..=3usize {
            let c = signed_count(n, binomial(2 * n as u64, n as u64));
            assert_eq!(BigInt::from(enumerate_sketches(n).len()), c);
        }
        for n in 1..=2usize {
            let c = signed_count(n, binomial(3 * n as u64, n as u64));
            assert_eq!(BigInt::from(enumerate_m_sketches(n, 2).len()), c);
            let c = signed_count(n, binomial(2 * n as u64 + 2, n as u64));
            assert_eq!(BigInt::from(enumerate_pointed(n).len()), c);
        }
        assert_eq!(enumerate_m_sketches(1, 2).len(), 6);
        assert_eq!(enumerate_m_sketches(1, 3).len(), 8);
    }

    #[test]
    fn search_agrees_with_pairs() {
        for n in 1..=3 {
            assert_eq!(search_sketches(SketchKind::Catalan { m: 1 }, n), enumerate_sketches(n));
        }
    }

    #[test]
    fn mirror_holds_everywhere() {
        for sk in enumerate_m_sketches(2, 2) {
            let l = sk.len();
            for k in 0..l / 2 {
                assert_eq!(sk.letters[l - 1 - k], sk.letters[k].conj());
            }
        }
    }
}
