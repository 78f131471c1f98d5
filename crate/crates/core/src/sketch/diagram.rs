use super::{Letter, Sketch, SketchKind};
use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcBlock {
    /// Increasing 0-based positions joined by consecutive arcs.
    pub positions: Vec<usize>,
    /// Signed label; `None` for the boundary block of a pointed sketch.
    pub label: Option<i32>,
}

/// A labeled non-nesting partition stored as block position lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcDiagram {
    pub len: usize,
    pub blocks: Vec<ArcBlock>,
}

impl ArcDiagram {
    pub fn new(len: usize, mut blocks: Vec<ArcBlock>) -> Self {
        blocks.sort_by_key(|b| b.positions[0]);
        ArcDiagram { len, blocks }
    }

    /// Builds a diagram from a row of labels; equal labels form one block.
    pub fn from_labels(labels: &[i32]) -> Self {
        let mut groups: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        for (i, &l) in labels.iter().enumerate() {
            groups.entry(l).or_default().push(i);
        }
        let blocks = groups.into_iter().map(|(l, positions)| ArcBlock { positions, label: Some(l) }).collect();
        ArcDiagram::new(labels.len(), blocks)
    }

    pub fn label_row(&self) -> Vec<Option<i32>> {
        let mut row = vec![None; self.len];
        for b in &self.blocks {
            for &p in &b.positions {
                row[p] = b.label;
            }
        }
        row
    }

    /// Cut points `c` (a cut sits just before position `c`) not straddled by any block.
    pub fn cuts(&self) -> Vec<usize> {
        let mut crossed = vec![false; self.len + 1];
        for b in &self.blocks {
            let (lo, hi) = (b.positions[0], *b.positions.last().unwrap_or(&b.positions[0]));
            for c in crossed.iter_mut().take(hi + 1).skip(lo + 1) {
                *c = true;
            }
        }
        (0..=self.len).filter(|&c| !crossed[c]).collect()
    }

    /// Maximal interlinked pieces as half-open position ranges.
    pub fn pieces(&self) -> Vec<(usize, usize)> {
        self.cuts().windows(2).map(|w| (w[0], w[1])).collect()
    }

    pub fn is_interlinked(&self) -> bool {
        self.pieces().len() <= 1
    }

    /// Blocks inside `[lo, hi)`, shifted to start at 0.
    pub fn slice(&self, lo: usize, hi: usize) -> ArcDiagram {
        let blocks = self
            .blocks
            .iter()
            .filter(|b| b.positions.iter().all(|&p| p >= lo && p < hi))
            .map(|b| ArcBlock { positions: b.positions.iter().map(|p| p - lo).collect(), label: b.label })
            .collect();
        ArcDiagram::new(hi - lo, blocks)
    }

    /// Positions `-len/2..-1, 1..len/2` of a symmetric layout.
    pub fn centered_blocks(&self) -> Vec<Vec<i64>> {
        let h = (self.len / 2) as i64;
        self.blocks
            .iter()
            .map(|b| {
                b.positions.iter().map(|&p| if (p as i64) < h { p as i64 - h } else { p as i64 - h + 1 }).collect()
            })
            .collect()
    }
}

impl fmt::Display for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row: Vec<String> =
            self.label_row().iter().map(|l| l.map_or_else(|| "*".to_string(), |v| v.to_string())).collect();
        f.write_str(&row.join(" "))
    }
}

/// Joins every chain `x_i + s`, `x_i + s + 1`, ... of a sketch into one block.
pub fn to_arc_diagram(sk: &Sketch) -> Result<ArcDiagram> {
    if sk.kind == SketchKind::Reflection {
        return Err(Error::KindMismatch("reflection sketches have no arcs".into()));
    }
    let mut groups: BTreeMap<Option<i32>, Vec<usize>> = BTreeMap::new();
    for (i, l) in sk.letters.iter().enumerate() {
        let key = match l {
            Letter::Var { sub, .. } => Some(*sub),
            Letter::Bound(_) => None,
        };
        groups.entry(key).or_default().push(i);
    }
    let blocks = groups.into_iter().map(|(label, positions)| ArcBlock { positions, label }).collect();
    Ok(ArcDiagram::new(sk.len(), blocks))
}

/// Splits a symmetric diagram into its central interlinked part and the
/// part to the right of it (the left part is its mirror).
pub fn decompose_nnp(d: &ArcDiagram) -> (ArcDiagram, ArcDiagram) {
    let center = d.len / 2;
    let left = d.cuts().into_iter().filter(|&c| c <= center).max().unwrap_or(0);
    let right = d.len - left;
    (d.slice(left, right), d.slice(right, d.len))
}

/// Compartments as (first piece, last piece, positive) triples: each one runs
/// up to the piece holding the smallest remaining absolute label.
fn compartments(d: &ArcDiagram) -> Vec<(usize, usize, bool)> {
    let pieces = d.pieces();
    let row = d.label_row();
    let piece_min: Vec<u32> = pieces
        .iter()
        .map(|&(lo, hi)| row[lo..hi].iter().flatten().map(|l| l.unsigned_abs()).min().unwrap_or(u32::MAX))
        .collect();
    let mut out = Vec::new();
    let mut start = 0;
    while start < pieces.len() {
        let end = (start..pieces.len()).min_by_key(|&k| piece_min[k]).unwrap_or(start);
        let last = row[pieces[end].1 - 1];
        out.push((start, end, last.is_some_and(|l| l > 0)));
        start = end + 1;
    }
    out
}

pub fn compartment_count(d: &ArcDiagram) -> usize {
    compartments(d).len()
}

pub fn positive_compartments(d: &ArcDiagram) -> usize {
    compartments(d).iter().filter(|c| c.2).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sketch::enumerate::enumerate_m_sketches;
    use crate::sketch::Letter;

    fn v(sub: i32, sup: i32) -> Letter {
        Letter::var(sub, sup)
    }

    #[test]
    fn twelve_letter_arc_blocks() {
        let letters = vec![
            v(3, 0),
            v(2, 0),
            v(-1, -1),
            v(3, 1),
            v(1, 0),
            v(2, 1),
            v(-2, -1),
            v(-1, 0),
            v(-3, -1),
            v(1, 1),
            v(-2, 0),
            v(-3, 0),
        ];
        let sk = Sketch::new(SketchKind::Catalan { m: 1 }, 3, letters).unwrap();
        let d = to_arc_diagram(&sk).unwrap();
        assert_eq!(d.to_string(), "3 2 -1 3 1 2 -2 -1 -3 1 -2 -3");
        let blocks = d.centered_blocks();
        for b in [[-6, -3], [-5, -1], [-4, 2], [-2, 4], [1, 5], [3, 6]] {
            assert!(blocks.contains(&b.to_vec()), "{b:?}");
        }
        assert!(d.is_interlinked());
    }

    #[test]
    fn three_pieces_two_compartments() {
        let d = ArcDiagram::from_labels(&[1, 4, 1, 2, 4, 5, 2, 5, 6, 6, 3, 3]);
        assert_eq!(d.pieces(), vec![(0, 8), (8, 10), (10, 12)]);
        assert_eq!(compartment_count(&d), 2);
    }

    #[test]
    fn one_positive_compartment() {
        let d = ArcDiagram::from_labels(&[-1, 4, -1, -2, 4, 6, -2, 6, 8, 8, -3, -3]);
        assert_eq!(compartment_count(&d), 2);
        assert_eq!(positive_compartments(&d), 1);
    }

    #[test]
    fn decomposition_reassembles() {
        for sk in enumerate_m_sketches(2, 2) {
            let d = to_arc_diagram(&sk).unwrap();
            let (bounded, unbounded) = decompose_nnp(&d);
            assert!(bounded.is_interlinked());
            let u = unbounded.len;
            assert_eq!(bounded.len + 2 * u, d.len);
            let row = d.label_row();
            let mut rebuilt: Vec<Option<i32>> = unbounded.label_row().iter().rev().map(|l| l.map(|v| -v)).collect();
            rebuilt.extend(bounded.label_row());
            rebuilt.extend(unbounded.label_row());
            assert_eq!(rebuilt, row);
        }
    }

    #[test]
    fn smallest_cases() {
        let full = ArcDiagram::from_labels(&[1, -1, 1, -1]);
        let (b, u) = decompose_nnp(&full);
        assert_eq!((b.len, u.len), (4, 0));
        assert_eq!(positive_compartments(&u), 0);
        let split = ArcDiagram::from_labels(&[-1, -1, 1, 1]);
        let (b, u) = decompose_nnp(&split);
        assert_eq!((b.len, u.blocks.len()), (0, 1));
        assert_eq!(positive_compartments(&u), 1);
    }
}
