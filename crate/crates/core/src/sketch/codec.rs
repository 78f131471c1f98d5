use super::words::{pointed_from_pair, sketch_from_pair, AbWord};
use super::{Boundary, Letter, SignedPerm, Sketch, SketchKind};
use crate::error::{Error, Result};

fn format_letter(l: Letter) -> String {
    match l {
        Letter::Var { sub, sup } => format!("a({sub},{sup})"),
        Letter::Bound(b) => match b {
            Boundary::NegThreeHalves => "a(-,-1.5)".into(),
            Boundary::NegHalf => "a(-,-0.5)".into(),
            Boundary::PosHalf => "a(+,0.5)".into(),
            Boundary::PosThreeHalves => "a(+,1.5)".into(),
        },
    }
}

/// `+4 +1 -3 +2 | -2 +3 -1 -4` for reflection sketches, `a(sub,sup)` tokens otherwise.
pub fn format_sketch(sk: &Sketch) -> String {
    let token = |l: &Letter| match (sk.kind, l) {
        (SketchKind::Reflection, Letter::Var { sub, .. }) => format!("{sub:+}"),
        _ => format_letter(*l),
    };
    let first: Vec<String> = sk.first_half().iter().map(token).collect();
    let second: Vec<String> = sk.second_half().iter().map(token).collect();
    format!("{} | {}", first.join(" "), second.join(" "))
}

fn parse_letter(tok: &str) -> Result<Letter> {
    let bad = || Error::Parse(format!("bad letter {tok:?}"));
    let inner = tok.strip_prefix("a(").and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
    let (a, b) = inner.split_once(',').ok_or_else(bad)?;
    let b = b.trim();
    match a.trim() {
        "-" | "+" => {
            let bound = match b {
                "-1.5" | "-3/2" => Boundary::NegThreeHalves,
                "-0.5" | "-1/2" => Boundary::NegHalf,
                "0.5" | "1/2" | "+0.5" => Boundary::PosHalf,
                "1.5" | "3/2" | "+1.5" => Boundary::PosThreeHalves,
                _ => return Err(bad()),
            };
            Ok(Letter::Bound(bound))
        }
        s => {
            let sub: i32 = s.parse().map_err(|_| bad())?;
            let sup: i32 = b.parse().map_err(|_| bad())?;
            if sub == 0 {
                return Err(bad());
            }
            Ok(Letter::var(sub, sup))
        }
    }
}

fn parse_perm(s: &str) -> Result<SignedPerm> {
    let entries = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i32>().map_err(|_| Error::Parse(format!("bad permutation entry {t:?}"))))
        .collect::<Result<Vec<i32>>>()?;
    SignedPerm::new(entries)
}

/// Parses any of the three text forms: letter tokens, signed reflection
/// entries, or the compact `word;perm` pair.
pub fn parse_sketch(s: &str) -> Result<Sketch> {
    let s = s.trim();
    if let Some((w, p)) = s.split_once(';') {
        let w: AbWord = w.trim().parse()?;
        let p = parse_perm(p)?;
        return if w.pointer.is_some() { pointed_from_pair(&w, &p) } else { sketch_from_pair(&w, &p) };
    }
    let tokens: Vec<&str> = s.split_whitespace().filter(|&t| t != "|").collect();
    if tokens.is_empty() {
        return Err(Error::Parse("empty sketch".into()));
    }
    if tokens[0].starts_with("a(") {
        let letters = tokens.iter().map(|t| parse_letter(t)).collect::<Result<Vec<Letter>>>()?;
        let kind = if letters.iter().any(|l| matches!(l, Letter::Bound(_))) {
            SketchKind::Pointed
        } else {
            let m = letters.iter().map(|l| match l {
                Letter::Var { sup, .. } => sup.unsigned_abs(),
                Letter::Bound(_) => 0,
            });
            SketchKind::Catalan { m: m.max().unwrap_or(1).max(1) }
        };
        let n = match kind {
            SketchKind::Pointed => letters.len().saturating_sub(4) / 4,
            SketchKind::Catalan { m } => letters.len() / (2 * (m as usize + 1)),
            SketchKind::Reflection => unreachable!(),
        };
        return Sketch::new(kind, n, letters);
    }
    let values = tokens
        .iter()
        .map(|t| t.parse::<i32>().map_err(|_| Error::Parse(format!("bad token {t:?}"))))
        .collect::<Result<Vec<i32>>>()?;
    let n = values.len() / 2;
    let sk = Sketch::reflection(&SignedPerm::new(values[n..].to_vec())?);
    if sk.letters.iter().map(|l| l.sub().unwrap_or(0)).collect::<Vec<_>>() != values {
        return Err(Error::InvalidSketch("first half is not the mirror of the second".into()));
    }
    Ok(sk)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sketch::enumerate::{enumerate_m_sketches, enumerate_pointed, enumerate_sketches, reflection_sketches};

    #[test]
    fn round_trips() {
        let mut all = enumerate_sketches(2);
        all.extend(enumerate_pointed(1));
        all.extend(enumerate_m_sketches(1, 3));
        all.extend(reflection_sketches(3));
        for sk in all {
            assert_eq!(parse_sketch(&format_sketch(&sk)).unwrap(), sk);
        }
    }

    #[test]
    fn compact_forms() {
        let sk = parse_sketch("abaaba;-3,1,-2").unwrap();
        assert_eq!(
            format_sketch(&sk),
            "a(-3,-1) a(-3,0) a(1,0) a(-2,-1) a(1,1) a(2,0) | a(-2,0) a(-1,-1) a(2,1) a(-1,0) a(3,0) a(3,1)"
        );
        let p = parse_sketch("aaab*ab; 2 -1").unwrap();
        assert_eq!(p.kind, SketchKind::Pointed);
        assert!(format_sketch(&p).starts_with("a(-,-1.5) a(2,0)"));
    }

    #[test]
    fn reflection_form() {
        let sk = parse_sketch("+4 +1 -3 +2 | -2 +3 -1 -4").unwrap();
        assert_eq!(sk.second_half_perm().0, vec![-2, 3, -1, -4]);
        assert_eq!(format_sketch(&sk), "+4 +1 -3 +2 | -2 +3 -1 -4");
        assert!(parse_sketch("+1 +2 | -1 -2").is_err());
        assert!(parse_sketch("a(1,0) a(1,0)").is_err());
        assert!(parse_sketch("").is_err());
    }
}
