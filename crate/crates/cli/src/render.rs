use coxcat::sketch::{to_arc_diagram, to_lattice_path, Boundary, Letter, Sketch};
use coxcat::Result;
use std::fmt::Write;

const STEP: f64 = 40.0;
const MARGIN: f64 = 30.0;

fn label_text(l: &Letter) -> String {
    match l {
        Letter::Var { sub, .. } => sub.to_string(),
        Letter::Bound(b) => match b {
            Boundary::NegThreeHalves => "-3/2",
            Boundary::NegHalf => "-1/2",
            Boundary::PosHalf => "1/2",
            Boundary::PosThreeHalves => "3/2",
        }
        .to_string(),
    }
}

fn svg_open(width: f64, height: f64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    )
}

/// Dots and labels on a baseline, one semicircle above it per consecutive
/// pair of a block, and a blue line through the center.
pub fn arc_svg(sk: &Sketch) -> Result<String> {
    let d = to_arc_diagram(sk)?;
    let widest = d.blocks.iter().flat_map(|b| b.positions.windows(2).map(|w| w[1] - w[0])).max().unwrap_or(1) as f64;
    let width = 2.0 * MARGIN + STEP * (d.len.max(1) - 1) as f64;
    let base = MARGIN + widest * STEP / 2.0;
    let height = base + 2.0 * MARGIN;
    let x = |i: usize| MARGIN + STEP * i as f64;
    let mut s = svg_open(width, height);
    let _ = writeln!(
        s,
        "  <line x1=\"{}\" y1=\"{base}\" x2=\"{}\" y2=\"{base}\" stroke=\"black\" stroke-width=\"1\"/>",
        x(0) - MARGIN / 2.0,
        x(d.len.saturating_sub(1)) + MARGIN / 2.0
    );
    let mid = (x(0) + x(d.len.saturating_sub(1))) / 2.0;
    let _ = writeln!(
        s,
        "  <line class=\"center\" x1=\"{mid}\" y1=\"{}\" x2=\"{mid}\" y2=\"{}\" stroke=\"blue\" stroke-width=\"1.5\"/>",
        MARGIN / 2.0,
        height - MARGIN / 2.0
    );
    for b in &d.blocks {
        for w in b.positions.windows(2) {
            let r = (x(w[1]) - x(w[0])) / 2.0;
            let _ = writeln!(
                s,
                "  <path class=\"arc\" d=\"M {} {base} A {r} {r} 0 0 1 {} {base}\" fill=\"none\" stroke=\"black\"/>",
                x(w[0]),
                x(w[1])
            );
        }
    }
    for (i, l) in sk.letters.iter().enumerate() {
        let _ = writeln!(s, "  <circle cx=\"{}\" cy=\"{base}\" r=\"3\" fill=\"black\"/>", x(i));
        let _ = writeln!(
            s,
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{}</text>",
            x(i),
            base + 20.0,
            label_text(l)
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// Up and down steps from the origin, labels on the first n up steps and
/// the pointed step in red.
pub fn path_svg(sk: &Sketch) -> Result<String> {
    let p = to_lattice_path(sk)?;
    let heights: Vec<i64> = std::iter::once(0).chain(p.heights()).collect();
    let top = *heights.iter().max().unwrap_or(&0) as f64;
    let bottom = *heights.iter().min().unwrap_or(&0) as f64;
    let width = 2.0 * MARGIN + STEP * p.steps.len() as f64;
    let height = 2.0 * MARGIN + STEP * (top - bottom);
    let pt = |i: usize| (MARGIN + STEP * i as f64, MARGIN + STEP * (top - heights[i] as f64));
    let mut s = svg_open(width, height);
    let axis = MARGIN + STEP * top;
    let _ = writeln!(
        s,
        "  <line x1=\"{}\" y1=\"{axis}\" x2=\"{}\" y2=\"{axis}\" stroke=\"blue\" stroke-width=\"1\"/>",
        MARGIN,
        width - MARGIN
    );
    let mut ups = 0;
    for i in 0..p.steps.len() {
        let (x1, y1) = pt(i);
        let (x2, y2) = pt(i + 1);
        let color = if p.pointer == Some(i) { "red" } else { "black" };
        let _ = writeln!(
            s,
            "  <line class=\"step\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"{color}\" stroke-width=\"2\"/>"
        );
        if p.steps[i] {
            if let Some(l) = p.labels.get(ups) {
                let _ = writeln!(
                    s,
                    "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"end\">{l}</text>",
                    (x1 + x2) / 2.0 - 4.0,
                    (y1 + y2) / 2.0 - 4.0
                );
            }
            ups += 1;
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}

pub fn arc_text(sk: &Sketch) -> Result<String> {
    let d = to_arc_diagram(sk)?;
    Ok(format!("{sk}\n{d}\n"))
}

pub fn path_text(sk: &Sketch) -> Result<String> {
    let p = to_lattice_path(sk)?;
    let labels: Vec<String> = p.labels.iter().map(|l| format!("{l:+}")).collect();
    let mut s = format!("{}\nlabels: {}\n", p.step_string(), labels.join(" "));
    if let Some(k) = p.pointer {
        let _ = writeln!(s, "pointer: {k}");
    }
    Ok(s)
}
