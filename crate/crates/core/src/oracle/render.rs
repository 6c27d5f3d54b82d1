//! SVG drawings of 4-plat diagrams.

use std::fmt::Write as _;

use super::diagram::euclid_terms;

const STEP: f64 = 40.0;
const GAP: f64 = 30.0;
const MARGIN: f64 = 30.0;

/// Continued fraction of `p/q` with an odd number of terms, as the 4-plat
/// normal form needs.
fn odd_terms(p: i64, q: i64) -> Vec<i64> {
    let mut t = euclid_terms(p, q);
    if t.len().is_multiple_of(2) {
        if let Some(last) = t.pop() {
            let s = last.signum();
            t.push(last - s);
            t.push(s);
        }
    }
    t
}

/// Plat closure of `σ₂^{a₁} σ₁^{-a₂} σ₂^{a₃} …` on four strands, drawn
/// left to right.
pub fn fourplat_svg(p: i64, q: i64) -> String {
    let terms = odd_terms(p, q);
    let columns: Vec<(usize, bool)> = terms
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| {
            let (pair, positive) = if i % 2 == 0 { (1, a > 0) } else { (0, a < 0) };
            std::iter::repeat_n((pair, positive), a.unsigned_abs() as usize)
        })
        .collect();
    let y = |s: usize| MARGIN + GAP * s as f64 + GAP / 2.0;
    let width = 2.0 * MARGIN + STEP * (columns.len() as f64 + 2.0);
    let height = 2.0 * MARGIN + 4.0 * GAP;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(svg, r#"<g fill="none" stroke="black" stroke-width="3" stroke-linecap="round">"#);
    let x0 = MARGIN + STEP;
    let x_end = x0 + STEP * columns.len() as f64;
    for (a, b) in [(0, 1), (2, 3)] {
        let r = (y(b) - y(a)) / 2.0;
        let _ = writeln!(svg, r#"<path d="M {x0} {} A {r} {r} 0 0 0 {x0} {}"/>"#, y(a), y(b));
        let _ = writeln!(svg, r#"<path d="M {x_end} {} A {r} {r} 0 0 1 {x_end} {}"/>"#, y(a), y(b));
    }
    for (i, &(pair, positive)) in columns.iter().enumerate() {
        let xa = x0 + STEP * i as f64;
        let xb = xa + STEP;
        for s in 0..4 {
            if s != pair && s != pair + 1 {
                let _ = writeln!(svg, r#"<path d="M {xa} {} L {xb} {}"/>"#, y(s), y(s));
            }
        }
        let (top, bottom) = (y(pair), y(pair + 1));
        let (over_from, over_to, under_from, under_to) =
            if positive { (bottom, top, top, bottom) } else { (top, bottom, bottom, top) };
        let _ = writeln!(svg, r#"<path d="M {xa} {over_from} L {xb} {over_to}"/>"#);
        let xm = (xa + xb) / 2.0;
        let ym = (top + bottom) / 2.0;
        let cut = 0.3;
        let ux1 = xa + (xm - xa) * (1.0 - cut);
        let uy1 = under_from + (ym - under_from) * (1.0 - cut);
        let ux2 = xb - (xb - xm) * (1.0 - cut);
        let uy2 = under_to - (under_to - ym) * (1.0 - cut);
        let _ = writeln!(svg, r#"<path d="M {xa} {under_from} L {ux1} {uy1}"/>"#);
        let _ = writeln!(svg, r#"<path d="M {ux2} {uy2} L {xb} {under_to}"/>"#);
    }
    svg.push_str("</g>\n</svg>\n");
    svg
}
