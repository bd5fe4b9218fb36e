//! Stepped-line drawing of a ternary word: `A → (1,0)`, `B → (1,1)`, `C → (0,1)`.

use std::fmt::Write;

use serde::Serialize;
use threeiet::subst::Morphism;
use threeiet::words::{Alphabet, Word};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Drawing {
    pub segments: usize,
    /// Width in pixels of the narrowest strip containing the stepped line of `σ(u)`.
    pub corridor_width: f64,
    pub unit_diagonal: f64,
    #[serde(skip)]
    pub svg: String,
}

fn path(steps: impl Iterator<Item = (i64, i64)>) -> Vec<(i64, i64)> {
    let mut at = (0, 0);
    let mut points = vec![at];
    for (dx, dy) in steps {
        at = (at.0 + dx, at.1 + dy);
        points.push(at);
    }
    points
}

fn binary_path(v: &Word) -> Vec<(i64, i64)> {
    path(
        v.letters()
            .iter()
            .map(|&l| if l == 0 { (1, 0) } else { (0, 1) }),
    )
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn convex_hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<(i64, i64)> = Vec::with_capacity(2 * pts.len());
    for pass in [pts.clone(), pts.iter().rev().copied().collect()] {
        let floor = hull.len();
        for p in pass {
            while hull.len() >= floor + 2
                && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

/// Minimum over directions of the width of the points' projection; attained
/// perpendicular to a hull edge.
fn strip_width(points: &[(i64, i64)]) -> f64 {
    let hull = convex_hull(points);
    if hull.len() < 3 {
        return 0.0;
    }
    (0..hull.len())
        .map(|i| {
            let (a, b) = (hull[i], hull[(i + 1) % hull.len()]);
            let len = (((b.0 - a.0).pow(2) + (b.1 - a.1).pow(2)) as f64).sqrt();
            let far = hull
                .iter()
                .map(|&p| cross(a, b, p).abs())
                .max()
                .unwrap_or(0);
            far as f64 / len
        })
        .fold(f64::INFINITY, f64::min)
}

pub fn render(u: &Word, unit: f64) -> Result<Drawing, String> {
    if u.alphabet() != &Alphabet::ternary() {
        return Err("the stepped line is defined for ternary words over {A,B,C}".into());
    }
    if !(unit.is_finite() && unit > 0.0) {
        return Err("width must be a positive number".into());
    }
    let main = path(u.letters().iter().map(|&l| match l {
        0 => (1, 0),
        1 => (1, 1),
        _ => (0, 1),
    }));
    let v = Morphism::sigma().apply(u).map_err(|e| e.to_string())?;
    let v_prime = Morphism::sigma_prime()
        .apply(u)
        .map_err(|e| e.to_string())?;
    let lower = binary_path(&v);
    let upper = binary_path(&v_prime);

    let (x_max, y_max) = main.last().copied().unwrap_or((0, 0));
    let margin = unit;
    let width = (x_max as f64) * unit + 2.0 * margin;
    let height = (y_max as f64) * unit + 2.0 * margin;
    let px = |(x, y): (i64, i64)| (margin + x as f64 * unit, height - margin - y as f64 * unit);
    let points = |pts: &[(i64, i64)]| {
        pts.iter()
            .map(|&p| {
                let (x, y) = px(p);
                format!("{x},{y}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    };

    let corridor_width = strip_width(&lower) * unit;
    let unit_diagonal = unit * std::f64::consts::SQRT_2;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let (ox, oy) = px((0, 0));
    let _ = writeln!(
        svg,
        r#"  <line class="axis" x1="{ox}" y1="{oy}" x2="{}" y2="{oy}" stroke="gray"/>"#,
        width - margin / 2.0
    );
    let _ = writeln!(
        svg,
        r#"  <line class="axis" x1="{ox}" y1="{oy}" x2="{ox}" y2="{}" stroke="gray"/>"#,
        margin / 2.0
    );
    if !u.is_empty() {
        let _ = writeln!(
            svg,
            r#"  <polyline class="corridor sigma" points="{}" fill="none" stroke="steelblue" stroke-dasharray="4 3"/>"#,
            points(&lower)
        );
        let _ = writeln!(
            svg,
            r#"  <polyline class="corridor sigma-prime" points="{}" fill="none" stroke="darkorange" stroke-dasharray="4 3"/>"#,
            points(&upper)
        );
        let _ = writeln!(
            svg,
            r#"  <polyline class="stepped-line" data-segments="{}" data-corridor-width="{corridor_width}" data-unit-diagonal="{unit_diagonal}" points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
            u.len(),
            points(&main)
        );
    }
    svg.push_str("</svg>\n");
    Ok(Drawing {
        segments: u.len(),
        corridor_width,
        unit_diagonal,
        svg,
    })
}
