//! Best-effort SVG drawings.
//!
//! The layout embeds the truncation (always a simple 3-regular map) with a
//! Tutte-style barycentric relaxation, then places each original vertex at
//! the centroid of its corner polygon and routes each edge through the two
//! truncation endpoints, which keeps loops and parallel edges visibly apart.

use crate::map::PlanarMap;

fn truncation_layout(t: &PlanarMap) -> Vec<(f64, f64)> {
    let sizes = t.face_sizes();
    let outer = (0..t.face_count())
        .max_by_key(|&f| sizes[f])
        .unwrap_or(0);
    let reps = t.face_reps();
    let boundary: Vec<usize> = t
        .face_orbit(reps[outer])
        .iter()
        .map(|&d| t.vertex_of(d))
        .collect();
    let nv = t.vertex_count();
    let mut pos = vec![(0.0f64, 0.0f64); nv];
    let mut fixed = vec![false; nv];
    let k = boundary.len() as f64;
    for (i, &v) in boundary.iter().enumerate() {
        let ang = 2.0 * std::f64::consts::PI * (i as f64) / k;
        pos[v] = (ang.cos(), ang.sin());
        fixed[v] = true;
    }
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for d in 0..t.dart_count() {
        nbrs[t.vertex_of(d)].push(t.vertex_of(t.alpha(d)));
    }
    for _ in 0..600 {
        for v in 0..nv {
            if fixed[v] || nbrs[v].is_empty() {
                continue;
            }
            let (mut x, mut y) = (0.0, 0.0);
            for &w in &nbrs[v] {
                x += pos[w].0;
                y += pos[w].1;
            }
            let n = nbrs[v].len() as f64;
            pos[v] = (x / n, y / n);
        }
    }
    pos
}

/// Render a sphere map to an SVG string.
pub fn to_svg(m: &PlanarMap) -> String {
    let t = m.truncate();
    let tpos = truncation_layout(&t);
    let corner = |d: usize| tpos[t.vertex_of(3 * d)];
    let mut vpos = vec![(0.0, 0.0); m.vertex_count()];
    for rep in m.vertex_reps() {
        let darts = m.vertex_orbit(rep);
        let (mut x, mut y) = (0.0, 0.0);
        for &d in &darts {
            let (cx, cy) = corner(d);
            x += cx;
            y += cy;
        }
        let n = darts.len() as f64;
        vpos[m.vertex_of(rep)] = (x / n, y / n);
    }
    let size = 640.0;
    let map = |(x, y): (f64, f64)| {
        (
            (x * 0.45 + 0.5) * size,
            (y * 0.45 + 0.5) * size,
        )
    };
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    for d in 0..m.dart_count() {
        if d > m.alpha(d) {
            continue;
        }
        let a = map(vpos[m.vertex_of(d)]);
        let c1 = map(corner(d));
        let c2 = map(corner(m.alpha(d)));
        let b = map(vpos[m.vertex_of(m.alpha(d))]);
        svg.push_str(&format!(
            "<path d=\"M {:.1} {:.1} C {:.1} {:.1}, {:.1} {:.1}, {:.1} {:.1}\" fill=\"none\" stroke=\"#333\" stroke-width=\"1.5\"/>\n",
            a.0, a.1, c1.0, c1.1, c2.0, c2.1, b.0, b.1
        ));
    }
    for &(x, y) in &vpos {
        let (px, py) = map((x, y));
        svg.push_str(&format!(
            "<circle cx=\"{px:.1}\" cy=\"{py:.1}\" r=\"4\" fill=\"#c22\"/>\n"
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use crate::named::{self, NamedGraphId};

    #[test]
    fn svg_smoke() {
        for id in [NamedGraphId::SixK2, NamedGraphId::Trifolium] {
            let m = named::named_graph(id).unwrap();
            let svg = super::to_svg(&m);
            assert!(svg.starts_with("<svg"));
            assert!(svg.contains("<path"));
        }
    }
}
