//! Local rewrites on maps: replacing an edge by a bundle of parallel strands,
//! optionally with loops inserted in the 2-gonal gaps between strands.
//!
//! This is the engine behind both the digon insertion of the enumeration
//! pipeline (strands only) and the unigon schemes (a loop in a gap turns the
//! 2-gon into a 1-gon plus a 3-gon).

use crate::map::{Dart, MapError, PlanarMap};

/// Edges of a map indexed 0..E, each as `(d, twin(d))` with `d < twin(d)`.
pub struct EdgeList {
    pub pairs: Vec<(Dart, Dart)>,
    pub edge_of_dart: Vec<usize>,
}

pub fn edge_list(m: &PlanarMap) -> EdgeList {
    let mut pairs = Vec::with_capacity(m.edge_count());
    let mut edge_of_dart = vec![usize::MAX; m.dart_count()];
    for d in 0..m.dart_count() {
        let t = m.alpha(d);
        if d < t {
            edge_of_dart[d] = pairs.len();
            edge_of_dart[t] = pairs.len();
            pairs.push((d, t));
        }
    }
    EdgeList {
        pairs,
        edge_of_dart,
    }
}

/// A loop inserted in gap `gap` (between strands `gap` and `gap+1`) of an edge
/// bundle, at the endpoint given by `end` (0 = the `d` side of the edge pair,
/// 1 = the twin side).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LoopSpec {
    pub edge: usize,
    pub gap: usize,
    pub end: u8,
}

/// Replace every edge `e` by `strands[e]` parallel strands and insert the given
/// loops into the gaps. `strands[e] == 1` leaves the edge alone.
pub fn decorate(
    m: &PlanarMap,
    strands: &[usize],
    loops: &[LoopSpec],
) -> Result<PlanarMap, MapError> {
    let el = edge_list(m);
    assert_eq!(strands.len(), el.pairs.len());
    // loops_at[edge][end] = gaps carrying a loop, ascending
    let mut loops_at: Vec<[Vec<usize>; 2]> = vec![[Vec::new(), Vec::new()]; el.pairs.len()];
    for l in loops {
        assert!(l.gap + 1 < strands[l.edge], "loop gap out of range");
        loops_at[l.edge][l.end as usize].push(l.gap);
    }
    for per_edge in &mut loops_at {
        per_edge[0].sort_unstable();
        per_edge[1].sort_unstable();
    }

    let total_darts: usize = strands.iter().map(|&s| 2 * s).sum::<usize>() + 2 * loops.len();
    let mut twin = vec![usize::MAX; total_darts];
    let mut next = vec![usize::MAX; total_darts];
    // strand_dart[edge][strand] = (dart at end 0, dart at end 1)
    let mut strand_dart: Vec<Vec<(usize, usize)>> = strands
        .iter()
        .map(|&s| vec![(usize::MAX, usize::MAX); s])
        .collect();

    let mut id = 0;
    for vrep in m.vertex_reps() {
        let start = id;
        for d in m.vertex_orbit(vrep) {
            let e = el.edge_of_dart[d];
            let end: usize = if el.pairs[e].0 == d { 0 } else { 1 };
            let s = strands[e];
            for pos in 0..s {
                let strand = if end == 0 { pos } else { s - 1 - pos };
                if end == 0 {
                    strand_dart[e][strand].0 = id;
                } else {
                    strand_dart[e][strand].1 = id;
                }
                id += 1;
                // the gap following this strand in local order
                let gap_here = if end == 0 {
                    Some(strand)
                } else {
                    strand.checked_sub(1)
                };
                if let Some(g) = gap_here {
                    if g + 1 < s && loops_at[e][end].contains(&g) {
                        twin[id] = id + 1;
                        twin[id + 1] = id;
                        id += 2;
                    }
                }
            }
        }
        for k in start..id {
            next[k] = if k + 1 < id { k + 1 } else { start };
        }
    }
    debug_assert_eq!(id, total_darts);
    for e in 0..el.pairs.len() {
        for &(d0, d1) in &strand_dart[e] {
            twin[d0] = d1;
            twin[d1] = d0;
        }
    }
    PlanarMap::build(twin, next)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn doubling_theta_gives_six_k2() {
        let theta = named::theta_map();
        let m = decorate(&theta, &[2, 2, 2], &[]).unwrap();
        let six = named::named_graph(named::NamedGraphId::SixK2).unwrap();
        assert!(m.is_isomorphic(&six, true));
    }

    #[test]
    fn loop_in_gap_makes_one_and_three_gon() {
        // double one edge of the theta graph and put a loop in its gap: the
        // 2-gon splits into a 1-gon and a 3-gon
        let theta = named::theta_map();
        let m = decorate(
            &theta,
            &[3, 2, 1],
            &[LoopSpec {
                edge: 0,
                gap: 0,
                end: 0,
            }],
        )
        .unwrap();
        let p = m.p_vector();
        assert_eq!(p.p1(), 1);
        assert!(p.p3() >= 1);
    }
}
