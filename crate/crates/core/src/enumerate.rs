//! Exhaustive enumeration of ({1,2,3},6)-spheres.
//!
//! The pipeline follows the reduction to 3-regular spheres: enumerate the dual
//! triangulations (degrees 3..6, parallel edges allowed, loopless), then
//! decorate their edges with parallel strands and loop gadgets so that every
//! vertex reaches degree six. Exceptional graphs and the five infinite series
//! are injected separately. An independent brute-force search over rotation
//! systems cross-validates the pipeline at small sizes.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::map::PlanarMap;
use crate::named;
use crate::surgery::{decorate, edge_list, LoopSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("brute-force bound {0} too large (max 8)")]
    BoundTooLarge(usize),
}

/// Request for a census run.
#[derive(Debug, Clone)]
pub struct EnumerationRequest {
    pub max_n: usize,
    pub p1_filter: Option<usize>,
    /// count up to reflection (the convention of the published table)
    pub dedup_mirror: bool,
}

impl EnumerationRequest {
    pub fn new(max_n: usize) -> Self {
        EnumerationRequest {
            max_n,
            p1_filter: None,
            dedup_mirror: true,
        }
    }
}

// ---------------------------------------------------------------------------
// exhaustive rotation-system search
// ---------------------------------------------------------------------------

struct SearchRules {
    max_face: usize,
    /// closures of size 1 and 2 permitted (with the curvature budget)
    allow_small: bool,
    allow_loops: bool,
}

struct Searcher {
    degrees: Vec<usize>,
    start: Vec<usize>,
    sigma: Vec<usize>,
    rules: SearchRules,
    twin: Vec<Option<usize>>,
    head: Vec<usize>,
    tail: Vec<usize>,
    len: Vec<usize>,
    c1: usize,
    c2: usize,
    out: Vec<PlanarMap>,
}

enum LinkUndo {
    Closure,
    Join { s_a: usize, e_b: usize, old_len: usize },
}

impl Searcher {
    fn new(degrees: Vec<usize>, rules: SearchRules) -> Searcher {
        let mut start = Vec::with_capacity(degrees.len());
        let mut acc = 0;
        for &d in &degrees {
            start.push(acc);
            acc += d;
        }
        let mut sigma = vec![0; acc];
        for (v, &d) in degrees.iter().enumerate() {
            for i in 0..d {
                sigma[start[v] + i] = start[v] + (i + 1) % d;
            }
        }
        let n = acc;
        Searcher {
            degrees,
            start,
            sigma,
            rules,
            twin: vec![None; n],
            head: (0..n).collect(),
            tail: (0..n).collect(),
            len: vec![1; n],
            c1: 0,
            c2: 0,
            out: Vec::new(),
        }
    }

    fn vertex_of(&self, d: usize) -> usize {
        match self.start.binary_search(&d) {
            Ok(v) => v,
            Err(v) => v - 1,
        }
    }

    /// try to add the face link x -> y; None when pruned
    fn add_link(&mut self, x: usize, y: usize) -> Option<LinkUndo> {
        let s = self.head[x];
        if s == y {
            // closing a face of len[s] darts
            let size = self.len[s];
            if size > self.rules.max_face {
                return None;
            }
            if size < 3 {
                if !self.rules.allow_small {
                    return None;
                }
                let (c1, c2) = (
                    self.c1 + usize::from(size == 1),
                    self.c2 + usize::from(size == 2),
                );
                if 2 * c1 + c2 > 6 {
                    return None;
                }
                self.c1 = c1;
                self.c2 = c2;
            }
            Some(LinkUndo::Closure)
        } else {
            let e = self.tail[y];
            let joined = self.len[s] + self.len[y];
            if joined > self.rules.max_face {
                return None;
            }
            let old_len = self.len[s];
            self.len[s] = joined;
            self.tail[s] = e;
            self.head[e] = s;
            Some(LinkUndo::Join { s_a: s, e_b: e, old_len })
        }
    }

    fn undo_link(&mut self, x: usize, y: usize, undo: LinkUndo) {
        match undo {
            LinkUndo::Closure => {
                let size = self.len[self.head[x]];
                if size == 1 {
                    self.c1 -= 1;
                } else if size == 2 {
                    self.c2 -= 1;
                }
            }
            LinkUndo::Join { s_a, e_b, old_len } => {
                self.len[s_a] = old_len;
                self.tail[s_a] = x;
                self.head[e_b] = y;
            }
        }
    }

    fn run(mut self) -> Vec<PlanarMap> {
        self.dfs();
        self.out
    }

    fn dfs(&mut self) {
        let a = match self.twin.iter().position(|t| t.is_none()) {
            Some(a) => a,
            None => {
                self.emit();
                return;
            }
        };
        // candidates: unassigned darts at touched vertices, plus the first
        // dart of the lowest untouched vertex of each degree
        let mut seen_untouched_degree: Vec<usize> = Vec::new();
        let mut candidates: Vec<usize> = Vec::new();
        let va = self.vertex_of(a);
        for v in 0..self.degrees.len() {
            let s = self.start[v];
            let d = self.degrees[v];
            let touched = v == va || (s..s + d).any(|x| self.twin[x].is_some());
            if touched {
                for x in s..s + d {
                    if self.twin[x].is_none() && x != a {
                        candidates.push(x);
                    }
                }
            } else if !seen_untouched_degree.contains(&d) {
                seen_untouched_degree.push(d);
                candidates.push(s);
            }
        }
        for b in candidates {
            if b == a || self.twin[b].is_some() {
                continue;
            }
            if !self.rules.allow_loops && self.vertex_of(a) == self.vertex_of(b) {
                continue;
            }
            // inline assign with proper undo bookkeeping
            self.twin[a] = Some(b);
            self.twin[b] = Some(a);
            let ya = self.sigma[b];
            if let Some(u1) = self.add_link(a, ya) {
                let yb = self.sigma[a];
                if let Some(u2) = self.add_link(b, yb) {
                    self.dfs();
                    self.undo_link(b, yb, u2);
                }
                self.undo_link(a, ya, u1);
            }
            self.twin[a] = None;
            self.twin[b] = None;
        }
    }

    fn emit(&mut self) {
        if self.rules.allow_small && 2 * self.c1 + self.c2 != 6 {
            return;
        }
        let twin: Vec<usize> = self.twin.iter().map(|t| t.unwrap()).collect();
        if let Ok(m) = PlanarMap::build(twin, self.sigma.clone()) {
            self.out.push(m);
        }
    }
}

fn dedup_by_code(maps: Vec<PlanarMap>, mirror: bool) -> Vec<PlanarMap> {
    let mut by_code: BTreeMap<Vec<u8>, PlanarMap> = BTreeMap::new();
    for m in maps {
        by_code.entry(m.canonical_code(mirror)).or_insert(m);
    }
    by_code.into_values().collect()
}

/// Independent oracle: all ({1,2,3},6)-spheres with `n` vertices and `p1`
/// 1-gons, by exhaustive search over rotation systems. Deduplicated up to
/// reflection, sorted by canonical code.
pub fn brute_force_oracle(n: usize, p1: usize) -> Result<Vec<PlanarMap>, EnumerateError> {
    if n > 8 {
        return Err(EnumerateError::BoundTooLarge(n));
    }
    let searcher = Searcher::new(
        vec![6; n],
        SearchRules {
            max_face: 3,
            allow_small: true,
            allow_loops: true,
        },
    );
    let all = searcher.run();
    let filtered: Vec<PlanarMap> = all
        .into_iter()
        .filter(|m| m.is_sphere_123_6() && m.p_vector().p1() == p1)
        .collect();
    Ok(dedup_by_code(filtered, true))
}

/// All loopless sphere triangulations (parallel edges allowed, degrees 2..6)
/// on `v` vertices, by exhaustive search. Used to validate the growth
/// procedure at small sizes.
pub fn triangulations_brute(v: usize) -> Vec<PlanarMap> {
    let mut out = Vec::new();
    let e = 3 * v as i64 - 6;
    if e < 3 {
        return out;
    }
    // non-increasing degree sequences with entries 2..=6 summing to 2E
    let mut seq = Vec::new();
    gen_degree_sequences(2 * e as usize, v, 6, &mut seq, &mut |degrees| {
        let searcher = Searcher::new(
            degrees.to_vec(),
            SearchRules {
                max_face: 3,
                allow_small: false,
                allow_loops: false,
            },
        );
        out.extend(searcher.run());
    });
    dedup_by_code(out, true)
}

fn gen_degree_sequences(
    remaining: usize,
    slots: usize,
    max: usize,
    acc: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if slots == 0 {
        if remaining == 0 {
            f(acc);
        }
        return;
    }
    let lo = 2;
    for d in (lo..=max.min(remaining)).rev() {
        if remaining - d > (slots - 1) * d {
            continue;
        }
        if remaining - d < (slots - 1) * lo {
            continue;
        }
        acc.push(d);
        gen_degree_sequences(remaining - d, slots - 1, d, acc, f);
        acc.pop();
    }
}

// ---------------------------------------------------------------------------
// triangulation growth by vertex splitting
// ---------------------------------------------------------------------------

/// Split vertex `v` (given by two of its darts `a`, `b`) into an edge; the
/// inverse of edge contraction in a triangulation. `a == b` produces the
/// degenerate split whose two new triangles share the apex edge (a degree-2
/// vertex inside a doubled edge).
fn vertex_split(m: &PlanarMap, a: usize, b: usize) -> Option<PlanarMap> {
    debug_assert_eq!(m.vertex_of(a), m.vertex_of(b));
    if a == b {
        return vertex_split_degenerate(m, a);
    }
    let n = m.dart_count();
    // new darts: m1, m2, a2, xa2, b2, yb2
    let (m1, m2, a2, xa2, b2, yb2) = (n, n + 1, n + 2, n + 3, n + 4, n + 5);
    let mut twin: Vec<usize> = m.twin_slice().to_vec();
    twin.extend_from_slice(&[m2, m1, xa2, a2, yb2, b2]);

    // rebuild rotations
    let mut next = vec![usize::MAX; n + 6];
    let arc = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut d = m.sigma(from);
        while d != to {
            out.push(d);
            d = m.sigma(d);
        }
        out
    };
    let t_arc = arc(a, b);
    let s_arc = arc(b, a);
    let mut set_cycle = |darts: &[usize]| {
        for i in 0..darts.len() {
            next[darts[i]] = darts[(i + 1) % darts.len()];
        }
    };
    let mut w1 = vec![m1, a];
    w1.extend_from_slice(&t_arc);
    w1.push(b);
    // b moves to w1's end only when T is its prefix; w1 rotation: m1, a, T..., b
    set_cycle(&w1);
    let mut w2 = vec![m2, b2];
    w2.extend_from_slice(&s_arc);
    w2.push(a2);
    set_cycle(&w2);
    // x: insert xa2 right after alpha(a); y: insert yb2 right before alpha(b)
    let aa = m.alpha(a);
    let ab = m.alpha(b);
    for d in 0..n {
        if next[d] != usize::MAX {
            continue;
        }
        next[d] = m.sigma(d);
    }
    // apply the two insertions (order matters when aa and ab share a vertex)
    let after_aa = next[aa];
    next[aa] = xa2;
    next[xa2] = after_aa;
    let mut before_ab = ab;
    while next[before_ab] != ab {
        before_ab = next[before_ab];
    }
    next[before_ab] = yb2;
    next[yb2] = ab;

    PlanarMap::build(twin, next).ok()
}

/// Degenerate split at dart `a` of vertex v: v keeps its other darts plus two
/// parallel copies of the `a`-edge, and a new degree-2 vertex rides on `a`.
fn vertex_split_degenerate(m: &PlanarMap, a: usize) -> Option<PlanarMap> {
    let n = m.dart_count();
    let (m1, m2, p1, ap1, p2, ap2) = (n, n + 1, n + 2, n + 3, n + 4, n + 5);
    let mut twin: Vec<usize> = m.twin_slice().to_vec();
    twin.extend_from_slice(&[m2, m1, ap1, p1, ap2, p2]);
    let mut next = vec![usize::MAX; n + 6];
    for d in 0..n {
        next[d] = m.sigma(d);
    }
    // w1 = [m1, a]
    next[m1] = a;
    next[a] = m1;
    // w2 = [m2, p1, sigma(a), ..., sigma^-1(a), p2]
    let rest_first = m.sigma(a);
    let rest_last = m.sigma_inv(a);
    next[m2] = p1;
    if rest_first == a {
        // v had degree 1: impossible in a triangulation
        return None;
    }
    next[p1] = rest_first;
    next[rest_last] = p2;
    next[p2] = m2;
    // x: [ ..., alpha(p1), alpha(a), alpha(p2), ... ]
    let aa = m.alpha(a);
    let mut before_aa = aa;
    while next[before_aa] != aa {
        before_aa = next[before_aa];
    }
    next[before_aa] = ap1;
    next[ap1] = aa;
    let after_aa = next[aa];
    next[aa] = ap2;
    next[ap2] = after_aa;
    PlanarMap::build(twin, next).ok()
}

/// All loopless multi-triangulations with degrees in [2, max_deg], grown from
/// the triangle by vertex splitting, indexed by vertex count (index = V).
pub fn grow_triangulations(max_v: usize, max_deg: usize) -> Vec<Vec<PlanarMap>> {
    let mut levels: Vec<Vec<PlanarMap>> = vec![Vec::new(); max_v + 1];
    if max_v < 3 {
        return levels;
    }
    levels[3] = vec![named::triangle_map()];
    for v in 3..max_v {
        let children: Vec<PlanarMap> = levels[v]
            .par_iter()
            .flat_map_iter(|m| {
                let mut out = Vec::new();
                for rep in m.vertex_reps() {
                    let darts = m.vertex_orbit(rep);
                    for i in 0..darts.len() {
                        for jj in i..darts.len() {
                            if let Some(child) = vertex_split(m, darts[i], darts[jj]) {
                                if child.vertex_degrees().iter().all(|&d| d <= max_deg) {
                                    out.push(child);
                                }
                            }
                        }
                    }
                }
                out
            })
            .collect();
        levels[v + 1] = dedup_by_code(children, true);
    }
    levels
}

// ---------------------------------------------------------------------------
// decorations: digons and unigon gadgets on a dual triangulation
// ---------------------------------------------------------------------------

/// All ways to decorate the triangulation `delta` into a ({1,2,3},6)-sphere
/// with exactly `p1` 1-gons: every edge may gain parallel strands, and the
/// 2-gonal gaps between strands may receive a loop at either corner.
pub fn decorations(delta: &PlanarMap, p1: usize) -> Vec<PlanarMap> {
    let el = edge_list(delta);
    let degrees = delta.vertex_degrees();
    if degrees.iter().any(|&d| d > 6) {
        return Vec::new();
    }
    let mut defect: Vec<i64> = degrees.iter().map(|&d| 6 - d as i64).collect();
    let mut strands = vec![1usize; el.pairs.len()];
    let mut loops: Vec<LoopSpec> = Vec::new();
    let mut out = Vec::new();
    decorate_dfs(
        delta,
        &el,
        0,
        p1,
        &mut defect,
        &mut strands,
        &mut loops,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn decorate_dfs(
    delta: &PlanarMap,
    el: &crate::surgery::EdgeList,
    edge: usize,
    loops_left: usize,
    defect: &mut Vec<i64>,
    strands: &mut Vec<usize>,
    loops: &mut Vec<LoopSpec>,
    out: &mut Vec<PlanarMap>,
) {
    if edge == el.pairs.len() {
        if loops_left == 0 && defect.iter().all(|&d| d == 0) {
            if let Ok(m) = decorate(delta, strands, loops) {
                if m.is_sphere_123_6() {
                    out.push(m);
                }
            }
        }
        return;
    }
    let (d0, d1) = el.pairs[edge];
    let (u, w) = (delta.vertex_of(d0), delta.vertex_of(d1));
    let max_extra = 6.min(defect[u].min(defect[w]).max(0)) as usize;
    for extra in 0..=max_extra {
        defect[u] -= extra as i64;
        defect[w] -= extra as i64;
        strands[edge] = extra + 1;
        // choose loop placements in the `extra` gaps: 0 none, 1 at end0, 2 at end1
        let mut gaps = vec![0u8; extra];
        loop {
            let mut ok = true;
            let mut used = 0;
            let (mut lu, mut lw) = (0i64, 0i64);
            for (g, &c) in gaps.iter().enumerate() {
                let _ = g;
                match c {
                    1 => {
                        lu += 2;
                        used += 1;
                    }
                    2 => {
                        lw += 2;
                        used += 1;
                    }
                    _ => {}
                }
            }
            if used > loops_left || lu > defect[u] || lw > defect[w] {
                ok = false;
            }
            if ok {
                defect[u] -= lu;
                defect[w] -= lw;
                let before = loops.len();
                for (g, &c) in gaps.iter().enumerate() {
                    if c > 0 {
                        loops.push(LoopSpec {
                            edge,
                            gap: g,
                            end: c - 1,
                        });
                    }
                }
                decorate_dfs(
                    delta,
                    el,
                    edge + 1,
                    loops_left - used,
                    defect,
                    strands,
                    loops,
                    out,
                );
                loops.truncate(before);
                defect[u] += lu;
                defect[w] += lw;
            }
            // advance the gap assignment
            let mut pos = 0;
            loop {
                if pos == gaps.len() {
                    break;
                }
                if gaps[pos] < 2 {
                    gaps[pos] += 1;
                    break;
                }
                gaps[pos] = 0;
                pos += 1;
            }
            if pos == gaps.len() {
                break;
            }
        }
        strands[edge] = 1;
        defect[u] += extra as i64;
        defect[w] += extra as i64;
    }
}

/// All ({2,3},6)-spheres obtained from a ({3,4,5,6},3)-sphere base by digon
/// insertion (no 1-gons).
pub fn insert_digons(base: &PlanarMap) -> Vec<PlanarMap> {
    dedup_by_code(decorations(&base.dual(), 0), true)
}

/// All spheres with `p1 = i` 1-gons obtained from the dual of a base by the
/// two splitting schemes. Exceptional graphs and series members are injected
/// by the census, not here.
pub fn insert_unigons(base_dual: &PlanarMap, i: usize) -> Vec<PlanarMap> {
    assert!((1..=3).contains(&i));
    dedup_by_code(decorations(base_dual, i), true)
}

/// All ({3,4,5,6},3)-spheres with at most `max_faces` faces, exactly once up
/// to reflection, in canonical-code order.
pub fn enumerate_base(max_faces: usize) -> Vec<PlanarMap> {
    let levels = grow_triangulations(max_faces, 6);
    let mut out = Vec::new();
    for level in levels {
        for delta in level {
            if delta.vertex_degrees().iter().all(|&d| (3..=6).contains(&d)) {
                out.push(delta.dual());
            }
        }
    }
    out.sort_by_key(|m| m.canonical_code(true));
    out
}

/// Full census up to `max_n`, grouped by (n, p1), each class sorted by
/// canonical code.
pub struct Census {
    pub by_cell: BTreeMap<(usize, usize), Vec<PlanarMap>>,
    pub dedup_mirror: bool,
}

impl Census {
    pub fn count(&self, n: usize, p1: usize) -> usize {
        self.by_cell.get(&(n, p1)).map_or(0, |v| v.len())
    }

    pub fn counts_row(&self, n: usize) -> [usize; 4] {
        [
            self.count(n, 0),
            self.count(n, 1),
            self.count(n, 2),
            self.count(n, 3),
        ]
    }

    pub fn all(&self) -> impl Iterator<Item = (&(usize, usize), &PlanarMap)> {
        self.by_cell
            .iter()
            .flat_map(|(k, v)| v.iter().map(move |m| (k, m)))
    }
}

pub fn census(req: &EnumerationRequest) -> Census {
    let levels = grow_triangulations(req.max_n, 6);
    let mut cells: BTreeMap<(usize, usize), Vec<PlanarMap>> = BTreeMap::new();
    let mut push = |m: PlanarMap| {
        let n = m.vertex_count();
        let p1 = m.p_vector().p1();
        if n > req.max_n {
            return;
        }
        if let Some(want) = req.p1_filter {
            if p1 != want {
                return;
            }
        }
        cells.entry((n, p1)).or_default().push(m);
    };

    // exceptional graphs
    push(named::named_graph(named::NamedGraphId::SixK2).unwrap());
    push(named::named_graph(named::NamedGraphId::ThreeK3).unwrap());
    push(named::named_graph(named::NamedGraphId::Trifolium).unwrap());
    push(named::named_graph(named::NamedGraphId::T2).unwrap());
    // series members
    for n in 1..=req.max_n {
        for m in named::series_members_at(n) {
            push(m);
        }
    }
    // scheme products over all dual triangulations
    let deltas: Vec<PlanarMap> = levels
        .into_iter()
        .flatten()
        .filter(|d| d.vertex_degrees().iter().all(|&x| (3..=6).contains(&x)))
        .collect();
    let p1s: Vec<usize> = match req.p1_filter {
        Some(p) => vec![p],
        None => vec![0, 1, 2, 3],
    };
    let products: Vec<PlanarMap> = deltas
        .par_iter()
        .flat_map_iter(|delta| {
            let mut out = Vec::new();
            for &p1 in &p1s {
                out.extend(decorations(delta, p1));
            }
            out
        })
        .collect();
    for m in products {
        push(m);
    }

    let by_cell = cells
        .into_iter()
        .map(|(k, v)| (k, dedup_by_code(v, req.dedup_mirror)))
        .collect();
    Census {
        by_cell,
        dedup_mirror: req.dedup_mirror,
    }
}

/// The arithmetic form of the ({1,3},6) census: the number of such spheres
/// with n vertices equals the number of lattice parameters (k,l), 0 <= l <= k,
/// of norm n.
pub fn count_13_spheres(n: usize) -> usize {
    let bound = n as i64;
    let mut count = 0;
    for k in 1..=bound {
        if k * k > bound {
            break;
        }
        for l in 0..=k {
            if k * k + k * l + l * l == bound {
                count += 1;
            }
        }
    }
    count
}

/// Scheme products only (no series, no exceptionals); used to identify the
/// series members inside the oracle output.
pub fn scheme_products(n: usize, p1: usize) -> Vec<PlanarMap> {
    let levels = grow_triangulations(n, 6);
    let mut out = Vec::new();
    for delta in levels.into_iter().flatten() {
        if delta.vertex_count() != n {
            continue;
        }
        if !delta.vertex_degrees().iter().all(|&x| (3..=6).contains(&x)) {
            continue;
        }
        out.extend(decorations(&delta, p1));
    }
    dedup_by_code(out, true)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    #[test]
    fn oracle_tiny_cells() {
        // Table row n=1: one sphere with p1=2, one with p1=3, nothing else
        assert_eq!(brute_force_oracle(1, 0).unwrap().len(), 0);
        assert_eq!(brute_force_oracle(1, 1).unwrap().len(), 0);
        assert_eq!(brute_force_oracle(1, 2).unwrap().len(), 1);
        assert_eq!(brute_force_oracle(1, 3).unwrap().len(), 1);
    }

    #[test]
    fn oracle_trifolium_is_the_n1_p3_sphere() {
        let spheres = brute_force_oracle(1, 3).unwrap();
        let t = named::named_graph(named::NamedGraphId::Trifolium).unwrap();
        assert!(spheres[0].is_isomorphic(&t, true));
    }

    #[test]
    fn oracle_six_k2_is_the_n2_p0_sphere() {
        let spheres = brute_force_oracle(2, 0).unwrap();
        assert_eq!(spheres.len(), 1);
        let m = named::named_graph(named::NamedGraphId::SixK2).unwrap();
        assert!(spheres[0].is_isomorphic(&m, true));
    }

    #[test]
    fn oracle_bound() {
        assert!(matches!(
            brute_force_oracle(9, 0),
            Err(EnumerateError::BoundTooLarge(9))
        ));
    }

    #[test]
    fn growth_matches_brute_at_small_sizes() {
        let grown = grow_triangulations(6, 6);
        for v in 3..=6 {
            let brute = triangulations_brute(v);
            let grown_codes: HashSet<Vec<u8>> = grown[v]
                .iter()
                .map(|m| m.canonical_code(true))
                .collect();
            let brute_codes: HashSet<Vec<u8>> =
                brute.iter().map(|m| m.canonical_code(true)).collect();
            assert_eq!(grown_codes, brute_codes, "triangulations on {v} vertices");
        }
    }

    #[test]
    fn smallest_base_is_tetrahedron() {
        let bases = enumerate_base(4);
        assert_eq!(bases.len(), 1);
        assert!(bases[0].is_isomorphic(&named::k4_map().dual(), true));
        assert!(bases[0].is_regular(3));
    }

    #[test]
    fn tetrahedron_digons_give_three_spheres() {
        // Table row n=4: N0(4) = 3
        let base = named::k4_map().dual();
        let spheres = insert_digons(&base);
        assert_eq!(spheres.len(), 3);
        for m in &spheres {
            assert!(m.is_sphere_123_6());
            assert_eq!(m.vertex_count(), 4);
            assert_eq!(m.p_vector().p1(), 0);
        }
    }
}

#[cfg(test)]
mod infeasible_base_tests {
    use super::*;
    use crate::gc::gc3_cubic;

    #[test]
    fn isolated_small_faces_admit_no_digons() {
        // the leapfrog of the dodecahedron has its twelve 5-gons pairwise
        // non-adjacent, so every 5-gon edge borders a 6-gon and no digon
        // assignment exists
        let icosahedron = grow_triangulations(12, 6)
            .into_iter()
            .flatten()
            .find(|t| t.vertex_degrees().iter().all(|&d| d == 5))
            .expect("the icosahedron is a degree-5 triangulation on 12 vertices");
        let dodecahedron = icosahedron.dual();
        assert!(dodecahedron.is_regular(3));
        let c60 = gc3_cubic(&dodecahedron, 1, 1).unwrap();
        assert_eq!(c60.vertex_count(), 60);
        let p = c60.p_vector();
        assert_eq!((p.p(5), p.p(6)), (12, 20));
        assert!(insert_digons(&c60).is_empty());
    }
}
