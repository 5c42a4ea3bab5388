//! Zigzags and central circuits of plane maps: extraction, the canonical
//! orientation, intersection typing, railroads and tightness.
//!
//! A central circuit leaves every vertex by the edge opposite the one it
//! entered; a zigzag alternates between the two sharpest turns. Both kinds of
//! walk preserve the bipartition class of the face to the right of the
//! current dart, so orienting every circuit along the darts of one class
//! orients all of them at once; under that orientation every intersection is
//! of type II.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::map::{Dart, FaceBipartition, MapError, PlanarMap};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CircuitError {
    #[error("map error: {0}")]
    Map(#[from] MapError),
    #[error("patch is not a regular disk")]
    IrregularPatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CircuitKind {
    Zigzag,
    Central,
}

/// One circuit in its canonical orientation. For zigzags, `steps` lists the
/// traversed dart of each edge passage together with the turn parity applied
/// at its head (0 = counterclockwise neighbor, 1 = clockwise).
#[derive(Debug, Clone)]
pub struct Circuit {
    pub steps: Vec<Dart>,
    pub parities: Vec<u8>,
}

impl Circuit {
    pub fn length(&self) -> usize {
        self.steps.len()
    }
}

/// Self-intersection symbol of one circuit: length with type-I and type-II
/// self-intersection counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CircuitSymbol {
    pub length: usize,
    pub alpha1: usize,
    pub alpha2: usize,
}

/// Multiset of circuit symbols (a z-vector or c-vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitVector {
    pub symbols: Vec<(CircuitSymbol, usize)>,
}

impl CircuitVector {
    pub fn total_length(&self) -> usize {
        self.symbols.iter().map(|(s, m)| s.length * m).sum()
    }

    /// Paper notation, e.g. `10^3, 11_{0,1}^3, 22_{0,3}^3`.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (s, m) in &self.symbols {
            let mut t = format!("{}", s.length);
            if s.alpha1 != 0 || s.alpha2 != 0 {
                t.push_str(&format!("_{{{},{}}}", s.alpha1, s.alpha2));
            }
            if *m > 1 {
                t.push_str(&format!("^{}", m));
            }
            parts.push(t);
        }
        parts.join(", ")
    }
}

pub struct CircuitSet {
    pub kind: CircuitKind,
    pub circuits: Vec<Circuit>,
    /// circuit id of each canonical state (zigzag: state 2d+p; central: dart)
    state_circuit: Vec<usize>,
    /// self-intersections by type under the canonical orientation
    self_counts: Vec<(usize, usize)>,
}

impl CircuitSet {
    pub fn vector(&self) -> CircuitVector {
        let mut counts: BTreeMap<CircuitSymbol, usize> = BTreeMap::new();
        for (i, c) in self.circuits.iter().enumerate() {
            let (a1, a2) = self.self_counts[i];
            *counts
                .entry(CircuitSymbol {
                    length: c.length(),
                    alpha1: a1,
                    alpha2: a2,
                })
                .or_insert(0) += 1;
        }
        CircuitVector {
            symbols: counts.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    /// Pairwise and self intersection counts as (type I, type II) pairs,
    /// with `flipped[i]` reversing the orientation of circuit i.
    pub fn intersection_matrix(
        &self,
        m: &PlanarMap,
        flipped: &[bool],
    ) -> Vec<Vec<(usize, usize)>> {
        let k = self.circuits.len();
        let mut mat = vec![vec![(0, 0); k]; k];
        match self.kind {
            CircuitKind::Zigzag => {
                for d in 0..m.dart_count() {
                    if d >= m.alpha(d) {
                        continue;
                    }
                    // the two canonical passages of an edge ride the same dart
                    let (rd, _) = canonical_dart_of_edge(m, d, &self.state_circuit);
                    let c1 = self.state_circuit[2 * rd];
                    let c2 = self.state_circuit[2 * rd + 1];
                    let same_dir = flipped[c1] == flipped[c2];
                    bump(&mut mat, c1, c2, same_dir);
                }
            }
            CircuitKind::Central => {
                for v in 0..m.vertex_count() {
                    let darts = m.darts_of_vertex(v);
                    let outs: Vec<Dart> = darts
                        .iter()
                        .copied()
                        .filter(|&o| self.state_circuit[o] != usize::MAX)
                        .collect();
                    for i in 0..outs.len() {
                        for j in (i + 1)..outs.len() {
                            let (c1, c2) = (
                                self.state_circuit[outs[i]],
                                self.state_circuit[outs[j]],
                            );
                            let mut off = sigma_offset(m, outs[i], outs[j]);
                            if flipped[c1] {
                                off = (off + 3) % 6;
                            }
                            if flipped[c2] {
                                off = (off + 3) % 6;
                            }
                            bump(&mut mat, c1, c2, off % 2 == 0);
                        }
                    }
                }
            }
        }
        mat
    }

    /// The faces along the two sides of circuit `i`: per side, the faces that
    /// share an edge with the circuit and the corner-only faces.
    pub fn sides(&self, m: &PlanarMap, i: usize) -> [SideFaces; 2] {
        let c = &self.circuits[i];
        let mut sides = [SideFaces::default(), SideFaces::default()];
        match self.kind {
            CircuitKind::Central => {
                for &d in &c.steps {
                    // passage through head(d): x points back along d
                    let x = m.alpha(d);
                    let s1 = m.sigma(x);
                    let s2 = m.sigma(s1);
                    let s3 = m.sigma(s2);
                    let s4 = m.sigma(s3);
                    let s5 = m.sigma(s4);
                    sides[0].flank.push(m.face_of(s1));
                    sides[0].corner.push(m.face_of(s2));
                    sides[0].flank.push(m.face_of(s3));
                    sides[1].flank.push(m.face_of(s4));
                    sides[1].corner.push(m.face_of(s5));
                    sides[1].flank.push(m.face_of(x));
                }
            }
            CircuitKind::Zigzag => {
                for (k, &d) in c.steps.iter().enumerate() {
                    let p = c.parities[k];
                    let x = m.alpha(d);
                    let s = |e: Dart, k: usize| {
                        let mut out = e;
                        for _ in 0..k {
                            out = m.sigma(out);
                        }
                        out
                    };
                    if p == 0 {
                        // sharp counterclockwise turn: hug face on side 0
                        sides[0].flank.push(m.face_of(s(x, 1)));
                        sides[1].flank.push(m.face_of(s(x, 2)));
                        sides[1].corner.push(m.face_of(s(x, 3)));
                        sides[1].corner.push(m.face_of(s(x, 4)));
                        sides[1].corner.push(m.face_of(s(x, 5)));
                        sides[1].flank.push(m.face_of(x));
                    } else {
                        sides[1].flank.push(m.face_of(x));
                        sides[0].flank.push(m.face_of(s(x, 1)));
                        sides[0].corner.push(m.face_of(s(x, 2)));
                        sides[0].corner.push(m.face_of(s(x, 3)));
                        sides[0].corner.push(m.face_of(s(x, 4)));
                        sides[0].flank.push(m.face_of(s(x, 5)));
                    }
                }
            }
        }
        sides
    }
}

#[derive(Debug, Default, Clone)]
pub struct SideFaces {
    pub flank: Vec<usize>,
    pub corner: Vec<usize>,
}

fn bump(mat: &mut [Vec<(usize, usize)>], c1: usize, c2: usize, type_ii: bool) {
    let (lo, hi) = (c1.min(c2), c1.max(c2));
    if type_ii {
        mat[lo][hi].1 += 1;
        if lo != hi {
            mat[hi][lo].1 += 1;
        }
    } else {
        mat[lo][hi].0 += 1;
        if lo != hi {
            mat[hi][lo].0 += 1;
        }
    }
}

fn sigma_offset(m: &PlanarMap, a: Dart, b: Dart) -> usize {
    let mut d = a;
    for k in 0..6 {
        if d == b {
            return k;
        }
        d = m.sigma(d);
    }
    unreachable!("darts share a vertex")
}

fn canonical_dart_of_edge(m: &PlanarMap, d: Dart, state_circuit: &[usize]) -> (Dart, Dart) {
    if state_circuit[2 * d] != usize::MAX {
        (d, m.alpha(d))
    } else {
        (m.alpha(d), d)
    }
}

/// The bipartition class used for the canonical orientation: circuits are
/// oriented along darts whose right face lies in class 0.
pub fn canonical_orientation(m: &PlanarMap) -> Result<FaceBipartition, MapError> {
    m.face_bipartition()
}

/// All central circuits in canonical orientation.
pub fn central_circuits(m: &PlanarMap) -> Result<CircuitSet, CircuitError> {
    let bip = m.face_bipartition()?;
    let mut state_circuit = vec![usize::MAX; m.dart_count()];
    let mut circuits = Vec::new();
    for d0 in 0..m.dart_count() {
        if bip.class_of(m.face_of(d0)) != 0 || state_circuit[d0] != usize::MAX {
            continue;
        }
        let id = circuits.len();
        let mut steps = Vec::new();
        let mut d = d0;
        loop {
            state_circuit[d] = id;
            steps.push(d);
            d = central_next(m, d);
            if d == d0 {
                break;
            }
        }
        let parities = vec![0; steps.len()];
        circuits.push(Circuit { steps, parities });
    }
    let mut set = CircuitSet {
        kind: CircuitKind::Central,
        circuits,
        state_circuit,
        self_counts: Vec::new(),
    };
    set.self_counts = self_counts(&set, m);
    Ok(set)
}

fn central_next(m: &PlanarMap, d: Dart) -> Dart {
    let mut x = m.alpha(d);
    for _ in 0..3 {
        x = m.sigma(x);
    }
    x
}

/// All zigzags in canonical orientation (when the map has even degrees) or in
/// an arbitrary orientation per circuit otherwise.
pub fn zigzags(m: &PlanarMap) -> Result<CircuitSet, CircuitError> {
    let class_of_state: Box<dyn Fn(Dart) -> bool> = match m.face_bipartition() {
        Ok(bip) => {
            let classes: Vec<u8> = (0..m.dart_count())
                .map(|d| bip.class_of(m.face_of(d)))
                .collect();
            Box::new(move |d| classes[d] == 0)
        }
        Err(_) => Box::new(|_| true),
    };
    let picky = m.face_bipartition().is_ok();
    let mut state_circuit = vec![usize::MAX; 2 * m.dart_count()];
    let mut circuits = Vec::new();
    for s0 in 0..2 * m.dart_count() {
        if state_circuit[s0] != usize::MAX || !class_of_state(s0 / 2) {
            continue;
        }
        if !picky {
            // skip states whose reversal is already traced
            let rev = 2 * m.alpha(s0 / 2) + (s0 % 2);
            if state_circuit[rev] != usize::MAX {
                continue;
            }
        }
        let id = circuits.len();
        let mut steps = Vec::new();
        let mut parities = Vec::new();
        let mut s = s0;
        loop {
            state_circuit[s] = id;
            steps.push(s / 2);
            parities.push((s % 2) as u8);
            s = zig_next(m, s);
            if s == s0 {
                break;
            }
        }
        circuits.push(Circuit { steps, parities });
    }
    let mut set = CircuitSet {
        kind: CircuitKind::Zigzag,
        circuits,
        state_circuit,
        self_counts: Vec::new(),
    };
    set.self_counts = self_counts(&set, m);
    Ok(set)
}

fn zig_next(m: &PlanarMap, s: usize) -> usize {
    let (d, p) = (s / 2, s % 2);
    let x = m.alpha(d);
    let d2 = if p == 0 { m.sigma(x) } else { m.sigma_inv(x) };
    2 * d2 + (1 - p)
}

fn self_counts(set: &CircuitSet, m: &PlanarMap) -> Vec<(usize, usize)> {
    let flips = vec![false; set.circuits.len()];
    let mat = set.intersection_matrix(m, &flips);
    (0..set.circuits.len()).map(|i| mat[i][i]).collect()
}

// ---------------------------------------------------------------------------
// railroads and tightness
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tightness {
    Tight,
    WeaklyTight,
    Neither,
}

#[derive(Debug, Clone)]
pub struct TightnessReport {
    pub kind: CircuitKind,
    pub status: Tightness,
    /// parallel circuit pairs (circuit, partner) found along all-3-gon sides
    pub railroads: Vec<(usize, usize)>,
    pub s_value: usize,
    pub circuit_count: usize,
}

fn circuit_set(m: &PlanarMap, kind: CircuitKind) -> Result<CircuitSet, CircuitError> {
    match kind {
        CircuitKind::Zigzag => zigzags(m),
        CircuitKind::Central => central_circuits(m),
    }
}

/// Maximal parallel circuit pairs: a circuit side consisting entirely of
/// 3-gons is a railroad against the circuit across the strip.
pub fn railroads(m: &PlanarMap, kind: CircuitKind) -> Result<Vec<(usize, usize)>, CircuitError> {
    let set = circuit_set(m, kind)?;
    Ok(railroads_in(&set, m))
}

fn railroads_in(set: &CircuitSet, m: &PlanarMap) -> Vec<(usize, usize)> {
    let sizes = m.face_sizes();
    let mut out = Vec::new();
    for i in 0..set.circuits.len() {
        match set.kind {
            CircuitKind::Central => {
                // a parallel central circuit runs along a one-face strip: the
                // whole sector side must consist of 3-gons
                let sides = set.sides(m, i);
                for (si, side) in sides.iter().enumerate() {
                    let all3 = side
                        .flank
                        .iter()
                        .chain(side.corner.iter())
                        .all(|&f| sizes[f] == 3);
                    if all3 {
                        let partner = railroad_partner(set, m, i, si);
                        let pair = (i.min(partner), i.max(partner));
                        if !out.contains(&pair) {
                            out.push(pair);
                        }
                    }
                }
            }
            CircuitKind::Zigzag => {
                // a parallel zigzag shares every other turn vertex, so the
                // strip consists of the two far-side sectors incident to the
                // outgoing edge at each turn away from it
                let c = &set.circuits[i];
                for side in 0..2usize {
                    let mut ok = true;
                    for (k, &d) in c.steps.iter().enumerate() {
                        let p = c.parities[k] as usize;
                        if 1 - p != side {
                            continue;
                        }
                        let x = m.alpha(d);
                        let (s_a, s_b) = if p == 0 {
                            let s2 = m.sigma(m.sigma(x));
                            (s2, m.sigma(s2))
                        } else {
                            let s4 = m.sigma_inv(m.sigma_inv(x));
                            (s4, m.sigma(s4))
                        };
                        if sizes[m.face_of(s_a)] != 3 || sizes[m.face_of(s_b)] != 3 {
                            ok = false;
                            break;
                        }
                    }
                    if ok {
                        let partner = railroad_partner(set, m, i, side);
                        let pair = (i.min(partner), i.max(partner));
                        if !out.contains(&pair) {
                            out.push(pair);
                        }
                    }
                }
            }
        }
    }
    out
}

/// The circuit across an all-3-gon strip: found by walking one triangle of
/// the strip to its far edge and reading the circuit there.
fn railroad_partner(set: &CircuitSet, m: &PlanarMap, i: usize, side: usize) -> usize {
    let c = &set.circuits[i];
    match set.kind {
        CircuitKind::Central => {
            let x = m.alpha(c.steps[0]);
            // middle corner face of the chosen side; its far edge is the
            // face-successor of the middle sector dart
            let mid = if side == 0 {
                m.sigma(m.sigma(x))
            } else {
                m.sigma_inv(x)
            };
            let far = m.phi(mid);
            let cd = if set.state_circuit[far] != usize::MAX {
                far
            } else {
                m.alpha(far)
            };
            set.state_circuit[cd]
        }
        CircuitKind::Zigzag => {
            // the parallel partner leaves each shared turn vertex along the
            // opposite sector dart sigma^3(x)
            for (k, &d) in c.steps.iter().enumerate() {
                let p = c.parities[k];
                let far_side = if p == 0 { 1 } else { 0 };
                if far_side != side as u8 {
                    continue;
                }
                let x = m.alpha(d);
                let partner_dart = m.sigma(m.sigma(m.sigma(x)));
                for s in [
                    2 * partner_dart,
                    2 * partner_dart + 1,
                    2 * m.alpha(partner_dart),
                    2 * m.alpha(partner_dart) + 1,
                ] {
                    if set.state_circuit[s] != usize::MAX {
                        return set.state_circuit[s];
                    }
                }
            }
            i
        }
    }
}

/// Tightness classification per the side definitions: tight requires a
/// non-3-gon sharing an edge with each side of every circuit; weakly tight
/// requires the absence of railroads (no all-3-gon side).
pub fn tightness(m: &PlanarMap, kind: CircuitKind) -> Result<TightnessReport, CircuitError> {
    let set = circuit_set(m, kind)?;
    let sizes = m.face_sizes();
    let p = m.p_vector();
    let mut tight = true;
    for i in 0..set.circuits.len() {
        for side in set.sides(m, i) {
            if side.flank.iter().all(|&f| sizes[f] == 3) {
                tight = false;
            }
        }
    }
    let railroads = railroads_in(&set, m);
    let status = if !railroads.is_empty() {
        Tightness::Neither
    } else if tight {
        Tightness::Tight
    } else {
        Tightness::WeaklyTight
    };
    Ok(TightnessReport {
        kind,
        status,
        railroads,
        s_value: p.p1() + 2 * p.p2(),
        circuit_count: set.circuits.len(),
    })
}

/// Corpus-wide tightness statistics: maximal circuit counts per 1-gon count
/// and tightness level, knotted spheres, and bound violations.
#[derive(Debug, Default, Clone)]
pub struct BoundsReport {
    /// (p1, kind, tight?) -> (max circuit count, n where attained)
    pub maxima: BTreeMap<(usize, CircuitKind, bool), (usize, usize)>,
    /// (n, p1) of spheres with a single zigzag or central circuit
    pub knotted: Vec<(usize, usize, CircuitKind)>,
    pub violations: Vec<String>,
}

/// Classify a corpus against the tight and weakly tight circuit-count bounds
/// (6,4,3,1) and (9,7,5,3) per number of 1-gons.
pub fn classify_corpus<'a>(
    records: impl Iterator<Item = (usize, usize, &'a PlanarMap)>,
) -> BoundsReport {
    let tight_bound = [6, 4, 3, 1];
    let weak_bound = [9, 7, 5, 3];
    let mut report = BoundsReport::default();
    for (n, p1, m) in records {
        for kind in [CircuitKind::Zigzag, CircuitKind::Central] {
            let t = tightness(m, kind).expect("corpus maps are valid");
            if t.circuit_count == 1 {
                report.knotted.push((n, p1, kind));
            }
            let (is_tight, relevant) = match t.status {
                Tightness::Tight => (true, true),
                Tightness::WeaklyTight => (false, true),
                Tightness::Neither => (false, false),
            };
            if !relevant {
                continue;
            }
            let e = report.maxima.entry((p1, kind, is_tight)).or_insert((0, n));
            if t.circuit_count > e.0 {
                *e = (t.circuit_count, n);
            }
            let bound = if is_tight {
                tight_bound[p1]
            } else {
                weak_bound[p1]
            };
            if t.circuit_count > bound {
                report.violations.push(format!(
                    "n={n} p1={p1} {kind:?}: {} circuits exceed bound {bound}",
                    t.circuit_count
                ));
            }
            if p1 == 3 && is_tight {
                report
                    .violations
                    .push(format!("n={n}: a tight sphere with three 1-gons"));
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// local Euler formula for patches
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct PatchReport {
    pub t_obtuse: usize,
    pub t_acute: usize,
    pub p1_inside: usize,
    pub p2_inside: usize,
    pub holds: bool,
}

/// Verify the local Euler formula 6 - t_ob - 2 t_ac = 2 p2' (+ 4 p1') on a
/// patch given as a set of faces bounded by central-circuit arcs.
pub fn patch_euler_check(m: &PlanarMap, faces: &[usize]) -> Result<PatchReport, CircuitError> {
    let inside: Vec<bool> = {
        let mut v = vec![false; m.face_count()];
        for &f in faces {
            v[f] = true;
        }
        v
    };
    let boundary: Vec<Dart> = (0..m.dart_count())
        .filter(|&d| inside[m.face_of(d)] && !inside[m.face_of(m.alpha(d))])
        .collect();
    if boundary.is_empty() {
        return Err(CircuitError::IrregularPatch);
    }
    // walk the boundary keeping the patch on the right
    let next_boundary = |d: Dart| -> Result<(Dart, usize), CircuitError> {
        let mut e = m.alpha(d);
        for k in 1..=6 {
            e = m.sigma(e);
            if inside[m.face_of(e)] && !inside[m.face_of(m.alpha(e))] {
                return Ok((e, k));
            }
        }
        Err(CircuitError::IrregularPatch)
    };
    let start = boundary[0];
    let mut visited = 0;
    let mut t_ob = 0;
    let mut t_ac = 0;
    let mut d = start;
    loop {
        let (e, k) = next_boundary(d)?;
        match k {
            1 => t_ac += 1,
            2 => t_ob += 1,
            3 => {}
            _ => return Err(CircuitError::IrregularPatch),
        }
        visited += 1;
        d = e;
        if d == start {
            break;
        }
        if visited > boundary.len() {
            return Err(CircuitError::IrregularPatch);
        }
    }
    if visited != boundary.len() {
        return Err(CircuitError::IrregularPatch);
    }
    let sizes = m.face_sizes();
    let p1 = faces.iter().filter(|&&f| sizes[f] == 1).count();
    let p2 = faces.iter().filter(|&&f| sizes[f] == 2).count();
    let holds = 6 == t_ob + 2 * t_ac + 2 * p2 + 4 * p1;
    Ok(PatchReport {
        t_obtuse: t_ob,
        t_acute: t_ac,
        p1_inside: p1,
        p2_inside: p2,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{self, NamedGraphId};

    fn named(id: NamedGraphId) -> PlanarMap {
        named::named_graph(id).unwrap()
    }

    fn zvec(m: &PlanarMap) -> String {
        zigzags(m).unwrap().vector().render()
    }

    fn cvec(m: &PlanarMap) -> String {
        central_circuits(m).unwrap().vector().render()
    }

    #[test]
    fn six_k2_vectors() {
        let m = named(NamedGraphId::SixK2);
        assert_eq!(zvec(&m), "6^2");
        assert_eq!(cvec(&m), "2^3");
    }

    #[test]
    fn sum_rules_on_named() {
        for id in [
            NamedGraphId::SixK2,
            NamedGraphId::ThreeK3,
            NamedGraphId::Trifolium,
            NamedGraphId::T2,
            NamedGraphId::K2Tetrahedron,
        ] {
            let m = named(id);
            let z = zigzags(&m).unwrap().vector();
            let c = central_circuits(&m).unwrap().vector();
            assert_eq!(z.total_length(), 2 * m.edge_count(), "{id:?}");
            assert_eq!(c.total_length(), m.edge_count(), "{id:?}");
        }
    }

    #[test]
    fn td_n4_vectors() {
        let m = named(NamedGraphId::K2Tetrahedron);
        assert_eq!(zvec(&m), "6^4");
        assert_eq!(cvec(&m), "3^4");
    }

    #[test]
    fn six_k2_central_pairwise() {
        let m = named(NamedGraphId::SixK2);
        let set = central_circuits(&m).unwrap();
        assert_eq!(set.len(), 3);
        let mat = set.intersection_matrix(&m, &[false; 3]);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert_eq!(mat[i][j], (0, 2));
                }
            }
        }
    }

    #[test]
    fn reversal_flips_types() {
        let m = named(NamedGraphId::SixK2);
        let set = central_circuits(&m).unwrap();
        let mat = set.intersection_matrix(&m, &[true, false, false]);
        assert_eq!(mat[0][1], (2, 0));
        assert_eq!(mat[1][2], (0, 2));
    }

    #[test]
    fn six_k2_tight_both_kinds() {
        let m = named(NamedGraphId::SixK2);
        for kind in [CircuitKind::Zigzag, CircuitKind::Central] {
            let t = tightness(&m, kind).unwrap();
            assert_eq!(t.status, Tightness::Tight);
            assert_eq!(t.s_value, 12);
        }
    }

    #[test]
    fn td_weakly_tight_not_tight_z() {
        let m = named(NamedGraphId::K2Tetrahedron);
        let t = tightness(&m, CircuitKind::Zigzag).unwrap();
        assert_eq!(t.status, Tightness::WeaklyTight);
    }

    #[test]
    fn trifolium_all_circuits_self_intersect() {
        let m = named(NamedGraphId::Trifolium);
        for kind in [CircuitKind::Zigzag, CircuitKind::Central] {
            let set = circuit_set(&m, kind).unwrap();
            for (i, _) in set.circuits.iter().enumerate() {
                let (a1, a2) = set.self_counts[i];
                assert_eq!(a1, 0);
                assert!(a2 > 0, "{kind:?} circuit {i}");
            }
        }
    }

    #[test]
    fn patch_inside_simple_central_circuit() {
        // interior of a 2-circuit of 6xK2: a 0-gonal patch with three 2-gons
        let m = named(NamedGraphId::SixK2);
        let set = central_circuits(&m).unwrap();
        let sides = set.sides(&m, 0);
        let mut faces: Vec<usize> = sides[0]
            .flank
            .iter()
            .chain(sides[0].corner.iter())
            .copied()
            .collect();
        faces.sort_unstable();
        faces.dedup();
        let report = patch_euler_check(&m, &faces).unwrap();
        assert_eq!(report.t_obtuse + report.t_acute, 0);
        assert_eq!(report.p2_inside, 3);
        assert!(report.holds);
    }
}
