//! The Goldberg-Coxeter construction for 6-regular plane graphs.
//!
//! The general parameter case runs through the truncation: truncate the seed,
//! apply the classical 3-regular construction (implemented here with exact
//! Eisenstein-lattice charts, one chart per triangle of the dual), 3-color the
//! faces of the result and shrink one color class back to vertices. Parameters
//! with k = l (mod 3) shrink either of two classes and so yield two members;
//! all other parameters yield one.

use std::collections::HashMap;

use thiserror::Error;

use crate::eisenstein::{EisensteinInt, J};
use crate::map::{Dart, FaceBipartition, MapError, PlanarMap, TruncFaceOrigin};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GcError {
    #[error("parameter (0,0) is not allowed")]
    BadParameter,
    #[error("map error: {0}")]
    Map(#[from] MapError),
    #[error("map is not {0}-regular")]
    NotRegular(usize),
    #[error("unsupported seed for this family")]
    UnsupportedSeed,
}

/// Result of the construction: one member for parameters in class B or Bj,
/// two (possibly isomorphic) for class A.
pub struct GcResult {
    pub members: Vec<PlanarMap>,
    pub parameter: EisensteinInt,
    pub seed_code: Vec<u8>,
}

// unit directions; U[i+1] = j * U[i]
const UNITS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

fn unit(i: usize) -> EisensteinInt {
    let (k, l) = UNITS[i % 6];
    EisensteinInt::new(k, l)
}

fn unit_index(z: EisensteinInt) -> Option<usize> {
    (0..6).find(|&i| unit(i) == z)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
            r
        } else {
            x
        }
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// One triangle of the dual, realized as the lattice triangle with corners
/// A = 0, C = j*z, B = z. Its clockwise boundary walk (our face convention)
/// visits A, C, B; walk edge `i` joins `corner[i]` to `corner[(i+1)%3]` and is
/// realized by the dual dart `darts[i]`.
struct Chart {
    corners: [EisensteinInt; 3],
    darts: [Dart; 3],
    points: Vec<EisensteinInt>,
    point_idx: HashMap<(i64, i64), usize>,
    point_offset: usize,
}

impl Chart {
    fn edge_from(&self, i: usize) -> EisensteinInt {
        self.corners[i]
    }

    fn edge_dir(&self, i: usize) -> EisensteinInt {
        self.corners[(i + 1) % 3].sub(self.corners[i])
    }

    fn inside(&self, p: EisensteinInt) -> bool {
        (0..3).all(|i| self.edge_dir(i).cross(p.sub(self.edge_from(i))) <= 0)
    }

    fn on_edge(&self, i: usize, p: EisensteinInt) -> bool {
        self.inside(p) && self.edge_dir(i).cross(p.sub(self.edge_from(i))) == 0
    }

    fn valid_dir(&self, p: EisensteinInt, u: usize) -> bool {
        if !self.inside(p) {
            return false;
        }
        (0..3).all(|i| !self.on_edge(i, p) || self.edge_dir(i).cross(unit(u)) <= 0)
    }

    fn local(&self, p: EisensteinInt) -> usize {
        self.point_idx[&(p.k, p.l)]
    }
}

/// squared-length-scaled dot product in the hexagonal basis (twice the
/// geometric dot product)
fn dot2(a: EisensteinInt, b: EisensteinInt) -> i64 {
    2 * a.k * b.k + 2 * a.l * b.l + a.k * b.l + a.l * b.k
}

struct Transition {
    target: usize,
    rot: usize,
    zeta: EisensteinInt,
    tau: EisensteinInt,
}

impl Transition {
    fn apply(&self, p: EisensteinInt) -> EisensteinInt {
        self.zeta.mul(p).add(self.tau)
    }

    fn rot_dir(&self, u: usize) -> usize {
        (u + self.rot) % 6
    }
}

struct Refiner {
    charts: Vec<Chart>,
    transitions: Vec<[Option<Transition>; 3]>,
    total_points: usize,
}

impl Refiner {
    fn new(delta: &PlanarMap, z: EisensteinInt) -> Refiner {
        let a = EisensteinInt::new(0, 0);
        let c = z.mul(J);
        let b = z;
        let face_reps = delta.face_reps();
        let mut charts = Vec::with_capacity(face_reps.len());
        let mut chart_of_face = vec![usize::MAX; face_reps.len()];
        let mut total_points = 0;
        for (f, &rep) in face_reps.iter().enumerate() {
            let walk = delta.face_orbit(rep);
            assert_eq!(walk.len(), 3, "dual of a 3-regular map is a triangulation");
            let mut chart = Chart {
                corners: [a, c, b],
                darts: [walk[0], walk[1], walk[2]],
                points: Vec::new(),
                point_idx: HashMap::new(),
                point_offset: total_points,
            };
            let ks: Vec<i64> = chart.corners.iter().map(|p| p.k).collect();
            let ls: Vec<i64> = chart.corners.iter().map(|p| p.l).collect();
            for pk in *ks.iter().min().unwrap()..=*ks.iter().max().unwrap() {
                for pl in *ls.iter().min().unwrap()..=*ls.iter().max().unwrap() {
                    let p = EisensteinInt::new(pk, pl);
                    if chart.inside(p) {
                        chart.point_idx.insert((pk, pl), chart.points.len());
                        chart.points.push(p);
                    }
                }
            }
            total_points += chart.points.len();
            chart_of_face[f] = charts.len();
            charts.push(chart);
        }
        // transitions across each walk edge
        let mut transitions: Vec<[Option<Transition>; 3]> = Vec::new();
        for t in 0..charts.len() {
            let mut per: [Option<Transition>; 3] = [None, None, None];
            for i in 0..3 {
                let g = charts[t].darts[i];
                let gp = delta.alpha(g);
                let tprime = chart_of_face[delta.face_of(gp)];
                let ip = (0..3).find(|&x| charts[tprime].darts[x] == gp).unwrap();
                let from = charts[t].edge_from(i);
                let to = charts[t].corners[(i + 1) % 3];
                let fromp = charts[tprime].edge_from(ip);
                let top = charts[tprime].corners[(ip + 1) % 3];
                // orientation-preserving lattice isometry with from -> top, to -> fromp
                let zeta = fromp.sub(top).div_exact(to.sub(from)).unwrap();
                assert_eq!(zeta.norm(), 1);
                let rot = unit_index(zeta).unwrap();
                let tau = top.sub(zeta.mul(from));
                per[i] = Some(Transition {
                    target: tprime,
                    rot,
                    zeta,
                    tau,
                });
            }
            transitions.push(per);
        }
        Refiner {
            charts,
            transitions,
            total_points,
        }
    }

    fn point_gid(&self, t: usize, p: EisensteinInt) -> usize {
        self.charts[t].point_offset + self.charts[t].local(p)
    }

    fn dart_gid(&self, t: usize, p: EisensteinInt, u: usize) -> usize {
        6 * self.point_gid(t, p) + u
    }

    /// lattice points on walk edge i of chart t, endpoints included
    fn edge_points(&self, t: usize, i: usize) -> Vec<EisensteinInt> {
        let from = self.charts[t].edge_from(i);
        let dir = self.charts[t].edge_dir(i);
        let g = gcd(dir.k.abs(), dir.l.abs());
        let prim = EisensteinInt::new(dir.k / g, dir.l / g);
        (0..=g)
            .map(|m| from.add(EisensteinInt::new(prim.k * m, prim.l * m)))
            .collect()
    }

    /// the crossing edge for a unit step leaving the chart
    fn exit_edge(&self, t: usize, p: EisensteinInt, u: usize) -> usize {
        let chart = &self.charts[t];
        let q = p.add(unit(u));
        let mut found = None;
        for i in 0..3 {
            let dir = chart.edge_dir(i);
            let cp = dir.cross(p.sub(chart.edge_from(i)));
            let cq = dir.cross(q.sub(chart.edge_from(i)));
            if cq <= 0 {
                continue;
            }
            // crossing point X = p + s*u with s = -cp / (cq - cp); check X on
            // the closed edge segment using the scaled position D*X
            let d = cq - cp;
            let rel = p.sub(chart.edge_from(i));
            let scaled = EisensteinInt::new(rel.k * d + (-cp) * unit(u).k, rel.l * d + (-cp) * unit(u).l);
            let along = dot2(scaled, dir);
            if along >= 0 && along <= d * dot2(dir, dir) {
                assert!(found.is_none(), "unit step crossing two edges");
                found = Some(i);
            }
        }
        found.expect("unit step leaving the chart must cross a boundary edge")
    }

    fn canon(&self, t: usize, p: EisensteinInt, u: usize, uf: &mut UnionFind) -> usize {
        uf.find(self.dart_gid(t, p, u))
    }

    /// counterclockwise rotation of a surface dart, hopping charts at corners
    fn sigma(&self, t: usize, p: EisensteinInt, u: usize) -> (usize, EisensteinInt, usize) {
        let u2 = (u + 1) % 6;
        if self.charts[t].valid_dir(p, u2) {
            return (t, p, u2);
        }
        for i in 0..3 {
            if self.charts[t].on_edge(i, p) && self.charts[t].edge_dir(i).cross(unit(u2)) > 0 {
                let tr = self.transitions[t][i].as_ref().unwrap();
                let pp = tr.apply(p);
                let up = tr.rot_dir(u2);
                assert!(self.charts[tr.target].valid_dir(pp, up));
                return (tr.target, pp, up);
            }
        }
        unreachable!("rotation of a valid dart must stay on the surface");
    }

    /// the opposite dart across the unit step
    fn twin(&self, t: usize, p: EisensteinInt, u: usize) -> (usize, EisensteinInt, usize) {
        let q = p.add(unit(u));
        if self.charts[t].inside(q) {
            return (t, q, (u + 3) % 6);
        }
        let i = self.exit_edge(t, p, u);
        let tr = self.transitions[t][i].as_ref().unwrap();
        let qq = tr.apply(q);
        let uu = (tr.rot_dir(u) + 3) % 6;
        assert!(self.charts[tr.target].valid_dir(qq, uu));
        (tr.target, qq, uu)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

/// The classical Goldberg-Coxeter construction for a 3-regular plane map:
/// subdivide the dual triangulation with the (k,l) lattice pattern and
/// dualize back. Multiplies the vertex count by k^2 + kl + l^2.
pub fn gc3_cubic(h: &PlanarMap, k: i64, l: i64) -> Result<PlanarMap, GcError> {
    Ok(gc3_cubic_with_origin(h, EisensteinInt::new(k, l))?.0)
}

/// As [`gc3_cubic`], also reporting for each face of the result the face of
/// `h` it descends from (`None` for the new hexagons).
pub fn gc3_cubic_with_origin(
    h: &PlanarMap,
    z: EisensteinInt,
) -> Result<(PlanarMap, Vec<Option<usize>>), GcError> {
    if z.is_zero() {
        return Err(GcError::BadParameter);
    }
    if !h.is_regular(3) {
        return Err(GcError::NotRegular(3));
    }
    let delta = h.dual();
    let refiner = Refiner::new(&delta, z);

    // vertex classes
    let mut vert_uf = UnionFind::new(refiner.total_points);
    // dart classes
    let mut dart_uf = UnionFind::new(6 * refiner.total_points);
    for t in 0..refiner.charts.len() {
        for i in 0..3 {
            let tr = refiner.transitions[t][i].as_ref().unwrap();
            for p in refiner.edge_points(t, i) {
                let pp = tr.apply(p);
                vert_uf.union(refiner.point_gid(t, p), refiner.point_gid(tr.target, pp));
                for u in 0..6 {
                    if refiner.charts[t].valid_dir(p, u)
                        && refiner.charts[tr.target].valid_dir(pp, tr.rot_dir(u))
                    {
                        dart_uf.union(
                            refiner.dart_gid(t, p, u),
                            refiner.dart_gid(tr.target, pp, tr.rot_dir(u)),
                        );
                    }
                }
            }
        }
    }

    // enumerate dart classes
    let mut class_index: HashMap<usize, usize> = HashMap::new();
    let mut class_rep: Vec<(usize, EisensteinInt, usize)> = Vec::new();
    for t in 0..refiner.charts.len() {
        for pi in 0..refiner.charts[t].points.len() {
            let p = refiner.charts[t].points[pi];
            for u in 0..6 {
                if !refiner.charts[t].valid_dir(p, u) {
                    continue;
                }
                let root = refiner.canon(t, p, u, &mut dart_uf);
                class_index.entry(root).or_insert_with(|| {
                    class_rep.push((t, p, u));
                    class_rep.len() - 1
                });
            }
        }
    }

    let n = class_rep.len();
    let mut twin = vec![0; n];
    let mut next = vec![0; n];
    for ci in 0..n {
        let (t, p, u) = class_rep[ci];
        let (tt, tp, tu) = refiner.twin(t, p, u);
        twin[ci] = class_index[&refiner.canon(tt, tp, tu, &mut dart_uf)];
        let (st, sp, su) = refiner.sigma(t, p, u);
        next[ci] = class_index[&refiner.canon(st, sp, su, &mut dart_uf)];
    }
    let lattice = PlanarMap::build(twin, next)?;

    // face provenance: Lambda vertices at chart corners descend from faces of h
    let mut corner_face: HashMap<usize, usize> = HashMap::new();
    for t in 0..refiner.charts.len() {
        for i in 0..3 {
            let corner = refiner.charts[t].corners[i];
            let g = refiner.charts[t].darts[i];
            // origin of walk dart g is corner i; delta vertex orbits are the
            // face orbits of h on the same darts
            let hface = h.face_of(g);
            let gid = refiner.point_gid(t, corner);
            corner_face.insert(vert_uf.find(gid), hface);
        }
    }
    // map lattice vertices to h faces via any incident dart class
    let mut lambda_vertex_face = vec![None; lattice.vertex_count()];
    for ci in 0..n {
        let (t, p, _) = class_rep[ci];
        let root = vert_uf.find(refiner.point_gid(t, p));
        if let Some(&hf) = corner_face.get(&root) {
            lambda_vertex_face[lattice.vertex_of(ci)] = Some(hf);
        }
    }
    let result = lattice.dual();
    // faces of the dual are the vertex orbits of the lattice on the same darts
    let mut face_origin = vec![None; result.face_count()];
    for d in 0..result.dart_count() {
        face_origin[result.face_of(d)] = lambda_vertex_face[lattice.vertex_of(d)];
    }
    Ok((result, face_origin))
}

/// Proper 3-coloring of the faces of a 3-regular map with even face sizes,
/// unique up to permutation of the colors.
pub fn three_color(m: &PlanarMap) -> Result<Vec<u8>, GcError> {
    if !m.is_regular(3) {
        return Err(GcError::NotRegular(3));
    }
    if m.face_sizes().iter().any(|&s| s % 2 != 0) {
        return Err(GcError::Map(MapError::OddFace));
    }
    let mut color: Vec<Option<u8>> = vec![None; m.face_count()];
    let vertex_faces = |d: Dart| [m.face_of(d), m.face_of(m.sigma(d)), m.face_of(m.sigma(m.sigma(d)))];
    let seed = vertex_faces(0);
    for (c, &f) in seed.iter().enumerate() {
        color[f] = Some(c as u8);
    }
    let mut visited = vec![false; m.vertex_count()];
    visited[m.vertex_of(0)] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(d) = queue.pop_front() {
        for x in m.vertex_orbit(d) {
            let y = m.alpha(x);
            let w = m.vertex_of(y);
            let faces = vertex_faces(y);
            let known: Vec<u8> = faces.iter().filter_map(|&f| color[f]).collect();
            if known.len() >= 2 {
                let missing: u8 = 3 - known[0] - known[1];
                for &f in &faces {
                    if color[f].is_none() {
                        color[f] = Some(missing);
                    }
                }
            }
            if !visited[w] {
                visited[w] = true;
                queue.push_back(y);
            }
        }
    }
    let colors: Vec<u8> = color
        .into_iter()
        .map(|c| c.expect("forcing reaches every face of a connected map"))
        .collect();
    for d in 0..m.dart_count() {
        assert_ne!(
            colors[m.face_of(d)],
            colors[m.face_of(m.alpha(d))],
            "coloring must be proper"
        );
    }
    Ok(colors)
}

/// Contract every face in the selected class of a 3-regular map to a vertex.
/// Requires each vertex to lie on exactly one selected face.
pub fn shrink(m: &PlanarMap, selected: &[bool]) -> Result<PlanarMap, GcError> {
    let mut per_vertex = vec![0usize; m.vertex_count()];
    for d in 0..m.dart_count() {
        if selected[m.face_of(d)] {
            per_vertex[m.vertex_of(d)] += 1;
        }
    }
    assert!(
        per_vertex.iter().all(|&c| c == 1),
        "selected faces must cover every vertex exactly once"
    );
    let mut new_id = vec![usize::MAX; m.dart_count()];
    let mut boundary = Vec::new();
    for d in 0..m.dart_count() {
        if selected[m.face_of(d)] {
            new_id[d] = boundary.len();
            boundary.push(d);
        }
    }
    let mut twin = vec![0; boundary.len()];
    let mut next = vec![0; boundary.len()];
    for (i, &b) in boundary.iter().enumerate() {
        twin[i] = new_id[m.sigma_inv(m.alpha(m.sigma(b)))];
        next[i] = new_id[m.phi_inv(b)];
    }
    Ok(PlanarMap::build(twin, next)?)
}

/// Oriented tripling: the local rewrite that triples the vertex count of a
/// 6-regular sphere, parameterized by a bipartition class of its faces.
///
/// The vertices of the result are the darts of `m` whose face lies in the
/// chosen class; each such dart keeps two neighbors around its original face,
/// two around the twin face, and two on the central triangle replacing its
/// origin vertex.
pub fn oriented_tripling(
    m: &PlanarMap,
    bip: &FaceBipartition,
    class: u8,
) -> Result<PlanarMap, GcError> {
    if !m.is_regular(6) {
        return Err(GcError::NotRegular(6));
    }
    let mut idx = vec![usize::MAX; m.dart_count()];
    let mut reds = Vec::new();
    for d in 0..m.dart_count() {
        if bip.class_of(m.face_of(d)) == class {
            idx[d] = reds.len();
            reds.push(d);
        }
    }
    let mut twin = vec![0; 6 * reds.len()];
    let mut next = vec![0; 6 * reds.len()];
    for (i, &r) in reds.iter().enumerate() {
        let targets = [
            (m.phi_inv(r), 1),
            (m.phi(r), 0),
            (m.sigma_inv(m.alpha(r)), 3),
            (m.alpha(m.sigma(r)), 2),
            (m.sigma(m.sigma(r)), 5),
            (m.sigma_inv(m.sigma_inv(r)), 4),
        ];
        for (s, (target, back_slot)) in targets.iter().enumerate() {
            debug_assert!(idx[*target] != usize::MAX, "targets stay in the class");
            twin[6 * i + s] = 6 * idx[*target] + back_slot;
            next[6 * i + s] = 6 * i + (s + 1) % 6;
        }
    }
    Ok(PlanarMap::build(twin, next)?)
}

/// Both oriented triplings of a map, as the pair {Or_C, Or_C'}.
pub fn tripling_pair(m: &PlanarMap) -> Result<Vec<PlanarMap>, GcError> {
    let bip = m.face_bipartition().map_err(GcError::Map)?;
    Ok(vec![
        oriented_tripling(m, &bip, 0)?,
        oriented_tripling(m, &bip, 1)?,
    ])
}

/// The Goldberg-Coxeter construction for a 6-regular plane map.
pub fn gc(m: &PlanarMap, k: i64, l: i64) -> Result<GcResult, GcError> {
    let z = EisensteinInt::new(k, l);
    if z.is_zero() {
        return Err(GcError::BadParameter);
    }
    if !m.is_regular(6) {
        return Err(GcError::NotRegular(6));
    }
    let t0 = m.truncate();
    let t0_origin = m.truncate_face_origin(&t0);
    let (t1, t1_origin) = gc3_cubic_with_origin(&t0, z)?;
    let colors = three_color(&t1)?;

    let mut vertex_color: Option<u8> = None;
    let mut face_colors = [false; 3];
    for f in 0..t1.face_count() {
        if let Some(t0f) = t1_origin[f] {
            match t0_origin[t0f] {
                TruncFaceOrigin::Vertex(_) => {
                    let c = colors[f];
                    assert!(
                        vertex_color.map_or(true, |vc| vc == c),
                        "vertex faces all take one color"
                    );
                    vertex_color = Some(c);
                }
                TruncFaceOrigin::Face(_) => {
                    face_colors[colors[f] as usize] = true;
                }
            }
        }
    }
    let vc = vertex_color.expect("seed has vertices");

    let class_a = (k - l).rem_euclid(3) == 0;
    let members = if !class_a {
        assert!(!face_colors[vc as usize], "original faces avoid the vertex color");
        let sel: Vec<bool> = (0..t1.face_count()).map(|f| colors[f] == vc).collect();
        vec![shrink(&t1, &sel)?]
    } else {
        assert!(
            (0..3).all(|c| c == vc as usize || !face_colors[c]),
            "class A sends all original faces to the vertex color"
        );
        let mut out = Vec::new();
        for c in 0..3u8 {
            if c == vc {
                continue;
            }
            let sel: Vec<bool> = (0..t1.face_count()).map(|f| colors[f] == c).collect();
            out.push(shrink(&t1, &sel)?);
        }
        out
    };
    for g in &members {
        debug_assert_eq!(
            g.vertex_count() as i64,
            m.vertex_count() as i64 * z.norm()
        );
        debug_assert!(g.is_regular(6));
    }
    Ok(GcResult {
        members,
        parameter: z,
        seed_code: m.canonical_code(false),
    })
}

/// All GC images of a seed with parameter norm at most `norm_bound`,
/// deduplicated up to reflection, each tagged with its parameter.
pub fn gc_seed_family(
    seed: &PlanarMap,
    norm_bound: i64,
) -> Result<Vec<(EisensteinInt, PlanarMap)>, GcError> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut params = Vec::new();
    let kmax = (norm_bound as f64).sqrt() as i64 + 1;
    for k in 1..=kmax {
        for l in 0..=kmax {
            let z = EisensteinInt::new(k, l);
            if z.norm() <= norm_bound {
                params.push(z);
            }
        }
    }
    params.sort_by_key(|z| (z.norm(), z.l));
    for z in params {
        for member in gc(seed, z.k, z.l)?.members {
            if seen.insert(member.canonical_code(true)) {
                out.push((z, member));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{self, NamedGraphId};

    fn named(id: NamedGraphId) -> PlanarMap {
        named::named_graph(id).unwrap()
    }

    #[test]
    fn tripling_six_k2() {
        let m = named(NamedGraphId::SixK2);
        let bip = m.face_bipartition().unwrap();
        for class in [0, 1] {
            let t = oriented_tripling(&m, &bip, class).unwrap();
            assert_eq!(t.vertex_count(), 6);
            assert!(t.is_sphere_123_6());
            let p = t.p_vector();
            assert_eq!((p.p1(), p.p2(), p.p3()), (0, 6, 8));
            // D3d has order 12
            assert_eq!(t.automorphisms().len(), 12);
        }
    }

    #[test]
    fn tripling_k2_tetrahedron() {
        let m = named(NamedGraphId::K2Tetrahedron);
        let pair = tripling_pair(&m).unwrap();
        for t in &pair {
            assert_eq!(t.vertex_count(), 12);
            assert!(t.is_sphere_123_6());
            // T_h has order 24
            assert_eq!(t.automorphisms().len(), 24);
        }
        assert!(pair[0].is_isomorphic(&pair[1], true));
    }

    #[test]
    fn tripling_trifolium_is_t2() {
        let m = named(NamedGraphId::Trifolium);
        let pair = tripling_pair(&m).unwrap();
        let t2 = named(NamedGraphId::T2);
        for t in &pair {
            assert!(t.is_isomorphic(&t2, true), "tripling of the trifolium");
        }
    }

    #[test]
    fn gc3_identity() {
        let h = named(NamedGraphId::SixK2).truncate();
        let g = gc3_cubic(&h, 1, 0).unwrap();
        assert!(g.is_isomorphic(&h, false));
    }

    #[test]
    fn gc3_vertex_count_law() {
        let h = named(NamedGraphId::Trifolium).truncate();
        for (k, l) in [(1, 1), (2, 0), (2, 1), (3, 1)] {
            let g = gc3_cubic(&h, k, l).unwrap();
            let norm = (k * k + k * l + l * l) as usize;
            assert_eq!(g.vertex_count(), h.vertex_count() * norm);
            assert!(g.is_regular(3));
        }
    }

    #[test]
    fn gc_identity_parameter() {
        for id in [
            NamedGraphId::SixK2,
            NamedGraphId::Trifolium,
            NamedGraphId::K2Tetrahedron,
        ] {
            let m = named(id);
            let r = gc(&m, 1, 0).unwrap();
            assert_eq!(r.members.len(), 1);
            assert!(r.members[0].is_isomorphic(&m, false), "{id:?}");
        }
    }

    #[test]
    fn gc_one_one_is_tripling_pair() {
        for id in [NamedGraphId::SixK2, NamedGraphId::Trifolium] {
            let m = named(id);
            let r = gc(&m, 1, 1).unwrap();
            assert_eq!(r.members.len(), 2);
            let mut got: Vec<_> = r.members.iter().map(|g| g.canonical_code(false)).collect();
            let mut want: Vec<_> = tripling_pair(&m)
                .unwrap()
                .iter()
                .map(|g| g.canonical_code(false))
                .collect();
            got.sort();
            want.sort();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn gc_anchor_2_1() {
        let m = named(NamedGraphId::SixK2);
        let r = gc(&m, 2, 1).unwrap();
        assert_eq!(r.members.len(), 1);
        let g = &r.members[0];
        assert_eq!(g.vertex_count(), 14);
        assert!(g.is_sphere_123_6());
        // D6 has order 12, and the graph is chiral
        assert_eq!(g.automorphisms().len(), 12);
        assert!(!g.is_achiral());
        // mirror pair: gc(m,1,2) is the mirror image
        let gm = gc(&m, 1, 2).unwrap();
        assert!(!g.is_isomorphic(&gm.members[0], false));
        assert!(g.is_isomorphic(&gm.members[0], true));
    }

    #[test]
    fn gc_multiplicativity_class_b() {
        let m = named(NamedGraphId::SixK2);
        // z = (2,1), z' = (1,0)j^0 ... use two class-B parameters
        let z = EisensteinInt::new(2, 1);
        let zp = EisensteinInt::new(2, 1);
        let step = gc(&gc(&m, z.k, z.l).unwrap().members[0], zp.k, zp.l).unwrap();
        let prod = z.mul(zp);
        let direct = gc(&m, prod.k, prod.l).unwrap();
        assert!(step.members[0].is_isomorphic(&direct.members[0], false));
    }
}
