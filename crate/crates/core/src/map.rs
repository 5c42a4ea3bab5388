//! Dart-based combinatorial maps of plane (multi)graphs.
//!
//! A map on `2E` darts is given by two permutations: `twin`, the fixed-point-free
//! involution pairing the two darts of each edge, and `vertex_next`, which sends a
//! dart to the next dart counterclockwise around its origin vertex. The face
//! permutation is derived as `face_next(d) = vertex_next(twin(d))`; with this
//! convention the face of a dart lies to its right and face walks run clockwise
//! around the face interior. Loops and parallel edges are first-class: a 1-gonal
//! face is a dart that is its own face successor.

use std::collections::HashMap;

use thiserror::Error;

pub type Dart = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("twin is not a fixed-point-free involution")]
    NotInvolution,
    #[error("vertex_next is not a permutation")]
    NotPermutation,
    #[error("map is not connected")]
    Disconnected,
    #[error("Euler check failed: V - E + F = {0}, map is not a sphere")]
    GenusNotZero(i64),
    #[error("operation requires all vertex degrees even")]
    OddVertexDegree,
    #[error("operation requires all faces of even size")]
    OddFace,
}

/// Census of face sizes. `p(k)` is the number of k-gonal faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PVector {
    counts: Vec<(usize, usize)>,
}

impl PVector {
    pub fn p(&self, k: usize) -> usize {
        self.counts
            .iter()
            .find(|&&(size, _)| size == k)
            .map(|&(_, c)| c)
            .unwrap_or(0)
    }

    pub fn p1(&self) -> usize {
        self.p(1)
    }

    pub fn p2(&self) -> usize {
        self.p(2)
    }

    pub fn p3(&self) -> usize {
        self.p(3)
    }

    pub fn counts(&self) -> &[(usize, usize)] {
        &self.counts
    }

    pub fn max_size(&self) -> usize {
        self.counts.iter().map(|&(s, _)| s).max().unwrap_or(0)
    }
}

/// Which of the two classes of the bipartite dual a face belongs to.
///
/// Exists exactly when every vertex degree is even; the two valid bipartitions
/// differ by swapping the classes.
#[derive(Debug, Clone)]
pub struct FaceBipartition {
    color: Vec<u8>,
}

impl FaceBipartition {
    pub fn class_of(&self, face: usize) -> u8 {
        self.color[face]
    }

    /// The same bipartition with the two classes exchanged.
    pub fn swapped(&self) -> FaceBipartition {
        FaceBipartition {
            color: self.color.iter().map(|&c| 1 - c).collect(),
        }
    }

    pub fn colors(&self) -> &[u8] {
        &self.color
    }
}

#[derive(Clone)]
pub struct PlanarMap {
    twin: Vec<Dart>,
    vertex_next: Vec<Dart>,
    vertex_prev: Vec<Dart>,
    face_next: Vec<Dart>,
    vertex_of: Vec<usize>,
    face_of: Vec<usize>,
    vertex_count: usize,
    face_count: usize,
}

impl std::fmt::Debug for PlanarMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PlanarMap {{ V: {}, E: {}, F: {} }}",
            self.vertex_count,
            self.edge_count(),
            self.face_count
        )
    }
}

fn orbit_partition(perm: &[Dart]) -> (Vec<usize>, usize) {
    let mut id = vec![usize::MAX; perm.len()];
    let mut count = 0;
    for start in 0..perm.len() {
        if id[start] != usize::MAX {
            continue;
        }
        let mut d = start;
        while id[d] == usize::MAX {
            id[d] = count;
            d = perm[d];
        }
        count += 1;
    }
    (id, count)
}

impl PlanarMap {
    /// Build and validate a map from its defining permutations.
    pub fn build(twin: Vec<Dart>, vertex_next: Vec<Dart>) -> Result<PlanarMap, MapError> {
        let n = twin.len();
        if n == 0 || n % 2 != 0 || vertex_next.len() != n {
            return Err(MapError::NotInvolution);
        }
        for d in 0..n {
            if twin[d] >= n || twin[d] == d || twin[twin[d]] != d {
                return Err(MapError::NotInvolution);
            }
        }
        let mut seen = vec![false; n];
        for d in 0..n {
            if vertex_next[d] >= n || seen[vertex_next[d]] {
                return Err(MapError::NotPermutation);
            }
            seen[vertex_next[d]] = true;
        }
        // connectivity under the group generated by twin and vertex_next
        let mut reach = vec![false; n];
        let mut stack = vec![0];
        reach[0] = true;
        while let Some(d) = stack.pop() {
            for nb in [twin[d], vertex_next[d]] {
                if !reach[nb] {
                    reach[nb] = true;
                    stack.push(nb);
                }
            }
        }
        if reach.iter().any(|&r| !r) {
            return Err(MapError::Disconnected);
        }
        let face_next: Vec<Dart> = (0..n).map(|d| vertex_next[twin[d]]).collect();
        let mut vertex_prev = vec![0; n];
        for d in 0..n {
            vertex_prev[vertex_next[d]] = d;
        }
        let (vertex_of, vertex_count) = orbit_partition(&vertex_next);
        let (face_of, face_count) = orbit_partition(&face_next);
        let euler = vertex_count as i64 - (n / 2) as i64 + face_count as i64;
        if euler != 2 {
            return Err(MapError::GenusNotZero(euler));
        }
        Ok(PlanarMap {
            twin,
            vertex_next,
            vertex_prev,
            face_next,
            vertex_of,
            face_of,
            vertex_count,
            face_count,
        })
    }

    pub fn dart_count(&self) -> usize {
        self.twin.len()
    }

    pub fn edge_count(&self) -> usize {
        self.twin.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn face_count(&self) -> usize {
        self.face_count
    }

    pub fn alpha(&self, d: Dart) -> Dart {
        self.twin[d]
    }

    pub fn sigma(&self, d: Dart) -> Dart {
        self.vertex_next[d]
    }

    pub fn sigma_inv(&self, d: Dart) -> Dart {
        self.vertex_prev[d]
    }

    pub fn phi(&self, d: Dart) -> Dart {
        self.face_next[d]
    }

    pub fn phi_inv(&self, d: Dart) -> Dart {
        // phi = sigma . alpha, so phi^-1 = alpha . sigma^-1
        self.twin[self.vertex_prev[d]]
    }

    pub fn vertex_of(&self, d: Dart) -> usize {
        self.vertex_of[d]
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d]
    }

    pub fn twin_slice(&self) -> &[Dart] {
        &self.twin
    }

    pub fn vertex_next_slice(&self) -> &[Dart] {
        &self.vertex_next
    }

    /// One representative dart per vertex (the smallest dart id in the orbit).
    pub fn vertex_reps(&self) -> Vec<Dart> {
        let mut reps = vec![usize::MAX; self.vertex_count];
        for d in (0..self.dart_count()).rev() {
            reps[self.vertex_of[d]] = d;
        }
        reps
    }

    pub fn face_reps(&self) -> Vec<Dart> {
        let mut reps = vec![usize::MAX; self.face_count];
        for d in (0..self.dart_count()).rev() {
            reps[self.face_of[d]] = d;
        }
        reps
    }

    pub fn darts_of_vertex(&self, v: usize) -> Vec<Dart> {
        let rep = self.vertex_reps()[v];
        self.vertex_orbit(rep)
    }

    pub fn vertex_orbit(&self, rep: Dart) -> Vec<Dart> {
        let mut out = vec![rep];
        let mut d = self.vertex_next[rep];
        while d != rep {
            out.push(d);
            d = self.vertex_next[d];
        }
        out
    }

    pub fn face_orbit(&self, rep: Dart) -> Vec<Dart> {
        let mut out = vec![rep];
        let mut d = self.face_next[rep];
        while d != rep {
            out.push(d);
            d = self.face_next[d];
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.vertex_degrees()[v]
    }

    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for d in 0..self.dart_count() {
            deg[self.vertex_of[d]] += 1;
        }
        deg
    }

    pub fn face_sizes(&self) -> Vec<usize> {
        let mut sz = vec![0; self.face_count];
        for d in 0..self.dart_count() {
            sz[self.face_of[d]] += 1;
        }
        sz
    }

    pub fn p_vector(&self) -> PVector {
        let mut by_size: HashMap<usize, usize> = HashMap::new();
        for s in self.face_sizes() {
            *by_size.entry(s).or_insert(0) += 1;
        }
        let mut counts: Vec<(usize, usize)> = by_size.into_iter().collect();
        counts.sort_unstable();
        PVector { counts }
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.vertex_degrees().iter().all(|&d| d == k)
    }

    /// Checks membership in the ({1,2,3},6) class: every vertex of degree 6 and
    /// every face of size at most 3 (so 2 p1 + p2 = 6 by the Euler relation).
    pub fn is_sphere_123_6(&self) -> bool {
        if !self.is_regular(6) {
            return false;
        }
        let p = self.p_vector();
        if p.max_size() > 3 {
            return false;
        }
        2 * p.p1() + p.p2() == 6
    }

    /// The dual map: vertices and faces exchanged, darts kept in place.
    ///
    /// `dual` is an exact involution: `m.dual().dual()` has the same dart arrays
    /// as `m`. The vertex orbit of a dart in the dual is its face orbit here.
    pub fn dual(&self) -> PlanarMap {
        PlanarMap::build(self.twin.clone(), self.face_next.clone())
            .expect("dual of a valid sphere map is valid")
    }

    /// The mirror image: vertex rotations reversed.
    pub fn mirror(&self) -> PlanarMap {
        PlanarMap::build(self.twin.clone(), self.vertex_prev.clone())
            .expect("mirror of a valid map is valid")
    }

    /// Truncation: each vertex of degree k becomes a k-gonal face, each s-gonal
    /// face becomes a 2s-gon, and the result is 3-regular on 2E vertices.
    ///
    /// Dart `d` spawns three darts `3d` (along the old edge), `3d+1` (to the next
    /// corner counterclockwise) and `3d+2` (to the previous corner).
    pub fn truncate(&self) -> PlanarMap {
        let n = self.dart_count();
        let mut twin = vec![0; 3 * n];
        let mut next = vec![0; 3 * n];
        for d in 0..n {
            twin[3 * d] = 3 * self.twin[d];
            twin[3 * d + 1] = 3 * self.vertex_next[d] + 2;
            twin[3 * d + 2] = 3 * self.vertex_prev[d] + 1;
            next[3 * d] = 3 * d + 1;
            next[3 * d + 1] = 3 * d + 2;
            next[3 * d + 2] = 3 * d;
        }
        PlanarMap::build(twin, next).expect("truncation of a valid map is valid")
    }

    /// For a truncated map, where each face of `self.truncate()` came from.
    /// Returns, per truncation face id, either the original vertex or the
    /// original face.
    pub fn truncate_face_origin(&self, truncated: &PlanarMap) -> Vec<TruncFaceOrigin> {
        let mut origin = vec![TruncFaceOrigin::Vertex(usize::MAX); truncated.face_count()];
        for td in 0..truncated.dart_count() {
            let d = td / 3;
            let o = match td % 3 {
                0 => TruncFaceOrigin::Face(self.face_of[d]),
                1 => TruncFaceOrigin::Face(self.face_of[self.twin[d]]),
                _ => TruncFaceOrigin::Vertex(self.vertex_of[d]),
            };
            origin[truncated.face_of(td)] = o;
        }
        origin
    }

    /// Proper 2-coloring of the faces (the bipartition of the dual).
    pub fn face_bipartition(&self) -> Result<FaceBipartition, MapError> {
        if self.vertex_degrees().iter().any(|&d| d % 2 != 0) {
            return Err(MapError::OddVertexDegree);
        }
        let mut color = vec![u8::MAX; self.face_count];
        color[self.face_of[0]] = 0;
        let mut stack = vec![0usize];
        let mut seen_face = vec![false; self.face_count];
        seen_face[self.face_of[0]] = true;
        while let Some(d) = stack.pop() {
            let f = self.face_of[d];
            for x in self.face_orbit(d) {
                let g = self.face_of[self.twin[x]];
                if color[g] == u8::MAX {
                    color[g] = 1 - color[f];
                }
                debug_assert_ne!(color[g], color[f]);
                if !seen_face[g] {
                    seen_face[g] = true;
                    stack.push(self.twin[x]);
                }
            }
        }
        Ok(FaceBipartition { color })
    }

    fn code_from(&self, start: Dart, mirrored: bool) -> Vec<u32> {
        let n = self.dart_count();
        let rot = if mirrored {
            &self.vertex_prev
        } else {
            &self.vertex_next
        };
        let mut label = vec![u32::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[start] = 0;
        order.push(start);
        let mut i = 0;
        while i < order.len() {
            let d = order[i];
            for nb in [self.twin[d], rot[d]] {
                if label[nb] == u32::MAX {
                    label[nb] = order.len() as u32;
                    order.push(nb);
                }
            }
            i += 1;
        }
        let mut code = Vec::with_capacity(2 * n);
        for &d in &order {
            code.push(label[self.twin[d]]);
            code.push(label[rot[d]]);
        }
        code
    }

    fn relabeling_from(&self, start: Dart, mirrored: bool) -> Vec<Dart> {
        let n = self.dart_count();
        let rot = if mirrored {
            &self.vertex_prev
        } else {
            &self.vertex_next
        };
        let mut label = vec![u32::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[start] = 0;
        order.push(start);
        let mut i = 0;
        while i < order.len() {
            let d = order[i];
            for nb in [self.twin[d], rot[d]] {
                if label[nb] == u32::MAX {
                    label[nb] = order.len() as u32;
                    order.push(nb);
                }
            }
            i += 1;
        }
        order
    }

    /// Canonical byte code: equal codes exactly when the maps are isomorphic as
    /// oriented maps, or up to reflection when `include_mirror` is set.
    pub fn canonical_code(&self, include_mirror: bool) -> Vec<u8> {
        let mut best: Option<Vec<u32>> = None;
        let sides: &[bool] = if include_mirror {
            &[false, true]
        } else {
            &[false]
        };
        for &m in sides {
            for start in 0..self.dart_count() {
                let code = self.code_from(start, m);
                if best.as_ref().map_or(true, |b| code < *b) {
                    best = Some(code);
                }
            }
        }
        let best = best.unwrap();
        let mut bytes = Vec::with_capacity(4 + best.len() * 2);
        bytes.extend_from_slice(&(self.dart_count() as u32).to_be_bytes());
        for w in best {
            bytes.extend_from_slice(&(w as u16).to_be_bytes());
        }
        bytes
    }

    /// Rebuild a map from a canonical code produced by [`canonical_code`].
    pub fn from_canonical_code(bytes: &[u8]) -> Result<PlanarMap, MapError> {
        if bytes.len() < 4 {
            return Err(MapError::NotInvolution);
        }
        let n = u32::from_be_bytes([bytes[0], bytes[1], bytes[2], bytes[3]]) as usize;
        if bytes.len() != 4 + 4 * n {
            return Err(MapError::NotInvolution);
        }
        let mut twin = vec![0; n];
        let mut next = vec![0; n];
        for d in 0..n {
            let o = 4 + 4 * d;
            twin[d] = u16::from_be_bytes([bytes[o], bytes[o + 1]]) as usize;
            next[d] = u16::from_be_bytes([bytes[o + 2], bytes[o + 3]]) as usize;
        }
        PlanarMap::build(twin, next)
    }

    pub fn is_isomorphic(&self, other: &PlanarMap, include_mirror: bool) -> bool {
        if self.dart_count() != other.dart_count() {
            return false;
        }
        self.canonical_code(include_mirror) == other.canonical_code(include_mirror)
    }

    /// Is the map taken to itself by some reflection?
    pub fn is_achiral(&self) -> bool {
        self.canonical_code(false) == self.mirror().canonical_code(false)
    }

    /// The full automorphism group as dart permutations, each tagged with
    /// `true` when orientation-reversing. Contains the identity.
    pub fn automorphisms(&self) -> Vec<(Vec<Dart>, bool)> {
        let reference = self.code_from(0, false);
        let ref_order = self.relabeling_from(0, false);
        let mut out = Vec::new();
        for mirrored in [false, true] {
            for start in 0..self.dart_count() {
                if self.code_from(start, mirrored) == reference {
                    let order = self.relabeling_from(start, mirrored);
                    let mut perm = vec![0; self.dart_count()];
                    for i in 0..order.len() {
                        perm[ref_order[i]] = order[i];
                    }
                    out.push((perm, mirrored));
                }
            }
        }
        out
    }
}

/// Provenance of a truncation face.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TruncFaceOrigin {
    Vertex(usize),
    Face(usize),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{self, NamedGraphId};

    #[test]
    fn six_k2_basic() {
        let m = named::named_graph(NamedGraphId::SixK2).unwrap();
        assert_eq!(m.vertex_count(), 2);
        assert_eq!(m.edge_count(), 6);
        assert_eq!(m.face_count(), 6);
        let p = m.p_vector();
        assert_eq!((p.p1(), p.p2(), p.p3()), (0, 6, 0));
        assert!(m.is_sphere_123_6());
    }

    #[test]
    fn trifolium_basic() {
        let m = named::named_graph(NamedGraphId::Trifolium).unwrap();
        assert_eq!(m.vertex_count(), 1);
        assert_eq!(m.edge_count(), 3);
        assert_eq!(m.face_count(), 4);
        let p = m.p_vector();
        assert_eq!((p.p1(), p.p2(), p.p3()), (3, 0, 1));
        assert!(m.is_sphere_123_6());
    }

    #[test]
    fn twin_fixed_point_rejected() {
        // twin with a fixed point
        let twin = vec![0, 1];
        let next = vec![1, 0];
        assert_eq!(
            PlanarMap::build(twin, next).unwrap_err(),
            MapError::NotInvolution
        );
    }

    #[test]
    fn torus_rejected() {
        // one vertex, three pairwise-crossing loops: genus 1
        let twin = vec![3, 4, 5, 0, 1, 2];
        let next = vec![1, 2, 3, 4, 5, 0];
        assert!(matches!(
            PlanarMap::build(twin, next),
            Err(MapError::GenusNotZero(0))
        ));
    }

    #[test]
    fn dual_of_six_k2_is_hexagon() {
        let m = named::named_graph(NamedGraphId::SixK2).unwrap();
        let d = m.dual();
        assert_eq!(d.vertex_count(), 6);
        assert!(d.is_regular(2));
        assert_eq!(d.face_count(), 2);
        assert_eq!(d.face_sizes(), vec![6, 6]);
    }

    #[test]
    fn dual_is_involution() {
        for id in [
            NamedGraphId::SixK2,
            NamedGraphId::ThreeK3,
            NamedGraphId::Trifolium,
            NamedGraphId::T2,
            NamedGraphId::K2Tetrahedron,
        ] {
            let m = named::named_graph(id).unwrap();
            let dd = m.dual().dual();
            assert_eq!(dd.twin_slice(), m.twin_slice());
            assert_eq!(dd.vertex_next_slice(), m.vertex_next_slice());
        }
    }

    #[test]
    fn dual_of_three_k3() {
        let m = named::named_graph(NamedGraphId::ThreeK3).unwrap();
        let d = m.dual();
        // triangle with doubled edges: 8 vertices? no: dual of 3xK3 swaps V=3,F=8
        assert_eq!(d.vertex_count(), 8);
        assert_eq!(d.face_count(), 3);
        assert!(d.dual().is_isomorphic(&m, false));
    }

    #[test]
    fn truncate_six_k2_is_hexagonal_prism() {
        let m = named::named_graph(NamedGraphId::SixK2).unwrap();
        let t = m.truncate();
        assert_eq!(t.vertex_count(), 12);
        assert!(t.is_regular(3));
        let mut sizes = t.face_sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![4, 4, 4, 4, 4, 4, 6, 6]);
    }

    #[test]
    fn truncate_trifolium_is_2_6_sphere() {
        let m = named::named_graph(NamedGraphId::Trifolium).unwrap();
        let t = m.truncate();
        assert_eq!(t.vertex_count(), 6);
        assert!(t.is_regular(3));
        let p = t.p_vector();
        assert_eq!(p.p2(), 3);
        assert_eq!(p.p(6), 2);
    }

    #[test]
    fn truncate_vertex_count_law() {
        for id in [
            NamedGraphId::SixK2,
            NamedGraphId::Trifolium,
            NamedGraphId::K2Tetrahedron,
        ] {
            let m = named::named_graph(id).unwrap();
            assert_eq!(m.truncate().vertex_count(), 2 * m.edge_count());
        }
    }

    #[test]
    fn truncate_origin_tracking() {
        let m = named::named_graph(NamedGraphId::SixK2).unwrap();
        let t = m.truncate();
        let origins = m.truncate_face_origin(&t);
        let vertex_faces = origins
            .iter()
            .filter(|o| matches!(o, TruncFaceOrigin::Vertex(_)))
            .count();
        assert_eq!(vertex_faces, m.vertex_count());
        assert_eq!(origins.len() - vertex_faces, m.face_count());
    }

    #[test]
    fn bipartition_six_k2() {
        let m = named::named_graph(NamedGraphId::SixK2).unwrap();
        let bip = m.face_bipartition().unwrap();
        let mut counts = [0; 2];
        for f in 0..m.face_count() {
            counts[bip.class_of(f) as usize] += 1;
        }
        assert_eq!(counts, [3, 3]);
        for d in 0..m.dart_count() {
            assert_ne!(
                bip.class_of(m.face_of(d)),
                bip.class_of(m.face_of(m.alpha(d)))
            );
        }
    }

    #[test]
    fn bipartition_trifolium() {
        let m = named::named_graph(NamedGraphId::Trifolium).unwrap();
        let bip = m.face_bipartition().unwrap();
        // three 1-gons in one class, the 3-gon alone in the other
        let sizes = m.face_sizes();
        for f in 0..m.face_count() {
            if sizes[f] == 3 {
                for g in 0..m.face_count() {
                    if sizes[g] == 1 {
                        assert_ne!(bip.class_of(f), bip.class_of(g));
                    }
                }
            }
        }
    }

    #[test]
    fn bipartition_requires_even_degrees() {
        let m = named::named_graph(NamedGraphId::SixK2).unwrap().truncate();
        assert_eq!(
            m.face_bipartition().unwrap_err(),
            MapError::OddVertexDegree
        );
    }

    #[test]
    fn canonical_code_invariant_under_relabeling() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for id in [
            NamedGraphId::Trifolium,
            NamedGraphId::T2,
            NamedGraphId::K2Tetrahedron,
        ] {
            let m = named::named_graph(id).unwrap();
            let code = m.canonical_code(true);
            let n = m.dart_count();
            for _ in 0..10 {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let mut twin = vec![0; n];
                let mut next = vec![0; n];
                for d in 0..n {
                    twin[perm[d]] = perm[m.alpha(d)];
                    next[perm[d]] = perm[m.sigma(d)];
                }
                let r = PlanarMap::build(twin, next).unwrap();
                assert_eq!(r.canonical_code(true), code);
                assert_eq!(r.canonical_code(false), m.canonical_code(false));
            }
        }
    }

    #[test]
    fn automorphism_group_orders() {
        // |D6h| = 24, |C3v| = 6
        let m = named::named_graph(NamedGraphId::SixK2).unwrap();
        assert_eq!(m.automorphisms().len(), 24);
        let t = named::named_graph(NamedGraphId::Trifolium).unwrap();
        assert_eq!(t.automorphisms().len(), 6);
    }

    #[test]
    fn automorphisms_form_group() {
        let m = named::named_graph(NamedGraphId::T2).unwrap();
        let autos = m.automorphisms();
        assert!(autos.iter().any(|(p, _)| p.iter().enumerate().all(|(i, &x)| i == x)));
        // closure under composition
        for (p, pm) in &autos {
            for (q, qm) in &autos {
                let comp: Vec<usize> = (0..p.len()).map(|d| q[p[d]]).collect();
                let cm = pm ^ qm;
                assert!(autos.iter().any(|(r, rm)| *r == comp && *rm == cm));
            }
        }
        // every element preserves the face-size census; orientation-reversing
        // elements send the face right of d to the face left of p[d]
        let sizes = m.face_sizes();
        for (p, rev) in &autos {
            for d in 0..m.dart_count() {
                let image = if *rev { m.alpha(p[d]) } else { p[d] };
                assert_eq!(sizes[m.face_of(d)], sizes[m.face_of(image)]);
            }
        }
    }

    #[test]
    fn code_roundtrip() {
        let m = named::named_graph(NamedGraphId::T2).unwrap();
        let code = m.canonical_code(true);
        let back = PlanarMap::from_canonical_code(&code).unwrap();
        assert!(back.is_isomorphic(&m, true));
        assert_eq!(back.canonical_code(true), code);
    }
}
