//! The one-parameter families of spheres with 1-gons that fall outside the
//! edge-splitting schemes: chains of enclosing loops and twisted triangulated
//! tubes of circumference two. The dart patterns are pinned by set equality
//! with the exhaustive search for n <= 8 (see the enumerator tests).

use std::collections::BTreeMap;

use crate::map::PlanarMap;

/// Chain of enclosing loops with nested end caps; one member for every
/// n >= 1. Every 1-gon is edge-adjacent to a 2-gon.
pub fn a_chain(n: usize) -> PlanarMap {
    assert!(n >= 1);
    let mut twin = vec![usize::MAX; 6 * n];
    let mut pair = |x: usize, y: usize| {
        twin[x] = y;
        twin[y] = x;
    };
    if n == 1 {
        pair(0, 1);
        pair(2, 5);
        pair(3, 4);
    } else {
        pair(0, 1);
        pair(2, 5);
        for k in 1..n {
            let b = 6 * k;
            let p = 6 * (k - 1);
            pair(b, p + 3);
            pair(b + 1, p + 4);
            pair(b + 2, b + 5);
        }
        let last = 6 * (n - 1);
        pair(last + 3, last + 4);
    }
    let next: Vec<usize> = (0..6 * n).map(|d| 6 * (d / 6) + (d % 6 + 1) % 6).collect();
    PlanarMap::build(twin, next).unwrap()
}

fn chain_bc(n: usize, twisted_end: bool) -> PlanarMap {
    assert!(n >= 3);
    let s = |k: usize, slot: usize| 6 * k + slot;
    let mut twin = vec![usize::MAX; 6 * n];
    let mut pair = |x: usize, y: usize| {
        twin[x] = y;
        twin[y] = x;
    };
    pair(s(0, 0), s(0, 1));
    pair(s(0, 2), s(1, 0));
    pair(s(0, 3), s(1, 5));
    pair(s(0, 4), s(2, 0));
    pair(s(0, 5), s(1, 1));
    for k in 1..=n - 2 {
        pair(s(k, 2), s(k + 1, 5));
        pair(s(k, 4), s(k + 1, 1));
        if k + 2 <= n - 1 {
            pair(s(k, 3), s(k + 2, 0));
        }
    }
    let last = n - 1;
    if twisted_end {
        pair(s(n - 2, 3), s(last, 4));
        pair(s(last, 2), s(last, 3));
    } else {
        pair(s(n - 2, 3), s(last, 2));
        pair(s(last, 3), s(last, 4));
    }
    let next: Vec<usize> = (0..6 * n).map(|d| 6 * (d / 6) + (d % 6 + 1) % 6).collect();
    PlanarMap::build(twin, next).unwrap()
}

/// Loop chain with 3-strand ends and skip edges; mirror-symmetric (Cs).
pub fn b_chain(n: usize) -> PlanarMap {
    chain_bc(n, false)
}

/// The chiral twin of [`b_chain`]: the far cap attaches one slot rotated.
pub fn c_chain(n: usize) -> PlanarMap {
    chain_bc(n, true)
}

/// The two-vertex member of the chiral family.
pub fn c_two() -> PlanarMap {
    PlanarMap::build(
        vec![1, 0, 6, 9, 8, 7, 2, 5, 4, 3, 11, 10],
        vec![1, 2, 3, 4, 5, 0, 7, 8, 9, 10, 11, 6],
    )
    .unwrap()
}

// ---------------------------------------------------------------------------
// circumference-2 triangulated tubes
// ---------------------------------------------------------------------------

// ring vertex slots, counterclockwise
const E: usize = 0;
const NE: usize = 1;
const NW: usize = 2;
const W: usize = 3;
const SW: usize = 4;
const SE: usize = 5;

struct TubeSkeleton {
    twin: Vec<usize>,
    bottom_free: [usize; 4],
    top_free: [usize; 4],
}

/// Rings 0..r, vertices A_y (block 12y) and B_y (block 12y + 6), joined by
/// doubled ring edges and the lattice diagonals. The four downward slots of
/// ring 0 and the four upward slots of ring r-1 stay open for the caps.
fn tube_skeleton(r: usize, extra_darts: usize) -> TubeSkeleton {
    assert!(r >= 1);
    let mut twin = vec![usize::MAX; 12 * r + extra_darts];
    let a = |y: usize, slot: usize| 12 * y + slot;
    let b = |y: usize, slot: usize| 12 * y + 6 + slot;
    for y in 0..r {
        twin[a(y, E)] = b(y, W);
        twin[b(y, W)] = a(y, E);
        twin[a(y, W)] = b(y, E);
        twin[b(y, E)] = a(y, W);
        if y + 1 < r {
            let links = [
                (a(y, NE), a(y + 1, SW)),
                (a(y, NW), b(y + 1, SE)),
                (b(y, NE), b(y + 1, SW)),
                (b(y, NW), a(y + 1, SE)),
            ];
            for (x, z) in links {
                twin[x] = z;
                twin[z] = x;
            }
        }
    }
    TubeSkeleton {
        twin,
        bottom_free: [a(0, SW), a(0, SE), b(0, SW), b(0, SE)],
        top_free: [
            a(r - 1, NE),
            a(r - 1, NW),
            b(r - 1, NE),
            b(r - 1, NW),
        ],
    }
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    let idx = [0, 1, 2, 3];
    for &p0 in &idx {
        for &p1 in &idx {
            for &p2 in &idx {
                for &p3 in &idx {
                    let p = [p0, p1, p2, p3];
                    let mut seen = [false; 4];
                    for &x in &p {
                        seen[x] = true;
                    }
                    if seen.iter().all(|&s| s) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn dedup(maps: Vec<PlanarMap>) -> Vec<PlanarMap> {
    let mut by_code: BTreeMap<Vec<u8>, PlanarMap> = BTreeMap::new();
    for m in maps {
        by_code.entry(m.canonical_code(true)).or_insert(m);
    }
    by_code.into_values().collect()
}

fn cyclic_next(block: usize, size: usize) -> impl Fn(usize) -> usize {
    move |d| {
        let base = (d / size) * size;
        let _ = block;
        base + (d % size + 1) % size
    }
}

fn finish(mut twin: Vec<usize>) -> Option<PlanarMap> {
    if twin.iter().any(|&t| t == usize::MAX) {
        return None;
    }
    let n = twin.len();
    let nextf = cyclic_next(0, 6);
    let next: Vec<usize> = (0..n).map(nextf).collect();
    let m = PlanarMap::build(std::mem::take(&mut twin), next).ok()?;
    if m.is_sphere_123_6() {
        Some(m)
    } else {
        None
    }
}

/// All tube spheres with a loop cap at each end: even n = 2r + 2, two 1-gons.
pub fn tube_loops(n: usize) -> Vec<PlanarMap> {
    assert!(n >= 2 && n % 2 == 0);
    let perms = permutations4();
    let mut found = Vec::new();
    if n == 2 {
        // two loop caps glued to each other by four edges
        for p in &perms {
            let mut twin = vec![usize::MAX; 12];
            twin[0] = 1;
            twin[1] = 0;
            twin[6] = 7;
            twin[7] = 6;
            for (i, &pi) in p.iter().enumerate() {
                twin[2 + i] = 8 + pi;
                twin[8 + pi] = 2 + i;
            }
            if let Some(m) = finish(twin) {
                if m.p_vector().p1() == 2 {
                    found.push(m);
                }
            }
        }
        return dedup(found);
    }
    let r = (n - 2) / 2;
    for p_bot in &perms {
        for p_top in &perms {
            let sk = tube_skeleton(r, 12);
            let mut twin = sk.twin;
            let c0 = 12 * r;
            let c1 = 12 * r + 6;
            twin[c0] = c0 + 1;
            twin[c0 + 1] = c0;
            twin[c1] = c1 + 1;
            twin[c1 + 1] = c1;
            for i in 0..4 {
                twin[c0 + 2 + i] = sk.bottom_free[p_bot[i]];
                twin[sk.bottom_free[p_bot[i]]] = c0 + 2 + i;
                twin[c1 + 2 + i] = sk.top_free[p_top[i]];
                twin[sk.top_free[p_top[i]]] = c1 + 2 + i;
            }
            if let Some(m) = finish(twin) {
                if m.p_vector().p1() == 2 {
                    found.push(m);
                }
            }
        }
    }
    dedup(found)
}

/// All tube spheres with one loop cap and a four-strand bundle closing the far
/// ring: odd n = 2r + 1, one 1-gon.
pub fn tube_bundle(n: usize) -> Vec<PlanarMap> {
    assert!(n >= 3 && n % 2 == 1);
    let r = (n - 1) / 2;
    let perms = permutations4();
    // matchings of the four top slots into two cross pairs (no loops)
    let matchings: [[(usize, usize); 2]; 2] = [[(0, 2), (1, 3)], [(0, 3), (1, 2)]];
    let mut found = Vec::new();
    for p_bot in &perms {
        for matching in &matchings {
            let sk = tube_skeleton(r, 6);
            let mut twin = sk.twin;
            let c0 = 12 * r;
            twin[c0] = c0 + 1;
            twin[c0 + 1] = c0;
            for i in 0..4 {
                twin[c0 + 2 + i] = sk.bottom_free[p_bot[i]];
                twin[sk.bottom_free[p_bot[i]]] = c0 + 2 + i;
            }
            let mut ok = true;
            for &(x, y) in matching {
                let (dx, dy) = (sk.top_free[x], sk.top_free[y]);
                if dx / 6 == dy / 6 {
                    ok = false;
                    break;
                }
                twin[dx] = dy;
                twin[dy] = dx;
            }
            if !ok {
                continue;
            }
            if let Some(m) = finish(twin) {
                if m.p_vector().p1() == 1 {
                    found.push(m);
                }
            }
        }
    }
    dedup(found)
}

/// Every series member with n vertices (the chains plus all tube variants).
pub fn all_members_at(n: usize) -> Vec<PlanarMap> {
    let mut out = vec![a_chain(n)];
    if n >= 3 {
        out.push(b_chain(n));
        out.push(c_chain(n));
    }
    if n == 2 {
        out.push(c_two());
    }
    if n >= 2 && n % 2 == 0 {
        out.extend(tube_loops(n));
    }
    if n >= 3 && n % 2 == 1 {
        out.extend(tube_bundle(n));
    }
    dedup(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_chain_shapes() {
        for n in 1..=8 {
            let m = a_chain(n);
            assert_eq!(m.vertex_count(), n);
            assert!(m.is_sphere_123_6());
            assert_eq!(m.p_vector().p1(), 2, "a_chain({n})");
            // defining property: a 1-gon edge-adjacent to a 2-gon
            let sizes = m.face_sizes();
            assert!((0..m.dart_count()).any(|d| {
                sizes[m.face_of(d)] == 1 && sizes[m.face_of(m.alpha(d))] == 2
            }));
        }
    }

    #[test]
    fn bc_chain_shapes() {
        for n in 3..=8 {
            let b = b_chain(n);
            let c = c_chain(n);
            assert!(b.is_sphere_123_6());
            assert!(c.is_sphere_123_6());
            assert_eq!(b.p_vector().p1(), 2);
            assert_eq!(c.p_vector().p1(), 2);
            assert!(b.is_achiral());
            assert!(!c.is_achiral());
            assert!(!b.is_isomorphic(&c, true));
        }
    }

    #[test]
    fn tube_counts_small() {
        assert_eq!(tube_loops(2).len(), 2);
        assert!(!tube_loops(4).is_empty());
        for n in [3, 5, 7] {
            let t = tube_bundle(n);
            assert!(!t.is_empty(), "tube_bundle({n})");
            for m in &t {
                assert_eq!(m.vertex_count(), n);
                assert_eq!(m.p_vector().p1(), 1);
            }
        }
    }
}
