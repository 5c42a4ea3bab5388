//! Schoenflies point-group names for sphere maps.
//!
//! The classification works entirely on the combinatorial automorphism group:
//! the orientation-preserving subgroup is identified by its order and largest
//! rotation order (cyclic, dihedral or tetrahedral), and orientation-reversing
//! elements split into reflections (involutions fixing a vertex, an edge or a
//! face) and rotoreflections (fixed-cell-free). The inversion is the
//! fixed-cell-free orientation-reversing involution.

use thiserror::Error;

use crate::map::{Dart, PlanarMap};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("automorphism group of order {0} with max rotation {1} is outside the expected point groups")]
    UnexpectedGroup(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointGroup {
    pub name: &'static str,
    pub order: usize,
    pub rotation_order: usize,
}

fn perm_order(p: &[Dart]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut order = 1usize;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = p[d];
            len += 1;
        }
        order = lcm(order, len);
    }
    order
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Does this automorphism fix a vertex, an edge or a face?
fn has_fixed_cell(m: &PlanarMap, p: &[Dart], reversing: bool) -> bool {
    // fixed edge: p maps {d, alpha d} to itself
    for d in 0..m.dart_count() {
        if p[d] == d || p[d] == m.alpha(d) {
            return true;
        }
    }
    // fixed vertex
    for d in 0..m.dart_count() {
        if m.vertex_of(p[d]) == m.vertex_of(d) {
            return true;
        }
    }
    // fixed face: orientation-reversing elements send the face right of d to
    // the face left of p[d]
    for d in 0..m.dart_count() {
        let image = if reversing { m.alpha(p[d]) } else { p[d] };
        if m.face_of(image) == m.face_of(d) {
            return true;
        }
    }
    false
}

/// Schoenflies point group of a sphere map.
pub fn point_group(m: &PlanarMap) -> Result<PointGroup, SymmetryError> {
    let autos = m.automorphisms();
    let order = autos.len();
    let rotations: Vec<&(Vec<Dart>, bool)> = autos.iter().filter(|(_, rev)| !rev).collect();
    let rot_order = rotations.len();
    let max_rot = rotations
        .iter()
        .map(|(p, _)| perm_order(p))
        .max()
        .unwrap_or(1);

    // orientation-reversing analysis
    let mut reflections = 0usize;
    let mut has_inversion = false;
    let mut max_reversing = 0usize;
    for (p, rev) in &autos {
        if !rev {
            continue;
        }
        let o = perm_order(p);
        max_reversing = max_reversing.max(o);
        if o == 2 {
            if has_fixed_cell(m, p, true) {
                reflections += 1;
            } else {
                has_inversion = true;
            }
        }
    }

    let name = if order == rot_order {
        match (rot_order, max_rot) {
            (1, 1) => "C1",
            (2, 2) => "C2",
            (3, 3) => "C3",
            (4, 2) => "D2",
            (6, 3) => "D3",
            (12, 6) => "D6",
            (12, 3) => "T",
            _ => return Err(SymmetryError::UnexpectedGroup(order, max_rot)),
        }
    } else if order == 2 * rot_order {
        match (rot_order, max_rot) {
            (1, 1) => {
                if has_inversion {
                    "Ci"
                } else {
                    "Cs"
                }
            }
            (2, 2) => {
                if has_inversion && reflections > 0 {
                    "C2h"
                } else if reflections >= 2 {
                    "C2v"
                } else if !has_inversion && reflections == 0 && max_reversing == 4 {
                    "S4"
                } else {
                    return Err(SymmetryError::UnexpectedGroup(order, max_rot));
                }
            }
            (3, 3) => {
                if has_inversion {
                    "S6"
                } else if reflections == 3 {
                    "C3v"
                } else if reflections == 1 {
                    "C3h"
                } else {
                    return Err(SymmetryError::UnexpectedGroup(order, max_rot));
                }
            }
            (4, 2) => {
                if has_inversion {
                    "D2h"
                } else {
                    "D2d"
                }
            }
            (6, 3) => {
                if has_inversion {
                    "D3d"
                } else {
                    "D3h"
                }
            }
            (12, 6) => {
                if has_inversion {
                    "D6h"
                } else {
                    return Err(SymmetryError::UnexpectedGroup(order, max_rot));
                }
            }
            (12, 3) => {
                if has_inversion {
                    "Th"
                } else {
                    "Td"
                }
            }
            _ => return Err(SymmetryError::UnexpectedGroup(order, max_rot)),
        }
    } else {
        return Err(SymmetryError::UnexpectedGroup(order, max_rot));
    };
    Ok(PointGroup {
        name,
        order,
        rotation_order: rot_order,
    })
}

/// First occurrence size of each observed group.
pub fn group_minima<'a>(
    records: impl Iterator<Item = (usize, &'a PlanarMap)>,
) -> std::collections::BTreeMap<&'static str, usize> {
    let mut minima = std::collections::BTreeMap::new();
    for (n, m) in records {
        let g = point_group(m).expect("corpus groups are in range");
        minima.entry(g.name).or_insert(n);
    }
    minima
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{self, NamedGraphId};

    fn group_of(id: NamedGraphId) -> &'static str {
        point_group(&named::named_graph(id).unwrap()).unwrap().name
    }

    #[test]
    fn anchor_groups() {
        assert_eq!(group_of(NamedGraphId::SixK2), "D6h");
        assert_eq!(group_of(NamedGraphId::ThreeK3), "D3h");
        assert_eq!(group_of(NamedGraphId::Trifolium), "C3v");
        assert_eq!(group_of(NamedGraphId::T2), "C3h");
        assert_eq!(group_of(NamedGraphId::K2Tetrahedron), "Td");
    }

    #[test]
    fn gc_anchor_groups() {
        let m = named::named_graph(NamedGraphId::SixK2).unwrap();
        let d6 = crate::gc::gc(&m, 2, 1).unwrap();
        assert_eq!(point_group(&d6.members[0]).unwrap().name, "D6");
        let d6h = crate::gc::gc(&m, 2, 0).unwrap();
        assert_eq!(point_group(&d6h.members[0]).unwrap().name, "D6h");
        assert_eq!(d6h.members[0].vertex_count(), 8);
    }

    #[test]
    fn tripling_anchor_groups() {
        let m = named::named_graph(NamedGraphId::SixK2).unwrap();
        let bip = m.face_bipartition().unwrap();
        let t = crate::gc::oriented_tripling(&m, &bip, 0).unwrap();
        assert_eq!(point_group(&t).unwrap().name, "D3d");
        let k = named::named_graph(NamedGraphId::K2Tetrahedron).unwrap();
        let bip = k.face_bipartition().unwrap();
        let t = crate::gc::oriented_tripling(&k, &bip, 0).unwrap();
        assert_eq!(point_group(&t).unwrap().name, "Th");
    }
}
