//! Constructors for the named spheres and infinite series used as anchors and
//! seeds: the two exceptional ({2,3},6)-spheres, the Trifolium and T2, the
//! doubled tetrahedron, and the five one-parameter families.

use thiserror::Error;

use crate::map::PlanarMap;
use crate::surgery::{decorate, LoopSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NamedGraphError {
    #[error("parameter {0} out of range for this series")]
    BadParameter(u32),
}

/// Identifier of a named sphere. Series parameters follow the vertex-count
/// conventions of the source family: `R(i)` has n = 2i+1, `S(i)` has n = 2i,
/// `A(i)`, `B(i)`, `C(i)` have n = i, and `Ti(i)` has n = 3^(i-1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGraphId {
    SixK2,
    ThreeK3,
    Trifolium,
    T2,
    K2Tetrahedron,
    R(u32),
    S(u32),
    A(u32),
    B(u32),
    C(u32),
    Ti(u32),
}

impl std::fmt::Display for NamedGraphId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NamedGraphId::SixK2 => write!(f, "six-k2"),
            NamedGraphId::ThreeK3 => write!(f, "three-k3"),
            NamedGraphId::Trifolium => write!(f, "trifolium"),
            NamedGraphId::T2 => write!(f, "t2"),
            NamedGraphId::K2Tetrahedron => write!(f, "k2-tetrahedron"),
            NamedGraphId::R(i) => write!(f, "r{}", i),
            NamedGraphId::S(i) => write!(f, "s{}", i),
            NamedGraphId::A(i) => write!(f, "a{}", i),
            NamedGraphId::B(i) => write!(f, "b{}", i),
            NamedGraphId::C(i) => write!(f, "c{}", i),
            NamedGraphId::Ti(i) => write!(f, "ti{}", i),
        }
    }
}

impl std::str::FromStr for NamedGraphId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.to_ascii_lowercase();
        match s.as_str() {
            "six-k2" | "6xk2" => return Ok(NamedGraphId::SixK2),
            "three-k3" | "3xk3" => return Ok(NamedGraphId::ThreeK3),
            "trifolium" | "t1" => return Ok(NamedGraphId::Trifolium),
            "t2" => return Ok(NamedGraphId::T2),
            "k2-tetrahedron" | "k2xtet" => return Ok(NamedGraphId::K2Tetrahedron),
            _ => {}
        }
        let (head, tail) = s.split_at(1);
        let param: u32 = if head == "t" && tail.starts_with('i') {
            tail[1..].parse().map_err(|_| format!("bad series id {s}"))?
        } else {
            tail.parse().map_err(|_| format!("bad series id {s}"))?
        };
        match head {
            "r" => Ok(NamedGraphId::R(param)),
            "s" => Ok(NamedGraphId::S(param)),
            "a" => Ok(NamedGraphId::A(param)),
            "b" => Ok(NamedGraphId::B(param)),
            "c" => Ok(NamedGraphId::C(param)),
            "t" => Ok(NamedGraphId::Ti(param)),
            _ => Err(format!("unknown graph id {s}")),
        }
    }
}

/// The 2-vertex, 3-edge bundle (three parallel edges); all faces are 2-gons.
pub fn theta_map() -> PlanarMap {
    PlanarMap::build(vec![3, 5, 4, 0, 2, 1], vec![1, 2, 0, 4, 5, 3]).unwrap()
}

/// The 3-cycle as a map on the sphere.
pub fn triangle_map() -> PlanarMap {
    PlanarMap::build(vec![2, 4, 0, 5, 1, 3], vec![1, 0, 3, 2, 5, 4]).unwrap()
}

/// K4 with its planar rotation system.
pub fn k4_map() -> PlanarMap {
    let twin = vec![5, 9, 6, 8, 10, 0, 2, 11, 3, 1, 4, 7];
    let next = vec![1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9];
    PlanarMap::build(twin, next).unwrap()
}

fn six_k2() -> PlanarMap {
    decorate(&theta_map(), &[2, 2, 2], &[]).unwrap()
}

fn three_k3() -> PlanarMap {
    decorate(&triangle_map(), &[3, 3, 3], &[]).unwrap()
}

fn trifolium() -> PlanarMap {
    PlanarMap::build(vec![1, 0, 3, 2, 5, 4], vec![1, 2, 3, 4, 5, 0]).unwrap()
}

fn t2() -> PlanarMap {
    // triangle with doubled edges and one loop per gap, placed with a
    // three-fold rotational symmetry
    let base = triangle_map();
    decorate(
        &base,
        &[2, 2, 2],
        &[
            LoopSpec {
                edge: 0,
                gap: 0,
                end: 0,
            },
            LoopSpec {
                edge: 1,
                gap: 0,
                end: 1,
            },
            LoopSpec {
                edge: 2,
                gap: 0,
                end: 0,
            },
        ],
    )
    .unwrap()
}

fn k2_tetrahedron() -> PlanarMap {
    decorate(&k4_map(), &[2; 6], &[]).unwrap()
}

pub fn named_graph(id: NamedGraphId) -> Result<PlanarMap, NamedGraphError> {
    match id {
        NamedGraphId::SixK2 => Ok(six_k2()),
        NamedGraphId::ThreeK3 => Ok(three_k3()),
        NamedGraphId::Trifolium => Ok(trifolium()),
        NamedGraphId::T2 => Ok(t2()),
        NamedGraphId::K2Tetrahedron => Ok(k2_tetrahedron()),
        NamedGraphId::R(i) => series_r(i),
        NamedGraphId::S(i) => series_s(i),
        NamedGraphId::A(i) => series_a(i),
        NamedGraphId::B(i) => series_b(i),
        NamedGraphId::C(i) => series_c(i),
        NamedGraphId::Ti(i) => series_ti(i),
    }
}

/// All series members with `n` vertices, for injecting into the census.
pub fn series_members_at(n: usize) -> Vec<PlanarMap> {
    crate::series::all_members_at(n)
}

fn series_r(i: u32) -> Result<PlanarMap, NamedGraphError> {
    if i < 1 {
        return Err(NamedGraphError::BadParameter(i));
    }
    // the tube with a bundle end is mirror-symmetric; there is one per odd n
    let members = crate::series::tube_bundle(2 * i as usize + 1);
    members
        .into_iter()
        .find(|m| m.is_achiral())
        .ok_or(NamedGraphError::BadParameter(i))
}

fn series_s(i: u32) -> Result<PlanarMap, NamedGraphError> {
    if i < 1 {
        return Err(NamedGraphError::BadParameter(i));
    }
    // the centrally symmetric tube member where one exists; some sizes only
    // carry a twisted (C2) tube
    let members = crate::series::tube_loops(2 * i as usize);
    let c2h = members
        .iter()
        .position(|m| crate::symmetry::point_group(m).map_or(false, |g| g.name == "C2h"));
    match c2h {
        Some(pos) => Ok(members.into_iter().nth(pos).unwrap()),
        None => members
            .into_iter()
            .next()
            .ok_or(NamedGraphError::BadParameter(i)),
    }
}

fn series_a(i: u32) -> Result<PlanarMap, NamedGraphError> {
    if i < 1 {
        return Err(NamedGraphError::BadParameter(i));
    }
    Ok(crate::series::a_chain(i as usize))
}

fn series_b(i: u32) -> Result<PlanarMap, NamedGraphError> {
    match i {
        0 | 1 => Err(NamedGraphError::BadParameter(i)),
        2 => series_s(1),
        _ => Ok(crate::series::b_chain(i as usize)),
    }
}

fn series_c(i: u32) -> Result<PlanarMap, NamedGraphError> {
    match i {
        0 | 1 => Err(NamedGraphError::BadParameter(i)),
        2 => Ok(crate::series::c_two()),
        _ => Ok(crate::series::c_chain(i as usize)),
    }
}

fn series_ti(i: u32) -> Result<PlanarMap, NamedGraphError> {
    if i < 1 {
        return Err(NamedGraphError::BadParameter(i));
    }
    let mut m = trifolium();
    for _ in 1..i {
        let bip = m.face_bipartition().unwrap();
        // orient around the class holding the 1-gons
        let sizes = m.face_sizes();
        let one_gon_class = (0..m.face_count())
            .find(|&f| sizes[f] == 1)
            .map(|f| bip.class_of(f))
            .unwrap();
        m = crate::gc::oriented_tripling(&m, &bip, one_gon_class).unwrap();
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_k3_shape() {
        let m = three_k3();
        assert_eq!(m.vertex_count(), 3);
        assert!(m.is_sphere_123_6());
        let p = m.p_vector();
        assert_eq!((p.p1(), p.p2(), p.p3()), (0, 6, 2));
    }

    #[test]
    fn t2_shape() {
        let m = t2();
        assert_eq!(m.vertex_count(), 3);
        assert!(m.is_sphere_123_6());
        let p = m.p_vector();
        assert_eq!((p.p1(), p.p2(), p.p3()), (3, 0, 5));
    }

    #[test]
    fn k2_tetrahedron_shape() {
        let m = k2_tetrahedron();
        assert_eq!(m.vertex_count(), 4);
        assert!(m.is_sphere_123_6());
        let p = m.p_vector();
        assert_eq!((p.p1(), p.p2(), p.p3()), (0, 6, 4));
    }

    #[test]
    fn id_parse_roundtrip() {
        for id in [
            NamedGraphId::SixK2,
            NamedGraphId::Trifolium,
            NamedGraphId::R(3),
            NamedGraphId::Ti(2),
        ] {
            let s = id.to_string();
            assert_eq!(s.parse::<NamedGraphId>().unwrap(), id);
        }
    }
}
