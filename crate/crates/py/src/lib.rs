//! Python bindings: the map type with its analyses, the census, and the
//! brute-force oracle.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use sixsphere::circuits::{self, CircuitKind, Tightness};
use sixsphere::dartlist;
use sixsphere::enumerate::{self, EnumerationRequest};
use sixsphere::gc;
use sixsphere::named::{self, NamedGraphId};
use sixsphere::record;
use sixsphere::render;
use sixsphere::symmetry;
use sixsphere::EisensteinInt;
use sixsphere::PlanarMap;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A 6-regular plane multigraph with faces of size 1, 2 or 3 (or any plane
/// map produced along the way).
#[pyclass(name = "SphereMap")]
#[derive(Clone)]
struct PySphereMap {
    inner: PlanarMap,
}

#[pymethods]
impl PySphereMap {
    /// Construct a named graph: six-k2, three-k3, trifolium, t2,
    /// k2-tetrahedron, or a series member like r2, s2, a3, b3, c3, ti3.
    #[staticmethod]
    fn named(id: &str) -> PyResult<Self> {
        let id: NamedGraphId = id.parse().map_err(err)?;
        Ok(PySphereMap {
            inner: named::named_graph(id).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_dartlist(line: &str) -> PyResult<Self> {
        Ok(PySphereMap {
            inner: dartlist::from_dartlist(line).map_err(err)?,
        })
    }

    #[staticmethod]
    fn build(twin: Vec<usize>, vertex_next: Vec<usize>) -> PyResult<Self> {
        Ok(PySphereMap {
            inner: PlanarMap::build(twin, vertex_next).map_err(err)?,
        })
    }

    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn face_count(&self) -> usize {
        self.inner.face_count()
    }

    fn p_vector(&self) -> (usize, usize, usize) {
        let p = self.inner.p_vector();
        (p.p1(), p.p2(), p.p3())
    }

    fn is_sphere(&self) -> bool {
        self.inner.is_sphere_123_6()
    }

    fn dual(&self) -> Self {
        PySphereMap {
            inner: self.inner.dual(),
        }
    }

    fn truncate(&self) -> Self {
        PySphereMap {
            inner: self.inner.truncate(),
        }
    }

    fn mirror(&self) -> Self {
        PySphereMap {
            inner: self.inner.mirror(),
        }
    }

    #[pyo3(signature = (include_mirror = true))]
    fn canonical_code(&self, include_mirror: bool) -> String {
        record::hex(&self.inner.canonical_code(include_mirror))
    }

    #[pyo3(signature = (other, include_mirror = true))]
    fn is_isomorphic(&self, other: &PySphereMap, include_mirror: bool) -> bool {
        self.inner.is_isomorphic(&other.inner, include_mirror)
    }

    fn automorphism_count(&self) -> usize {
        self.inner.automorphisms().len()
    }

    fn point_group(&self) -> PyResult<String> {
        Ok(symmetry::point_group(&self.inner).map_err(err)?.name.to_string())
    }

    fn z_vector(&self) -> PyResult<String> {
        Ok(circuits::zigzags(&self.inner)
            .map_err(err)?
            .vector()
            .render())
    }

    fn c_vector(&self) -> PyResult<String> {
        Ok(circuits::central_circuits(&self.inner)
            .map_err(err)?
            .vector()
            .render())
    }

    /// Tightness of the given circuit kind ("z" or "c"): one of "tight",
    /// "weakly_tight", "neither".
    fn tightness(&self, kind: &str) -> PyResult<String> {
        let kind = match kind {
            "z" => CircuitKind::Zigzag,
            "c" => CircuitKind::Central,
            _ => return Err(PyValueError::new_err("kind must be 'z' or 'c'")),
        };
        let t = circuits::tightness(&self.inner, kind).map_err(err)?;
        Ok(match t.status {
            Tightness::Tight => "tight",
            Tightness::WeaklyTight => "weakly_tight",
            Tightness::Neither => "neither",
        }
        .to_string())
    }

    /// The Goldberg-Coxeter construction: one member for parameters not
    /// divisible by 1+j, two otherwise.
    fn gc(&self, k: i64, l: i64) -> PyResult<Vec<PySphereMap>> {
        let r = gc::gc(&self.inner, k, l).map_err(err)?;
        Ok(r.members
            .into_iter()
            .map(|m| PySphereMap { inner: m })
            .collect())
    }

    /// Both oriented triplings.
    fn tripling_pair(&self) -> PyResult<Vec<PySphereMap>> {
        Ok(gc::tripling_pair(&self.inner)
            .map_err(err)?
            .into_iter()
            .map(|m| PySphereMap { inner: m })
            .collect())
    }

    fn to_dartlist(&self) -> String {
        dartlist::to_dartlist(&self.inner)
    }

    fn to_svg(&self) -> String {
        render::to_svg(&self.inner)
    }

    fn __repr__(&self) -> String {
        let p = self.inner.p_vector();
        format!(
            "SphereMap(n={}, e={}, p=({},{},{}))",
            self.inner.vertex_count(),
            self.inner.edge_count(),
            p.p1(),
            p.p2(),
            p.p3()
        )
    }
}

/// Census counts for n = 1..=max_n as rows (N0, N1, N2, N3).
#[pyfunction]
fn census_counts(max_n: usize) -> Vec<(usize, usize, usize, usize)> {
    let c = enumerate::census(&EnumerationRequest::new(max_n));
    (1..=max_n)
        .map(|n| {
            let row = c.counts_row(n);
            (row[0], row[1], row[2], row[3])
        })
        .collect()
}

/// All spheres with n vertices and p1 1-gons, up to reflection.
#[pyfunction]
fn enumerate_spheres(n: usize, p1: usize) -> Vec<PySphereMap> {
    let c = enumerate::census(&EnumerationRequest {
        max_n: n,
        p1_filter: Some(p1),
        dedup_mirror: true,
    });
    c.by_cell
        .get(&(n, p1))
        .map(|v| {
            v.iter()
                .map(|m| PySphereMap { inner: m.clone() })
                .collect()
        })
        .unwrap_or_default()
}

/// Exhaustive rotation-system search (n <= 8); the independent oracle.
#[pyfunction]
fn brute_force_oracle(n: usize, p1: usize) -> PyResult<Vec<PySphereMap>> {
    Ok(enumerate::brute_force_oracle(n, p1)
        .map_err(err)?
        .into_iter()
        .map(|m| PySphereMap { inner: m })
        .collect())
}

/// Number of ({1,3},6)-spheres with n vertices, by the norm-form count.
#[pyfunction]
fn count_13_spheres(n: usize) -> usize {
    enumerate::count_13_spheres(n)
}

/// Factor k + l*j as (1+j)^s * (k'+l'j) * j^u with k'+l'j in class B.
#[pyfunction]
fn eisenstein_factor(k: i64, l: i64) -> PyResult<(u32, u8, (i64, i64))> {
    let (s, u, z) = EisensteinInt::new(k, l).factor().map_err(err)?;
    Ok((s, u, (z.k, z.l)))
}

#[pymodule]
fn sixsphere_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySphereMap>()?;
    m.add_function(wrap_pyfunction!(census_counts, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_spheres, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(count_13_spheres, m)?)?;
    m.add_function(wrap_pyfunction!(eisenstein_factor, m)?)?;
    Ok(())
}
