//! Persisted census records and the append-only results store.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::circuits::{self, CircuitKind, Tightness};
use crate::map::PlanarMap;
use crate::symmetry;

/// One enumerated sphere. Every field is reproducible from the canonical
/// code alone.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphRecord {
    pub canonical_code: String,
    pub n: usize,
    pub p_vector: [usize; 3],
    pub group: String,
    pub z_vector: String,
    pub c_vector: String,
    pub tight_z: String,
    pub tight_c: String,
    pub provenance: String,
}

fn tightness_str(t: Tightness) -> &'static str {
    match t {
        Tightness::Tight => "tight",
        Tightness::WeaklyTight => "weakly_tight",
        Tightness::Neither => "neither",
    }
}

pub fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn unhex(s: &str) -> Option<Vec<u8>> {
    if s.len() % 2 != 0 {
        return None;
    }
    (0..s.len() / 2)
        .map(|i| u8::from_str_radix(&s[2 * i..2 * i + 2], 16).ok())
        .collect()
}

/// Analyze a sphere into a record.
pub fn record_for(m: &PlanarMap, provenance: &str) -> GraphRecord {
    let p = m.p_vector();
    let group = symmetry::point_group(m)
        .map(|g| g.name.to_string())
        .unwrap_or_else(|e| format!("?{e}"));
    let z = circuits::zigzags(m).expect("zigzags of a valid sphere");
    let c = circuits::central_circuits(m).expect("central circuits of a 6-regular sphere");
    let tz = circuits::tightness(m, CircuitKind::Zigzag).unwrap();
    let tc = circuits::tightness(m, CircuitKind::Central).unwrap();
    GraphRecord {
        canonical_code: hex(&m.canonical_code(true)),
        n: m.vertex_count(),
        p_vector: [p.p1(), p.p2(), p.p3()],
        group,
        z_vector: z.vector().render(),
        c_vector: c.vector().render(),
        tight_z: tightness_str(tz.status).to_string(),
        tight_c: tightness_str(tc.status).to_string(),
        provenance: provenance.to_string(),
    }
}

impl GraphRecord {
    pub fn map(&self) -> PlanarMap {
        PlanarMap::from_canonical_code(&unhex(&self.canonical_code).expect("hex code"))
            .expect("stored codes decode")
    }
}

/// Append-only JSON-lines store with an (n, p1) offset index for resuming.
pub struct GraphStore {
    path: PathBuf,
    index: BTreeMap<(usize, usize), Vec<u64>>,
    offset: u64,
}

impl GraphStore {
    pub fn create(path: &Path) -> std::io::Result<GraphStore> {
        std::fs::write(path, b"")?;
        Ok(GraphStore {
            path: path.to_path_buf(),
            index: BTreeMap::new(),
            offset: 0,
        })
    }

    pub fn append(&mut self, rec: &GraphRecord) -> std::io::Result<()> {
        let line = serde_json::to_string(rec).expect("records serialize");
        let mut f = std::fs::OpenOptions::new().append(true).open(&self.path)?;
        f.write_all(line.as_bytes())?;
        f.write_all(b"\n")?;
        self.index
            .entry((rec.n, rec.p_vector[0]))
            .or_default()
            .push(self.offset);
        self.offset += line.len() as u64 + 1;
        Ok(())
    }

    pub fn finish(&self) -> std::io::Result<()> {
        let idx_path = self.path.with_extension("idx.json");
        let as_strings: BTreeMap<String, &Vec<u64>> = self
            .index
            .iter()
            .map(|((n, p1), v)| (format!("{n},{p1}"), v))
            .collect();
        std::fs::write(idx_path, serde_json::to_string(&as_strings)?)
    }

    pub fn load(path: &Path) -> std::io::Result<Vec<GraphRecord>> {
        let f = std::fs::File::open(path)?;
        let mut out = Vec::new();
        for line in std::io::BufReader::new(f).lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            out.push(serde_json::from_str(&line).map_err(std::io::Error::other)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{self, NamedGraphId};

    #[test]
    fn record_roundtrip() {
        let m = named::named_graph(NamedGraphId::SixK2).unwrap();
        let rec = record_for(&m, "named:six-k2");
        assert_eq!(rec.n, 2);
        assert_eq!(rec.group, "D6h");
        assert_eq!(rec.z_vector, "6^2");
        assert_eq!(rec.c_vector, "2^3");
        assert_eq!(rec.tight_z, "tight");
        let back = rec.map();
        assert!(back.is_isomorphic(&m, true));
    }

    #[test]
    fn store_roundtrip() {
        let dir = std::env::temp_dir().join("sixsphere_store_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("census.jsonl");
        let mut store = GraphStore::create(&path).unwrap();
        for id in [NamedGraphId::SixK2, NamedGraphId::Trifolium] {
            let m = named::named_graph(id).unwrap();
            store.append(&record_for(&m, "test")).unwrap();
        }
        store.finish().unwrap();
        let records = GraphStore::load(&path).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[1].p_vector, [3, 0, 1]);
    }
}
