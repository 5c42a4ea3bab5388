//! Interchange formats.
//!
//! The native format is a dart list: one line per map holding the dart count,
//! the twin involution and the vertex rotation, all decimal and
//! space-separated, the three sections joined by `;`. Unlike planar_code it
//! represents loops and 1-gons unambiguously. A planar_code exporter is
//! provided for loop-free maps.

use thiserror::Error;

use crate::map::{MapError, PlanarMap};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed dart list: {0}")]
    Malformed(String),
    #[error("map error: {0}")]
    Map(#[from] MapError),
    #[error("planar_code cannot represent loops")]
    LoopsUnsupported,
    #[error("planar_code is limited to 255 vertices")]
    TooLarge,
}

pub fn to_dartlist(m: &PlanarMap) -> String {
    let join = |v: &[usize]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    format!(
        "{}; {}; {}",
        m.dart_count(),
        join(m.twin_slice()),
        join(m.vertex_next_slice())
    )
}

pub fn from_dartlist(line: &str) -> Result<PlanarMap, FormatError> {
    let parts: Vec<&str> = line.split(';').collect();
    if parts.len() != 3 {
        return Err(FormatError::Malformed("expected three ;-sections".into()));
    }
    let n: usize = parts[0]
        .trim()
        .parse()
        .map_err(|_| FormatError::Malformed("bad dart count".into()))?;
    let parse_vec = |s: &str| -> Result<Vec<usize>, FormatError> {
        let v: Result<Vec<usize>, _> = s.split_whitespace().map(|t| t.parse()).collect();
        v.map_err(|_| FormatError::Malformed("bad integer".into()))
    };
    let twin = parse_vec(parts[1])?;
    let next = parse_vec(parts[2])?;
    if twin.len() != n || next.len() != n {
        return Err(FormatError::Malformed("section length mismatch".into()));
    }
    Ok(PlanarMap::build(twin, next)?)
}

/// planar_code bytes for a batch of loop-free maps, with the standard header.
pub fn to_planar_code(maps: &[&PlanarMap]) -> Result<Vec<u8>, FormatError> {
    let mut out = Vec::new();
    out.extend_from_slice(b">>planar_code<<");
    for m in maps {
        if m.vertex_count() > 255 {
            return Err(FormatError::TooLarge);
        }
        for d in 0..m.dart_count() {
            if m.vertex_of(d) == m.vertex_of(m.alpha(d)) {
                return Err(FormatError::LoopsUnsupported);
            }
        }
        out.push(m.vertex_count() as u8);
        for rep in m.vertex_reps() {
            for d in m.vertex_orbit(rep) {
                out.push((m.vertex_of(m.alpha(d)) + 1) as u8);
            }
            out.push(0);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{self, NamedGraphId};

    #[test]
    fn dartlist_roundtrip() {
        for id in [
            NamedGraphId::SixK2,
            NamedGraphId::Trifolium,
            NamedGraphId::T2,
        ] {
            let m = named::named_graph(id).unwrap();
            let line = to_dartlist(&m);
            let back = from_dartlist(&line).unwrap();
            assert_eq!(back.canonical_code(true), m.canonical_code(true));
        }
    }

    #[test]
    fn planar_code_rejects_loops() {
        let m = named::named_graph(NamedGraphId::Trifolium).unwrap();
        assert!(matches!(
            to_planar_code(&[&m]),
            Err(FormatError::LoopsUnsupported)
        ));
    }

    #[test]
    fn planar_code_header_and_shape() {
        let m = named::named_graph(NamedGraphId::SixK2).unwrap();
        let bytes = to_planar_code(&[&m]).unwrap();
        assert!(bytes.starts_with(b">>planar_code<<"));
        let body = &bytes[15..];
        assert_eq!(body[0], 2);
        // two vertices, six neighbors each plus terminator
        assert_eq!(body.len(), 1 + 2 * 7);
    }
}
