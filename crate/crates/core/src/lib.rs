//! Enumeration, construction and analysis of 6-regular plane graphs whose
//! faces have size 1, 2 or 3.
//!
//! The library provides:
//!
//! - [`map`]: dart-based combinatorial maps with dual, truncation, canonical
//!   forms and automorphisms;
//! - [`eisenstein`]: arithmetic in the hexagonal lattice ring;
//! - [`named`]: the anchor graphs and infinite series;
//! - [`enumerate`]: exhaustive census with an independent brute-force oracle;
//! - [`gc`]: the Goldberg-Coxeter construction and oriented tripling;
//! - [`circuits`]: zigzags, central circuits, railroads and tightness;
//! - [`symmetry`]: Schoenflies point-group detection.

pub mod circuits;
pub mod dartlist;
pub mod eisenstein;
pub mod enumerate;
pub mod gc;
pub mod map;
pub mod named;
pub mod record;
pub mod render;
pub mod series;
pub mod surgery;
pub mod symmetry;
pub mod verify;

pub use eisenstein::EisensteinInt;
pub use map::{FaceBipartition, MapError, PVector, PlanarMap};
pub use named::NamedGraphId;
