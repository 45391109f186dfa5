//! Three-edge-colorings of complete graphs.
//!
//! Builds the triangle-free K16 colorings (finite-field and hub-and-blocks),
//! assembles K17 colorings from two extensions of a shared K15, counts
//! monochromatic triangles exactly, and searches for colorings with few of
//! them.

pub mod color;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod gf16;
pub mod io;
pub mod search;
pub mod synthesis;
pub mod template;

pub use color::{sigma, Color, ColorPerm};
pub use coloring::{edge_count, edge_index, triangle_count, EdgeColoring, Fingerprint, MonoTriangle, TriangleCensus, MAX_VERTICES};
pub use constructions::{construct_cylinder, construct_gf16, cubic_classes, cylinder_template, CylinderLabel, ResidueClasses};
pub use error::{Error, Result};
pub use gf16::Gf16;
pub use io::{ColoringDocument, ExitStatus, FigureFormat};
pub use search::{exhaustive_min, minimize, move_delta, random_coloring, SearchParams, SearchResult};
pub use synthesis::{assemble, complete_edge, extend_with, find_extensions, twin_k17, AssemblyReport, VertexExtension};
pub use template::{ColoringTemplate, Coupling, Domain};
