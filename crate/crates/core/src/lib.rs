//! Exact analysis of families of axis-parallel rectangles: union and
//! `(<= k)`-level complexity, packing number, greedy piercing lines with the
//! floor decomposition, and a certificate checking the level-complexity
//! bound `8(k+1)n + 2(p-1)(p-3)(k+1)(k+2)` together with every structural
//! step behind it.
//!
//! All coordinates are integers and all families must be in general
//! position (distinct x-edges, distinct y-edges); see [`geom`].

pub mod arrangement;
pub mod bounds;
pub mod classify;
pub mod error;
pub mod format;
pub mod generate;
pub mod geom;
pub mod piercing;

pub use arrangement::{
    analyze, analyze_sweep, enumerate_vertices_oracle, level_complexity, ArrangementProfile, Engine, Vertex,
};
pub use bounds::{
    exact_bound_leq_k, exact_bound_x, verify, Analysis, AnalysisOptions, BoundReport, Check, CheckStatus,
};
pub use classify::{ContributionKind, ContributionRecord, SMatrix};
pub use error::{Error, Result};
pub use format::{parse_instance, write_instance};
pub use generate::GenSpec;
pub use geom::{
    perturb_to_general_position, reflect, validate_general_position, Axis, Coord, Family, HEdge, Rect,
    Reflection, VEdge, VertexType,
};
pub use piercing::{greedy_lines, packing_bounds, packing_number_exact, PiercingStructure};
