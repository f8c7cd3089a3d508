//! Vertices of the arrangement of rectangle boundaries and their depths.
//!
//! A vertex is a proper crossing of a horizontal edge of one rectangle with
//! a vertical edge of another. Its depth is the number of rectangles that
//! contain it in their open interior; the two defining rectangles never
//! count because the point lies on their boundaries.
//!
//! Two engines produce the same [`ArrangementProfile`]: a brute-force
//! [`oracle`] and a sweep ([`sweep`]) running in `O((n + V) log n)`.

pub mod oracle;
pub mod sweep;

use serde::Serialize;

use crate::error::Result;
use crate::geom::{Coord, Family, HEdge, VEdge, VertexType};

pub use oracle::enumerate_vertices_oracle;
pub use sweep::analyze_sweep;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Vertex {
    pub x: Coord,
    pub y: Coord,
    pub h_owner: usize,
    pub h_edge: HEdge,
    pub v_owner: usize,
    pub v_edge: VEdge,
    pub depth: u32,
}

impl Vertex {
    pub fn vertex_type(&self) -> VertexType {
        VertexType { h_edge: self.h_edge, v_edge: self.v_edge }
    }

    pub fn is_type_l(&self) -> bool {
        self.vertex_type() == VertexType::TOP_RIGHT
    }

    fn sort_key(&self) -> (Coord, Coord, usize, usize) {
        (self.x, self.y, self.h_owner, self.v_owner)
    }
}

/// All vertices of a family, sorted by `(x, y, h_owner, v_owner)`, with
/// depth statistics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrangementProfile {
    pub vertices: Vec<Vertex>,
    /// `depth_histogram[d]` is the number of vertices of depth exactly `d`.
    pub depth_histogram: Vec<u64>,
    pub union_complexity: u64,
    /// Indexed by [`VertexType::index`], then by depth; each row has the
    /// same length as `depth_histogram`.
    pub per_type_counts: [Vec<u64>; 4],
}

impl ArrangementProfile {
    pub fn from_vertices(mut vertices: Vec<Vertex>) -> Self {
        vertices.sort_unstable_by_key(Vertex::sort_key);
        Self::from_sorted_vertices(vertices)
    }

    /// Same as [`from_vertices`](Self::from_vertices) for input already in
    /// canonical order.
    pub(crate) fn from_sorted_vertices(vertices: Vec<Vertex>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0].sort_key() < w[1].sort_key()));
        let levels = vertices.iter().map(|v| v.depth as usize + 1).max().unwrap_or(0);
        let mut depth_histogram = vec![0u64; levels];
        let mut per_type_counts: [Vec<u64>; 4] = std::array::from_fn(|_| vec![0u64; levels]);
        for v in &vertices {
            depth_histogram[v.depth as usize] += 1;
            per_type_counts[v.vertex_type().index()][v.depth as usize] += 1;
        }
        let union_complexity = depth_histogram.first().copied().unwrap_or(0);
        ArrangementProfile { vertices, depth_histogram, union_complexity, per_type_counts }
    }

    pub fn vertex_count(&self) -> u64 {
        self.vertices.len() as u64
    }

    pub fn max_depth(&self) -> Option<u32> {
        self.depth_histogram.len().checked_sub(1).map(|d| d as u32)
    }

    /// Number of vertices of depth at most `k`.
    pub fn level_complexity(&self, k: u32) -> u64 {
        level_complexity(self, k)
    }

    /// Number of vertices of the given type with depth at most `k`.
    pub fn type_count_leq(&self, t: VertexType, k: u32) -> u64 {
        self.per_type_counts[t.index()].iter().take(k as usize + 1).sum()
    }
}

pub fn level_complexity(p: &ArrangementProfile, k: u32) -> u64 {
    p.depth_histogram.iter().take(k as usize + 1).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Oracle,
    Sweep,
}

pub fn analyze(f: &Family, engine: Engine) -> Result<ArrangementProfile> {
    match engine {
        Engine::Oracle => enumerate_vertices_oracle(f),
        Engine::Sweep => analyze_sweep(f),
    }
}
