//! Exact rectangle primitives and the family container.
//!
//! Every coordinate is an integer and every predicate is a plain integer
//! comparison. A [`Family`] only guarantees non-degenerate rectangles; the
//! stronger general-position requirement (all `2n` x-coordinates distinct
//! and all `2n` y-coordinates distinct) is checked by
//! [`Family::validate`], which every analysis entry point calls.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Integer coordinate in abstract length units.
pub type Coord = i64;

/// Largest admissible coordinate magnitude. Keeps negation, doubling and
/// the `+1` sentinel far away from overflow.
pub const COORD_LIMIT: Coord = 1 << 60;

/// A closed axis-parallel rectangle `[x_min, x_max] x [y_min, y_max]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Rect {
    pub id: usize,
    pub x_min: Coord,
    pub x_max: Coord,
    pub y_min: Coord,
    pub y_max: Coord,
}

impl Rect {
    pub fn new(id: usize, x_min: Coord, y_min: Coord, x_max: Coord, y_max: Coord) -> Result<Self> {
        let r = Rect { id, x_min, x_max, y_min, y_max };
        if r.is_well_formed() {
            Ok(r)
        } else {
            Err(Error::InvalidRect { id, x_min, x_max, y_min, y_max })
        }
    }

    fn is_well_formed(&self) -> bool {
        let in_range = |c: Coord| (-COORD_LIMIT..=COORD_LIMIT).contains(&c);
        self.x_min < self.x_max
            && self.y_min < self.y_max
            && [self.x_min, self.x_max, self.y_min, self.y_max].into_iter().all(in_range)
    }

    /// Closed overlap test.
    pub fn intersects(&self, other: &Rect) -> bool {
        self.x_min.max(other.x_min) <= self.x_max.min(other.x_max)
            && self.y_min.max(other.y_min) <= self.y_max.min(other.y_max)
    }

    /// Strict interior containment.
    pub fn contains_interior(&self, px: Coord, py: Coord) -> bool {
        self.x_min < px && px < self.x_max && self.y_min < py && py < self.y_max
    }

    /// Does the vertical line `x = at` meet the closed rectangle?
    pub fn meets_vertical_line(&self, at: Coord) -> bool {
        self.x_min <= at && at <= self.x_max
    }

    /// Does the horizontal line `y = at` meet the closed rectangle?
    pub fn meets_horizontal_line(&self, at: Coord) -> bool {
        self.y_min <= at && at <= self.y_max
    }

    pub fn edge(&self, edge: Edge) -> Coord {
        match edge {
            Edge::Left => self.x_min,
            Edge::Right => self.x_max,
            Edge::Bottom => self.y_min,
            Edge::Top => self.y_max,
        }
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{} [{},{}]x[{},{}]", self.id, self.x_min, self.x_max, self.y_min, self.y_max)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Edge {
    Left,
    Right,
    Bottom,
    Top,
}

impl Edge {
    pub fn name(self) -> &'static str {
        match self {
            Edge::Left => "left",
            Edge::Right => "right",
            Edge::Bottom => "bottom",
            Edge::Top => "top",
        }
    }
}

/// Which horizontal edge of its owner a vertex lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HEdge {
    Bottom,
    Top,
}

/// Which vertical edge of its owner a vertex lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VEdge {
    Left,
    Right,
}

/// The four crossing types of a horizontal and a vertical edge.
///
/// `(Top, Right)` is the type-L crossing: the upper-right corner of the
/// intersection of the two rectangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexType {
    pub h_edge: HEdge,
    pub v_edge: VEdge,
}

impl VertexType {
    pub const TOP_RIGHT: VertexType = VertexType { h_edge: HEdge::Top, v_edge: VEdge::Right };
    pub const TOP_LEFT: VertexType = VertexType { h_edge: HEdge::Top, v_edge: VEdge::Left };
    pub const BOTTOM_RIGHT: VertexType = VertexType { h_edge: HEdge::Bottom, v_edge: VEdge::Right };
    pub const BOTTOM_LEFT: VertexType = VertexType { h_edge: HEdge::Bottom, v_edge: VEdge::Left };

    /// Fixed order used for per-type tables.
    pub const ALL: [VertexType; 4] = [Self::TOP_RIGHT, Self::TOP_LEFT, Self::BOTTOM_RIGHT, Self::BOTTOM_LEFT];

    pub fn index(self) -> usize {
        match (self.h_edge, self.v_edge) {
            (HEdge::Top, VEdge::Right) => 0,
            (HEdge::Top, VEdge::Left) => 1,
            (HEdge::Bottom, VEdge::Right) => 2,
            (HEdge::Bottom, VEdge::Left) => 3,
        }
    }

    pub fn name(self) -> &'static str {
        ["top_right", "top_left", "bottom_right", "bottom_left"][self.index()]
    }

    /// Type of the image of a vertex of this type under `r`.
    pub fn reflect(self, r: Reflection) -> VertexType {
        let mut t = self;
        if r.negates_x() {
            t.v_edge = match t.v_edge {
                VEdge::Left => VEdge::Right,
                VEdge::Right => VEdge::Left,
            };
        }
        if r.negates_y() {
            t.h_edge = match t.h_edge {
                HEdge::Bottom => HEdge::Top,
                HEdge::Top => HEdge::Bottom,
            };
        }
        t
    }
}

/// Mirror images of the plane. `Vertical` mirrors across a vertical line
/// (negating x), `Horizontal` across a horizontal line (negating y).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Reflection {
    Identity,
    Vertical,
    Horizontal,
    Both,
}

impl Reflection {
    pub const ALL: [Reflection; 4] =
        [Reflection::Identity, Reflection::Vertical, Reflection::Horizontal, Reflection::Both];

    pub fn negates_x(self) -> bool {
        matches!(self, Reflection::Vertical | Reflection::Both)
    }

    pub fn negates_y(self) -> bool {
        matches!(self, Reflection::Horizontal | Reflection::Both)
    }

    pub fn name(self) -> &'static str {
        match self {
            Reflection::Identity => "identity",
            Reflection::Vertical => "vertical",
            Reflection::Horizontal => "horizontal",
            Reflection::Both => "both",
        }
    }

    /// The vertex type that becomes type L in the reflected family.
    pub fn type_l_preimage(self) -> VertexType {
        VertexType::TOP_RIGHT.reflect(self)
    }
}

/// One edge of one rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeRef {
    pub rect: usize,
    pub edge: Edge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
}

/// Two edges sharing a coordinate on the same axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub axis: Axis,
    pub value: Coord,
    pub first: EdgeRef,
    pub second: EdgeRef,
}

impl fmt::Display for Collision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let axis = match self.axis {
            Axis::X => "x",
            Axis::Y => "y",
        };
        write!(
            f,
            "{axis}={} shared by rect {} {} edge and rect {} {} edge",
            self.value,
            self.first.rect,
            self.first.edge.name(),
            self.second.rect,
            self.second.edge.name()
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneralPositionViolation {
    pub collisions: Vec<Collision>,
}

impl fmt::Display for GeneralPositionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family is not in general position ({} collisions)", self.collisions.len())?;
        for c in &self.collisions {
            write!(f, "\n  {c}")?;
        }
        Ok(())
    }
}

impl std::error::Error for GeneralPositionViolation {}

/// An ordered family of rectangles with ids `0..n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Family {
    rects: Vec<Rect>,
}

impl Family {
    /// Build from `(x_min, y_min, x_max, y_max)` tuples; ids follow input order.
    pub fn from_bounds<I>(bounds: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Coord, Coord, Coord, Coord)>,
    {
        let rects = bounds
            .into_iter()
            .enumerate()
            .map(|(id, (x0, y0, x1, y1))| Rect::new(id, x0, y0, x1, y1))
            .collect::<Result<Vec<_>>>()?;
        Ok(Family { rects })
    }

    /// Build from rectangles whose ids must already be `0..n` in order.
    pub fn new(rects: Vec<Rect>) -> Result<Self> {
        for (i, r) in rects.iter().enumerate() {
            if r.id != i {
                return Err(Error::Parameter(format!("rect at position {i} has id {}", r.id)));
            }
            Rect::new(r.id, r.x_min, r.y_min, r.x_max, r.y_max)?;
        }
        Ok(Family { rects })
    }

    pub fn rects(&self) -> &[Rect] {
        &self.rects
    }

    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }

    pub fn get(&self, id: usize) -> &Rect {
        &self.rects[id]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rect> {
        self.rects.iter()
    }

    /// `(x_min, y_min, x_max, y_max)` of the union's bounding box.
    pub fn bounding_box(&self) -> Option<(Coord, Coord, Coord, Coord)> {
        let first = self.rects.first()?;
        Some(
            self.rects
                .iter()
                .fold((first.x_min, first.y_min, first.x_max, first.y_max), |(a, b, c, d), r| {
                    (a.min(r.x_min), b.min(r.y_min), c.max(r.x_max), d.max(r.y_max))
                }),
        )
    }

    /// Check that all x-edge coordinates are pairwise distinct and all
    /// y-edge coordinates are pairwise distinct.
    pub fn validate(&self) -> Result<(), GeneralPositionViolation> {
        validate_general_position(self)
    }

    pub fn reflect(&self, r: Reflection) -> Family {
        reflect(self, r)
    }
}

impl<'a> IntoIterator for &'a Family {
    type Item = &'a Rect;
    type IntoIter = std::slice::Iter<'a, Rect>;

    fn into_iter(self) -> Self::IntoIter {
        self.rects.iter()
    }
}

fn axis_edges(f: &Family, axis: Axis) -> Vec<(Coord, EdgeRef)> {
    let (lo, hi) = match axis {
        Axis::X => (Edge::Left, Edge::Right),
        Axis::Y => (Edge::Bottom, Edge::Top),
    };
    let mut edges = Vec::with_capacity(2 * f.len());
    for r in f {
        edges.push((r.edge(lo), EdgeRef { rect: r.id, edge: lo }));
        edges.push((r.edge(hi), EdgeRef { rect: r.id, edge: hi }));
    }
    edges
}

/// Reports every pair of edges that share a coordinate on the same axis.
pub fn validate_general_position(f: &Family) -> Result<(), GeneralPositionViolation> {
    let mut collisions = Vec::new();
    for axis in [Axis::X, Axis::Y] {
        let mut edges = axis_edges(f, axis);
        edges.sort_by_key(|&(c, e)| (c, e.rect, e.edge));
        for group in edges.chunk_by(|a, b| a.0 == b.0) {
            for (i, a) in group.iter().enumerate() {
                for b in &group[i + 1..] {
                    collisions.push(Collision { axis, value: a.0, first: a.1, second: b.1 });
                }
            }
        }
    }
    if collisions.is_empty() {
        Ok(())
    } else {
        Err(GeneralPositionViolation { collisions })
    }
}

/// Sort key that breaks coordinate ties with max-edges (right, top) before
/// min-edges (left, bottom), then by rect id. Touching rectangles come out
/// disjoint.
fn perturb_key(c: Coord, e: EdgeRef) -> (Coord, u8, usize) {
    let role = match e.edge {
        Edge::Right | Edge::Top => 0,
        Edge::Left | Edge::Bottom => 1,
    };
    (c, role, e.rect)
}

/// Re-embed every coordinate as `2 * rank` in the tie-broken sorted order of
/// its axis. Strict order relations that already held are preserved.
pub fn perturb_to_general_position(f: &Family) -> Family {
    reembed(f, 2)
}

/// Replace coordinates by `step * rank` (tie-broken as in
/// [`perturb_to_general_position`]).
pub(crate) fn reembed(f: &Family, step: Coord) -> Family {
    let mut rects = f.rects.clone();
    for axis in [Axis::X, Axis::Y] {
        let mut edges = axis_edges(f, axis);
        edges.sort_by_key(|&(c, e)| perturb_key(c, e));
        for (rank, (_, e)) in edges.into_iter().enumerate() {
            let value = step * rank as Coord;
            let r = &mut rects[e.rect];
            match e.edge {
                Edge::Left => r.x_min = value,
                Edge::Right => r.x_max = value,
                Edge::Bottom => r.y_min = value,
                Edge::Top => r.y_max = value,
            }
        }
    }
    Family { rects }
}

/// Mirror a family. Negation swaps the roles of min and max edges.
pub fn reflect(f: &Family, r: Reflection) -> Family {
    let rects = f
        .rects
        .iter()
        .map(|rect| {
            let mut out = *rect;
            if r.negates_x() {
                out.x_min = -rect.x_max;
                out.x_max = -rect.x_min;
            }
            if r.negates_y() {
                out.y_min = -rect.y_max;
                out.y_max = -rect.y_min;
            }
            out
        })
        .collect();
    Family { rects }
}
