//! Greedy piercing lines and the floor decomposition.
//!
//! Horizontal construction: the first line runs along the lowest top edge;
//! each further line runs along the lowest top edge among the rectangles
//! lying strictly above the previous line. The witnesses are pairwise
//! disjoint, so the number of lines `q` never exceeds the packing number.
//! The vertical construction is the mirror image (leftmost right edge,
//! then rectangles strictly to the right).
//!
//! Line and floor indices are 0-based throughout the crate.

pub mod packing;

use serde::Serialize;

use crate::error::Result;
use crate::geom::{Axis, Coord, Family, Rect};

pub use packing::{packing_bounds, packing_number_exact, Packing, PackingBounds, DEFAULT_EXACT_LIMIT};

/// Lines ordered by increasing coordinate, one witness per line, and the
/// floor of every rectangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PiercingStructure {
    /// `Y` for horizontal lines (`y = const`), `X` for vertical ones.
    pub axis: Axis,
    pub lines: Vec<Coord>,
    pub witnesses: Vec<usize>,
    /// Strictly beyond every rectangle; closes the last floor.
    pub sentinel: Coord,
    /// `floor_of[id] = i` iff `lines[i] <= far edge < lines[i + 1]`
    /// (with `sentinel` after the last line).
    pub floor_of: Vec<usize>,
}

impl PiercingStructure {
    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Upper end of the band of floor `i`.
    pub fn band_end(&self, i: usize) -> Coord {
        self.lines.get(i + 1).copied().unwrap_or(self.sentinel)
    }

    /// Does line `i` meet the closed rectangle?
    pub fn meets(&self, i: usize, r: &Rect) -> bool {
        let at = self.lines[i];
        match self.axis {
            Axis::Y => r.meets_horizontal_line(at),
            Axis::X => r.meets_vertical_line(at),
        }
    }

    /// Largest index of a line meeting `r`, if any.
    pub fn last_line_meeting(&self, r: &Rect) -> Option<usize> {
        let (near, far) = span(self.axis, r);
        let count = self.lines.partition_point(|&l| l <= far);
        count.checked_sub(1).filter(|&i| self.lines[i] >= near)
    }
}

/// `(near, far)` extent of `r` along the axis the lines are stacked on.
fn span(axis: Axis, r: &Rect) -> (Coord, Coord) {
    match axis {
        Axis::Y => (r.y_min, r.y_max),
        Axis::X => (r.x_min, r.x_max),
    }
}

/// Run the greedy construction. `axis` is `Y` for horizontal lines and `X`
/// for vertical lines.
pub fn greedy_lines(f: &Family, axis: Axis) -> Result<PiercingStructure> {
    f.validate()?;
    let mut order: Vec<&Rect> = f.iter().collect();
    order.sort_unstable_by_key(|r| span(axis, r).1);

    let mut lines: Vec<Coord> = Vec::new();
    let mut witnesses = Vec::new();
    for r in &order {
        let (near, far) = span(axis, r);
        // Rectangles are visited by increasing far edge, so the first one
        // strictly beyond the current line has the lowest far edge among them.
        if lines.last().is_none_or(|&l| near > l) {
            lines.push(far);
            witnesses.push(r.id);
        }
    }
    let sentinel = order.last().map_or(0, |r| span(axis, r).1 + 1);
    let floor_of = f.iter().map(|r| lines.partition_point(|&l| l <= span(axis, r).1) - 1).collect();
    Ok(PiercingStructure { axis, lines, witnesses, sentinel, floor_of })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FloorViolation {
    /// The rectangle misses the line of its own floor.
    MissesOwnLine { rect: usize, floor: usize },
    /// The rectangle meets a line above its floor.
    MeetsHigherLine { rect: usize, floor: usize, line: usize },
    /// The floor index is out of range or inconsistent with the band.
    OutsideBand { rect: usize, floor: usize },
}

/// Every rectangle meets the line of its floor and no higher line.
pub fn check_floor_property(f: &Family, ps: &PiercingStructure) -> Result<(), FloorViolation> {
    for r in f {
        let floor = ps.floor_of[r.id];
        if floor >= ps.len() {
            return Err(FloorViolation::OutsideBand { rect: r.id, floor });
        }
        let far = span(ps.axis, r).1;
        if far < ps.lines[floor] || far >= ps.band_end(floor) {
            return Err(FloorViolation::OutsideBand { rect: r.id, floor });
        }
        if !ps.meets(floor, r) {
            return Err(FloorViolation::MissesOwnLine { rect: r.id, floor });
        }
        if let Some(line) = (floor + 1..ps.len()).find(|&j| ps.meets(j, r)) {
            return Err(FloorViolation::MeetsHigherLine { rect: r.id, floor, line });
        }
    }
    Ok(())
}
