//! Left-to-right sweep over vertical edges.
//!
//! State at sweep position `x`:
//! * the horizontal edges of every rectangle whose open x-range contains `x`,
//!   keyed by their y-coordinate;
//! * a Fenwick tree over y-ranks holding `+1` at each active bottom edge and
//!   `-1` at each active top edge, so the prefix sum strictly below `y`
//!   counts active rectangles with `y_min < y < y_max`, plus the owner of
//!   `y` itself when `y` is a top edge.
//!
//! All x-coordinates are distinct, so each event belongs to exactly one
//! edge. A rectangle is removed before its right edge is queried and
//! inserted after its left edge is queried; it is never active at its own
//! vertical edges.

use std::collections::BTreeMap;
use std::ops::Bound;

use super::{ArrangementProfile, Vertex};
use crate::error::Result;
use crate::geom::{Coord, Family, HEdge, VEdge};

struct Fenwick {
    tree: Vec<i32>,
}

impl Fenwick {
    fn new(len: usize) -> Self {
        Fenwick { tree: vec![0; len + 1] }
    }

    fn add(&mut self, pos: usize, delta: i32) {
        let mut i = pos + 1;
        while i < self.tree.len() {
            self.tree[i] += delta;
            i += i & i.wrapping_neg();
        }
    }

    /// Sum over positions `< pos`.
    fn prefix(&self, pos: usize) -> i32 {
        let mut i = pos;
        let mut sum = 0;
        while i > 0 {
            sum += self.tree[i];
            i &= i - 1;
        }
        sum
    }
}

struct Active {
    edges: BTreeMap<Coord, (usize, HEdge, usize)>,
    depth: Fenwick,
}

impl Active {
    fn insert(&mut self, id: usize, (y_min, lo): (Coord, usize), (y_max, hi): (Coord, usize)) {
        self.edges.insert(y_min, (id, HEdge::Bottom, lo));
        self.edges.insert(y_max, (id, HEdge::Top, hi));
        self.depth.add(lo, 1);
        self.depth.add(hi, -1);
    }

    fn remove(&mut self, (y_min, lo): (Coord, usize), (y_max, hi): (Coord, usize)) {
        self.edges.remove(&y_min);
        self.edges.remove(&y_max);
        self.depth.add(lo, -1);
        self.depth.add(hi, 1);
    }
}

pub fn analyze_sweep(f: &Family) -> Result<ArrangementProfile> {
    f.validate()?;
    let n = f.len();

    let mut ys: Vec<Coord> = f.iter().flat_map(|r| [r.y_min, r.y_max]).collect();
    ys.sort_unstable();
    let rank = |y: Coord| ys.binary_search(&y).expect("y-coordinate present");
    let y_ranks: Vec<(usize, usize)> = f.iter().map(|r| (rank(r.y_min), rank(r.y_max))).collect();

    let mut events: Vec<(Coord, usize, VEdge)> = Vec::with_capacity(2 * n);
    for r in f {
        events.push((r.x_min, r.id, VEdge::Left));
        events.push((r.x_max, r.id, VEdge::Right));
    }
    events.sort_unstable_by_key(|e| e.0);

    let mut active = Active { edges: BTreeMap::new(), depth: Fenwick::new(ys.len()) };
    let mut vertices = Vec::new();

    for (x, id, v_edge) in events {
        let q = f.get(id);
        let lo = (q.y_min, y_ranks[id].0);
        let hi = (q.y_max, y_ranks[id].1);
        if v_edge == VEdge::Right {
            active.remove(lo, hi);
        }
        let range = (Bound::Excluded(q.y_min), Bound::Excluded(q.y_max));
        for (&y, &(h_owner, h_edge, y_rank)) in active.edges.range(range) {
            let depth = active.depth.prefix(y_rank) - i32::from(h_edge == HEdge::Top);
            debug_assert!(depth >= 0);
            vertices.push(Vertex { x, y, h_owner, h_edge, v_owner: id, v_edge, depth: depth as u32 });
        }
        if v_edge == VEdge::Left {
            active.insert(id, lo, hi);
        }
    }

    // Events are in increasing x and each range walk is in increasing y,
    // so the output is already in canonical order.
    Ok(ArrangementProfile::from_sorted_vertices(vertices))
}
