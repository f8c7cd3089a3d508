//! Reference engine: every (horizontal edge, vertical edge) pair, every depth
//! by a full containment scan. Cubic in the worst case.

use super::{ArrangementProfile, Vertex};
use crate::error::Result;
use crate::geom::{Family, HEdge, VEdge};

pub fn enumerate_vertices_oracle(f: &Family) -> Result<ArrangementProfile> {
    f.validate()?;
    let mut vertices = Vec::new();
    for p in f {
        for (h_edge, y) in [(HEdge::Bottom, p.y_min), (HEdge::Top, p.y_max)] {
            for q in f {
                if q.id == p.id {
                    continue;
                }
                for (v_edge, x) in [(VEdge::Left, q.x_min), (VEdge::Right, q.x_max)] {
                    if p.x_min < x && x < p.x_max && q.y_min < y && y < q.y_max {
                        let depth = f.iter().filter(|r| r.contains_interior(x, y)).count() as u32;
                        vertices.push(Vertex { x, y, h_owner: p.id, h_edge, v_owner: q.id, v_edge, depth });
                    }
                }
            }
        }
    }
    Ok(ArrangementProfile::from_vertices(vertices))
}
