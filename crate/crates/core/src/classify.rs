//! Contribution bookkeeping for type-L vertices.
//!
//! A type-L vertex lies on the top edge of `A` and the right edge of `B`.
//! It is charged to `A` and to `h`, the rightmost vertical piercing line that
//! meets `B`. Among the vertices charged to one `A`, a vertex is *inner* when
//! some vertex to its left and some vertex to its right (along `A`'s top
//! edge) are charged to lines other than its own; otherwise it is
//! *extremal*.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arrangement::{ArrangementProfile, Vertex};
use crate::error::{Error, Result};
use crate::geom::{Coord, Family};
use crate::piercing::PiercingStructure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ContributionKind {
    Inner,
    Extremal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ContributionRecord {
    pub vertex: Vertex,
    /// Owner of the top edge.
    pub a_id: usize,
    /// Owner of the right edge.
    pub b_id: usize,
    /// Index of the rightmost vertical line meeting `B`.
    pub h_index: usize,
    /// Horizontal floor of `A`.
    pub floor_of_a: usize,
    /// `None` until [`classify_inner_extremal`] runs.
    pub kind: Option<ContributionKind>,
}

impl ContributionRecord {
    pub fn x(&self) -> Coord {
        self.vertex.x
    }

    pub fn depth(&self) -> u32 {
        self.vertex.depth
    }

    pub fn is_inner(&self) -> bool {
        self.kind == Some(ContributionKind::Inner)
    }
}

/// Type-L vertices of depth at most `k`.
pub fn extract_type_l(prof: &ArrangementProfile, k: u32) -> Vec<Vertex> {
    prof.vertices.iter().filter(|v| v.is_type_l() && v.depth <= k).copied().collect()
}

pub fn assign_contributions(
    f: &Family,
    vertical: &PiercingStructure,
    horizontal: &PiercingStructure,
    type_l: &[Vertex],
) -> Result<Vec<ContributionRecord>> {
    type_l
        .iter()
        .map(|v| {
            debug_assert!(v.is_type_l());
            let b = f.get(v.v_owner);
            let h_index = vertical.last_line_meeting(b).ok_or_else(|| {
                Error::Internal(format!("rect {} is not pierced by any vertical line", b.id))
            })?;
            Ok(ContributionRecord {
                vertex: *v,
                a_id: v.h_owner,
                b_id: v.v_owner,
                h_index,
                floor_of_a: horizontal.floor_of[v.h_owner],
                kind: None,
            })
        })
        .collect()
}

fn group_by_a(records: &[ContributionRecord]) -> BTreeMap<usize, Vec<usize>> {
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, r) in records.iter().enumerate() {
        groups.entry(r.a_id).or_default().push(i);
    }
    groups
}

/// Literal evaluation of the inner-contribution quantifier: `x` is inner iff
/// there are `y`, `z` charged to the same `A` with `y.x < x.x < z.x` and both
/// charged to lines other than `x`'s.
pub fn classify_inner_extremal(records: &mut [ContributionRecord]) {
    for members in group_by_a(records).values() {
        let kinds: Vec<_> = members
            .iter()
            .map(|&i| {
                let x = &records[i];
                let other = |pred: &dyn Fn(Coord) -> bool| {
                    members.iter().any(|&j| {
                        let y = &records[j];
                        pred(y.x()) && y.h_index != x.h_index
                    })
                };
                let left = other(&|yx| yx < x.x());
                let right = other(&|zx| zx > x.x());
                if left && right {
                    ContributionKind::Inner
                } else {
                    ContributionKind::Extremal
                }
            })
            .collect();
        for (&i, kind) in members.iter().zip(kinds) {
            records[i].kind = Some(kind);
        }
    }
}

/// Same labelling in `O(m log m)` per rectangle: a record has a differing
/// line on its left iff the prefix before it holds a line other than its own,
/// which only needs the first two distinct lines seen.
pub fn classify_inner_extremal_scan(records: &mut [ContributionRecord]) {
    fn differs(seen: &[usize], h: usize) -> bool {
        seen.iter().any(|&s| s != h)
    }
    fn note(seen: &mut Vec<usize>, h: usize) {
        if seen.len() < 2 && !seen.contains(&h) {
            seen.push(h);
        }
    }
    for mut members in group_by_a(records).into_values() {
        members.sort_unstable_by_key(|&i| records[i].x());
        let m = members.len();
        let mut left = vec![false; m];
        let mut seen = Vec::with_capacity(2);
        for (pos, &i) in members.iter().enumerate() {
            left[pos] = differs(&seen, records[i].h_index);
            note(&mut seen, records[i].h_index);
        }
        seen.clear();
        for (pos, &i) in members.iter().enumerate().rev() {
            let right = differs(&seen, records[i].h_index);
            note(&mut seen, records[i].h_index);
            records[i].kind =
                Some(if left[pos] && right { ContributionKind::Inner } else { ContributionKind::Extremal });
        }
    }
}

/// Inner records for which every admissible witness pair `(y, z)` uses one
/// and the same line.
pub fn inner_with_same_line_witnesses(records: &[ContributionRecord]) -> usize {
    let groups = group_by_a(records);
    records
        .iter()
        .filter(|x| x.is_inner())
        .filter(|x| {
            let members = &groups[&x.a_id];
            let side = |left: bool| -> Vec<usize> {
                members
                    .iter()
                    .map(|&j| &records[j])
                    .filter(|y| if left { y.x() < x.x() } else { y.x() > x.x() })
                    .filter(|y| y.h_index != x.h_index)
                    .map(|y| y.h_index)
                    .collect()
            };
            let (ls, rs) = (side(true), side(false));
            ls.iter().all(|a| rs.iter().all(|b| a == b))
        })
        .count()
}

/// Inner-contribution counts per (horizontal floor, vertical line).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SMatrix {
    pub k: u32,
    /// `entries[i][j]`: floor `i`, line `j`.
    pub entries: Vec<Vec<u64>>,
}

impl SMatrix {
    pub fn max_entry(&self) -> u64 {
        self.entries.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().flatten().sum()
    }

    /// First cell exceeding `bound`, as `(floor, line, count)`.
    pub fn first_above(&self, bound: u64) -> Option<(usize, usize, u64)> {
        self.entries
            .iter()
            .enumerate()
            .find_map(|(i, row)| row.iter().enumerate().find(|(_, &c)| c > bound).map(|(j, &c)| (i, j, c)))
    }
}

pub fn tabulate_s(records: &[ContributionRecord], k: u32, q_h: usize, q_v: usize) -> SMatrix {
    let mut entries = vec![vec![0u64; q_v]; q_h];
    for r in records.iter().filter(|r| r.is_inner() && r.depth() <= k) {
        entries[r.floor_of_a][r.h_index] += 1;
    }
    SMatrix { k, entries }
}

/// Two records that share `(A, h, depth)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DuplicateContribution {
    pub a_id: usize,
    pub h_index: usize,
    pub depth: u32,
    pub first: Vertex,
    pub second: Vertex,
}

/// Tests whether there is at most one record per `(A, h, depth)` with depth at
/// most `k`. Valid families can fail this; see [`check_depth_rank`] for the
/// property that always holds.
pub fn check_single_contribution_per_depth(
    records: &[ContributionRecord],
    k: u32,
) -> Result<(), DuplicateContribution> {
    let mut seen: BTreeMap<(usize, usize, u32), Vertex> = BTreeMap::new();
    for r in records.iter().filter(|r| r.depth() <= k) {
        if let Some(first) = seen.insert((r.a_id, r.h_index, r.depth()), r.vertex) {
            return Err(DuplicateContribution {
                a_id: r.a_id,
                h_index: r.h_index,
                depth: r.depth(),
                first,
                second: r.vertex,
            });
        }
    }
    Ok(())
}

/// An inner record whose `A` misses line `h` or line `h + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InnerSpanViolation {
    pub record: ContributionRecord,
    pub misses_line: usize,
}

/// Every inner record charged to line `i` has `A` meeting lines `i` and `i + 1`.
pub fn check_inner_spans_adjacent_lines(
    f: &Family,
    vertical: &PiercingStructure,
    records: &[ContributionRecord],
) -> Result<(), InnerSpanViolation> {
    for r in records.iter().filter(|r| r.is_inner()) {
        let a = f.get(r.a_id);
        for line in [r.h_index, r.h_index + 1] {
            if line >= vertical.len() || !vertical.meets(line, a) {
                return Err(InnerSpanViolation { record: *r, misses_line: line });
            }
        }
    }
    Ok(())
}

/// Tests whether, for fixed `(A, h)`, depth strictly increases as x
/// decreases. Like [`check_single_contribution_per_depth`] this is a
/// diagnostic, not an invariant.
pub fn check_depth_increases_leftward(
    records: &[ContributionRecord],
) -> Result<(), (ContributionRecord, ContributionRecord)> {
    let mut by_pair: BTreeMap<(usize, usize), Vec<&ContributionRecord>> = BTreeMap::new();
    for r in records {
        by_pair.entry((r.a_id, r.h_index)).or_default().push(r);
    }
    for mut group in by_pair.into_values() {
        group.sort_unstable_by_key(|r| std::cmp::Reverse(r.x()));
        for w in group.windows(2) {
            if w[1].depth() <= w[0].depth() {
                return Err((*w[0], *w[1]));
            }
        }
    }
    Ok(())
}

fn by_pair_right_to_left(records: &[ContributionRecord]) -> Vec<Vec<&ContributionRecord>> {
    let mut by_pair: BTreeMap<(usize, usize), Vec<&ContributionRecord>> = BTreeMap::new();
    for r in records {
        by_pair.entry((r.a_id, r.h_index)).or_default().push(r);
    }
    by_pair
        .into_values()
        .map(|mut g| {
            g.sort_unstable_by_key(|r| std::cmp::Reverse(r.x()));
            g
        })
        .collect()
}

/// Number of `(A, h)` groups holding two records of equal depth.
pub fn repeated_depth_groups(records: &[ContributionRecord]) -> usize {
    by_pair_right_to_left(records)
        .into_iter()
        .filter(|g| {
            let mut depths: Vec<u32> = g.iter().map(|r| r.depth()).collect();
            depths.sort_unstable();
            depths.windows(2).any(|w| w[0] == w[1])
        })
        .count()
}

/// `outer.b_id` fails to contain `inner`'s vertex in its interior.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NestingViolation {
    pub outer: ContributionRecord,
    pub inner: ContributionRecord,
}

/// For fixed `(A, h)`, the `B` of each record contains every record to its
/// left as an interior point.
pub fn check_contributions_nest(f: &Family, records: &[ContributionRecord]) -> Result<(), NestingViolation> {
    for group in by_pair_right_to_left(records) {
        for (i, outer) in group.iter().enumerate() {
            let b = f.get(outer.b_id);
            if let Some(inner) = group[i + 1..].iter().find(|r| !b.contains_interior(r.x(), r.vertex.y)) {
                return Err(NestingViolation { outer: **outer, inner: **inner });
            }
        }
    }
    Ok(())
}

/// A record that is `rank`-th from the right in its `(A, h)` group but has
/// depth below `rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DepthRankViolation {
    pub record: ContributionRecord,
    pub rank: usize,
}

/// For fixed `(A, h)`, the `m`-th record from the right (0-based) has depth
/// at least `m`; with depths at most `k` a group holds at most `k + 1`.
pub fn check_depth_rank(records: &[ContributionRecord]) -> Result<(), DepthRankViolation> {
    for group in by_pair_right_to_left(records) {
        if let Some((rank, r)) = group.iter().enumerate().find(|(m, r)| (r.depth() as usize) < *m) {
            return Err(DepthRankViolation { record: **r, rank });
        }
    }
    Ok(())
}

/// Each record's x lies in `[h_j, h_{j+1})`, with the sentinel closing the
/// last band.
pub fn check_line_band(
    vertical: &PiercingStructure,
    records: &[ContributionRecord],
) -> Result<(), ContributionRecord> {
    match records.iter().find(|r| r.x() < vertical.lines[r.h_index] || r.x() >= vertical.band_end(r.h_index))
    {
        Some(r) => Err(*r),
        None => Ok(()),
    }
}

/// Per-rectangle extremal statistics: `(A, count, distinct lines)` for the
/// rectangle with the most extremal records.
pub fn extremal_profile(records: &[ContributionRecord]) -> Vec<(usize, usize, usize)> {
    let mut per_a: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for r in records.iter().filter(|r| r.kind == Some(ContributionKind::Extremal)) {
        per_a.entry(r.a_id).or_default().push(r.h_index);
    }
    per_a
        .into_iter()
        .map(|(a, mut lines)| {
            let count = lines.len();
            lines.sort_unstable();
            lines.dedup();
            (a, count, lines.len())
        })
        .collect()
}
