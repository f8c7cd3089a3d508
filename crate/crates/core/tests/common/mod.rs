//! Brute-force reference implementations used by the integration tests.
//! Nothing here calls into the algorithms under test.

#![allow(dead_code)]

use rectlevel_core::{Coord, Family, Rect};

/// `(x, y, h_owner, v_owner, depth)` for every edge crossing.
pub type RawVertex = (Coord, Coord, usize, usize, u32);

pub fn depth_at(f: &Family, x: Coord, y: Coord) -> u32 {
    f.iter().filter(|c| c.x_min < x && x < c.x_max && c.y_min < y && y < c.y_max).count() as u32
}

pub fn brute_vertices(f: &Family) -> Vec<RawVertex> {
    let mut out = Vec::new();
    for a in f {
        for y in [a.y_min, a.y_max] {
            for b in f {
                if a.id == b.id {
                    continue;
                }
                for x in [b.x_min, b.x_max] {
                    if a.x_min <= x && x <= a.x_max && b.y_min <= y && y <= b.y_max {
                        out.push((x, y, a.id, b.id, depth_at(f, x, y)));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn brute_leq_k(f: &Family, k: u32) -> u64 {
    brute_vertices(f).iter().filter(|v| v.4 <= k).count() as u64
}

/// Type (top edge, right edge) crossings of depth at most `k`.
pub fn brute_top_right_leq_k(f: &Family, k: u32) -> u64 {
    brute_vertices(f)
        .iter()
        .filter(|&&(x, y, a, b, d)| d <= k && f.get(a).y_max == y && f.get(b).x_max == x)
        .count() as u64
}

/// Is the point `(x + dx/3, y + dy/3)` covered by the closed union?
fn covered_third(f: &Family, x: Coord, y: Coord, dx: Coord, dy: Coord) -> bool {
    let (px, py) = (3 * x + dx, 3 * y + dy);
    f.iter().any(|r| 3 * r.x_min <= px && px <= 3 * r.x_max && 3 * r.y_min <= py && py <= 3 * r.y_max)
}

/// A crossing is on the union boundary iff one of its four diagonal
/// neighbours lies outside the union.
pub fn on_union_boundary(f: &Family, x: Coord, y: Coord) -> bool {
    [(-1, -1), (-1, 1), (1, -1), (1, 1)].iter().any(|&(dx, dy)| !covered_third(f, x, y, dx, dy))
}

pub fn disjoint(a: &Rect, b: &Rect) -> bool {
    a.x_max < b.x_min || b.x_max < a.x_min || a.y_max < b.y_min || b.y_max < a.y_min
}

/// Packing number by enumerating every subset.
pub fn exhaustive_packing(f: &Family) -> usize {
    let n = f.len();
    assert!(n <= 20);
    let mut clash = vec![0u32; n];
    for a in f {
        for b in f {
            if a.id != b.id && !disjoint(a, b) {
                clash[a.id] |= 1 << b.id;
            }
        }
    }
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|i| s & (1 << i) == 0 || clash[i] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Greedy horizontal lines computed from scratch: repeatedly take the lowest
/// top edge among rectangles strictly above the last line.
pub fn brute_greedy_horizontal(f: &Family) -> Vec<Coord> {
    let mut lines: Vec<Coord> = Vec::new();
    loop {
        let next = f.iter().filter(|r| lines.last().is_none_or(|&l| r.y_min > l)).map(|r| r.y_max).min();
        match next {
            Some(y) => lines.push(y),
            None => return lines,
        }
    }
}

pub fn level_formula(n: u64, p: u64, k: u64) -> u64 {
    let quad = ((p as i64 - 1) * (p as i64 - 3)).max(0) as u64;
    8 * (k + 1) * n + 2 * quad * (k + 1) * (k + 2)
}

pub fn type_l_formula(n: u64, p: u64, k: u64) -> u64 {
    let quad = ((p as i64 - 1) * (p as i64 - 3)).max(0) as u64;
    2 * (k + 1) * n + quad * (k + 1) * (k + 2) / 2
}
