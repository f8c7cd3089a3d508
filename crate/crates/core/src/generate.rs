//! Deterministic instance generators.
//!
//! Structured families use fixed integer layouts; random ones are drawn on a
//! fine grid and then re-embedded onto dense ranks, which makes every
//! coordinate distinct without changing any strict order relation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{reembed, Coord, Family};

/// Gap between the two halves of the tightness family.
const TIGHTNESS_GAP: Coord = 8;
/// Sub-rank resolution of the random generators.
const FINE: u64 = 1 << 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GenSpec {
    Grid { m: usize },
    Staircase { m: usize },
    Tightness { n: usize, p: usize },
    Random { n: usize, seed: u64, span: u64 },
    Clustered { n: usize, clusters: usize, seed: u64 },
}

impl GenSpec {
    pub fn generate(&self) -> Result<Family> {
        match *self {
            GenSpec::Grid { m } => gen_grid(m),
            GenSpec::Staircase { m } => gen_staircase(m),
            GenSpec::Tightness { n, p } => gen_tightness(n, p),
            GenSpec::Random { n, seed, span } => gen_random(n, seed, span),
            GenSpec::Clustered { n, clusters, seed } => gen_clustered(n, clusters, seed),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            GenSpec::Grid { .. } => "grid",
            GenSpec::Staircase { .. } => "staircase",
            GenSpec::Tightness { .. } => "tightness",
            GenSpec::Random { .. } => "random",
            GenSpec::Clustered { .. } => "clustered",
        }
    }
}

fn need(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Parameter(msg.into()))
    }
}

type Bounds = (Coord, Coord, Coord, Coord);

/// `m` long horizontal slabs over `m` long vertical slabs; every pair of a
/// horizontal and a vertical slab crosses in four vertices.
///
/// Layout on `[0, 4m)` per axis: horizontal `i` spans x in `[i, 3m+i]` and
/// y in `[m+2i, m+2i+1]`; vertical `j` is its transpose.
pub fn gen_grid(m: usize) -> Result<Family> {
    need(m >= 1, "grid needs m >= 1")?;
    Family::from_bounds(grid_bounds(m as Coord, 1))
}

/// Grid slabs, each replaced by `copies` nested copies that shrink by one
/// rank per side.
fn grid_bounds(m: Coord, copies: Coord) -> Vec<Bounds> {
    let t = copies;
    let slab = m * t;
    let mut out = Vec::with_capacity(2 * slab as usize);
    // long coordinate of copy `idx` (0..m*t): starts at idx, ends at 4mt-1-idx
    let long = |idx: Coord| (idx, 4 * slab - 1 - idx);
    // thin band of slab `s`, copy `r`
    let thin = |s: Coord, r: Coord| (slab + 2 * t * s + r, slab + 2 * t * s + 2 * t - 1 - r);
    for s in 0..m {
        for r in 0..t {
            let (x0, x1) = long(s * t + r);
            let (y0, y1) = thin(s, r);
            out.push((x0, y0, x1, y1));
        }
    }
    for s in 0..m {
        for r in 0..t {
            let (x0, x1) = thin(s, r);
            let (y0, y1) = long(s * t + r);
            out.push((x0, y0, x1, y1));
        }
    }
    out
}

/// `m` corner-anchored rectangles, each strictly taller and strictly
/// narrower than its successor, all containing the point `(m, m)`.
///
/// Rect `i`: x in `[i, 2m+2i]`, y in `[i, 3m-2i]`.
pub fn gen_staircase(m: usize) -> Result<Family> {
    need(m >= 1, "staircase needs m >= 1")?;
    Family::from_bounds(staircase_bounds(m as Coord))
}

fn staircase_bounds(m: Coord) -> Vec<Bounds> {
    (0..m).map(|i| (i, i, 2 * m + 2 * i, 3 * m - 2 * i)).collect()
}

/// `n/2` staircase rectangles next to a `(p-2) x (p-2)` grid whose slabs are
/// each replaced by `n / (4(p-2))` nested copies. The packing number is
/// `p - 1`: one from the staircase, `p - 2` from the grid.
pub fn gen_tightness(n: usize, p: usize) -> Result<Family> {
    need(p >= 3, "tightness needs p >= 3")?;
    let g = p - 2;
    need(n % (4 * g) == 0, format!("4(p-2)={} must divide n", 4 * g))?;
    need(n >= 4 * g, format!("tightness needs n >= 4(p-2)={}", 4 * g))?;

    let half = (n / 2) as Coord;
    let stairs = staircase_bounds(half);
    // staircase occupies x in [0, 4m-2], y in [0, 3m]
    let dx = 4 * half + TIGHTNESS_GAP;
    let dy = 3 * half + 1 + TIGHTNESS_GAP;
    let grid = grid_bounds(g as Coord, (n / (4 * g)) as Coord)
        .into_iter()
        .map(|(x0, y0, x1, y1)| (x0 + dx, y0 + dy, x1 + dx, y1 + dy));
    Family::from_bounds(stairs.into_iter().chain(grid))
}

/// Side lengths (in ranks) giving `O(n)` expected vertices.
pub fn default_span(n: usize) -> u64 {
    ((8.0 * n as f64).sqrt().round() as u64).max(2)
}

/// `n` random rectangles with side lengths up to `span` ranks, re-embedded on
/// dense ranks `0..2n` per axis. Deterministic in `(n, seed, span)`.
pub fn gen_random(n: usize, seed: u64, span: u64) -> Result<Family> {
    need(n >= 1, "random needs n >= 1")?;
    need(span >= 1, "random needs span >= 1")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let extent = 2 * n as u64 * FINE;
    let side = |rng: &mut ChaCha8Rng| -> (Coord, Coord) {
        let len = rng.random_range(FINE..=span * FINE);
        let start = rng.random_range(0..extent);
        (start as Coord, (start + len) as Coord)
    };
    let bounds: Vec<Bounds> = (0..n)
        .map(|_| {
            let (x0, x1) = side(&mut rng);
            let (y0, y1) = side(&mut rng);
            (x0, y0, x1, y1)
        })
        .collect();
    Ok(reembed(&Family::from_bounds(bounds)?, 1))
}

/// `n` rectangles dealt round-robin into `clusters` pairwise disjoint cells;
/// every rectangle of a cell contains the cell's centre, so the packing
/// number equals `clusters`.
pub fn gen_clustered(n: usize, clusters: usize, seed: u64) -> Result<Family> {
    need(
        clusters >= 1 && clusters <= n,
        format!("clustered needs 1 <= clusters <= n, got {clusters} > {n}"),
    )?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reach = FINE as Coord;
    let cell = 2 * reach + 2;
    let bounds: Vec<Bounds> = (0..n)
        .map(|i| {
            let c = (i % clusters) as Coord;
            let centre = c * cell + reach;
            let mut arm = || rng.random_range(1..=reach);
            let (l, r, b, t) = (arm(), arm(), arm(), arm());
            (centre - l, centre - b, centre + r, centre + t)
        })
        .collect();
    Ok(reembed(&Family::from_bounds(bounds)?, 1))
}
