//! Exact upper bounds on level complexity and a per-instance certificate
//! that every structural claim behind them holds.
//!
//! The certificate runs the type-L pipeline on the family and on its three
//! mirror images; each vertex is type L in exactly one of the four, so the
//! four type-L counts partition the full vertex count.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arrangement::{analyze, ArrangementProfile, Engine};
use crate::classify::{
    assign_contributions, check_contributions_nest, check_depth_rank, check_inner_spans_adjacent_lines,
    check_line_band, classify_inner_extremal, extract_type_l, extremal_profile,
    inner_with_same_line_witnesses, repeated_depth_groups, tabulate_s, ContributionRecord, SMatrix,
};
use crate::error::Result;
use crate::geom::{Axis, Family, Reflection, VertexType};
use crate::piercing::{check_floor_property, greedy_lines, packing_bounds, PackingBounds, PiercingStructure};

/// `max(0, (p-1)(p-3))`.
fn quadratic_term(p: u64) -> u64 {
    let p = p as i128;
    ((p - 1) * (p - 3)).max(0) as u64
}

/// `8(k+1)n + 2 max(0,(p-1)(p-3)) (k+1)(k+2)`: bound on the number of
/// vertices of depth at most `k` when any `p` rectangles contain an
/// intersecting pair.
pub fn exact_bound_leq_k(n: u64, p: u64, k: u64) -> u64 {
    8 * (k + 1) * n + 2 * quadratic_term(p) * (k + 1) * (k + 2)
}

/// Same expression without clamping the quadratic term at zero.
pub fn unclamped_bound_leq_k(n: u64, p: u64, k: u64) -> i128 {
    let (n, p, k) = (n as i128, p as i128, k as i128);
    8 * (k + 1) * n + 2 * (p - 1) * (p - 3) * (k + 1) * (k + 2)
}

/// `2(k+1)n + max(0,(p-1)(p-3)) (k+1)(k+2)/2`: bound on type-L vertices of
/// depth at most `k`. `(k+1)(k+2)` is even, so the halving is exact.
pub fn exact_bound_x(n: u64, p: u64, k: u64) -> u64 {
    2 * (k + 1) * n + quadratic_term(p) * ((k + 1) * (k + 2) / 2)
}

/// Type-L bound in terms of the constructed line counts: extremal
/// contributions plus `(k+1)(k+2)/2` inner ones per (floor, interior line).
pub fn greedy_bound_x(n: u64, q_h: u64, q_v: u64, k: u64) -> u64 {
    2 * (k + 1) * n + q_h * q_v.saturating_sub(2) * ((k + 1) * (k + 2) / 2)
}

/// Largest admissible entry of the inner-contribution matrix.
pub fn inner_cell_bound(k: u64) -> u64 {
    (k + 1) * (k + 2) / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// The claim being checked.
    pub source: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

const SRC_FLOORS: &str = "each rectangle meets the line of its floor and no line above it";
const SRC_NEST: &str = "for fixed (A, h) each B contains every contribution to its left";
const SRC_DEPTH_RANK: &str = "for fixed (A, h) the m-th contribution from the right has depth >= m-1";
const SRC_BAND: &str = "an (A, h_j)-contribution lies in [h_j, h_{j+1})";
const SRC_INNER_SPAN: &str = "an inner contribution charged to h_i has A meeting h_i and h_{i+1}";
const SRC_CELL: &str = "inner contributions per (floor, line) <= (k+1)(k+2)/2";
const SRC_EXTREMAL: &str = "extremal contributions of A use <= 2 lines, hence <= 2(k+1) records";
const SRC_PARTITION: &str = "inner + extremal = type-L count; matrix total = inner count";
const SRC_X_PACKING: &str =
    "type-L count <= 2(k+1)n + max(0,(p-1)(p-3))(k+1)(k+2)/2 with p-1 = packing number";
const SRC_X_GREEDY: &str =
    "type-L count <= 2(k+1)n + q_h max(0,q_v-2)(k+1)(k+2)/2 with the constructed lines";
const SRC_LEVEL: &str = "level<=k count <= 8(k+1)n + 2 max(0,(p-1)(p-3))(k+1)(k+2) with p-1 = packing number";
const SRC_SYMMETRY: &str = "the four mirror images' type-L counts sum to the level<=k count";
const SRC_GREEDY_PACKING: &str = "greedy witnesses are pairwise disjoint, so line counts <= packing number";
const SRC_HISTOGRAM: &str = "union complexity = depth-0 count; per-type counts sum to the histogram";

/// The pipeline state of one mirror image of the family; independent of `k`.
#[derive(Clone, Debug)]
pub struct ReflectionAnalysis {
    pub reflection: Reflection,
    pub family: Family,
    pub profile: ArrangementProfile,
    pub horizontal: PiercingStructure,
    pub vertical: PiercingStructure,
}

impl ReflectionAnalysis {
    pub fn new(f: &Family, reflection: Reflection, engine: Engine) -> Result<Self> {
        let family = f.reflect(reflection);
        let profile = analyze(&family, engine)?;
        let horizontal = greedy_lines(&family, Axis::Y)?;
        let vertical = greedy_lines(&family, Axis::X)?;
        Ok(ReflectionAnalysis { reflection, family, profile, horizontal, vertical })
    }

    /// Classified contribution records of depth at most `k`.
    pub fn records(&self, k: u32) -> Result<Vec<ContributionRecord>> {
        let type_l = extract_type_l(&self.profile, k);
        let mut recs = assign_contributions(&self.family, &self.vertical, &self.horizontal, &type_l)?;
        classify_inner_extremal(&mut recs);
        Ok(recs)
    }

    pub fn s_matrix(&self, records: &[ContributionRecord], k: u32) -> SMatrix {
        tabulate_s(records, k, self.horizontal.len(), self.vertical.len())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct AnalysisOptions {
    pub engine: Engine,
    /// Largest family for which the exact packing number is computed.
    pub exact_limit: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { engine: Engine::Sweep, exact_limit: crate::piercing::DEFAULT_EXACT_LIMIT }
    }
}

/// Everything about a family that does not depend on `k`.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub n: usize,
    pub packing: PackingBounds,
    /// In the order of [`Reflection::ALL`]; index 0 is the family itself.
    pub reflections: Vec<ReflectionAnalysis>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReflectionSummary {
    pub reflection: Reflection,
    /// Vertex type of the original family that is type L here.
    pub original_type: &'static str,
    pub q_h: usize,
    pub q_v: usize,
    pub type_l_leq_k: u64,
    pub inner: u64,
    pub extremal: u64,
    pub s_matrix_max: u64,
    pub inner_same_line_witnesses: usize,
    /// `(A, h)` groups with two contributions of equal depth.
    pub repeated_depth_groups: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub k: u32,
    pub nu_exact: Option<usize>,
    pub nu_lower: usize,
    pub q_h: usize,
    pub q_v: usize,
    pub measured_leq_k: u64,
    /// Keyed by vertex type name.
    pub measured_x_leq_k_per_type: BTreeMap<&'static str, u64>,
    pub inner_total: u64,
    pub extremal_total: u64,
    pub s_matrix_max: u64,
    pub inner_same_line_witnesses: usize,
    pub repeated_depth_groups: usize,
    pub reflections: Vec<ReflectionSummary>,
    pub bound_values: BTreeMap<String, u64>,
    pub checks: Vec<Check>,
}

impl BoundReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: String, source: &'static str, outcome: std::result::Result<String, String>) {
        let (status, detail) = match outcome {
            Ok(d) => (CheckStatus::Pass, d),
            Err(d) => (CheckStatus::Fail, d),
        };
        self.0.push(Check { name, source, status, detail });
    }

    fn skip(&mut self, name: String, source: &'static str, why: &str) {
        self.0.push(Check { name, source, status: CheckStatus::Skipped, detail: why.to_string() });
    }

    fn leq(&mut self, name: String, source: &'static str, measured: u64, bound: u64) {
        let detail = format!("{measured} <= {bound}");
        self.push(
            name,
            source,
            if measured <= bound { Ok(detail) } else { Err(format!("violated: {measured} > {bound}")) },
        );
    }
}

fn outcome<E: std::fmt::Debug>(r: std::result::Result<(), E>) -> std::result::Result<String, String> {
    r.map(|()| "ok".to_string()).map_err(|e| format!("counterexample: {e:?}"))
}

impl Analysis {
    pub fn new(f: &Family, opts: AnalysisOptions) -> Result<Self> {
        f.validate()?;
        let reflections = Reflection::ALL
            .iter()
            .map(|&r| ReflectionAnalysis::new(f, r, opts.engine))
            .collect::<Result<Vec<_>>>()?;
        let packing = packing_bounds(f, opts.exact_limit)?;
        Ok(Analysis { n: f.len(), packing, reflections })
    }

    pub fn identity(&self) -> &ReflectionAnalysis {
        &self.reflections[0]
    }

    pub fn nu_exact(&self) -> Option<usize> {
        self.packing.exact.as_ref().map(|p| p.size)
    }

    /// Run every check at depth threshold `k`.
    pub fn verify(&self, k: u32) -> Result<BoundReport> {
        let n = self.n as u64;
        let k64 = k as u64;
        let nu = self.nu_exact();
        let mut checks = Checks(Vec::new());
        let mut bound_values = BTreeMap::new();
        let mut per_type = BTreeMap::new();
        let mut summaries = Vec::new();
        let measured_leq_k = self.identity().profile.level_complexity(k);

        let cell_bound = inner_cell_bound(k64);
        bound_values.insert("inner_cell".to_string(), cell_bound);
        bound_values.insert("extremal_per_rect".to_string(), 2 * (k64 + 1));

        for ra in &self.reflections {
            let tag = ra.reflection.name();
            for ps in [&ra.horizontal, &ra.vertical] {
                let axis = if ps.axis == Axis::Y { "horizontal" } else { "vertical" };
                checks.push(
                    format!("floor_property.{tag}.{axis}"),
                    SRC_FLOORS,
                    outcome(check_floor_property(&ra.family, ps)),
                );
            }

            let recs = ra.records(k)?;
            let type_l = recs.len() as u64;
            let inner = recs.iter().filter(|r| r.is_inner()).count() as u64;
            let extremal = type_l - inner;
            let s = ra.s_matrix(&recs, k);

            checks.push(
                format!("contributions_nest.{tag}"),
                SRC_NEST,
                outcome(check_contributions_nest(&ra.family, &recs)),
            );
            checks.push(format!("depth_rank.{tag}"), SRC_DEPTH_RANK, outcome(check_depth_rank(&recs)));
            checks.push(
                format!("contribution_in_line_band.{tag}"),
                SRC_BAND,
                outcome(check_line_band(&ra.vertical, &recs)),
            );
            checks.push(
                format!("inner_meets_adjacent_lines.{tag}"),
                SRC_INNER_SPAN,
                outcome(check_inner_spans_adjacent_lines(&ra.family, &ra.vertical, &recs)),
            );
            checks.push(
                format!("inner_cell_bound.{tag}"),
                SRC_CELL,
                match s.first_above(cell_bound) {
                    None => Ok(format!("max {} <= {cell_bound}", s.max_entry())),
                    Some((i, j, c)) => Err(format!("floor {i}, line {j}: {c} > {cell_bound}")),
                },
            );

            let ext = extremal_profile(&recs);
            let worst = ext.iter().max_by_key(|e| (e.1, e.2)).copied();
            checks.push(
                format!("extremal_per_rect.{tag}"),
                SRC_EXTREMAL,
                match ext.iter().find(|&&(_, c, l)| c as u64 > 2 * (k64 + 1) || l > 2) {
                    None => Ok(format!("max {:?} (rect, records, lines)", worst)),
                    Some(&(a, c, l)) => Err(format!("rect {a}: {c} records on {l} lines")),
                },
            );
            checks.push(
                format!("partition.{tag}"),
                SRC_PARTITION,
                if inner + extremal == type_l && s.total() == inner {
                    Ok(format!("{inner} + {extremal} = {type_l}"))
                } else {
                    Err(format!("inner {inner}, extremal {extremal}, type-L {type_l}, matrix {}", s.total()))
                },
            );

            let greedy = greedy_bound_x(n, ra.horizontal.len() as u64, ra.vertical.len() as u64, k64);
            bound_values.insert(format!("type_l_greedy.{tag}"), greedy);
            checks.leq(format!("type_l_bound_greedy.{tag}"), SRC_X_GREEDY, type_l, greedy);
            match nu {
                Some(nu) => {
                    let bound = exact_bound_x(n, nu as u64 + 1, k64);
                    bound_values.insert("type_l_packing".to_string(), bound);
                    checks.leq(format!("type_l_bound_packing.{tag}"), SRC_X_PACKING, type_l, bound);
                    let q = ra.horizontal.len().max(ra.vertical.len());
                    checks.push(
                        format!("greedy_lines_within_packing.{tag}"),
                        SRC_GREEDY_PACKING,
                        if q <= nu {
                            Ok(format!("q_h={}, q_v={} <= {nu}", ra.horizontal.len(), ra.vertical.len()))
                        } else {
                            Err(format!("q_h={}, q_v={} > {nu}", ra.horizontal.len(), ra.vertical.len()))
                        },
                    );
                }
                None => {
                    checks.skip(
                        format!("type_l_bound_packing.{tag}"),
                        SRC_X_PACKING,
                        "packing number unknown",
                    );
                    checks.skip(
                        format!("greedy_lines_within_packing.{tag}"),
                        SRC_GREEDY_PACKING,
                        "packing number unknown",
                    );
                }
            }

            let original = ra.reflection.type_l_preimage();
            per_type.insert(original.name(), type_l);
            summaries.push(ReflectionSummary {
                reflection: ra.reflection,
                original_type: original.name(),
                q_h: ra.horizontal.len(),
                q_v: ra.vertical.len(),
                type_l_leq_k: type_l,
                inner,
                extremal,
                s_matrix_max: s.max_entry(),
                inner_same_line_witnesses: inner_with_same_line_witnesses(&recs),
                repeated_depth_groups: repeated_depth_groups(&recs),
            });
        }

        let id_prof = &self.identity().profile;
        let type_sum: u64 = per_type.values().sum();
        let direct: Vec<u64> = VertexType::ALL.iter().map(|&t| id_prof.type_count_leq(t, k)).collect();
        let mirrored: Vec<u64> = VertexType::ALL.iter().map(|t| per_type[t.name()]).collect();
        checks.push(
            "type_l_partition".to_string(),
            SRC_SYMMETRY,
            if type_sum == measured_leq_k && direct == mirrored {
                Ok(format!("{type_sum} = {measured_leq_k}"))
            } else {
                Err(format!("mirrored {mirrored:?} vs direct {direct:?}, total {measured_leq_k}"))
            },
        );

        let hist_sum: u64 = id_prof.depth_histogram.iter().sum();
        let per_type_ok = (0..id_prof.depth_histogram.len()).all(|d| {
            id_prof.per_type_counts.iter().map(|row| row[d]).sum::<u64>() == id_prof.depth_histogram[d]
        });
        checks.push(
            "histogram_identities".to_string(),
            SRC_HISTOGRAM,
            if per_type_ok
                && hist_sum == id_prof.vertex_count()
                && id_prof.union_complexity == id_prof.depth_histogram.first().copied().unwrap_or(0)
            {
                Ok(format!("{hist_sum} vertices"))
            } else {
                Err("histogram inconsistent with vertex list".to_string())
            },
        );

        match nu {
            Some(nu) => {
                let bound = exact_bound_leq_k(n, nu as u64 + 1, k64);
                bound_values.insert("level_leq_k".to_string(), bound);
                checks.leq("level_bound_packing".to_string(), SRC_LEVEL, measured_leq_k, bound);
            }
            None => checks.skip("level_bound_packing".to_string(), SRC_LEVEL, "packing number unknown"),
        }

        let id = &summaries[0];
        Ok(BoundReport {
            n: self.n,
            k,
            nu_exact: nu,
            nu_lower: self.packing.lower,
            q_h: id.q_h,
            q_v: id.q_v,
            measured_leq_k,
            inner_total: summaries.iter().map(|s| s.inner).sum(),
            extremal_total: summaries.iter().map(|s| s.extremal).sum(),
            s_matrix_max: summaries.iter().map(|s| s.s_matrix_max).max().unwrap_or(0),
            inner_same_line_witnesses: summaries.iter().map(|s| s.inner_same_line_witnesses).sum(),
            repeated_depth_groups: summaries.iter().map(|s| s.repeated_depth_groups).sum(),
            measured_x_leq_k_per_type: per_type,
            reflections: summaries,
            bound_values,
            checks: checks.0,
        })
    }
}

/// Full certificate for one family and one `k` with default options.
pub fn verify(f: &Family, k: u32) -> Result<BoundReport> {
    Analysis::new(f, AnalysisOptions::default())?.verify(k)
}
