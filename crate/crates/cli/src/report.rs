//! JSON report documents. Keys come out sorted (`serde_json::Map` is a
//! `BTreeMap`) and every number is an integer.

use serde_json::{json, Map, Value};

use rectlevel_core::{Analysis, BoundReport, PiercingStructure};

pub const SCHEMA_VERSION: u64 = 1;

fn piercing(ps: &PiercingStructure) -> Value {
    json!({
        "lines": ps.lines,
        "witnesses": ps.witnesses,
        "floors": ps.floor_of,
    })
}

fn level(r: &BoundReport, with_checks: bool) -> Value {
    let mut v = json!({
        "k": r.k,
        "leq_k": r.measured_leq_k,
        "type_l_per_type": r.measured_x_leq_k_per_type,
        "inner": r.inner_total,
        "extremal": r.extremal_total,
        "s_matrix_max": r.s_matrix_max,
        "inner_same_line_witnesses": r.inner_same_line_witnesses,
        "repeated_depth_groups": r.repeated_depth_groups,
        "reflections": r.reflections,
        "bounds": r.bound_values,
    });
    if with_checks {
        v["checks"] = json!(r.checks);
        v["pass"] = json!(r.all_pass());
    }
    v
}

/// Report for one instance and the requested thresholds.
pub fn document(
    source: &str,
    engine: &str,
    analysis: &Analysis,
    reports: &[BoundReport],
    with_checks: bool,
) -> Value {
    let id = analysis.identity();
    let prof = &id.profile;
    let leq_k: Map<String, Value> =
        reports.iter().map(|r| (r.k.to_string(), json!(prof.level_complexity(r.k)))).collect();
    let mut doc = json!({
        "schema_version": SCHEMA_VERSION,
        "instance": { "n": analysis.n, "source": source },
        "analysis": {
            "engine": engine,
            "vertex_count": prof.vertex_count(),
            "union_complexity": prof.union_complexity,
            "depth_histogram": prof.depth_histogram,
            "leq_k": leq_k,
        },
        "piercing": {
            "q_h": id.horizontal.len(),
            "q_v": id.vertical.len(),
            "horizontal": piercing(&id.horizontal),
            "vertical": piercing(&id.vertical),
        },
        "packing": {
            "exact": analysis.nu_exact(),
            "lower": analysis.packing.lower,
            "witness": analysis.packing.exact.as_ref().map(|p| &p.witness),
        },
        "levels": reports.iter().map(|r| level(r, with_checks)).collect::<Vec<_>>(),
    });
    if with_checks {
        doc["pass"] = json!(reports.iter().all(BoundReport::all_pass));
    }
    doc
}

pub fn to_text(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report values serialize");
    s.push('\n');
    s
}
