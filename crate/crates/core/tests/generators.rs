mod common;

use rectlevel_core::generate::{
    default_span, gen_clustered, gen_grid, gen_random, gen_staircase, gen_tightness,
};
use rectlevel_core::{
    analyze, packing_number_exact, verify, Analysis, AnalysisOptions, CheckStatus, Engine, Family, GenSpec,
    Reflection, VertexType,
};

fn nu(f: &Family) -> usize {
    packing_number_exact(f, 256).unwrap().size
}

#[test]
fn grid_union_complexity_and_packing() {
    for m in 1..=6 {
        let f = gen_grid(m).unwrap();
        let prof = analyze(&f, Engine::Oracle).unwrap();
        assert_eq!(prof.union_complexity, 4 * (m * m) as u64, "m={m}");
        assert_eq!(common::brute_leq_k(&f, 0), 4 * (m * m) as u64);
        assert_eq!(nu(&f), m);
    }
}

#[test]
fn grid_three_verifies_at_level_zero() {
    let f = gen_grid(3).unwrap();
    let report = verify(&f, 0).unwrap();
    assert!(report.all_pass());
    assert_eq!(report.measured_leq_k, 36);
    assert_eq!(report.bound_values["level_leq_k"], 60);
    assert_eq!(report.check("level_bound_packing").unwrap().detail, "36 <= 60");
}

#[test]
fn tightness_packing_and_inner_records() {
    let f = gen_tightness(32, 6).unwrap();
    assert_eq!(nu(&f), 5);
    let analysis = Analysis::new(&f, AnalysisOptions { exact_limit: 256, ..Default::default() }).unwrap();
    for k in 0..=3 {
        let report = analysis.verify(k).unwrap();
        assert!(report.all_pass(), "k={k}: {:?}", report.failures().collect::<Vec<_>>());
    }
    let report = analysis.verify(1).unwrap();
    assert!(report.inner_total >= 1);
    assert!(report.s_matrix_max <= 3);
}

#[test]
fn staircase_level_grows_linearly() {
    let k = 2;
    let count = |m: usize| analyze(&gen_staircase(m).unwrap(), Engine::Sweep).unwrap().level_complexity(k);
    for m in [16, 32, 64] {
        let ratio = count(2 * m) as f64 / count(m) as f64;
        assert!((ratio - 2.0).abs() <= 0.2, "m={m}: ratio {ratio}");
    }
    // every pair crosses twice at depth j - i - 1
    let f = gen_staircase(8).unwrap();
    let prof = analyze(&f, Engine::Oracle).unwrap();
    assert_eq!(prof.vertex_count(), 8 * 7);
    for v in &prof.vertices {
        let (i, j) = (v.h_owner.min(v.v_owner), v.h_owner.max(v.v_owner));
        assert_eq!(v.depth as usize, j - i - 1);
    }
}

#[test]
fn clustered_packing_equals_cluster_count() {
    assert_eq!(nu(&gen_clustered(24, 4, 9).unwrap()), 4);
    assert_eq!(nu(&gen_clustered(10, 1, 9).unwrap()), 1);
    let apart = gen_clustered(10, 10, 9).unwrap();
    assert_eq!(nu(&apart), 10);
    assert_eq!(analyze(&apart, Engine::Sweep).unwrap().union_complexity, 0);
}

#[test]
fn random_families_verify() {
    for seed in 0..200 {
        let n = 2 + (seed as usize % 40);
        let f = gen_random(n, seed, default_span(n)).unwrap();
        assert_eq!(analyze(&f, Engine::Oracle).unwrap(), analyze(&f, Engine::Sweep).unwrap());
        let analysis = Analysis::new(&f, AnalysisOptions::default()).unwrap();
        for k in [0, 2] {
            let report = analysis.verify(k).unwrap();
            assert!(report.all_pass(), "seed {seed}: {:?}", report.failures().collect::<Vec<_>>());
        }
    }
    assert!(analyze(&gen_random(1, 4, 3).unwrap(), Engine::Sweep).unwrap().vertices.is_empty());
}

#[test]
fn spec_round_trip() {
    let spec = GenSpec::Tightness { n: 48, p: 5 };
    assert_eq!(spec.kind(), "tightness");
    assert_eq!(spec.generate().unwrap(), gen_tightness(48, 5).unwrap());
}

#[test]
fn corner_pair_reflects_to_top_left() {
    let f = Family::from_bounds([(0, 0, 4, 3), (-1, 1, 2, 5)]).unwrap();
    let prof = analyze(&f, Engine::Sweep).unwrap();
    let tr: Vec<_> = prof.vertices.iter().filter(|v| v.vertex_type() == VertexType::TOP_RIGHT).collect();
    assert_eq!(tr.len(), 1);
    let (x, y) = (tr[0].x, tr[0].y);
    assert_eq!((x, y), (2, 3));

    let mirrored = analyze(&f.reflect(Reflection::Vertical), Engine::Sweep).unwrap();
    let v = mirrored.vertices.iter().find(|v| (v.x, v.y) == (-x, y)).unwrap();
    assert_eq!(v.vertex_type(), VertexType::TOP_LEFT);
}

#[test]
fn unknown_packing_number_skips_dependent_checks() {
    let f = gen_random(30, 1, default_span(30)).unwrap();
    let analysis = Analysis::new(&f, AnalysisOptions { exact_limit: 10, ..Default::default() }).unwrap();
    let report = analysis.verify(1).unwrap();
    assert_eq!(report.nu_exact, None);
    assert_eq!(report.check("level_bound_packing").unwrap().status, CheckStatus::Skipped);
    assert!(report.all_pass());
}
