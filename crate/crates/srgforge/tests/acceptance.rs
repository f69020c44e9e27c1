//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`). All
//! comparisons are exact; stated runtime budgets are asserted with wall
//! clocks.

mod common;

use common::*;
use srgforge::cli::classify_report_json;
use srgforge::completion::complete;
use srgforge::graph::verify_srg;
use srgforge::lines::{audit_lines, delsarte_lines, is_partial_geometry};
use srgforge::oa::{latin_square_graph, validate_oa};
use srgforge::params::{
    classify, classify_quadruple, eigendata, improved_bound, mu_upper_bound, neumaier_bound,
    pg_point_graph_params, to_classical, InfeasibilityReason, StandardParams, VerdictKind,
};
use srgforge::rat::{frac, rat};
use std::time::{Duration, Instant};

fn pass(n: u32, name: &str) {
    println!("criterion {n} ({name}): PASS");
}

#[test]
fn criterion_01_clebsch_anchor() {
    let report = classify_report_json(16, 5, 0, 2);
    assert_eq!(report["b"], "2");
    assert_eq!(report["alpha"], "-1/3");
    assert_eq!(report["beta"], "5/3");
    assert_eq!(report["theta2"], "-3");
    assert_eq!(report["verdict"], "within_bound");

    let sp = StandardParams::new(16, 5, 0, 2).unwrap();
    let cp = to_classical(&sp).unwrap();
    assert_eq!((cp.b, cp.alpha, cp.beta), (rat(2), frac(-1, 3), frac(5, 3)));

    // Runtime: the full classification computation, best of five runs.
    let mut best = Duration::MAX;
    for _ in 0..5 {
        let start = Instant::now();
        let r = classify_report_json(16, 5, 0, 2);
        best = best.min(start.elapsed());
        assert_eq!(r["beta"], "5/3");
    }
    assert!(
        best < Duration::from_millis(1),
        "classify took {best:?}, budget 1 ms"
    );
    pass(1, "Clebsch anchor");
}

#[test]
fn criterion_02_bound_crossover() {
    let start = Instant::now();
    for m in 6..=20u64 {
        let cap = mu_upper_bound(m) as u64;
        for mu in 1..=cap {
            let improved = improved_bound(m, mu);
            let neumaier = neumaier_bound(m, mu);
            assert!(
                improved < neumaier,
                "improved !< neumaier at m = {m}, mu = {mu}: {improved} vs {neumaier}"
            );
        }
    }
    assert_eq!(neumaier_bound(3, 6), rat(23));
    assert_eq!(improved_bound(3, 6), frac(125, 3));
    assert!(neumaier_bound(3, 6) < improved_bound(3, 6));
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(5),
        "sweep took {elapsed:?}, budget 5 s"
    );
    pass(2, "bound crossover");
}

#[test]
fn criterion_03_classification_dispatch() {
    assert_eq!(
        classify_quadruple(1849, 126, 43, 6).kind,
        VerdictKind::ForcedLatinSquareGeometric { ls_order: 43 }
    );
    // Perturbing mu to 7 breaks the counting identity; infeasible either way.
    assert!(matches!(
        classify_quadruple(1849, 126, 43, 7).kind,
        VerdictKind::Infeasible(_)
    ));
    // "Reducing lambda to 41" within the m = 3, mu = 6 family: the unique
    // valid quadruple is (1681, 120, 41, 6) (= LS_3(41) parameters), and
    // 41 <= 125/3 puts it within the bound. The literal edit of lambda alone
    // violates the counting identity and is infeasible.
    assert_eq!(
        classify_quadruple(1681, 120, 41, 6).kind,
        VerdictKind::WithinBound
    );
    assert!(matches!(
        classify_quadruple(1849, 126, 41, 6).kind,
        VerdictKind::Infeasible(InfeasibilityReason::InvalidParameters(_))
    ));
    pass(3, "classification dispatch");
}

/// All 120 permutations of 0..5, by Heap's algorithm.
fn permutations_of_five() -> Vec<[u32; 5]> {
    let mut out = Vec::with_capacity(120);
    let mut arr = [0u32, 1, 2, 3, 4];
    heap_permute(&mut arr, 5, &mut out);
    out
}

fn heap_permute(arr: &mut [u32; 5], k: usize, out: &mut Vec<[u32; 5]>) {
    if k == 1 {
        out.push(*arr);
        return;
    }
    for i in 0..k {
        heap_permute(arr, k - 1, out);
        if k.is_multiple_of(2) {
            arr.swap(i, k - 1);
        } else {
            arr.swap(0, k - 1);
        }
    }
}

/// True iff `row[c] = pi(target(c))` for some symbol bijection `pi`,
/// checked by exhausting all 120 bijections.
fn matches_up_to_bijection(row: &[u32], target: impl Fn(u32, u32) -> u32) -> bool {
    permutations_of_five()
        .iter()
        .any(|pi| (0..25u32).all(|c| row[c as usize] == pi[target(c / 5, c % 5) as usize]))
}

#[test]
fn criterion_04_flagship_completion() {
    let start = Instant::now();
    let oa = cyclic_oa(4, 5);
    let outcome = complete(&oa).unwrap();
    let full = &outcome.array;
    assert_eq!((full.rows(), full.symbols()), (6, 5));
    let cells: Vec<u32> = (0..6).flat_map(|r| full.row(r).to_vec()).collect();
    assert!(validate_oa(6, 5, cells).is_ok());
    for r in 0..4 {
        assert_eq!(full.row(r), oa.row(r), "input row {r} not preserved");
    }
    let report = &outcome.report;
    assert_eq!(report.delta, 2);
    assert_eq!(report.bound, "14/3");
    assert!(report.bound_met);

    // The two new rows are i+3j and i+4j mod 5 up to a per-row bijection.
    let row4 = full.row(4);
    let row5 = full.row(5);
    let matches_3 = |row: &[u32]| matches_up_to_bijection(row, |i, j| (i + 3 * j) % 5);
    let matches_4 = |row: &[u32]| matches_up_to_bijection(row, |i, j| (i + 4 * j) % 5);
    assert!(
        (matches_3(row4) && matches_4(row5)) || (matches_4(row4) && matches_3(row5)),
        "completed rows are not i+3j / i+4j up to symbol bijections"
    );
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(1),
        "completion took {elapsed:?}, budget 1 s"
    );
    pass(4, "flagship OA(4,5) completion");
}

#[test]
fn criterion_05_delta_one_family() {
    let start = Instant::now();
    for p in [3u32, 5, 7, 11] {
        let oa = cyclic_oa(p, p);
        assert_eq!(oa.deficiency(), 1);
        let outcome = complete(&oa).unwrap();
        let full = outcome.array;
        assert_eq!((full.rows(), full.symbols()), (p + 1, p));
        let cells: Vec<u32> = (0..full.rows() as usize)
            .flat_map(|r| full.row(r).to_vec())
            .collect();
        assert!(validate_oa(p + 1, p, cells).is_ok());
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(10),
        "family took {elapsed:?}, budget 10 s"
    );
    pass(5, "delta = 1 completion family");
}

#[test]
fn criterion_06_line_deficit_tightness() {
    let t5 = t5();
    let sp = verify_srg(&t5).unwrap();
    let ls = delsarte_lines(&t5, &sp).unwrap();
    let audit = audit_lines(&ls, &sp).unwrap();
    assert_eq!(sp.v as usize - audit.line_count, 5);
    assert_eq!(audit.g_mult, 5);
    assert_eq!(audit.delsarte_vertices.len(), 10);
    assert_eq!(
        (audit.g_mult as usize).min(audit.delsarte_vertices.len()),
        sp.v as usize - audit.line_count,
        "T(5) should be tight"
    );
    assert!(audit.line_deficit.ok);

    let rook = latin_square_graph(&cyclic_oa(2, 5)).unwrap();
    let sp = verify_srg(&rook).unwrap();
    let ls = delsarte_lines(&rook, &sp).unwrap();
    let audit = audit_lines(&ls, &sp).unwrap();
    assert_eq!(audit.g_mult, 16);
    assert_eq!(audit.delsarte_vertices.len(), 25);
    assert_eq!(sp.v as usize - audit.line_count, 15);
    assert!(audit.line_deficit.ok);
    assert_eq!(
        (audit.g_mult as usize).min(audit.delsarte_vertices.len()) as i64
            - (sp.v as i64 - audit.line_count as i64),
        1,
        "LS_2(5) margin should be 1"
    );
    pass(6, "rank-bound tightness");
}

#[test]
fn criterion_07_partial_geometry_oracle() {
    let t5 = t5();
    let sp_t5 = verify_srg(&t5).unwrap();
    let ls = delsarte_lines(&t5, &sp_t5).unwrap();
    let pg = is_partial_geometry(&ls).expect("T(5) is geometric");
    assert_eq!(
        (pg.points_per_line, pg.lines_per_point, pg.transversals),
        (4, 2, 2)
    );
    assert_eq!(pg_point_graph_params(&pg).unwrap(), sp_t5);

    let rook = latin_square_graph(&cyclic_oa(2, 5)).unwrap();
    let sp_rook = verify_srg(&rook).unwrap();
    let ls = delsarte_lines(&rook, &sp_rook).unwrap();
    let pg = is_partial_geometry(&ls).expect("LS_2(5) is geometric");
    assert_eq!(
        (pg.points_per_line, pg.lines_per_point, pg.transversals),
        (5, 2, 1)
    );
    assert_eq!(pg_point_graph_params(&pg).unwrap(), sp_rook);
    pass(7, "partial-geometry oracle");
}

#[test]
fn criterion_08_clique_oracle_equivalence() {
    let mut rng = SplitMix64(0x5eed_cafe_f00d_0001);
    let mut corpus: Vec<srgforge::Graph> = Vec::new();
    for i in 0..50 {
        let v = 4 + (rng.below(11) as usize);
        let permille = 150 + rng.below(700);
        let _ = i;
        corpus.push(random_graph(v, permille, &mut rng));
    }
    corpus.push(petersen());
    corpus.push(cycle(5));
    corpus.push(t5());
    corpus.push(complete_graph(7));
    for (idx, g) in corpus.iter().enumerate() {
        let fast = srgforge::maximal_cliques(g, 1);
        let slow = brute_force_maximal_cliques(g, 1);
        assert_eq!(fast, slow, "clique mismatch on corpus graph {idx}");
    }
    pass(8, "clique oracle equivalence");
}

#[test]
fn criterion_09_delsarte_bound_property() {
    // OA(3,4) from the cyclic Z4 square: rows i, j, i+j.
    let oa34 = {
        let mut cells = Vec::new();
        for row_fn in [
            |i: u32, _j: u32| i,
            |_i: u32, j: u32| j,
            |i: u32, j: u32| (i + j) % 4,
        ] {
            for c in 0..16u32 {
                cells.push(row_fn(c / 4, c % 4));
            }
        }
        validate_oa(3, 4, cells).unwrap()
    };
    let ls45 = latin_square_graph(&cyclic_oa(4, 5)).unwrap();
    let corpus: Vec<(&str, srgforge::Graph)> = vec![
        ("petersen", petersen()),
        ("t5", t5()),
        ("c5", cycle(5)),
        ("rook5", latin_square_graph(&cyclic_oa(2, 5)).unwrap()),
        ("rook3", latin_square_graph(&cyclic_oa(2, 3)).unwrap()),
        ("ls_3_5", latin_square_graph(&cyclic_oa(3, 5)).unwrap()),
        ("ls_4_5", ls45.clone()),
        ("ls_4_5_complement", ls45.complement()),
        ("ls_3_4", latin_square_graph(&oa34).unwrap()),
        ("ls_3_7", latin_square_graph(&cyclic_oa(3, 7)).unwrap()),
    ];
    let mut checked = 0;
    for (name, g) in &corpus {
        let sp = verify_srg(g).unwrap_or_else(|e| panic!("{name} should verify: {e}"));
        let ed = eigendata(&sp).unwrap();
        let Some(m) = ed.m else {
            continue; // irrational spectrum (C5): bound needs integral m
        };
        let cap = 1 + (sp.k / m) as usize;
        for clique in srgforge::maximal_cliques(g, 1) {
            assert!(
                clique.len() <= cap,
                "{name}: clique of size {} exceeds Delsarte cap {cap}",
                clique.len()
            );
        }
        checked += 1;
    }
    assert!(checked >= 9);
    pass(9, "Delsarte bound property");
}

#[test]
fn criterion_10_mu1_obstruction() {
    // (209,16,3,1) satisfies all counting and spectral constraints but
    // violates (lambda+1)(lambda+2) <= k.
    let verdict = classify_quadruple(209, 16, 3, 1);
    assert_eq!(
        verdict.kind,
        VerdictKind::Infeasible(InfeasibilityReason::Mu1Obstruction { lhs: 20, k: 16 })
    );
    // Petersen satisfies the inequality (2 <= 3) and is not rejected.
    let petersen_verdict = classify(&StandardParams::new(10, 3, 0, 1).unwrap());
    assert_eq!(petersen_verdict.kind, VerdictKind::SmallM);
    assert!(!matches!(petersen_verdict.kind, VerdictKind::Infeasible(_)));
    pass(10, "mu = 1 obstruction");
}
