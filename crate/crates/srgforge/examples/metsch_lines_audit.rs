//! Extract the Metsch line system of the 5x5 rook's graph and audit it:
//! lines per vertex, Delsarte vertices, the incidence-rank inequality.
//!
//! Run with: cargo run --example metsch_lines_audit

use srgforge::graph::verify_srg;
use srgforge::lines::{audit_lines, extract_lines};
use srgforge::oa::{latin_square_graph, mols_to_oa};
use srgforge::params::metsch_conditions;

fn main() {
    // The rook's graph on Z5 x Z5 is the Latin square graph of OA(2,5).
    let oa = mols_to_oa(&[], 5).unwrap();
    let rook = latin_square_graph(&oa).unwrap();
    let sp = verify_srg(&rook).unwrap();
    println!("rook graph: srg({},{},{},{})", sp.v, sp.k, sp.lambda, sp.mu);

    let sigma = 2;
    println!(
        "Metsch conditions at sigma = {sigma}: {}",
        metsch_conditions(&sp, sigma)
    );
    let threshold = sp.lambda as i64 + 2 - (sp.mu as i64 - 1) * (sigma as i64 - 1);
    println!("line threshold lambda + 2 - (mu-1)(sigma-1) = {threshold}");

    let ls = extract_lines(&rook, &sp, sigma, false).expect("certified partial linear space");
    println!(
        "{} lines extracted (the 5 rows and 5 columns), all of size {}",
        ls.line_count(),
        ls.lines()[0].len()
    );

    let audit = audit_lines(&ls, &sp).unwrap();
    println!("\naudit:");
    println!(
        "  m = {}, multiplicity of -m is g = {}",
        audit.m, audit.g_mult
    );
    println!(
        "  every vertex lies on tau(x) = {} lines (Delsarte vertices: {})",
        audit.tau[0],
        audit.delsarte_vertices.len()
    );
    println!(
        "  |V| - |lines| = {}, min(g, |V_D|) = {}",
        sp.v as usize - audit.line_count,
        (audit.g_mult as usize).min(audit.delsarte_vertices.len())
    );
    println!(
        "  line-vertex incidence rank = {} (v - rank = {} = g)",
        audit.incidence_rank,
        sp.v as usize - audit.incidence_rank
    );
    println!(
        "  checks: tau >= m: {}, min(g,|V_D|) >= v - |L|: {}, |V_D| fraction: {}",
        audit.tau_floor.ok, audit.line_deficit.ok, audit.delsarte_fraction.ok
    );
}
