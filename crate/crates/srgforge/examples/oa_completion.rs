//! Complete deficient orthogonal arrays: OA(4,5) gains its two missing rows
//! through parallel classes of complement cliques, and the deficiency-1
//! family completes via connected components.
//!
//! Run with: cargo run --example oa_completion

use srgforge::completion::{complete, completion_bound};
use srgforge::oa::{gen_mols_prime, mols_to_oa};

fn main() {
    // OA(4,5) from two cyclic MOLS; two rows short of full.
    let squares = gen_mols_prime(5, 2).unwrap();
    let oa = mols_to_oa(&squares, 5).unwrap();
    println!(
        "input OA({}, {}), deficiency {} (bound for delta = 2 is {})",
        oa.rows(),
        oa.symbols(),
        oa.deficiency(),
        completion_bound(2)
    );

    let outcome = complete(&oa).unwrap();
    let report = &outcome.report;
    println!(
        "completed to OA({}, {}): {} complement cliques in {} parallel classes",
        outcome.array.rows(),
        outcome.array.symbols(),
        report.lines_found,
        report.class_count
    );
    println!(
        "bound {} exceeded by n = {}: {}",
        report.bound, report.n, report.bound_met
    );
    for r in 0..outcome.array.rows() as usize {
        let marker = if r < oa.rows() as usize { " " } else { "+" };
        let row: Vec<String> = outcome.array.row(r).iter().map(u32::to_string).collect();
        println!("{marker} {}", row.join(" "));
    }

    // Deficiency 1: the complement splits into n cliques, one parallel class.
    println!();
    for p in [3u32, 5, 7, 11] {
        let oa = mols_to_oa(&gen_mols_prime(p, p - 2).unwrap(), p).unwrap();
        let outcome = complete(&oa).unwrap();
        println!(
            "OA({p}, {p}) -> OA({}, {p})  (delta was 1)",
            outcome.array.rows()
        );
    }

    // Below the bound the attempt is made anyway and may still succeed.
    println!();
    let oa = mols_to_oa(&gen_mols_prime(5, 1).unwrap(), 5).unwrap();
    let outcome = complete(&oa).unwrap();
    println!(
        "OA(3,5) has delta = 3, bound {} > 5, yet completion {}",
        outcome.report.bound,
        if outcome.array.deficiency() == 0 {
            "succeeds"
        } else {
            "fails"
        }
    );
    if let Some(warning) = &outcome.report.warning {
        println!("  warning attached: {warning}");
    }
}
