//! Classify strongly-regular-graph parameter quadruples.
//!
//! Run with: cargo run --example classify_params

use srgforge::params::{classify_quadruple, eigendata, to_classical, StandardParams, VerdictKind};

fn describe(v: u64, k: u64, lambda: u64, mu: u64) {
    let verdict = classify_quadruple(v, k, lambda, mu);
    print!("srg({v},{k},{lambda},{mu}) -> {}", verdict.kind.name());
    match &verdict.kind {
        VerdictKind::ForcedLatinSquareGeometric { ls_order } => {
            print!("  [must be LS_m({ls_order})]")
        }
        VerdictKind::ForcedSteinerGeometric { design_points } => {
            print!("  [block graph of a 2-({design_points},m,1) design]")
        }
        VerdictKind::Infeasible(reason) => print!("  [{reason}]"),
        _ => {}
    }
    if let Some(bounds) = &verdict.bounds {
        print!(
            "  bounds: neumaier = {}, improved = {}",
            bounds.neumaier, bounds.improved
        );
    }
    println!();
}

fn main() {
    println!("Parameter classification\n");

    // The Clebsch graph: within both bounds, classical parameters with a
    // negative alpha.
    describe(16, 5, 0, 2);
    let clebsch = StandardParams::new(16, 5, 0, 2).unwrap();
    let ed = eigendata(&clebsch).unwrap();
    println!(
        "  spectrum: theta1 = {}, theta2 = {}, multiplicities f = {}, g = {}",
        ed.theta1, ed.theta2, ed.f_mult, ed.g_mult
    );
    let cp = to_classical(&clebsch).unwrap();
    println!("  classical parameters: {cp}\n");

    // A Paley graph: the conference family keeps irrational eigenvalues.
    describe(13, 6, 2, 3);
    let ed = eigendata(&StandardParams::new(13, 6, 2, 3).unwrap()).unwrap();
    println!("  spectrum: {} and {}\n", ed.theta1, ed.theta2);

    // Petersen: smallest eigenvalue -2 is outside the theorem's range.
    describe(10, 3, 0, 1);
    println!();

    // lambda far above the bound with mu = m(m-1): forced to be a Latin
    // square graph.
    describe(1849, 126, 43, 6);
    println!();

    // Same family with lambda just under the bound 125/3.
    describe(1681, 120, 41, 6);
    println!();

    // mu = 1 requires (lambda+1)(lambda+2) <= k; this quadruple passes all
    // counting and spectral tests yet cannot exist.
    describe(209, 16, 3, 1);
    println!();

    // Passes every counting test, exceeds both bounds, and mu is neither
    // m(m-1) nor m^2: ruled out.
    describe(2080, 77, 24, 2);
}
