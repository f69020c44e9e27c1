//! The two classical-parameter thresholds: when beta is large enough the
//! graph carries a structured partial linear space, and a little more makes
//! it outright geometric.
//!
//! Run with: cargo run --example spls_thresholds

use srgforge::params::{
    from_classical, geometric_threshold_ok, spls_threshold_ok, ClassicalParams,
};

fn main() {
    println!("srgc(b, alpha, beta): thresholds on beta\n");
    println!(
        "{:>4} {:>6} {:>6} {:>12} {:>12} {:>24}",
        "b", "alpha", "beta", "spls", "geometric", "standard params"
    );
    for (b, alpha, beta) in [
        (2i128, 0i128, 8i128),
        (2, 0, 9),
        (2, 0, 10),
        (2, 0, 17),
        (2, 0, 25),
        (2, 1, 25),
        (3, 0, 40),
        (1, 0, 100),
    ] {
        let cp = ClassicalParams::from_integers(b, alpha, beta);
        let spls = spls_threshold_ok(&cp);
        let geo = if b >= 2 {
            geometric_threshold_ok(&cp).to_string()
        } else {
            "-".to_string()
        };
        let std = match from_classical(&cp) {
            Ok(sp) => format!("({},{},{},{})", sp.v, sp.k, sp.lambda, sp.mu),
            Err(_) => "not integral".to_string(),
        };
        println!("{b:>4} {alpha:>6} {beta:>6} {spls:>12} {geo:>12} {std:>24}");
    }

    println!();
    println!("spls: beta clears the line-system threshold, so the graph is the");
    println!("point graph of a partial linear space with bounded line count per");
    println!("vertex. geometric: beta >= 5b(b*alpha + b + alpha)/2 upgrades that");
    println!("to an actual partial geometry.");
}
