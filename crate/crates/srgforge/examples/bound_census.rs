//! Compare the two lambda bounds across mu and watch the crossover at m = 6.
//!
//! Run with: cargo run --example bound_census

use srgforge::params::{improved_bound, mu_upper_bound, neumaier_bound};

fn main() {
    println!("For smallest eigenvalue -m, lambda is bounded by f(m, mu) unless");
    println!("mu = m(m-1) or mu = m^2 (the two geometric families).\n");

    for m in [3u64, 6] {
        println!("m = {m}   (mu ranges over 1..={})", mu_upper_bound(m));
        println!(
            "{:>6} {:>14} {:>14} {:>10}",
            "mu", "neumaier", "improved", "smaller"
        );
        for mu in [1u64, 2, 6, 9, 12, 30, 36] {
            if mu > mu_upper_bound(m) as u64 {
                continue;
            }
            let nb = neumaier_bound(m, mu);
            let ib = improved_bound(m, mu);
            let smaller = match ib.cmp(&nb) {
                std::cmp::Ordering::Less => "improved",
                std::cmp::Ordering::Greater => "neumaier",
                std::cmp::Ordering::Equal => "equal",
            };
            let mark = if mu == m * (m - 1) {
                "  <- mu = m(m-1)"
            } else if mu == m * m {
                "  <- mu = m^2"
            } else {
                ""
            };
            println!(
                "{:>6} {:>14} {:>14} {:>10}{}",
                mu,
                nb.to_string(),
                ib.to_string(),
                smaller,
                mark
            );
        }
        println!();
    }

    // The improved bound wins everywhere once m >= 6.
    let mut all_improved = true;
    for m in 6..=20u64 {
        for mu in 1..=(mu_upper_bound(m) as u64) {
            if improved_bound(m, mu) >= neumaier_bound(m, mu) {
                all_improved = false;
            }
        }
    }
    println!(
        "improved < neumaier for every (m, mu) with 6 <= m <= 20: {}",
        all_improved
    );
    println!(
        "at m = 3, mu = 6 the older bound is tighter: {} < {}",
        neumaier_bound(3, 6),
        improved_bound(3, 6)
    );
}
