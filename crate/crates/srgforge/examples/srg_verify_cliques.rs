//! Verify strong regularity on concrete graphs and enumerate their maximal
//! cliques; every clique respects the Delsarte cap 1 + k/m.
//!
//! Run with: cargo run --example srg_verify_cliques

use srgforge::graph::{maximal_cliques, verify_srg, Graph};
use srgforge::params::eigendata;

/// Petersen graph as Kneser K(5,2): 2-subsets of {0..4}, adjacent iff
/// disjoint.
fn petersen() -> Graph {
    let pairs: Vec<(u32, u32)> = (0..5)
        .flat_map(|a| ((a + 1)..5).map(move |b| (a, b)))
        .collect();
    let mut edges = Vec::new();
    for i in 0..pairs.len() {
        for j in (i + 1)..pairs.len() {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if a != c && a != d && b != c && b != d {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Graph::from_edges(10, &edges).unwrap()
}

fn inspect(name: &str, g: &Graph) {
    let sp = verify_srg(g).expect("strongly regular");
    println!("{name}: srg({},{},{},{})", sp.v, sp.k, sp.lambda, sp.mu);
    let ed = eigendata(&sp).unwrap();
    println!("  eigenvalues {} and {}", ed.theta1, ed.theta2);
    let cliques = maximal_cliques(g, 1);
    let largest = cliques.iter().map(Vec::len).max().unwrap();
    println!(
        "  {} maximal cliques, largest has {largest} vertices",
        cliques.len()
    );
    if let Some(m) = ed.m {
        let cap = 1 + sp.k / m;
        println!("  Delsarte cap 1 + k/m = {cap}");
        assert!(largest as u64 <= cap);
    }
    println!();
}

fn main() {
    let p = petersen();
    inspect("Petersen", &p);

    let t5 = p.complement();
    inspect("T(5) = complement of Petersen", &t5);
    println!(
        "T(5) cliques of size >= 4 (the five stars): {:?}\n",
        maximal_cliques(&t5, 4)
    );

    // A graph that is regular but not strongly regular.
    let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
    match verify_srg(&c6) {
        Err(e) => println!("hexagon rejected as expected: {e}"),
        Ok(_) => unreachable!(),
    }
}
