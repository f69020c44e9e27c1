//! Mutually orthogonal Latin squares and orthogonal arrays: generate the
//! cyclic squares, assemble an OA, convert back, and build the Latin square
//! graph.
//!
//! Run with: cargo run --example mols_and_oa

use srgforge::graph::verify_srg;
use srgforge::oa::{gen_mols_prime, latin_square_graph, mols_to_oa, oa_to_mols, validate_oa};

fn main() {
    // Two cyclic MOLS of order 5: L_a(i, j) = i + a*j mod 5.
    let squares = gen_mols_prime(5, 2).unwrap();
    println!("L_1 over Z5:");
    for r in 0..5 {
        let row: Vec<String> = (0..5).map(|c| squares[0].get(r, c).to_string()).collect();
        println!("  {}", row.join(" "));
    }

    // OA(4,5): rows i, j, L_1(i,j), L_2(i,j) over the 25 columns.
    let oa = mols_to_oa(&squares, 5).unwrap();
    println!(
        "\nOA({}, {}) with {} columns; deficiency delta = {}",
        oa.rows(),
        oa.symbols(),
        oa.columns(),
        oa.deficiency()
    );

    // Converting back recovers the squares exactly.
    assert_eq!(oa_to_mols(&oa).unwrap(), squares);
    println!("oa -> mols -> oa round trip is exact");

    // The column graph is a strongly regular Latin square graph.
    let graph = latin_square_graph(&oa).unwrap();
    let sp = verify_srg(&graph).unwrap();
    println!(
        "LS_4(5) graph: srg({},{},{},{})",
        sp.v, sp.k, sp.lambda, sp.mu
    );

    // Strength 2 fails over Z4 because 2j is not a bijection mod 4.
    let mut cells = Vec::new();
    for row_fn in [
        |i: u32, _j: u32| i,
        |_i: u32, j: u32| j,
        |i: u32, j: u32| (i + j) % 4,
        |i: u32, j: u32| (i + 2 * j) % 4,
    ] {
        for c in 0..16u32 {
            cells.push(row_fn(c / 4, c % 4));
        }
    }
    match validate_oa(4, 4, cells) {
        Err(e) => println!("\nZ4 attempt rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
