//! Decide whether a graph is geometric: extract its Delsarte cliques as
//! lines and check the three partial-geometry axioms exhaustively.
//!
//! Run with: cargo run --example partial_geometry_check

use srgforge::graph::{verify_srg, Graph};
use srgforge::lines::{check_partial_geometry, delsarte_lines};
use srgforge::params::{has_geometric_parameters, pg_feasible, pg_point_graph_params, PgParams};

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

fn check(name: &str, g: &Graph) {
    let sp = verify_srg(g).unwrap();
    println!("{name}: srg({},{},{},{})", sp.v, sp.k, sp.lambda, sp.mu);
    match has_geometric_parameters(&sp) {
        Some(pg) => println!("  parameters have the pg form {pg}"),
        None => println!("  parameters do not even have the pg form"),
    }
    match delsarte_lines(g, &sp) {
        Ok(ls) => match check_partial_geometry(&ls) {
            Ok(pg) => {
                println!("  geometric: {pg} with {} lines", ls.line_count());
                let back = pg_point_graph_params(&pg).unwrap();
                println!(
                    "  point-graph formulas reproduce the parameters: {}",
                    back == sp
                );
            }
            Err(violation) => println!("  not geometric: {violation}"),
        },
        Err(e) => println!("  no Delsarte line system: {e}"),
    }
    println!();
}

fn main() {
    let p = petersen();
    check("T(5)", &p.complement());

    let rook = {
        let oa = srgforge::oa::mols_to_oa(&[], 5).unwrap();
        srgforge::oa::latin_square_graph(&oa).unwrap()
    };
    check("rook 5x5", &rook);

    check("Petersen", &p);

    // Feasibility of hypothetical pg parameter sets.
    for (k_pts, r_lines, t) in [(5u64, 2u64, 1u64), (4, 2, 2), (200, 5, 2)] {
        let pg = PgParams::new(k_pts, r_lines, t);
        let f = pg_feasible(&pg);
        print!("{pg}: feasible = {}", f.feasible);
        if let Some(v) = f.violation {
            print!("  ({v:?})");
        }
        println!();
    }
}
