//! Shared test fixtures and independent oracles. Everything here stays
//! independent of the library's implementation paths: cliques by subset
//! enumeration, rank by rational Gaussian elimination, multiplicities by
//! solving the trace equations directly.

#![allow(dead_code)]

use num_rational::Ratio;
use srgforge::graph::Graph;
use srgforge::oa::{gen_mols_prime, mols_to_oa, OrthogonalArray};

pub type Rat = Ratio<i128>;

/// Deterministic SplitMix64 for reproducible random graphs.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    pub fn chance(&mut self, numer: u64, denom: u64) -> bool {
        self.below(denom) < numer
    }
}

pub fn random_graph(v: usize, edge_permille: u64, rng: &mut SplitMix64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..v as u32 {
        for w in (u + 1)..v as u32 {
            if rng.chance(edge_permille, 1000) {
                edges.push((u, w));
            }
        }
    }
    Graph::from_edges(v, &edges).unwrap()
}

/// Petersen graph as Kneser K(5,2): 2-subsets of {0..4} in lexicographic
/// order, adjacent iff disjoint.
pub fn petersen() -> Graph {
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

/// Triangular graph T(5), the complement of Petersen.
pub fn t5() -> Graph {
    petersen().complement()
}

pub fn cycle(n: u32) -> Graph {
    let edges: Vec<(u32, u32)> = (0..n)
        .map(|i| {
            let j = (i + 1) % n;
            (i.min(j), i.max(j))
        })
        .collect();
    Graph::from_edges(n as usize, &edges).unwrap()
}

pub fn complete_graph(n: u32) -> Graph {
    let edges: Vec<(u32, u32)> = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .collect();
    Graph::from_edges(n as usize, &edges).unwrap()
}

/// The cyclic OA(m, p) built from m-2 cyclic MOLS of prime order p.
pub fn cyclic_oa(m: u32, p: u32) -> OrthogonalArray {
    let squares = if m == 2 {
        Vec::new()
    } else {
        gen_mols_prime(p, m - 2).unwrap()
    };
    mols_to_oa(&squares, p).unwrap()
}

/// Brute-force maximal clique enumeration over all vertex subsets.
/// Exponential; intended for v <= 14. Output matches the library's canonical
/// order (sorted cliques, lexicographic list).
pub fn brute_force_maximal_cliques(g: &Graph, min_size: usize) -> Vec<Vec<u32>> {
    let v = g.vertex_count();
    assert!(v <= 20, "oracle is exponential");
    let is_clique = |set: u32| -> bool {
        let members: Vec<u32> = (0..v as u32).filter(|&x| set & (1 << x) != 0).collect();
        members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[(i + 1)..].iter().all(|&b| g.is_adjacent(a, b)))
    };
    let mut out = Vec::new();
    for set in 1u32..(1 << v) {
        if !is_clique(set) {
            continue;
        }
        let extendable = (0..v as u32).any(|x| set & (1 << x) == 0 && is_clique(set | (1 << x)));
        if extendable {
            continue;
        }
        let members: Vec<u32> = (0..v as u32).filter(|&x| set & (1 << x) != 0).collect();
        if members.len() >= min_size {
            out.push(members);
        }
    }
    out.sort_unstable();
    out
}

/// Rank over the rationals by plain Gaussian elimination with exact
/// `Ratio<i128>` arithmetic; independent of the Bareiss path.
pub fn rational_gauss_rank(matrix: &[Vec<i128>]) -> usize {
    let nrows = matrix.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = matrix[0].len();
    let mut m: Vec<Vec<Rat>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| Rat::from_integer(x)).collect())
        .collect();
    let zero = Rat::from_integer(0);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..nrows).find(|&r| m[r][col] != zero) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col];
        for entry in &mut m[rank][col..] {
            *entry /= pivot;
        }
        let pivot_row_vals: Vec<Rat> = m[rank][col..].to_vec();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[col] != zero {
                let factor = row[col];
                for (entry, pv) in row[col..].iter_mut().zip(&pivot_row_vals) {
                    *entry -= factor * *pv;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Solves the two trace equations `f + g = v - 1` and
/// `k + f*theta1 + g*theta2 = 0` exactly; the independent multiplicity
/// oracle. Returns `None` when the solution is not a pair of non-negative
/// integers.
pub fn multiplicities_by_trace(v: i128, k: i128, theta1: i128, theta2: i128) -> Option<(u64, u64)> {
    let denom = theta1 - theta2;
    if denom == 0 {
        return None;
    }
    // g*(theta2 - theta1) = -k - (v-1)*theta1.
    let g_num = k + (v - 1) * theta1;
    if g_num % denom != 0 {
        return None;
    }
    let g = g_num / denom;
    let f = (v - 1) - g;
    if f < 0 || g < 0 {
        return None;
    }
    Some((f as u64, g as u64))
}

/// `A + diag(tau)` for a line system's underlying graph; the matrix whose
/// rank equals the incidence rank by the Gram identity.
pub fn gram_matrix(g: &Graph, tau: &[usize]) -> Vec<Vec<i128>> {
    let v = g.vertex_count();
    let mut m = vec![vec![0i128; v]; v];
    for u in 0..v {
        m[u][u] = tau[u] as i128;
        for &w in g.neighbors(u as u32) {
            m[u][w as usize] = 1;
        }
    }
    m
}
