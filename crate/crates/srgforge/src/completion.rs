//! Completion of deficient orthogonal arrays: the complement of the Latin
//! square graph is covered by size-`n` cliques, the cliques are grouped into
//! parallel classes, and each class becomes one new row.

use crate::graph::{maximal_cliques, Graph};
use crate::lines::LineSystem;
use crate::oa::{latin_square_graph, OaError, OrthogonalArray};
use crate::rat::{frac, rat_string, Rat};
use serde::Serialize;

/// The cubic completion threshold `8d^3/3 - 16d^2/3 + 2d + 2/3`: completion
/// is guaranteed whenever `n` strictly exceeds it.
pub fn completion_bound(delta: u32) -> Rat {
    let d = delta as i128;
    frac(8 * d * d * d - 16 * d * d + 6 * d + 2, 3)
}

/// A set of `delta` parallel classes, each a partition of the `n^2` columns
/// into `n` disjoint lines of size `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelClassSet {
    classes: Vec<Vec<Vec<u32>>>,
    n: u32,
}

impl ParallelClassSet {
    pub fn classes(&self) -> &[Vec<Vec<u32>>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn line_count(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    /// Emits one OA row per class: lines ordered by minimum column index,
    /// each column labeled with its line's position in that order.
    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        let width = self.n as usize * self.n as usize;
        self.classes
            .iter()
            .map(|class| {
                let mut ordered: Vec<&Vec<u32>> = class.iter().collect();
                ordered.sort_by_key(|line| line[0]);
                let mut row = vec![u32::MAX; width];
                for (label, line) in ordered.iter().enumerate() {
                    for &col in *line {
                        row[col as usize] = label as u32;
                    }
                }
                debug_assert!(row.iter().all(|&s| s != u32::MAX));
                row
            })
            .collect()
    }
}

/// Finds the size-`n` clique lines of `complement_graph` and groups them into
/// `delta` parallel classes, verifying the geometric certificate (each vertex
/// on exactly `delta` lines, each edge in exactly one) and the partition
/// property of every class.
pub fn parallel_classes(
    complement_graph: &Graph,
    n: u32,
    delta: u32,
) -> Result<ParallelClassSet, OaError> {
    let v = complement_graph.vertex_count();
    debug_assert_eq!(v, n as usize * n as usize);
    let mut lines = maximal_cliques(complement_graph, n as usize);
    if let Some(big) = lines.iter().find(|c| c.len() > n as usize) {
        return Err(OaError::NotGeometric {
            msg: format!(
                "clique of size {} exceeds the Delsarte cap n = {n}",
                big.len()
            ),
        });
    }
    lines.retain(|c| c.len() == n as usize);
    // Partial-linear-space certification covers "each edge in exactly one
    // line"; the vertex count check below completes the geometric
    // certificate.
    let system = LineSystem::certify(complement_graph, lines, None)
        .map_err(|e| OaError::NotGeometric { msg: e.to_string() })?;
    for x in 0..v as u32 {
        let t = system.tau(x);
        if t as u32 != delta {
            return Err(OaError::NotGeometric {
                msg: format!("vertex {x} lies on {t} size-{n} cliques, expected delta = {delta}"),
            });
        }
    }
    let lines = system.lines().to_vec();
    let mut grouped = vec![false; lines.len()];
    let mut classes = Vec::new();
    for seed in 0..lines.len() {
        if grouped[seed] {
            continue;
        }
        let mut in_seed = vec![false; v];
        for &x in &lines[seed] {
            in_seed[x as usize] = true;
        }
        let mut class_idx = vec![seed];
        for (other, line) in lines.iter().enumerate() {
            if other != seed && line.iter().all(|&x| !in_seed[x as usize]) {
                class_idx.push(other);
            }
        }
        if class_idx.len() != n as usize {
            return Err(OaError::ParallelismNotTransitive {
                seed,
                msg: format!(
                    "{} lines are disjoint from the seed line, expected {n}",
                    class_idx.len()
                ),
            });
        }
        let mut covered = vec![false; v];
        for &idx in &class_idx {
            if grouped[idx] {
                return Err(OaError::ParallelismNotTransitive {
                    seed,
                    msg: format!("line {idx} would belong to two classes"),
                });
            }
            for &x in &lines[idx] {
                if covered[x as usize] {
                    return Err(OaError::ParallelismNotTransitive {
                        seed,
                        msg: format!("column {x} covered twice within one class"),
                    });
                }
                covered[x as usize] = true;
            }
        }
        if !covered.iter().all(|&c| c) {
            return Err(OaError::ParallelismNotTransitive {
                seed,
                msg: "class does not cover all columns".into(),
            });
        }
        for &idx in &class_idx {
            grouped[idx] = true;
        }
        classes.push(class_idx.iter().map(|&i| lines[i].clone()).collect());
    }
    debug_assert_eq!(classes.len(), delta as usize);
    Ok(ParallelClassSet { classes, n })
}

/// Summary of a completion run.
#[derive(Debug, Clone, Serialize)]
pub struct CompletionReport {
    pub delta: u32,
    pub n: u32,
    /// The cubic threshold as an exact fraction string.
    pub bound: String,
    /// Whether `n` strictly exceeds the threshold (success guaranteed).
    pub bound_met: bool,
    pub warning: Option<String>,
    pub already_full: bool,
    pub lines_found: usize,
    pub class_count: usize,
    pub new_rows: u32,
}

/// Result of [`complete`]: the full array, the report, and the parallel
/// classes that produced the new rows (absent when the input was full).
#[derive(Debug, Clone)]
pub struct CompletionOutcome {
    pub array: OrthogonalArray,
    pub report: CompletionReport,
    pub classes: Option<ParallelClassSet>,
}

/// Extends a certified OA(m, n) to a full OA(n+1, n), preserving the input
/// rows. Below the cubic bound the attempt proceeds anyway (the bound is
/// sufficient, not necessary) and failures carry witnesses.
pub fn complete(oa: &OrthogonalArray) -> Result<CompletionOutcome, OaError> {
    let n = oa.symbols();
    let delta = oa.deficiency();
    let bound = completion_bound(delta);
    let bound_met = Rat::from_integer(n as i128) > bound;
    let warning = if delta > 0 && !bound_met {
        Some(format!(
            "n = {n} does not exceed the completion bound {}; completion is attempted but not guaranteed",
            rat_string(&bound)
        ))
    } else {
        None
    };
    let mut report = CompletionReport {
        delta,
        n,
        bound: rat_string(&bound),
        bound_met,
        warning,
        already_full: delta == 0,
        lines_found: 0,
        class_count: 0,
        new_rows: delta,
    };
    if delta == 0 {
        return Ok(CompletionOutcome {
            array: oa.clone(),
            report,
            classes: None,
        });
    }
    let graph = latin_square_graph(oa)?;
    let complement = graph.complement();
    let classes = if delta == 1 {
        single_class_from_components(&complement, n)?
    } else {
        parallel_classes(&complement, n, delta)?
    };
    report.lines_found = classes.line_count();
    report.class_count = classes.class_count();
    let mut array = oa.clone();
    for row in classes.to_rows() {
        array = array
            .with_row(row)
            .map_err(|e| OaError::ResultNotOA(Box::new(e)))?;
    }
    debug_assert_eq!(array.deficiency(), 0);
    Ok(CompletionOutcome {
        array,
        report,
        classes: Some(classes),
    })
}

/// The deficiency-1 special case: the complement must be a disjoint union of
/// `n` cliques of size `n`, which form the single parallel class directly.
fn single_class_from_components(complement: &Graph, n: u32) -> Result<ParallelClassSet, OaError> {
    let v = complement.vertex_count();
    let mut seen = vec![false; v];
    let mut lines = Vec::new();
    for start in 0..v as u32 {
        if seen[start as usize] {
            continue;
        }
        let mut component = vec![start];
        seen[start as usize] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in complement.neighbors(u) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    component.push(w);
                    stack.push(w);
                }
            }
        }
        if component.len() != n as usize {
            return Err(OaError::NotGeometric {
                msg: format!(
                    "complement component of size {} is not a K_{n}",
                    component.len()
                ),
            });
        }
        component.sort_unstable();
        for i in 0..component.len() {
            for j in (i + 1)..component.len() {
                if !complement.is_adjacent(component[i], component[j]) {
                    return Err(OaError::NotGeometric {
                        msg: format!(
                            "complement component containing vertex {start} is not a clique"
                        ),
                    });
                }
            }
        }
        lines.push(component);
    }
    lines.sort_unstable();
    Ok(ParallelClassSet {
        classes: vec![lines],
        n,
    })
}
