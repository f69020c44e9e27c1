//! Undirected simple graphs: adjacency-set representation, text format I/O,
//! maximal-clique enumeration, strong-regularity verification, complement.

use crate::params::{ParamsError, StandardParams};
use std::io::{BufRead, Write};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph is not regular: vertex {u} has degree {du}, vertex {w} has degree {dw}")]
    NotRegular {
        u: u32,
        du: usize,
        w: u32,
        dw: usize,
    },
    #[error(
        "not strongly regular: pair ({u},{w}) has {count} common neighbors, expected {expected}"
    )]
    NotStronglyRegular {
        u: u32,
        w: u32,
        count: usize,
        expected: usize,
    },
    #[error("diameter exceeds 2: vertices {u} and {w} are non-adjacent with no common neighbor")]
    DiameterExceeded { u: u32, w: u32 },
    #[error("parameters of the verified graph are invalid: {0}")]
    InvalidParameters(#[from] ParamsError),
    #[error(
        "Metsch conditions fail for sigma = {sigma}; pass the override flag to extract anyway"
    )]
    MetschConditionsFailed { sigma: u64 },
    #[error("not a partial linear space: {0}")]
    NotPartialLinearSpace(PlsViolation),
    #[error("vertex {vertex} lies on {count} lines, exceeding sigma = {sigma}")]
    SigmaExceeded {
        vertex: u32,
        count: usize,
        sigma: u64,
    },
    #[error("eigenvalues are irrational; line audit requires an integral smallest eigenvalue")]
    IrrationalEigenvalues,
    #[error("valency {k} is not divisible by m = {m}; no Delsarte clique size exists")]
    NoDelsarteSize { k: u64, m: u64 },
}

/// Witness for a failed partial-linear-space certification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlsViolation {
    EdgeInNoLine {
        u: u32,
        w: u32,
    },
    PairInTwoLines {
        u: u32,
        w: u32,
        line_a: usize,
        line_b: usize,
    },
    LineTooSmall {
        line: usize,
        size: usize,
    },
    LineNotClique {
        line: usize,
        u: u32,
        w: u32,
    },
    LineNotMaximal {
        line: usize,
        vertex: u32,
    },
    VertexOutOfRange {
        line: usize,
        vertex: u32,
    },
    VertexRepeated {
        line: usize,
        vertex: u32,
    },
}

impl std::fmt::Display for PlsViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PlsViolation::EdgeInNoLine { u, w } => write!(f, "edge ({u},{w}) lies in no line"),
            PlsViolation::PairInTwoLines {
                u,
                w,
                line_a,
                line_b,
            } => {
                write!(f, "pair ({u},{w}) lies in lines {line_a} and {line_b}")
            }
            PlsViolation::LineTooSmall { line, size } => {
                write!(f, "line {line} has only {size} vertices")
            }
            PlsViolation::LineNotClique { line, u, w } => {
                write!(f, "line {line} contains the non-adjacent pair ({u},{w})")
            }
            PlsViolation::LineNotMaximal { line, vertex } => {
                write!(
                    f,
                    "line {line} extends by vertex {vertex}, so it is not maximal"
                )
            }
            PlsViolation::VertexOutOfRange { line, vertex } => {
                write!(
                    f,
                    "line {line} names vertex {vertex}, which is not in the graph"
                )
            }
            PlsViolation::VertexRepeated { line, vertex } => {
                write!(f, "line {line} repeats vertex {vertex}")
            }
        }
    }
}

/// Undirected simple graph with per-vertex sorted neighbor lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph on `v` vertices from an edge list. Rejects loops,
    /// duplicate edges, and out-of-range endpoints.
    pub fn from_edges(v: usize, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); v];
        for &(u, w) in edges {
            if u == w {
                return Err(GraphError::Parse {
                    line: 0,
                    msg: format!("loop at vertex {u}"),
                });
            }
            if (u as usize) >= v || (w as usize) >= v {
                return Err(GraphError::Parse {
                    line: 0,
                    msg: format!("edge ({u},{w}) out of range for v = {v}"),
                });
            }
            adj[u as usize].push(w);
            adj[w as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            if list.windows(2).any(|p| p[0] == p[1]) {
                return Err(GraphError::Parse {
                    line: 0,
                    msg: "duplicate edge".into(),
                });
            }
        }
        Ok(Self { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: u32) -> &[u32] {
        &self.adj[u as usize]
    }

    pub fn degree(&self, u: u32) -> usize {
        self.adj[u as usize].len()
    }

    pub fn is_adjacent(&self, u: u32, w: u32) -> bool {
        self.adj[u as usize].binary_search(&w).is_ok()
    }

    /// Edges as `(u, w)` with `u < w`, in lexicographic order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.adj.len() as u32 {
            for &w in self.neighbors(u) {
                if u < w {
                    out.push((u, w));
                }
            }
        }
        out
    }

    /// Adjacency as bitset rows (word-packed), for dense set operations.
    pub fn bitset_rows(&self) -> Vec<Vec<u64>> {
        let words = self.adj.len().div_ceil(64);
        let mut rows = vec![vec![0u64; words]; self.adj.len()];
        for (u, list) in self.adj.iter().enumerate() {
            for &w in list {
                rows[u][(w / 64) as usize] |= 1u64 << (w % 64);
            }
        }
        rows
    }

    /// The complement graph; an involution.
    pub fn complement(&self) -> Graph {
        let v = self.adj.len() as u32;
        let mut adj = Vec::with_capacity(v as usize);
        for u in 0..v {
            let mut row = Vec::new();
            let mut it = self.adj[u as usize].iter().peekable();
            for w in 0..v {
                if it.peek() == Some(&&w) {
                    it.next();
                } else if w != u {
                    row.push(w);
                }
            }
            adj.push(row);
        }
        Graph { adj }
    }

    pub fn is_connected(&self) -> bool {
        let v = self.adj.len();
        if v == 0 {
            return true;
        }
        let mut seen = vec![false; v];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in self.neighbors(u) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == v
    }

    /// Reads the graph text format: line 1 `v e`, then `e` lines `u w` with
    /// `0 <= u < w < v`. Duplicate or out-of-range edges are errors.
    pub fn read_text<R: BufRead>(reader: R) -> Result<Self, GraphError> {
        let mut lines = reader.lines().enumerate();
        let (v, e) = match lines.next() {
            Some((_, Ok(header))) => {
                let mut it = header.split_whitespace();
                let v: usize = parse_field(it.next(), 1, "vertex count")?;
                let e: usize = parse_field(it.next(), 1, "edge count")?;
                if it.next().is_some() {
                    return Err(GraphError::Parse {
                        line: 1,
                        msg: "trailing tokens after `v e`".into(),
                    });
                }
                (v, e)
            }
            Some((_, Err(err))) => return Err(GraphError::Io(err)),
            None => {
                return Err(GraphError::Parse {
                    line: 1,
                    msg: "empty file".into(),
                })
            }
        };
        let mut edges = Vec::with_capacity(e);
        for _ in 0..e {
            let (idx, line) = lines.next().ok_or(GraphError::Parse {
                line: e + 1,
                msg: "fewer edge lines than declared".into(),
            })?;
            let line = line?;
            let lineno = idx + 1;
            let mut it = line.split_whitespace();
            let u: u32 = parse_field(it.next(), lineno, "edge endpoint")?;
            let w: u32 = parse_field(it.next(), lineno, "edge endpoint")?;
            if it.next().is_some() {
                return Err(GraphError::Parse {
                    line: lineno,
                    msg: "trailing tokens after edge".into(),
                });
            }
            if u >= w {
                return Err(GraphError::Parse {
                    line: lineno,
                    msg: format!("edges must satisfy u < w, got {u} {w}"),
                });
            }
            if (w as usize) >= v {
                return Err(GraphError::Parse {
                    line: lineno,
                    msg: format!("vertex {w} out of range for v = {v}"),
                });
            }
            edges.push((u, w));
        }
        for (idx, line) in lines {
            let line = line?;
            if !line.trim().is_empty() {
                return Err(GraphError::Parse {
                    line: idx + 1,
                    msg: "more edge lines than declared".into(),
                });
            }
        }
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|p| p[0] == p[1]) {
            return Err(GraphError::Parse {
                line: 0,
                msg: "duplicate edge".into(),
            });
        }
        Self::from_edges(v, &edges)
    }

    pub fn read_file(path: &std::path::Path) -> Result<Self, GraphError> {
        let file = std::fs::File::open(path)?;
        Self::read_text(std::io::BufReader::new(file))
    }

    /// Writes the graph text format.
    pub fn write_text<W: Write>(&self, mut writer: W) -> std::io::Result<()> {
        writeln!(writer, "{} {}", self.vertex_count(), self.edge_count())?;
        for (u, w) in self.edges() {
            writeln!(writer, "{u} {w}")?;
        }
        Ok(())
    }

    pub fn write_file(&self, path: &std::path::Path) -> Result<(), GraphError> {
        let mut out = Vec::new();
        self.write_text(&mut out)?;
        std::fs::write(path, out)?;
        Ok(())
    }
}

fn parse_field<T: std::str::FromStr>(
    tok: Option<&str>,
    line: usize,
    what: &str,
) -> Result<T, GraphError> {
    let tok = tok.ok_or_else(|| GraphError::Parse {
        line,
        msg: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| GraphError::Parse {
        line,
        msg: format!("invalid {what}: {tok:?}"),
    })
}

/// Confirms k-regularity, constant lambda over edges, constant mu over
/// non-adjacent pairs, and diameter 2, returning the quadruple.
pub fn verify_srg(g: &Graph) -> Result<StandardParams, GraphError> {
    let v = g.vertex_count();
    if v < 2 {
        return Err(GraphError::Parse {
            line: 0,
            msg: "graph too small for strong regularity".into(),
        });
    }
    let k = g.degree(0);
    for u in 1..v as u32 {
        if g.degree(u) != k {
            return Err(GraphError::NotRegular {
                u: 0,
                du: k,
                w: u,
                dw: g.degree(u),
            });
        }
    }
    let rows = g.bitset_rows();
    let common = |u: usize, w: usize| -> usize {
        rows[u]
            .iter()
            .zip(&rows[w])
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    };
    let mut lambda: Option<usize> = None;
    let mut mu: Option<usize> = None;
    for u in 0..v {
        for w in (u + 1)..v {
            let c = common(u, w);
            if g.is_adjacent(u as u32, w as u32) {
                match lambda {
                    None => lambda = Some(c),
                    Some(l) if l != c => {
                        return Err(GraphError::NotStronglyRegular {
                            u: u as u32,
                            w: w as u32,
                            count: c,
                            expected: l,
                        })
                    }
                    _ => {}
                }
            } else {
                if c == 0 {
                    return Err(GraphError::DiameterExceeded {
                        u: u as u32,
                        w: w as u32,
                    });
                }
                match mu {
                    None => mu = Some(c),
                    Some(m) if m != c => {
                        return Err(GraphError::NotStronglyRegular {
                            u: u as u32,
                            w: w as u32,
                            count: c,
                            expected: m,
                        })
                    }
                    _ => {}
                }
            }
        }
    }
    let lambda = lambda.unwrap_or(0);
    let mu = mu.ok_or(ParamsError::NotPrimitive {
        v: v as u64,
        k: k as u64,
    })?;
    Ok(StandardParams::new(
        v as u64,
        k as u64,
        lambda as u64,
        mu as u64,
    )?)
}

struct CliqueSearch<'a> {
    rows: &'a [Vec<u64>],
    min_size: usize,
    out: Vec<Vec<u32>>,
}

impl CliqueSearch<'_> {
    fn run(&mut self, r: &mut Vec<u32>, p: &mut [u64], x: &mut [u64]) {
        let p_count: usize = p.iter().map(|w| w.count_ones() as usize).sum();
        if p_count == 0 {
            if x.iter().all(|&w| w == 0) && r.len() >= self.min_size {
                let mut clique = r.clone();
                clique.sort_unstable();
                self.out.push(clique);
            }
            return;
        }
        if r.len() + p_count < self.min_size {
            return;
        }
        // Pivot: the vertex of P union X with the most neighbors inside P.
        let mut pivot = None;
        let mut best = usize::MAX;
        for (word, (pw, xw)) in p.iter().zip(x.iter()).enumerate() {
            let mut bits = pw | xw;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let u = word * 64 + b;
                let missed: usize = p
                    .iter()
                    .zip(&self.rows[u])
                    .map(|(pw, nw)| (pw & !nw).count_ones() as usize)
                    .sum();
                if missed < best {
                    best = missed;
                    pivot = Some(u);
                }
            }
        }
        let pivot = pivot.expect("P union X is nonempty");
        // Candidates: P minus the pivot's neighborhood.
        let mut cand = Vec::new();
        for (word, (pw, nw)) in p.iter().zip(&self.rows[pivot]).enumerate() {
            let mut bits = pw & !nw;
            while bits != 0 {
                let b = bits.trailing_zeros();
                bits &= bits - 1;
                cand.push((word * 64) as u32 + b);
            }
        }
        for u in cand {
            let (word, bit) = ((u / 64) as usize, u % 64);
            p[word] &= !(1u64 << bit);
            let mut next_p: Vec<u64> = p
                .iter()
                .zip(&self.rows[u as usize])
                .map(|(a, b)| a & b)
                .collect();
            let mut next_x: Vec<u64> = x
                .iter()
                .zip(&self.rows[u as usize])
                .map(|(a, b)| a & b)
                .collect();
            r.push(u);
            self.run(r, &mut next_p, &mut next_x);
            r.pop();
            x[word] |= 1u64 << bit;
        }
    }
}

/// All inclusion-maximal cliques of size at least `min_size`, each sorted,
/// the whole list in lexicographic order (Bron-Kerbosch with pivoting).
pub fn maximal_cliques(g: &Graph, min_size: usize) -> Vec<Vec<u32>> {
    let v = g.vertex_count();
    if v == 0 {
        return Vec::new();
    }
    let rows = g.bitset_rows();
    let words = v.div_ceil(64);
    let mut p = vec![u64::MAX; words];
    let spare = words * 64 - v;
    if spare > 0 {
        p[words - 1] = u64::MAX >> spare;
    }
    let mut search = CliqueSearch {
        rows: &rows,
        min_size,
        out: Vec::new(),
    };
    search.run(&mut Vec::new(), &mut p, &mut vec![0u64; words]);
    search.out.sort_unstable();
    search.out
}
