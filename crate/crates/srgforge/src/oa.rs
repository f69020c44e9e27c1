//! Orthogonal arrays of strength 2 and index 1, mutually orthogonal Latin
//! squares, and the Latin square graph construction.

use crate::graph::Graph;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum OaError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("dimension mismatch: {msg}")]
    DimensionMismatch { msg: String },
    #[error("symbol {symbol} at row {row}, column {column} is out of range 0..{n}")]
    SymbolOutOfRange {
        row: usize,
        column: usize,
        symbol: u32,
        n: u32,
    },
    #[error("rows {row_a} and {row_b} repeat the ordered pair at columns {col_a} and {col_b}")]
    RepeatedPair {
        row_a: usize,
        row_b: usize,
        col_a: usize,
        col_b: usize,
    },
    #[error("square {index} is not Latin: {msg}")]
    NotLatin { index: usize, msg: String },
    #[error("squares {index_a} and {index_b} are not orthogonal: pair ({a},{b}) repeats at cells ({r1},{c1}) and ({r2},{c2})")]
    NotOrthogonal {
        index_a: usize,
        index_b: usize,
        a: u32,
        b: u32,
        r1: usize,
        c1: usize,
        r2: usize,
        c2: usize,
    },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("at most p-1 = {max} cyclic squares exist for order {p}, requested {requested}")]
    CountTooLarge { p: u32, max: u32, requested: u32 },
    #[error("columns {col_a} and {col_b} agree in more than one row; not an orthogonal array")]
    ColumnsAgreeTwice { col_a: usize, col_b: usize },
    #[error("complement clique cover is not geometric: {msg}")]
    NotGeometric { msg: String },
    #[error("parallel class seeded by line {seed} fails to partition the columns: {msg}")]
    ParallelismNotTransitive { seed: usize, msg: String },
    #[error("completed array failed re-validation (internal bug): {0}")]
    ResultNotOA(Box<OaError>),
}

/// An `n x n` Latin square over symbols `0..n-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquare {
    n: u32,
    cells: Vec<u32>,
}

impl LatinSquare {
    /// Validates an `n x n` array of symbols as a Latin square.
    pub fn new(n: u32, cells: Vec<u32>) -> Result<Self, OaError> {
        if n == 0 || cells.len() != n as usize * n as usize {
            return Err(OaError::DimensionMismatch {
                msg: format!("expected {n}x{n} cells, got {}", cells.len()),
            });
        }
        let sq = Self { n, cells };
        for r in 0..n as usize {
            let mut seen = vec![false; n as usize];
            for c in 0..n as usize {
                let v = sq.get(r, c);
                if v >= n {
                    return Err(OaError::SymbolOutOfRange {
                        row: r,
                        column: c,
                        symbol: v,
                        n,
                    });
                }
                if seen[v as usize] {
                    return Err(OaError::NotLatin {
                        index: 0,
                        msg: format!("row {r} repeats symbol {v}"),
                    });
                }
                seen[v as usize] = true;
            }
        }
        for c in 0..n as usize {
            let mut seen = vec![false; n as usize];
            for r in 0..n as usize {
                let v = sq.get(r, c);
                if seen[v as usize] {
                    return Err(OaError::NotLatin {
                        index: 0,
                        msg: format!("column {c} repeats symbol {v}"),
                    });
                }
                seen[v as usize] = true;
            }
        }
        Ok(sq)
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.cells[r * self.n as usize + c]
    }

    /// Latin-square text format: line 1 `n`, then `n` rows of `n` symbols.
    pub fn read_text<R: std::io::BufRead>(reader: R) -> Result<Self, OaError> {
        let mut lines = reader.lines();
        let header = lines.next().ok_or(OaError::Parse {
            line: 1,
            msg: "empty file".into(),
        })??;
        let n: u32 = header.trim().parse().map_err(|_| OaError::Parse {
            line: 1,
            msg: format!("invalid order: {header:?}"),
        })?;
        let mut cells = Vec::with_capacity(n as usize * n as usize);
        for r in 0..n as usize {
            let line = lines.next().ok_or(OaError::Parse {
                line: r + 2,
                msg: "missing row".into(),
            })??;
            let row: Result<Vec<u32>, _> = line.split_whitespace().map(str::parse).collect();
            let row = row.map_err(|_| OaError::Parse {
                line: r + 2,
                msg: "invalid symbol".into(),
            })?;
            if row.len() != n as usize {
                return Err(OaError::Parse {
                    line: r + 2,
                    msg: format!("expected {n} symbols, got {}", row.len()),
                });
            }
            cells.extend(row);
        }
        Self::new(n, cells)
    }

    pub fn write_text<W: std::io::Write>(&self, mut writer: W) -> std::io::Result<()> {
        writeln!(writer, "{}", self.n)?;
        for r in 0..self.n as usize {
            let row: Vec<String> = (0..self.n as usize)
                .map(|c| self.get(r, c).to_string())
                .collect();
            writeln!(writer, "{}", row.join(" "))?;
        }
        Ok(())
    }

    pub fn read_file(path: &std::path::Path) -> Result<Self, OaError> {
        let file = std::fs::File::open(path)?;
        Self::read_text(std::io::BufReader::new(file))
    }

    pub fn write_file(&self, path: &std::path::Path) -> Result<(), OaError> {
        let mut out = Vec::new();
        self.write_text(&mut out)?;
        std::fs::write(path, out)?;
        Ok(())
    }
}

/// A certified orthogonal array OA(m, n): an `m x n^2` array over symbols
/// `0..n-1` in which every pair of distinct rows exhibits all `n^2` ordered
/// pairs (strength 2, index 1).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrthogonalArray {
    m: u32,
    n: u32,
    /// Row-major `m x n^2`.
    cells: Vec<u32>,
}

impl OrthogonalArray {
    pub fn rows(&self) -> u32 {
        self.m
    }

    pub fn symbols(&self) -> u32 {
        self.n
    }

    pub fn columns(&self) -> usize {
        self.n as usize * self.n as usize
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.cells[row * self.columns() + col]
    }

    pub fn row(&self, row: usize) -> &[u32] {
        let w = self.columns();
        &self.cells[row * w..(row + 1) * w]
    }

    /// Deficiency `delta = n - m + 1`, the number of missing rows.
    pub fn deficiency(&self) -> u32 {
        self.n + 1 - self.m
    }

    /// Appends a row and re-certifies. Used by the completion procedure.
    pub fn with_row(&self, row: Vec<u32>) -> Result<Self, OaError> {
        let mut cells = self.cells.clone();
        cells.extend(row);
        validate_oa(self.m + 1, self.n, cells)
    }

    /// OA text format: line 1 `m n`, then `m` lines of `n^2` symbols.
    pub fn read_text<R: std::io::BufRead>(reader: R) -> Result<Self, OaError> {
        let mut lines = reader.lines();
        let header = lines.next().ok_or(OaError::Parse {
            line: 1,
            msg: "empty file".into(),
        })??;
        let mut it = header.split_whitespace();
        let m: u32 = parse_tok(it.next(), 1)?;
        let n: u32 = parse_tok(it.next(), 1)?;
        if it.next().is_some() {
            return Err(OaError::Parse {
                line: 1,
                msg: "trailing tokens after `m n`".into(),
            });
        }
        let width = (n as usize) * (n as usize);
        let mut cells = Vec::with_capacity(m as usize * width);
        for r in 0..m as usize {
            let line = lines.next().ok_or(OaError::Parse {
                line: r + 2,
                msg: "missing row".into(),
            })??;
            let row: Result<Vec<u32>, _> = line.split_whitespace().map(str::parse).collect();
            let row = row.map_err(|_| OaError::Parse {
                line: r + 2,
                msg: "invalid symbol".into(),
            })?;
            if row.len() != width {
                return Err(OaError::Parse {
                    line: r + 2,
                    msg: format!("expected {width} symbols, got {}", row.len()),
                });
            }
            cells.extend(row);
        }
        validate_oa(m, n, cells)
    }

    pub fn write_text<W: std::io::Write>(&self, mut writer: W) -> std::io::Result<()> {
        writeln!(writer, "{} {}", self.m, self.n)?;
        for r in 0..self.m as usize {
            let row: Vec<String> = self.row(r).iter().map(u32::to_string).collect();
            writeln!(writer, "{}", row.join(" "))?;
        }
        Ok(())
    }

    pub fn read_file(path: &std::path::Path) -> Result<Self, OaError> {
        let file = std::fs::File::open(path)?;
        Self::read_text(std::io::BufReader::new(file))
    }

    pub fn write_file(&self, path: &std::path::Path) -> Result<(), OaError> {
        let mut out = Vec::new();
        self.write_text(&mut out)?;
        std::fs::write(path, out)?;
        Ok(())
    }
}

fn parse_tok<T: std::str::FromStr>(tok: Option<&str>, line: usize) -> Result<T, OaError> {
    tok.ok_or(OaError::Parse {
        line,
        msg: "missing token".into(),
    })?
    .parse()
    .map_err(|_| OaError::Parse {
        line,
        msg: "invalid token".into(),
    })
}

/// Certifies a raw `m x n^2` symbol array as a strength-2, index-1
/// orthogonal array, reporting the first violating witness otherwise.
pub fn validate_oa(m: u32, n: u32, cells: Vec<u32>) -> Result<OrthogonalArray, OaError> {
    if n == 0 || m < 2 || m > n + 1 {
        return Err(OaError::DimensionMismatch {
            msg: format!("need 2 <= m <= n+1, got m = {m}, n = {n}"),
        });
    }
    let width = (n as usize) * (n as usize);
    if cells.len() != m as usize * width {
        return Err(OaError::DimensionMismatch {
            msg: format!(
                "expected {m} x {width} = {} cells, got {}",
                m as usize * width,
                cells.len()
            ),
        });
    }
    for (idx, &s) in cells.iter().enumerate() {
        if s >= n {
            return Err(OaError::SymbolOutOfRange {
                row: idx / width,
                column: idx % width,
                symbol: s,
                n,
            });
        }
    }
    let oa = OrthogonalArray { m, n, cells };
    for a in 0..m as usize {
        for b in (a + 1)..m as usize {
            let mut seen: Vec<Option<usize>> = vec![None; width];
            for c in 0..width {
                let key = oa.get(a, c) as usize * n as usize + oa.get(b, c) as usize;
                if let Some(prev) = seen[key] {
                    return Err(OaError::RepeatedPair {
                        row_a: a,
                        row_b: b,
                        col_a: prev,
                        col_b: c,
                    });
                }
                seen[key] = Some(c);
            }
        }
    }
    Ok(oa)
}

fn check_orthogonal(a: &LatinSquare, b: &LatinSquare, ia: usize, ib: usize) -> Result<(), OaError> {
    let n = a.order() as usize;
    let mut seen: Vec<Option<(usize, usize)>> = vec![None; n * n];
    for r in 0..n {
        for c in 0..n {
            let key = (a.get(r, c) as usize) * n + b.get(r, c) as usize;
            if let Some((r0, c0)) = seen[key] {
                return Err(OaError::NotOrthogonal {
                    index_a: ia,
                    index_b: ib,
                    a: a.get(r, c),
                    b: b.get(r, c),
                    r1: r0,
                    c1: c0,
                    r2: r,
                    c2: c,
                });
            }
            seen[key] = Some((r, c));
        }
    }
    Ok(())
}

/// Builds OA(k+2, n) from `k` mutually orthogonal Latin squares of order `n`:
/// column `c = i*n + j` carries `(i, j, L_1(i,j), ..., L_k(i,j))`.
/// Orthogonality and the Latin property are checked.
pub fn mols_to_oa(squares: &[LatinSquare], n: u32) -> Result<OrthogonalArray, OaError> {
    for (idx, sq) in squares.iter().enumerate() {
        if sq.order() != n {
            return Err(OaError::DimensionMismatch {
                msg: format!("square {idx} has order {}, expected {n}", sq.order()),
            });
        }
    }
    for a in 0..squares.len() {
        for b in (a + 1)..squares.len() {
            check_orthogonal(&squares[a], &squares[b], a, b)?;
        }
    }
    let width = (n as usize) * (n as usize);
    let m = squares.len() as u32 + 2;
    let mut cells = Vec::with_capacity(m as usize * width);
    for c in 0..width {
        cells.push((c / n as usize) as u32);
    }
    for c in 0..width {
        cells.push((c % n as usize) as u32);
    }
    for sq in squares {
        for c in 0..width {
            cells.push(sq.get(c / n as usize, c % n as usize));
        }
    }
    validate_oa(m, n, cells)
}

/// Extracts the `m - 2` MOLS from an orthogonal array: rows 0 and 1 serve as
/// coordinates (their pairs are distinct by strength 2), and each further row
/// becomes a square. The squares are automatically Latin and pairwise
/// orthogonal; round-tripping through [`mols_to_oa`] restores an equivalent
/// array in canonical column order.
pub fn oa_to_mols(oa: &OrthogonalArray) -> Result<Vec<LatinSquare>, OaError> {
    let n = oa.symbols();
    let width = oa.columns();
    let mut column_of = vec![usize::MAX; width];
    for c in 0..width {
        let key = oa.get(0, c) as usize * n as usize + oa.get(1, c) as usize;
        column_of[key] = c;
    }
    let mut out = Vec::new();
    for row in 2..oa.rows() as usize {
        let mut cells = Vec::with_capacity(width);
        for i in 0..n {
            for j in 0..n {
                cells.push(oa.get(row, column_of[i as usize * n as usize + j as usize]));
            }
        }
        out.push(LatinSquare::new(n, cells)?);
    }
    Ok(out)
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The cyclic squares `L_a(i, j) = i + a*j mod p` for `a = 1..=count`;
/// pairwise orthogonal for prime `p`.
pub fn gen_mols_prime(p: u32, count: u32) -> Result<Vec<LatinSquare>, OaError> {
    if !is_prime(p) {
        return Err(OaError::NotPrime(p));
    }
    if count == 0 || count > p - 1 {
        return Err(OaError::CountTooLarge {
            p,
            max: p - 1,
            requested: count,
        });
    }
    let mut out = Vec::with_capacity(count as usize);
    for a in 1..=count {
        let cells = (0..p)
            .flat_map(|i| (0..p).map(move |j| ((i as u64 + a as u64 * j as u64) % p as u64) as u32))
            .collect();
        out.push(LatinSquare::new(p, cells)?);
    }
    Ok(out)
}

/// The Latin square graph LS_m(n) of an orthogonal array: vertices are the
/// `n^2` columns, adjacent iff they agree in exactly one row. Strength 2
/// forces at most one agreement, which is asserted during construction.
pub fn latin_square_graph(oa: &OrthogonalArray) -> Result<Graph, OaError> {
    let width = oa.columns();
    let m = oa.rows() as usize;
    let mut edges = Vec::new();
    for a in 0..width {
        for b in (a + 1)..width {
            let agreements = (0..m).filter(|&r| oa.get(r, a) == oa.get(r, b)).count();
            match agreements {
                0 => {}
                1 => edges.push((a as u32, b as u32)),
                _ => return Err(OaError::ColumnsAgreeTwice { col_a: a, col_b: b }),
            }
        }
    }
    Ok(Graph::from_edges(width, &edges).expect("edge list is simple by construction"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify_srg;
    use crate::params::StandardParams;

    fn cyclic_oa(m: u32, p: u32) -> OrthogonalArray {
        let squares = if m == 2 {
            Vec::new()
        } else {
            gen_mols_prime(p, m - 2).unwrap()
        };
        mols_to_oa(&squares, p).unwrap()
    }

    #[test]
    fn cyclic_constructions_validate() {
        let oa = cyclic_oa(4, 5);
        assert_eq!((oa.rows(), oa.symbols()), (4, 5));
        assert_eq!(oa.deficiency(), 2);
        let oa = cyclic_oa(2, 3);
        assert_eq!((oa.rows(), oa.symbols()), (2, 3));
    }

    #[test]
    fn z4_collision_detected() {
        // Rows i, j, i+j, i+2j over Z4: 2j is not a bijection mod 4.
        let n = 4u32;
        let width = 16usize;
        let mut cells = Vec::new();
        for row_fn in [
            |i: u32, _j: u32| i,
            |_i: u32, j: u32| j,
            |i: u32, j: u32| (i + j) % 4,
            |i: u32, j: u32| (i + 2 * j) % 4,
        ] {
            for c in 0..width {
                cells.push(row_fn(c as u32 / n, c as u32 % n));
            }
        }
        let err = validate_oa(4, 4, cells).unwrap_err();
        match err {
            OaError::RepeatedPair {
                row_a,
                row_b,
                col_a,
                col_b,
            } => {
                assert_eq!((row_a, row_b), (0, 3));
                assert_eq!((col_a, col_b), (0, 2));
            }
            other => panic!("expected RepeatedPair, got {other}"),
        }
    }

    #[test]
    fn no_mols_of_order_two() {
        let a = LatinSquare::new(2, vec![0, 1, 1, 0]).unwrap();
        let b = LatinSquare::new(2, vec![1, 0, 0, 1]).unwrap();
        assert!(matches!(
            mols_to_oa(&[a, b], 2),
            Err(OaError::NotOrthogonal { .. })
        ));
    }

    #[test]
    fn not_latin_rejected() {
        assert!(matches!(
            LatinSquare::new(2, vec![0, 1, 0, 1]),
            Err(OaError::NotLatin { .. })
        ));
    }

    #[test]
    fn mols_round_trip() {
        let squares = gen_mols_prime(7, 3).unwrap();
        let oa = mols_to_oa(&squares, 7).unwrap();
        assert_eq!(oa.rows(), 5);
        let back = oa_to_mols(&oa).unwrap();
        assert_eq!(back, squares);
        assert_eq!(mols_to_oa(&back, 7).unwrap(), oa);
    }

    #[test]
    fn gen_mols_errors() {
        assert!(matches!(gen_mols_prime(6, 1), Err(OaError::NotPrime(6))));
        assert!(matches!(
            gen_mols_prime(5, 5),
            Err(OaError::CountTooLarge { .. })
        ));
    }

    #[test]
    fn full_mols_set_for_order_three() {
        // p - 1 = 2 squares is the complete set of MOLS of order 3 and
        // assembles the full OA(4,3).
        let squares = gen_mols_prime(3, 2).unwrap();
        let oa = mols_to_oa(&squares, 3).unwrap();
        assert_eq!((oa.rows(), oa.symbols()), (4, 3));
        assert_eq!(oa.deficiency(), 0);
    }

    #[test]
    fn latin_square_graph_parameters() {
        let rook = latin_square_graph(&cyclic_oa(2, 5)).unwrap();
        assert_eq!(
            verify_srg(&rook).unwrap(),
            StandardParams::new(25, 8, 3, 2).unwrap()
        );
        let ls45 = latin_square_graph(&cyclic_oa(4, 5)).unwrap();
        assert_eq!(
            verify_srg(&ls45).unwrap(),
            StandardParams::new(25, 16, 9, 12).unwrap()
        );
        // OA(2,2) gives the 4-cycle (imprimitive: mu = k).
        let c4 = latin_square_graph(&cyclic_oa(2, 2)).unwrap();
        assert_eq!(
            verify_srg(&c4).unwrap(),
            StandardParams::new(4, 2, 0, 2).unwrap()
        );
    }

    #[test]
    fn complement_of_ls45_is_rook() {
        let ls45 = latin_square_graph(&cyclic_oa(4, 5)).unwrap();
        assert_eq!(
            verify_srg(&ls45.complement()).unwrap(),
            StandardParams::new(25, 8, 3, 2).unwrap()
        );
    }

    #[test]
    fn oa_text_round_trip() {
        let oa = cyclic_oa(3, 5);
        let mut buf = Vec::new();
        oa.write_text(&mut buf).unwrap();
        let back = OrthogonalArray::read_text(&buf[..]).unwrap();
        assert_eq!(back, oa);
    }

    #[test]
    fn latin_text_round_trip() {
        let sq = gen_mols_prime(5, 1).unwrap().pop().unwrap();
        let mut buf = Vec::new();
        sq.write_text(&mut buf).unwrap();
        assert_eq!(LatinSquare::read_text(&buf[..]).unwrap(), sq);
    }
}
