//! Exact matrix rank over the rationals via fraction-free (Bareiss)
//! elimination on arbitrary-precision integers.
//!
//! The incidence matrices this crate ranks are 0/1, but their minors are
//! determinants of 0/1 submatrices and overflow any fixed width, so the
//! elimination runs over `BigInt`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Rank of an integer matrix (given as rows), computed exactly.
pub fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
    let mut rank = 0;
    let mut prev_pivot = BigInt::from(1);
    let mut col = 0;
    while rank < nrows && col < ncols {
        // Partial pivoting: any nonzero works over an exact domain; pick the
        // smallest magnitude to slow coefficient growth.
        let pivot_row = (rank..nrows)
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].abs());
        let Some(pivot_row) = pivot_row else {
            col += 1;
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        for r in (rank + 1)..nrows {
            for c in (col + 1)..ncols {
                let num = &pivot * &rows[r][c] - &rows[r][col] * &rows[rank][c];
                // Bareiss guarantees this division is exact.
                rows[r][c] = &num / &prev_pivot;
            }
            rows[r][col] = BigInt::zero();
        }
        prev_pivot = pivot;
        rank += 1;
        col += 1;
    }
    rank
}

/// Rank of a 0/1 matrix given as bit rows over `columns` columns.
pub fn binary_rank(rows: &[Vec<u32>], columns: usize) -> usize {
    let matrix = rows
        .iter()
        .map(|support| {
            let mut row = vec![BigInt::zero(); columns];
            for &c in support {
                row[c as usize] = BigInt::from(1);
            }
            row
        })
        .collect();
    integer_rank(matrix)
}
