//! Small dense integer matrices with exact determinant and rank.
//!
//! Everything here runs on `i128` with fraction-free (Bareiss) elimination, so
//! intermediate values stay integral and no rational type is needed at the
//! sizes this crate works with.

use serde::Serialize;
use std::fmt;

/// A square integer matrix together with its determinant.
///
/// Stored row-major. `det_meta` is the determinant of `entries` as constructed;
/// any normalising scalar that would bring it into `SL_n` is intentionally not
/// applied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegerMatrix {
    entries: Vec<Vec<i64>>,
    det_meta: i64,
}

impl IntegerMatrix {
    /// Builds a matrix from its columns. Every column must have the same length
    /// as the number of columns.
    pub fn from_columns(columns: &[Vec<i64>]) -> Self {
        let n = columns.len();
        let mut entries = vec![vec![0i64; n]; n];
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), n, "column {j} has wrong length");
            for (i, &v) in col.iter().enumerate() {
                entries[i][j] = v;
            }
        }
        let det_meta = determinant(&entries);
        IntegerMatrix { entries, det_meta }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn det_meta(&self) -> i64 {
        self.det_meta
    }

    /// Column `j` (0-based).
    pub fn column(&self, j: usize) -> Vec<i64> {
        self.entries.iter().map(|row| row[j]).collect()
    }

    /// True when every row and every column holds exactly one nonzero entry,
    /// and that entry is `±1`.
    pub fn is_signed_permutation(&self) -> bool {
        let n = self.size();
        let unit_row = |i: usize| {
            let nz: Vec<i64> = self.entries[i].iter().copied().filter(|&v| v != 0).collect();
            nz.len() == 1 && nz[0].abs() == 1
        };
        let unit_col = |j: usize| {
            let nz: Vec<i64> = self.column(j).into_iter().filter(|&v| v != 0).collect();
            nz.len() == 1 && nz[0].abs() == 1
        };
        (0..n).all(unit_row) && (0..n).all(unit_col)
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Exact determinant of a square matrix by Bareiss elimination.
pub fn determinant(rows: &[Vec<i64>]) -> i64 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// Exact rank over the rationals of an arbitrary rectangular integer matrix.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let m = rows.len();
    if m == 0 {
        return 0;
    }
    let n = rows[0].len();
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..n {
        if rank == m {
            break;
        }
        let Some(pivot) = (rank..m).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        for i in rank + 1..m {
            for j in col + 1..n {
                a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / prev;
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
    }
    rank
}
