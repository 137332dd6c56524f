//! The rook monoid, rank-control matrices and the map from the big sect of
//! `C(p,p)` onto `R_p`.
//!
//! Orders are compared through rank-control matrices anchored at a corner.
//! With the north-west anchor, `M <= M'` iff every NW rank of `M` is at least
//! the corresponding rank of `M'`. With the south-west anchor the inequality
//! runs the other way: `M <= M'` iff every SW rank of `M` is at most that of
//! `M'`, which makes the zero matrix the minimum of `R_p`.

use crate::bruhat::wyser_leq;
use crate::clan::{base_clan, Clan};
use crate::error::{Error, Result};
use crate::matrix::rank;
use crate::perm::Involution;
use crate::sects::{dense_base_clan, dense_sect_bounded};
use serde::Serialize;
use std::collections::HashSet;
use std::fmt;

/// Largest rook matrix size enumerated by default.
pub const DEFAULT_MAX_ROOK: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Corner {
    NW,
    SW,
}

/// A square 0/1 matrix with at most one 1 in each row and column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct RookMatrix {
    rows: Vec<Vec<u8>>,
}

impl RookMatrix {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotRectangular);
        }
        if rows.iter().flatten().any(|&v| v > 1) {
            return Err(Error::InvalidRook("entries must be 0 or 1".into()));
        }
        let row_ok = rows.iter().all(|r| r.iter().filter(|&&v| v == 1).count() <= 1);
        let col_ok = (0..n).all(|j| rows.iter().filter(|r| r[j] == 1).count() <= 1);
        if !(row_ok && col_ok) {
            return Err(Error::InvalidRook("more than one 1 in a row or column".into()));
        }
        Ok(RookMatrix { rows })
    }

    pub fn zero(n: usize) -> Self {
        RookMatrix {
            rows: vec![vec![0; n]; n],
        }
    }

    /// Permutation matrix of a one-line permutation `w` (1-based): a 1 at
    /// row `i`, column `w(i)`.
    pub fn from_permutation(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        let mut rows = vec![vec![0u8; n]; n];
        for (i, &w) in one_line.iter().enumerate() {
            if w == 0 || w > n {
                return Err(Error::InvalidRook(format!("image {w} out of range")));
            }
            rows[i][w - 1] = 1;
        }
        RookMatrix::new(rows)
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.rows[r][c]
    }

    pub fn ones(&self) -> usize {
        self.rows.iter().flatten().filter(|&&v| v == 1).count()
    }

    /// Rank-control matrix computed by counting the 1s in each region, which
    /// equals the rank for rook matrices.
    pub fn rank_control(&self, corner: Corner) -> RankControlMatrix {
        let n = self.size();
        let mut ranks = vec![vec![0usize; n]; n];
        match corner {
            Corner::NW => {
                for i in 0..n {
                    for j in 0..n {
                        let above = if i > 0 { ranks[i - 1][j] } else { 0 };
                        let left = if j > 0 { ranks[i][j - 1] } else { 0 };
                        let diag = if i > 0 && j > 0 { ranks[i - 1][j - 1] } else { 0 };
                        ranks[i][j] = above + left - diag + self.rows[i][j] as usize;
                    }
                }
            }
            Corner::SW => {
                for i in (0..n).rev() {
                    for j in 0..n {
                        let below = if i + 1 < n { ranks[i + 1][j] } else { 0 };
                        let left = if j > 0 { ranks[i][j - 1] } else { 0 };
                        let diag = if i + 1 < n && j > 0 { ranks[i + 1][j - 1] } else { 0 };
                        ranks[i][j] = below + left - diag + self.rows[i][j] as usize;
                    }
                }
            }
        }
        RankControlMatrix { ranks, corner }
    }
}

impl fmt::Display for RookMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Ranks of the corner-anchored submatrices. Entry `(i, j)` (0-based) is the
/// rank of rows `0..=i` (NW) or `i..n` (SW) against columns `0..=j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankControlMatrix {
    ranks: Vec<Vec<usize>>,
    corner: Corner,
}

impl RankControlMatrix {
    pub fn ranks(&self) -> &[Vec<usize>] {
        &self.ranks
    }

    pub fn corner(&self) -> Corner {
        self.corner
    }

    /// Entries weakly increase away from the anchored corner, one step at a time.
    pub fn satisfies_step_invariant(&self) -> bool {
        let n = self.ranks.len();
        let step_ok = |from: usize, to: usize| to >= from && to - from <= 1;
        for i in 0..n {
            for j in 0..n {
                let here = self.ranks[i][j];
                if j + 1 < n && !step_ok(here, self.ranks[i][j + 1]) {
                    return false;
                }
                let next_row = match self.corner {
                    Corner::NW => (i + 1 < n).then(|| self.ranks[i + 1][j]),
                    Corner::SW => (i > 0).then(|| self.ranks[i - 1][j]),
                };
                if let Some(v) = next_row {
                    if !step_ok(here, v) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Rank-control matrix of an arbitrary square integer matrix, each entry an
/// exact rank over the rationals.
pub fn rank_control(matrix: &[Vec<i64>], corner: Corner) -> Result<RankControlMatrix> {
    let n = matrix.len();
    if matrix.iter().any(|r| r.len() != n) {
        return Err(Error::NotRectangular);
    }
    let mut ranks = vec![vec![0usize; n]; n];
    for (i, row) in ranks.iter_mut().enumerate() {
        let row_range = match corner {
            Corner::NW => 0..i + 1,
            Corner::SW => i..n,
        };
        for (j, cell) in row.iter_mut().enumerate() {
            let sub: Vec<Vec<i64>> = matrix[row_range.clone()]
                .iter()
                .map(|r| r[..=j].to_vec())
                .collect();
            *cell = rank(&sub);
        }
    }
    Ok(RankControlMatrix { ranks, corner })
}

/// Bruhat-type order on rook matrices through their rank-control matrices.
pub fn rook_leq(a: &RookMatrix, b: &RookMatrix, corner: Corner) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::ShapeMismatch {
            left: (a.size(), a.size()),
            right: (b.size(), b.size()),
        });
    }
    let (ra, rb) = (a.rank_control(corner), b.rank_control(corner));
    let pairs = ra.ranks.iter().flatten().zip(rb.ranks.iter().flatten());
    Ok(match corner {
        Corner::NW => pairs.into_iter().all(|(x, y)| x >= y),
        Corner::SW => pairs.into_iter().all(|(x, y)| x <= y),
    })
}

/// `Σ_k C(p,k)² k!`.
pub fn rook_count(p: usize) -> u128 {
    (0..=p)
        .map(|k| {
            let c = crate::clan::binomial(p, k);
            c * c * (1..=k as u128).product::<u128>()
        })
        .sum()
}

pub fn enumerate_rooks(p: usize) -> Result<Vec<RookMatrix>> {
    enumerate_rooks_bounded(p, DEFAULT_MAX_ROOK)
}

/// All `p × p` rook matrices, sorted by their rows.
pub fn enumerate_rooks_bounded(p: usize, max_p: usize) -> Result<Vec<RookMatrix>> {
    if p == 0 {
        return Err(Error::InvalidShape { p, q: p });
    }
    if p > max_p {
        return Err(Error::LimitExceeded { n: p, limit: max_p });
    }
    // choice[r] is the column of the 1 in row r, if any
    fn go(p: usize, row: usize, used: &mut [bool], choice: &mut Vec<Option<usize>>, out: &mut Vec<RookMatrix>) {
        if row == p {
            let mut rows = vec![vec![0u8; p]; p];
            for (r, c) in choice.iter().enumerate() {
                if let Some(c) = c {
                    rows[r][*c] = 1;
                }
            }
            out.push(RookMatrix { rows });
            return;
        }
        choice.push(None);
        go(p, row + 1, used, choice, out);
        choice.pop();
        for c in 0..p {
            if !used[c] {
                used[c] = true;
                choice.push(Some(c));
                go(p, row + 1, used, choice, out);
                choice.pop();
                used[c] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(p, 0, &mut vec![false; p], &mut Vec::new(), &mut out);
    out.sort_unstable();
    Ok(out)
}

/// For `γ` in the big sect of `C(p,p)`: a 1 at `(r, s)` iff positions `s` and
/// `r + p` hold the two members of one pair.
pub fn clan_to_rook(gamma: &Clan) -> Result<RookMatrix> {
    let (p, q) = gamma.shape();
    if p != q || base_clan(gamma) != dense_base_clan(p, q) {
        return Err(Error::NotInDenseSect(gamma.to_string()));
    }
    let mut rows = vec![vec![0u8; p]; p];
    for (s, t) in gamma.pair_positions() {
        // in the big sect every pair opens in the first half and closes in the second
        rows[t - p - 1][s - 1] = 1;
    }
    Ok(RookMatrix { rows })
}

/// The involution of `{1..2p}` whose matrix has `y` in the lower-left block,
/// `yᵀ` in the upper-right block and 1s on the diagonal wherever the row and
/// column would otherwise be empty.
pub fn rook_to_involution(y: &RookMatrix) -> Involution {
    let p = y.size();
    let mut images: Vec<usize> = (1..=2 * p).collect();
    for r in 0..p {
        for s in 0..p {
            if y.get(r, s) == 1 {
                images[s] = p + r + 1;
                images[p + r] = s + 1;
            }
        }
    }
    Involution::from_images(images).expect("rook placement gives an involution")
}

/// Bruhat order on involutions, compared by south-west rank-control matrices
/// of their permutation matrices.
pub fn involution_leq(u: &Involution, w: &Involution) -> Result<bool> {
    let to_rook = |x: &Involution| RookMatrix { rows: x.matrix() };
    rook_leq(&to_rook(u), &to_rook(w), Corner::SW).map_err(|_| Error::ShapeMismatch {
        left: (u.len(), 0),
        right: (w.len(), 0),
    })
}

/// Outcome of checking the big sect of `C(p,p)` against `R_p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub p: usize,
    pub dense_size: usize,
    pub rook_count: usize,
    pub bijective: bool,
    pub order_preserving: bool,
    pub order_reflecting: bool,
    /// Pairs `(γ, τ)` on which the two orders disagree.
    pub counterexamples: Vec<(String, String)>,
}

impl IsoReport {
    pub fn is_isomorphism(&self) -> bool {
        self.bijective && self.order_preserving && self.order_reflecting
    }
}

pub fn verify_dense_iso(p: usize) -> Result<IsoReport> {
    verify_dense_iso_bounded(p, crate::clan::DEFAULT_MAX_N)
}

/// Checks that [`clan_to_rook`] is a bijection onto `R_p` and that
/// `γ <= τ` iff `x_γ <= x_τ` in the south-west order.
pub fn verify_dense_iso_bounded(p: usize, max_n: usize) -> Result<IsoReport> {
    if p == 0 {
        return Err(Error::InvalidShape { p, q: p });
    }
    let dense = dense_sect_bounded(p, p, max_n)?;
    let members = dense.sect.members();
    let rooks_of: Vec<RookMatrix> = members.iter().map(clan_to_rook).collect::<Result<_>>()?;
    let all_rooks = enumerate_rooks_bounded(p, max_n / 2)?;
    let image: HashSet<&RookMatrix> = rooks_of.iter().collect();
    let bijective = image.len() == members.len() && image.len() == all_rooks.len();

    let mut order_preserving = true;
    let mut order_reflecting = true;
    let mut counterexamples = Vec::new();
    for (a, ra) in members.iter().zip(&rooks_of) {
        for (b, rb) in members.iter().zip(&rooks_of) {
            let clan_le = wyser_leq(a, b)?;
            let rook_le = rook_leq(ra, rb, Corner::SW)?;
            if clan_le && !rook_le {
                order_preserving = false;
            }
            if rook_le && !clan_le {
                order_reflecting = false;
            }
            if clan_le != rook_le {
                counterexamples.push((a.to_string(), b.to_string()));
            }
        }
    }
    Ok(IsoReport {
        p,
        dense_size: members.len(),
        rook_count: all_rooks.len(),
        bijective,
        order_preserving,
        order_reflecting,
        counterexamples,
    })
}
