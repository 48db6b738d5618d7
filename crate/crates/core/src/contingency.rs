//! Contingency matrices: non-negative integer grids with prescribed row
//! margins `α` and column margins `β`, the two refinements `κ(α)` and `κ(β)`
//! read off row by row and column by column, the interval-shifting
//! permutation `σ_K`, and direct-sum decomposition.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::compositions::{BlockIntervals, Composition};
use crate::error::{Error, Result};
use crate::text::Cursor;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ContingencyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl ContingencyMatrix {
    /// Every row and column must have a positive total, so that the margins
    /// are canonical compositions.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let r = rows.len();
        let s = rows.first().map_or(0, Vec::len);
        if r == 0 || s == 0 {
            return Err(Error::InvalidInput("matrix must have at least one entry".into()));
        }
        if rows.iter().any(|row| row.len() != s) {
            return Err(Error::InvalidInput("matrix rows have different lengths".into()));
        }
        let m = ContingencyMatrix {
            rows: r,
            cols: s,
            entries: rows.into_iter().flatten().collect(),
        };
        if m.row_sums().contains(&0) || m.col_sums().contains(&0) {
            return Err(Error::InvalidInput(format!("{m} has an empty row or column")));
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 0-based entry `k_{i+1, j+1}`.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn row_sums(&self) -> Vec<u32> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    fn col_sums(&self) -> Vec<u32> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.entry(i, j)).sum())
            .collect()
    }

    pub fn row_margins(&self) -> Composition {
        Composition::new(self.row_sums())
    }

    pub fn col_margins(&self) -> Composition {
        Composition::new(self.col_sums())
    }

    pub fn total(&self) -> u32 {
        self.entries.iter().sum()
    }

    pub fn transpose(&self) -> ContingencyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.entry(i, j));
            }
        }
        ContingencyMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    fn sub(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> ContingencyMatrix {
        let entries = rows
            .clone()
            .flat_map(|i| cols.clone().map(move |j| (i, j)))
            .map(|(i, j)| self.entry(i, j))
            .collect();
        ContingencyMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }
}

impl fmt::Display for ContingencyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, k) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{k}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for ContingencyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ContingencyMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let m = parse_matrix(&mut cur)?;
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input".into()));
        }
        Ok(m)
    }
}

pub(crate) fn parse_matrix(cur: &mut Cursor<'_>) -> Result<ContingencyMatrix> {
    cur.skip_ws();
    let start = cur.offset();
    cur.expect("[")?;
    let mut rows = Vec::new();
    loop {
        rows.push(cur.u32_list("[", "]")?);
        if cur.eat("]") {
            break;
        }
        cur.expect(",")?;
    }
    ContingencyMatrix::from_rows(rows).map_err(|e| match e {
        Error::InvalidInput(msg) => cur.error_at_offset(start, msg),
        other => other,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EntryMode {
    #[default]
    NonNegative,
    StrictlyPositive,
}

/// All matrices with row margins `alpha` and column margins `beta`, in
/// row-major lexicographic order of their entries.
pub fn enumerate_matrices(
    alpha: &Composition,
    beta: &Composition,
    mode: EntryMode,
) -> Result<Vec<ContingencyMatrix>> {
    if alpha.sum() != beta.sum() {
        return Err(Error::InvalidPair(format!(
            "margins {alpha} and {beta} have different sums"
        )));
    }
    let (r, s) = (alpha.len(), beta.len());
    if r == 0 {
        return Ok(Vec::new());
    }
    let min = match mode {
        EntryMode::NonNegative => 0,
        EntryMode::StrictlyPositive => 1,
    };
    let mut out = Vec::new();
    let mut entries = vec![0u32; r * s];
    let mut col_left: Vec<u32> = beta.parts().to_vec();
    fill(
        alpha.parts(),
        min,
        0,
        alpha.parts()[0],
        &mut col_left,
        &mut entries,
        s,
        &mut out,
    );
    Ok(out)
}

/// Number of nonnegative integer matrices with the given row and column
/// margins (zeros allowed in either list). Empty margins count the empty
/// matrix once.
pub fn count_matrices(rows: &[u32], cols: &[u32]) -> u128 {
    if rows.iter().sum::<u32>() != cols.iter().sum::<u32>() {
        return 0;
    }
    let rows: Vec<u32> = rows.iter().copied().filter(|&v| v > 0).collect();
    let mut cols: Vec<u32> = cols.iter().copied().filter(|&v| v > 0).collect();
    cols.sort_unstable();
    let mut memo = HashMap::new();
    count_rows(&rows, cols, &mut memo)
}

fn count_rows(rows: &[u32], cols: Vec<u32>, memo: &mut HashMap<(usize, Vec<u32>), u128>) -> u128 {
    let Some((&first, rest)) = rows.split_first() else {
        return u128::from(cols.iter().all(|&c| c == 0));
    };
    if rest.is_empty() {
        return 1;
    }
    let key = (rows.len(), cols);
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }
    let cols = key.1.clone();
    let mut total = 0;
    let mut left = cols.clone();
    distribute(first, 0, &cols, &mut left, &mut |remaining| {
        let mut next = remaining.to_vec();
        next.sort_unstable();
        total += count_rows(rest, next, memo);
    });
    memo.insert(key, total);
    total
}

/// Calls `f` once per way of taking `amount` from `caps[j..]`.
fn distribute(amount: u32, j: usize, caps: &[u32], left: &mut [u32], f: &mut dyn FnMut(&[u32])) {
    if j == caps.len() {
        if amount == 0 {
            f(left);
        }
        return;
    }
    let room: u32 = caps[j + 1..].iter().sum();
    let lo = amount.saturating_sub(room);
    for v in lo..=amount.min(caps[j]) {
        left[j] = caps[j] - v;
        distribute(amount - v, j + 1, caps, left, f);
    }
    left[j] = caps[j];
}

#[allow(clippy::too_many_arguments)]
fn fill(
    alpha: &[u32],
    min: u32,
    cell: usize,
    row_left: u32,
    col_left: &mut [u32],
    entries: &mut [u32],
    s: usize,
    out: &mut Vec<ContingencyMatrix>,
) {
    let r = alpha.len();
    if cell == r * s {
        out.push(ContingencyMatrix {
            rows: r,
            cols: s,
            entries: entries.to_vec(),
        });
        return;
    }
    let (i, j) = (cell / s, cell % s);
    let last_col = j == s - 1;
    let last_row = i == r - 1;
    // Later cells of this row and column each still need at least `min`.
    let reserve_row = min * (s - 1 - j) as u32;
    let reserve_col = min * (r - 1 - i) as u32;
    let (lo, hi) = if last_col {
        (row_left, row_left)
    } else if last_row {
        (col_left[j], col_left[j])
    } else {
        (
            min,
            row_left
                .saturating_sub(reserve_row)
                .min(col_left[j].saturating_sub(reserve_col)),
        )
    };
    for v in lo..=hi {
        if v < min
            || v > row_left
            || v > col_left[j]
            || row_left - v < reserve_row
            || col_left[j] - v < reserve_col
            || (last_row && col_left[j] != v)
        {
            continue;
        }
        entries[cell] = v;
        col_left[j] -= v;
        let next_row_left = if last_col {
            alpha.get(i + 1).copied().unwrap_or(0)
        } else {
            row_left - v
        };
        fill(alpha, min, cell + 1, next_row_left, col_left, entries, s, out);
        col_left[j] += v;
    }
}

/// The two refinements of `n` carried by a matrix: entries read row by row
/// (`κ(α)`) and column by column (`κ(β)`). The raw tuples keep zero
/// entries for slot bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kappa {
    pub row_raw: Vec<u32>,
    pub col_raw: Vec<u32>,
}

impl Kappa {
    pub fn row_order(&self) -> Composition {
        Composition::new(self.row_raw.iter().copied())
    }

    pub fn col_order(&self) -> Composition {
        Composition::new(self.col_raw.iter().copied())
    }
}

pub fn kappa(k: &ContingencyMatrix) -> Kappa {
    Kappa {
        row_raw: k.entries.clone(),
        col_raw: k.transpose().entries,
    }
}

/// A bijection of `1..=n`, stored as the list of images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            let idx = (v as usize).wrapping_sub(1);
            if idx >= n || seen[idx] {
                return Err(Error::InvalidInput(format!("{images:?} is not a bijection")));
            }
            seen[idx] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: u32) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// Image of the 1-based point `p`.
    pub fn apply(&self, p: u32) -> u32 {
        self.0[p as usize - 1]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Permutation) -> Permutation {
        Permutation(first.0.iter().map(|&p| self.apply(p)).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation(inv)
    }
}

/// The permutation of `1..=n` translating the `k_{i,j}`-interval of the
/// row-order subdivision onto the `i`-th sub-interval of column block `J_j`
/// in the column-order subdivision.
pub fn sigma_k(k: &ContingencyMatrix) -> Permutation {
    let kap = kappa(k);
    let row_blocks = BlockIntervals::of_raw(&kap.row_raw);
    let col_blocks = BlockIntervals::of_raw(&kap.col_raw);
    let mut images = vec![0u32; k.total() as usize];
    for i in 0..k.rows {
        for j in 0..k.cols {
            let from = &row_blocks.intervals()[i * k.cols + j];
            let to = &col_blocks.intervals()[j * k.rows + i];
            for (p, q) in from.clone().zip(to.clone()) {
                images[p as usize - 1] = q;
            }
        }
    }
    Permutation(images)
}

/// Split points `(p, q)` where the first `p` rows and first `q` columns form
/// a direct summand.
fn split_points(k: &ContingencyMatrix) -> Vec<(usize, usize)> {
    let rows = k.row_sums();
    let cols = k.col_sums();
    let mut out = Vec::new();
    let mut q = 0;
    let mut col_acc = 0;
    let mut row_acc = 0;
    for p in 1..k.rows {
        row_acc += rows[p - 1];
        while q < k.cols && col_acc < row_acc {
            col_acc += cols[q];
            q += 1;
        }
        if col_acc != row_acc || q == 0 || q == k.cols {
            continue;
        }
        let upper_right = (0..p).all(|i| (q..k.cols).all(|j| k.entry(i, j) == 0));
        let lower_left = (p..k.rows).all(|i| (0..q).all(|j| k.entry(i, j) == 0));
        if upper_right && lower_left {
            out.push((p, q));
        }
    }
    out
}

/// Finest decomposition of `k` as a block-diagonal direct sum along
/// contiguous row and column ranges.
pub fn block_decompose(k: &ContingencyMatrix) -> Vec<ContingencyMatrix> {
    let mut cuts = vec![(0, 0)];
    cuts.extend(split_points(k));
    cuts.push((k.rows, k.cols));
    cuts.windows(2)
        .map(|w| k.sub(w[0].0..w[1].0, w[0].1..w[1].1))
        .collect()
}

/// Block-diagonal sum `a ⊕ b`.
pub fn direct_sum(a: &ContingencyMatrix, b: &ContingencyMatrix) -> ContingencyMatrix {
    let rows = a.rows + b.rows;
    let cols = a.cols + b.cols;
    let mut entries = vec![0; rows * cols];
    for i in 0..a.rows {
        for j in 0..a.cols {
            entries[i * cols + j] = a.entry(i, j);
        }
    }
    for i in 0..b.rows {
        for j in 0..b.cols {
            entries[(a.rows + i) * cols + a.cols + j] = b.entry(i, j);
        }
    }
    ContingencyMatrix {
        rows,
        cols,
        entries,
    }
}
