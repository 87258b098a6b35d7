use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::ExactLaError;

/// Sparse vector: `(index, value)` pairs sorted by index, no stored zeros.
pub type SparseVec = Vec<(usize, BigInt)>;

/// Sparse integer matrix in row-major form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMat { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for (i, row) in m.data.iter_mut().enumerate() {
            row.push((i, BigInt::from(1)));
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, BigInt)>,
    ) -> Result<Self, ExactLaError> {
        let mut data: Vec<SparseVec> = vec![Vec::new(); rows];
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(ExactLaError::IndexOutOfRange { row: r, col: c, rows, cols });
            }
            data[r].push((c, v));
        }
        for row in &mut data {
            *row = normalize(std::mem::take(row));
        }
        Ok(SparseMat { rows, cols, data })
    }

    pub fn from_dense<T: Clone + Into<BigInt>>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged dense matrix");
                r.iter().enumerate().map(|(c, v)| (c, v.clone().into())).filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMat { rows: rows.len(), cols, data }
    }

    /// Matrix whose columns are the given sparse vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Result<Self, ExactLaError> {
        let entries = columns.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v.clone())));
        Self::from_triplets(rows, columns.len(), entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn row_data(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.data[r].binary_search_by_key(&c, |(i, _)| *i).map(|i| self.data[r][i].1.clone()).unwrap_or_default()
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.data.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for (r, c, v) in self.triplets() {
            data[c].push((r, v.clone()));
        }
        SparseMat { rows: self.cols, cols: self.rows, data }
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        self.data.iter().map(|row| row.iter().map(|(c, a)| a * &v[*c]).sum()).collect()
    }

    /// `true` when `self * v` vanishes exactly.
    pub fn annihilates(&self, v: &[BigInt]) -> bool {
        self.mul_vec(v).iter().all(Zero::is_zero)
    }

    /// Horizontal concatenation `[A | B | ...]`.
    pub fn hstack(blocks: &[&SparseMat]) -> Result<Self, ExactLaError> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let mut data: Vec<SparseVec> = vec![Vec::new(); rows];
        let mut offset = 0;
        for b in blocks {
            if b.rows != rows {
                return Err(ExactLaError::DimensionMismatch(format!("cannot stack {} rows with {rows}", b.rows)));
            }
            for (r, row) in b.data.iter().enumerate() {
                data[r].extend(row.iter().map(|(c, v)| (c + offset, v.clone())));
            }
            offset += b.cols;
        }
        Ok(SparseMat { rows, cols: offset, data })
    }

    pub fn scale_column(&mut self, c: usize, k: &BigInt) {
        for row in &mut self.data {
            if let Ok(i) = row.binary_search_by_key(&c, |(j, _)| *j) {
                row[i].1 *= k;
            }
        }
        if k.is_zero() {
            for row in &mut self.data {
                row.retain(|(_, v)| !v.is_zero());
            }
        }
    }

    /// Text form: header `rows cols nnz`, then one `i j value` line per entry, 1-indexed.
    pub fn to_matrix_market(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.rows, self.cols, self.nnz());
        for (r, c, v) in self.triplets() {
            let _ = writeln!(out, "{} {} {}", r + 1, c + 1, v);
        }
        out
    }

    /// Parses [`SparseMat::to_matrix_market`] output. Lines starting with `%` are comments.
    pub fn from_matrix_market(text: &str) -> Result<Self, ExactLaError> {
        let mut lines = text.lines().map(str::trim).enumerate().filter(|(_, l)| !l.is_empty() && !l.starts_with('%'));
        let bad = |n: usize, msg: &str| ExactLaError::Parse(format!("line {}: {msg}", n + 1));
        let (hn, header) = lines.next().ok_or_else(|| ExactLaError::Parse("missing header".into()))?;
        let h: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(hn, "header must be `rows cols nnz`")))
            .collect::<Result<_, _>>()?;
        let [rows, cols, nnz] = h[..] else {
            return Err(bad(hn, "header must be `rows cols nnz`"));
        };
        let mut entries = Vec::with_capacity(nnz);
        for (n, line) in lines {
            let t: Vec<&str> = line.split_whitespace().collect();
            if t.len() != 3 {
                return Err(bad(n, "expected `i j value`"));
            }
            let i: usize = t[0].parse().map_err(|_| bad(n, "bad row index"))?;
            let j: usize = t[1].parse().map_err(|_| bad(n, "bad column index"))?;
            let v: BigInt = t[2].parse().map_err(|_| bad(n, "bad value"))?;
            if i == 0 || j == 0 {
                return Err(bad(n, "indices are 1-based"));
            }
            entries.push((i - 1, j - 1, v));
        }
        if entries.len() != nnz {
            return Err(ExactLaError::Parse(format!("header announces {nnz} entries, found {}", entries.len())));
        }
        Self::from_triplets(rows, cols, entries)
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.triplets().map(|(_, _, v)| v.abs()).max().unwrap_or_default()
    }
}

/// Sorts by index, sums duplicates and drops zeros.
pub(crate) fn normalize(mut v: SparseVec) -> SparseVec {
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y += x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

/// `a * x + b * y` for sorted sparse vectors.
pub(crate) fn combine(a: &BigInt, x: &SparseVec, b: &BigInt, y: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(x.len().max(y.len()));
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, b * &y[j].1));
            j += 1;
        } else {
            let v = a * &x[i].1 + b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
