use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::sparse::{combine, SparseVec};

/// Row echelon form of a block: `rows[t]` is primitive with its pivot at `pivots[t]`
/// and vanishes at `pivots[..t]`. After [`Echelon::reduce`] it vanishes at every
/// other pivot as well.
pub(crate) struct Echelon {
    pub ncols: usize,
    pub rows: Vec<SparseVec>,
    pub pivots: Vec<usize>,
}

fn content(row: &SparseVec) -> BigInt {
    let mut g = BigInt::zero();
    for (_, v) in row {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    g
}

fn make_primitive(row: &mut SparseVec) {
    let g = content(row);
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
}

fn entry(row: &SparseVec, c: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&c, |(i, _)| *i).ok().map(|i| &row[i].1)
}

/// Picks the next pivot among active rows: smallest Markowitz cost, then unit
/// entries, then lowest row, then lowest column.
fn select_pivot(active: &[Option<SparseVec>], ncols: usize, units_only: bool) -> Option<(usize, usize)> {
    let mut count = vec![0usize; ncols];
    for row in active.iter().flatten() {
        for (c, _) in row {
            count[*c] += 1;
        }
    }
    let mut best: Option<((usize, bool), usize, usize)> = None;
    'rows: for (r, row) in active.iter().enumerate() {
        let Some(row) = row else { continue };
        let len = row.len() - 1;
        for (c, v) in row {
            let unit = v.magnitude().is_one();
            if units_only && !unit {
                continue;
            }
            let key = (len * (count[*c] - 1), !unit);
            if best.as_ref().is_none_or(|(k, _, _)| key < *k) {
                best = Some((key, r, *c));
                if key == (0, false) {
                    break 'rows;
                }
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

/// Fraction-free elimination with Markowitz pivoting. Rows are kept primitive.
pub(crate) fn echelon(rows: Vec<SparseVec>, ncols: usize) -> Echelon {
    let mut active: Vec<Option<SparseVec>> = rows
        .into_iter()
        .map(|mut r| {
            make_primitive(&mut r);
            Some(r).filter(|r| !r.is_empty())
        })
        .collect();
    let mut out = Echelon { ncols, rows: Vec::new(), pivots: Vec::new() };
    while let Some((pr, pc)) = select_pivot(&active, ncols, false) {
        let prow = active[pr].take().expect("pivot row is active");
        let pv = entry(&prow, pc).expect("pivot entry").clone();
        for slot in active.iter_mut() {
            let Some(row) = slot else { continue };
            let Some(a) = entry(row, pc).cloned() else { continue };
            let g = pv.gcd(&a);
            let mut next = combine(&(&pv / &g), row, &(-(&a / &g)), &prow);
            make_primitive(&mut next);
            *slot = Some(next).filter(|r| !r.is_empty());
        }
        out.rows.push(prow);
        out.pivots.push(pc);
    }
    out
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Clears every pivot column above its pivot, keeping rows integral and primitive.
    pub fn reduce(&mut self) {
        for t in (0..self.rows.len()).rev() {
            let pc = self.pivots[t];
            let (before, after) = self.rows.split_at_mut(t);
            let prow = &after[0];
            let pv = entry(prow, pc).expect("pivot entry").clone();
            for row in before.iter_mut() {
                let Some(a) = entry(row, pc).cloned() else { continue };
                let g = pv.gcd(&a);
                let mut next = combine(&(&pv / &g), row, &(-(&a / &g)), prow);
                make_primitive(&mut next);
                *row = next;
            }
        }
        for (row, pc) in self.rows.iter_mut().zip(&self.pivots) {
            if entry(row, *pc).is_some_and(Signed::is_negative) {
                for (_, v) in row.iter_mut() {
                    *v = -&*v;
                }
            }
        }
    }

    pub fn pivot_value(&self, t: usize) -> &BigInt {
        entry(&self.rows[t], self.pivots[t]).expect("pivot entry")
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for p in &self.pivots {
            is_pivot[*p] = true;
        }
        (0..self.ncols).filter(|c| !is_pivot[*c]).collect()
    }
}

/// Eliminates with unit pivots only, by unimodular row and column operations.
/// Returns the number of unit pivots and the remaining rows (pivot columns cleared).
pub(crate) fn unit_eliminate(rows: Vec<SparseVec>, ncols: usize) -> (usize, Vec<SparseVec>) {
    let mut active: Vec<Option<SparseVec>> = rows.into_iter().map(|r| Some(r).filter(|r| !r.is_empty())).collect();
    let mut units = 0;
    while let Some((pr, pc)) = select_pivot(&active, ncols, true) {
        let prow = active[pr].take().expect("pivot row is active");
        let pv = entry(&prow, pc).expect("pivot entry").clone();
        for slot in active.iter_mut() {
            let Some(row) = slot else { continue };
            let Some(a) = entry(row, pc).cloned() else { continue };
            let next = combine(&BigInt::one(), row, &(-(a * &pv)), &prow);
            *slot = Some(next).filter(|r| !r.is_empty());
        }
        units += 1;
    }
    (units, active.into_iter().flatten().collect())
}
