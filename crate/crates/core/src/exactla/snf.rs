use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::sparse::SparseVec;

/// Nonzero invariant factors `d1 | d2 | ...` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub divisors: Vec<BigInt>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    /// Product of the divisors different from 1 is the torsion order.
    pub fn is_torsion_free(&self) -> bool {
        self.divisors.iter().all(One::is_one)
    }
}

/// Turns any multiset of positive integers into the divisibility chain of the
/// diagonal matrix they form.
pub(crate) fn chain(mut d: Vec<BigInt>) -> Vec<BigInt> {
    d.sort();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            if d[j].is_multiple_of(&d[i]) {
                continue;
            }
            let g = d[i].gcd(&d[j]);
            let l = &d[i] / &g * &d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

/// Dense Smith form of the residual rows (local columns compressed).
pub(crate) fn dense_snf(rows: &[SparseVec]) -> Vec<BigInt> {
    let mut cols: Vec<usize> = rows.iter().flat_map(|r| r.iter().map(|(c, _)| *c)).collect();
    cols.sort_unstable();
    cols.dedup();
    let n = cols.len();
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![BigInt::zero(); n];
            for (c, x) in r {
                v[cols.binary_search(c).expect("column present")] = x.clone();
            }
            v
        })
        .collect();
    let m = a.len();
    let mut out = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = smallest(&a, t..m, t..n) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&p);
                for j in t..n {
                    let d = &q * &a[t][j];
                    a[i][j] -= d;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&p);
                for row in a.iter_mut().skip(t) {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                // bring the smaller remainder to the pivot and repeat
                let (i, j) = smallest_cross(&a, t, m, n);
                a.swap(t, i);
                for row in a.iter_mut() {
                    row.swap(t, j);
                }
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    for j in t..n {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs());
    }
    out
}

fn smallest(a: &[Vec<BigInt>], rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            let v = a[i][j].abs();
            if !v.is_zero() && best.as_ref().is_none_or(|(b, _, _)| v < *b) {
                best = Some((v, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn smallest_cross(a: &[Vec<BigInt>], t: usize, m: usize, n: usize) -> (usize, usize) {
    let mut best = (a[t][t].abs(), t, t);
    for i in t + 1..m {
        let v = a[i][t].abs();
        if !v.is_zero() && (best.0.is_zero() || v < best.0) {
            best = (v, i, t);
        }
    }
    for j in t + 1..n {
        let v = a[t][j].abs();
        if !v.is_zero() && (best.0.is_zero() || v < best.0) {
            best = (v, t, j);
        }
    }
    (best.1, best.2)
}
