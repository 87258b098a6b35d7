use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::sparse::SparseMat;

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    s0.rem_euclid(p as i128) as u64
}

fn reduce(v: &BigInt, p: u64) -> u64 {
    let r = v % BigInt::from(p);
    let r = r.to_i128().expect("residue fits");
    r.rem_euclid(p as i128) as u64
}

/// Rank of `m` reduced modulo the prime `p` (`p < 2^32`). Never exceeds the rank over Q.
pub fn rank_mod_p(m: &SparseMat, p: u64) -> usize {
    assert!((2..1 << 32).contains(&p), "modulus out of range");
    let mut rows: Vec<Vec<(usize, u64)>> = m
        .row_data()
        .iter()
        .map(|r| r.iter().map(|(c, v)| (*c, reduce(v, p))).filter(|(_, v)| *v != 0).collect())
        .collect();
    rows.retain(|r| !r.is_empty());
    let mut rank = 0;
    // pivot on the leading entry of the shortest row
    while !rows.is_empty() {
        let (idx, _) = rows.iter().enumerate().min_by_key(|(i, r)| (r.len(), *i)).expect("nonempty");
        let prow = rows.swap_remove(idx);
        let (pc, pv) = prow[0];
        let inv = inv_mod(pv, p);
        for row in rows.iter_mut() {
            let Ok(k) = row.binary_search_by_key(&pc, |(c, _)| *c) else { continue };
            let f = row[k].1 * inv % p;
            let mut out = Vec::with_capacity(row.len() + prow.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < prow.len() {
                if j == prow.len() || (i < row.len() && row[i].0 < prow[j].0) {
                    out.push(row[i]);
                    i += 1;
                } else if i == row.len() || prow[j].0 < row[i].0 {
                    out.push((prow[j].0, (p - f * prow[j].1 % p) % p));
                    j += 1;
                } else {
                    let v = (row[i].1 + p - f * prow[j].1 % p) % p;
                    if v != 0 {
                        out.push((row[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            *row = out;
        }
        rows.retain(|r| !r.is_empty());
        rank += 1;
    }
    rank
}
