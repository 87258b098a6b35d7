use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::elim::Echelon;

/// Extended gcd: `(g, x, y)` with `x*a + y*b = g >= 0`.
pub(crate) fn egcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Row Hermite normal form of a dense integer matrix. Zero rows are dropped;
/// pivots are positive and entries above a pivot lie in `[0, pivot)`.
pub fn hermite_normal_form(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut p = 0;
    for col in 0..ncols {
        if p == rows.len() {
            break;
        }
        for i in p + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let a = rows[p][col].clone();
            let b = rows[i][col].clone();
            let (g, x, y) = egcd(&a, &b);
            let (ag, bg) = (&a / &g, &b / &g);
            for j in col..ncols {
                let (u, v) = (&rows[p][j], &rows[i][j]);
                let np = &x * u + &y * v;
                let ni = &ag * v - &bg * u;
                rows[p][j] = np;
                rows[i][j] = ni;
            }
        }
        if rows[p][col].is_zero() {
            continue;
        }
        if rows[p][col].is_negative() {
            for v in &mut rows[p][col..] {
                *v = -&*v;
            }
        }
        let piv = rows[p][col].clone();
        for i in 0..p {
            let q = rows[i][col].div_floor(&piv);
            if q.is_zero() {
                continue;
            }
            for j in col..ncols {
                let d = &q * &rows[p][j];
                rows[i][j] -= d;
            }
        }
        p += 1;
    }
    rows.truncate(p);
    rows
}

/// Basis of `{y in Z^r : sum s_j y_j = 0 mod d}` as rows.
fn congruence_kernel(s: &[BigInt], d: &BigInt) -> Vec<Vec<BigInt>> {
    let r = s.len();
    let mut v: Vec<BigInt> = s.iter().map(|x| x.mod_floor(d)).collect();
    v.push(d.clone());
    // columns of a unimodular transform, tracked as rows of `t`
    let mut t: Vec<Vec<BigInt>> = (0..=r).map(|i| (0..=r).map(|j| BigInt::from((i == j) as u8)).collect()).collect();
    for j in 0..r {
        if v[j].is_zero() {
            continue;
        }
        let (g, x, y) = egcd(&v[j], &v[r]);
        let (jg, rg) = (&v[j] / &g, &v[r] / &g);
        let new_r: Vec<BigInt> = t[j].iter().zip(&t[r]).map(|(a, b)| &x * a + &y * b).collect();
        let new_j: Vec<BigInt> = t[j].iter().zip(&t[r]).map(|(a, b)| &rg * a - &jg * b).collect();
        t[j] = new_j;
        t[r] = new_r;
        v[j] = BigInt::zero();
        v[r] = g;
    }
    t.truncate(r);
    t.into_iter()
        .map(|mut row| {
            row.truncate(r);
            row
        })
        .collect()
}

/// Kernel data of one reduced block, in local coordinates.
pub(crate) struct BlockKernel {
    /// Rational basis: the vector for free column `f` has a 1 at `f`.
    pub rational: Vec<Vec<BigRational>>,
    /// Row HNF basis of the integer kernel lattice.
    pub integral: Vec<Vec<BigInt>>,
}

pub(crate) fn block_kernel(ech: &Echelon, want_rational: bool, want_integral: bool) -> BlockKernel {
    let free = ech.free_columns();
    let r = free.len();
    let n = ech.ncols;
    let mut out = BlockKernel { rational: Vec::new(), integral: Vec::new() };
    if r == 0 {
        return out;
    }
    // coefficient of free column `f` in pivot row `t`
    let coeff = |t: usize, f: usize| -> BigInt {
        let row = &ech.rows[t];
        row.binary_search_by_key(&f, |(c, _)| *c).map(|i| row[i].1.clone()).unwrap_or_default()
    };
    let table: Vec<Vec<BigInt>> = (0..ech.rank()).map(|t| free.iter().map(|f| coeff(t, *f)).collect()).collect();
    if want_rational {
        for (k, f) in free.iter().enumerate() {
            let mut v = vec![BigRational::zero(); n];
            v[*f] = BigRational::one();
            for (t, row) in table.iter().enumerate() {
                if !row[k].is_zero() {
                    v[ech.pivots[t]] = BigRational::new(-&row[k], ech.pivot_value(t).clone());
                }
            }
            out.rational.push(v);
        }
    }
    if want_integral {
        // lattice of free-coordinate vectors whose completion is integral
        let mut basis: Vec<Vec<BigInt>> =
            (0..r).map(|i| (0..r).map(|j| BigInt::from((i == j) as u8)).collect()).collect();
        for (t, row) in table.iter().enumerate() {
            let d = ech.pivot_value(t).abs();
            if d.is_one() {
                continue;
            }
            let s: Vec<BigInt> = basis.iter().map(|b| b.iter().zip(row).map(|(x, y)| x * y).sum::<BigInt>()).collect();
            if s.iter().all(|x| x.is_multiple_of(&d)) {
                continue;
            }
            let k = congruence_kernel(&s, &d);
            let next: Vec<Vec<BigInt>> = k
                .iter()
                .map(|c| (0..r).map(|j| c.iter().zip(&basis).map(|(ci, b)| ci * &b[j]).sum()).collect())
                .collect();
            basis = hermite_normal_form(next);
        }
        let mut vectors = Vec::with_capacity(r);
        for y in &basis {
            let mut v = vec![BigInt::zero(); n];
            for (k, f) in free.iter().enumerate() {
                v[*f] = y[k].clone();
            }
            for (t, row) in table.iter().enumerate() {
                let dot: BigInt = row.iter().zip(y).map(|(a, b)| a * b).sum();
                let (q, rem) = (-dot).div_rem(ech.pivot_value(t));
                debug_assert!(rem.is_zero(), "saturated lattice vector must complete integrally");
                v[ech.pivots[t]] = q;
            }
            vectors.push(v);
        }
        out.integral = hermite_normal_form(vectors);
    }
    out
}
