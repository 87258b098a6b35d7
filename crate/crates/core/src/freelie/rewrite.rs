//! Direct normalization of brackets of Lyndon basis elements, without the tensor ring.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use super::alphabet::{Letter, Word};
use super::lyndon::standard_split;

type Combination = Rc<Vec<(Word, i64)>>;

thread_local! {
    static MEMO: RefCell<HashMap<(Word, Word), Combination>> = RefCell::new(HashMap::new());
}

fn accumulate(acc: &mut BTreeMap<Word, i64>, w: &Word, c: i64) {
    let e = acc.entry(w.clone()).or_insert(0);
    *e = e.checked_add(c).expect("structure constant overflow");
}

/// `[P_u, P_v]` in the Lyndon basis, for Lyndon words `u` and `v`.
///
/// For `u < v`, `uv` is Lyndon; its standard factorization is `(u, v)` exactly when `u` is a
/// letter or the right factor of `u` is `>= v`. Otherwise `u = (u1, u2)` and Jacobi gives
/// `[P_u, P_v] = [P_u1, [P_u2, P_v]] - [P_u2, [P_u1, P_v]]`.
pub(crate) fn bracket_basis(u: &[Letter], v: &[Letter]) -> Combination {
    if u == v {
        return Rc::new(Vec::new());
    }
    if u > v {
        let r = bracket_basis(v, u);
        return Rc::new(r.iter().map(|(w, c)| (w.clone(), -c)).collect());
    }
    let key = (Word::from_slice(u), Word::from_slice(v));
    if let Some(r) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return r;
    }
    let concat = || {
        let mut w = Word::from_slice(u);
        w.extend_from_slice(v);
        Rc::new(vec![(w, 1)])
    };
    let result = match standard_split(u) {
        None => concat(),
        Some(i) if &u[i..] >= v => concat(),
        Some(i) => {
            let (u1, u2) = (&u[..i], &u[i..]);
            let mut acc = BTreeMap::new();
            for (sign, (outer, inner)) in [(1i64, (u1, u2)), (-1, (u2, u1))] {
                for (x, cx) in bracket_basis(inner, v).iter() {
                    for (y, cy) in bracket_basis(outer, x).iter() {
                        let c = cx.checked_mul(*cy).expect("structure constant overflow");
                        accumulate(&mut acc, y, sign * c);
                    }
                }
            }
            Rc::new(acc.into_iter().filter(|(_, c)| *c != 0).collect())
        }
    };
    MEMO.with(|m| m.borrow_mut().insert(key, result.clone()));
    result
}
