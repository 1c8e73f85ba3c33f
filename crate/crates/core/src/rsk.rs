//! Robinson–Schensted row insertion for involutions of type `A`.

use crate::coxeter::{realize_permutation, CoxeterGraph};
use crate::error::{Error, Result};
use crate::heap::Heap;
use crate::walk::{Step, Walk};

/// Rows of the insertion tableau of `perm` (values `0..n`), and for every
/// position whether its new cell landed in the first row.
pub fn row_insert(perm: &[usize]) -> (Vec<Vec<usize>>, Vec<bool>) {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut first_row = Vec::with_capacity(perm.len());
    for &v in perm {
        let mut x = v;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![x]);
                break;
            }
            match rows[r].iter().position(|&y| y > x) {
                Some(i) => {
                    x = std::mem::replace(&mut rows[r][i], x);
                    r += 1;
                }
                None => {
                    rows[r].push(x);
                    break;
                }
            }
        }
        first_row.push(r == 0);
    }
    (rows, first_row)
}

/// Walk whose `i`-th step is up exactly when `i` sits in the first row of the
/// recording tableau of the involution realized by `h`.
pub fn rsk_walk(h: &Heap, g: &CoxeterGraph) -> Result<Walk> {
    let perm: Vec<usize> = realize_permutation(&h.word(), g)?.into_iter().map(|v| v - 1).collect();
    if perm.iter().enumerate().any(|(i, &v)| perm[v] != i) {
        return Err(Error::Domain("the permutation is not an involution".into()));
    }
    let (_, first) = row_insert(&perm);
    let steps = first.into_iter().map(|up| if up { Step::Up } else { Step::Down }).collect();
    Walk::new(0, steps)
}
