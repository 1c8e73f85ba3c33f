//! Closed-form generating functions for finite types: cardinalities and
//! major-index polynomials.

use num_bigint::BigUint;
use num_integer::binomial;

use crate::coxeter::{Family, GroupType};
use crate::error::{Error, Result};
use crate::poly::{SPoly, TPoly};

/// Table of Gaussian polynomials `[m, i]` for `m ≤ n`, built from
/// `[m, i] = [m-1, i-1] + q^i [m-1, i]` (split on whether the box's first
/// column is full).
pub struct QBinomials {
    rows: Vec<Vec<TPoly>>,
}

impl QBinomials {
    pub fn up_to(n: usize) -> Self {
        let mut rows: Vec<Vec<TPoly>> = vec![vec![TPoly::one()]];
        for m in 1..=n {
            let prev = &rows[m - 1];
            let row = (0..=m)
                .map(|i| {
                    let mut p = if i > 0 { prev[i - 1].clone() } else { TPoly::zero() };
                    if i < m {
                        p += &prev[i].shift(i);
                    }
                    p
                })
                .collect();
            rows.push(row);
        }
        QBinomials { rows }
    }

    /// `[m, i]`, zero when `i > m`.
    pub fn get(&self, m: usize, i: usize) -> TPoly {
        self.rows[m].get(i).cloned().unwrap_or_default()
    }
}

/// The Gaussian polynomial `[n, k]_q`.
pub fn qbinomial(n: usize, k: usize) -> Result<TPoly> {
    if k > n {
        return Err(Error::Domain(format!("qbinomial({n}, {k}): k out of range")));
    }
    Ok(QBinomials::up_to(n).get(n, k))
}

fn finite(t: GroupType) -> Result<usize> {
    match t.family {
        Family::A | Family::B | Family::D => Ok(t.rank),
        f => Err(Error::UnsupportedFamily(f)),
    }
}

/// Number of fully commutative involutions. The rank parameter follows
/// [`GroupType`]: `(A, n)` is `A_{n-1}`, `(B, n)` is `B_n`, `(D, n)` is `D_{n+1}`.
pub fn card_fc_involutions(t: GroupType) -> Result<BigUint> {
    let n = finite(t)?;
    let c = |a: usize, b: usize| binomial(BigUint::from(a), BigUint::from(b));
    let pow2 = BigUint::from(1u32) << n;
    Ok(match t.family {
        Family::A => c(n, n / 2),
        Family::B => pow2 + c(n, n / 2) - 1u32,
        _ if n % 2 == 0 => pow2 + c(n + 1, n / 2) - 1u32,
        _ => {
            let three = c(n + 1, n.div_ceil(2)) * 3u32;
            debug_assert!((&three % 2u32) == BigUint::from(0u32));
            pow2 + three / 2u32 - 1u32
        }
    })
}

/// `Σ_{h=lo}^{hi} q^h Σ_{i=0}^{h-1} [h-1, i]`.
fn peak_sum(qb: &QBinomials, lo: usize, hi: usize) -> TPoly {
    (lo..=hi)
        .map(|h| (0..h).map(|i| qb.get(h - 1, i)).sum::<TPoly>().shift(h))
        .sum()
}

/// Generating polynomial of fully commutative involutions by major index.
pub fn maj_genfunc(t: GroupType) -> Result<TPoly> {
    let n = finite(t).map_err(|_| Error::MajUndefined(t.family))?;
    let qb = QBinomials::up_to(n + 1);
    match t.family {
        Family::A => Ok(qb.get(n, n / 2)),
        Family::B => Ok(&peak_sum(&qb, 1, n) + &qb.get(n, n / 2)),
        _ => {
            let p = p_poly(&qb, n)?;
            let lower = qb.get(n - 1, (n - 1) / 2);
            let plus = &(&p + &lower.shift(2 * n + 1)) + &qb.get(n + 1, n.div_ceil(2));
            plus.checked_sub(&lower.shift(n))
        }
    }
}

/// The auxiliary polynomial of the type `D` formula, even and odd branches.
fn p_poly(qb: &QBinomials, n: usize) -> Result<TPoly> {
    let one_plus_q = TPoly::from_u64s(&[1, 1]);
    let mut halved = (0..n).map(|i| qb.get(n - 1, i)).sum::<TPoly>();
    let mut whole = peak_sum(qb, 1, n - 1);
    if n % 2 == 1 {
        let half = (n - 1) / 2;
        whole += &(1..=half).map(|h| qb.get(n - h - 1, half).shift(n - h)).sum();
        halved += &qb.get(n - 1, half);
    }
    let halved = (&one_plus_q * &halved).shift(n).div_exact(2)?;
    Ok(&whole + &halved)
}

/// Major-index polynomial of alternating involutions of `B_n` with exactly
/// `k` descents:
/// `q^{k²} Σ_{h=0}^{n-2k+1} q^h Σ_{i=0}^{h} [i+k-1, k-1] [h+k-1-i, k-1]`.
///
/// The summation bound is the one obtained by shifting `h ∈ [2k-1, n]`; see
/// [`maj_genfunc_by_descents_as_printed`] for the other reading.
pub fn maj_genfunc_by_descents(n: usize, k: usize) -> TPoly {
    descent_sum(n, k, (n + 1).checked_sub(2 * k))
}

/// Same sum with upper bound `n - 2k - 1`, which drops the terms with
/// `h ∈ {n-2k, n-2k+1}` (so `(2, 1)` gives 0 instead of `q + 2q²`).
pub fn maj_genfunc_by_descents_as_printed(n: usize, k: usize) -> TPoly {
    descent_sum(n, k, n.checked_sub(2 * k + 1))
}

fn descent_sum(n: usize, k: usize, hmax: Option<usize>) -> TPoly {
    if k == 0 {
        return TPoly::one();
    }
    if k > n {
        return TPoly::zero();
    }
    let Some(hmax) = hmax else { return TPoly::zero() };
    let qb = QBinomials::up_to(hmax + k);
    (0..=hmax)
        .map(|h| {
            (0..=h)
                .map(|i| &qb.get(i + k - 1, k - 1) * &qb.get(h + k - 1 - i, k - 1))
                .sum::<TPoly>()
                .shift(h)
        })
        .sum::<TPoly>()
        .shift(k * k)
}

/// Signed difference used by diagnostics.
pub fn poly_diff(a: &TPoly, b: &TPoly) -> SPoly {
    SPoly::from(a).sub(&SPoly::from(b))
}
