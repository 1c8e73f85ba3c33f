//! Dense univariate polynomials with arbitrary-precision nonnegative
//! coefficients, optionally truncated at a fixed degree.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Polynomial `Σ c_i v^i` with `c_i ≥ 0`.
///
/// When `cap` is set, only coefficients up to degree `cap` are meaningful and
/// stored; products and sums with truncated operands keep the smaller cap.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    coeffs: Vec<BigUint>,
    cap: Option<usize>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly::default()
    }

    pub fn one() -> Self {
        TPoly::monomial(0, 1u32)
    }

    pub fn monomial(deg: usize, c: impl Into<BigUint>) -> Self {
        let mut coeffs = vec![BigUint::zero(); deg + 1];
        coeffs[deg] = c.into();
        TPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<BigUint>) -> Self {
        let mut p = TPoly { coeffs, cap: None };
        p.normalize();
        p
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        TPoly::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Same polynomial with every coefficient above `cap` dropped.
    pub fn truncated(mut self, cap: usize) -> Self {
        let cap = self.cap.map_or(cap, |c| c.min(cap));
        self.coeffs.truncate(cap + 1);
        self.cap = Some(cap);
        self.normalize();
        self
    }

    pub fn cap(&self) -> Option<usize> {
        self.cap
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the stored part; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficients `0..=upto` as `u64`, padding with zeros.
    pub fn coeffs_u64(&self, upto: usize) -> Vec<u64> {
        (0..=upto)
            .map(|i| self.coeffs.get(i).map_or(0, |c| c.to_u64().expect("coefficient fits u64")))
            .collect()
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    fn meet_cap(a: Option<usize>, b: Option<usize>) -> Option<usize> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) => x,
            (None, y) => y,
        }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return TPoly { coeffs: Vec::new(), cap: self.cap };
        }
        let mut coeffs = vec![BigUint::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        let mut p = TPoly { coeffs, cap: None };
        if let Some(c) = self.cap {
            p = p.truncated(c);
        }
        p
    }

    pub fn scale(&self, c: u64) -> Self {
        let mut p = self.clone();
        for x in &mut p.coeffs {
            *x *= c;
        }
        p.normalize();
        p
    }

    /// Exact division of every coefficient by `d`; fails if some coefficient
    /// is not divisible.
    pub fn div_exact(&self, d: u64) -> Result<Self> {
        let d = BigUint::from(d);
        let mut p = self.clone();
        for x in &mut p.coeffs {
            if !(&*x % &d).is_zero() {
                return Err(Error::Domain(format!("coefficient {x} not divisible by {d}")));
            }
            *x /= &d;
        }
        Ok(p)
    }

    /// `self - other`, failing on a negative coefficient.
    pub fn checked_sub(&self, other: &TPoly) -> Result<Self> {
        let diff = SPoly::from(self).sub(&SPoly::from(other));
        diff.to_nonnegative()
            .map(|p| TPoly { cap: TPoly::meet_cap(self.cap, other.cap), ..p })
            .ok_or_else(|| Error::Domain("subtraction produced a negative coefficient".into()))
    }

    pub fn mul_truncated(&self, other: &TPoly, cap: Option<usize>) -> TPoly {
        let cap = TPoly::meet_cap(TPoly::meet_cap(self.cap, other.cap), cap);
        if self.is_zero() || other.is_zero() {
            return TPoly { coeffs: Vec::new(), cap };
        }
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if let Some(c) = cap {
            len = len.min(c + 1);
        }
        let mut out = vec![BigUint::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        let mut p = TPoly { coeffs: out, cap };
        p.normalize();
        p
    }

    /// Expansion of `num / (1 - v^period)` up to degree `cap`.
    pub fn geometric(num: &TPoly, period: usize, cap: usize) -> TPoly {
        assert!(period > 0, "geometric period must be positive");
        let mut coeffs = vec![BigUint::zero(); cap + 1];
        for (i, c) in num.coeffs.iter().enumerate() {
            let mut e = i;
            while e <= cap {
                coeffs[e] += c;
                e += period;
            }
        }
        TPoly::from_coeffs(coeffs).truncated(cap)
    }

    /// Text form `c0 + c1*v + c2*v^2 + …`, zero terms omitted.
    pub fn display<'a>(&'a self, var: &'a str) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var }
    }

    pub fn to_json(&self, var: &str) -> PolyJson {
        PolyJson {
            var: var.to_string(),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
            truncated_at: self.cap,
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<TPoly> {
        let coeffs = j
            .coeffs
            .iter()
            .map(|c| c.parse::<BigUint>().map_err(|e| Error::Domain(format!("bad coefficient {c:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let p = TPoly::from_coeffs(coeffs);
        Ok(match j.truncated_at {
            Some(c) => p.truncated(c),
            None => p,
        })
    }

    /// Same coefficients, cap removed.
    pub fn untruncated(mut self) -> Self {
        self.cap = None;
        self
    }
}

/// JSON form `{"var":"t","coeffs":["1","2"],"truncated_at":L}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub var: String,
    pub coeffs: Vec<String>,
    pub truncated_at: Option<usize>,
}

pub struct PolyDisplay<'a> {
    poly: &'a TPoly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.poly.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let v = self.var;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "{v}")?,
                (1, false) => write!(f, "{c}*{v}")?,
                (_, true) => write!(f, "{v}^{i}")?,
                (_, false) => write!(f, "{c}*{v}^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Add for &TPoly {
    type Output = TPoly;

    fn add(self, rhs: &TPoly) -> TPoly {
        let cap = TPoly::meet_cap(self.cap, rhs.cap);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigUint::zero(); len];
        for (i, c) in coeffs.iter_mut().enumerate() {
            if let Some(a) = self.coeffs.get(i) {
                *c += a;
            }
            if let Some(b) = rhs.coeffs.get(i) {
                *c += b;
            }
        }
        let p = TPoly::from_coeffs(coeffs);
        match cap {
            Some(k) => p.truncated(k),
            None => p,
        }
    }
}

impl Add for TPoly {
    type Output = TPoly;

    fn add(self, rhs: TPoly) -> TPoly {
        &self + &rhs
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        if self.cap.is_none() && rhs.cap.is_none() {
            if self.coeffs.len() < rhs.coeffs.len() {
                self.coeffs.resize(rhs.coeffs.len(), BigUint::zero());
            }
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a += b;
            }
            return;
        }
        *self = &*self + rhs;
    }
}

impl Mul for &TPoly {
    type Output = TPoly;

    fn mul(self, rhs: &TPoly) -> TPoly {
        self.mul_truncated(rhs, None)
    }
}

impl Mul for TPoly {
    type Output = TPoly;

    fn mul(self, rhs: TPoly) -> TPoly {
        self.mul_truncated(&rhs, None)
    }
}

impl std::iter::Sum for TPoly {
    fn sum<I: Iterator<Item = TPoly>>(iter: I) -> TPoly {
        iter.fold(TPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Signed companion of [`TPoly`], used only where a difference is formed
/// before its nonnegativity is asserted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SPoly(pub Vec<BigInt>);

impl From<&TPoly> for SPoly {
    fn from(p: &TPoly) -> Self {
        SPoly(p.coeffs.iter().map(|c| BigInt::from(c.clone())).collect())
    }
}

impl SPoly {
    pub fn sub(&self, other: &SPoly) -> SPoly {
        let len = self.0.len().max(other.0.len());
        let mut out: Vec<BigInt> = (0..len)
            .map(|i| {
                self.0.get(i).cloned().unwrap_or_default() - other.0.get(i).cloned().unwrap_or_default()
            })
            .collect();
        while out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        SPoly(out)
    }

    /// Lowest exponent with a negative coefficient.
    pub fn first_negative(&self) -> Option<usize> {
        self.0.iter().position(Signed::is_negative)
    }

    pub fn to_nonnegative(&self) -> Option<TPoly> {
        if self.first_negative().is_some() {
            return None;
        }
        Some(TPoly::from_coeffs(self.0.iter().map(|c| c.magnitude().clone()).collect()))
    }
}
