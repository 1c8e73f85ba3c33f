//! Truncated bivariate series `Σ_n F_n(t) x^n` and the generating functions
//! built from them.

use serde::{Deserialize, Serialize};

use crate::coxeter::{Family, GroupType};
use crate::error::{Error, Result};
use crate::poly::TPoly;
use crate::walk::{family_poly, EndConstraint, HeightConstraint, WalkFamilySpec, WeightMode};

/// Series in `x` up to order `xmax` with coefficients exact in `t` up to
/// degree `tmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<TPoly>,
    tmax: usize,
}

impl Series {
    pub fn zero(xmax: usize, tmax: usize) -> Self {
        Series { coeffs: vec![TPoly::zero().truncated(tmax); xmax + 1], tmax }
    }

    /// `t^j x^k`.
    pub fn monomial(k: usize, j: usize, xmax: usize, tmax: usize) -> Self {
        let mut s = Series::zero(xmax, tmax);
        if k <= xmax {
            s.coeffs[k] = TPoly::monomial(j, 1u32).truncated(tmax);
        }
        s
    }

    pub fn one(xmax: usize, tmax: usize) -> Self {
        Series::monomial(0, 0, xmax, tmax)
    }

    pub fn xmax(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn tmax(&self) -> usize {
        self.tmax
    }

    /// `[x^n]`.
    pub fn coeff(&self, n: usize) -> &TPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[TPoly] {
        &self.coeffs
    }

    pub fn add(&self, other: &Series) -> Series {
        Series {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
            tmax: self.tmax.min(other.tmax),
        }
    }

    pub fn mul(&self, other: &Series) -> Series {
        let xmax = self.xmax().min(other.xmax());
        let tmax = self.tmax.min(other.tmax);
        let mut out = Series::zero(xmax, tmax);
        for (i, a) in self.coeffs.iter().enumerate().take(xmax + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(xmax + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += &a.mul_truncated(b, Some(tmax));
                }
            }
        }
        out
    }

    pub fn scale(&self, c: u64) -> Series {
        Series { coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(), tmax: self.tmax }
    }

    /// Substitution `x → t^a x`.
    pub fn subst(&self, a: usize) -> Series {
        Series {
            coeffs: self.coeffs.iter().enumerate().map(|(n, p)| p.shift(a * n)).collect(),
            tmax: self.tmax,
        }
    }

    /// Multiplication by `t^j x^k`.
    pub fn shift(&self, k: usize, j: usize) -> Series {
        let mut out = Series::zero(self.xmax(), self.tmax);
        for (n, p) in self.coeffs.iter().enumerate() {
            if n + k <= self.xmax() {
                out.coeffs[n + k] = p.shift(j);
            }
        }
        out
    }

    /// `1 / (1 - self)`; requires a zero constant term.
    pub fn inv_one_minus(&self) -> Series {
        assert!(self.coeffs[0].is_zero(), "1/(1-A) needs A(0) = 0");
        let mut r = Series::one(self.xmax(), self.tmax);
        for n in 1..=self.xmax() {
            let mut c = TPoly::zero().truncated(self.tmax);
            for k in 1..=n {
                c += &self.coeffs[k].mul_truncated(&r.coeffs[n - k], Some(self.tmax));
            }
            r.coeffs[n] = c;
        }
        r
    }

    /// `d(x F)/dx`.
    pub fn d_x_times(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().enumerate().map(|(n, p)| p.scale(n as u64 + 1)).collect(),
            tmax: self.tmax,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SeriesId {
    /// Dyck paths: `M = 1 + t x² M(x) M(tx)`.
    M,
    /// Dyck prefixes: `Q = M (1 + x t Q(tx))`.
    Q,
    /// Dyck prefixes ending at odd height: `Qo = x t M M(tx) (1 + x t² Qo(x t²))`.
    Qo,
    /// `M* = M / (1 - x M)`.
    Mstar,
}

impl std::str::FromStr for SeriesId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "m" => Ok(SeriesId::M),
            "q" => Ok(SeriesId::Q),
            "qo" => Ok(SeriesId::Qo),
            "mstar" | "m*" => Ok(SeriesId::Mstar),
            _ => Err(Error::Domain(format!("unknown series {s:?}"))),
        }
    }
}

/// Solves the functional equation of `id` order by order in `x`.
pub fn solve_series(id: SeriesId, xmax: usize, tmax: usize) -> Series {
    let m = solve_m(xmax, tmax);
    match id {
        SeriesId::M => m,
        SeriesId::Q => solve_q(&m),
        SeriesId::Qo => solve_qo(&m),
        SeriesId::Mstar => m.mul(&m.shift(1, 0).inv_one_minus()),
    }
}

fn solve_m(xmax: usize, tmax: usize) -> Series {
    let mut m = Series::one(xmax, tmax);
    for n in 2..=xmax {
        let mut c = TPoly::zero().truncated(tmax);
        for i in 0..=n - 2 {
            let j = n - 2 - i;
            c += &m.coeffs[i].mul_truncated(&m.coeffs[j].shift(j), Some(tmax));
        }
        m.coeffs[n] = c.shift(1);
    }
    m
}

fn solve_q(m: &Series) -> Series {
    let (xmax, tmax) = (m.xmax(), m.tmax);
    let mut q = Series::zero(xmax, tmax);
    // k[j] = [x^j] (1 + x t Q(tx)) = t^j Q_{j-1}
    let mut k = vec![TPoly::one().truncated(tmax)];
    for n in 0..=xmax {
        if n > 0 {
            k.push(q.coeffs[n - 1].shift(n));
        }
        let mut c = TPoly::zero().truncated(tmax);
        for j in 0..=n {
            c += &m.coeffs[n - j].mul_truncated(&k[j], Some(tmax));
        }
        q.coeffs[n] = c;
    }
    q
}

fn solve_qo(m: &Series) -> Series {
    let (xmax, tmax) = (m.xmax(), m.tmax);
    let mm = m.mul(&m.subst(1));
    let mut qo = Series::zero(xmax, tmax);
    // l[c] = [x^c] (1 + x t² Qo(x t²)) = t^{2c} Qo_{c-1}
    let mut l = vec![TPoly::one().truncated(tmax)];
    for n in 1..=xmax {
        l.push(qo.coeffs[n - 1].shift(2 * n));
        let mut c = TPoly::zero().truncated(tmax);
        for a in 0..n {
            c += &mm.coeffs[a].mul_truncated(&l[n - 1 - a], Some(tmax));
        }
        qo.coeffs[n] = c.shift(1);
    }
    qo
}

/// Largest length of an element of a finite group of the given type.
fn longest_length(t: GroupType) -> usize {
    let n = t.rank;
    match t.family {
        Family::A => n * (n - 1) / 2,
        Family::B => n * n,
        _ => n * (n + 1),
    }
}

/// Length generating polynomial of fully commutative involutions of a finite
/// type, extracted from the closed-form series in `x`.
pub fn length_genfunc_finite(t: GroupType) -> Result<TPoly> {
    let n = t.rank;
    let tmax = longest_length(t);
    let xmax = n;
    let m = solve_series(SeriesId::M, xmax, tmax);
    let inv = m.shift(1, 0).inv_one_minus();
    let mmt = m.mul(&m.subst(1));
    // 1 / (1 - x t²)
    let geo = Series::monomial(1, 2, xmax, tmax).inv_one_minus();
    let total = match t.family {
        Family::A => m.mul(&inv),
        Family::B => {
            let q = solve_q(&m);
            q.mul(&inv).add(&geo.mul(&mmt).mul(&inv).shift(2, 3))
        }
        Family::D => {
            let qo = solve_qo(&m);
            qo.mul(&inv).scale(2).add(&m.mul(&inv)).add(&geo.mul(&mmt).mul(&inv).shift(1, 2))
        }
        f => return Err(Error::UnsupportedFamily(f)),
    };
    Ok(total.coeff(n).clone().untruncated())
}

/// The closed non-polynomial part of the length generating function of an
/// affine type, truncated at `lmax`, with its declared period.
pub fn affine_periodic_part(t: GroupType, lmax: usize) -> Result<(TPoly, usize)> {
    let n = t.rank;
    let walks = |start: HeightConstraint, end: HeightConstraint| {
        WalkFamilySpec::g_star(n)
            .no_horiz()
            .touching()
            .with_start(start)
            .with_end(EndConstraint::Height(end))
    };
    let geo = |num: TPoly, period: usize| TPoly::geometric(&num, period, lmax);
    let mono = |d: usize, c: u32| TPoly::monomial(d, c);
    use HeightConstraint::{Any, Even, Odd};
    Ok(match t.family {
        Family::AffA => {
            let ohat = WalkFamilySpec::g_star(n)
                .no_horiz()
                .touching()
                .with_end(EndConstraint::EqualsStart)
                .with_weight(WeightMode::ExcludeStart);
            let periodic = geo(family_poly(&ohat, lmax)?.shift(n), n);
            let m = solve_series(SeriesId::M, n, lmax);
            let inner = Series::one(n, lmax).add(&m.d_x_times().subst(1).shift(2, 1));
            let poly = m.mul(&inner).mul(&m.shift(1, 0).inv_one_minus());
            (&periodic + poly.coeff(n), n)
        }
        Family::AffC => {
            let f = family_poly(&walks(Any, Any), lmax)?;
            (&geo(f.shift(n + 1), n + 1) + &geo(mono(2 * n + 3, 2), 2), 2 * n + 2)
        }
        Family::AffB => {
            let fo = family_poly(&walks(Any, Odd), lmax)?;
            let fe = family_poly(&walks(Any, Even), lmax)?;
            let num = &fo.shift(2 * n + 2).scale(2) + &fe.shift(n + 1).scale(2);
            let p = &(&geo(num, 2 * n + 2) + &geo(mono(2 * n + 4, 1), 1)) + &geo(mono(4 * n + 2, 1), 2 * n + 1);
            (p, (2 * n + 1) * (2 * n + 2))
        }
        Family::AffD => {
            let f_oo = family_poly(&walks(Odd, Odd), lmax)?;
            let f_ee = family_poly(&walks(Even, Even), lmax)?;
            let num = &f_oo.shift(2 * n + 2).scale(4) + &f_ee.shift(n + 1).scale(4);
            let p = &(&geo(num, 2 * n + 2) + &geo(mono(2 * n + 6, 2), 2)) + &geo(mono(4 * n + 4, 2), 2 * n + 2);
            (p, 2 * n + 2)
        }
        f => return Err(Error::Domain(format!("family {f} is finite"))),
    })
}
