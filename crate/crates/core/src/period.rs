//! Ultimate periodicity of coefficient sequences, and reconciliation of
//! enumerated counts against the periodic part of a closed form.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{PolyJson, SPoly, TPoly};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodReport {
    pub transient_start: usize,
    pub period: usize,
    pub repeating_block: Vec<String>,
}

/// Smallest transient, then smallest period, such that the observed tail
/// repeats for at least `min_repeats` full periods.
pub fn detect_period<T: PartialEq + ToString>(seq: &[T], min_repeats: usize) -> Result<PeriodReport> {
    let len = seq.len();
    if len < 4 {
        return Err(Error::Inconclusive(format!("window of {len} terms is too short")));
    }
    let min_repeats = min_repeats.max(1);
    // first index from which seq[i] == seq[i + p] holds through the window
    let settle = |p: usize| {
        let mut t = len - p;
        while t > 0 && seq[t - 1] == seq[t - 1 + p] {
            t -= 1;
        }
        t
    };
    let best = (1..=len / min_repeats)
        .filter_map(|p| {
            let t = settle(p);
            (len - t >= min_repeats * p).then_some((t, p))
        })
        .min()
        .ok_or_else(|| Error::Inconclusive(format!("no period repeats {min_repeats} times in {len} terms")))?;
    let (t, p) = best;
    Ok(PeriodReport {
        transient_start: t,
        period: p,
        repeating_block: seq[t..t + p].iter().map(ToString::to_string).collect(),
    })
}

/// Outcome of comparing enumerated counts with a closed periodic part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reconciliation {
    pub remainder: TPoly,
    pub report: PeriodReport,
    pub declared_period: usize,
    pub lmax: usize,
}

impl Reconciliation {
    /// Whether the detected period divides the declared one.
    pub fn period_divides(&self) -> bool {
        self.declared_period.is_multiple_of(self.report.period)
    }
}

/// `oracle - periodic`, required to be nonnegative with a zero tail of at
/// least two declared periods.
pub fn reconcile(oracle: &TPoly, periodic: &TPoly, declared_period: usize) -> Result<Reconciliation> {
    let lmax = match (oracle.cap(), periodic.cap()) {
        (Some(a), Some(b)) if a == b => a,
        (a, b) => {
            return Err(Error::Reconciliation(format!(
                "inputs must share a truncation degree, got {a:?} and {b:?}"
            )))
        }
    };
    let diff = SPoly::from(oracle).sub(&SPoly::from(periodic));
    if let Some(e) = diff.first_negative() {
        return Err(Error::Reconciliation(format!(
            "negative remainder at t^{e}: oracle {} vs periodic part {}",
            oracle.coeff(e),
            periodic.coeff(e)
        )));
    }
    let remainder = diff.to_nonnegative().expect("checked nonnegative");
    let support_end = remainder.degree().map_or(0, |d| d + 1);
    if lmax + 1 < support_end + 2 * declared_period {
        return Err(Error::Reconciliation(format!(
            "remainder reaches t^{} with L = {lmax}; a zero tail of two periods ({}) is not visible",
            support_end.saturating_sub(1),
            2 * declared_period
        )));
    }
    let seq: Vec<BigUint> = (0..=lmax).map(|i| oracle.coeff(i)).collect();
    let report = detect_period(&seq, 2)?;
    Ok(Reconciliation { remainder: remainder.truncated(lmax), report, declared_period, lmax })
}

/// Golden-file form of a reconciliation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemainderRecord {
    #[serde(rename = "type")]
    pub family: String,
    pub rank: usize,
    pub lmax: usize,
    pub declared_period: usize,
    pub remainder: PolyJson,
    pub period_report: PeriodReport,
}
