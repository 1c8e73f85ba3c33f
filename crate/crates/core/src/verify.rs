//! Cross-validation of brute-force enumeration against closed forms.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::coxeter::{build_graph, Family, GroupType};
use crate::enumerate::{all_involutions, enumerate_fc, length_profile, maj_profile, Filter};
use crate::error::Result;
use crate::genfunc::{card_fc_involutions, maj_genfunc, maj_genfunc_by_descents};
use crate::heap::{in_alternating_class, major_index};
use crate::period::{reconcile, PeriodReport};
use crate::poly::{PolyJson, TPoly};
use crate::series::{affine_periodic_part, length_genfunc_finite};

/// Default enumeration window for an affine family.
pub fn default_window(family: Family) -> Option<usize> {
    match family {
        Family::AffA => Some(40),
        Family::AffC | Family::AffD => Some(60),
        Family::AffB => Some(150),
        _ => None,
    }
}

/// Lowest exponent where two polynomials differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub exponent: usize,
    pub oracle: String,
    pub formula: String,
}

pub fn first_divergence(oracle: &TPoly, formula: &TPoly) -> Option<Divergence> {
    let len = oracle.coeffs().len().max(formula.coeffs().len());
    (0..len)
        .find(|&i| oracle.coeff(i) != formula.coeff(i))
        .map(|i| Divergence { exponent: i, oracle: oracle.coeff(i).to_string(), formula: formula.coeff(i).to_string() })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub oracle: String,
    pub formula: String,
    pub divergence: Option<Divergence>,
}

impl Check {
    fn poly(name: &str, var: &str, oracle: &TPoly, formula: &TPoly) -> Check {
        let divergence = first_divergence(oracle, formula);
        Check {
            name: name.to_string(),
            passed: divergence.is_none(),
            oracle: oracle.display(var).to_string(),
            formula: formula.display(var).to_string(),
            divergence,
        }
    }

    fn count(name: &str, oracle: &BigUint, formula: &BigUint) -> Check {
        Check {
            name: name.to_string(),
            passed: oracle == formula,
            oracle: oracle.to_string(),
            formula: formula.to_string(),
            divergence: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconcileSummary {
    pub lmax: usize,
    pub declared_period: usize,
    pub remainder: PolyJson,
    pub remainder_text: String,
    pub period_report: PeriodReport,
    pub period_divides: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    #[serde(rename = "type")]
    pub family: String,
    pub rank: usize,
    pub checks: Vec<Check>,
    pub reconciliation: Option<ReconcileSummary>,
    pub notes: Vec<String>,
    pub passed: bool,
}

/// Runs every oracle that applies to `t` against the matching closed form.
/// Affine types are enumerated up to `lmax` (or [`default_window`]).
pub fn cross_validate(t: GroupType, lmax: Option<usize>) -> Result<VerifyReport> {
    let g = build_graph(t)?;
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    let mut reconciliation = None;
    if t.family.is_affine() {
        let lmax = lmax.or(default_window(t.family)).expect("affine window");
        let oracle = enumerate_fc(&g, lmax, Filter::Involutions, false)?.length_poly();
        let (periodic, declared) = affine_periodic_part(t, lmax)?;
        match reconcile(&oracle, &periodic, declared) {
            Ok(r) => {
                let divides = r.period_divides();
                checks.push(Check {
                    name: "period".into(),
                    passed: divides,
                    oracle: r.report.period.to_string(),
                    formula: format!("divides {declared}"),
                    divergence: None,
                });
                if t.family == Family::AffA {
                    checks.push(Check::poly("length", "t", &oracle, &periodic));
                }
                reconciliation = Some(ReconcileSummary {
                    lmax,
                    declared_period: declared,
                    remainder_text: r.remainder.display("t").to_string(),
                    remainder: r.remainder.to_json("t"),
                    period_report: r.report,
                    period_divides: divides,
                });
            }
            Err(e) => checks.push(Check {
                name: "reconcile".into(),
                passed: false,
                oracle: oracle.display("t").to_string(),
                formula: e.to_string(),
                divergence: first_divergence(&oracle, &periodic),
            }),
        }
    } else {
        let involutions = all_involutions(&g)?;
        let count = BigUint::from(involutions.len());
        checks.push(Check::count("card", &count, &card_fc_involutions(t)?));
        checks.push(Check::poly("maj", "q", &maj_profile(&g)?, &maj_genfunc(t)?));
        checks.push(Check::poly("length", "t", &length_profile(&g)?, &length_genfunc_finite(t)?));
        if t.family == Family::B {
            let mut alt = TPoly::zero();
            for h in involutions.iter().filter(|h| in_alternating_class(h, &g)) {
                alt += &TPoly::monomial(major_index(h, &g)? as usize, 1u32);
            }
            let by_descents: TPoly = (0..=t.rank).map(|k| maj_genfunc_by_descents(t.rank, k)).sum();
            checks.push(Check::poly("maj by descents (alternating)", "q", &alt, &by_descents));
            if let Some(d) = first_divergence(&maj_profile(&g)?, &by_descents) {
                notes.push(format!(
                    "the descent-refined sum covers alternating involutions only; against all involutions it first differs at q^{} ({} vs {})",
                    d.exponent, d.oracle, d.formula
                ));
            }
        }
    }
    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport { family: t.family.to_string(), rank: t.rank, checks, reconciliation, notes, passed })
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} rank {}", self.family, self.rank)?;
        for c in &self.checks {
            let verdict = if c.passed { "match" } else { "MISMATCH" };
            writeln!(f, "  {}: {} [{verdict}]", c.name, c.oracle)?;
            if !c.passed {
                writeln!(f, "    formula: {}", c.formula)?;
            }
            if let Some(d) = &c.divergence {
                writeln!(f, "    first divergence at exponent {}: oracle {} vs formula {}", d.exponent, d.oracle, d.formula)?;
            }
        }
        if let Some(r) = &self.reconciliation {
            writeln!(f, "  window: L = {}", r.lmax)?;
            writeln!(f, "  remainder: {}", r.remainder_text)?;
            let p = &r.period_report;
            writeln!(
                f,
                "  period report: transient {}, period {} (declared {}), block [{}]",
                p.transient_start,
                p.period,
                r.declared_period,
                p.repeating_block.join(", ")
            )?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        write!(f, "{}", if self.passed { "all match" } else { "verification FAILED" })
    }
}
