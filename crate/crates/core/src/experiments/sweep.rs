use rayon::prelude::*;

use crate::channel::{Position3D, Scenario};
use crate::error::{Error, Result};

use super::{check_systems, evaluate, System};

#[derive(Debug, Clone, PartialEq)]
pub enum SweepVariable {
    /// Horizontal BS-user distance. The user keeps its altitude and the IRS
    /// (or relay) sits at `irs_fraction` of the way from BS to user, at its
    /// own altitude.
    BsUserDistance { from: f64, to: f64, step: f64, irs_fraction: f64 },
    NumElements { values: Vec<usize> },
}

impl SweepVariable {
    pub fn validate(&self) -> Result<()> {
        match self {
            SweepVariable::BsUserDistance { from, to, step, irs_fraction } => {
                if !(*step > 0.0 && step.is_finite()) {
                    return Err(Error::domain(format!("sweep step must be positive, got {step}")));
                }
                if !(from.is_finite() && to.is_finite() && from <= to) {
                    return Err(Error::domain(format!("empty distance range {from}..{to}")));
                }
                if !(0.0..=1.0).contains(irs_fraction) {
                    return Err(Error::domain(format!("irs_fraction must be in [0, 1], got {irs_fraction}")));
                }
                Ok(())
            }
            SweepVariable::NumElements { values } => {
                if values.is_empty() {
                    return Err(Error::domain("element sweep is empty"));
                }
                if values.contains(&0) {
                    return Err(Error::domain("element counts must be positive"));
                }
                Ok(())
            }
        }
    }

    /// Sweep points in sweep order.
    pub fn points(&self) -> Vec<f64> {
        match self {
            SweepVariable::BsUserDistance { from, to, step, .. } => {
                let n = ((to - from) / step + 1e-9).floor() as usize;
                (0..=n).map(|i| from + i as f64 * step).collect()
            }
            SweepVariable::NumElements { values } => values.iter().map(|m| *m as f64).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub variable: SweepVariable,
    pub systems: Vec<System>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub value: f64,
    pub system: String,
    pub snr: f64,
    pub rate: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    /// `(sweep value, snr)` pairs of one system, in sweep order.
    pub fn snr_series(&self, system: &str) -> Vec<(f64, f64)> {
        self.rows.iter().filter(|r| r.system == system).map(|r| (r.value, r.snr)).collect()
    }

    pub fn rate_series(&self, system: &str) -> Vec<(f64, f64)> {
        self.rows.iter().filter(|r| r.system == system).map(|r| (r.value, r.rate)).collect()
    }
}

/// Scenario with the user at horizontal distance `d` from the BS.
pub(crate) fn scenario_at_distance(base: &Scenario, d: f64, irs_fraction: f64) -> Scenario {
    let bs = base.bs_pos;
    let user = Position3D::new(bs.x + d, bs.y, base.user_pos.z);
    let irs = Position3D::new(bs.x + irs_fraction * d, bs.y, base.irs_pos.z);
    Scenario { user_pos: user, irs_pos: irs, ..base.clone() }
}

fn run_points<F>(spec: &SweepSpec, scenario_for: F) -> Result<SweepResult>
where
    F: Fn(f64) -> Scenario + Sync,
{
    spec.variable.validate()?;
    check_systems(&spec.systems)?;
    let per_point: Vec<Result<Vec<SweepRow>>> = spec
        .variable
        .points()
        .into_par_iter()
        .map(|value| {
            let scenario = scenario_for(value);
            spec.systems
                .iter()
                .map(|sys| {
                    let e = evaluate(sys, &scenario)
                        .map_err(|e| Error::domain(format!("sweep value {value}, system {}: {e}", sys.label)))?;
                    Ok(SweepRow { value, system: sys.label.clone(), snr: e.snr, rate: e.rate })
                })
                .collect()
        })
        .collect();
    let mut rows = Vec::new();
    for r in per_point {
        rows.extend(r?);
    }
    Ok(SweepResult { rows })
}

pub fn run_rate_vs_distance(spec: &SweepSpec, base: &Scenario) -> Result<SweepResult> {
    let SweepVariable::BsUserDistance { irs_fraction, .. } = spec.variable else {
        return Err(Error::domain("rate-vs-distance needs a BS-user distance sweep"));
    };
    run_points(spec, |d| scenario_at_distance(base, d, irs_fraction))
}

pub fn run_snr_vs_elements(spec: &SweepSpec, base: &Scenario) -> Result<SweepResult> {
    if !matches!(spec.variable, SweepVariable::NumElements { .. }) {
        return Err(Error::domain("snr-vs-elements needs an element-count sweep"));
    }
    run_points(spec, |m| Scenario { num_elements: m as usize, ..base.clone() })
}

/// Sweep values at which `upper`'s SNR passes `lower`'s from below.
pub fn crossovers(result: &SweepResult, lower: &str, upper: &str) -> Vec<f64> {
    let lo = result.snr_series(lower);
    let hi = result.snr_series(upper);
    let mut out = Vec::new();
    let mut below = None;
    for ((v, a), (_, b)) in lo.iter().zip(&hi) {
        if b < a {
            below = Some(true);
        } else if b > a {
            if below == Some(true) {
                out.push(*v);
            }
            below = Some(false);
        }
    }
    out
}
