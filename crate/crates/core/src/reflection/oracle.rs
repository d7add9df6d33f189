//! Exhaustive grid search used as an independent reference for the optimizers.
//!
//! Phases range over `n` uniform levels per element and amplitudes over a
//! nested grid of the feasible set, so refining `n` to `2n` never loses a
//! grid point. The maximum over the phase grid is computed exactly without
//! enumerating all `n^M` phase tuples: for a reference direction `ψ`, each
//! element's best level is the one closest to `ψ − arg(w_m)`, and the overall
//! grid optimum is attained by the assignment belonging to `ψ = arg(s*)`. Only
//! the `≤ M·n` distinct assignments between breakpoints need to be checked.

use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;

use crate::channel::{ChannelRealization, NoisePowers};
use crate::error::{Error, Result};

use super::{PowerModel, ReflectionConfig};

pub const MAX_ORACLE_ELEMENTS: usize = 3;
pub const MIN_ORACLE_GRID: usize = 8;

/// Level index in `0..n` nearest to angle `x` (radians).
fn nearest_level(x: f64, n: usize) -> usize {
    let step = TAU / n as f64;
    let idx = (x.rem_euclid(TAU) / step).round() as usize;
    idx % n
}

/// Every per-element level assignment that can be optimal for some reference
/// direction. `args[m]` is `None` for elements that carry no signal.
fn candidate_assignments(args: &[Option<f64>], n: usize) -> Vec<Vec<usize>> {
    let step = TAU / n as f64;
    let mut breaks: Vec<f64> = args
        .iter()
        .flatten()
        .flat_map(|theta| (0..n).map(move |k| (theta + step * (k as f64 + 0.5)).rem_euclid(TAU)))
        .collect();
    if breaks.is_empty() {
        return vec![vec![0; args.len()]];
    }
    breaks.sort_by(|a, b| a.total_cmp(b));
    breaks.dedup();
    let mut out = Vec::with_capacity(breaks.len());
    for i in 0..breaks.len() {
        let lo = breaks[i];
        let hi = if i + 1 < breaks.len() { breaks[i + 1] } else { breaks[0] + TAU };
        let psi = 0.5 * (lo + hi);
        out.push(
            args.iter()
                .map(|a| a.map_or(0, |theta| nearest_level(psi - theta, n)))
                .collect(),
        );
    }
    out
}

/// Maximizes `|Σ w_m e^{jφ_m} + direct|²` over `φ_m ∈ {2πk/n}`.
///
/// Returns the maximizing phases and the maximal squared magnitude.
pub fn best_phases_on_grid(weights: &[Complex64], direct: Complex64, n: usize) -> (Vec<f64>, f64) {
    assert!(n > 0, "phase grid must have at least one level");
    let args: Vec<Option<f64>> = weights.iter().map(|w| (w.norm() > 0.0).then(|| w.arg())).collect();
    let step = TAU / n as f64;
    let mut best = (vec![0.0; weights.len()], f64::NEG_INFINITY);
    for levels in candidate_assignments(&args, n) {
        let s = weights
            .iter()
            .zip(&levels)
            .fold(direct, |acc, (w, k)| acc + w * Complex64::from_polar(1.0, step * *k as f64));
        if s.norm_sqr() > best.1 {
            best = (levels.iter().map(|k| step * *k as f64).collect(), s.norm_sqr());
        }
    }
    best
}

fn amplitude_grid(pm: &PowerModel, reach: &[f64], n: usize) -> Vec<Vec<f64>> {
    let m = reach.len();
    let frac = |i: usize| i as f64 / n as f64;
    match pm {
        PowerModel::Passive => vec![vec![1.0; m]],
        PowerModel::ActivePerElement { .. } => {
            let mut out = vec![Vec::with_capacity(m)];
            for r in reach {
                out = out
                    .into_iter()
                    .flat_map(|prefix: Vec<f64>| {
                        (0..=n).map(move |i| {
                            let mut v = prefix.clone();
                            v.push(r * frac(i));
                            v
                        })
                    })
                    .collect();
            }
            out
        }
        PowerModel::ActiveTotal { .. } => {
            // directions on the non-negative unit sphere via nested angle grids
            let mut dirs: Vec<Vec<f64>> = vec![vec![1.0]];
            for _ in 1..m {
                dirs = dirs
                    .into_iter()
                    .flat_map(|d| {
                        (0..=n).map(move |i| {
                            let th = FRAC_PI_2 * frac(i);
                            let mut v = d.clone();
                            let last = v.pop().unwrap();
                            v.push(last * th.cos());
                            v.push(last * th.sin());
                            v
                        })
                    })
                    .collect();
            }
            let mut out = Vec::with_capacity(dirs.len() * (n + 1));
            for d in &dirs {
                for j in 0..=n {
                    out.push(d.iter().zip(reach).map(|(u, r)| u * r * frac(j)).collect());
                }
            }
            out
        }
    }
}

/// Grid-best reflection for `M <= 3` elements with `grid >= 8` points per dimension.
pub fn brute_force_oracle(
    ch: &ChannelRealization,
    pm: &PowerModel,
    tx_power: f64,
    noise: &NoisePowers,
    grid: usize,
) -> Result<ReflectionConfig> {
    let m = ch.num_elements();
    if m > MAX_ORACLE_ELEMENTS {
        return Err(Error::domain(format!("oracle refused: {m} elements exceeds {MAX_ORACLE_ELEMENTS}")));
    }
    if grid < MIN_ORACLE_GRID {
        return Err(Error::domain(format!("oracle grid must have at least {MIN_ORACLE_GRID} points, got {grid}")));
    }
    pm.validate()?;
    if !(tx_power > 0.0) {
        return Err(Error::domain("transmit power must be positive"));
    }

    let cascaded: Vec<Complex64> = (0..m).map(|k| ch.cascaded(k)).collect();
    let budget = match *pm {
        PowerModel::Passive => 0.0,
        PowerModel::ActiveTotal { budget } => budget,
        PowerModel::ActivePerElement { per_element } => per_element,
    };
    let reach: Vec<f64> = ch
        .tx_irs
        .iter()
        .map(|g| {
            let c = tx_power * g.norm_sqr() + noise.amplification;
            if c > 0.0 { (budget / c).sqrt() } else { 0.0 }
        })
        .collect();

    let step = TAU / grid as f64;
    let args: Vec<Option<f64>> = cascaded.iter().map(|w| (w.norm() > 0.0).then(|| w.arg())).collect();
    let candidates = candidate_assignments(&args, grid);
    // per-candidate, per-element rotated cascaded coefficient
    let rotated: Vec<Vec<Complex64>> = candidates
        .iter()
        .map(|lv| cascaded.iter().zip(lv).map(|(w, k)| w * Complex64::from_polar(1.0, step * *k as f64)).collect())
        .collect();
    let h2: Vec<f64> = ch.irs_rx.iter().map(|h| h.norm_sqr()).collect();

    let mut best: Option<(f64, Vec<f64>, usize)> = None;
    for alpha in amplitude_grid(pm, &reach, grid) {
        let denom = noise.amplification * alpha.iter().zip(&h2).map(|(a, h)| a * a * h).sum::<f64>() + noise.receiver;
        if !(denom > 0.0) {
            continue;
        }
        let (mut top, mut arg_top) = (f64::NEG_INFINITY, 0);
        for (ci, rot) in rotated.iter().enumerate() {
            let s = rot.iter().zip(&alpha).fold(ch.direct, |acc, (w, a)| acc + w * *a);
            if s.norm_sqr() > top {
                top = s.norm_sqr();
                arg_top = ci;
            }
        }
        let snr = tx_power * top / denom;
        if best.as_ref().map_or(true, |(b, _, _)| snr > *b) {
            best = Some((snr, alpha, arg_top));
        }
    }
    let (_, amplitudes, ci) = best.ok_or_else(|| Error::domain("no grid point has non-zero noise power"))?;
    let phases = candidates[ci].iter().map(|k| step * *k as f64).collect();
    ReflectionConfig::new(amplitudes, phases)
}
