//! Amplitude design for active surfaces.
//!
//! With phases co-aligned, the SNR is `P_t R(α)²` where
//! `R(α) = (Σ a_m α_m + |t|) / sqrt(σ_I² Σ |h_m|² α_m² + σ_0²)` and `a_m = |h_m||g_m|`.
//! `R` is a concave-over-convex ratio, so Dinkelbach's method reduces the
//! problem to a sequence of concave maximizations, each solved here by
//! projected gradient ascent. Substituting `u_m = α_m sqrt(c_m / P)` with
//! `c_m = P_t|g_m|² + σ_I²` turns the total-power ellipsoid into the unit
//! ball and the per-element limits into the unit box.

use crate::channel::{ChannelRealization, NoisePowers};
use crate::error::{Error, Result};

use super::{aligned_phases, optimize_passive, PowerModel, ReflectionConfig};

const MAX_OUTER: usize = 200;
const OUTER_TOL: f64 = 1e-10;
const MAX_INNER: usize = 5000;
/// Minimum relative SNR gain for a solver point to replace the preferred start.
const TIE_TOL: f64 = 1e-12;

/// Optimizes the reflection for any power model.
pub fn optimize(
    ch: &ChannelRealization,
    pm: &PowerModel,
    tx_power: f64,
    noise: &NoisePowers,
) -> Result<ReflectionConfig> {
    match pm {
        PowerModel::Passive => Ok(optimize_passive(ch)),
        _ => optimize_active(ch, pm, tx_power, noise),
    }
}

/// Co-aligned phases with SNR-maximizing amplitudes under the active power model.
pub fn optimize_active(
    ch: &ChannelRealization,
    pm: &PowerModel,
    tx_power: f64,
    noise: &NoisePowers,
) -> Result<ReflectionConfig> {
    pm.validate()?;
    noise.validate()?;
    if !(tx_power > 0.0 && tx_power.is_finite()) {
        return Err(Error::domain(format!("transmit power must be positive, got {tx_power}")));
    }
    let (budget, region) = match *pm {
        PowerModel::Passive => return Err(Error::domain("optimize_active requires an active power model")),
        PowerModel::ActiveTotal { budget } => (budget, Region::Ball),
        PowerModel::ActivePerElement { per_element } => (per_element, Region::Box),
    };
    let problem = AmplitudeProblem::new(ch, budget, region, tx_power, noise)?;
    let u = problem.solve();
    let amplitudes = u.iter().zip(&problem.to_alpha).map(|(u, r)| u * r).collect();
    Ok(ReflectionConfig { amplitudes, phases: aligned_phases(ch) })
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Region {
    /// `u >= 0, ‖u‖ <= 1`
    Ball,
    /// `0 <= u_m <= 1`
    Box,
}

impl Region {
    fn project(self, u: &mut [f64]) {
        for x in u.iter_mut() {
            *x = x.max(0.0);
        }
        match self {
            // orthant first, then radial shrink: exact for a ball centred at the origin
            Region::Ball => {
                let n = norm(u);
                if n > 1.0 {
                    u.iter_mut().for_each(|x| *x /= n);
                }
            }
            Region::Box => u.iter_mut().for_each(|x| *x = x.min(1.0)),
        }
    }
}

/// Normalized problem: maximize `(A·u + τ) / sqrt(Σ D_m u_m² + S)` over the region.
struct AmplitudeProblem {
    gain: Vec<f64>,
    curvature: Vec<f64>,
    direct: f64,
    floor: f64,
    region: Region,
    to_alpha: Vec<f64>,
}

impl AmplitudeProblem {
    fn new(
        ch: &ChannelRealization,
        budget: f64,
        region: Region,
        tx_power: f64,
        noise: &NoisePowers,
    ) -> Result<Self> {
        let m = ch.num_elements();
        let mut to_alpha = vec![0.0; m];
        let mut gain = vec![0.0; m];
        let mut curvature = vec![0.0; m];
        for k in 0..m {
            let c = tx_power * ch.tx_irs[k].norm_sqr() + noise.amplification;
            if c > 0.0 {
                to_alpha[k] = (budget / c).sqrt();
            }
            gain[k] = ch.irs_rx[k].norm() * ch.tx_irs[k].norm() * to_alpha[k];
            curvature[k] = noise.amplification * ch.irs_rx[k].norm_sqr() * to_alpha[k].powi(2);
        }
        // upper bound on the squared denominator over both regions
        let scale2 = curvature.iter().sum::<f64>() + noise.receiver;
        if !(scale2 > 0.0) || !scale2.is_finite() {
            return Err(Error::domain("receiver noise and amplification noise are both zero"));
        }
        let scale = scale2.sqrt();
        gain.iter_mut().for_each(|a| *a /= scale);
        curvature.iter_mut().for_each(|d| *d /= scale2);
        Ok(Self {
            gain,
            curvature,
            direct: ch.direct.norm() / scale,
            floor: noise.receiver / scale2,
            region,
            to_alpha,
        })
    }

    fn quad(&self, u: &[f64]) -> f64 {
        self.curvature.iter().zip(u).map(|(d, x)| d * x * x).sum::<f64>() + self.floor
    }

    fn ratio(&self, u: &[f64]) -> f64 {
        let q = self.quad(u);
        let num = dot(&self.gain, u) + self.direct;
        if q > 0.0 {
            num / q.sqrt()
        } else if num > 0.0 {
            f64::INFINITY
        } else {
            0.0
        }
    }

    fn starts(&self) -> Vec<Vec<f64>> {
        let m = self.gain.len();
        let uniform = match self.region {
            Region::Ball => vec![1.0 / (m as f64).sqrt(); m],
            Region::Box => vec![1.0; m],
        };
        let mut matched = self.gain.clone();
        let scale = match self.region {
            Region::Ball => norm(&matched),
            Region::Box => matched.iter().cloned().fold(0.0, f64::max),
        };
        if scale > 0.0 {
            matched.iter_mut().for_each(|x| *x /= scale);
        } else {
            matched = uniform.clone();
        }
        vec![uniform, matched]
    }

    fn solve(&self) -> Vec<f64> {
        let mut best: Option<(Vec<f64>, f64)> = None;
        for start in self.starts() {
            // the first start is kept unless another point is strictly better
            if best.is_none() {
                let r = self.ratio(&start);
                best = Some((start.clone(), r));
            }
            let u = self.dinkelbach(start);
            let r = self.ratio(&u);
            let (_, best_r) = best.as_ref().unwrap();
            if r * r > best_r * best_r * (1.0 + TIE_TOL) {
                best = Some((u, r));
            }
        }
        let (u, r) = best.unwrap();
        if self.floor > 0.0 {
            let zero = vec![0.0; u.len()];
            if self.ratio(&zero) >= r {
                return zero;
            }
        }
        u
    }

    fn dinkelbach(&self, mut u: Vec<f64>) -> Vec<f64> {
        let mut lambda = self.ratio(&u);
        if !lambda.is_finite() {
            return u;
        }
        for _ in 0..MAX_OUTER {
            let cand = self.ascend(lambda, u.clone());
            let next = self.ratio(&cand);
            if !(next > lambda) {
                break;
            }
            let gain = (next * next - lambda * lambda) / (lambda * lambda).max(f64::MIN_POSITIVE);
            u = cand;
            lambda = next;
            if gain < OUTER_TOL {
                break;
            }
        }
        u
    }

    /// Objective of the Dinkelbach subproblem (constant `τ` dropped).
    fn parametric(&self, lambda: f64, u: &[f64]) -> f64 {
        dot(&self.gain, u) - lambda * self.quad(u).sqrt()
    }

    fn gradient(&self, lambda: f64, u: &[f64], out: &mut [f64]) {
        let q = self.quad(u);
        let w = if q > 0.0 { lambda / q.sqrt() } else { 0.0 };
        for k in 0..u.len() {
            out[k] = self.gain[k] - w * self.curvature[k] * u[k];
        }
    }

    /// Projected gradient ascent with backtracking on the concave subproblem.
    fn ascend(&self, lambda: f64, mut u: Vec<f64>) -> Vec<f64> {
        let m = u.len();
        let mut grad = vec![0.0; m];
        let mut cand = vec![0.0; m];
        let mut step = 1.0;
        let mut value = self.parametric(lambda, &u);
        for _ in 0..MAX_INNER {
            self.gradient(lambda, &u, &mut grad);
            let mut accepted = false;
            let mut moved = 0.0;
            while step > 1e-30 {
                for k in 0..m {
                    cand[k] = u[k] + step * grad[k];
                }
                self.region.project(&mut cand);
                let mut lin = 0.0;
                moved = 0.0;
                for k in 0..m {
                    let d = cand[k] - u[k];
                    lin += grad[k] * d;
                    moved += d * d;
                }
                let cv = self.parametric(lambda, &cand);
                if cv >= value + lin - moved / (2.0 * step) - 1e-15 * value.abs() {
                    accepted = cv >= value;
                    if accepted {
                        value = cv;
                    }
                    break;
                }
                step *= 0.5;
            }
            if !accepted {
                break;
            }
            std::mem::swap(&mut u, &mut cand);
            if moved.sqrt() < 1e-15 {
                break;
            }
            step *= 2.0;
        }
        u
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}
