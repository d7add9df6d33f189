//! Received-SNR model of an active-IRS link and reflection design.
//!
//! The received signal is `(hᴴΨg + t)x + hᴴΨz + n`, with `Ψ = diag(α_m e^{jφ_m})`,
//! per-element amplification noise of power `σ_I²` and receiver noise `σ_0²`.

mod optimize;
mod oracle;
mod quantize;

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::channel::{ChannelRealization, NoisePowers};
use crate::error::{Error, Result};

pub use optimize::{optimize, optimize_active};
pub use oracle::{best_phases_on_grid, brute_force_oracle};
pub use quantize::{quantize_reflection, QuantizationSpec};

/// Per-element amplification factors and phase shifts.
#[derive(Debug, Clone, PartialEq)]
pub struct ReflectionConfig {
    pub amplitudes: Vec<f64>,
    /// Radians in `[0, 2π)`.
    pub phases: Vec<f64>,
}

impl ReflectionConfig {
    pub fn new(amplitudes: Vec<f64>, phases: Vec<f64>) -> Result<Self> {
        if amplitudes.len() != phases.len() {
            return Err(Error::Dimension { what: "phases", got: phases.len(), expected: amplitudes.len() });
        }
        if let Some(a) = amplitudes.iter().find(|a| !(**a >= 0.0 && a.is_finite())) {
            return Err(Error::domain(format!("amplification factors must be finite and >= 0, got {a}")));
        }
        Ok(Self { amplitudes, phases: phases.into_iter().map(wrap_phase).collect() })
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    /// Diagonal entry `α_m e^{jφ_m}` of the reflection matrix.
    pub fn coefficient(&self, m: usize) -> Complex64 {
        Complex64::from_polar(self.amplitudes[m], self.phases[m])
    }

    pub(crate) fn check_against(&self, ch: &ChannelRealization) -> Result<()> {
        if self.len() != ch.num_elements() {
            return Err(Error::Dimension { what: "reflection config", got: self.len(), expected: ch.num_elements() });
        }
        Ok(())
    }
}

/// Amplification power model of the surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PowerModel {
    /// Unit-amplitude, noise-free reflection.
    Passive,
    /// One budget (watts) shared by all elements.
    ActiveTotal { budget: f64 },
    /// Independent budget (watts) for every element.
    ActivePerElement { per_element: f64 },
}

impl PowerModel {
    pub fn is_active(&self) -> bool {
        !matches!(self, PowerModel::Passive)
    }

    /// Noise seen at the receiver: a passive surface adds no amplification noise.
    pub fn effective_noise(&self, noise: &NoisePowers) -> NoisePowers {
        match self {
            PowerModel::Passive => NoisePowers { amplification: 0.0, ..*noise },
            _ => *noise,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            PowerModel::Passive => Ok(()),
            PowerModel::ActiveTotal { budget: p } | PowerModel::ActivePerElement { per_element: p } => {
                if p > 0.0 && p.is_finite() {
                    Ok(())
                } else {
                    Err(Error::domain(format!("amplification power must be positive, got {p}")))
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AmplifierPower {
    pub per_element: Vec<f64>,
    pub total: f64,
}

pub(crate) fn wrap_phase(phi: f64) -> f64 {
    let w = phi.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if w >= TAU {
        0.0
    } else {
        w
    }
}

/// Linear received SNR for a given reflection configuration.
pub fn received_snr(
    ch: &ChannelRealization,
    refl: &ReflectionConfig,
    tx_power: f64,
    noise: &NoisePowers,
) -> Result<f64> {
    refl.check_against(ch)?;
    if !(tx_power > 0.0) {
        return Err(Error::domain(format!("transmit power must be positive, got {tx_power}")));
    }
    let mut signal = ch.direct;
    let mut reflected_noise_gain = 0.0;
    for m in 0..ch.num_elements() {
        let coeff = refl.coefficient(m);
        signal += ch.irs_rx[m].conj() * coeff * ch.tx_irs[m];
        reflected_noise_gain += refl.amplitudes[m].powi(2) * ch.irs_rx[m].norm_sqr();
    }
    let denom = noise.amplification * reflected_noise_gain + noise.receiver;
    if denom <= 0.0 {
        return Err(Error::domain("total noise power at the receiver is zero"));
    }
    Ok(tx_power * signal.norm_sqr() / denom)
}

/// Shannon rate `log2(1 + snr)` in bits/s/Hz.
pub fn achievable_rate(snr: f64) -> Result<f64> {
    if !(snr >= 0.0) {
        return Err(Error::domain(format!("SNR must be non-negative, got {snr}")));
    }
    Ok(snr.ln_1p() / std::f64::consts::LN_2)
}

/// Output power of each reflection amplifier: the amplified incident signal
/// plus the element's own amplification noise, `α_m² (P_t |g_m|² + σ_I²)`.
pub fn amplifier_power(
    ch: &ChannelRealization,
    refl: &ReflectionConfig,
    tx_power: f64,
    amplification_noise: f64,
) -> Result<AmplifierPower> {
    refl.check_against(ch)?;
    let per_element: Vec<f64> = refl
        .amplitudes
        .iter()
        .zip(&ch.tx_irs)
        .map(|(a, g)| a * a * (tx_power * g.norm_sqr() + amplification_noise))
        .collect();
    let total = per_element.iter().sum();
    Ok(AmplifierPower { per_element, total })
}

/// Unit amplitudes with every cascaded term co-phased with the direct link.
pub fn optimize_passive(ch: &ChannelRealization) -> ReflectionConfig {
    let amplitudes = vec![1.0; ch.num_elements()];
    ReflectionConfig { amplitudes, phases: aligned_phases(ch) }
}

pub(crate) fn aligned_phases(ch: &ChannelRealization) -> Vec<f64> {
    // arg(0) == 0, so a blocked direct link aligns everything to phase 0
    let reference = ch.direct.arg();
    (0..ch.num_elements()).map(|m| wrap_phase(reference - ch.cascaded(m).arg())).collect()
}
