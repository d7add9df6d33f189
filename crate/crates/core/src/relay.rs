//! Single-antenna amplify-and-forward relay baselines.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DuplexMode {
    /// Two equal slots per symbol, pre-log ½.
    HalfDuplex,
    /// Ideal self-interference cancellation.
    FullDuplexIdeal,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelayConfig {
    /// Relay amplification power, watts.
    pub power: f64,
    /// Noise power at the relay receiver, watts.
    pub noise: f64,
    pub mode: DuplexMode,
}

impl RelayConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.power > 0.0 && self.power.is_finite()) {
            return Err(Error::domain(format!("relay power must be positive, got {}", self.power)));
        }
        if !(self.noise >= 0.0 && self.noise.is_finite()) {
            return Err(Error::domain(format!("relay noise must be >= 0, got {}", self.noise)));
        }
        Ok(())
    }
}

/// End-to-end SNR of variable-gain AF relaying, `γ₁γ₂ / (γ₁ + γ₂ + 1)`.
pub fn af_end_to_end_snr(
    gain1: f64,
    gain2: f64,
    tx_power: f64,
    cfg: &RelayConfig,
    receiver_noise: f64,
) -> Result<f64> {
    cfg.validate()?;
    if !(gain1 > 0.0 && gain2 > 0.0) {
        return Err(Error::domain(format!("hop gains must be positive, got {gain1} and {gain2}")));
    }
    if !(cfg.noise > 0.0 && receiver_noise > 0.0) {
        return Err(Error::domain("AF relaying needs non-zero relay and receiver noise"));
    }
    let first = tx_power * gain1 / cfg.noise;
    let second = cfg.power * gain2 / receiver_noise;
    Ok(hop_combine(first, second))
}

pub(crate) fn hop_combine(first: f64, second: f64) -> f64 {
    first * second / (first + second + 1.0)
}

pub fn relay_rate(snr: f64, mode: DuplexMode) -> f64 {
    let full = snr.ln_1p() / std::f64::consts::LN_2;
    match mode {
        DuplexMode::HalfDuplex => 0.5 * full,
        DuplexMode::FullDuplexIdeal => full,
    }
}
