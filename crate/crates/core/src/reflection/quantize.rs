use std::f64::consts::TAU;

use crate::error::{Error, Result};

use super::{wrap_phase, ReflectionConfig};

/// Discrete reflection hardware: `2^phase_bits` uniform phase levels on
/// `[0, 2π)` and `amp_levels` uniform amplitude levels on `[0, alpha_max]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantizationSpec {
    pub phase_bits: u32,
    pub amp_levels: u32,
    pub alpha_max: f64,
}

impl QuantizationSpec {
    pub fn validate(&self) -> Result<()> {
        if !(1..=52).contains(&self.phase_bits) {
            return Err(Error::domain(format!("phase_bits must be in 1..=52, got {}", self.phase_bits)));
        }
        if self.amp_levels == 0 {
            return Err(Error::domain("amp_levels must be at least 1"));
        }
        if !(self.alpha_max > 0.0 && self.alpha_max.is_finite()) {
            return Err(Error::domain(format!("alpha_max must be positive, got {}", self.alpha_max)));
        }
        Ok(())
    }
}

/// Nearest level index of `x / step`; exact half-way ties go to the lower level.
fn round_half_down(x: f64) -> f64 {
    (x - 0.5).ceil()
}

pub fn quantize_reflection(refl: &ReflectionConfig, spec: &QuantizationSpec) -> Result<ReflectionConfig> {
    spec.validate()?;
    let levels = 1u64 << spec.phase_bits;
    let phase_step = TAU / levels as f64;
    let phases = refl
        .phases
        .iter()
        .map(|p| {
            let k = round_half_down(wrap_phase(*p) / phase_step) as u64 % levels;
            k as f64 * phase_step
        })
        .collect();
    let amplitudes = refl
        .amplitudes
        .iter()
        .map(|a| {
            if spec.amp_levels == 1 {
                return 0.0;
            }
            let step = spec.alpha_max / (spec.amp_levels - 1) as f64;
            let k = round_half_down(a.clamp(0.0, spec.alpha_max) / step);
            (k * step).min(spec.alpha_max)
        })
        .collect();
    Ok(ReflectionConfig { amplitudes, phases })
}
