//! Parameter sweeps, scaling-law fits and IRS placement search.

mod placement;
pub mod presets;
mod scaling;
mod sweep;

pub use placement::{optimize_placement, placement_profile, Placement};
pub use scaling::estimate_scaling_slope;
pub use sweep::{
    crossovers, run_rate_vs_distance, run_snr_vs_elements, SweepResult, SweepRow, SweepSpec, SweepVariable,
};

use crate::channel::{path_gain, synthesize_los, Scenario};
use crate::error::{Error, Result};
use crate::reflection::{achievable_rate, optimize, received_snr, PowerModel};
use crate::relay::{af_end_to_end_snr, relay_rate, DuplexMode, RelayConfig};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SystemKind {
    /// IRS at `Scenario::irs_pos` with the given amplification model.
    Irs(PowerModel),
    /// AF relay at `Scenario::irs_pos`; the direct link is ignored.
    Relay(RelayConfig),
}

/// A labelled system under comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct System {
    pub label: String,
    pub kind: SystemKind,
}

impl System {
    pub fn new(label: impl Into<String>, kind: SystemKind) -> Self {
        Self { label: label.into(), kind }
    }

    pub fn passive() -> Self {
        Self::new("passive_irs", SystemKind::Irs(PowerModel::Passive))
    }

    pub fn active_total(budget: f64) -> Self {
        Self::new("active_irs_total", SystemKind::Irs(PowerModel::ActiveTotal { budget }))
    }

    pub fn active_per_element(per_element: f64) -> Self {
        Self::new("active_irs_per_element", SystemKind::Irs(PowerModel::ActivePerElement { per_element }))
    }

    pub fn relay(power: f64, noise: f64, mode: DuplexMode) -> Self {
        let label = match mode {
            DuplexMode::HalfDuplex => "relay_half_duplex",
            DuplexMode::FullDuplexIdeal => "relay_full_duplex",
        };
        Self::new(label, SystemKind::Relay(RelayConfig { power, noise, mode }))
    }

    pub fn validate(&self) -> Result<()> {
        match &self.kind {
            SystemKind::Irs(pm) => pm.validate(),
            SystemKind::Relay(cfg) => cfg.validate(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub snr: f64,
    pub rate: f64,
}

/// Optimizes `system` for `scenario` and reports its SNR and rate.
pub fn evaluate(system: &System, scenario: &Scenario) -> Result<Evaluation> {
    scenario.validate()?;
    match &system.kind {
        SystemKind::Irs(pm) => {
            let ch = synthesize_los(scenario)?;
            let noise = pm.effective_noise(&scenario.noise);
            let refl = optimize(&ch, pm, scenario.transmit_power, &noise)?;
            let snr = received_snr(&ch, &refl, scenario.transmit_power, &noise)?;
            Ok(Evaluation { snr, rate: achievable_rate(snr)? })
        }
        SystemKind::Relay(cfg) => {
            let g1 = path_gain(scenario.bs_pos.distance(&scenario.irs_pos), &scenario.path_loss)?;
            let g2 = path_gain(scenario.irs_pos.distance(&scenario.user_pos), &scenario.path_loss)?;
            let snr = af_end_to_end_snr(g1, g2, scenario.transmit_power, cfg, scenario.noise.receiver)?;
            Ok(Evaluation { snr, rate: relay_rate(snr, cfg.mode) })
        }
    }
}

pub(crate) fn check_systems(systems: &[System]) -> Result<()> {
    if systems.is_empty() {
        return Err(Error::domain("at least one system is required"));
    }
    systems.iter().try_for_each(System::validate)
}
