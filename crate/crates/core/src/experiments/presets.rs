//! Default scenarios and system sets for the rate-vs-distance, SNR-vs-M and
//! placement experiments. Values are in watts and linear gains.

use crate::channel::{NoisePowers, PathLossModel, Position3D, Scenario, DEFAULT_WAVELENGTH};
use crate::relay::DuplexMode;

use super::{SweepVariable, System};

/// BS transmit power, 20 dBm.
pub const DEFAULT_TX_POWER: f64 = 0.1;
/// Receiver and per-element amplification noise, −80 dBm.
pub const NOISE_POWER: f64 = 1e-11;
/// Power gain at 1 m, −30 dB.
pub const REFERENCE_GAIN: f64 = 1e-3;
pub const PATH_LOSS_EXPONENT: f64 = 2.0;
/// Altitude of the BS and of the IRS/relay, metres.
pub const NODE_ALTITUDE: f64 = 2.0;
pub const NUM_ELEMENTS: usize = 128;
/// Active-IRS total amplification power in the rate-vs-distance comparison, 10 dBm.
pub const IRS_POWER: f64 = 0.01;
/// AF relay amplification power, 15 dBm.
pub fn relay_power() -> f64 {
    10f64.powf(-1.5)
}
/// Fixed total power of the SNR-vs-M comparison.
pub const FTP_POWER: f64 = 0.2;
/// Fixed per-element power of the SNR-vs-M comparison.
pub const FPP_POWER: f64 = 1e-3;
/// Horizontal BS-IRS distance in the SNR-vs-M comparison.
pub const FIG6_IRS_DISTANCE: f64 = 5.0;
/// Horizontal BS-user distance in the SNR-vs-M comparison.
pub const FIG6_USER_DISTANCE: f64 = 100.0;
pub const PLACEMENT_USER_DISTANCE: f64 = 50.0;

fn base(user_x: f64, irs_x: f64, tx_power: f64) -> Scenario {
    Scenario {
        bs_pos: Position3D::new(0.0, 0.0, NODE_ALTITUDE),
        user_pos: Position3D::new(user_x, 0.0, 0.0),
        irs_pos: Position3D::new(irs_x, 0.0, NODE_ALTITUDE),
        num_elements: NUM_ELEMENTS,
        wavelength: DEFAULT_WAVELENGTH,
        path_loss: PathLossModel { beta0: REFERENCE_GAIN, kappa: PATH_LOSS_EXPONENT },
        transmit_power: tx_power,
        noise: NoisePowers { receiver: NOISE_POWER, amplification: NOISE_POWER },
        direct_link_blocked: true,
    }
}

/// Rate-vs-distance base: the user position is overwritten by the sweep.
pub fn fig5_scenario(tx_power: f64) -> Scenario {
    base(50.0, 25.0, tx_power)
}

pub fn fig5_sweep() -> SweepVariable {
    SweepVariable::BsUserDistance { from: 20.0, to: 100.0, step: 5.0, irs_fraction: 0.5 }
}

pub fn fig5_systems() -> Vec<System> {
    vec![
        System::active_total(IRS_POWER),
        System::passive(),
        System::relay(relay_power(), NOISE_POWER, DuplexMode::FullDuplexIdeal),
        System::relay(relay_power(), NOISE_POWER, DuplexMode::HalfDuplex),
    ]
}

pub fn fig6_scenario() -> Scenario {
    base(FIG6_USER_DISTANCE, FIG6_IRS_DISTANCE, DEFAULT_TX_POWER)
}

/// M = 8, 16, ..., 4096.
pub fn fig6_sweep() -> SweepVariable {
    SweepVariable::NumElements { values: (3..=12).map(|k| 1usize << k).collect() }
}

pub fn fig6_systems() -> Vec<System> {
    vec![System::active_total(FTP_POWER), System::active_per_element(FPP_POWER), System::passive()]
}

pub fn placement_scenario() -> Scenario {
    base(PLACEMENT_USER_DISTANCE, PLACEMENT_USER_DISTANCE / 2.0, DEFAULT_TX_POWER)
}

/// BS-side to user-side segment at IRS altitude, starting 1 m from the BS.
pub fn placement_segment() -> (Position3D, Position3D) {
    (
        Position3D::new(1.0, 0.0, NODE_ALTITUDE),
        Position3D::new(PLACEMENT_USER_DISTANCE, 0.0, NODE_ALTITUDE),
    )
}

pub const PLACEMENT_RESOLUTION: f64 = 0.5;
