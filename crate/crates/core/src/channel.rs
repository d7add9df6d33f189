//! Deterministic line-of-sight channel synthesis.
//!
//! The surface is modelled as a uniform linear array with half-wavelength
//! spacing along the x-axis, centred on the IRS position. Magnitudes use the
//! far-field approximation (one hop distance for every element); only the
//! per-element phases depend on the element offset.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Carrier wavelength used when none is configured (3 GHz).
pub const DEFAULT_WAVELENGTH: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Position3D {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Position3D {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn distance(&self, other: &Position3D) -> f64 {
        let (dx, dy, dz) = (self.x - other.x, self.y - other.y, self.z - other.z);
        (dx * dx + dy * dy + dz * dz).sqrt()
    }

    /// Point at fraction `s` of the way from `self` to `other`.
    pub fn lerp(&self, other: &Position3D, s: f64) -> Position3D {
        Position3D::new(
            self.x + s * (other.x - self.x),
            self.y + s * (other.y - self.y),
            self.z + s * (other.z - self.z),
        )
    }
}

/// Distance-based power gain `beta0 / d^kappa`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathLossModel {
    /// Linear power gain at the 1 m reference distance.
    pub beta0: f64,
    /// Path-loss exponent.
    pub kappa: f64,
}

impl PathLossModel {
    pub fn new(beta0: f64, kappa: f64) -> Result<Self> {
        let m = Self { beta0, kappa };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.beta0 > 0.0 && self.beta0.is_finite()) {
            return Err(Error::domain(format!("reference gain must be positive, got {}", self.beta0)));
        }
        if !(self.kappa > 0.0 && self.kappa.is_finite()) {
            return Err(Error::domain(format!("path-loss exponent must be positive, got {}", self.kappa)));
        }
        Ok(())
    }

    pub fn gain(&self, d: f64) -> Result<f64> {
        path_gain(d, self)
    }
}

/// Receiver noise and per-element amplification noise powers, in watts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoisePowers {
    pub receiver: f64,
    pub amplification: f64,
}

impl NoisePowers {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("receiver", self.receiver), ("amplification", self.amplification)] {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(Error::domain(format!("{name} noise power must be >= 0, got {v}")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub bs_pos: Position3D,
    pub user_pos: Position3D,
    pub irs_pos: Position3D,
    pub num_elements: usize,
    pub wavelength: f64,
    pub path_loss: PathLossModel,
    /// BS transmit power, watts.
    pub transmit_power: f64,
    pub noise: NoisePowers,
    pub direct_link_blocked: bool,
}

impl Scenario {
    pub fn validate(&self) -> Result<()> {
        for (name, p) in [("bs", &self.bs_pos), ("user", &self.user_pos), ("irs", &self.irs_pos)] {
            if !p.is_finite() {
                return Err(Error::domain(format!("{name} position is not finite")));
            }
        }
        if self.num_elements == 0 {
            return Err(Error::domain("number of elements must be at least 1"));
        }
        if !(self.transmit_power > 0.0 && self.transmit_power.is_finite()) {
            return Err(Error::domain(format!("transmit power must be positive, got {}", self.transmit_power)));
        }
        if !(self.wavelength > 0.0 && self.wavelength.is_finite()) {
            return Err(Error::domain(format!("wavelength must be positive, got {}", self.wavelength)));
        }
        self.path_loss.validate()?;
        self.noise.validate()?;
        if self.bs_pos == self.irs_pos {
            return Err(Error::domain("BS and IRS positions coincide"));
        }
        if self.irs_pos == self.user_pos {
            return Err(Error::domain("IRS and user positions coincide"));
        }
        Ok(())
    }
}

/// Per-element BS→IRS and IRS→user channels plus the direct BS→user link.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelRealization {
    /// BS→IRS channel, one entry per element.
    pub tx_irs: Vec<Complex64>,
    /// IRS→user channel; enters the received signal conjugated.
    pub irs_rx: Vec<Complex64>,
    /// Direct BS→user channel.
    pub direct: Complex64,
}

impl ChannelRealization {
    pub fn new(tx_irs: Vec<Complex64>, irs_rx: Vec<Complex64>, direct: Complex64) -> Result<Self> {
        if tx_irs.len() != irs_rx.len() {
            return Err(Error::Dimension {
                what: "IRS->user channel",
                got: irs_rx.len(),
                expected: tx_irs.len(),
            });
        }
        if tx_irs.is_empty() {
            return Err(Error::domain("channel must have at least one element"));
        }
        let finite = |c: &Complex64| c.re.is_finite() && c.im.is_finite();
        if !(tx_irs.iter().all(finite) && irs_rx.iter().all(finite) && finite(&direct)) {
            return Err(Error::domain("channel coefficients must be finite"));
        }
        Ok(Self { tx_irs, irs_rx, direct })
    }

    pub fn num_elements(&self) -> usize {
        self.tx_irs.len()
    }

    /// Cascaded coefficient `conj(h_m) * g_m` of element `m`.
    pub fn cascaded(&self, m: usize) -> Complex64 {
        self.irs_rx[m].conj() * self.tx_irs[m]
    }
}

pub fn path_gain(d: f64, model: &PathLossModel) -> Result<f64> {
    if !(d > 0.0 && d.is_finite()) {
        return Err(Error::domain(format!("distance must be positive, got {d}")));
    }
    Ok(model.beta0 / d.powf(model.kappa))
}

/// Offset of element `m` from the array centre along x.
fn element_offset(m: usize, num_elements: usize, wavelength: f64) -> f64 {
    (m as f64 - (num_elements as f64 - 1.0) / 2.0) * wavelength / 2.0
}

fn ula_response(irs: &Position3D, far: &Position3D, scenario: &Scenario) -> Result<Vec<Complex64>> {
    let d = irs.distance(far);
    let amp = path_gain(d, &scenario.path_loss)?.sqrt();
    // x-component of the unit vector from the array towards the far node
    let cos_x = (far.x - irs.x) / d;
    let k = 2.0 * PI / scenario.wavelength;
    Ok((0..scenario.num_elements)
        .map(|m| {
            let path = d - element_offset(m, scenario.num_elements, scenario.wavelength) * cos_x;
            Complex64::from_polar(amp, -k * path)
        })
        .collect())
}

pub fn synthesize_los(scenario: &Scenario) -> Result<ChannelRealization> {
    scenario.validate()?;
    let tx_irs = ula_response(&scenario.irs_pos, &scenario.bs_pos, scenario)?;
    let irs_rx = ula_response(&scenario.irs_pos, &scenario.user_pos, scenario)?;
    let direct = if scenario.direct_link_blocked {
        Complex64::new(0.0, 0.0)
    } else {
        let d = scenario.bs_pos.distance(&scenario.user_pos);
        let amp = path_gain(d, &scenario.path_loss)
            .map_err(|_| Error::domain("BS and user positions coincide"))?
            .sqrt();
        Complex64::from_polar(amp, -2.0 * PI * d / scenario.wavelength)
    };
    Ok(ChannelRealization { tx_irs, irs_rx, direct })
}
