//! Run configuration files.
//!
//! Configs are TOML. Powers and gains are written in dBm/dB and converted to
//! watts/linear exactly once, here; every other module works in linear units.
//! See `presets/*.cfg` for annotated examples.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::channel::{NoisePowers, PathLossModel, Position3D, Scenario, DEFAULT_WAVELENGTH};
use crate::error::{Error, Result};
use crate::experiments::{SweepSpec, SweepVariable, System, SystemKind};
use crate::reflection::PowerModel;
use crate::relay::{DuplexMode, RelayConfig};

/// `10^(db/10)`. Integer exponents are computed as exact powers of ten so
/// that e.g. −30 dB is exactly `1e-3`.
pub fn db_to_linear(db: f64) -> f64 {
    let e = db / 10.0;
    if e.fract() == 0.0 && e.abs() <= 22.0 {
        let p = 10f64.powi(e.abs() as i32);
        if e >= 0.0 {
            p
        } else {
            1.0 / p
        }
    } else {
        10f64.powf(e)
    }
}

pub fn dbm_to_watts(dbm: f64) -> f64 {
    db_to_linear(dbm - 30.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentKind {
    Fig5,
    Fig6,
    Placement,
    Snr,
    QuantizeSweep,
}

impl ExperimentKind {
    pub fn name(&self) -> &'static str {
        match self {
            ExperimentKind::Fig5 => "fig5",
            ExperimentKind::Fig6 => "fig6",
            ExperimentKind::Placement => "placement",
            ExperimentKind::Snr => "snr",
            ExperimentKind::QuantizeSweep => "quantize-sweep",
        }
    }
}

// ---------------------------------------------------------------------------
// File schema
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub experiment: ExperimentKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    pub scenario: ScenarioSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub placement: Option<PlacementSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quantize: Option<QuantizeSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub system: Vec<SystemSection>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioSection {
    pub bs_position: [f64; 3],
    pub user_position: [f64; 3],
    pub irs_position: [f64; 3],
    pub num_elements: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wavelength_m: Option<f64>,
    pub transmit_power_dbm: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub direct_link_blocked: Option<bool>,
    pub reference_gain_db: f64,
    pub path_loss_exponent: f64,
    pub receiver_noise_dbm: f64,
    pub amplification_noise_dbm: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distance_from_m: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distance_to_m: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distance_step_m: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irs_fraction: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlacementSection {
    pub from: [f64; 3],
    pub to: [f64; 3],
    pub resolution_m: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuantizeSection {
    pub phase_bits: Vec<u32>,
    pub amp_levels: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_max: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SystemKindTag {
    ActiveTotal,
    ActivePerElement,
    Passive,
    RelayFullDuplex,
    RelayHalfDuplex,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemSection {
    pub kind: SystemKindTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power_dbm: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power_w: Option<f64>,
    /// Relay receiver noise; defaults to the scenario's receiver noise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub noise_dbm: Option<f64>,
}

// ---------------------------------------------------------------------------
// Validated configuration
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
pub enum Experiment {
    RateVsDistance(SweepSpec),
    SnrVsElements(SweepSpec),
    Placement { segment: (Position3D, Position3D), resolution: f64, system: System },
    SinglePoint { systems: Vec<System> },
    QuantizeSweep { system: System, phase_bits: Vec<u32>, amp_levels: u32, alpha_max: Option<f64> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// The file as written; [`RunConfig::echo`] serializes it back.
    pub source: ConfigFile,
    pub kind: ExperimentKind,
    pub scenario: Scenario,
    pub experiment: Experiment,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn echo(&self) -> String {
        toml::to_string(&self.source).expect("config schema is always serializable")
    }

    pub fn default_output(&self) -> PathBuf {
        self.output.clone().unwrap_or_else(|| PathBuf::from(format!("{}.csv", self.kind.name())))
    }
}

pub fn parse_config(path: impl AsRef<Path>) -> Result<RunConfig> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    parse_config_str(&text)
}

pub fn parse_config_str(text: &str) -> Result<RunConfig> {
    let source: ConfigFile = toml::from_str(text).map_err(|e| syntax_error(text, &e))?;
    Validator { text }.build(source)
}

fn syntax_error(text: &str, e: &toml::de::Error) -> Error {
    let line = e.span().map(|s| line_of(text, s.start));
    let table = line.map(|l| table_at(text, l)).unwrap_or_default();
    let message = e.message().to_string();
    let field = message
        .strip_prefix("unknown field `")
        .and_then(|rest| rest.split('`').next())
        .map(str::to_string);
    let key = match (table.is_empty(), field) {
        (true, Some(f)) => f,
        (false, Some(f)) => format!("{table}.{f}"),
        (_, None) if table.is_empty() => "<root>".to_string(),
        (_, None) => table,
    };
    Error::Config { key, line, message }
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

/// Table headers in effect at each line, `[[t]]` entries numbered as `t[i]`.
fn headers(text: &str) -> Vec<String> {
    let mut current = String::new();
    let mut counts: std::collections::HashMap<String, usize> = Default::default();
    text.lines()
        .map(|raw| {
            let l = raw.split('#').next().unwrap_or("").trim();
            if let Some(name) = l.strip_prefix("[[").and_then(|r| r.strip_suffix("]]")) {
                let name = name.trim().to_string();
                let n = counts.entry(name.clone()).or_insert(0);
                current = format!("{name}[{n}]");
                *n += 1;
            } else if let Some(name) = l.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
                current = name.trim().to_string();
            }
            current.clone()
        })
        .collect()
}

fn table_at(text: &str, line: usize) -> String {
    headers(text).get(line.saturating_sub(1)).cloned().unwrap_or_default()
}

/// 1-based line where dotted `key` (e.g. `system[1].power_dbm`) is defined.
fn locate(text: &str, key: &str) -> Option<usize> {
    let (table, leaf) = key.rsplit_once('.').unwrap_or(("", key));
    let hdrs = headers(text);
    let found = text.lines().zip(&hdrs).position(|(raw, h)| {
        let l = raw.trim_start();
        h == table && l.strip_prefix(leaf).is_some_and(|r| r.trim_start().starts_with('='))
    });
    found.or_else(|| hdrs.iter().position(|h| h == key)).map(|i| i + 1)
}

struct Validator<'a> {
    text: &'a str,
}

impl Validator<'_> {
    fn err(&self, key: &str, message: impl Into<String>) -> Error {
        Error::Config { key: key.to_string(), line: locate(self.text, key), message: message.into() }
    }

    fn wrap<T>(&self, key: &str, r: Result<T>) -> Result<T> {
        r.map_err(|e| match e {
            Error::Domain(m) => self.err(key, m),
            other => self.err(key, other.to_string()),
        })
    }

    fn require<T: Copy>(&self, key: &str, v: Option<T>) -> Result<T> {
        v.ok_or_else(|| self.err(key, "missing required key"))
    }

    fn position(&self, key: &str, p: [f64; 3]) -> Result<Position3D> {
        let pos = Position3D::new(p[0], p[1], p[2]);
        if !pos.is_finite() {
            return Err(self.err(key, "coordinates must be finite"));
        }
        Ok(pos)
    }

    fn build(&self, source: ConfigFile) -> Result<RunConfig> {
        let scenario = self.scenario(&source.scenario)?;
        let systems = source
            .system
            .iter()
            .enumerate()
            .map(|(i, s)| self.system(i, s, &scenario))
            .collect::<Result<Vec<_>>>()?;
        let mut labels: Vec<&str> = systems.iter().map(|s| s.label.as_str()).collect();
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(self.err("system", format!("duplicate system label `{}`", w[0])));
        }
        if systems.is_empty() {
            return Err(self.err("system", "at least one [[system]] entry is required"));
        }

        let experiment = match source.experiment {
            ExperimentKind::Fig5 => {
                let s = source.sweep.as_ref().ok_or_else(|| self.err("sweep", "missing [sweep] table"))?;
                let variable = SweepVariable::BsUserDistance {
                    from: self.require("sweep.distance_from_m", s.distance_from_m)?,
                    to: self.require("sweep.distance_to_m", s.distance_to_m)?,
                    step: self.require("sweep.distance_step_m", s.distance_step_m)?,
                    irs_fraction: s.irs_fraction.unwrap_or(0.5),
                };
                if s.elements.is_some() {
                    return Err(self.err("sweep.elements", "not used by a distance sweep"));
                }
                self.wrap("sweep", variable.validate())?;
                Experiment::RateVsDistance(SweepSpec { variable, systems })
            }
            ExperimentKind::Fig6 => {
                let s = source.sweep.as_ref().ok_or_else(|| self.err("sweep", "missing [sweep] table"))?;
                let values = s.elements.clone().ok_or_else(|| self.err("sweep.elements", "missing required key"))?;
                if s.distance_from_m.is_some() || s.distance_to_m.is_some() || s.distance_step_m.is_some() || s.irs_fraction.is_some() {
                    return Err(self.err("sweep", "distance keys are not used by an element sweep"));
                }
                let variable = SweepVariable::NumElements { values };
                self.wrap("sweep.elements", variable.validate())?;
                Experiment::SnrVsElements(SweepSpec { variable, systems })
            }
            ExperimentKind::Placement => {
                let p = source.placement.as_ref().ok_or_else(|| self.err("placement", "missing [placement] table"))?;
                if systems.len() != 1 {
                    return Err(self.err("system", "placement takes exactly one [[system]]"));
                }
                if !(p.resolution_m > 0.0 && p.resolution_m.is_finite()) {
                    return Err(self.err("placement.resolution_m", "must be positive"));
                }
                let from = self.position("placement.from", p.from)?;
                let to = self.position("placement.to", p.to)?;
                if from == to {
                    return Err(self.err("placement.to", "segment endpoints must differ"));
                }
                Experiment::Placement { segment: (from, to), resolution: p.resolution_m, system: systems[0].clone() }
            }
            ExperimentKind::Snr => Experiment::SinglePoint { systems },
            ExperimentKind::QuantizeSweep => {
                let q = source.quantize.as_ref().ok_or_else(|| self.err("quantize", "missing [quantize] table"))?;
                if systems.len() != 1 || matches!(systems[0].kind, SystemKind::Relay(_)) {
                    return Err(self.err("system", "quantize-sweep takes exactly one IRS [[system]]"));
                }
                if q.phase_bits.is_empty() || q.phase_bits.iter().any(|b| !(1..=52).contains(b)) {
                    return Err(self.err("quantize.phase_bits", "needs one or more values in 1..=52"));
                }
                if q.amp_levels == 0 {
                    return Err(self.err("quantize.amp_levels", "must be at least 1"));
                }
                if let Some(a) = q.alpha_max {
                    if !(a > 0.0 && a.is_finite()) {
                        return Err(self.err("quantize.alpha_max", "must be positive"));
                    }
                }
                Experiment::QuantizeSweep {
                    system: systems[0].clone(),
                    phase_bits: q.phase_bits.clone(),
                    amp_levels: q.amp_levels,
                    alpha_max: q.alpha_max,
                }
            }
        };

        let unused = |present: bool, key: &str, used: bool| -> Result<()> {
            if present && !used {
                return Err(self.err(key, format!("not used by experiment `{}`", source.experiment.name())));
            }
            Ok(())
        };
        let kind = source.experiment;
        unused(source.sweep.is_some(), "sweep", matches!(kind, ExperimentKind::Fig5 | ExperimentKind::Fig6))?;
        unused(source.placement.is_some(), "placement", kind == ExperimentKind::Placement)?;
        unused(source.quantize.is_some(), "quantize", kind == ExperimentKind::QuantizeSweep)?;

        Ok(RunConfig {
            kind,
            scenario,
            experiment,
            output: source.output.as_ref().map(PathBuf::from),
            source,
        })
    }

    fn scenario(&self, s: &ScenarioSection) -> Result<Scenario> {
        if s.num_elements == 0 {
            return Err(self.err("scenario.num_elements", "must be at least 1"));
        }
        let path_loss = self.wrap(
            "scenario.reference_gain_db",
            PathLossModel::new(db_to_linear(s.reference_gain_db), s.path_loss_exponent),
        )
        .map_err(|e| if s.path_loss_exponent > 0.0 { e } else { self.err("scenario.path_loss_exponent", "must be positive") })?;
        let wavelength = s.wavelength_m.unwrap_or(DEFAULT_WAVELENGTH);
        if !(wavelength > 0.0 && wavelength.is_finite()) {
            return Err(self.err("scenario.wavelength_m", "must be positive"));
        }
        for (key, v) in [
            ("scenario.transmit_power_dbm", s.transmit_power_dbm),
            ("scenario.receiver_noise_dbm", s.receiver_noise_dbm),
            ("scenario.amplification_noise_dbm", s.amplification_noise_dbm),
            ("scenario.reference_gain_db", s.reference_gain_db),
        ] {
            if !v.is_finite() {
                return Err(self.err(key, "must be finite"));
            }
        }
        let scenario = Scenario {
            bs_pos: self.position("scenario.bs_position", s.bs_position)?,
            user_pos: self.position("scenario.user_position", s.user_position)?,
            irs_pos: self.position("scenario.irs_position", s.irs_position)?,
            num_elements: s.num_elements,
            wavelength,
            path_loss,
            transmit_power: dbm_to_watts(s.transmit_power_dbm),
            noise: NoisePowers {
                receiver: dbm_to_watts(s.receiver_noise_dbm),
                amplification: dbm_to_watts(s.amplification_noise_dbm),
            },
            direct_link_blocked: s.direct_link_blocked.unwrap_or(true),
        };
        if scenario.bs_pos == scenario.irs_pos {
            return Err(self.err("scenario.irs_position", "coincides with bs_position"));
        }
        if scenario.user_pos == scenario.irs_pos {
            return Err(self.err("scenario.irs_position", "coincides with user_position"));
        }
        self.wrap("scenario", scenario.validate())?;
        Ok(scenario)
    }

    fn system(&self, i: usize, s: &SystemSection, scenario: &Scenario) -> Result<System> {
        let key = |leaf: &str| format!("system[{i}].{leaf}");
        let power = match (s.power_dbm, s.power_w) {
            (Some(_), Some(_)) => return Err(self.err(&key("power_w"), "give either power_dbm or power_w, not both")),
            (Some(dbm), None) => {
                if !dbm.is_finite() {
                    return Err(self.err(&key("power_dbm"), "must be finite"));
                }
                Some(dbm_to_watts(dbm))
            }
            (None, Some(w)) => {
                if !(w > 0.0 && w.is_finite()) {
                    return Err(self.err(&key("power_w"), "must be positive"));
                }
                Some(w)
            }
            (None, None) => None,
        };
        let need_power = || power.ok_or_else(|| self.err(&format!("system[{i}]"), "missing power_dbm or power_w"));
        let is_relay = matches!(s.kind, SystemKindTag::RelayFullDuplex | SystemKindTag::RelayHalfDuplex);
        if s.noise_dbm.is_some() && !is_relay {
            return Err(self.err(&key("noise_dbm"), "only relays take a noise power"));
        }
        let mut system = match s.kind {
            SystemKindTag::Passive => {
                if power.is_some() {
                    return Err(self.err(&key("power_dbm"), "a passive IRS has no amplification power"));
                }
                System::passive()
            }
            SystemKindTag::ActiveTotal => System::active_total(need_power()?),
            SystemKindTag::ActivePerElement => System::active_per_element(need_power()?),
            SystemKindTag::RelayFullDuplex | SystemKindTag::RelayHalfDuplex => {
                let noise = match s.noise_dbm {
                    Some(dbm) if dbm.is_finite() => dbm_to_watts(dbm),
                    Some(_) => return Err(self.err(&key("noise_dbm"), "must be finite")),
                    None => scenario.noise.receiver,
                };
                let mode = if s.kind == SystemKindTag::RelayFullDuplex {
                    DuplexMode::FullDuplexIdeal
                } else {
                    DuplexMode::HalfDuplex
                };
                System::relay(need_power()?, noise, mode)
            }
        };
        if let Some(label) = &s.label {
            if label.is_empty() || !label.chars().all(|c| c.is_ascii_alphanumeric() || "_-.".contains(c)) {
                return Err(self.err(&key("label"), "labels may only use ASCII letters, digits, `_`, `-` and `.`"));
            }
            system.label = label.clone();
        }
        if let SystemKind::Irs(pm) = &system.kind {
            if *pm != PowerModel::Passive {
                self.wrap(&key("power_dbm"), pm.validate())?;
            }
        }
        if let SystemKind::Relay(RelayConfig { .. }) = &system.kind {
            self.wrap(&format!("system[{i}]"), system.validate())?;
        }
        Ok(system)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
experiment = "snr"

[scenario]
bs_position = [0.0, 0.0, 2.0]
user_position = [50.0, 0.0, 0.0]
irs_position = [25.0, 0.0, 2.0]
num_elements = 128
transmit_power_dbm = 20.0
reference_gain_db = -30.0
path_loss_exponent = 2.0
receiver_noise_dbm = -80.0
amplification_noise_dbm = -80.0

[[system]]
kind = "active-total"
power_dbm = 0.0

[[system]]
kind = "passive"
"#;

    #[test]
    fn unit_conversions() {
        assert_eq!(db_to_linear(-30.0), 1e-3);
        assert_eq!(dbm_to_watts(-80.0), 1e-11);
        assert_eq!(dbm_to_watts(0.0), 1e-3);
        assert_eq!(dbm_to_watts(30.0), 1.0);
        assert!((dbm_to_watts(15.0) - 0.0316227766).abs() < 1e-10);
    }

    #[test]
    fn minimal_config_converts_units() {
        let cfg = parse_config_str(MINIMAL).unwrap();
        assert_eq!(cfg.scenario.path_loss.beta0, 1e-3);
        assert_eq!(cfg.scenario.noise.receiver, 1e-11);
        assert_eq!(cfg.scenario.transmit_power, 0.1);
        assert_eq!(cfg.scenario.wavelength, DEFAULT_WAVELENGTH);
        assert!(cfg.scenario.direct_link_blocked);
        let Experiment::SinglePoint { systems } = &cfg.experiment else { panic!() };
        assert_eq!(systems[0].kind, SystemKind::Irs(PowerModel::ActiveTotal { budget: 1e-3 }));
    }

    #[test]
    fn echo_round_trips() {
        let cfg = parse_config_str(MINIMAL).unwrap();
        let again = parse_config_str(&cfg.echo()).unwrap();
        assert_eq!(cfg, again);
    }

    #[test]
    fn unknown_key_is_named_with_line() {
        let text = MINIMAL.replace("num_elements = 128", "num_elements = 128\nnum_elemnts = 4");
        let err = parse_config_str(&text).unwrap_err();
        let Error::Config { key, line, .. } = &err else { panic!("{err}") };
        assert_eq!(key, "scenario.num_elemnts");
        assert_eq!(*line, Some(9));
        assert!(err.to_string().contains("num_elemnts"));
    }

    #[test]
    fn missing_key_reported() {
        let text = MINIMAL.replace("transmit_power_dbm = 20.0\n", "");
        let err = parse_config_str(&text).unwrap_err();
        assert!(err.to_string().contains("transmit_power_dbm"), "{err}");
    }

    #[test]
    fn malformed_syntax_reported_with_line() {
        let text = MINIMAL.replace("path_loss_exponent = 2.0", "path_loss_exponent = = 2.0");
        let Error::Config { line, .. } = parse_config_str(&text).unwrap_err() else { panic!() };
        assert_eq!(line, Some(11));
    }

    #[test]
    fn out_of_range_values_located() {
        let text = MINIMAL.replace("path_loss_exponent = 2.0", "path_loss_exponent = -2.0");
        let Error::Config { key, line, .. } = parse_config_str(&text).unwrap_err() else { panic!() };
        assert_eq!(key, "scenario.path_loss_exponent");
        assert_eq!(line, Some(11));

        let text = MINIMAL.replace("num_elements = 128", "num_elements = 0");
        let Error::Config { key, .. } = parse_config_str(&text).unwrap_err() else { panic!() };
        assert_eq!(key, "scenario.num_elements");

        let text = MINIMAL.replace("power_dbm = 0.0", "power_w = -1.0");
        let Error::Config { key, line, .. } = parse_config_str(&text).unwrap_err() else { panic!() };
        assert_eq!(key, "system[0].power_w");
        assert_eq!(line, Some(17));

        let text = MINIMAL.replace("irs_position = [25.0, 0.0, 2.0]", "irs_position = [0.0, 0.0, 2.0]");
        let Error::Config { key, .. } = parse_config_str(&text).unwrap_err() else { panic!() };
        assert_eq!(key, "scenario.irs_position");
    }

    #[test]
    fn experiment_specific_tables_checked() {
        let text = MINIMAL.replace("experiment = \"snr\"", "experiment = \"fig5\"");
        assert!(parse_config_str(&text).unwrap_err().to_string().contains("sweep"));
        let text = format!("{MINIMAL}\n[placement]\nfrom = [1.0, 0.0, 2.0]\nto = [5.0, 0.0, 2.0]\nresolution_m = 1.0\n");
        assert!(parse_config_str(&text).unwrap_err().to_string().contains("placement"));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let text = MINIMAL.replace("kind = \"passive\"", "kind = \"passive\"\nlabel = \"active_irs_total\"");
        assert!(parse_config_str(&text).unwrap_err().to_string().contains("duplicate"));
    }
}
