//! Experiment dispatch and result files.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use crate::channel::synthesize_los;
use crate::config::{Experiment, RunConfig};
use crate::error::{Error, Result};
use crate::experiments::{
    crossovers, evaluate, optimize_placement, run_rate_vs_distance, run_snr_vs_elements, SweepResult, SweepRow,
    SystemKind,
};
use crate::reflection::{achievable_rate, optimize, quantize_reflection, received_snr, PowerModel, QuantizationSpec};

pub const CSV_HEADER: &str = "sweep_value,system,snr_db,rate_bps_hz";
pub const PLACEMENT_HEADER: &str = "x_m,y_m,z_m,system,snr_db,rate_bps_hz";

#[derive(Debug, Clone)]
pub struct RunSummary {
    pub experiment: &'static str,
    pub rows: usize,
    pub output: PathBuf,
    pub elapsed: Duration,
    /// Experiment-specific detail (crossover, optimal position, ...).
    pub note: Option<String>,
}

impl fmt::Display for RunSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} rows -> {} in {:.3}s",
            self.experiment,
            self.rows,
            self.output.display(),
            self.elapsed.as_secs_f64()
        )?;
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

/// Formats like C's `%.9g`.
pub fn format_sig9(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.8e}", x);
    let (mantissa, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    let trim = |s: &str| -> String {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s.to_string()
        }
    };
    if (-5..9).contains(&exp) {
        trim(&format!("{:.*}", (8 - exp) as usize, x))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim(mantissa), sign, exp.abs())
    }
}

pub fn snr_db(snr: f64) -> f64 {
    10.0 * snr.log10()
}

pub fn render_rows(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            format_sig9(r.value),
            r.system,
            format_sig9(snr_db(r.snr)),
            format_sig9(r.rate)
        ));
    }
    out
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let io = |source| Error::Io { path: path.display().to_string(), source };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.flush().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

/// Result file body, row count and summary note for a configuration.
pub fn execute(config: &RunConfig) -> Result<(String, usize, Option<String>)> {
    let scenario = &config.scenario;
    match &config.experiment {
        Experiment::RateVsDistance(spec) => {
            let r = run_rate_vs_distance(spec, scenario)?;
            Ok((render_rows(&r.rows), r.rows.len(), None))
        }
        Experiment::SnrVsElements(spec) => {
            let r = run_snr_vs_elements(spec, scenario)?;
            Ok((render_rows(&r.rows), r.rows.len(), crossover_note(&r, spec)))
        }
        Experiment::SinglePoint { systems } => {
            let rows = systems
                .iter()
                .map(|s| {
                    let e = evaluate(s, scenario)?;
                    Ok(SweepRow { value: scenario.num_elements as f64, system: s.label.clone(), snr: e.snr, rate: e.rate })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((render_rows(&rows), rows.len(), None))
        }
        Experiment::Placement { segment, resolution, system } => {
            let best = optimize_placement(scenario, *segment, *resolution, system)?;
            let p = best.position;
            let rate = achievable_rate(best.snr)?;
            let body = format!(
                "{PLACEMENT_HEADER}\n{},{},{},{},{},{}\n",
                format_sig9(p.x),
                format_sig9(p.y),
                format_sig9(p.z),
                system.label,
                format_sig9(snr_db(best.snr)),
                format_sig9(rate)
            );
            let note = format!(
                "optimum at ({}, {}, {}) m, SNR {} dB",
                format_sig9(p.x),
                format_sig9(p.y),
                format_sig9(p.z),
                format_sig9(snr_db(best.snr))
            );
            Ok((body, 1, Some(note)))
        }
        Experiment::QuantizeSweep { system, phase_bits, amp_levels, alpha_max } => {
            let SystemKind::Irs(pm) = &system.kind else {
                return Err(Error::domain("quantize-sweep needs an IRS system"));
            };
            let noise = pm.effective_noise(&scenario.noise);
            let ch = synthesize_los(scenario)?;
            let refl = optimize(&ch, pm, scenario.transmit_power, &noise)?;
            let continuous = received_snr(&ch, &refl, scenario.transmit_power, &noise)?;
            let top = alpha_max.unwrap_or_else(|| refl.amplitudes.iter().cloned().fold(0.0, f64::max));
            let top = if top > 0.0 { top } else { 1.0 };
            let mut rows = Vec::with_capacity(phase_bits.len());
            for &bits in phase_bits {
                let spec = QuantizationSpec { phase_bits: bits, amp_levels: *amp_levels, alpha_max: top };
                let q = quantize_reflection(&refl, &spec)?;
                let snr = received_snr(&ch, &q, scenario.transmit_power, &noise)?;
                rows.push(SweepRow { value: bits as f64, system: system.label.clone(), snr, rate: achievable_rate(snr)? });
            }
            let note = format!("continuous SNR {} dB", format_sig9(snr_db(continuous)));
            Ok((render_rows(&rows), rows.len(), Some(note)))
        }
    }
}

fn crossover_note(r: &SweepResult, spec: &crate::experiments::SweepSpec) -> Option<String> {
    let find = |f: fn(&PowerModel) -> bool| {
        spec.systems
            .iter()
            .find(|s| matches!(&s.kind, SystemKind::Irs(pm) if f(pm)))
            .map(|s| s.label.clone())
    };
    let ftp = find(|pm| matches!(pm, PowerModel::ActiveTotal { .. }))?;
    let fpp = find(|pm| matches!(pm, PowerModel::ActivePerElement { .. }))?;
    let xs = crossovers(r, &ftp, &fpp);
    let list = if xs.is_empty() {
        "none".to_string()
    } else {
        xs.iter().map(|x| format_sig9(*x)).collect::<Vec<_>>().join(";")
    };
    Some(format!("crossover M*={list} ({fpp} passes {ftp})"))
}

/// Runs the configured experiment and writes its results file.
pub fn run(config: &RunConfig, out: Option<&Path>) -> Result<RunSummary> {
    let start = Instant::now();
    let output = out.map(Path::to_path_buf).unwrap_or_else(|| config.default_output());
    let (body, rows, note) = execute(config)?;
    write_atomic(&output, &body)?;
    Ok(RunSummary { experiment: config.kind.name(), rows, output, elapsed: start.elapsed(), note })
}
