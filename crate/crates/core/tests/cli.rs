use std::path::{Path, PathBuf};
use std::process::Command;

use active_irs::config::parse_config;

fn exe() -> &'static str {
    env!("CARGO_BIN_EXE_active-irs")
}

fn preset(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("presets").join(name)
}

fn run(sub: &str, cfg: &Path, out: &Path) -> std::process::Output {
    Command::new(exe())
        .args([sub, "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()])
        .output()
        .unwrap()
}

#[test]
fn fig5_writes_four_systems_per_distance() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fig5.csv");
    let o = run("fig5", &preset("fig5.cfg"), &out);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let stdout = String::from_utf8(o.stdout).unwrap();
    assert!(stdout.starts_with("fig5: 68 rows"), "{stdout}");
    let csv = std::fs::read_to_string(&out).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("sweep_value,system,snr_db,rate_bps_hz"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 17 * 4);
    for chunk in rows.chunks(4) {
        let systems: Vec<&str> = chunk.iter().map(|r| r[1]).collect();
        assert_eq!(systems, ["active_irs", "passive_irs", "relay_full_duplex", "relay_half_duplex"]);
        assert!(chunk.iter().all(|r| r[0] == chunk[0][0]));
    }
}

#[test]
fn fig6_reports_crossover() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fig6.csv");
    let o = run("fig6", &preset("fig6.cfg"), &out);
    assert!(o.status.success());
    let stdout = String::from_utf8(o.stdout).unwrap();
    assert!(stdout.contains("crossover M*=256"), "{stdout}");
    let csv = std::fs::read_to_string(&out).unwrap();
    assert_eq!(csv.lines().count(), 1 + 10 * 3);
}

#[test]
fn placement_writes_single_line() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.csv");
    let o = run("placement", &preset("placement.cfg"), &out);
    assert!(o.status.success());
    let csv = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], "x_m,y_m,z_m,system,snr_db,rate_bps_hz");
    assert!(!lines[1].ends_with(',') && lines[1].split(',').count() == 6);
}

#[test]
fn snr_and_quantize_presets_run() {
    let dir = tempfile::tempdir().unwrap();
    for (sub, cfg, rows) in [("snr", "snr.cfg", 5), ("quantize-sweep", "quantize.cfg", 8)] {
        let out = dir.path().join(format!("{sub}.csv"));
        let o = run(sub, &preset(cfg), &out);
        assert!(o.status.success(), "{sub}: {}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(std::fs::read_to_string(&out).unwrap().lines().count(), 1 + rows);
    }
}

#[test]
fn identical_config_gives_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    for (sub, cfg) in [("fig5", "fig5.cfg"), ("fig6", "fig6.cfg"), ("placement", "placement.cfg")] {
        let a = dir.path().join("a.csv");
        let b = dir.path().join("b.csv");
        assert!(run(sub, &preset(cfg), &a).status.success());
        assert!(run(sub, &preset(cfg), &b).status.success());
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap(), "{sub}");
    }
}

#[test]
fn presets_round_trip_through_echo() {
    for cfg in ["fig5.cfg", "fig6.cfg", "placement.cfg", "snr.cfg", "quantize.cfg"] {
        let c = parse_config(preset(cfg)).unwrap();
        let again = active_irs::config::parse_config_str(&c.echo()).unwrap();
        assert_eq!(c, again, "{cfg}");
    }
}

#[test]
fn presets_encode_default_parameters() {
    let c = parse_config(preset("fig5.cfg")).unwrap();
    assert_eq!(c.scenario.path_loss.beta0, 1e-3);
    assert_eq!(c.scenario.path_loss.kappa, 2.0);
    assert_eq!(c.scenario.noise.receiver, 1e-11);
    assert_eq!(c.scenario.noise.amplification, 1e-11);
    assert_eq!(c.scenario.num_elements, 128);
    assert_eq!(c.scenario.bs_pos.z, 2.0);
    let active_irs::config::Experiment::RateVsDistance(spec) = &c.experiment else { panic!() };
    assert_eq!(spec.systems, active_irs::experiments::presets::fig5_systems()
        .into_iter()
        .zip(["active_irs", "passive_irs", "relay_full_duplex", "relay_half_duplex"])
        .map(|(mut s, l)| { s.label = l.into(); s })
        .collect::<Vec<_>>());
}

#[test]
fn errors_exit_nonzero_with_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.csv");

    let o = run("fig6", &preset("fig5.cfg"), &out);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("fig5"));

    let bad = dir.path().join("bad.cfg");
    let text = std::fs::read_to_string(preset("fig5.cfg")).unwrap().replace("num_elements = 128", "num_elements = 128\ncolour = 3");
    std::fs::write(&bad, text).unwrap();
    let o = run("fig5", &bad, &out);
    assert!(!o.status.success());
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("colour") && err.contains("line 14"), "{err}");

    let o = run("fig5", &dir.path().join("missing.cfg"), &out);
    assert!(!o.status.success());
    assert!(!out.exists());
}
