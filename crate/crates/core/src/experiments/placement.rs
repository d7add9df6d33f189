use rayon::prelude::*;

use crate::channel::{Position3D, Scenario};
use crate::error::{Error, Result};

use super::{evaluate, System};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Placement {
    pub position: Position3D,
    pub snr: f64,
}

/// Optimized SNR at every feasible grid point of `segment`, ordered from the
/// end nearer the transmitter. The IRS altitude is held at `base.irs_pos.z`;
/// grid spacing is at most `resolution` and both ends are included.
pub fn placement_profile(
    base: &Scenario,
    segment: (Position3D, Position3D),
    resolution: f64,
    system: &System,
) -> Result<Vec<Placement>> {
    if !(resolution > 0.0 && resolution.is_finite()) {
        return Err(Error::domain(format!("placement resolution must be positive, got {resolution}")));
    }
    system.validate()?;
    let z = base.irs_pos.z;
    let (mut a, mut b) = segment;
    a.z = z;
    b.z = z;
    if !(a.is_finite() && b.is_finite()) || a == b {
        return Err(Error::domain("placement segment endpoints must be finite and distinct"));
    }
    if b.distance(&base.bs_pos) < a.distance(&base.bs_pos) {
        std::mem::swap(&mut a, &mut b);
    }
    let steps = (a.distance(&b) / resolution).ceil().max(1.0) as usize;
    let grid: Vec<Position3D> = (0..=steps)
        .map(|i| if i == steps { b } else { a.lerp(&b, i as f64 / steps as f64) })
        .filter(|p| *p != base.bs_pos && *p != base.user_pos)
        .collect();
    if grid.is_empty() {
        return Err(Error::domain("placement grid has no feasible point"));
    }
    grid.into_par_iter()
        .map(|position| {
            let scenario = Scenario { irs_pos: position, ..base.clone() };
            evaluate(system, &scenario).map(|e| Placement { position, snr: e.snr })
        })
        .collect()
}

/// Grid argmax of the optimized SNR along `segment`; ties go to the transmitter end.
pub fn optimize_placement(
    base: &Scenario,
    segment: (Position3D, Position3D),
    resolution: f64,
    system: &System,
) -> Result<Placement> {
    let profile = placement_profile(base, segment, resolution, system)?;
    let mut best = profile[0];
    for p in &profile[1..] {
        if p.snr > best.snr {
            best = *p;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::presets;
    use crate::reflection::PowerModel;

    #[test]
    fn passive_optimum_at_segment_end() {
        let base = presets::placement_scenario();
        let seg = presets::placement_segment();
        let p = optimize_placement(&base, seg, 0.5, &System::passive()).unwrap();
        assert!(p.position == seg.0 || p.position == seg.1, "{p:?}");
    }

    #[test]
    fn optimum_beats_both_ends() {
        let base = presets::placement_scenario();
        let seg = presets::placement_segment();
        let sys = System::active_total(presets::IRS_POWER);
        let prof = placement_profile(&base, seg, 1.0, &sys).unwrap();
        let best = optimize_placement(&base, seg, 1.0, &sys).unwrap();
        assert!(best.snr >= prof.first().unwrap().snr);
        assert!(best.snr >= prof.last().unwrap().snr);
    }

    #[test]
    fn noiseless_amplifier_favours_user_end() {
        // without amplification noise the active SNR is P_a M β₂ / σ₀²-like:
        // it grows monotonically towards the user
        let mut base = presets::placement_scenario();
        base.noise.amplification = 0.0;
        let seg = presets::placement_segment();
        let sys = System::new("a", super::super::SystemKind::Irs(PowerModel::ActiveTotal { budget: 0.01 }));
        let p = optimize_placement(&base, seg, 0.5, &sys).unwrap();
        assert_eq!(p.position, seg.1);
    }

    #[test]
    fn coincident_points_skipped_and_bad_inputs_rejected() {
        let base = presets::placement_scenario();
        let seg = (Position3D::new(0.0, 0.0, 2.0), Position3D::new(2.0, 0.0, 2.0));
        let prof = placement_profile(&base, seg, 1.0, &System::passive()).unwrap();
        assert_eq!(prof.len(), 2);
        assert!(placement_profile(&base, seg, 0.0, &System::passive()).is_err());
        let degenerate = (Position3D::new(3.0, 0.0, 0.0), Position3D::new(3.0, 0.0, 5.0));
        assert!(placement_profile(&base, degenerate, 1.0, &System::passive()).is_err());
        let only_bs = (Position3D::new(0.0, 0.0, 2.0), Position3D::new(1e-3, 0.0, 2.0));
        assert_eq!(placement_profile(&base, only_bs, 1.0, &System::passive()).unwrap().len(), 1);
    }
}
