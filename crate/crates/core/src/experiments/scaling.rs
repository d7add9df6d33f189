use crate::error::{Error, Result};

/// Least-squares slope of `ln(snr)` against `ln(m)` over the
/// `ceil(tail_fraction * n)` points with the largest `m`.
pub fn estimate_scaling_slope(points: &[(f64, f64)], tail_fraction: f64) -> Result<f64> {
    if !(tail_fraction > 0.0 && tail_fraction <= 1.0) {
        return Err(Error::domain(format!("tail_fraction must be in (0, 1], got {tail_fraction}")));
    }
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    let keep = (tail_fraction * pts.len() as f64).ceil() as usize;
    if keep < 3 {
        return Err(Error::domain(format!("slope fit needs at least 3 tail points, got {keep}")));
    }
    let tail = &pts[pts.len() - keep..];
    if let Some((m, s)) = tail.iter().find(|(m, s)| !(*m > 0.0 && *s > 0.0)) {
        return Err(Error::domain(format!("slope fit needs positive M and SNR, got ({m}, {s})")));
    }
    let xs: Vec<f64> = tail.iter().map(|(m, _)| m.ln()).collect();
    let ys: Vec<f64> = tail.iter().map(|(_, s)| s.ln()).collect();
    let n = keep as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx <= 0.0 {
        return Err(Error::domain("degenerate slope fit: all element counts are equal"));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    Ok(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn powers(f: impl Fn(f64) -> f64) -> Vec<(f64, f64)> {
        (3..=12).map(|k| 2f64.powi(k)).map(|m| (m, f(m))).collect()
    }

    #[test]
    fn exact_power_laws() {
        let s = estimate_scaling_slope(&powers(|m| 3.7 * m * m), 0.5).unwrap();
        assert!((s - 2.0).abs() < 1e-12);
        let s = estimate_scaling_slope(&powers(|m| 0.2 * m), 1.0).unwrap();
        assert!((s - 1.0).abs() < 1e-12);
    }

    #[test]
    fn only_tail_is_fitted() {
        // quadratic head, linear tail
        let pts = powers(|m| if m <= 64.0 { m * m } else { 64.0 * m });
        let s = estimate_scaling_slope(&pts, 0.5).unwrap();
        assert!((s - 1.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_inputs() {
        let same = vec![(8.0, 1.0), (8.0, 2.0), (8.0, 3.0)];
        assert!(estimate_scaling_slope(&same, 1.0).is_err());
        assert!(estimate_scaling_slope(&powers(|m| m), 0.2).is_err());
        assert!(estimate_scaling_slope(&powers(|m| m), 0.0).is_err());
        let with_zero = vec![(8.0, 0.0), (16.0, 2.0), (32.0, 3.0)];
        assert!(estimate_scaling_slope(&with_zero, 1.0).is_err());
    }
}
