//! Envelope extraction, log-log power-law fitting, and the interference-time
//! estimate.

use crate::error::{Error, Result};
use crate::grid::{Observable, TimeSeries};

/// Least-squares power-law slope of an envelope on log-log axes.
#[derive(Debug, Clone, Copy)]
pub struct ScalingFit {
    pub exponent: f64,
    pub window: (f64, f64),
    /// Root-mean-square residual of log(value) about the fitted line.
    pub residual: f64,
    pub n_points: usize,
}

/// Strict local maxima of a series: value greater than both neighbours,
/// ties resolved by keeping the earliest point.
pub(crate) fn local_maxima(ts: &TimeSeries) -> Vec<(f64, f64)> {
    let t = ts.grid.points();
    let v = &ts.values;
    let mut out = Vec::new();
    for i in 1..v.len().saturating_sub(1) {
        if v[i] > v[i - 1] && v[i] > v[i + 1] {
            out.push((t[i], v[i]));
        }
    }
    out
}

/// Fit log(value) = a + exponent * log(t) over envelope points inside the
/// window. For the classical (monotone) observable every point is an
/// envelope point; oscillatory observables use strict local maxima only.
pub fn fit_envelope_exponent(ts: &TimeSeries, window: (f64, f64)) -> Result<ScalingFit> {
    let (t_lo, t_hi) = window;
    if t_lo >= t_hi || t_lo < ts.grid.t_min() || t_hi > ts.grid.t_max() {
        return Err(Error::InvalidParameter(format!(
            "window [{t_lo}, {t_hi}] outside grid [{}, {}]",
            ts.grid.t_min(),
            ts.grid.t_max()
        )));
    }
    let envelope: Vec<(f64, f64)> = match ts.observable {
        Observable::ClassicalAvgReturn => ts.iter().collect(),
        _ => local_maxima(ts),
    };
    let points: Vec<(f64, f64)> = envelope
        .into_iter()
        .filter(|&(t, v)| t >= t_lo && t <= t_hi && t > 0.0 && v > 0.0)
        .collect();
    if points.len() < 5 {
        return Err(Error::InsufficientData(format!(
            "{} envelope points in [{t_lo}, {t_hi}], need at least 5",
            points.len()
        )));
    }
    let n = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(t, v) in &points {
        let (x, y) = (t.ln(), v.ln());
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    let denom = n * sxx - sx * sx;
    let exponent = (n * sxy - sx * sy) / denom;
    let intercept = (sy - exponent * sx) / n;
    let mut ss = 0.0;
    for &(t, v) in &points {
        let r = v.ln() - (intercept + exponent * t.ln());
        ss += r * r;
    }
    Ok(ScalingFit {
        exponent,
        window,
        residual: (ss / n).sqrt(),
        n_points: points.len(),
    })
}

/// Time at which a decaying oscillatory envelope bottoms out and begins
/// fluctuating about its long-time mean: the earliest local maximum whose
/// smoothed envelope value is within 10% of the smoothed minimum, required
/// to sit within twice the long-time mean after a genuine decay phase.
/// Smoothing over neighbouring maxima suppresses the sampling noise that
/// would otherwise make the minimum an arbitrary late plateau point.
pub fn interference_time_estimate(ts: &TimeSeries) -> Result<f64> {
    let maxima = local_maxima(ts);
    if maxima.len() < 3 {
        return Err(Error::NoPlateau("fewer than 3 local maxima".into()));
    }
    let tail_start = ts.values.len() - ts.values.len() / 5;
    let long_time_mean =
        ts.values[tail_start..].iter().sum::<f64>() / (ts.values.len() - tail_start) as f64;
    let first = maxima[0].1;
    let v_min = maxima.iter().map(|&(_, v)| v).fold(f64::INFINITY, f64::min);
    if first < 4.0 * v_min {
        return Err(Error::NoPlateau(format!(
            "envelope never decays: first maximum {first:.3e}, minimum {v_min:.3e}"
        )));
    }
    if v_min > 2.0 * long_time_mean {
        return Err(Error::NoPlateau(format!(
            "envelope minimum {v_min:.3e} never reaches twice the long-time mean {long_time_mean:.3e}"
        )));
    }
    let w = (maxima.len() / 10).clamp(1, 15);
    let smoothed: Vec<(f64, f64)> = (0..maxima.len())
        .map(|i| {
            let lo = i.saturating_sub(w / 2);
            let hi = (lo + w).min(maxima.len());
            let mean = maxima[lo..hi].iter().map(|&(_, v)| v).sum::<f64>() / (hi - lo) as f64;
            (maxima[i].0, mean)
        })
        .collect();
    let s_min = smoothed.iter().map(|&(_, v)| v).fold(f64::INFINITY, f64::min);
    let (t_est, _) = smoothed
        .iter()
        .copied()
        .find(|&(_, v)| v <= 1.1 * s_min)
        .expect("minimum is itself a smoothed point");
    Ok(t_est)
}

/// Pearson correlation coefficient of two equal-length samples.
pub fn pearson_correlation(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() || a.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "correlation needs two equal samples of length >= 2, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let n = a.len() as f64;
    let (ma, mb) = (a.iter().sum::<f64>() / n, b.iter().sum::<f64>() / n);
    let (mut cov, mut va, mut vb) = (0.0, 0.0, 0.0);
    for (&x, &y) in a.iter().zip(b) {
        cov += (x - ma) * (y - mb);
        va += (x - ma) * (x - ma);
        vb += (y - mb) * (y - mb);
    }
    if va == 0.0 || vb == 0.0 {
        return Err(Error::InsufficientData("constant sample has no correlation".into()));
    }
    Ok(cov / (va * vb).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{Observable, TimeGrid, TimeSeries};

    fn series(kind: Observable, t_max: f64, n: usize, f: impl Fn(f64) -> f64) -> TimeSeries {
        let grid = TimeGrid::linear(0.01, t_max, n).unwrap();
        let values = grid.points().iter().map(|&t| f(t)).collect();
        TimeSeries::new(grid, values, kind, "synthetic".into())
    }

    #[test]
    fn recovers_pure_power_law() {
        let ts = series(Observable::ClassicalAvgReturn, 200.0, 4000, |t| t.powf(-0.5));
        let fit = fit_envelope_exponent(&ts, (10.0, 100.0)).unwrap();
        assert!((fit.exponent + 0.5).abs() < 1e-10);
        assert!(fit.residual < 1e-10);
    }

    #[test]
    fn constant_series_fits_zero_exponent() {
        let ts = series(Observable::ClassicalAvgReturn, 200.0, 1000, |_| 0.42);
        let fit = fit_envelope_exponent(&ts, (10.0, 100.0)).unwrap();
        assert!(fit.exponent.abs() <= 1e-12);
    }

    #[test]
    fn oscillatory_envelope_slope() {
        // maxima of cos^2(5t)/t trace 1/t
        let ts = series(Observable::LowerBound, 300.0, 60_000, |t| {
            (5.0 * t).cos().powi(2) / t
        });
        let fit = fit_envelope_exponent(&ts, (10.0, 100.0)).unwrap();
        assert!((fit.exponent + 1.0).abs() < 0.02, "exponent {}", fit.exponent);
    }

    #[test]
    fn too_few_peaks_is_an_error() {
        let ts = series(Observable::LowerBound, 200.0, 2000, |t| (0.01 * t).cos().powi(2));
        assert!(matches!(
            fit_envelope_exponent(&ts, (10.0, 100.0)),
            Err(Error::InsufficientData(_))
        ));
    }

    #[test]
    fn window_outside_grid_rejected() {
        let ts = series(Observable::ClassicalAvgReturn, 50.0, 100, |t| t);
        assert!(fit_envelope_exponent(&ts, (10.0, 100.0)).is_err());
    }

    #[test]
    fn interference_time_on_synthetic_decay_plus_plateau() {
        // envelope 1/t until t = 40, then flat fluctuation about 0.025
        let ts = series(Observable::LowerBound, 400.0, 80_000, |t| {
            let env = (1.0 / t).max(0.025);
            env * (7.0 * t).cos().powi(2)
        });
        let est = interference_time_estimate(&ts).unwrap();
        assert!((20.0..80.0).contains(&est), "estimate {est}");
    }

    #[test]
    fn no_decay_means_no_plateau() {
        let ts = series(Observable::LowerBound, 100.0, 20_000, |t| {
            0.9 + 0.05 * (3.0 * t).cos()
        });
        assert!(matches!(
            interference_time_estimate(&ts),
            Err(Error::NoPlateau(_))
        ));
    }
}
