//! Time grids and sampled observables.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridKind {
    Linear,
    Logarithmic,
}

/// A strictly increasing sample grid in dimensionless time.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    kind: GridKind,
    t_min: f64,
    t_max: f64,
    points: Vec<f64>,
}

impl TimeGrid {
    pub fn linear(t_min: f64, t_max: f64, n_points: usize) -> Result<Self> {
        Self::validate(t_min, t_max, n_points)?;
        let step = (t_max - t_min) / (n_points - 1) as f64;
        let points = (0..n_points)
            .map(|i| if i == n_points - 1 { t_max } else { t_min + step * i as f64 })
            .collect();
        Ok(TimeGrid { kind: GridKind::Linear, t_min, t_max, points })
    }

    pub fn logarithmic(t_min: f64, t_max: f64, n_points: usize) -> Result<Self> {
        Self::validate(t_min, t_max, n_points)?;
        if t_min <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "logarithmic grid needs t_min > 0, got {t_min}"
            )));
        }
        let (lo, hi) = (t_min.ln(), t_max.ln());
        let step = (hi - lo) / (n_points - 1) as f64;
        let points = (0..n_points)
            .map(|i| if i == n_points - 1 { t_max } else { (lo + step * i as f64).exp() })
            .collect();
        Ok(TimeGrid { kind: GridKind::Logarithmic, t_min, t_max, points })
    }

    fn validate(t_min: f64, t_max: f64, n_points: usize) -> Result<()> {
        if !(t_min < t_max) {
            return Err(Error::InvalidParameter(format!(
                "grid needs t_min < t_max, got [{t_min}, {t_max}]"
            )));
        }
        if t_min < 0.0 {
            return Err(Error::InvalidParameter(format!("grid needs t_min >= 0, got {t_min}")));
        }
        if n_points < 2 {
            return Err(Error::InvalidParameter(format!(
                "grid needs at least 2 points, got {n_points}"
            )));
        }
        Ok(())
    }

    /// Linear grid from 0 to `t_max` with step at most pi / (8 e_max),
    /// oversampling the fastest spectral phase.
    pub fn default_quantum(e_max: f64, t_max: f64) -> Result<Self> {
        let step = std::f64::consts::PI / (8.0 * e_max.max(1e-12));
        let n_points = ((t_max / step).ceil() as usize + 1).max(2);
        Self::linear(0.0, t_max, n_points)
    }

    /// Logarithmic grid over [1e-2, 1e6] with 600 points.
    pub fn default_classical() -> Self {
        Self::logarithmic(1e-2, 1e6, 600).expect("fixed default grid")
    }

    pub fn kind(&self) -> GridKind {
        self.kind
    }

    pub fn t_min(&self) -> f64 {
        self.t_min
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// What a [`TimeSeries`] measures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Observable {
    ClassicalAvgReturn,
    QuantumAvgReturn,
    LowerBound,
    Pairwise { k: usize, j: usize },
    Approximant,
}

impl Observable {
    /// Return-probability observables are 1 at t = 0 and live in [0, 1].
    pub fn is_probability(&self) -> bool {
        true
    }
}

/// An observable sampled on a grid, tagged with the network it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    pub grid: TimeGrid,
    pub values: Vec<f64>,
    pub observable: Observable,
    /// Network family and parameters, e.g. "ring(N=1000)".
    pub label: String,
}

impl TimeSeries {
    pub fn new(grid: TimeGrid, values: Vec<f64>, observable: Observable, label: String) -> Self {
        assert_eq!(grid.len(), values.len());
        TimeSeries { grid, values, observable, label }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// (t, value) pairs in grid order.
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.grid.points().iter().copied().zip(self.values.iter().copied())
    }

    /// Mean of values with t >= t_start.
    pub fn mean_from(&self, t_start: f64) -> Result<f64> {
        let vals: Vec<f64> =
            self.iter().filter(|&(t, _)| t >= t_start).map(|(_, v)| v).collect();
        if vals.len() < 2 {
            return Err(Error::InsufficientData(format!(
                "fewer than 2 samples at t >= {t_start}"
            )));
        }
        Ok(vals.iter().sum::<f64>() / vals.len() as f64)
    }

    /// Mean over the final 80 percent of the window [t_start, t_max].
    pub fn long_time_mean(&self, t_start: f64) -> Result<f64> {
        let effective = t_start + 0.2 * (self.grid.t_max() - t_start);
        self.mean_from(effective)
    }
}
