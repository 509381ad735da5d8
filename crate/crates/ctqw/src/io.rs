//! Flat-file output: CSV series and spectra, key/value reports.
//!
//! Floats are written with 17 significant digits so every file round-trips
//! to the bit. Probability series are clipped to [0, 1] here and nowhere
//! else, so invariant violations stay visible inside computations.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::grid::{GridKind, Observable, TimeGrid, TimeSeries};
use crate::spectral::{DegeneracySpectrum, Spectrum};
use crate::transport::LtaReport;

/// 17 significant decimal digits: enough to reproduce any f64 exactly.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_timeseries_csv<W: Write>(w: &mut W, ts: &TimeSeries) -> Result<()> {
    writeln!(w, "t,value")?;
    let clip = ts.observable.is_probability();
    for (t, v) in ts.iter() {
        let v = if clip { v.clamp(0.0, 1.0) } else { v };
        writeln!(w, "{},{}", fmt_f64(t), fmt_f64(v))?;
    }
    Ok(())
}

/// Read back a "t,value" CSV as written by [`write_timeseries_csv`].
pub fn read_timeseries_csv<R: BufRead>(r: R, observable: Observable, label: &str) -> Result<TimeSeries> {
    let mut times = Vec::new();
    let mut values = Vec::new();
    for (idx, line) in r.lines().enumerate() {
        let line = line?;
        if idx == 0 {
            if line.trim() != "t,value" {
                return Err(Error::Parse { line: 1, msg: format!("bad header {line:?}") });
            }
            continue;
        }
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let (a, b) = trimmed.split_once(',').ok_or_else(|| Error::Parse {
            line: idx + 1,
            msg: format!("expected \"t,value\", got {trimmed:?}"),
        })?;
        let parse = |s: &str| {
            s.trim().parse::<f64>().map_err(|_| Error::Parse {
                line: idx + 1,
                msg: format!("bad float {s:?}"),
            })
        };
        times.push(parse(a)?);
        values.push(parse(b)?);
    }
    if times.len() < 2 {
        return Err(Error::Parse { line: 0, msg: "series needs at least 2 rows".into() });
    }
    let grid = reconstruct_grid(&times)?;
    Ok(TimeSeries::new(grid, values, observable, label.into()))
}

fn reconstruct_grid(times: &[f64]) -> Result<TimeGrid> {
    if !times.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::Parse { line: 0, msg: "times not strictly increasing".into() });
    }
    let n = times.len();
    let lin = TimeGrid::linear(times[0], times[n - 1], n);
    if let Ok(g) = lin {
        if g.points().iter().zip(times).all(|(a, b)| (a - b).abs() <= 1e-12 * b.abs().max(1.0)) {
            return Ok(g);
        }
    }
    if times[0] > 0.0 {
        let g = TimeGrid::logarithmic(times[0], times[n - 1], n)?;
        if g.points().iter().zip(times).all(|(a, b)| (a - b).abs() <= 1e-9 * b.abs().max(1.0)) {
            return Ok(g);
        }
    }
    Err(Error::Parse { line: 0, msg: "grid is neither linear nor logarithmic".into() })
}

pub fn write_spectrum_csv<W: Write>(w: &mut W, s: &Spectrum, with_vectors: bool) -> Result<()> {
    if with_vectors {
        let cols: Vec<String> = (1..=s.n()).map(|j| format!("v{j}")).collect();
        writeln!(w, "index,energy,{}", cols.join(","))?;
    } else {
        writeln!(w, "index,energy")?;
    }
    let v = s.eigenvectors();
    for (i, &e) in s.eigenvalues().iter().enumerate() {
        if with_vectors {
            let comps: Vec<String> = (0..s.n()).map(|j| fmt_f64(v[(j, i)])).collect();
            writeln!(w, "{},{},{}", i + 1, fmt_f64(e), comps.join(","))?;
        } else {
            writeln!(w, "{},{}", i + 1, fmt_f64(e))?;
        }
    }
    Ok(())
}

pub fn write_degeneracy_csv<W: Write>(w: &mut W, ds: &DegeneracySpectrum) -> Result<()> {
    writeln!(w, "energy,degeneracy")?;
    for l in ds.levels() {
        writeln!(w, "{},{}", fmt_f64(l.energy), l.degeneracy)?;
    }
    Ok(())
}

/// Flat JSON object with the long-time averages; `pairwise_file` names the
/// separately written matrix when one was requested.
pub fn write_lta_report<W: Write>(
    w: &mut W,
    report: &LtaReport,
    verdict: Option<&str>,
    pairwise_file: Option<&str>,
) -> Result<()> {
    writeln!(w, "{{")?;
    writeln!(w, "  \"chi_avg_exact\": {},", fmt_f64(report.chi_avg_exact))?;
    writeln!(w, "  \"chi_avg_lower\": {},", fmt_f64(report.chi_avg_lower))?;
    writeln!(w, "  \"equipartition\": {},", fmt_f64(report.equipartition))?;
    writeln!(
        w,
        "  \"degenerate_clusters\": {},",
        report.has_degenerate_clusters
    )?;
    if let Some(v) = verdict {
        writeln!(w, "  \"verdict\": \"{v}\",")?;
    }
    match pairwise_file {
        Some(f) => writeln!(w, "  \"pairwise_matrix_file\": \"{f}\"")?,
        None => writeln!(w, "  \"pairwise_matrix_file\": null")?,
    }
    writeln!(w, "}}")?;
    Ok(())
}

pub fn write_pairwise_csv<W: Write>(w: &mut W, chi: &nalgebra::DMatrix<f64>) -> Result<()> {
    for k in 0..chi.nrows() {
        let row: Vec<String> = (0..chi.ncols()).map(|j| fmt_f64(chi[(k, j)])).collect();
        writeln!(w, "{}", row.join(","))?;
    }
    Ok(())
}

/// Grid spec string used on the command line: "lin|log:t_min:t_max:points".
pub fn parse_grid_spec(spec: &str) -> Result<TimeGrid> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 4 {
        return Err(Error::InvalidParameter(format!(
            "grid spec must be kind:t_min:t_max:points, got {spec:?}"
        )));
    }
    let parse_f = |s: &str| {
        s.parse::<f64>()
            .map_err(|_| Error::InvalidParameter(format!("bad grid number {s:?}")))
    };
    let t_min = parse_f(parts[1])?;
    let t_max = parse_f(parts[2])?;
    let n: usize = parts[3]
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("bad grid point count {:?}", parts[3])))?;
    match parts[0] {
        "lin" => TimeGrid::linear(t_min, t_max, n),
        "log" => TimeGrid::logarithmic(t_min, t_max, n),
        other => Err(Error::InvalidParameter(format!("grid kind must be lin or log, got {other:?}"))),
    }
}

pub fn grid_spec_string(grid: &TimeGrid) -> String {
    let kind = match grid.kind() {
        GridKind::Linear => "lin",
        GridKind::Logarithmic => "log",
    };
    format!("{kind}:{}:{}:{}", grid.t_min(), grid.t_max(), grid.len())
}
