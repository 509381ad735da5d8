//! Return-probability observables, long-time averages, bounds, and the
//! few-level closed-form approximants.
//!
//! Grid-point evaluation is embarrassingly parallel: each t is independent
//! and there is no cross-point accumulation, so results are identical with
//! or without the `parallel` feature.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph;
use crate::grid::{Observable, TimeGrid, TimeSeries};
use crate::spectral::{self, DegeneracySpectrum, Spectrum};

#[cfg(feature = "parallel")]
fn map_points<F>(points: &[f64], f: F) -> Vec<f64>
where
    F: Fn(f64) -> f64 + Sync + Send,
{
    use rayon::prelude::*;
    points.par_iter().map(|&t| f(t)).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_points<F>(points: &[f64], f: F) -> Vec<f64>
where
    F: Fn(f64) -> f64 + Sync + Send,
{
    points.iter().map(|&t| f(t)).collect()
}

/// Averaged classical return probability: (1/N) sum_levels D_n exp(-E_n t).
pub fn classical_avg_return(ds: &DegeneracySpectrum, grid: &TimeGrid, label: &str) -> TimeSeries {
    let n = ds.total() as f64;
    let levels: Vec<(f64, f64)> =
        ds.levels().iter().map(|l| (l.energy, l.degeneracy as f64)).collect();
    let values = map_points(grid.points(), |t| {
        levels.iter().map(|&(e, d)| d * (-e * t).exp()).sum::<f64>() / n
    });
    TimeSeries::new(grid.clone(), values, Observable::ClassicalAvgReturn, label.into())
}

/// Squared modulus of the averaged return amplitude,
/// |(1/N) sum_levels D_n exp(-i E_n t)|^2. Depends on eigenvalues and
/// degeneracies only.
pub fn quantum_lower_bound(ds: &DegeneracySpectrum, grid: &TimeGrid, label: &str) -> TimeSeries {
    let n = ds.total() as f64;
    let levels: Vec<(f64, f64)> =
        ds.levels().iter().map(|l| (l.energy, l.degeneracy as f64)).collect();
    let values = map_points(grid.points(), |t| {
        let mut re = 0.0;
        let mut im = 0.0;
        for &(e, d) in &levels {
            let (s, c) = (e * t).sin_cos();
            re += d * c;
            im -= d * s;
        }
        (re * re + im * im) / (n * n)
    });
    TimeSeries::new(grid.clone(), values, Observable::LowerBound, label.into())
}

/// Averaged quantum return probability
/// (1/N) sum_j |sum_n exp(-i E_n t) |<j|psi_n>|^2|^2. Requires eigenvectors.
pub fn quantum_avg_return(s: &Spectrum, grid: &TimeGrid, label: &str) -> TimeSeries {
    let n = s.n();
    // weight matrix w[j][n] = <j|psi_n>^2
    let weights = s.eigenvectors().map(|x| x * x);
    let energies = s.eigenvalues().to_vec();
    let values = map_points(grid.points(), |t| {
        let mut cosv = DVector::<f64>::zeros(n);
        let mut sinv = DVector::<f64>::zeros(n);
        for (i, &e) in energies.iter().enumerate() {
            let (sn, cs) = (e * t).sin_cos();
            cosv[i] = cs;
            sinv[i] = sn;
        }
        let re = &weights * cosv;
        let im = &weights * sinv;
        let mut total = 0.0;
        for j in 0..n {
            total += re[j] * re[j] + im[j] * im[j];
        }
        total / n as f64
    });
    TimeSeries::new(grid.clone(), values, Observable::QuantumAvgReturn, label.into())
}

fn check_node(index: usize, n: usize) -> Result<()> {
    if index < 1 || index > n {
        return Err(Error::IndexOutOfRange { index, n });
    }
    Ok(())
}

/// Quantum transition probability |<k| exp(-i H t) |j>|^2 evaluated
/// spectrally.
pub fn pairwise_transition(s: &Spectrum, k: usize, j: usize, t: f64) -> Result<f64> {
    let n = s.n();
    check_node(k, n)?;
    check_node(j, n)?;
    let v = s.eigenvectors();
    let mut amp = Complex64::new(0.0, 0.0);
    for (idx, &e) in s.eigenvalues().iter().enumerate() {
        let overlap = v[(k - 1, idx)] * v[(j - 1, idx)];
        amp += Complex64::from_polar(overlap, -e * t);
    }
    Ok(amp.norm_sqr())
}

/// Classical transition probability <k| exp(-t H) |j>, an entry of the
/// master-equation propagator.
pub fn classical_pairwise(s: &Spectrum, k: usize, j: usize, t: f64) -> Result<f64> {
    let n = s.n();
    check_node(k, n)?;
    check_node(j, n)?;
    let v = s.eigenvectors();
    let mut p = 0.0;
    for (idx, &e) in s.eigenvalues().iter().enumerate() {
        p += v[(k - 1, idx)] * v[(j - 1, idx)] * (-e * t).exp();
    }
    Ok(p)
}

/// Long-time average of the pairwise quantum transition probability,
/// chi_{k,j} = sum_clusters <k|P_c|j>^2 over the cluster projectors P_c.
pub fn lta_pairwise(s: &Spectrum, ds: &DegeneracySpectrum) -> Result<DMatrix<f64>> {
    let n = s.n();
    if ds.total() != n {
        return Err(Error::ClusterMismatch { cluster_total: ds.total(), n });
    }
    let v = s.eigenvectors();
    let mut chi = DMatrix::<f64>::zeros(n, n);
    for range in ds.cluster_ranges() {
        let block = v.columns(range.start, range.len());
        let proj = &block * block.transpose();
        chi.zip_apply(&proj, |c, p| *c += p * p);
    }
    Ok(chi)
}

/// Long-time average of the averaged quantum return probability,
/// (1/N) sum_j sum_clusters <j|P_c|j>^2. Coincides with the eigenstate
/// fourth-moment sum when every eigenvalue is simple.
pub fn lta_avg_exact(s: &Spectrum) -> f64 {
    let ds = spectral::cluster_degeneracies(s, 0.0);
    lta_avg_exact_clustered(s, &ds)
}

/// Same as [`lta_avg_exact`] with an explicit clustering.
pub fn lta_avg_exact_clustered(s: &Spectrum, ds: &DegeneracySpectrum) -> f64 {
    let n = s.n();
    let v = s.eigenvectors();
    let mut total = 0.0;
    for range in ds.cluster_ranges() {
        for j in 0..n {
            let mut diag = 0.0;
            for c in range.clone() {
                diag += v[(j, c)] * v[(j, c)];
            }
            total += diag * diag;
        }
    }
    total / n as f64
}

/// Eigenvalue-only lower bound on the long-time average,
/// (1/N^2) sum_levels D_n^2.
pub fn lta_avg_lower_bound(ds: &DegeneracySpectrum) -> f64 {
    let n = ds.total() as f64;
    let sum: f64 = ds.levels().iter().map(|l| (l.degeneracy as f64).powi(2)).sum();
    sum / (n * n)
}

/// Long-time averages bundled for reporting.
#[derive(Debug, Clone)]
pub struct LtaReport {
    pub chi_pairwise: Option<DMatrix<f64>>,
    pub chi_avg_exact: f64,
    pub chi_avg_lower: f64,
    pub equipartition: f64,
    /// Set when degenerate clusters exist, i.e. when the cluster-projector
    /// form differs from the simple fourth-moment sum.
    pub has_degenerate_clusters: bool,
}

pub fn lta_report(s: &Spectrum, ds: &DegeneracySpectrum, with_pairwise: bool) -> Result<LtaReport> {
    let n = s.n();
    if ds.total() != n {
        return Err(Error::ClusterMismatch { cluster_total: ds.total(), n });
    }
    let chi_pairwise = if with_pairwise { Some(lta_pairwise(s, ds)?) } else { None };
    Ok(LtaReport {
        chi_pairwise,
        chi_avg_exact: lta_avg_exact_clustered(s, ds),
        chi_avg_lower: lta_avg_lower_bound(ds),
        equipartition: 1.0 / n as f64,
        has_degenerate_clusters: ds.levels().iter().any(|l| l.degeneracy > 1),
    })
}

/// Classical and quantum-bound series of a star of `n` nodes evaluated from
/// its three-level spectrum {0, 1 (n-2 fold), n}.
pub fn closed_form_star(n: usize, grid: &TimeGrid) -> Result<(TimeSeries, TimeSeries)> {
    let ds = spectral::analytic_star_spectrum(n)?;
    let label = format!("star(N={n})");
    let classical = classical_avg_return(&ds, grid, &label);
    let mut bound = quantum_lower_bound(&ds, grid, &label);
    bound.observable = Observable::Approximant;
    Ok((classical, bound))
}

/// Two-level approximation of the arm-star lower bound,
/// (1 + cos(sqrt(5) t)) / 2.
pub fn closed_form_arm_star(n: usize, grid: &TimeGrid) -> Result<TimeSeries> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "arm star of arm length 2 needs odd n >= 5, got {n}"
        )));
    }
    let values = map_points(grid.points(), |t| 0.5 * (1.0 + (5.0_f64.sqrt() * t).cos()));
    Ok(TimeSeries::new(
        grid.clone(),
        values,
        Observable::Approximant,
        format!("arm_star(N={n})"),
    ))
}

/// Three-level approximation of the dendrimer lower bound, with the observed
/// common degeneracy of the dominant levels fixing the normalization.
#[derive(Debug, Clone)]
pub struct DendrimerClosedForm {
    pub series: TimeSeries,
    /// (N / D)^2 for the common dominant degeneracy D.
    pub normalization: f64,
    /// Observed (energy, degeneracy) of the levels 1 and 2 -+ sqrt(3).
    pub level_degeneracies: Vec<(f64, usize)>,
    /// Present when the three dominant degeneracies differ by more than one.
    pub warning: Option<String>,
}

/// Evaluate the three-level dendrimer approximant from an already clustered
/// spectrum.
pub fn closed_form_dendrimer_from(
    ds: &DegeneracySpectrum,
    generations: usize,
    grid: &TimeGrid,
) -> Result<DendrimerClosedForm> {
    if generations <= 3 {
        return Err(Error::InvalidParameter(format!(
            "three-level dendrimer approximation needs generations > 3, got {generations}"
        )));
    }
    let n = ds.total();
    let tol = 1e-6;
    let mut level_degeneracies = Vec::new();
    for e in [1.0, 2.0 - 3.0_f64.sqrt(), 2.0 + 3.0_f64.sqrt()] {
        let level = ds
            .levels()
            .iter()
            .find(|l| (l.energy - e).abs() <= tol)
            .ok_or_else(|| Error::InvalidParameter(format!("dominant level E={e} missing")))?;
        level_degeneracies.push((e, level.degeneracy));
    }
    let degs: Vec<usize> = level_degeneracies.iter().map(|&(_, d)| d).collect();
    let (d_min, d_max) = (*degs.iter().min().unwrap(), *degs.iter().max().unwrap());
    let warning = (d_max - d_min > 1).then(|| {
        format!("dominant degeneracies {degs:?} are unequal; three-level approximation inapplicable")
    });
    let d_mean = degs.iter().sum::<usize>() as f64 / 3.0;
    let normalization = (n as f64 / d_mean).powi(2);
    let sqrt3 = 3.0_f64.sqrt();
    let values = map_points(grid.points(), |t| {
        let c3 = (sqrt3 * t).cos();
        let v = (1.0 + 4.0 * c3 * (c3 + t.cos())) / normalization;
        v.max(0.0)
    });
    Ok(DendrimerClosedForm {
        series: TimeSeries::new(
            grid.clone(),
            values,
            Observable::Approximant,
            format!("dendrimer(G={generations})"),
        ),
        normalization,
        level_degeneracies,
        warning,
    })
}

/// Build, decompose, and cluster a dendrimer of `generations` generations,
/// then evaluate the three-level approximant.
pub fn closed_form_dendrimer(generations: usize, grid: &TimeGrid) -> Result<DendrimerClosedForm> {
    if generations <= 3 {
        return Err(Error::InvalidParameter(format!(
            "three-level dendrimer approximation needs generations > 3, got {generations}"
        )));
    }
    let net = graph::build_dendrimer(generations)?;
    let s = spectral::eigendecompose(&graph::hamiltonian(&net))?;
    let ds = spectral::cluster_degeneracies(&s, 0.0);
    closed_form_dendrimer_from(&ds, generations, grid)
}

/// Period of the slowest beat between distinct levels: 2 pi over the
/// smallest gap between adjacent level energies.
pub fn slowest_period(ds: &DegeneracySpectrum) -> f64 {
    let min_gap = ds
        .levels()
        .windows(2)
        .map(|w| w[1].energy - w[0].energy)
        .fold(f64::INFINITY, f64::min);
    2.0 * std::f64::consts::PI / min_gap
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;
    use crate::spectral::{analytic_star_spectrum, cluster_degeneracies, eigendecompose};
    use approx::assert_abs_diff_eq;

    fn spectrum_of(net: &graph::Network) -> Spectrum {
        eigendecompose(&graph::hamiltonian(net)).unwrap()
    }

    fn path2() -> Spectrum {
        spectrum_of(&graph::load_adjacency("2\n1 2\n".as_bytes()).unwrap())
    }

    #[test]
    fn classical_starts_at_one_and_reaches_equipartition() {
        let net = graph::build_star(9).unwrap();
        let ds = cluster_degeneracies(&spectrum_of(&net), 0.0);
        let grid = TimeGrid::linear(0.0, 100.0, 500).unwrap();
        let ts = classical_avg_return(&ds, &grid, "star(N=9)");
        assert_abs_diff_eq!(ts.values[0], 1.0, epsilon = 1e-12);
        assert!(ts.values.windows(2).all(|w| w[1] <= w[0] + 1e-15));
        assert_abs_diff_eq!(*ts.values.last().unwrap(), 1.0 / 9.0, epsilon = 1e-12);
    }

    #[test]
    fn classical_star_matches_three_level_form() {
        let n = 51usize;
        let ds = analytic_star_spectrum(n).unwrap();
        let grid = TimeGrid::logarithmic(1e-2, 1e2, 50).unwrap();
        let ts = classical_avg_return(&ds, &grid, "star");
        for (t, v) in ts.iter() {
            let expect = (1.0 + (n as f64 - 2.0) * (-t).exp() + (-(n as f64) * t).exp())
                / n as f64;
            assert_abs_diff_eq!(v, expect, epsilon = 1e-14);
        }
    }

    #[test]
    fn lower_bound_is_one_at_zero_and_bounded() {
        let net = graph::build_arm_star(4, 2).unwrap();
        let ds = cluster_degeneracies(&spectrum_of(&net), 0.0);
        let grid = TimeGrid::linear(0.0, 40.0, 2000).unwrap();
        let ts = quantum_lower_bound(&ds, &grid, "arm_star");
        assert_abs_diff_eq!(ts.values[0], 1.0, epsilon = 1e-12);
        assert!(ts.values.iter().all(|&v| (-1e-12..=1.0 + 1e-12).contains(&v)));
    }

    #[test]
    fn quantum_avg_return_dominates_bound() {
        for net in [
            graph::build_ring(7).unwrap(),
            graph::build_star(8).unwrap(),
            graph::build_dendrimer(2).unwrap(),
        ] {
            let s = spectrum_of(&net);
            let ds = cluster_degeneracies(&s, 0.0);
            let grid = TimeGrid::linear(0.0, 30.0, 700).unwrap();
            let label = net.family().label();
            let avg = quantum_avg_return(&s, &grid, &label);
            let bound = quantum_lower_bound(&ds, &grid, &label);
            assert_abs_diff_eq!(avg.values[0], 1.0, epsilon = 1e-10);
            for (a, b) in avg.values.iter().zip(&bound.values) {
                assert!(a >= &(b - 1e-10), "avg {a} below bound {b}");
            }
        }
    }

    #[test]
    fn ring_bound_is_exact() {
        for n in [5usize, 6] {
            let net = graph::build_ring(n).unwrap();
            let s = spectrum_of(&net);
            let ds = cluster_degeneracies(&s, 0.0);
            let grid = TimeGrid::linear(0.0, 50.0, 1200).unwrap();
            let avg = quantum_avg_return(&s, &grid, "ring");
            let bound = quantum_lower_bound(&ds, &grid, "ring");
            for (a, b) in avg.values.iter().zip(&bound.values) {
                assert_abs_diff_eq!(*a, *b, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn pairwise_path2_analytic() {
        let s = path2();
        let t = std::f64::consts::FRAC_PI_2;
        assert_abs_diff_eq!(pairwise_transition(&s, 1, 2, t).unwrap(), 1.0, epsilon = 1e-12);
        for &t in &[0.1, 0.7, 2.3] {
            assert_abs_diff_eq!(
                pairwise_transition(&s, 1, 2, t).unwrap(),
                t.sin().powi(2),
                epsilon = 1e-12
            );
            assert_abs_diff_eq!(
                classical_pairwise(&s, 1, 2, t).unwrap(),
                (1.0 - (-2.0 * t).exp()) / 2.0,
                epsilon = 1e-12
            );
        }
        assert_abs_diff_eq!(pairwise_transition(&s, 1, 1, 0.0).unwrap(), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(pairwise_transition(&s, 1, 2, 0.0).unwrap(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn pairwise_rejects_bad_indices() {
        let s = path2();
        assert!(matches!(
            pairwise_transition(&s, 0, 1, 1.0),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            classical_pairwise(&s, 1, 3, 1.0),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn unitarity_and_stochasticity_sums() {
        let net = graph::build_dendrimer(2).unwrap();
        let s = spectrum_of(&net);
        let n = s.n();
        for &t in &[0.0, 0.3, 2.0, 11.0] {
            for j in 1..=n {
                let qsum: f64 =
                    (1..=n).map(|k| pairwise_transition(&s, k, j, t).unwrap()).sum();
                assert_abs_diff_eq!(qsum, 1.0, epsilon = 1e-9);
                let csum: f64 =
                    (1..=n).map(|k| classical_pairwise(&s, k, j, t).unwrap()).sum();
                assert_abs_diff_eq!(csum, 1.0, epsilon = 1e-9);
                assert!((1..=n).all(|k| classical_pairwise(&s, k, j, t).unwrap() >= -1e-12));
            }
        }
    }

    #[test]
    fn lta_pairwise_path2() {
        let s = path2();
        let ds = cluster_degeneracies(&s, 0.0);
        let chi = lta_pairwise(&s, &ds).unwrap();
        for v in chi.iter() {
            assert_abs_diff_eq!(*v, 0.5, epsilon = 1e-12);
        }
    }

    #[test]
    fn lta_pairwise_rows_sum_to_one_and_obey_floor() {
        for net in [graph::build_ring(5).unwrap(), graph::build_star(5).unwrap()] {
            let s = spectrum_of(&net);
            let n = s.n();
            let ds = cluster_degeneracies(&s, 0.0);
            let chi = lta_pairwise(&s, &ds).unwrap();
            let floor = 1.0 / (n * n) as f64;
            for k in 0..n {
                let row_sum: f64 = chi.row(k).iter().sum();
                assert_abs_diff_eq!(row_sum, 1.0, epsilon = 1e-8);
                for j in 0..n {
                    assert!(chi[(k, j)] >= floor - 1e-10);
                }
            }
        }
    }

    #[test]
    fn lta_pairwise_matches_time_average_oracle() {
        // star N=5 core-to-leaf entry vs brute-force averaging of the
        // spectral pairwise probability over a long window
        let s = spectrum_of(&graph::build_star(5).unwrap());
        let ds = cluster_degeneracies(&s, 0.0);
        let chi = lta_pairwise(&s, &ds).unwrap();
        let big_t = 1e4;
        let samples = 200_000;
        let mut avg = 0.0;
        for i in 0..samples {
            let t = big_t * (i as f64 + 0.5) / samples as f64;
            avg += pairwise_transition(&s, 1, 2, t).unwrap();
        }
        avg /= samples as f64;
        // T-convergence: halving the window moves the estimate little
        let mut avg_half = 0.0;
        for i in 0..samples / 2 {
            let t = big_t / 2.0 * (i as f64 + 0.5) / (samples / 2) as f64;
            avg_half += pairwise_transition(&s, 1, 2, t).unwrap();
        }
        avg_half /= (samples / 2) as f64;
        assert!((avg - avg_half).abs() < 5e-4);
        assert_abs_diff_eq!(chi[(0, 1)], avg, epsilon = 1e-3);
    }

    #[test]
    fn lta_exact_path2_and_bounds() {
        let s = path2();
        assert_abs_diff_eq!(lta_avg_exact(&s), 0.5, epsilon = 1e-12);
        for net in [
            graph::build_ring(6).unwrap(),
            graph::build_star(7).unwrap(),
            graph::build_arm_star(3, 2).unwrap(),
        ] {
            let s = spectrum_of(&net);
            let ds = cluster_degeneracies(&s, 0.0);
            let exact = lta_avg_exact(&s);
            let lower = lta_avg_lower_bound(&ds);
            let n = s.n() as f64;
            assert!(exact >= lower - 1e-10);
            assert!(lower >= 1.0 / n - 1e-12);
            assert!(exact <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn lta_lower_bound_values() {
        // all-distinct spectrum collapses to 1/N
        let s = spectrum_of(&graph::load_adjacency("3\n1 2\n2 3\n".as_bytes()).unwrap());
        let ds = cluster_degeneracies(&s, 0.0);
        assert_abs_diff_eq!(lta_avg_lower_bound(&ds), 1.0 / 3.0, epsilon = 1e-12);
        // star degeneracies {1, 49, 1}
        let star = analytic_star_spectrum(51).unwrap();
        assert_abs_diff_eq!(
            lta_avg_lower_bound(&star),
            (1.0 + 49.0 * 49.0 + 1.0) / (51.0 * 51.0),
            epsilon = 1e-12
        );
        // arm-star degeneracies {1, 49, 1, 49, 1}
        let arm = crate::spectral::analytic_arm_star_spectrum(101).unwrap();
        assert_abs_diff_eq!(
            lta_avg_lower_bound(&arm),
            (3.0 + 2.0 * 49.0 * 49.0) / (101.0 * 101.0),
            epsilon = 1e-12
        );
    }

    #[test]
    fn lta_exact_star_51_large() {
        let s = spectrum_of(&graph::build_star(51).unwrap());
        let chi = lta_avg_exact(&s);
        assert!(chi >= (49.0f64 / 51.0).powi(2));
    }

    #[test]
    fn closed_form_star_matches_numeric_bound() {
        let n = 51usize;
        let grid = TimeGrid::linear(0.0, 30.0, 3000).unwrap();
        let (classical, bound) = closed_form_star(n, &grid).unwrap();
        assert_abs_diff_eq!(classical.values[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(bound.values[0], 1.0, epsilon = 1e-12);
        let s = spectrum_of(&graph::build_star(n).unwrap());
        let ds = cluster_degeneracies(&s, 0.0);
        let numeric = quantum_lower_bound(&ds, &grid, "star");
        for (a, b) in bound.values.iter().zip(&numeric.values) {
            assert_abs_diff_eq!(*a, *b, epsilon = 1e-9);
        }
    }

    #[test]
    fn closed_form_arm_star_oscillates() {
        let grid = TimeGrid::linear(0.0, 10.0, 5000).unwrap();
        let ts = closed_form_arm_star(101, &grid).unwrap();
        assert_abs_diff_eq!(ts.values[0], 1.0, epsilon = 1e-12);
        let at_min = ts
            .iter()
            .min_by(|a, b| {
                (a.0 - std::f64::consts::PI / 5.0_f64.sqrt())
                    .abs()
                    .total_cmp(&(b.0 - std::f64::consts::PI / 5.0_f64.sqrt()).abs())
            })
            .unwrap();
        assert!(at_min.1 < 1e-5);
        assert!(closed_form_arm_star(100, &grid).is_err());
    }

    #[test]
    fn closed_form_dendrimer_peak_and_guard() {
        let grid = TimeGrid::linear(0.0, 50.0, 4000).unwrap();
        assert!(closed_form_dendrimer(3, &grid).is_err());
        let cf = closed_form_dendrimer(5, &grid).unwrap();
        assert_abs_diff_eq!(cf.series.values[0], 9.0 / cf.normalization, epsilon = 1e-12);
        assert!(cf.series.values.iter().all(|&v| v >= 0.0));
    }

    #[test]
    fn slowest_period_star() {
        let ds = analytic_star_spectrum(51).unwrap();
        assert_abs_diff_eq!(slowest_period(&ds), 2.0 * std::f64::consts::PI, epsilon = 1e-12);
    }
}
