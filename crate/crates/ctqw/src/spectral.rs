//! Eigendecomposition, degeneracy clustering, and the analytic spectra of the
//! star and arm-star families.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::graph::HamiltonianMatrix;

/// Full eigensystem of a connectivity matrix: eigenvalues ascending with the
/// matching orthonormal eigenvector in each column.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: DMatrix<f64>,
}

impl Spectrum {
    pub fn from_parts(eigenvalues: Vec<f64>, eigenvectors: DMatrix<f64>) -> Self {
        assert_eq!(eigenvalues.len(), eigenvectors.ncols());
        assert_eq!(eigenvectors.nrows(), eigenvectors.ncols());
        Spectrum { eigenvalues, eigenvectors }
    }

    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Column n is the eigenvector of eigenvalue n.
    pub fn eigenvectors(&self) -> &DMatrix<f64> {
        &self.eigenvectors
    }

    pub fn e_max(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }
}

/// One distinct energy level after clustering.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Level {
    pub energy: f64,
    pub degeneracy: usize,
}

/// Distinct eigenvalues with integer degeneracies, energies strictly
/// ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct DegeneracySpectrum {
    levels: Vec<Level>,
    total: usize,
    cluster_tolerance: f64,
}

impl DegeneracySpectrum {
    pub fn from_levels(levels: Vec<Level>, cluster_tolerance: f64) -> Self {
        let total = levels.iter().map(|l| l.degeneracy).sum();
        DegeneracySpectrum { levels, total, cluster_tolerance }
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn cluster_tolerance(&self) -> f64 {
        self.cluster_tolerance
    }

    /// Index ranges into the ascending eigenvalue array, one per level, in
    /// level order. Valid when the spectrum this was clustered from is the
    /// one being indexed.
    pub fn cluster_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::with_capacity(self.levels.len());
        let mut start = 0usize;
        for l in &self.levels {
            out.push(start..start + l.degeneracy);
            start += l.degeneracy;
        }
        out
    }
}

/// Relative clustering tolerance; see `cluster_degeneracies`.
pub fn default_cluster_tolerance(e_max: f64) -> f64 {
    1e-8 * e_max.abs().max(1.0)
}

/// Dense symmetric eigendecomposition, eigenvalues ascending.
pub fn eigendecompose(h: &HamiltonianMatrix) -> Result<Spectrum> {
    let n = h.size();
    let src = h.matrix();
    let a = faer::Mat::<f64>::from_fn(n, n, |i, j| src[(i, j)]);
    let evd = a
        .self_adjoint_eigen(faer::Side::Lower)
        .map_err(|e| Error::Numerical(format!("{n}x{n} connectivity matrix: {e:?}")))?;
    let raw_values = evd.S();
    let raw_vectors = evd.U();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| raw_values[a].total_cmp(&raw_values[b]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| raw_values[i]).collect();
    let mut vectors = DMatrix::<f64>::zeros(n, n);
    for (dst, &src_col) in order.iter().enumerate() {
        for row in 0..n {
            vectors[(row, dst)] = raw_vectors[(row, src_col)];
        }
    }
    Ok(Spectrum::from_parts(eigenvalues, vectors))
}

/// Merge consecutive eigenvalues whose gap is at most `tol` into one level;
/// the representative energy is the mean of the cluster members. `tol = 0`
/// selects the default relative tolerance.
pub fn cluster_degeneracies(s: &Spectrum, tol: f64) -> DegeneracySpectrum {
    let tol = if tol == 0.0 { default_cluster_tolerance(s.e_max()) } else { tol };
    let ev = s.eigenvalues();
    let mut levels = Vec::new();
    let mut start = 0usize;
    for i in 1..=ev.len() {
        if i == ev.len() || ev[i] - ev[i - 1] > tol {
            let members = &ev[start..i];
            let energy = members.iter().sum::<f64>() / members.len() as f64;
            levels.push(Level { energy, degeneracy: members.len() });
            start = i;
        }
    }
    DegeneracySpectrum::from_levels(levels, tol)
}

/// The three-level star spectrum {0, 1 (n-2 fold), n}.
pub fn analytic_star_spectrum(n: usize) -> Result<DegeneracySpectrum> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("star needs n >= 3, got {n}")));
    }
    Ok(DegeneracySpectrum::from_levels(
        vec![
            Level { energy: 0.0, degeneracy: 1 },
            Level { energy: 1.0, degeneracy: n - 2 },
            Level { energy: n as f64, degeneracy: 1 },
        ],
        0.0,
    ))
}

/// The five-level spectrum of a star with arms of length two (n = 2M + 1
/// nodes): {0, (3-sqrt(5))/2, (N+5-sqrt(N^2-6N+25))/4, (3+sqrt(5))/2,
/// (N+5+sqrt(N^2-6N+25))/4} with the golden-ratio pair (N-3)/2-fold
/// degenerate.
pub fn analytic_arm_star_spectrum(n: usize) -> Result<DegeneracySpectrum> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "arm star of arm length 2 needs odd n >= 5, got {n}"
        )));
    }
    let nf = n as f64;
    let root = (nf * nf - 6.0 * nf + 25.0).sqrt();
    let deg_pair = (n - 3) / 2;
    let mut levels = vec![
        Level { energy: 0.0, degeneracy: 1 },
        Level { energy: (3.0 - 5.0_f64.sqrt()) / 2.0, degeneracy: deg_pair },
        Level { energy: (nf + 5.0 - root) / 4.0, degeneracy: 1 },
        Level { energy: (3.0 + 5.0_f64.sqrt()) / 2.0, degeneracy: deg_pair },
        Level { energy: (nf + 5.0 + root) / 4.0, degeneracy: 1 },
    ];
    levels.sort_by(|a, b| a.energy.total_cmp(&b.energy));
    Ok(DegeneracySpectrum::from_levels(levels, 0.0))
}

/// One assertion of the dendrimer degeneracy-structure check.
#[derive(Debug, Clone)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of `dendrimer_degeneracy_check`.
#[derive(Debug, Clone)]
pub struct DendrimerReport {
    pub generations: usize,
    pub items: Vec<CheckItem>,
    /// Observed degeneracies of the levels E = 1 and E = 2 -+ sqrt(3), in
    /// that order, when present.
    pub key_level_degeneracies: Vec<(f64, usize)>,
}

impl DendrimerReport {
    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }
}

fn find_level(ds: &DegeneracySpectrum, energy: f64, tol: f64) -> Option<&Level> {
    ds.levels().iter().find(|l| (l.energy - energy).abs() <= tol)
}

/// Verify the degeneracy structure of a dendrimer spectrum: G + 1 simple
/// levels in total (zero plus G others), the levels 1 and 2 -+ sqrt(3)
/// present, and N - G - 1 eigenvalues in degenerate levels.
pub fn dendrimer_degeneracy_check(
    ds: &DegeneracySpectrum,
    generations: usize,
) -> Result<DendrimerReport> {
    let n_expected = 3 * (1usize << generations) - 2;
    if ds.total() != n_expected {
        return Err(Error::ClusterMismatch { cluster_total: ds.total(), n: n_expected });
    }
    let tol = 1e-6;
    let mut items = Vec::new();

    let simple = ds.levels().iter().filter(|l| l.degeneracy == 1).count();
    let expected_simple = generations + 1;
    items.push(CheckItem {
        name: "simple_level_count".into(),
        passed: simple == expected_simple,
        detail: format!("{simple} simple levels, expected {expected_simple}"),
    });

    let zero = find_level(ds, 0.0, tol);
    items.push(CheckItem {
        name: "unique_zero_level".into(),
        passed: zero.map(|l| l.degeneracy) == Some(1),
        detail: format!("zero level: {zero:?}"),
    });

    let mut key_level_degeneracies = Vec::new();
    for (name, e) in [
        ("level_one_present", 1.0),
        ("level_two_minus_sqrt3_present", 2.0 - 3.0_f64.sqrt()),
        ("level_two_plus_sqrt3_present", 2.0 + 3.0_f64.sqrt()),
    ] {
        let found = find_level(ds, e, tol);
        if let Some(l) = found {
            key_level_degeneracies.push((e, l.degeneracy));
        }
        items.push(CheckItem {
            name: name.into(),
            passed: found.is_some() && (generations < 2 || found.unwrap().degeneracy > 1),
            detail: format!("E={e}: {found:?}"),
        });
    }

    let degenerate_total: usize = ds
        .levels()
        .iter()
        .filter(|l| l.degeneracy > 1)
        .map(|l| l.degeneracy)
        .sum();
    let expected_degenerate = n_expected - generations - 1;
    items.push(CheckItem {
        name: "degenerate_eigenvalue_count".into(),
        passed: degenerate_total == expected_degenerate,
        detail: format!(
            "{degenerate_total} eigenvalues in degenerate levels, expected {expected_degenerate}"
        ),
    });

    Ok(DendrimerReport { generations, items, key_level_degeneracies })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;
    use approx::assert_abs_diff_eq;

    fn spectrum_of(net: &graph::Network) -> Spectrum {
        eigendecompose(&graph::hamiltonian(net)).unwrap()
    }

    #[test]
    fn path_2_eigenvalues() {
        let net = graph::load_adjacency("2\n1 2\n".as_bytes()).unwrap();
        let s = spectrum_of(&net);
        assert_abs_diff_eq!(s.eigenvalues()[0], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.eigenvalues()[1], 2.0, epsilon = 1e-12);
    }

    #[test]
    fn ring_4_eigenvalues() {
        let s = spectrum_of(&graph::build_ring(4).unwrap());
        let expect = [0.0, 2.0, 2.0, 4.0];
        for (a, b) in s.eigenvalues().iter().zip(expect) {
            assert_abs_diff_eq!(*a, b, epsilon = 1e-10);
        }
    }

    #[test]
    fn ring_6_matches_cycle_formula() {
        let s = spectrum_of(&graph::build_ring(6).unwrap());
        let mut expect: Vec<f64> = (0..6)
            .map(|k| 2.0 - 2.0 * (2.0 * std::f64::consts::PI * k as f64 / 6.0).cos())
            .collect();
        expect.sort_by(|a, b| a.total_cmp(b));
        for (a, b) in s.eigenvalues().iter().zip(expect) {
            assert_abs_diff_eq!(*a, b, epsilon = 1e-10);
        }
    }

    #[test]
    fn star_5_eigenvalues() {
        let s = spectrum_of(&graph::build_star(5).unwrap());
        let expect = [0.0, 1.0, 1.0, 1.0, 5.0];
        for (a, b) in s.eigenvalues().iter().zip(expect) {
            assert_abs_diff_eq!(*a, b, epsilon = 1e-10);
        }
    }

    #[test]
    fn spectrum_invariants_hold() {
        for net in [
            graph::build_ring(10).unwrap(),
            graph::build_star(13).unwrap(),
            graph::build_arm_star(4, 3).unwrap(),
            graph::build_dendrimer(3).unwrap(),
        ] {
            let h = graph::hamiltonian(&net);
            let s = spectrum_of(&net);
            let n = s.n();
            assert!(s.eigenvalues().windows(2).all(|w| w[0] <= w[1]));
            assert!(s.eigenvalues()[0].abs() < 1e-10);
            let v = s.eigenvectors();
            let gram = v.transpose() * v;
            let id = DMatrix::<f64>::identity(n, n);
            assert!((gram - id).abs().max() <= 1e-10);
            let lambda = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(
                s.eigenvalues().to_vec(),
            ));
            let recon = v * lambda * v.transpose();
            let h_max = h.matrix().abs().max();
            assert!((recon - h.matrix()).abs().max() <= 1e-8 * h_max);
            // trace identity
            let trace: f64 = s.eigenvalues().iter().sum();
            let deg_sum: f64 = net.degrees().iter().map(|&d| d as f64).sum();
            assert!((trace - deg_sum).abs() <= 1e-10 * deg_sum.max(1.0));
            // uniform ground state up to sign
            let g = v.column(0);
            let target = 1.0 / (n as f64).sqrt();
            let sign = if g[0] >= 0.0 { 1.0 } else { -1.0 };
            assert!(g.iter().all(|&x| (sign * x - target).abs() <= 1e-8));
        }
    }

    #[test]
    fn star_51_clusters_to_three_levels() {
        let s = spectrum_of(&graph::build_star(51).unwrap());
        let ds = cluster_degeneracies(&s, 0.0);
        let levels = ds.levels();
        assert_eq!(levels.len(), 3);
        assert_abs_diff_eq!(levels[0].energy, 0.0, epsilon = 1e-9);
        assert_eq!(levels[0].degeneracy, 1);
        assert_abs_diff_eq!(levels[1].energy, 1.0, epsilon = 1e-9);
        assert_eq!(levels[1].degeneracy, 49);
        assert_abs_diff_eq!(levels[2].energy, 51.0, epsilon = 1e-9);
        assert_eq!(levels[2].degeneracy, 1);
    }

    #[test]
    fn arm_star_101_degeneracies() {
        let s = spectrum_of(&graph::build_arm_star(50, 2).unwrap());
        let ds = cluster_degeneracies(&s, 0.0);
        let degs: Vec<usize> = ds.levels().iter().map(|l| l.degeneracy).collect();
        // ascending energy: 0, (3-sqrt(5))/2, E3, (3+sqrt(5))/2, E2
        assert_eq!(degs, vec![1, 49, 1, 49, 1]);
    }

    #[test]
    fn huge_tolerance_merges_everything() {
        let s = spectrum_of(&graph::build_star(9).unwrap());
        let ds = cluster_degeneracies(&s, 1e12);
        assert_eq!(ds.levels().len(), 1);
        assert_eq!(ds.levels()[0].degeneracy, 9);
    }

    #[test]
    fn clustering_is_idempotent() {
        let s = spectrum_of(&graph::build_arm_star(5, 2).unwrap());
        let ds = cluster_degeneracies(&s, 0.0);
        // re-cluster the representatives: nothing merges further
        let reps: Vec<f64> = ds.levels().iter().map(|l| l.energy).collect();
        for w in reps.windows(2) {
            assert!(w[1] - w[0] > ds.cluster_tolerance());
        }
    }

    #[test]
    fn analytic_star_matches_numeric() {
        for n in [3usize, 5, 51] {
            let analytic = analytic_star_spectrum(n).unwrap();
            let ds = cluster_degeneracies(&spectrum_of(&graph::build_star(n).unwrap()), 0.0);
            assert_eq!(analytic.levels().len(), ds.levels().len());
            for (a, b) in analytic.levels().iter().zip(ds.levels()) {
                assert_abs_diff_eq!(a.energy, b.energy, epsilon = 1e-9);
                assert_eq!(a.degeneracy, b.degeneracy);
            }
        }
        // n = 3: star and path coincide, all levels simple
        let a3 = analytic_star_spectrum(3).unwrap();
        assert!(a3.levels().iter().all(|l| l.degeneracy == 1));
    }

    #[test]
    fn analytic_arm_star_matches_numeric() {
        for (arms, n) in [(3usize, 7usize), (5, 11), (50, 101)] {
            let analytic = analytic_arm_star_spectrum(n).unwrap();
            let ds =
                cluster_degeneracies(&spectrum_of(&graph::build_arm_star(arms, 2).unwrap()), 0.0);
            assert_eq!(analytic.levels().len(), ds.levels().len());
            for (a, b) in analytic.levels().iter().zip(ds.levels()) {
                assert_abs_diff_eq!(a.energy, b.energy, epsilon = 1e-9);
                assert_eq!(a.degeneracy, b.degeneracy);
            }
        }
        assert!(analytic_arm_star_spectrum(6).is_err());
        assert!(analytic_arm_star_spectrum(3).is_err());
    }

    #[test]
    fn arm_star_101_closed_form_values() {
        let ds = analytic_arm_star_spectrum(101).unwrap();
        let energies: Vec<f64> = ds.levels().iter().map(|l| l.energy).collect();
        assert!(energies.iter().any(|&e| (e - 51.0204).abs() < 1e-3));
        assert!(energies.iter().any(|&e| (e - 1.9796).abs() < 1e-3));
    }

    #[test]
    fn arm_star_7_has_golden_pair() {
        let s = spectrum_of(&graph::build_arm_star(3, 2).unwrap());
        let ds = cluster_degeneracies(&s, 0.0);
        let e = (3.0 - 5.0_f64.sqrt()) / 2.0;
        let l = ds
            .levels()
            .iter()
            .find(|l| (l.energy - e).abs() < 1e-9)
            .expect("golden-ratio level present");
        assert_eq!(l.degeneracy, 2);
    }

    #[test]
    fn dendrimer_check_g1() {
        let s = spectrum_of(&graph::build_dendrimer(1).unwrap());
        let ds = cluster_degeneracies(&s, 0.0);
        // star of 4: {0, 1 (x2), 4}
        assert_eq!(ds.levels().len(), 3);
        assert_eq!(ds.levels()[1].degeneracy, 2);
        assert_abs_diff_eq!(ds.levels()[2].energy, 4.0, epsilon = 1e-9);
    }

    #[test]
    fn dendrimer_check_g4() {
        let s = spectrum_of(&graph::build_dendrimer(4).unwrap());
        let ds = cluster_degeneracies(&s, 0.0);
        let report = dendrimer_degeneracy_check(&ds, 4).unwrap();
        assert!(report.all_passed(), "{:#?}", report.items);
        let (_, d1) = report
            .key_level_degeneracies
            .iter()
            .find(|(e, _)| (*e - 1.0).abs() < 1e-9)
            .unwrap();
        assert_eq!(*d1, 12); // 3 * 2^(G-2) at G = 4
    }

    #[test]
    fn dendrimer_check_size_mismatch() {
        let s = spectrum_of(&graph::build_dendrimer(2).unwrap());
        let ds = cluster_degeneracies(&s, 0.0);
        assert!(matches!(
            dendrimer_degeneracy_check(&ds, 3),
            Err(Error::ClusterMismatch { .. })
        ));
    }
}
