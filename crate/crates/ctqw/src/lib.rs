//! Transport efficiency of continuous-time quantum walks versus classical
//! random walks on discrete networks.
//!
//! The Hamiltonian of the walk is the graph Laplacian: node degrees on the
//! diagonal, -1 per bond. The library builds the ring, star, arm-star, and
//! dendrimer families, eigendecomposes their Laplacians, clusters degenerate
//! eigenvalues, and evaluates averaged return probabilities, their
//! eigenvalue-only lower bound, long-time averages, and few-level
//! closed-form approximants.
//!
//! With the default `parallel` feature, time-grid evaluation fans out over
//! rayon; disabling it yields an identical sequential path.

pub mod error;
pub mod fit;
pub mod graph;
pub mod grid;
pub mod io;
pub mod spectral;
pub mod transport;

pub use error::{Error, Result};
pub use graph::{
    build_arm_star, build_dendrimer, build_ring, build_star, hamiltonian, load_adjacency,
    Family, HamiltonianMatrix, Network,
};
pub use grid::{GridKind, Observable, TimeGrid, TimeSeries};
pub use spectral::{
    analytic_arm_star_spectrum, analytic_star_spectrum, cluster_degeneracies,
    dendrimer_degeneracy_check, eigendecompose, DegeneracySpectrum, Level, Spectrum,
};
pub use transport::{
    classical_avg_return, classical_pairwise, closed_form_arm_star, closed_form_dendrimer,
    closed_form_star, lta_avg_exact, lta_avg_lower_bound, lta_pairwise, lta_report,
    pairwise_transition, quantum_avg_return, quantum_lower_bound, LtaReport,
};
pub use fit::{fit_envelope_exponent, interference_time_estimate, ScalingFit};
