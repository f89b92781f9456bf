//! # qpredict
//!
//! Density-matrix toolkit for treating measurement-outcome predictability as
//! a quantum resource, alongside coherence and purity.
//!
//! What lives here:
//!
//! * [`linalg`] — dense complex matrices, Hermitian eigendecomposition,
//!   entropies, distances, Kronecker products, partial traces.
//! * [`states`] — density operators, observable eigenbases, Fourier
//!   mutually unbiased partners, Haar sampling, maximally unpredictable
//!   (free) states.
//! * [`gellmann`] — generalized Gell-Mann generators and Bloch-style
//!   decompositions.
//! * [`channels`] — dephasing (non-revealing measurement) channels, their
//!   compositions, and the monitoring maps Λ_ε and Θ_ε as Kraus lists.
//! * [`measures`] — predictability, coherence, and information measures,
//!   the predictability–coherence (in)equalities, witness operators,
//!   contractive-distance monotones, and the free-state minimization.
//! * [`composite`] — joint, conditional, and mutual-information identities
//!   for bipartite systems.
//! * [`circuits`] — non-revealing von Neumann measurement circuits (CNOT
//!   dilations), statevector and density-matrix simulation, shot sampling
//!   with a CNOT-depolarizing + readout-flip noise model.
//! * [`experiments`] — seeded experiment runners emitting deterministic CSV.
//! * [`verify`] — the property suite behind the `verify` subcommand.
//!
//! Every sampled object takes an explicit 64-bit seed, so all experiments
//! and tests are reproducible run to run. See the `examples/` directory for
//! one runnable walkthrough per capability.

pub mod channels;
pub mod circuits;
pub mod composite;
pub mod error;
pub mod experiments;
pub mod gellmann;
pub mod io;
pub mod linalg;
pub mod measures;
pub mod states;
pub mod verify;

pub use channels::{
    check_commuting_condition, dephasing_channel, diagonal_unitary_channel, double_dephasing,
    is_cptp, monitoring_lambda, monitoring_theta, KrausChannel,
};
pub use circuits::{
    build_nrvnm_circuit_1q, build_nrvnm_circuit_nq, circuit_as_channel,
    estimate_measures_from_counts, sample_measurement, simulate_statevector, u_dagger_params,
    u_gate_matrix, Circuit, CountHistogram, Gate, NoiseModel,
};
pub use composite::{
    check_additivity, check_conditional_cr, check_joint_decomposition, conditional_predictability,
    joint_predictability, maximally_entangled, mutual_information_diag, product_basis,
    BipartiteState,
};
pub use error::{Error, Result};
pub use experiments::{
    run_fig4_sweep, run_random_trios, write_records_csv, ExperimentCommand, ExperimentRecord,
    RunConfig,
};
pub use gellmann::{
    gell_mann_basis, gell_mann_decompose, gell_mann_reconstruct, GellMannBasis,
    GellMannCoefficients,
};
pub use linalg::{
    hermitian_eigendecompose, kron, kron_vec, linear_relative_entropy, partial_trace,
    relative_entropy, shannon_entropy_bits, trace_distance, von_neumann_entropy, Complex64,
    ComplexMatrix, Spectrum,
};
pub use measures::{
    check_basis_sum_invariance, check_ccr, check_entropic_cr, check_monotonicity,
    check_pc_equality, check_pc_inequality, coherence_re, incompatibility, information_measure,
    minimize_over_free_states, monotone_from_distance, predictability_linear, predictability_vn,
    predictability_yasin, witness_operator, DistanceKind, FreeStateGrid, MeasureReport,
    MinimizationResult, PcDecomposition,
};
pub use states::{
    b2_basis, fourier_mub_partner, free_state, haar_random_pure, haar_random_state_vector,
    haar_random_unitary, is_free_state, overlap_coefficient, pure_state, random_basis,
    random_density, sub_seed, DensityOperator, ObservableBasis,
};
pub use verify::{run_property_suite, PropertyCheck, VerifyOptions, VerifyReport};
