//! Predictability of local measurements on two-qubit states.
//!
//! Given a bipartite qubit state in Fano form (Bloch vectors t_A, t_B and
//! correlation matrix C), this crate answers: how well can Bob predict the
//! outcome of Alice's spin measurement from his own, and which measurement
//! should he pick? It provides
//!
//! * analytic minimizers of the Bayes risk and the inference variance over
//!   Bob's direction, with brute-force sphere-search oracles;
//! * Haar averages of both minimized errors over Alice's observables
//!   (Carlson R_G closed forms plus a Fibonacci-lattice quadrature
//!   fallback) and the local thresholds 1/4 and 1/6;
//! * steering (CJWR F₂/F₃ and the all-observables ellipsoid criterion),
//!   PPT entanglement and Horodecki CHSH nonlocality checks;
//! * key-rate bounds for entanglement-based QKD: the BB84 Devetak-Winter
//!   expression and a Bayes-risk-optimized modified protocol;
//! * resource-state families: Bell-diagonal states, classical-quantum
//!   states, Bell pairs under local amplitude damping, and leading-order
//!   top-antitop spin-correlation states.

pub mod channels;
pub mod correlations;
pub mod elliptic;
pub mod error;
pub mod haar;
pub mod linalg;
pub mod predictability;
pub mod qkd;
pub mod sphere;
pub mod state;
pub mod ttbar;

pub use error::{Error, Result};
pub use linalg::{Mat3, Vec3};
pub use state::{
    bell_diagonal, classical_quantum, density_matrix, from_density_matrix, local_rotate,
    random_direction, random_state, singular_values, validate, Bell, BlochVector, CorrMatrix,
    DensityMatrix4, FanoState, MeasurementDirection, ValidityReport,
};
pub use predictability::{
    bayes_risk, brute_force_min, conditional_expectation, conditional_state, inference_variance,
    joint_prob, min_bayes_risk, min_inference_variance, qber, steering_ellipsoid_center, Branch,
    ErrorMeasure, JointDist22, PredictabilityResult,
};
pub use elliptic::{carlson_rd, carlson_rf, carlson_rg};
pub use haar::{
    avg_min_bayes_risk, avg_min_bayes_risk_local, avg_min_bayes_risk_with_n,
    avg_min_inference_variance, avg_min_inference_variance_local, AverageMethod, AverageResult,
};
pub use sphere::{fibonacci_point, fibonacci_points, sphere_quadrature, DEFAULT_QUAD_N};
pub use correlations::{
    f2_cjwr, f3_cjwr, f_haar, horodecki_m, is_bd_separable, ppt_min_eigenvalue,
    CorrelationReport,
};
pub use qkd::{
    binary_entropy, k_bb84, k_star, k_star_opt, security_threshold, KeyRateReport, RateKind,
};
pub use channels::{adc_state, amplitude_damping, apply_to_bell, AffineChannel};
pub use ttbar::{
    cpm_eigen, integrated_state, mixture_corr, process_corr, ttbar_state, HelicityCorr,
    PhasePoint, Process,
};
