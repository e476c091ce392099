//! Steering, separability and nonlocality criteria.
//!
//! The CJWR linear steering inequalities for two and three measurements
//! reduce, for measurement axes along the singular directions of C, to
//! F₂ = √(s₁² + s₂²) ≤ 1 and F₃ = √(s₁² + s₂² + s₃²) ≤ 1. The
//! all-observables criterion for Bell-diagonal states is the ellipsoid
//! integral F_Haar = ∫dΩ √(n·CCᵀn) ≤ 2π. Entanglement is certified by a
//! negative partial-transpose eigenvalue, nonlocality by the Horodecki
//! CHSH parameter M = s₁² + s₂² > 1.

use crate::elliptic::carlson_rg;
use crate::error::{Error, Result};
use crate::state::{
    bell_diagonal_eigenvalues, density_matrix, singular_values, FanoState, VALIDITY_TOL,
};

/// All criteria for one state, with their decision flags.
#[derive(Debug, Clone, Copy)]
pub struct CorrelationReport {
    pub f2: f64,
    pub f3: f64,
    pub f_haar: f64,
    pub steerable_2: bool,
    pub steerable_3: bool,
    pub steerable_haar: bool,
    /// F_Haar is a steering witness only for vanishing Bloch vectors.
    pub haar_applicable: bool,
    pub ppt_min_eig: f64,
    pub entangled: bool,
    pub horodecki_m: f64,
    pub nonlocal: bool,
}

/// CJWR two-measurement steering value √(s₁² + s₂²); steerable when > 1.
pub fn f2_cjwr(s: &FanoState) -> f64 {
    let sv = singular_values(&s.c());
    (sv[0] * sv[0] + sv[1] * sv[1]).sqrt()
}

/// CJWR three-measurement steering value, the Frobenius norm of C;
/// steerable when > 1.
pub fn f3_cjwr(s: &FanoState) -> f64 {
    let sv = singular_values(&s.c());
    (sv[0] * sv[0] + sv[1] * sv[1] + sv[2] * sv[2]).sqrt()
}

/// All-observables steering value ∫dΩ √(n·CCᵀn) = 4π s₁ R_G(s₂²/s₁²,
/// s₃²/s₁², 1); for Bell-diagonal states steerability is F_Haar > 2π.
pub fn f_haar(s: &FanoState) -> f64 {
    let sv = singular_values(&s.c());
    if sv[0] < 1e-300 {
        return 0.0;
    }
    let ratio2 = (sv[1] / sv[0]).powi(2);
    let ratio3 = (sv[2] / sv[0]).powi(2);
    4.0 * std::f64::consts::PI * sv[0] * carlson_rg(ratio2, ratio3, 1.0)
}

/// Separability of the Bell-diagonal state diag(c1, c2, c3): the
/// separable set is the octahedron |c1| + |c2| + |c3| ≤ 1.
pub fn is_bd_separable(c1: f64, c2: f64, c3: f64) -> Result<bool> {
    for lambda in bell_diagonal_eigenvalues(c1, c2, c3) {
        if lambda < -VALIDITY_TOL {
            return Err(Error::NonPhysical(format!(
                "({c1}, {c2}, {c3}) is outside the Bell tetrahedron"
            )));
        }
    }
    Ok(c1.abs() + c2.abs() + c3.abs() <= 1.0 + 1e-12)
}

/// Minimum eigenvalue of the partial transpose (on B) of the density
/// matrix; negative values certify entanglement.
pub fn ppt_min_eigenvalue(s: &FanoState) -> f64 {
    density_matrix(s).partial_transpose_b().eigenvalues()[0]
}

/// Horodecki CHSH parameter M = s₁² + s₂²; the state violates some CHSH
/// inequality iff M > 1.
pub fn horodecki_m(s: &FanoState) -> f64 {
    let sv = singular_values(&s.c());
    sv[0] * sv[0] + sv[1] * sv[1]
}

/// Evaluates every criterion on one state.
pub fn report(s: &FanoState) -> CorrelationReport {
    let f2 = f2_cjwr(s);
    let f3 = f3_cjwr(s);
    let fh = f_haar(s);
    let ppt = ppt_min_eigenvalue(s);
    let m = horodecki_m(s);
    CorrelationReport {
        f2,
        f3,
        f_haar: fh,
        steerable_2: f2 > 1.0,
        steerable_3: f3 > 1.0,
        steerable_haar: fh > 2.0 * std::f64::consts::PI,
        haar_applicable: s.t_a().norm() < 1e-12 && s.t_b().norm() < 1e-12,
        ppt_min_eig: ppt,
        entangled: ppt < -VALIDITY_TOL,
        horodecki_m: m,
        nonlocal: m > 1.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Mat3, Vec3};
    use crate::state::{bell_diagonal, classical_quantum, Bell, MeasurementDirection};
    use std::f64::consts::PI;

    #[test]
    fn f2_f3_on_bell_and_werner() {
        let phi = FanoState::bell(Bell::PhiPlus);
        assert!((f2_cjwr(&phi) - 2f64.sqrt()).abs() < 1e-14);
        assert!((f3_cjwr(&phi) - 3f64.sqrt()).abs() < 1e-14);
        for w in [0.2, 0.7] {
            let s = bell_diagonal(-w, -w, -w).unwrap();
            assert!((f2_cjwr(&s) - w * 2f64.sqrt()).abs() < 1e-14);
            assert!((f3_cjwr(&s) - w * 3f64.sqrt()).abs() < 1e-14);
        }
        assert!(f3_cjwr(&FanoState::maximally_mixed()).abs() < 1e-14);
    }

    #[test]
    fn f2_on_amplitude_damped_pair() {
        let c = 0.5;
        let s = FanoState::new(
            Vec3::Z * 0.5,
            Vec3::Z * 0.5,
            Mat3::from_diag(c, -c, 0.5),
        )
        .unwrap();
        assert!((f2_cjwr(&s) - 0.5f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn f3_of_rank_one_classical_quantum() {
        let s = classical_quantum(0.5, &MeasurementDirection::Z, Vec3::X, -Vec3::X);
        assert!((f3_cjwr(&s) - 1.0).abs() < 1e-14);
        assert!(!report(&s).steerable_3);
    }

    #[test]
    fn f_haar_examples() {
        assert!((f_haar(&FanoState::bell(Bell::PhiPlus)) - 4.0 * PI).abs() < 1e-12);
        for w in [0.3, 0.5, 0.8] {
            let s = bell_diagonal(-w, -w, -w).unwrap();
            assert!((f_haar(&s) - 4.0 * PI * w).abs() < 1e-12);
            assert_eq!(report(&s).steerable_haar, w > 0.5);
        }
        for c in [0.4, 1.0] {
            let s = bell_diagonal(c, 0.0, 0.0).unwrap();
            assert!((f_haar(&s) - 2.0 * PI * c).abs() < 1e-12);
            assert!(!report(&s).steerable_haar);
        }
    }

    #[test]
    fn octahedron_membership() {
        assert!(is_bd_separable(0.0, 0.0, 0.0).unwrap());
        assert!(!is_bd_separable(1.0, -1.0, 1.0).unwrap());
        assert!(is_bd_separable(1.0, 1.0, 1.0).is_err());
        for k in 0..=20 {
            let w = k as f64 / 20.0;
            let sep = is_bd_separable(-w, -w, -w).unwrap();
            assert_eq!(sep, w <= 1.0 / 3.0 + 1e-12, "Werner w={w}");
        }
    }

    #[test]
    fn ppt_examples() {
        assert!((ppt_min_eigenvalue(&FanoState::bell(Bell::PhiPlus)) + 0.5).abs() < 1e-13);
        let boundary = bell_diagonal(-1.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0).unwrap();
        assert!(ppt_min_eigenvalue(&boundary).abs() < 1e-13);
        // Product states stay PSD under partial transposition.
        for seed in 0..20 {
            let t_a = crate::state::random_direction(seed).vec() * 0.7;
            let t_b = crate::state::random_direction(seed + 100).vec() * 0.4;
            let s = FanoState::new(t_a, t_b, t_a.outer(t_b)).unwrap();
            assert!(ppt_min_eigenvalue(&s) >= -1e-12);
        }
    }

    #[test]
    fn horodecki_examples() {
        let rep = report(&FanoState::bell(Bell::PhiPlus));
        assert!((rep.horodecki_m - 2.0).abs() < 1e-14);
        assert!(rep.nonlocal);
        for w in [0.5, 0.71, 0.9] {
            let s = bell_diagonal(-w, -w, -w).unwrap();
            assert!((horodecki_m(&s) - 2.0 * w * w).abs() < 1e-13);
            assert_eq!(report(&s).nonlocal, w > 1.0 / 2f64.sqrt());
        }
    }

    #[test]
    fn octahedron_agrees_with_ppt_on_tetrahedron() {
        // Outside a 1e-9 band of both boundaries, the |c1|+|c2|+|c3| <= 1
        // test and the partial-transpose test classify identically.
        let n = 14;
        let mut checked = 0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c1 = -1.0 + 2.0 * i as f64 / (n - 1) as f64;
                    let c2 = -1.0 + 2.0 * j as f64 / (n - 1) as f64;
                    let c3 = -1.0 + 2.0 * k as f64 / (n - 1) as f64;
                    let Ok(s) = bell_diagonal(c1, c2, c3) else {
                        continue;
                    };
                    let margin = 1.0 - (c1.abs() + c2.abs() + c3.abs());
                    let ppt = ppt_min_eigenvalue(&s);
                    if margin.abs() < 1e-9 || ppt.abs() < 1e-9 {
                        continue;
                    }
                    assert_eq!(
                        is_bd_separable(c1, c2, c3).unwrap(),
                        ppt >= 0.0,
                        "({c1}, {c2}, {c3}): margin {margin}, ppt {ppt}"
                    );
                    checked += 1;
                }
            }
        }
        assert!(checked > 500);
    }

    #[test]
    fn report_flags_are_consistent() {
        for seed in 0..30 {
            let s = crate::state::random_state(seed);
            let rep = report(&s);
            assert!(rep.f2 <= rep.f3 + 1e-12);
            assert!(rep.f3 <= 3f64.sqrt() + 1e-12);
            assert_eq!(rep.steerable_2, rep.f2 > 1.0);
            assert_eq!(rep.entangled, rep.ppt_min_eig < -VALIDITY_TOL);
        }
    }
}
