//! Local qubit channels in affine (Bloch) representation and their action
//! on Bell states.
//!
//! A channel E maps Bloch vectors v → A_E v + b_E. Feeding both halves of
//! a Bell pair |Φ_k⟩ through local channels E ⊗ F produces the Fano form
//! t_A = b_E, t_B = b_F, C = b_E b_Fᵀ + A_E w_k A_Fᵀ, with w_k the Bell
//! correlation matrix. Complete positivity of arbitrary affine pairs is
//! not certified here; invalid channels surface as a NonPhysical output
//! state.

use crate::error::{Error, Result};
use crate::linalg::{Mat3, Vec3};
use crate::state::{Bell, BlochVector, FanoState};

/// Affine channel v ↦ A v + b on the Bloch ball.
#[derive(Debug, Clone, Copy)]
pub struct AffineChannel {
    pub a: Mat3,
    pub b: BlochVector,
}

impl AffineChannel {
    pub fn identity() -> Self {
        AffineChannel {
            a: Mat3::identity(),
            b: Vec3::ZERO,
        }
    }

    pub fn apply(&self, v: Vec3) -> Vec3 {
        self.a.mul_vec(v) + self.b
    }
}

/// Amplitude-damping channel with damping parameter p:
/// A = diag(√(1−p), √(1−p), 1−p), b = (0, 0, p). p = 1 collapses the
/// Bloch ball to the |0⟩ pole.
pub fn amplitude_damping(p: f64) -> Result<AffineChannel> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::DomainError(format!(
            "damping parameter {p} outside [0, 1]"
        )));
    }
    let root = (1.0 - p).sqrt();
    Ok(AffineChannel {
        a: Mat3::from_diag(root, root, 1.0 - p),
        b: Vec3::new(0.0, 0.0, p),
    })
}

/// Fano form of (E ⊗ F)(|Φ_k⟩⟨Φ_k|). Fails with NonPhysical when the
/// channel pair does not produce a state, which signals an invalid pair.
pub fn apply_to_bell(e: &AffineChannel, f: &AffineChannel, k: Bell) -> Result<FanoState> {
    let c = e.b.outer(f.b) + e.a.mat_mul(k.corr_matrix()).mat_mul(f.a.transpose());
    FanoState::new(e.b, f.b, c)
}

/// Bell pair degraded by local amplitude damping on both sides (closed
/// form, Φ⁺ input): t_A = p_a ẑ, t_B = p_b ẑ,
/// C = diag(c, −c, c² + p_a p_b) with c = √((1−p_a)(1−p_b)).
///
/// Entangled for every p_a < 1, p_b < 1.
pub fn adc_state(p_a: f64, p_b: f64) -> FanoState {
    assert!(
        (0.0..=1.0).contains(&p_a) && (0.0..=1.0).contains(&p_b),
        "damping parameters must lie in [0, 1]"
    );
    let c = ((1.0 - p_a) * (1.0 - p_b)).sqrt();
    FanoState::new(
        Vec3::new(0.0, 0.0, p_a),
        Vec3::new(0.0, 0.0, p_b),
        Mat3::from_diag(c, -c, c * c + p_a * p_b),
    )
    .expect("amplitude-damped Bell pairs are physical")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlations::ppt_min_eigenvalue;
    use crate::state::Bell;

    #[test]
    fn identity_channel_preserves_bell() {
        let id = AffineChannel::identity();
        let s = apply_to_bell(&id, &id, Bell::PhiPlus).unwrap();
        assert_eq!(s.c(), Bell::PhiPlus.corr_matrix());
        assert!(s.t_a().norm() < 1e-15);
    }

    #[test]
    fn damping_endpoints() {
        let e = amplitude_damping(0.0).unwrap();
        assert_eq!(e.a, Mat3::identity());
        assert_eq!(e.b, Vec3::ZERO);
        let e = amplitude_damping(1.0).unwrap();
        assert_eq!(e.a, Mat3::ZERO);
        assert_eq!(e.b, Vec3::Z);
        assert!(amplitude_damping(1.5).is_err());
        assert!(amplitude_damping(-0.1).is_err());
    }

    #[test]
    fn full_damping_gives_pure_product() {
        let s = adc_state(1.0, 1.0);
        assert_eq!(s.t_a(), Vec3::Z);
        assert_eq!(s.t_b(), Vec3::Z);
        assert_eq!(s.c(), Vec3::Z.outer(Vec3::Z));
    }

    #[test]
    fn closed_form_matches_channel_composition() {
        for i in 0..50 {
            let p_a = (i as f64 * 0.619) % 1.0;
            let p_b = (i as f64 * 0.377) % 1.0;
            let e = amplitude_damping(p_a).unwrap();
            let f = amplitude_damping(p_b).unwrap();
            let via_channels = apply_to_bell(&e, &f, Bell::PhiPlus).unwrap();
            let closed = adc_state(p_a, p_b);
            assert!((via_channels.t_a() - closed.t_a()).norm() < 1e-14);
            assert!((via_channels.t_b() - closed.t_b()).norm() < 1e-14);
            for i in 0..3 {
                for j in 0..3 {
                    assert!((via_channels.c()[(i, j)] - closed.c()[(i, j)]).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn unital_channels_keep_bloch_vectors_zero() {
        let rot = Mat3::rotation(Vec3::new(1.0, 1.0, 0.3), 0.7);
        let e = AffineChannel {
            a: rot * 0.6,
            b: Vec3::ZERO,
        };
        let s = apply_to_bell(&e, &AffineChannel::identity(), Bell::PsiMinus).unwrap();
        assert!(s.t_a().norm() < 1e-15 && s.t_b().norm() < 1e-15);
    }

    #[test]
    fn adc_grid_valid_and_entangled() {
        for i in 0..=20 {
            for j in 0..=20 {
                let (p_a, p_b) = (i as f64 / 20.0, j as f64 / 20.0);
                let s = adc_state(p_a, p_b);
                assert!(s.validity().valid, "({p_a}, {p_b})");
                if p_a < 1.0 && p_b < 1.0 {
                    assert!(
                        ppt_min_eigenvalue(&s) < -1e-10,
                        "({p_a}, {p_b}) should be entangled"
                    );
                }
            }
        }
    }

    #[test]
    fn half_damping_example() {
        let s = adc_state(0.5, 0.5);
        assert_eq!(s.c(), Mat3::from_diag(0.5, -0.5, 0.5));
        assert_eq!(s.t_a(), Vec3::Z * 0.5);
        assert!(ppt_min_eigenvalue(&s) < -1e-10);
    }
}
