//! Spin-correlation states of top-antitop pairs at leading order.
//!
//! In the helicity basis (k̂ along the top momentum, r̂ in the production
//! plane, n̂ normal to it; matrix indices 1, 2, 3 in that order) the LO
//! production state of a t t̄ pair is unpolarized with a symmetric
//! correlation matrix that couples only the (k, r) block. It depends on
//! the pair velocity β and the production angle Θ, and the hadronic state
//! is the convex mixture of the gluon-fusion and quark-annihilation
//! process matrices weighted by w_gg.

use crate::error::{Error, Result};
use crate::linalg::Mat3;
use crate::state::{bell_diagonal, CorrMatrix, FanoState};

/// Leading-order production process of a t t̄ pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Process {
    /// Light quark-antiquark annihilation.
    QQbar,
    /// Gluon-gluon fusion.
    Gg,
}

/// Correlation entries in the helicity basis, already normalized by Ã.
/// The n̂ axis decouples: the only off-diagonal entry is kr = rk.
#[derive(Debug, Clone, Copy)]
pub struct HelicityCorr {
    pub a_tilde: f64,
    pub c_kk: f64,
    pub c_rr: f64,
    pub c_nn: f64,
    pub c_kr: f64,
}

impl HelicityCorr {
    /// The induced 3×3 correlation matrix in (k, r, n) order.
    pub fn matrix(&self) -> CorrMatrix {
        Mat3([
            [self.c_kk, self.c_kr, 0.0],
            [self.c_kr, self.c_rr, 0.0],
            [0.0, 0.0, self.c_nn],
        ])
    }
}

/// Point of the production phase space plus the gluon-fusion weight.
#[derive(Debug, Clone, Copy)]
pub struct PhasePoint {
    beta: f64,
    theta: f64,
    w_gg: f64,
}

impl PhasePoint {
    /// Requires β ∈ [0, 1), Θ ∈ (0, π), w_gg ∈ [0, 1].
    pub fn new(beta: f64, theta: f64, w_gg: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&beta) {
            return Err(Error::DomainError(format!("beta {beta} outside [0, 1)")));
        }
        if !(theta > 0.0 && theta < std::f64::consts::PI) {
            return Err(Error::DomainError(format!("theta {theta} outside (0, pi)")));
        }
        if !(0.0..=1.0).contains(&w_gg) {
            return Err(Error::DomainError(format!("w_gg {w_gg} outside [0, 1]")));
        }
        Ok(PhasePoint { beta, theta, w_gg })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn w_gg(&self) -> f64 {
        self.w_gg
    }
}

/// Normalized correlation entries of a single production process.
///
/// The gg amplitude has a collinear singularity at β²cos²Θ → 1; points
/// with 1 − β²cos²Θ ≤ 1e-12 are rejected rather than clamped.
pub fn process_corr(process: Process, beta: f64, theta: f64) -> Result<HelicityCorr> {
    if !(0.0..1.0).contains(&beta) {
        return Err(Error::DomainError(format!("beta {beta} outside [0, 1)")));
    }
    if !(theta > 0.0 && theta < std::f64::consts::PI) {
        return Err(Error::DomainError(format!("theta {theta} outside (0, pi)")));
    }
    let b2 = beta * beta;
    let sin2 = theta.sin().powi(2);
    let cos2 = theta.cos().powi(2);
    let sin_2t = (2.0 * theta).sin();
    match process {
        Process::QQbar => {
            let f_q = 1.0 / 18.0;
            let a_tilde = f_q * (2.0 - b2 * sin2);
            let rr = f_q * (2.0 - b2) * sin2;
            let nn = -f_q * b2 * sin2;
            let kk = f_q * (2.0 - (2.0 - b2) * sin2);
            let kr = f_q * (1.0 - b2).sqrt() * sin_2t;
            Ok(HelicityCorr {
                a_tilde,
                c_kk: kk / a_tilde,
                c_rr: rr / a_tilde,
                c_nn: nn / a_tilde,
                c_kr: kr / a_tilde,
            })
        }
        Process::Gg => {
            let collinear = 1.0 - b2 * cos2;
            if collinear <= 1e-12 {
                return Err(Error::DomainError(format!(
                    "gg collinear singularity: 1 - beta^2 cos^2(theta) = {collinear:.3e}"
                )));
            }
            let sin4 = sin2 * sin2;
            let b4 = b2 * b2;
            let f_g = (7.0 + 9.0 * b2 * cos2) / (192.0 * collinear * collinear);
            let a_tilde = f_g * (1.0 + 2.0 * b2 * sin2 - b4 * (1.0 + sin4));
            let rr = -f_g * (1.0 - b2 * (2.0 - b2) * (1.0 + sin4));
            let nn = -f_g * (1.0 - 2.0 * b2 + b4 * (1.0 + sin4));
            let kk = -f_g * (1.0 - b2 * sin_2t * sin_2t / 2.0 - b4 * (1.0 + sin4));
            let kr = f_g * (1.0 - b2).sqrt() * b2 * sin_2t * sin2;
            Ok(HelicityCorr {
                a_tilde,
                c_kk: kk / a_tilde,
                c_rr: rr / a_tilde,
                c_nn: nn / a_tilde,
                c_kr: kr / a_tilde,
            })
        }
    }
}

/// Convex mixture C = w_gg C^{gg} + (1 − w_gg) C^{qq̄} in the shared
/// helicity basis.
pub fn mixture_corr(p: &PhasePoint) -> Result<CorrMatrix> {
    let gg = process_corr(Process::Gg, p.beta, p.theta)?;
    let qq = process_corr(Process::QQbar, p.beta, p.theta)?;
    Ok(gg.matrix() * p.w_gg + qq.matrix() * (1.0 - p.w_gg))
}

/// Eigenvalues (C₊, C_nn, C₋) of the helicity correlation matrix:
/// C± = (C_kk + C_rr)/2 ± √(((C_kk − C_rr)/2)² + C_kr²).
pub fn cpm_eigen(h: &HelicityCorr) -> (f64, f64, f64) {
    let mean = 0.5 * (h.c_kk + h.c_rr);
    let radius = (0.25 * (h.c_kk - h.c_rr).powi(2) + h.c_kr * h.c_kr).sqrt();
    (mean + radius, h.c_nn, mean - radius)
}

/// The t t̄ spin state at a phase-space point: maximally mixed marginals
/// with the mixed correlation matrix.
pub fn ttbar_state(p: &PhasePoint) -> Result<FanoState> {
    let c = mixture_corr(p)?;
    FanoState::new(crate::linalg::Vec3::ZERO, crate::linalg::Vec3::ZERO, c)
}

/// The angular- and mass-integrated state in the fixed beam basis, which
/// depends on two parameters only: C = diag(c_perp, c_perp, c_z).
pub fn integrated_state(c_perp: f64, c_z: f64) -> Result<FanoState> {
    bell_diagonal(c_perp, c_perp, c_z)
}
