//! Entanglement-based key-rate bounds.
//!
//! The BB84 Devetak-Winter rate for a characterized resource state is
//! K_BB84 = 1 − h(ε_z) − h(ε_x) with the QBERs of the σ_z and σ_x bases.
//! The modified protocol lets Bob measure the Bayes-optimal partner of
//! each of Alice's two orthogonal directions, which bounds the rate by
//! K*(a₁, a₂) = 1 − h(L*_min(a₁)) − h(L*_min(a₂)); maximizing over
//! orthonormal pairs can only improve on BB84 because L*_min(a) never
//! exceeds the QBER of any fixed partner basis.
//!
//! Rates are returned unclipped (negative values are meaningful for
//! contour plots); the security flags are simply `rate > 0`.

use crate::error::{Error, Result};
use crate::linalg::{Mat3, Vec3};
use crate::predictability::{min_bayes_risk, qber};
use crate::state::{FanoState, MeasurementDirection};

/// Which rate bound a threshold search follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RateKind {
    Bb84,
    Star,
}

/// Key rates and optimal measurement pair for one resource state.
#[derive(Debug, Clone, Copy)]
pub struct KeyRateReport {
    pub k_bb84: f64,
    pub k_star: f64,
    pub a1_star: MeasurementDirection,
    pub a2_star: MeasurementDirection,
    pub b1_star: MeasurementDirection,
    pub b2_star: MeasurementDirection,
    pub secure_bb84: bool,
    pub secure_star: bool,
}

/// Binary entropy h(p) = −p log₂ p − (1−p) log₂(1−p), with
/// h(0) = h(1) = 0 exactly.
pub fn binary_entropy(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::DomainError(format!("probability {p} outside [0, 1]")));
    }
    if p == 0.0 || p == 1.0 {
        return Ok(0.0);
    }
    Ok(-p * p.log2() - (1.0 - p) * (1.0 - p).log2())
}

fn h(p: f64) -> f64 {
    binary_entropy(p.clamp(0.0, 1.0)).expect("clamped probability")
}

/// BB84 Devetak-Winter rate with the bases fixed to the state's own ẑ and
/// x̂ axes. May be negative; secure iff positive.
pub fn k_bb84(s: &FanoState) -> f64 {
    let eps_z = qber(s, &MeasurementDirection::Z, &MeasurementDirection::Z);
    let eps_x = qber(s, &MeasurementDirection::X, &MeasurementDirection::X);
    1.0 - h(eps_z) - h(eps_x)
}

/// Modified-protocol rate bound for a fixed orthogonal pair of Alice
/// directions: 1 − h(L*_min(a₁)) − h(L*_min(a₂)).
pub fn k_star(
    s: &FanoState,
    a1: &MeasurementDirection,
    a2: &MeasurementDirection,
) -> Result<f64> {
    let overlap = a1.vec().dot(a2.vec()).abs();
    if overlap > 1e-10 {
        return Err(Error::NotOrthogonal(overlap));
    }
    Ok(k_star_unchecked(s, a1.vec(), a2.vec()))
}

fn k_star_unchecked(s: &FanoState, a1: Vec3, a2: Vec3) -> f64 {
    let l1 = pointwise_min_risk(s, a1);
    let l2 = pointwise_min_risk(s, a2);
    1.0 - h(l1) - h(l2)
}

fn pointwise_min_risk(s: &FanoState, a: Vec3) -> f64 {
    0.5 * (1.0 - s.c().tr_mul_vec(a).norm().max(a.dot(s.t_a()).abs()))
}

fn euler_pair(alpha: f64, beta: f64, gamma: f64) -> (Vec3, Vec3) {
    let rz1 = Mat3::rotation(Vec3::Z, alpha);
    let ry = Mat3::rotation(Vec3::Y, beta);
    let rz2 = Mat3::rotation(Vec3::Z, gamma);
    let r = rz1.mat_mul(ry).mat_mul(rz2);
    (r.mul_vec(Vec3::Z), r.mul_vec(Vec3::X))
}

const GRID_PER_AXIS: usize = 24;
const NM_RESTARTS: usize = 5;
const NM_TOL: f64 = 1e-8;
const NM_MAX_ITER: usize = 500;

/// Globally optimized modified-protocol bound.
///
/// Orthonormal pairs are parametrized by three Euler angles applied to
/// (ẑ, x̂); a 24³ coarse grid seeds Nelder-Mead refinements from the five
/// best cells. The fixed BB84 pair (ẑ, x̂) is always kept as a candidate,
/// which enforces k_star ≥ k_bb84 structurally.
pub fn k_star_opt(s: &FanoState) -> KeyRateReport {
    use std::f64::consts::PI;
    let objective = |angles: [f64; 3]| -> f64 {
        let (a1, a2) = euler_pair(angles[0], angles[1], angles[2]);
        k_star_unchecked(s, a1, a2)
    };

    // Coarse scan; the objective has period 2π in α and π in β, γ up to
    // harmless sign redundancy.
    let mut cells: Vec<(f64, [f64; 3])> = Vec::with_capacity(NM_RESTARTS);
    for i in 0..GRID_PER_AXIS {
        for j in 0..GRID_PER_AXIS {
            for k in 0..GRID_PER_AXIS {
                let angles = [
                    2.0 * PI * i as f64 / GRID_PER_AXIS as f64,
                    PI * j as f64 / GRID_PER_AXIS as f64,
                    PI * k as f64 / GRID_PER_AXIS as f64,
                ];
                let value = objective(angles);
                if cells.len() < NM_RESTARTS {
                    cells.push((value, angles));
                    cells.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap());
                } else if value > cells[NM_RESTARTS - 1].0 {
                    cells[NM_RESTARTS - 1] = (value, angles);
                    cells.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap());
                }
            }
        }
    }

    // Identity pair: a1 = ẑ, a2 = x̂.
    let mut best_angles = [0.0, 0.0, 0.0];
    let mut best_value = objective(best_angles);
    for &(_, start) in &cells {
        let (value, angles) = nelder_mead_max(&objective, start);
        if value > best_value {
            best_value = value;
            best_angles = angles;
        }
    }

    let (a1, a2) = euler_pair(best_angles[0], best_angles[1], best_angles[2]);
    let a1 = MeasurementDirection::new(a1).expect("rotated unit vector");
    let a2 = MeasurementDirection::new(a2).expect("rotated unit vector");
    let rate_bb84 = k_bb84(s);
    KeyRateReport {
        k_bb84: rate_bb84,
        k_star: best_value,
        b1_star: min_bayes_risk(s, &a1).b_star,
        b2_star: min_bayes_risk(s, &a2).b_star,
        a1_star: a1,
        a2_star: a2,
        secure_bb84: rate_bb84 > 0.0,
        secure_star: best_value > 0.0,
    }
}

/// Derivative-free simplex maximization, restarted shape, terminating at
/// simplex diameter 1e-8.
fn nelder_mead_max<F: Fn([f64; 3]) -> f64>(f: &F, start: [f64; 3]) -> (f64, [f64; 3]) {
    let g = |x: [f64; 3]| -f(x);
    let step = 0.15;
    let mut simplex: Vec<([f64; 3], f64)> = Vec::with_capacity(4);
    simplex.push((start, g(start)));
    for d in 0..3 {
        let mut v = start;
        v[d] += step;
        simplex.push((v, g(v)));
    }

    for _ in 0..NM_MAX_ITER {
        simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
        let diameter = simplex
            .iter()
            .skip(1)
            .map(|(v, _)| {
                (0..3)
                    .map(|d| (v[d] - simplex[0].0[d]).powi(2))
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0_f64, f64::max);
        if diameter < NM_TOL {
            break;
        }
        let worst = simplex[3];
        let mut centroid = [0.0; 3];
        for (v, _) in simplex.iter().take(3) {
            for d in 0..3 {
                centroid[d] += v[d] / 3.0;
            }
        }
        let at = |t: f64| {
            let mut v = [0.0; 3];
            for d in 0..3 {
                v[d] = centroid[d] + t * (worst.0[d] - centroid[d]);
            }
            v
        };
        let reflected = at(-1.0);
        let fr = g(reflected);
        if fr < simplex[0].1 {
            let expanded = at(-2.0);
            let fe = g(expanded);
            simplex[3] = if fe < fr { (expanded, fe) } else { (reflected, fr) };
        } else if fr < simplex[2].1 {
            simplex[3] = (reflected, fr);
        } else {
            let contracted = if fr < worst.1 { at(-0.5) } else { at(0.5) };
            let fc = g(contracted);
            if fc < worst.1.min(fr) {
                simplex[3] = (contracted, fc);
            } else {
                // Shrink toward the best vertex.
                let best = simplex[0].0;
                for entry in simplex.iter_mut().skip(1) {
                    for d in 0..3 {
                        entry.0[d] = best[d] + 0.5 * (entry.0[d] - best[d]);
                    }
                    entry.1 = g(entry.0);
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
    (-simplex[0].1, simplex[0].0)
}

/// Zero of a rate bound along a one-parameter state family, by bisection
/// to a 1e-4 parameter tolerance. The bracket endpoints must straddle
/// zero.
pub fn security_threshold<F>(family: F, rate: RateKind, lo: f64, hi: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<FanoState>,
{
    let eval = |t: f64| -> Result<f64> {
        let s = family(t)?;
        Ok(match rate {
            RateKind::Bb84 => k_bb84(&s),
            RateKind::Star => k_star_opt(&s).k_star,
        })
    };
    let f_lo = eval(lo)?;
    let f_hi = eval(hi)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::NoSignChange { lo, hi, f_lo, f_hi });
    }
    let (mut lo, mut hi, mut f_lo) = (lo, hi, f_lo);
    while (hi - lo).abs() > 1e-4 {
        let mid = 0.5 * (lo + hi);
        let f_mid = eval(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
