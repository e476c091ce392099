//! Pointwise prediction-error measures for a fixed observable pair and
//! their analytic minimization over Bob's direction.
//!
//! Alice measures a·σ (outcomes x ∈ {0,1} for spin up/down along a), Bob
//! measures b·σ and predicts x from his outcome y. Two error measures are
//! tracked:
//!
//! * Bayes risk: the misclassification probability of the optimal
//!   classifier, minimized value (1 − max(|a·t_A|, |Cᵀa|))/2 with the
//!   correlation branch attained at b* = Cᵀa/|Cᵀa|;
//! * inference variance: the expected squared error of the conditional
//!   expectation regressor, minimized value (1 − C*)/4 with
//!   C* = (1 − |t_B|²)(a·c_se)² + |Cᵀa|² and c_se the steering-ellipsoid
//!   centroid (t_A − C t_B)/(1 − |t_B|²).

use crate::error::{Error, Result};
use crate::linalg::Vec3;
use crate::sphere::fibonacci_point;
use crate::state::{FanoState, MeasurementDirection};

/// Probability below which a conditioning branch is treated as empty.
pub const BRANCH_TOL: f64 = 1e-14;

/// Joint outcome distribution p[x][y] of the pair (a·σ, b·σ).
#[derive(Debug, Clone, Copy)]
pub struct JointDist22 {
    pub p: [[f64; 2]; 2],
}

impl JointDist22 {
    /// P(Y = y).
    pub fn marginal_y(&self, y: usize) -> f64 {
        self.p[0][y] + self.p[1][y]
    }

    /// P(X = x).
    pub fn marginal_x(&self, x: usize) -> f64 {
        self.p[x][0] + self.p[x][1]
    }
}

/// Which term of the minimal Bayes risk / inference variance won.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Only Alice-side information is useful (|Cᵀa| < |a·t_A|, or the
    /// degenerate |t_B| = 1 fallback of the inference variance).
    LocalInfo,
    /// Bob's optimal measurement exploits the correlations.
    Correlation,
}

/// Minimized error value plus the optimal partner direction.
#[derive(Debug, Clone, Copy)]
pub struct PredictabilityResult {
    pub value: f64,
    pub b_star: MeasurementDirection,
    pub branch: Branch,
}

/// Which pointwise measure a brute-force scan minimizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorMeasure {
    BayesRisk,
    InferenceVariance,
}

/// p[x][y] = (1/4)[1 + (−1)^x a·t_A + (−1)^y b·t_B + (−1)^{x+y} a·C b].
pub fn joint_prob(s: &FanoState, a: &MeasurementDirection, b: &MeasurementDirection) -> JointDist22 {
    let av = a.vec();
    let bv = b.vec();
    let la = av.dot(s.t_a());
    let lb = bv.dot(s.t_b());
    let corr = av.dot(s.c().mul_vec(bv));
    let mut p = [[0.0; 2]; 2];
    for x in 0..2 {
        for y in 0..2 {
            let sx = if x == 0 { 1.0 } else { -1.0 };
            let sy = if y == 0 { 1.0 } else { -1.0 };
            p[x][y] = 0.25 * (1.0 + sx * la + sy * lb + sx * sy * corr);
        }
    }
    JointDist22 { p }
}

/// Probability of Bob's outcome y and Alice's conditional Bloch vector:
/// P(y) = [1 + (−1)^y b·t_B]/2, t_{A|y} = [t_A + (−1)^y C b]/(2 P(y)).
pub fn conditional_state(
    s: &FanoState,
    b: &MeasurementDirection,
    y: u8,
) -> Result<(f64, Vec3)> {
    let sign = if y == 0 { 1.0 } else { -1.0 };
    let prob = 0.5 * (1.0 + sign * b.vec().dot(s.t_b()));
    if prob <= BRANCH_TOL {
        return Err(Error::ZeroProbabilityBranch);
    }
    let t = (s.t_a() + s.c().mul_vec(b.vec()) * sign) * (1.0 / (2.0 * prob));
    Ok((prob, t))
}

/// Conditional expectation f*(y) = P(X = 1 | Y = y)
/// = (1/2){1 − a·[t_A + (−1)^y C b]/(2 P(y))}.
pub fn conditional_expectation(
    s: &FanoState,
    a: &MeasurementDirection,
    b: &MeasurementDirection,
    y: u8,
) -> Result<f64> {
    let (_, t_cond) = conditional_state(s, b, y)?;
    Ok(0.5 * (1.0 - a.vec().dot(t_cond)))
}

/// Misclassification probability of the optimal classifier for the fixed
/// pair (a, b): Σ_y min(p[0][y], p[1][y]). Ties at f*(y) = 1/2 predict 0,
/// which does not change the value.
pub fn bayes_risk(s: &FanoState, a: &MeasurementDirection, b: &MeasurementDirection) -> f64 {
    let d = joint_prob(s, a, b);
    d.p[0][0].min(d.p[1][0]) + d.p[0][1].min(d.p[1][1])
}

/// Quantum bit error rate ε(a, b) = P(0,1) + P(1,0) = (1 − a·C b)/2.
pub fn qber(s: &FanoState, a: &MeasurementDirection, b: &MeasurementDirection) -> f64 {
    0.5 * (1.0 - a.vec().dot(s.c().mul_vec(b.vec())))
}

fn fallback_direction(v: Vec3) -> MeasurementDirection {
    // Direction-independent optima report ẑ.
    MeasurementDirection::new(v).unwrap_or(MeasurementDirection::Z)
}

/// Minimal Bayes risk over Bob's directions (analytic).
///
/// Returns (1 − |a·t_A|)/2 with the local-information branch when
/// |Cᵀa| < |a·t_A|, else (1 − |Cᵀa|)/2 with b* = Cᵀa/|Cᵀa|. Exact ties
/// report the correlation branch (the values coincide).
pub fn min_bayes_risk(s: &FanoState, a: &MeasurementDirection) -> PredictabilityResult {
    let ca = s.c().tr_mul_vec(a.vec());
    let corr = ca.norm();
    let local = a.vec().dot(s.t_a()).abs();
    let b_star = fallback_direction(ca);
    if corr < local {
        PredictabilityResult {
            value: 0.5 * (1.0 - local),
            b_star,
            branch: Branch::LocalInfo,
        }
    } else {
        PredictabilityResult {
            value: 0.5 * (1.0 - corr),
            b_star,
            branch: Branch::Correlation,
        }
    }
}

/// Centroid of the quantum steering ellipsoid,
/// c_se = (t_A − C t_B)/(1 − |t_B|²).
///
/// Fails with [`Error::DegenerateB`] when Bob's reduced state is pure; for
/// product states the formula collapses to t_A.
pub fn steering_ellipsoid_center(s: &FanoState) -> Result<Vec3> {
    let denom = 1.0 - s.t_b().norm_sq();
    if denom < 1e-12 {
        return Err(Error::DegenerateB);
    }
    Ok((s.t_a() - s.c().mul_vec(s.t_b())) * (1.0 / denom))
}

/// Inference variance Δ(a, b) = Σ_y P(y) f*(y)(1 − f*(y)); equal to one
/// half of the conditional quadratic entropy of the joint distribution.
/// Branches with P(y) ≤ 1e-14 contribute nothing (their limit is zero).
pub fn inference_variance(
    s: &FanoState,
    a: &MeasurementDirection,
    b: &MeasurementDirection,
) -> f64 {
    let d = joint_prob(s, a, b);
    let mut acc = 0.0;
    for y in 0..2 {
        let py = d.marginal_y(y);
        if py > BRANCH_TOL {
            let f = (d.p[1][y] / py).clamp(0.0, 1.0);
            acc += py * f * (1.0 - f);
        }
    }
    acc
}

/// Minimal inference variance over Bob's directions (analytic).
///
/// Value (1/4)(1 − C*) with C* = (1 − |t_B|²)(a·c_se)² + |Cᵀa|² and
/// b* ∝ Cᵀa − (a·c_se) t_B. When |t_B| = 1 the state is necessarily a
/// product and the continuous limit (1/4)(1 − (a·t_A)²) is returned with
/// the local-information branch as the degeneracy flag.
pub fn min_inference_variance(
    s: &FanoState,
    a: &MeasurementDirection,
) -> PredictabilityResult {
    let av = a.vec();
    let denom = 1.0 - s.t_b().norm_sq();
    if denom < 1e-12 {
        let la = av.dot(s.t_a());
        return PredictabilityResult {
            value: 0.25 * (1.0 - la * la),
            b_star: MeasurementDirection::Z,
            branch: Branch::LocalInfo,
        };
    }
    let c_se = (s.t_a() - s.c().mul_vec(s.t_b())) * (1.0 / denom);
    let ca = s.c().tr_mul_vec(av);
    let a_cse = av.dot(c_se);
    let c_star = denom * a_cse * a_cse + ca.norm_sq();
    let b_star = fallback_direction(ca - s.t_b() * a_cse);
    PredictabilityResult {
        value: 0.25 * (1.0 - c_star),
        b_star,
        branch: Branch::Correlation,
    }
}

fn pointwise(measure: ErrorMeasure, s: &FanoState, a: &MeasurementDirection, bv: Vec3) -> f64 {
    let b = MeasurementDirection::new(bv).expect("grid and search points are unit vectors");
    match measure {
        ErrorMeasure::BayesRisk => bayes_risk(s, a, &b),
        ErrorMeasure::InferenceVariance => inference_variance(s, a, &b),
    }
}

/// Brute-force minimum of a pointwise measure over Bob's sphere: scans n
/// Fibonacci-lattice directions, then refines the best candidates with a
/// tangent-plane pattern search down to a 1e-10 step.
///
/// This is the independent oracle for the analytic minimizers; it never
/// consults them.
pub fn brute_force_min(
    measure: ErrorMeasure,
    s: &FanoState,
    a: &MeasurementDirection,
    n: usize,
) -> (f64, MeasurementDirection) {
    assert!(n >= 100, "brute_force_min needs at least 100 grid points");
    let mut best: Vec<(f64, Vec3)> = Vec::with_capacity(4);
    for i in 0..n {
        let p = fibonacci_point(i, n);
        let v = pointwise(measure, s, a, p);
        if best.len() < 3 {
            best.push((v, p));
            best.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        } else if v < best[2].0 {
            best[2] = (v, p);
            best.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        }
    }
    let mut overall = best[0];
    for &(_, start) in &best {
        let refined = refine_on_sphere(|p| pointwise(measure, s, a, p), start);
        if refined.0 < overall.0 {
            overall = refined;
        }
    }
    (
        overall.0,
        MeasurementDirection::new(overall.1).expect("refined point is a unit vector"),
    )
}

/// Pattern search constrained to the unit sphere: move along tangent
/// directions, renormalize, halve the step on failure.
fn refine_on_sphere<F: Fn(Vec3) -> f64>(f: F, start: Vec3) -> (f64, Vec3) {
    let mut point = start.normalized().expect("start must be nonzero");
    let mut value = f(point);
    let mut step = 0.2;
    while step > 1e-10 {
        let seed = if point.x.abs() < 0.9 { Vec3::X } else { Vec3::Y };
        let u = point.cross(seed).normalized().expect("tangent exists");
        let v = point.cross(u);
        let mut improved = false;
        for dir in [u, -u, v, -v] {
            let candidate = (point + dir * step)
                .normalized()
                .expect("perturbed unit vector stays nonzero");
            let cv = f(candidate);
            if cv < value {
                point = candidate;
                value = cv;
                improved = true;
                break;
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    (value, point)
}
