//! Two-qubit states in Fano form: two local Bloch vectors and a 3×3
//! correlation matrix,
//!
//! ρ = (1/4) [ I₄ + t_A·σ ⊗ I + I ⊗ t_B·σ + Σᵢⱼ C_ij σᵢ ⊗ σⱼ ],
//!
//! with σ₁ = σ_x, σ₂ = σ_y, σ₃ = σ_z in the computational basis. Under
//! this convention the four Bell states carry the correlation matrices
//! Φ⁺ ↔ diag(1,−1,1), Φ⁻ ↔ diag(−1,1,1), Ψ⁺ ↔ diag(1,1,−1) and
//! Ψ⁻ ↔ diag(−1,−1,−1).
//!
//! Positivity of ρ is equivalent to the three scalar inequalities reported
//! by [`validate`]: for a Hermitian unit-trace matrix the elementary
//! symmetric polynomials e₂, e₃, e₄ of the spectrum are nonnegative iff no
//! eigenvalue is negative, and each eₖ has a closed form in the Fano
//! parameters. The same report carries the minimum eigenvalue of the
//! reconstructed 4×4 matrix so the two routes can be cross-checked.

use crate::error::{Error, Result};
use crate::linalg::{herm4_eigenvalues, sym3_eigenvalues, Mat3, Vec3};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

/// Bloch vector of a qubit reduced state; physical states have norm ≤ 1.
pub type BlochVector = Vec3;

/// 3×3 correlation matrix `C_ij = Tr[(σᵢ⊗σⱼ) ρ]`; every entry lies in [−1, 1].
pub type CorrMatrix = Mat3;

/// Slack allowed on the positivity inequalities and eigenvalues; boundary
/// states (Bell states, pure products) must pass.
pub const VALIDITY_TOL: f64 = 1e-10;

/// Unit 3-vector defining a sharp spin observable `a·σ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementDirection(Vec3);

impl MeasurementDirection {
    pub const X: MeasurementDirection = MeasurementDirection(Vec3::X);
    pub const Y: MeasurementDirection = MeasurementDirection(Vec3::Y);
    pub const Z: MeasurementDirection = MeasurementDirection(Vec3::Z);

    /// Normalizes `v`; fails only for a numerically zero vector.
    pub fn new(v: Vec3) -> Result<Self> {
        v.normalized()
            .map(MeasurementDirection)
            .ok_or(Error::InvalidDirection)
    }

    pub fn from_components(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::new(Vec3::new(x, y, z))
    }

    pub fn vec(&self) -> Vec3 {
        self.0
    }

    pub fn flipped(&self) -> Self {
        MeasurementDirection(-self.0)
    }
}

/// The four maximally entangled Bell states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bell {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl Bell {
    /// Correlation matrix w_k of the Bell state in the Fano convention.
    pub fn corr_matrix(self) -> CorrMatrix {
        match self {
            Bell::PhiPlus => Mat3::from_diag(1.0, -1.0, 1.0),
            Bell::PhiMinus => Mat3::from_diag(-1.0, 1.0, 1.0),
            Bell::PsiPlus => Mat3::from_diag(1.0, 1.0, -1.0),
            Bell::PsiMinus => Mat3::from_diag(-1.0, -1.0, -1.0),
        }
    }

    /// Conventional 1-based index (Φ⁺, Φ⁻, Ψ⁺, Ψ⁻) = (1, 2, 3, 4).
    pub fn from_index(k: usize) -> Result<Self> {
        match k {
            1 => Ok(Bell::PhiPlus),
            2 => Ok(Bell::PhiMinus),
            3 => Ok(Bell::PsiPlus),
            4 => Ok(Bell::PsiMinus),
            _ => Err(Error::DomainError(format!("Bell index {k} not in 1..=4"))),
        }
    }
}

/// 4×4 complex density matrix, row-major, basis |00⟩, |01⟩, |10⟩, |11⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix4 {
    pub m: [[Complex64; 4]; 4],
}

impl DensityMatrix4 {
    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1] + self.m[2][2] + self.m[3][3]
    }

    /// Max entrywise deviation from Hermiticity.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.m[i][j] - self.m[j][i].conj()).norm());
            }
        }
        worst
    }

    /// Eigenvalues in ascending order (the matrix is Hermitized first).
    pub fn eigenvalues(&self) -> [f64; 4] {
        herm4_eigenvalues(&self.m)
    }

    /// Partial transpose on subsystem B: (i,j),(k,l) → (i,l),(k,j).
    pub fn partial_transpose_b(&self) -> DensityMatrix4 {
        let mut out = self.m;
        for i in 0..2 {
            for k in 0..2 {
                for j in 0..2 {
                    for l in 0..2 {
                        out[2 * i + j][2 * k + l] = self.m[2 * i + l][2 * k + j];
                    }
                }
            }
        }
        DensityMatrix4 { m: out }
    }
}

/// Report produced by [`validate`]: the three closed-form positivity
/// inequalities (all must be ≥ −1e-10) together with the minimum eigenvalue
/// of the reconstructed density matrix.
///
/// `sym2`, `sym3`, `sym4` are scaled elementary symmetric polynomials of
/// the spectrum: sym2 = 8e₂ = 4 − ‖r‖², sym3 = 16e₃, sym4 = 256e₄ = det(4ρ),
/// where ‖r‖² = 1 + |t_A|² + |t_B|² + ‖C‖².
#[derive(Debug, Clone, Copy)]
pub struct ValidityReport {
    pub sym2: f64,
    pub sym3: f64,
    pub sym4: f64,
    pub min_eigenvalue: f64,
    pub valid: bool,
}

/// Evaluates the positivity conditions for candidate Fano parameters.
///
/// Never fails: invalid parameters simply produce a report with
/// `valid == false` and negative margins.
pub fn validate(t_a: BlochVector, t_b: BlochVector, c: CorrMatrix) -> ValidityReport {
    let aa = t_a.norm_sq();
    let bb = t_b.norm_sq();
    let c2 = c.frobenius_sq();
    let r2 = 1.0 + aa + bb + c2;
    let a_c_b = t_a.dot(c.mul_vec(t_b));
    let det_c = c.det();
    let cof = c.cofactor();
    let cta = c.tr_mul_vec(t_a).norm_sq();
    let ctb = c.mul_vec(t_b).norm_sq();
    let cof2 = cof.frobenius_sq();
    let a_cof_b = t_a.dot(cof.mul_vec(t_b));

    let sym2 = 4.0 - r2;
    let sym3 = 2.0 * (a_c_b - det_c) - (r2 - 2.0);
    let sym4 = (r2 - 2.0) * (r2 - 2.0) + 8.0 * (a_c_b - det_c) + 8.0 * a_cof_b
        - 4.0 * (aa * bb + cta + ctb + cof2);

    let rho = assemble_density(t_a, t_b, c);
    let min_eigenvalue = rho.eigenvalues()[0];

    let valid = sym2 >= -VALIDITY_TOL
        && sym3 >= -VALIDITY_TOL
        && sym4 >= -VALIDITY_TOL
        && min_eigenvalue >= -VALIDITY_TOL;

    ValidityReport {
        sym2,
        sym3,
        sym4,
        min_eigenvalue,
        valid,
    }
}

/// Two-qubit state in Fano form. Constructed values always satisfy the
/// positivity conditions within [`VALIDITY_TOL`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FanoState {
    t_a: BlochVector,
    t_b: BlochVector,
    c: CorrMatrix,
}

/// On-disk JSON schema: `{"t_a":[x,y,z],"t_b":[x,y,z],"c":[[..],[..],[..]]}`,
/// row-major C.
#[derive(Serialize, Deserialize)]
struct RawFano {
    t_a: [f64; 3],
    t_b: [f64; 3],
    c: [[f64; 3]; 3],
}

impl FanoState {
    /// Validating constructor.
    pub fn new(t_a: BlochVector, t_b: BlochVector, c: CorrMatrix) -> Result<Self> {
        for v in c.0.iter().flatten() {
            if v.abs() > 1.0 + 1e-12 {
                return Err(Error::NonPhysical(format!(
                    "correlation entry {v} outside [-1, 1]"
                )));
            }
        }
        if t_a.norm() > 1.0 + 1e-12 || t_b.norm() > 1.0 + 1e-12 {
            return Err(Error::NonPhysical("Bloch vector norm exceeds 1".into()));
        }
        let report = validate(t_a, t_b, c);
        if !report.valid {
            return Err(Error::NonPhysical(format!(
                "positivity violated: sym2={:.3e} sym3={:.3e} sym4={:.3e} min_eig={:.3e}",
                report.sym2, report.sym3, report.sym4, report.min_eigenvalue
            )));
        }
        Ok(FanoState { t_a, t_b, c })
    }

    /// Constructor for parameters already known to satisfy positivity
    /// (family constructors, local rotations of valid states).
    pub fn new_unchecked(t_a: BlochVector, t_b: BlochVector, c: CorrMatrix) -> Self {
        FanoState { t_a, t_b, c }
    }

    pub fn t_a(&self) -> BlochVector {
        self.t_a
    }

    pub fn t_b(&self) -> BlochVector {
        self.t_b
    }

    pub fn c(&self) -> CorrMatrix {
        self.c
    }

    pub fn maximally_mixed() -> Self {
        FanoState::new_unchecked(Vec3::ZERO, Vec3::ZERO, Mat3::ZERO)
    }

    pub fn bell(which: Bell) -> Self {
        FanoState::new_unchecked(Vec3::ZERO, Vec3::ZERO, which.corr_matrix())
    }

    pub fn validity(&self) -> ValidityReport {
        validate(self.t_a, self.t_b, self.c)
    }

    /// Parses the JSON state format; malformed documents give
    /// [`Error::Parse`], well-formed but unphysical ones [`Error::NonPhysical`].
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawFano =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        FanoState::new(
            Vec3::from_array(raw.t_a),
            Vec3::from_array(raw.t_b),
            Mat3(raw.c),
        )
    }

    pub fn to_json(&self) -> String {
        let raw = RawFano {
            t_a: self.t_a.as_array(),
            t_b: self.t_b.as_array(),
            c: self.c.0,
        };
        serde_json::to_string(&raw).expect("plain arrays always serialize")
    }
}

fn pauli() -> [[[Complex64; 2]; 2]; 3] {
    let z = Complex64::new;
    [
        [[z(0.0, 0.0), z(1.0, 0.0)], [z(1.0, 0.0), z(0.0, 0.0)]],
        [[z(0.0, 0.0), z(0.0, -1.0)], [z(0.0, 1.0), z(0.0, 0.0)]],
        [[z(1.0, 0.0), z(0.0, 0.0)], [z(0.0, 0.0), z(-1.0, 0.0)]],
    ]
}

fn assemble_density(t_a: BlochVector, t_b: BlochVector, c: CorrMatrix) -> DensityMatrix4 {
    let s = pauli();
    let ta = t_a.as_array();
    let tb = t_b.as_array();
    let mut m = [[Complex64::new(0.0, 0.0); 4]; 4];
    for d in 0..4 {
        m[d][d] = Complex64::new(1.0, 0.0);
    }
    for (i, si) in s.iter().enumerate() {
        for p in 0..2 {
            for q in 0..2 {
                // t_A·σ ⊗ I
                m[2 * p][2 * q] += si[p][q] * ta[i];
                m[2 * p + 1][2 * q + 1] += si[p][q] * ta[i];
                // I ⊗ t_B·σ
                m[p][q] += si[p][q] * tb[i];
                m[2 + p][2 + q] += si[p][q] * tb[i];
            }
        }
    }
    for (i, si) in s.iter().enumerate() {
        for (j, sj) in s.iter().enumerate() {
            let w = c[(i, j)];
            if w == 0.0 {
                continue;
            }
            for p in 0..2 {
                for q in 0..2 {
                    for r in 0..2 {
                        for t in 0..2 {
                            m[2 * p + r][2 * q + t] += si[p][q] * sj[r][t] * w;
                        }
                    }
                }
            }
        }
    }
    for row in &mut m {
        for v in row {
            *v *= 0.25;
        }
    }
    DensityMatrix4 { m }
}

/// Reconstructs the 4×4 density matrix of a Fano-form state.
pub fn density_matrix(s: &FanoState) -> DensityMatrix4 {
    assemble_density(s.t_a, s.t_b, s.c)
}

/// Inverse of [`density_matrix`] through the trace formulas
/// t_A,i = Tr[(σᵢ⊗I)ρ], t_B,j = Tr[(I⊗σⱼ)ρ], C_ij = Tr[(σᵢ⊗σⱼ)ρ].
///
/// Fails with [`Error::NonPhysical`] unless ρ is Hermitian and unit-trace
/// within 1e-12 and PSD within 1e-10.
pub fn from_density_matrix(rho: &DensityMatrix4) -> Result<FanoState> {
    if rho.hermiticity_defect() > 1e-12 {
        return Err(Error::NonPhysical("matrix is not Hermitian".into()));
    }
    let tr = rho.trace();
    if (tr - Complex64::new(1.0, 0.0)).norm() > 1e-12 {
        return Err(Error::NonPhysical(format!("trace {} is not 1", tr.re)));
    }
    if rho.eigenvalues()[0] < -VALIDITY_TOL {
        return Err(Error::NonPhysical(format!(
            "negative eigenvalue {:.3e}",
            rho.eigenvalues()[0]
        )));
    }
    let s = pauli();
    let m = &rho.m;
    let mut ta = [0.0; 3];
    let mut tb = [0.0; 3];
    let mut c = Mat3::ZERO;
    for (i, si) in s.iter().enumerate() {
        let mut acc_a = Complex64::new(0.0, 0.0);
        let mut acc_b = Complex64::new(0.0, 0.0);
        for p in 0..2 {
            for q in 0..2 {
                // Tr[(σᵢ⊗I)ρ] = Σ_{p,q,r} σᵢ[p][q] ρ[(q,r),(p,r)]
                for r in 0..2 {
                    acc_a += si[p][q] * m[2 * q + r][2 * p + r];
                    acc_b += si[p][q] * m[2 * r + q][2 * r + p];
                }
            }
        }
        ta[i] = acc_a.re;
        tb[i] = acc_b.re;
        for (j, sj) in s.iter().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for p in 0..2 {
                for q in 0..2 {
                    for r in 0..2 {
                        for t in 0..2 {
                            acc += si[p][q] * sj[r][t] * m[2 * q + t][2 * p + r];
                        }
                    }
                }
            }
            c[(i, j)] = acc.re;
        }
    }
    FanoState::new(Vec3::from_array(ta), Vec3::from_array(tb), c)
}

/// Bell-diagonal state with correlation matrix diag(c1, c2, c3).
///
/// The point must lie in the Bell tetrahedron: the four eigenvalues
/// (1 + c1 − c2 + c3)/4, (1 − c1 + c2 + c3)/4, (1 + c1 + c2 − c3)/4 and
/// (1 − c1 − c2 − c3)/4 must all be nonnegative (within [`VALIDITY_TOL`]).
pub fn bell_diagonal(c1: f64, c2: f64, c3: f64) -> Result<FanoState> {
    for lambda in bell_diagonal_eigenvalues(c1, c2, c3) {
        if lambda < -VALIDITY_TOL {
            return Err(Error::NonPhysical(format!(
                "({c1}, {c2}, {c3}) is outside the Bell tetrahedron (eigenvalue {lambda:.3e})"
            )));
        }
    }
    Ok(FanoState::new_unchecked(
        Vec3::ZERO,
        Vec3::ZERO,
        Mat3::from_diag(c1, c2, c3),
    ))
}

/// Eigenvalues of the Bell-diagonal state in the order Φ⁺, Φ⁻, Ψ⁺, Ψ⁻.
pub fn bell_diagonal_eigenvalues(c1: f64, c2: f64, c3: f64) -> [f64; 4] {
    [
        (1.0 + c1 - c2 + c3) / 4.0,
        (1.0 - c1 + c2 + c3) / 4.0,
        (1.0 + c1 + c2 - c3) / 4.0,
        (1.0 - c1 - c2 - c3) / 4.0,
    ]
}

/// Classical-quantum state Σ_x P(x) |x⟩⟨x|_{n_A} ⊗ ρ_B^x with
/// P(0) = p0 and Bob's conditional Bloch vectors tb0, tb1.
///
/// The correlation matrix is the rank-1 outer product
/// n_A (p0 tb0 − (1−p0) tb1)ᵀ, so det C = 0 for every such state.
pub fn classical_quantum(
    p0: f64,
    n_a: &MeasurementDirection,
    tb0: BlochVector,
    tb1: BlochVector,
) -> FanoState {
    assert!((0.0..=1.0).contains(&p0), "p0 must lie in [0, 1]");
    assert!(
        tb0.norm() <= 1.0 + 1e-12 && tb1.norm() <= 1.0 + 1e-12,
        "conditional Bloch vectors must lie in the unit ball"
    );
    let n = n_a.vec();
    let t_a = n * (2.0 * p0 - 1.0);
    let t_b = tb0 * p0 + tb1 * (1.0 - p0);
    let c = n.outer(tb0 * p0 - tb1 * (1.0 - p0));
    FanoState::new(t_a, t_b, c).expect("classical-quantum construction is positive")
}

/// Singular values of a correlation matrix, descending. Computed as the
/// square roots of the eigenvalues of CᵀC (cyclic Jacobi).
pub fn singular_values(c: &CorrMatrix) -> [f64; 3] {
    let gram = c.transpose().mat_mul(*c);
    let ev = sym3_eigenvalues(gram);
    [
        ev[0].max(0.0).sqrt(),
        ev[1].max(0.0).sqrt(),
        ev[2].max(0.0).sqrt(),
    ]
}

/// Applies local rotations: t_A → R_A t_A, t_B → R_B t_B, C → R_A C R_Bᵀ.
///
/// Both matrices must be proper rotations (orthogonal, det +1) within
/// 1e-12; validity of the state is preserved exactly.
pub fn local_rotate(s: &FanoState, r_a: &Mat3, r_b: &Mat3) -> Result<FanoState> {
    for (name, r) in [("r_a", r_a), ("r_b", r_b)] {
        if r.orthogonality_defect() > 1e-12 {
            return Err(Error::InvalidRotation(format!("{name} is not orthogonal")));
        }
        if (r.det() - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidRotation(format!(
                "{name} has determinant {:.6} instead of +1",
                r.det()
            )));
        }
    }
    Ok(FanoState::new_unchecked(
        r_a.mul_vec(s.t_a),
        r_b.mul_vec(s.t_b),
        r_a.mat_mul(s.c).mat_mul(r_b.transpose()),
    ))
}

/// Reproducible random full-rank state: draw G with i.i.d. standard-normal
/// real and imaginary parts and normalize ρ = GG†/Tr[GG†] (Ginibre
/// construction, PSD by design).
pub fn random_state(seed: u64) -> FanoState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = [[Complex64::new(0.0, 0.0); 4]; 4];
    for row in &mut g {
        for v in row.iter_mut() {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            *v = Complex64::new(re, im);
        }
    }
    let mut m = [[Complex64::new(0.0, 0.0); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, gj) in g[j].iter().enumerate() {
                acc += g[i][k] * gj.conj();
            }
            m[i][j] = acc;
        }
    }
    let tr: f64 = (0..4).map(|i| m[i][i].re).sum();
    for row in &mut m {
        for v in row.iter_mut() {
            *v /= tr;
        }
    }
    from_density_matrix(&DensityMatrix4 { m }).expect("Ginibre states are positive")
}

/// Deterministic random unit vector, for seeded test sweeps.
pub fn random_direction(seed: u64) -> MeasurementDirection {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    loop {
        let v = Vec3::new(
            StandardNormal.sample(&mut rng),
            StandardNormal.sample(&mut rng),
            StandardNormal.sample(&mut rng),
        );
        if let Ok(d) = MeasurementDirection::new(v) {
            return d;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maximally_mixed_density_matrix() {
        let rho = density_matrix(&FanoState::maximally_mixed());
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { 0.25 } else { 0.0 };
                assert!((rho.m[i][j] - Complex64::new(expect, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn phi_plus_is_rank_one() {
        let rho = density_matrix(&FanoState::bell(Bell::PhiPlus));
        let ev = rho.eigenvalues();
        assert!(ev[0].abs() < 1e-14 && ev[1].abs() < 1e-14 && ev[2].abs() < 1e-14);
        assert!((ev[3] - 1.0).abs() < 1e-14);
        // |Φ⁺⟩⟨Φ⁺| has 1/2 at the four corners of the (|00⟩,|11⟩) block.
        assert!((rho.m[0][0].re - 0.5).abs() < 1e-15);
        assert!((rho.m[0][3].re - 0.5).abs() < 1e-15);
        assert!((rho.m[3][0].re - 0.5).abs() < 1e-15);
        assert!((rho.m[3][3].re - 0.5).abs() < 1e-15);
    }

    #[test]
    fn pure_product_zz() {
        // t_A = t_B = ẑ with C = ẑẑᵀ is |00⟩⟨00|.
        let s = FanoState::new(Vec3::Z, Vec3::Z, Vec3::Z.outer(Vec3::Z)).unwrap();
        let rho = density_matrix(&s);
        assert!((rho.m[0][0].re - 1.0).abs() < 1e-14);
        for (i, j) in [(1, 1), (2, 2), (3, 3), (0, 1), (0, 2), (0, 3)] {
            assert!(rho.m[i][j].norm() < 1e-14);
        }
    }

    #[test]
    fn roundtrip_phi_plus() {
        let s = FanoState::bell(Bell::PhiPlus);
        let back = from_density_matrix(&density_matrix(&s)).unwrap();
        assert!((back.t_a() - s.t_a()).norm() < 1e-12);
        assert!((back.t_b() - s.t_b()).norm() < 1e-12);
        for i in 0..3 {
            for j in 0..3 {
                assert!((back.c()[(i, j)] - s.c()[(i, j)]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn roundtrip_random_states() {
        for seed in 0..100 {
            let s = random_state(seed);
            let back = from_density_matrix(&density_matrix(&s)).unwrap();
            assert!((back.t_a() - s.t_a()).norm() < 1e-12, "seed {seed}");
            assert!((back.t_b() - s.t_b()).norm() < 1e-12);
            for i in 0..3 {
                for j in 0..3 {
                    assert!((back.c()[(i, j)] - s.c()[(i, j)]).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn validate_maximally_mixed() {
        let report = validate(Vec3::ZERO, Vec3::ZERO, Mat3::ZERO);
        assert!(report.valid);
        assert!((report.sym2 - 3.0).abs() < 1e-15);
        assert!((report.min_eigenvalue - 0.25).abs() < 1e-14);
    }

    #[test]
    fn validate_rejects_bell_111() {
        // diag(1,1,1) has the Ψ⁻ eigenvalue (1 − 3)/4 = −1/2.
        let report = validate(Vec3::ZERO, Vec3::ZERO, Mat3::from_diag(1.0, 1.0, 1.0));
        assert!(!report.valid);
        assert!((report.min_eigenvalue + 0.5).abs() < 1e-13);
    }

    #[test]
    fn validate_boundary_bell_state() {
        let report = validate(Vec3::ZERO, Vec3::ZERO, Mat3::from_diag(1.0, -1.0, 1.0));
        assert!(report.valid);
        assert!(report.min_eigenvalue.abs() < 1e-13);
        assert!(report.sym3.abs() < 1e-13 && report.sym4.abs() < 1e-13);
    }

    #[test]
    fn bell_diagonal_families() {
        assert!(bell_diagonal(1.0, -1.0, 1.0).is_ok());
        assert!(bell_diagonal(1.0, 1.0, 1.0).is_err());
        for k in 0..=10 {
            let w = k as f64 / 10.0;
            assert!(bell_diagonal(-w, -w, -w).is_ok(), "Werner w={w}");
        }
    }

    #[test]
    fn classical_quantum_examples() {
        // p0 = 1/2, n_A = ẑ, tb0 = x̂, tb1 = −x̂ gives t = 0 and C = ẑx̂ᵀ.
        let s = classical_quantum(0.5, &MeasurementDirection::Z, Vec3::X, -Vec3::X);
        assert!(s.t_a().norm() < 1e-15 && s.t_b().norm() < 1e-15);
        assert!((s.c()[(2, 0)] - 1.0).abs() < 1e-15);
        assert!((s.c().frobenius_sq() - 1.0).abs() < 1e-15);

        // p0 = 1 is a product state with C = t_A t_Bᵀ.
        let tb0 = Vec3::new(0.3, -0.2, 0.4);
        let s = classical_quantum(1.0, &MeasurementDirection::X, tb0, Vec3::Z);
        let expect = s.t_a().outer(s.t_b());
        for i in 0..3 {
            for j in 0..3 {
                assert!((s.c()[(i, j)] - expect[(i, j)]).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn classical_quantum_rank_one() {
        for seed in 0..100 {
            let s = random_cq(seed);
            assert!(s.c().det().abs() < 1e-12, "seed {seed}");
        }
    }

    pub(super) fn random_cq(seed: u64) -> FanoState {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x2545_f491_4f6c_dd1d));
        let unit = |r: &mut ChaCha8Rng| {
            MeasurementDirection::new(Vec3::new(
                StandardNormal.sample(r),
                StandardNormal.sample(r),
                StandardNormal.sample(r),
            ))
            .unwrap()
        };
        let n_a = unit(&mut rng);
        let radius = |r: &mut ChaCha8Rng| {
            let x: f64 = StandardNormal.sample(r);
            (x * x / (1.0 + x * x)).sqrt()
        };
        let tb0 = unit(&mut rng).vec() * radius(&mut rng);
        let tb1 = unit(&mut rng).vec() * radius(&mut rng);
        let p0 = {
            let x: f64 = StandardNormal.sample(&mut rng);
            1.0 / (1.0 + (-x).exp())
        };
        classical_quantum(p0, &n_a, tb0, tb1)
    }

    #[test]
    fn singular_values_examples() {
        assert_eq!(
            singular_values(&Mat3::from_diag(1.0, -1.0, 1.0)),
            [1.0, 1.0, 1.0]
        );
        let sv = singular_values(&Vec3::Z.outer(Vec3::X));
        assert!((sv[0] - 1.0).abs() < 1e-14 && sv[1].abs() < 1e-14 && sv[2].abs() < 1e-14);
    }

    #[test]
    fn local_rotate_bell_diagonal_quarter_turn() {
        // Rotating both sides by π/2 about ẑ swaps the x and y axes, so
        // diag(c1, c2, c3) → diag(c2, c1, c3).
        let s = bell_diagonal(0.3, -0.5, 0.1).unwrap();
        let r = Mat3::rotation(Vec3::Z, std::f64::consts::FRAC_PI_2);
        let rotated = local_rotate(&s, &r, &r).unwrap();
        assert!((rotated.c()[(0, 0)] + 0.5).abs() < 1e-14);
        assert!((rotated.c()[(1, 1)] - 0.3).abs() < 1e-14);
        assert!((rotated.c()[(2, 2)] - 0.1).abs() < 1e-14);
    }

    #[test]
    fn local_rotate_rejects_reflection() {
        let s = FanoState::maximally_mixed();
        let reflection = Mat3::from_diag(-1.0, 1.0, 1.0);
        assert!(matches!(
            local_rotate(&s, &reflection, &Mat3::identity()),
            Err(Error::InvalidRotation(_))
        ));
    }

    #[test]
    fn random_state_is_deterministic_and_valid() {
        let a = random_state(12345);
        let b = random_state(12345);
        assert_eq!(a.t_a(), b.t_a());
        assert_eq!(a.c(), b.c());
        for seed in 0..1000 {
            assert!(random_state(seed).validity().valid, "seed {seed}");
        }
    }

    #[test]
    fn random_state_bloch_mean_is_centered() {
        // Empirical mean of t_A over many draws should vanish within 3σ.
        let n = 100_000;
        let mut sum = Vec3::ZERO;
        let mut sum_sq = Vec3::ZERO;
        for seed in 0..n {
            let t = random_state(seed as u64).t_a();
            sum = sum + t;
            sum_sq = sum_sq + Vec3::new(t.x * t.x, t.y * t.y, t.z * t.z);
        }
        let nf = n as f64;
        let mean = sum * (1.0 / nf);
        for (m, sq) in [
            (mean.x, sum_sq.x),
            (mean.y, sum_sq.y),
            (mean.z, sum_sq.z),
        ] {
            let var = (sq / nf - m * m).max(0.0);
            let sigma_mean = (var / nf).sqrt();
            assert!(m.abs() < 3.0 * sigma_mean, "mean {m} vs 3σ {}", 3.0 * sigma_mean);
        }
    }

    #[test]
    fn json_roundtrip_and_errors() {
        let s = bell_diagonal(0.2, -0.4, 0.3).unwrap();
        let text = s.to_json();
        let back = FanoState::from_json(&text).unwrap();
        assert_eq!(back.c(), s.c());
        assert!(matches!(
            FanoState::from_json("{not json"),
            Err(Error::Parse(_))
        ));
        let bad = r#"{"t_a":[0,0,0],"t_b":[0,0,0],"c":[[1,0,0],[0,1,0],[0,0,1]]}"#;
        assert!(matches!(FanoState::from_json(bad), Err(Error::NonPhysical(_))));
    }
}
