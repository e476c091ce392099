//! Shared oracle helpers for the integration suites. Everything here goes
//! through independent routes (nalgebra decompositions, direct quadrature,
//! Kraus operators) rather than the library's own algorithms.

#![allow(dead_code)]

use nalgebra::{Complex, Matrix2, Matrix4, SMatrix};
use qpredict::{DensityMatrix4, FanoState, Mat3, Vec3};

pub type C64 = Complex<f64>;

pub fn to_na(rho: &DensityMatrix4) -> Matrix4<C64> {
    Matrix4::from_fn(|i, j| C64::new(rho.m[i][j].re, rho.m[i][j].im))
}

/// Eigenvalues (ascending) of a Hermitian 4×4 matrix via nalgebra's
/// symmetric eigensolver.
pub fn na_eigenvalues(m: &Matrix4<C64>) -> [f64; 4] {
    let eig = m.symmetric_eigen();
    let mut ev = [
        eig.eigenvalues[0],
        eig.eigenvalues[1],
        eig.eigenvalues[2],
        eig.eigenvalues[3],
    ];
    ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ev
}

/// Eigenvalues (descending) of a symmetric 3×3 matrix via nalgebra.
pub fn na_sym3_eigenvalues(m: &Mat3) -> [f64; 3] {
    let na = SMatrix::<f64, 3, 3>::from_fn(|i, j| 0.5 * (m[(i, j)] + m[(j, i)]));
    let eig = na.symmetric_eigen();
    let mut ev = [eig.eigenvalues[0], eig.eigenvalues[1], eig.eigenvalues[2]];
    ev.sort_by(|a, b| b.partial_cmp(a).unwrap());
    ev
}

/// Singular values (descending) of a 3×3 matrix via nalgebra.
pub fn na_singular_values(m: &Mat3) -> [f64; 3] {
    let na = SMatrix::<f64, 3, 3>::from_fn(|i, j| m[(i, j)]);
    let svd = na.svd(false, false);
    let mut sv = [
        svd.singular_values[0],
        svd.singular_values[1],
        svd.singular_values[2],
    ];
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    sv
}

/// Pauli matrices as nalgebra 2×2 complexes.
pub fn pauli() -> [Matrix2<C64>; 3] {
    let z = C64::new;
    [
        Matrix2::new(z(0.0, 0.0), z(1.0, 0.0), z(1.0, 0.0), z(0.0, 0.0)),
        Matrix2::new(z(0.0, 0.0), z(0.0, -1.0), z(0.0, 1.0), z(0.0, 0.0)),
        Matrix2::new(z(1.0, 0.0), z(0.0, 0.0), z(0.0, 0.0), z(-1.0, 0.0)),
    ]
}

/// Fano parameters of an arbitrary Hermitian matrix by direct Pauli
/// traces (no positivity requirement).
pub fn fano_parameters(m: &Matrix4<C64>) -> (Vec3, Vec3, Mat3) {
    let s = pauli();
    let id = Matrix2::identity();
    let mut t_a = [0.0; 3];
    let mut t_b = [0.0; 3];
    let mut c = Mat3::ZERO;
    for i in 0..3 {
        t_a[i] = (s[i].kronecker(&id) * m).trace().re;
        t_b[i] = (id.kronecker(&s[i]) * m).trace().re;
        for j in 0..3 {
            c[(i, j)] = (s[i].kronecker(&s[j]) * m).trace().re;
        }
    }
    (
        Vec3::from_array(t_a),
        Vec3::from_array(t_b),
        c,
    )
}

/// Fano form assembled through nalgebra Kronecker products.
pub fn na_density(s: &FanoState) -> Matrix4<C64> {
    let p = pauli();
    let id = Matrix2::identity();
    let ta = s.t_a().as_array();
    let tb = s.t_b().as_array();
    let mut m = Matrix4::identity();
    for i in 0..3 {
        m += p[i].kronecker(&id) * C64::new(ta[i], 0.0);
        m += id.kronecker(&p[i]) * C64::new(tb[i], 0.0);
        for j in 0..3 {
            m += p[i].kronecker(&p[j]) * C64::new(s.c()[(i, j)], 0.0);
        }
    }
    m * C64::new(0.25, 0.0)
}

/// Composite Simpson integration over [a, b].
pub fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize) -> f64 {
    let n = 2 * panels;
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for k in 1..n {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + k as f64 * h);
    }
    acc * h / 3.0
}

/// R_F by quadrature of the defining integral, substituting t = tan²θ so
/// the integrand is smooth and bounded on [0, π/2].
pub fn rf_quadrature(x: f64, y: f64, z: f64) -> f64 {
    let g = |theta: f64| {
        let tan = theta.tan();
        let t = tan * tan;
        let sec2 = 1.0 + t;
        let num = 2.0 * tan * sec2;
        num / ((t + x) * (t + y) * (t + z)).sqrt()
    };
    // The x = 0 endpoint needs the analytic limit 2/sqrt(yz); Simpson
    // never evaluates interior singularities, only theta = 0 and pi/2.
    let f = |theta: f64| {
        if theta == 0.0 {
            if x == 0.0 {
                return 2.0 / (y * z).sqrt();
            }
            return 0.0;
        }
        if (theta - std::f64::consts::FRAC_PI_2).abs() < 1e-15 {
            return 2.0;
        }
        g(theta)
    };
    0.5 * simpson(&f, 0.0, std::f64::consts::FRAC_PI_2, 1 << 17)
}

/// R_D by quadrature of the defining integral, same substitution.
pub fn rd_quadrature(x: f64, y: f64, z: f64) -> f64 {
    let f = |theta: f64| {
        if theta == 0.0 {
            if x == 0.0 {
                return 2.0 / (y.sqrt() * z * z.sqrt());
            }
            if y == 0.0 {
                return 2.0 / (x.sqrt() * z * z.sqrt());
            }
            return 0.0;
        }
        if (theta - std::f64::consts::FRAC_PI_2).abs() < 1e-15 {
            return 0.0;
        }
        let tan = theta.tan();
        let t = tan * tan;
        let sec2 = 1.0 + t;
        2.0 * tan * sec2 / ((t + z) * ((t + x) * (t + y) * (t + z)).sqrt())
    };
    1.5 * simpson(&f, 0.0, std::f64::consts::FRAC_PI_2, 1 << 17)
}

/// Amplitude-damping Kraus pair K₀ = diag(1, √(1−p)), K₁ = √p |0⟩⟨1|.
pub fn damping_kraus(p: f64) -> [Matrix2<C64>; 2] {
    let z = C64::new;
    [
        Matrix2::new(z(1.0, 0.0), z(0.0, 0.0), z(0.0, 0.0), z((1.0 - p).sqrt(), 0.0)),
        Matrix2::new(z(0.0, 0.0), z(p.sqrt(), 0.0), z(0.0, 0.0), z(0.0, 0.0)),
    ]
}

/// ρ' = Σ_{ij} (Kᵢ ⊗ Lⱼ) ρ (Kᵢ ⊗ Lⱼ)†.
pub fn apply_kraus_pair(
    rho: &Matrix4<C64>,
    ka: &[Matrix2<C64>],
    kb: &[Matrix2<C64>],
) -> Matrix4<C64> {
    let mut out = Matrix4::zeros();
    for ki in ka {
        for lj in kb {
            let op = ki.kronecker(lj);
            out += op * rho * op.adjoint();
        }
    }
    out
}
