//! Small fixed-size linear algebra: real 3-vectors and 3×3 matrices, plus
//! cyclic Jacobi eigensolvers for real symmetric 3×3 and complex Hermitian
//! 4×4 matrices.
//!
//! Closed-form eigenvalue formulas in dimension 3 are fragile near
//! degeneracies, so both solvers iterate Jacobi rotations until the
//! off-diagonal norm falls below 1e-14 relative to the matrix scale.

use num_complex::Complex64;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

/// Relative off-diagonal norm at which the Jacobi sweeps stop.
const JACOBI_TOL: f64 = 1e-14;
const JACOBI_MAX_SWEEPS: usize = 60;

/// Real 3-vector.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);
    pub const X: Vec3 = Vec3::new(1.0, 0.0, 0.0);
    pub const Y: Vec3 = Vec3::new(0.0, 1.0, 0.0);
    pub const Z: Vec3 = Vec3::new(0.0, 0.0, 1.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Vec3) -> Vec3 {
        Vec3::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Unit vector along `self`, or `None` when the norm is numerically zero.
    pub fn normalized(self) -> Option<Vec3> {
        let n = self.norm();
        if n < 1e-300 {
            None
        } else {
            Some(self * (1.0 / n))
        }
    }

    /// Outer product `self otherᵀ`.
    pub fn outer(self, other: Vec3) -> Mat3 {
        Mat3([
            [self.x * other.x, self.x * other.y, self.x * other.z],
            [self.y * other.x, self.y * other.y, self.y * other.z],
            [self.z * other.x, self.z * other.y, self.z * other.z],
        ])
    }

    pub fn as_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn from_array(a: [f64; 3]) -> Vec3 {
        Vec3::new(a[0], a[1], a[2])
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

/// Real 3×3 matrix in row-major storage.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat3(pub [[f64; 3]; 3]);

impl Mat3 {
    pub const ZERO: Mat3 = Mat3([[0.0; 3]; 3]);

    pub fn identity() -> Mat3 {
        Mat3::from_diag(1.0, 1.0, 1.0)
    }

    pub const fn from_diag(d0: f64, d1: f64, d2: f64) -> Mat3 {
        Mat3([[d0, 0.0, 0.0], [0.0, d1, 0.0], [0.0, 0.0, d2]])
    }

    pub fn transpose(self) -> Mat3 {
        let m = self.0;
        Mat3([
            [m[0][0], m[1][0], m[2][0]],
            [m[0][1], m[1][1], m[2][1]],
            [m[0][2], m[1][2], m[2][2]],
        ])
    }

    /// `self · v`
    pub fn mul_vec(self, v: Vec3) -> Vec3 {
        let m = self.0;
        Vec3::new(
            m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z,
        )
    }

    /// `selfᵀ · v`
    pub fn tr_mul_vec(self, v: Vec3) -> Vec3 {
        let m = self.0;
        Vec3::new(
            m[0][0] * v.x + m[1][0] * v.y + m[2][0] * v.z,
            m[0][1] * v.x + m[1][1] * v.y + m[2][1] * v.z,
            m[0][2] * v.x + m[1][2] * v.y + m[2][2] * v.z,
        )
    }

    pub fn mat_mul(self, o: Mat3) -> Mat3 {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.0[i][k] * o.0[k][j]).sum();
            }
        }
        Mat3(out)
    }

    /// Squared Frobenius norm `Tr[MᵀM]`.
    pub fn frobenius_sq(self) -> f64 {
        self.0.iter().flatten().map(|v| v * v).sum()
    }

    pub fn det(self) -> f64 {
        let m = self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Cofactor matrix: `cof(M)ᵀ = adj(M)`, so `M adj(M) = det(M) I`.
    pub fn cofactor(self) -> Mat3 {
        let m = self.0;
        let c = |i: usize, j: usize| {
            let r = [(i + 1) % 3, (i + 2) % 3];
            let s = [(j + 1) % 3, (j + 2) % 3];
            m[r[0]][s[0]] * m[r[1]][s[1]] - m[r[0]][s[1]] * m[r[1]][s[0]]
        };
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = c(i, j);
            }
        }
        Mat3(out)
    }

    /// Max absolute entry of `MᵀM − I`; zero for orthogonal matrices.
    pub fn orthogonality_defect(self) -> f64 {
        let g = self.transpose().mat_mul(self);
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((g.0[i][j] - target).abs());
            }
        }
        worst
    }

    /// Rotation by `angle` about the given (unit) axis, Rodrigues form.
    pub fn rotation(axis: Vec3, angle: f64) -> Mat3 {
        let u = axis.normalized().expect("rotation axis must be nonzero");
        let (s, c) = angle.sin_cos();
        let k = Mat3([[0.0, -u.z, u.y], [u.z, 0.0, -u.x], [-u.y, u.x, 0.0]]);
        Mat3::identity() + k * s + k.mat_mul(k) * (1.0 - c)
    }
}

impl Add for Mat3 {
    type Output = Mat3;
    fn add(self, o: Mat3) -> Mat3 {
        let mut out = self.0;
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] += o.0[i][j];
            }
        }
        Mat3(out)
    }
}

impl Mul<f64> for Mat3 {
    type Output = Mat3;
    fn mul(self, s: f64) -> Mat3 {
        let mut out = self.0;
        for row in &mut out {
            for v in row {
                *v *= s;
            }
        }
        Mat3(out)
    }
}

impl Index<(usize, usize)> for Mat3 {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat3 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.0[i][j]
    }
}

/// Eigenvalues of a real symmetric 3×3 matrix, descending, by cyclic Jacobi.
///
/// The input is symmetrized first so tiny asymmetries from rounding do not
/// bias the rotations.
pub fn sym3_eigenvalues(m: Mat3) -> [f64; 3] {
    let mut a = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            a[i][j] = 0.5 * (m.0[i][j] + m.0[j][i]);
        }
    }
    let scale = m.frobenius_sq().sqrt().max(1e-300);
    for _ in 0..JACOBI_MAX_SWEEPS {
        let off: f64 = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j)
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off.sqrt() <= JACOBI_TOL * scale {
            break;
        }
        for p in 0..2 {
            for q in (p + 1)..3 {
                if a[p][q].abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let theta = 0.5 * (2.0 * a[p][q]).atan2(a[p][p] - a[q][q]);
                let (s, c) = theta.sin_cos();
                for k in 0..3 {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp + s * akq;
                    a[k][q] = -s * akp + c * akq;
                }
                for k in 0..3 {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk + s * aqk;
                    a[q][k] = -s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev = [a[0][0], a[1][1], a[2][2]];
    ev.sort_by(|x, y| y.partial_cmp(x).unwrap());
    ev
}

/// Eigenvalues of a complex Hermitian 4×4 matrix, ascending, by cyclic
/// Jacobi with unitary two-sided rotations.
pub fn herm4_eigenvalues(m: &[[Complex64; 4]; 4]) -> [f64; 4] {
    let mut a = *m;
    // Hermitize to wash out rounding asymmetry.
    for i in 0..4 {
        for j in 0..4 {
            let avg = 0.5 * (a[i][j] + a[j][i].conj());
            a[i][j] = avg;
            a[j][i] = avg.conj();
        }
        a[i][i] = Complex64::new(a[i][i].re, 0.0);
    }
    let scale = a
        .iter()
        .flatten()
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt()
        .max(1e-300);

    for _ in 0..JACOBI_MAX_SWEEPS {
        let off: f64 = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j)
            .map(|(i, j)| a[i][j].norm_sqr())
            .sum();
        if off.sqrt() <= JACOBI_TOL * scale {
            break;
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                let apq = a[p][q];
                if apq.norm() <= f64::MIN_POSITIVE {
                    continue;
                }
                // Diagonalize the 2×2 Hermitian block [[app, apq], [apq*, aqq]]
                // with U = [[c, -e^{iφ} s], [e^{-iφ} s, c]], φ = arg(apq).
                let phi = apq.arg();
                let theta = 0.5 * (2.0 * apq.norm()).atan2(a[p][p].re - a[q][q].re);
                let (s, c) = theta.sin_cos();
                let e_pos = Complex64::from_polar(1.0, phi);
                let e_neg = e_pos.conj();
                // Column update: A ← A U
                for k in 0..4 {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = akp * c + akq * e_neg * s;
                    a[k][q] = -akp * e_pos * s + akq * c;
                }
                // Row update: A ← U† A
                for k in 0..4 {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = apk * c + aqk * e_pos * s;
                    a[q][k] = -apk * e_neg * s + aqk * c;
                }
            }
        }
    }
    let mut ev = [a[0][0].re, a[1][1].re, a[2][2].re, a[3][3].re];
    ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
    ev
}
