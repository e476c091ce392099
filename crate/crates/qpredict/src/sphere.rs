//! Deterministic quadrature over the unit sphere on a Fibonacci lattice.
//!
//! The lattice places point i at height z = 1 − (2i+1)/n with azimuth
//! i·π(3−√5) (the golden angle), which distributes n points with
//! near-uniform area weights. Averages of smooth integrands converge much
//! faster than Monte Carlo and, unlike Monte Carlo, are reproducible for a
//! fixed n.

use crate::linalg::Vec3;

/// Default point count used by the Haar-average quadrature fallback.
pub const DEFAULT_QUAD_N: usize = 200_000;

/// The i-th of n Fibonacci-lattice points on the unit sphere.
pub fn fibonacci_point(i: usize, n: usize) -> Vec3 {
    debug_assert!(i < n);
    let golden_angle = std::f64::consts::PI * (3.0 - 5.0_f64.sqrt());
    let z = 1.0 - (2.0 * i as f64 + 1.0) / n as f64;
    let r = (1.0 - z * z).max(0.0).sqrt();
    let phi = golden_angle * i as f64;
    Vec3::new(r * phi.cos(), r * phi.sin(), z)
}

/// All n lattice points.
pub fn fibonacci_points(n: usize) -> Vec<Vec3> {
    (0..n).map(|i| fibonacci_point(i, n)).collect()
}

/// Average of `f` over the unit sphere using n lattice points.
///
/// Summation is compensated (Neumaier), so the result is independent of
/// how the caller batches evaluations and stable to ~1e-16 relative.
pub fn sphere_quadrature<F: Fn(Vec3) -> f64>(f: F, n: usize) -> f64 {
    assert!(n >= 1, "sphere_quadrature requires at least one point");
    let mut sum = 0.0;
    let mut compensation = 0.0;
    for i in 0..n {
        let value = f(fibonacci_point(i, n));
        let t = sum + value;
        if sum.abs() >= value.abs() {
            compensation += (sum - t) + value;
        } else {
            compensation += (value - t) + sum;
        }
        sum = t;
    }
    (sum + compensation) / n as f64
}
