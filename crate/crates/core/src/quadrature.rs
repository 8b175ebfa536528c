//! Adaptive quadrature over the unit disk: Gauss–Kronrod 7-15 in the radius,
//! the periodic trapezoid rule in the angle.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7]
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Controls for [`disk_integral`].
#[derive(Clone, Copy, Debug, Serialize)]
pub struct QuadratureParams {
    /// Target relative error.
    pub tol: f64,
    /// Angular nodes of the trapezoid rule (at least 8, rounded up to even).
    pub grid: usize,
    /// Budget of radial subintervals.
    pub max_intervals: usize,
}

impl Default for QuadratureParams {
    fn default() -> Self {
        QuadratureParams { tol: 1e-3, grid: 64, max_intervals: 200 }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct QuadratureResult {
    pub estimate: f64,
    /// Estimated absolute error.
    pub error: f64,
    pub intervals: usize,
}

/// One Kronrod sweep: (integral, error estimate).
fn kronrod(f: &(impl Fn(f64) -> f64 + Sync), a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let vals: Vec<(f64, f64)> = (0..8)
        .into_par_iter()
        .map(|k| {
            if k == 7 {
                let v = f(c);
                (v, v)
            } else {
                (f(c - h * XGK[k]), f(c + h * XGK[k]))
            }
        })
        .collect();
    let mut kr = 0.0;
    let mut ga = 0.0;
    for (k, (lo, hi)) in vals.iter().enumerate() {
        let s = if k == 7 { *lo } else { lo + hi };
        kr += WGK[k] * s;
        if k % 2 == 1 {
            ga += WG[k / 2] * s;
        }
    }
    (kr * h, ((kr - ga) * h).abs())
}

struct Piece {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Piece {
    fn eq(&self, o: &Self) -> bool {
        self.error == o.error
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Piece {
    fn cmp(&self, o: &Self) -> Ordering {
        self.error.total_cmp(&o.error)
    }
}

/// Adaptive Gauss–Kronrod on `[a, b]`, bisecting the worst piece until the
/// summed error is below `tol·|estimate| + floor` or the budget runs out.
pub fn integrate_1d(
    f: impl Fn(f64) -> f64 + Sync,
    a: f64,
    b: f64,
    tol: f64,
    floor: f64,
    max_intervals: usize,
) -> (QuadratureResult, bool) {
    let (value, error) = kronrod(&f, a, b);
    let mut heap = BinaryHeap::from([Piece { a, b, value, error }]);
    loop {
        let total: f64 = heap.iter().map(|p| p.value).sum();
        let err: f64 = heap.iter().map(|p| p.error).sum();
        let done = err <= tol * total.abs() + floor;
        if done || heap.len() >= max_intervals.max(1) {
            let result = QuadratureResult { estimate: total, error: err, intervals: heap.len() };
            return (result, done);
        }
        let worst = heap.pop().expect("nonempty");
        let mid = 0.5 * (worst.a + worst.b);
        for (lo, hi) in [(worst.a, mid), (mid, worst.b)] {
            let (value, error) = kronrod(&f, lo, hi);
            heap.push(Piece { a: lo, b: hi, value, error });
        }
    }
}

/// `∬_{|z|≤1} f dx dy`. The angular error is estimated by comparing the
/// trapezoid sum with the one on every other node, and added to the radial
/// error estimate. Fails if the combined estimate misses the tolerance.
pub fn disk_integral(f: impl Fn(Complex64) -> f64 + Sync, params: &QuadratureParams) -> Result<QuadratureResult> {
    if !(params.tol > 0.0) || params.grid < 8 {
        return Err(Error::InvalidArgument("quadrature needs tol > 0 and grid >= 8".into()));
    }
    let n = params.grid + params.grid % 2;
    let angles: Vec<Complex64> = (0..n).map(|j| Complex64::from_polar(1.0, TAU * j as f64 / n as f64)).collect();
    // ring integrals r·∮ f, full and half resolution
    let ring = |r: f64| -> (f64, f64) {
        let vals: Vec<f64> = angles.iter().map(|w| f(w * r)).collect();
        let full: f64 = vals.iter().sum::<f64>() * TAU / n as f64;
        let half: f64 = vals.iter().step_by(2).sum::<f64>() * TAU / (n / 2) as f64;
        (r * full, r * half)
    };
    let (radial, converged) = integrate_1d(|r| ring(r).0, 0.0, 1.0, params.tol * 0.5, 0.0, params.max_intervals);
    let (coarse, _) = integrate_1d(|r| ring(r).1, 0.0, 1.0, params.tol * 0.5, 0.0, params.max_intervals);
    let angular = (radial.estimate - coarse.estimate).abs();
    let error = radial.error + angular;
    let result = QuadratureResult { error, ..radial };
    if !converged || error > params.tol * result.estimate.abs() {
        return Err(Error::Quadrature { estimate: result.estimate, error });
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exact() {
        let (r, ok) = integrate_1d(|x| x.powi(5) - 2.0 * x, 0.0, 2.0, 1e-14, 1e-14, 10);
        assert!(ok);
        assert!((r.estimate - (64.0 / 6.0 - 4.0)).abs() < 1e-12);
    }

    #[test]
    fn adaptive_on_peak() {
        let f = |x: f64| 1.0 / (1e-4 + (x - 0.3).powi(2));
        let exact = ((0.7f64 / 1e-2).atan() + (0.3f64 / 1e-2).atan()) / 1e-2;
        let (r, ok) = integrate_1d(f, 0.0, 1.0, 1e-10, 0.0, 500);
        assert!(ok);
        assert!((r.estimate - exact).abs() < 1e-8 * exact);
    }

    #[test]
    fn disk_area_and_moment() {
        let p = QuadratureParams { tol: 1e-10, grid: 16, max_intervals: 50 };
        let a = disk_integral(|_| 1.0, &p).unwrap();
        assert!((a.estimate - std::f64::consts::PI).abs() < 1e-12);
        let m = disk_integral(|z| z.norm_sqr(), &p).unwrap();
        assert!((m.estimate - std::f64::consts::PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn coarse_angular_grid_reports_failure() {
        // |1 + 0.9z|^-2 has Fourier modes of every order in θ
        let f = |z: Complex64| 1.0 / (Complex64::new(1.0, 0.0) + z * 0.9).norm_sqr();
        let p = QuadratureParams { tol: 1e-9, grid: 8, max_intervals: 50 };
        assert!(matches!(disk_integral(f, &p), Err(Error::Quadrature { .. })));
        let p = QuadratureParams { tol: 1e-9, grid: 512, max_intervals: 200 };
        let r = disk_integral(f, &p);
        assert!(r.is_ok(), "{r:?}");
    }

    #[test]
    fn rejects_bad_params() {
        let p = QuadratureParams { tol: 0.0, ..Default::default() };
        assert!(disk_integral(|_| 1.0, &p).is_err());
    }
}
