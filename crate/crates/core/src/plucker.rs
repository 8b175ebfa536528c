//! Singularity types, degrees of the osculating curves and areas.
//!
//! Conventions: `δ_p` is the degree of the `p`-th osculating curve
//! `[W_p]` for `p = 0..5` with `δ₋₁ = δ₆ = 0`, and `T_j` (`j = 1..6`) is
//! the total ramification of `[W_{j−1}]`.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{AlgScalar, Poly, Scalar};
use crate::error::{Error, Result};
use crate::harmonic::Wedge;
pub use crate::harmonic::wedge_curves;
use crate::quadrature::{disk_integral, QuadratureParams, QuadratureResult};
use crate::twistor::CurveC7;

/// Where to read off the singularity type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Point {
    Zero,
    Infinity,
}

/// `w^d f(1/w)` with `d` the largest component degree: the curve in the
/// chart at infinity.
pub fn curve_at_infinity<S: Scalar>(f: &CurveC7<S>) -> CurveC7<S> {
    let d = f.degree().unwrap_or(0);
    f.map(|p| p.reversed(d))
}

/// `(r₁, …, r₆)` with `r_{j+1} = s_{j+1} − 2s_j + s_{j−1}`, `s_j` the
/// vanishing order of `W_j` at the point and `s₋₁ = 0`.
pub fn singularity_type<S: Scalar>(f0: &CurveC7<S>, at: Point) -> Result<[u32; 6]> {
    let g = match at {
        Point::Zero => f0.clone(),
        Point::Infinity => curve_at_infinity(f0),
    };
    let w = wedge_curves(&g)?;
    let s: Vec<i64> = w.iter().map(|x| x.ord0().unwrap_or(0) as i64).collect();
    let mut out = [0u32; 6];
    for j in 0..6 {
        let prev = if j == 0 { 0 } else { s[j - 1] };
        let r = s[j + 1] - 2 * s[j] + prev;
        debug_assert!(r >= 0, "negative ramification");
        out[j] = r.max(0) as u32;
    }
    Ok(out)
}

/// `δ_p = (max component degree of W_p) − deg gcd(W_p)`, requiring the
/// gcd to be a power of `z`.
pub fn degrees_exact(f0: &CurveC7) -> Result<[i64; 6]> {
    let w = wedge_curves(f0)?;
    let out: Vec<Result<i64>> = (0..6)
        .into_par_iter()
        .map(|p| {
            let g = wedge_gcd(&w[p]);
            if g.len() != 1 {
                return Err(Error::InteriorSingularity { p });
            }
            let top = w[p].degree().unwrap_or(0) as i64;
            Ok(top - g.degree().unwrap_or(0) as i64)
        })
        .collect();
    let mut d = [0i64; 6];
    for (p, r) in out.into_iter().enumerate() {
        d[p] = r?;
    }
    Ok(d)
}

fn wedge_gcd(w: &Wedge<AlgScalar>) -> Poly<AlgScalar> {
    let mut comps: Vec<&Poly<AlgScalar>> = w.components().map(|(_, p)| p).collect();
    // low degrees first keeps the Euclid steps short
    comps.sort_by_key(|p| p.degree());
    let mut g = Poly::zero();
    for p in comps {
        g = g.gcd(p);
        if g.degree() == Some(0) {
            break;
        }
    }
    g
}

/// `δ_p = (p+1)(6−p) + (6−p)/7·Σ_{k<p}(k+1)T_{k+1} + (p+1)/7·Σ_{k≥p}(6−k)T_{k+1}`.
/// Fails if a value is not an integer.
pub fn degrees_formula(totals: &[u32; 6]) -> Result<[i64; 6]> {
    let t = totals.map(i64::from);
    let mut out = [0i64; 6];
    for p in 0..6i64 {
        let lower: i64 = (0..p).map(|k| (k + 1) * t[k as usize]).sum();
        let upper: i64 = (p..6).map(|k| (6 - k) * t[k as usize]).sum();
        let num = 7 * (p + 1) * (6 - p) + (6 - p) * lower + (p + 1) * upper;
        if num % 7 != 0 {
            return Err(Error::InvalidArgument(format!("totals {totals:?} give a fractional degree at p = {p}")));
        }
        out[p as usize] = num / 7;
    }
    Ok(out)
}

/// `−2 − δ_{p−2} + 2δ_{p−1} − δ_p − T_p` for `p = 1..6`.
pub fn plucker_residuals(totals: &[u32; 6], delta: &[i64; 6]) -> [i64; 6] {
    let d = |q: i64| if (0..6).contains(&q) { delta[q as usize] } else { 0 };
    std::array::from_fn(|i| {
        let p = i as i64 + 1;
        -2 - d(p - 2) + 2 * d(p - 1) - d(p) - totals[i] as i64
    })
}

/// `A(ψ_p)/π = δ_{p−1} + δ_p`.
pub fn area_pi(delta: &[i64; 6], p: usize) -> i64 {
    let prev = if p == 0 { 0 } else { delta[p - 1] };
    prev + delta.get(p).copied().unwrap_or(0)
}

/// `A/π` of the almost complex map, both as `δ₂ + δ₃` and as
/// `4(6 + 2T₁ + T₂)`; fails if they differ.
pub fn almost_complex_area(delta: &[i64; 6], totals: &[u32; 6]) -> Result<i64> {
    let direct = area_pi(delta, 3);
    let formula = 4 * (6 + 2 * totals[0] as i64 + totals[1] as i64);
    if direct != formula {
        return Err(Error::AreaMismatch { direct, formula });
    }
    Ok(direct)
}

/// `T₁ = T₆, T₂ = T₅, T₃ = T₄` and `T₃ = T₁`.
pub fn symmetry_check(totals: &[u32; 6]) -> bool {
    (0..3).all(|j| totals[j] == totals[5 - j]) && totals[2] == totals[0]
}

/// Ways to realize `A = 4π·d` with per-point types of the shape
/// `(a, b, a, a, b, a)`: each returned entry lists the ramified points'
/// types (sorted), using that a sphere is unramified or ramified at two or
/// more points.
pub fn enumerate_symmetric_types(d: u32) -> Vec<Vec<[u32; 6]>> {
    if d < 6 {
        return Vec::new();
    }
    let budget = d - 6; // Σ over points of 2a + b
    let kinds: Vec<(u32, u32)> = (0..=budget / 2)
        .flat_map(|a| (0..=budget).map(move |b| (a, b)))
        .filter(|&(a, b)| (a, b) != (0, 0) && 2 * a + b <= budget)
        .collect();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(kinds: &[(u32, u32)], start: usize, left: u32, stack: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<[u32; 6]>>) {
        if left == 0 {
            if stack.len() != 1 {
                out.push(stack.iter().map(|&(a, b)| [a, b, a, a, b, a]).collect());
            }
            return;
        }
        for i in start..kinds.len() {
            let (a, b) = kinds[i];
            if 2 * a + b <= left {
                stack.push(kinds[i]);
                rec(kinds, i, left - 2 * a - b, stack, out);
                stack.pop();
            }
        }
    }
    rec(&kinds, 0, budget, &mut stack, &mut out);
    out
}

/// `N_q(z) = Σ_I |W_q^I(z)|²` with `N₋₁ = 1`.
fn norm_at<S: Scalar>(w: &[Wedge<S>], q: i64, z: Complex64) -> f64 {
    if q < 0 {
        return 1.0;
    }
    w[q as usize].components().map(|(_, p)| p.eval(z).norm_sqr()).sum()
}

/// `γ_p = N_{p+1} N_{p−1} / N_p²` evaluated from the wedges.
pub fn gamma_at<S: Scalar>(w: &[Wedge<S>], p: usize, z: Complex64) -> f64 {
    let p = p as i64;
    let np = norm_at(w, p, z);
    if np == 0.0 {
        return 0.0;
    }
    norm_at(w, p + 1, z) * norm_at(w, p - 1, z) / (np * np)
}

/// `(1/π) ∬ γ_p dx dy` over the sphere, as the sum of the unit-disk
/// integrals in the charts `z` and `w = 1/z`.
pub fn degrees_numeric<S: Scalar>(f0: &CurveC7<S>, p: usize, params: &QuadratureParams) -> Result<QuadratureResult> {
    if p > 5 {
        return Err(Error::InvalidArgument(format!("p must be in 0..=5, got {p}")));
    }
    let near = wedge_curves(f0)?;
    let far = wedge_curves(&curve_at_infinity(f0))?;
    let pi = std::f64::consts::PI;
    let mut total = QuadratureResult { estimate: 0.0, error: 0.0, intervals: 0 };
    let mut converged = true;
    for part in [disk_integral(|z| gamma_at(&near, p, z), params), disk_integral(|w| gamma_at(&far, p, w), params)] {
        match part {
            Ok(r) => {
                total.estimate += r.estimate / pi;
                total.error += r.error / pi;
                total.intervals += r.intervals;
            }
            Err(Error::Quadrature { estimate, error }) => {
                converged = false;
                total.estimate += estimate / pi;
                total.error += error / pi;
            }
            Err(e) => return Err(e),
        }
    }
    if !converged {
        return Err(Error::Quadrature { estimate: total.estimate, error: total.error });
    }
    Ok(total)
}

/// Everything about the singularities and degrees of one curve.
#[derive(Clone, Debug, Serialize)]
pub struct SingularityReport {
    #[serde(rename = "type0")]
    pub type_at_zero: [u32; 6],
    #[serde(rename = "typeInf")]
    pub type_at_infinity: [u32; 6],
    #[serde(rename = "T")]
    pub totals: [u32; 6],
    pub delta: [i64; 6],
    #[serde(rename = "deltaFormula")]
    pub delta_formula: [i64; 6],
    /// `A/π` of the almost complex map, as a decimal string.
    pub area_pi: String,
    pub plucker: bool,
    pub symmetric: bool,
    pub palindromic: bool,
    /// Numeric degrees, when requested.
    #[serde(rename = "deltaNumeric", skip_serializing_if = "Option::is_none")]
    pub delta_numeric: Option<Vec<f64>>,
    /// Exact, formula and numeric degrees agree.
    #[serde(rename = "degreesAgree")]
    pub degrees_agree: bool,
}

/// Builds the full report. With `numeric` set, also integrates every `γ_p`
/// and requires the rounded values to match.
pub fn singularity_report(f0: &CurveC7, numeric: Option<&QuadratureParams>) -> Result<SingularityReport> {
    let type_at_zero = singularity_type(f0, Point::Zero)?;
    let type_at_infinity = singularity_type(f0, Point::Infinity)?;
    let totals: [u32; 6] = std::array::from_fn(|j| type_at_zero[j] + type_at_infinity[j]);
    let delta = degrees_exact(f0)?;
    let delta_formula = degrees_formula(&totals)?;
    let area = almost_complex_area(&delta, &totals)?;
    let delta_numeric = match numeric {
        Some(params) => Some(
            (0..6)
                .map(|p| degrees_numeric(f0, p, params).map(|r| r.estimate))
                .collect::<Result<Vec<f64>>>()?,
        ),
        None => None,
    };
    let numeric_ok = delta_numeric
        .as_ref()
        .is_none_or(|v| v.iter().zip(&delta).all(|(x, d)| x.round() as i64 == *d));
    Ok(SingularityReport {
        type_at_zero,
        type_at_infinity,
        totals,
        delta,
        delta_formula,
        area_pi: area.to_string(),
        plucker: plucker_residuals(&totals, &delta).iter().all(|&r| r == 0),
        symmetric: symmetry_check(&totals),
        palindromic: (0..6).all(|p| delta[p] == delta[5 - p]),
        delta_numeric,
        degrees_agree: delta == delta_formula && numeric_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;
    use crate::catalog::{example_family, lowest_curve};

    #[test]
    fn types_1_2() {
        let f = example_family(1, 2).unwrap();
        assert_eq!(singularity_type(&f, Point::Zero).unwrap(), [0, 1, 0, 0, 1, 0]);
        assert_eq!(singularity_type(&f, Point::Infinity).unwrap(), [0, 1, 0, 0, 1, 0]);
        let w = wedge_curves(&f).unwrap();
        assert_eq!(w[1].ord0(), Some(0));
    }

    #[test]
    fn exact_degrees() {
        assert_eq!(degrees_exact(&example_family(1, 1).unwrap()).unwrap(), [6, 10, 12, 12, 10, 6]);
        assert_eq!(degrees_exact(&example_family(1, 2).unwrap()).unwrap(), [8, 14, 16, 16, 14, 8]);
        assert_eq!(degrees_exact(&lowest_curve()).unwrap()[0], 8);
    }

    #[test]
    fn interior_singularity_detected() {
        // multiply the curve by (z - 1): every W_p acquires a common factor
        let f = example_family(1, 1).unwrap();
        let h = Poly::from_int_terms(&[(0, -1), (1, 1)]);
        let g = f.map(|p| p.mul_ref(&h));
        assert!(matches!(degrees_exact(&g), Err(Error::InteriorSingularity { p: 0 })));
    }

    #[test]
    fn formula_degrees() {
        assert_eq!(degrees_formula(&[0; 6]).unwrap(), [6, 10, 12, 12, 10, 6]);
        assert_eq!(degrees_formula(&[0, 2, 0, 0, 2, 0]).unwrap(), [8, 14, 16, 16, 14, 8]);
        for (t1, t2) in [(0, 2), (2, 4), (4, 2)] {
            let d = degrees_formula(&[t1, t2, t1, t1, t2, t1]).unwrap();
            assert_eq!(d[3], 12 + 4 * t1 as i64 + 2 * t2 as i64);
        }
    }

    #[test]
    fn areas() {
        let d = [8, 14, 16, 16, 14, 8];
        assert_eq!(almost_complex_area(&d, &[0, 2, 0, 0, 2, 0]).unwrap(), 32);
        assert!(matches!(almost_complex_area(&d, &[0; 6]), Err(Error::AreaMismatch { .. })));
    }

    #[test]
    fn symmetry() {
        assert!(symmetry_check(&[2, 4, 2, 2, 4, 2]));
        assert!(symmetry_check(&[0, 2, 0, 0, 2, 0]));
        assert!(!symmetry_check(&[1, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_symmetric_types(6), vec![Vec::<[u32; 6]>::new()]);
        assert!(enumerate_symmetric_types(7).is_empty());
        assert_eq!(enumerate_symmetric_types(8), vec![vec![[0, 1, 0, 0, 1, 0]; 2]]);
    }

    #[test]
    fn numeric_degree_p0() {
        let f = example_family(1, 1).unwrap();
        let r = degrees_numeric(&f, 0, &QuadratureParams::default()).unwrap();
        assert!((r.estimate - 6.0).abs() < 0.06, "{r:?}");
    }
}
