//! The twistor projection `π: Q⁵ → S⁶`, its differential and the splitting
//! of the tangent space of the quadric.
//!
//! Tangent vectors at `[x]` are represented by vectors `v ∈ ℂ⁷` with
//! `(v, x) = 0` (tangent to the cone) and `(v, x̄) = 0` (Hermitian
//! orthogonal to the line). The Fubini–Study length of such a vector is
//! `2|v|/|x|`.

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::algebra::linalg::nullspace;
use crate::algebra::{AlgScalar, Poly, Scalar};
use crate::error::{Error, Result};
use crate::g2::Vec7;

/// A holomorphic polynomial curve in `ℂ⁷`, components in the standard basis.
pub type CurveC7<S = AlgScalar> = Vec7<Poly<S>>;

/// A point `[x]` of the quadric `(x, x) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadricPoint<S> {
    lift: Vec7<S>,
}

impl<S: Scalar> QuadricPoint<S> {
    /// Checks `(x, x) = 0` (to `tol` in float mode) and `x ≠ 0`.
    pub fn new(lift: Vec7<S>, tol: f64) -> Result<Self> {
        if lift.is_negligible(0.0) || (!S::EXACT && lift.norm() <= tol) {
            return Err(Error::ZeroLift);
        }
        let q = lift.bilinear(&lift);
        let scale = if S::EXACT { 1.0 } else { lift.norm().powi(2) };
        if !q.is_negligible(tol * scale) {
            return Err(Error::NotQuadricPoint(format!("{:?}", q.to_c64())));
        }
        Ok(QuadricPoint { lift })
    }

    pub fn lift(&self) -> &Vec7<S> {
        &self.lift
    }

    fn norm_sqr(&self) -> S {
        self.lift.hermitian(&self.lift)
    }

    /// `π([x]) = (i/|x|²) x̄ × x`, a real unit vector.
    pub fn project(&self) -> Vec7<S> {
        let c = S::imag_unit().mul_ref(&self.norm_sqr().inv().expect("nonzero lift"));
        self.lift.conj().cross(&self.lift).scale(&c)
    }

    /// `(v, x) = 0` and `(v, x̄) = 0`.
    pub fn is_tangent(&self, v: &Vec7<S>, tol: f64) -> bool {
        let scale = if S::EXACT { 1.0 } else { self.lift.norm() * v.norm().max(1.0) };
        v.bilinear(&self.lift).is_negligible(tol * scale)
            && v.hermitian(&self.lift).is_negligible(tol * scale)
    }

    /// `π_*(v) = (i/|x|²)(x̄ × v − x × v̄)`.
    pub fn pushforward(&self, v: &Vec7<S>, tol: f64) -> Result<Vec7<S>> {
        if !self.is_tangent(v, tol) {
            return Err(Error::NotTangent(format!("{:?}", v.to_float())));
        }
        Ok(self.pushforward_unchecked(v))
    }

    fn pushforward_unchecked(&self, v: &Vec7<S>) -> Vec7<S> {
        let c = S::imag_unit().mul_ref(&self.norm_sqr().inv().expect("nonzero lift"));
        self.lift
            .conj()
            .cross(v)
            .sub(&self.lift.cross(&v.conj()))
            .scale(&c)
    }

    /// Tangent vectors `v` with `x × v = 0`.
    fn superhorizontal_basis(&self, tol: f64) -> Vec<Vec7<S>> {
        let x = &self.lift;
        let mut rows: Vec<Vec<S>> = (0..7)
            .map(|k| {
                // row k of the matrix w ↦ x × w
                (0..7).map(|j| x.cross(&Vec7::basis(j)).0[k].clone()).collect()
            })
            .collect();
        rows.push(x.0.to_vec());
        rows.push(x.conj().0.to_vec());
        let scale = if S::EXACT { 1.0 } else { x.norm() };
        nullspace(rows, 7, tol * scale)
            .into_iter()
            .map(|v| Vec7(std::array::from_fn(|k| v[k].clone())))
            .collect()
    }

    /// The splitting `T = V ⊕ D ⊕ H′` at this point.
    pub fn split_tangent(&self, tol: f64) -> Result<TangentSplit<S>> {
        let superhorizontal = self.superhorizontal_basis(tol);
        if superhorizontal.len() != 2 {
            return Err(Error::InvalidArgument(format!(
                "degenerate lift: superhorizontal space has dimension {}",
                superhorizontal.len()
            )));
        }
        let vertical = superhorizontal.iter().map(Vec7::conj).collect();
        Ok(TangentSplit { vertical, superhorizontal, d_line: self.project() })
    }

    /// Fubini–Study length of a tangent vector: `2|v⊥|/|x|`, where `v⊥` is
    /// the component Hermitian-orthogonal to `x`.
    pub fn fs_norm(&self, v: &Vec7<S>) -> f64 {
        let x = self.lift.to_float();
        let v = v.to_float();
        let n2 = x.hermitian(&x);
        let perp = v.sub(&x.scale(&(v.hermitian(&x) / n2)));
        2.0 * perp.norm() / n2.re.sqrt()
    }
}

/// Vertical space `V = ker π_*`, superhorizontal space `H′ = V̄` and the
/// line `D` spanned by `π[x]`.
#[derive(Clone, Debug)]
pub struct TangentSplit<S> {
    pub vertical: Vec<Vec7<S>>,
    pub superhorizontal: Vec<Vec7<S>>,
    pub d_line: Vec7<S>,
}

/// Residuals of the metric and complex-linearity properties of `π_*` at
/// one point.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    /// `‖π_* v‖ / ‖v‖_FS` for the two basis vectors of `H′` and one random
    /// combination; expected 1.
    pub h_length_ratios: Vec<f64>,
    /// Same ratio on `D`; expected `1/√2`.
    pub d_length_ratio: f64,
    /// `max |π_*(iv) − J π_*(v)|` over `H′`, with `J w = π[x] × w`.
    pub h_linearity_residual: f64,
    /// `|π_*(iv) + J π_*(v)|` for `v` spanning `D`.
    pub d_antilinearity_residual: f64,
    /// `max |π_* v|` over the vertical basis.
    pub vertical_residual: f64,
    /// Largest violation of the defining equations of `V`, `H′`, `D`.
    pub split_residual: f64,
}

impl LemmaReport {
    pub fn max_deviation(&self) -> f64 {
        let h = self.h_length_ratios.iter().map(|r| (r - 1.0).abs()).fold(0.0, f64::max);
        let d = (self.d_length_ratio - std::f64::consts::FRAC_1_SQRT_2).abs();
        h.max(d)
            .max(self.h_linearity_residual)
            .max(self.d_antilinearity_residual)
            .max(self.vertical_residual)
            .max(self.split_residual)
    }
}

fn unit(v: &Vec7<Complex64>) -> Vec7<Complex64> {
    v.scale(&Complex64::new(1.0 / v.norm(), 0.0))
}

/// Evaluate the metric and linearity properties of `π_*` at `p` in float
/// arithmetic.
pub fn lemma_checks<S: Scalar>(p: &QuadricPoint<S>) -> Result<LemmaReport> {
    let x = p.lift.to_float();
    // normalize for conditioning; π and the ratios are scale invariant
    let q = QuadricPoint::new(unit(&x), 1e-9)?;
    let split = q.split_tangent(1e-9)?;
    let base = q.project();
    let i = Complex64::new(0.0, 1.0);
    let j = |w: &Vec7<Complex64>| base.cross(w);

    let mut split_residual = 0.0f64;
    for v in &split.superhorizontal {
        split_residual = split_residual.max(q.lift.cross(v).norm() / v.norm());
    }
    for v in &split.vertical {
        split_residual = split_residual.max(q.lift.cross(&v.conj()).norm() / v.norm());
    }
    split_residual = split_residual.max(base.max_imag()).max((base.norm() - 1.0).abs());

    let mut h = split.superhorizontal.clone();
    h.push(h[0].add(&h[1].scale(&Complex64::new(0.3, -0.7))));
    let mut h_length_ratios = Vec::new();
    let mut h_linearity_residual = 0.0f64;
    for v in &h {
        let pv = q.pushforward(v, 1e-9)?;
        h_length_ratios.push(pv.norm() / q.fs_norm(v));
        let piv = q.pushforward(&v.scale(&i), 1e-9)?;
        h_linearity_residual = h_linearity_residual.max(piv.sub(&j(&pv)).norm() / pv.norm());
    }

    let d = &split.d_line;
    let pd = q.pushforward(d, 1e-9)?;
    let d_length_ratio = pd.norm() / q.fs_norm(d);
    let pid = q.pushforward(&d.scale(&i), 1e-9)?;
    let d_antilinearity_residual = pid.add(&j(&pd)).norm() / pd.norm();

    let vertical_residual = split
        .vertical
        .iter()
        .map(|v| q.pushforward_unchecked(v).norm() / v.norm())
        .fold(0.0, f64::max);

    Ok(LemmaReport {
        h_length_ratios,
        d_length_ratio,
        h_linearity_residual,
        d_antilinearity_residual,
        vertical_residual,
        split_residual,
    })
}

/// `c·(a − ib)` for random real orthonormal `a`, `b` and random complex `c`.
pub fn random_quadric_point<R: Rng>(rng: &mut R) -> QuadricPoint<Complex64> {
    let a: [f64; 7] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
    let na = a.iter().map(|t| t * t).sum::<f64>().sqrt();
    let a = a.map(|t| t / na);
    let mut b: [f64; 7] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
    let d: f64 = a.iter().zip(&b).map(|(s, t)| s * t).sum();
    for k in 0..7 {
        b[k] -= d * a[k];
    }
    let nb = b.iter().map(|t| t * t).sum::<f64>().sqrt();
    let b = b.map(|t| t / nb);
    let c = Complex64::from_polar(rng.gen_range(0.2..3.0), rng.gen_range(0.0..std::f64::consts::TAU));
    let lift = Vec7::from_fn(|k| c * Complex64::new(a[k], -b[k]));
    QuadricPoint::new(lift, 1e-9).expect("constructed on the quadric")
}

/// Location and value of the first nonzero coefficient of `f × f′`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    /// 0-based component index.
    pub component: usize,
    pub exponent: u32,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuperhorizontalCheck {
    pub superhorizontal: bool,
    pub witness: Option<Witness>,
}

/// `(f, f) ≡ 0`, or the first offending coefficient.
pub fn quadric_defect<S: Scalar + std::fmt::Display>(f: &CurveC7<S>) -> Option<(u32, String)> {
    let q = f.bilinear(f);
    let first = q.terms().next().map(|(e, c)| (e, c.to_string()));
    first
}

/// Tests `f × f′ ≡ 0` exactly for a curve with `(f, f) ≡ 0`.
pub fn is_superhorizontal<S: Scalar + std::fmt::Display>(f: &CurveC7<S>) -> Result<SuperhorizontalCheck> {
    if let Some((exponent, coefficient)) = quadric_defect(f) {
        return Err(Error::NotQuadric { exponent, coefficient });
    }
    let g = f.cross(&f.derivative());
    let witness = g
        .0
        .iter()
        .enumerate()
        .filter_map(|(k, p)| p.terms().next().map(|(e, c)| (e, k, c.to_string())))
        .min_by_key(|(e, k, _)| (*e, *k))
        .map(|(exponent, component, coefficient)| Witness { component, exponent, coefficient });
    Ok(SuperhorizontalCheck { superhorizontal: witness.is_none(), witness })
}

/// `max |f × f′| / (|f| |f′|)` over the given points; a float-mode
/// superhorizontality residual.
pub fn superhorizontal_residual<S: Scalar>(f: &CurveC7<S>, points: &[Complex64]) -> f64 {
    let ff = f.map(Poly::to_float);
    let df = ff.derivative();
    points
        .iter()
        .map(|&z| {
            let a = ff.eval(z);
            let b = df.eval(z);
            a.cross(&b).norm() / (a.norm() * b.norm()).max(f64::MIN_POSITIVE)
        })
        .fold(0.0, f64::max)
}

/// `π(f(z))` for a curve evaluated in float arithmetic.
pub fn project_curve_point<S: Scalar>(f: &CurveC7<S>, z: Complex64) -> Result<Vec7<Complex64>> {
    Ok(QuadricPoint::new(f.map(Poly::to_float).eval(z), 1e-8)?.project())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::linalg::rank;

    type V = Vec7<AlgScalar>;

    fn e(j: usize) -> V {
        V::basis(j - 1)
    }

    fn i() -> AlgScalar {
        AlgScalar::i()
    }

    fn base_point() -> QuadricPoint<AlgScalar> {
        QuadricPoint::new(e(1).add(&e(5).scale(&i())), 0.0).unwrap()
    }

    #[test]
    fn projection_at_base_point() {
        assert_eq!(base_point().project(), e(4));
        let other = QuadricPoint::new(e(1).sub(&e(5).scale(&i())), 0.0).unwrap();
        assert_eq!(other.project(), e(4).neg());
    }

    #[test]
    fn projection_is_scale_invariant() {
        let p = base_point();
        let c = AlgScalar::from_int(3) + AlgScalar::sqrt_int(-2).unwrap();
        let q = QuadricPoint::new(p.lift().scale(&c), 0.0).unwrap();
        assert_eq!(q.project(), p.project());
    }

    #[test]
    fn pushforward_values() {
        let p = base_point();
        let v = e(2).sub(&e(6).scale(&i()));
        assert_eq!(p.pushforward(&v, 0.0).unwrap(), e(7).scale(&AlgScalar::from_int(-2)));
        let w = e(3).sub(&e(7).scale(&i()));
        assert_eq!(p.pushforward(&w, 0.0).unwrap(), e(6).scale(&AlgScalar::from_int(2)));
        assert_eq!(p.pushforward(&e(4), 0.0).unwrap(), e(1).neg());
        let vert = e(2).add(&e(6).scale(&i()));
        assert!(p.pushforward(&vert, 0.0).unwrap().is_zero());
        assert!(p.pushforward(&e(1), 0.0).is_err());
    }

    #[test]
    fn split_at_base_point() {
        let s = base_point().split_tangent(0.0).unwrap();
        let expected = [e(2).add(&e(6).scale(&i())), e(3).add(&e(7).scale(&i()))];
        let mut rows: Vec<Vec<AlgScalar>> = s.vertical.iter().map(|v| v.0.to_vec()).collect();
        assert_eq!(rank(rows.clone(), 0.0), 2);
        rows.extend(expected.iter().map(|v| v.0.to_vec()));
        assert_eq!(rank(rows, 0.0), 2);
        for (v, h) in s.vertical.iter().zip(&s.superhorizontal) {
            assert_eq!(&v.conj(), h);
        }
        assert_eq!(s.d_line, e(4));
    }

    #[test]
    fn lemma_ratios_at_base_point() {
        let r = lemma_checks(&base_point()).unwrap();
        for h in &r.h_length_ratios {
            assert!((h - 1.0).abs() < 1e-10);
        }
        assert!((r.d_length_ratio - 0.5f64.sqrt()).abs() < 1e-10);
        assert!(r.max_deviation() < 1e-10, "{r:?}");
    }

    #[test]
    fn ie4_is_antilinear() {
        let p = base_point();
        let pd = p.pushforward(&e(4), 0.0).unwrap();
        let pid = p.pushforward(&e(4).scale(&i()), 0.0).unwrap();
        assert_eq!(pid, p.project().cross(&pd).neg());
    }

    #[test]
    fn rejects_non_quadric_curve() {
        let f: CurveC7 = Vec7::from_monomials(&[(0, e(1)), (1, e(2))]);
        assert!(matches!(is_superhorizontal(&f), Err(Error::NotQuadric { .. })));
    }

    #[test]
    fn witness_for_non_superhorizontal_curve() {
        // rational normal curve of the null vectors e₁+ie₅ and e₂+ie₆
        let a = e(1).add(&e(5).scale(&i()));
        let b = e(2).sub(&e(6).scale(&i()));
        let f: CurveC7 = Vec7::from_monomials(&[(0, a.clone()), (1, b.clone())]);
        assert!(is_superhorizontal(&f).unwrap().superhorizontal);
        let c = e(3).add(&e(7).scale(&i()));
        let g: CurveC7 = Vec7::from_monomials(&[(0, a), (1, c)]);
        let check = is_superhorizontal(&g).unwrap();
        assert!(!check.superhorizontal);
        assert_eq!(check.witness.unwrap().exponent, 0);
    }
}
