//! Explicit directrix curves: the two-parameter S¹-symmetric family, the
//! degree-8 representative, normal forms `Σ z^{K_p} v_p`, the r-parameter
//! family and the G₂ element that normalizes it.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::{AlgScalar, Poly, Ring, Scalar};
use crate::error::{Error, Result};
use crate::g2::{mirror, u_basis, Mat7, Vec7};
use crate::twistor::CurveC7;

/// Largest `k` accepted by the constructors; keeps all intermediate
/// integers of the coefficient formulas inside `i64`.
pub const MAX_K: u32 = 1000;

/// Exponent increments `(k₁, …, k₆)` of a normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SingularityTypeSpec {
    pub k: [u32; 6],
}

impl SingularityTypeSpec {
    /// Any positive increments. Use [`SingularityTypeSpec::almost_complex`]
    /// for the pattern `(k₁, k₂, k₁, k₁, k₂, k₁)`.
    pub fn new(k: [u32; 6]) -> Result<Self> {
        if let Some(bad) = k.iter().find(|&&x| x == 0 || x > MAX_K) {
            return Err(Error::InvalidArgument(format!(
                "k entries must lie in 1..={MAX_K}, got {bad}"
            )));
        }
        Ok(SingularityTypeSpec { k })
    }

    pub fn almost_complex(k1: u32, k2: u32) -> Result<Self> {
        Self::new([k1, k2, k1, k1, k2, k1])
    }

    pub fn k1(&self) -> u32 {
        self.k[0]
    }

    pub fn k2(&self) -> u32 {
        self.k[1]
    }

    /// `k₃ = k₁` and `k_j = k_{7−j}`.
    pub fn is_almost_complex_pattern(&self) -> bool {
        self.k[2] == self.k[0] && (0..6).all(|j| self.k[j] == self.k[5 - j])
    }

    /// `K_p = k₁ + … + k_p` for `p = 0..6`.
    pub fn ladder(&self) -> [u32; 7] {
        let mut out = [0; 7];
        for p in 1..7 {
            out[p] = out[p - 1] + self.k[p - 1];
        }
        out
    }

    /// `(k₁ − 1, …, k₆ − 1)`, the singularity type at 0 and ∞.
    pub fn expected_type(&self) -> [u32; 6] {
        self.k.map(|x| x - 1)
    }

    fn require_almost_complex(&self) -> Result<()> {
        if self.is_almost_complex_pattern() {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "k = {:?} is not of the form (k1,k2,k1,k1,k2,k1)",
                self.k
            )))
        }
    }
}

fn big(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `λ_j = Π_{1≤r≤s≤6}(k_r+…+k_s) / (Π_{r=1}^{j}(k_r+…+k_j) · Π_{r=1}^{6−j}(k_{j+1}+…+k_{7−r}))`.
pub fn lambda_weight(spec: &SingularityTypeSpec, j: usize) -> BigRational {
    assert!(j <= 6, "j out of range");
    let k = spec.k.map(u64::from);
    // interval sum k_r + … + k_s, 1-based inclusive
    let seg = |r: usize, s: usize| -> u64 { (r..=s).map(|t| k[t - 1]).sum() };
    let mut num = BigRational::one();
    for r in 1..=6 {
        for s in r..=6 {
            num *= big(seg(r, s));
        }
    }
    let mut den = BigRational::one();
    for r in 1..=j {
        den *= big(seg(r, j));
    }
    for r in 1..=6 - j {
        den *= big(seg(j + 1, 7 - r));
    }
    num / den
}

pub fn lambda_weights(spec: &SingularityTypeSpec) -> [BigRational; 7] {
    std::array::from_fn(|j| lambda_weight(spec, j))
}

/// `f₀(z) = Σ_p z^{K_p} h_p(z) v_p` with vectors in the standard basis.
#[derive(Clone, Debug)]
pub struct NormalFormCurve<S> {
    pub spec: SingularityTypeSpec,
    pub v: [Vec7<S>; 7],
    /// Optional polynomial unit factors `h_p` with `h_p(0) ≠ 0`; all 1 when
    /// `None`.
    pub units: Option<[Poly<S>; 7]>,
}

impl<S: Scalar> NormalFormCurve<S> {
    pub fn new(spec: SingularityTypeSpec, v: [Vec7<S>; 7]) -> Self {
        NormalFormCurve { spec, v, units: None }
    }

    pub fn ladder(&self) -> [u32; 7] {
        self.spec.ladder()
    }

    pub fn curve(&self) -> CurveC7<S> {
        let k = self.ladder();
        let mut out = CurveC7::<S>::zero();
        for p in 0..7 {
            let h = match &self.units {
                Some(u) => u[p].shift_up(k[p]),
                None => Poly::monomial(S::one(), k[p]),
            };
            for m in 0..7 {
                if !self.v[p].0[m].is_zero() {
                    out.0[m].add_assign_ref(&h.scale(&self.v[p].0[m]));
                }
            }
        }
        out
    }

    /// `⟨v_i, v_j⟩ = 0` for `i ≠ j` (the circle-symmetric case).
    pub fn is_orthogonal(&self, tol: f64) -> bool {
        (0..7).all(|i| (i + 1..7).all(|j| self.v[i].hermitian(&self.v[j]).is_negligible(tol)))
    }

    /// Read `v_p` off the coefficients of `z^{K_p}`. Fails if the curve has
    /// terms at other exponents.
    pub fn from_curve(f: &CurveC7<S>, spec: SingularityTypeSpec) -> Result<Self> {
        let k = spec.ladder();
        if let Some(e) = f.exponents().into_iter().find(|e| !k.contains(e)) {
            return Err(Error::InvalidArgument(format!(
                "curve has a term z^{e} outside the exponent ladder {k:?}"
            )));
        }
        Ok(NormalFormCurve::new(spec, k.map(|e| f.coeff_vec(e))))
    }
}

/// Outcome of [`reality_check`].
#[derive(Clone, Debug, Serialize)]
pub struct RealityCheck<S> {
    pub holds: bool,
    /// The constant `μ`, solved from the `(j, i) = (0, 6)` equation.
    pub mu: Option<S>,
    /// First `(j, i)` whose equation fails.
    pub failure: Option<(usize, usize)>,
}

/// Tests `⟨v_j, v̄_i⟩ = (−1)^j δ_{j,6−i} μ λ_j` for all 49 pairs with a
/// single constant `μ ≠ 0`.
pub fn reality_check<S: Scalar>(c: &NormalFormCurve<S>, tol: f64) -> RealityCheck<S> {
    let lambda = lambda_weights(&c.spec).map(|q| S::from_alg(&AlgScalar::from_rational(q)));
    let pair = |j: usize, i: usize| c.v[j].bilinear(&c.v[i]);
    let mu = pair(0, 6).div_ref(&lambda[0]).expect("λ₀ > 0");
    if mu.is_negligible(tol) {
        return RealityCheck { holds: false, mu: Some(mu), failure: Some((0, 6)) };
    }
    for j in 0..7 {
        for i in 0..7 {
            let expected = if i + j == 6 {
                let v = mu.mul_ref(&lambda[j]);
                if j % 2 == 1 {
                    v.neg_ref()
                } else {
                    v
                }
            } else {
                S::zero()
            };
            let got = pair(j, i);
            let scale = if S::EXACT { 1.0 } else { expected.magnitude().max(1.0) };
            if !got.sub_ref(&expected).is_negligible(tol * scale) {
                return RealityCheck { holds: false, mu: Some(mu), failure: Some((j, i)) };
            }
        }
    }
    RealityCheck { holds: true, mu: Some(mu), failure: None }
}

fn q(n: i64, d: i64) -> AlgScalar {
    AlgScalar::from_ratio(n, d)
}

fn sq(n: i64) -> AlgScalar {
    AlgScalar::sqrt_int(n).expect("radical in the field")
}

fn check_k(k1: u32, k2: u32) -> Result<(i64, i64)> {
    SingularityTypeSpec::almost_complex(k1, k2)?;
    Ok((k1 as i64, k2 as i64))
}

/// The S¹-symmetric family in the mirrored frame, coefficient for
/// coefficient as usually tabulated.
pub fn example_family_mirrored(k1: u32, k2: u32) -> Result<CurveC7> {
    let (a, b) = check_k(k1, k2)?;
    let (k1, k2) = (k1, k2);
    let d21 = 2 * a + b;
    let d31 = 3 * a + b;
    let d32 = 3 * a + 2 * b;
    let i = AlgScalar::i();
    let c1 = q(3 * b * (a + b), d31 * d21) * sq(30);
    let c2 = q(15 * a * b, d32 * d21) * sq(3);
    let c3 = q(45 * a * b * b * (a + b), d32 * d31 * d21 * d21) * sq(2);
    let c4 = q(6 * b, d21) * sq(5);
    let half30 = q(1, 2) * sq(30);
    let half2 = q(1, 2) * sq(2);
    let (e1, e2, e3) = (k1 + k2, 3 * k1 + k2, 3 * k1 + 2 * k2);
    let e4 = 4 * k1 + 2 * k2;
    let p = |terms: Vec<(u32, AlgScalar)>| Poly::from_terms(terms);
    Ok(Vec7([
        p(vec![(e1, -c1.clone()), (e2, half30.clone())]),
        p(vec![(k1, c2.clone()), (e3, sq(3))]),
        p(vec![(0, &i * &c3), (e4, &i * &half2)]),
        p(vec![(2 * k1 + k2, c4)]),
        p(vec![(e1, &i * &c1), (e2, &i * &half30)]),
        p(vec![(k1, -(&i * &c2)), (e3, &i * &sq(3))]),
        p(vec![(0, -c3), (e4, half2)]),
    ]))
}

/// Directrix of the S¹-symmetric almost complex sphere with singularity
/// type `(k₁−1, k₂−1, k₁−1, k₁−1, k₂−1, k₁−1)` at 0 and ∞, in the frame of
/// the cross product table.
pub fn example_family(k1: u32, k2: u32) -> Result<CurveC7> {
    Ok(mirror().apply_curve(&example_family_mirrored(k1, k2)?))
}

/// The degree-8 representative, in the mirrored frame as usually written.
pub fn lowest_curve_mirrored() -> CurveC7 {
    let i = AlgScalar::i();
    let z = |terms: &[(u32, AlgScalar)]| Poly::from_terms(terms.iter().cloned());
    let r15 = sq(15);
    let r6 = sq(6);
    Vec7([
        z(&[(5, q(70, 1) * r15.clone()), (3, q(-126, 1) * r15.clone())]),
        z(&[(7, q(70, 1) * r6.clone()), (1, q(75, 1) * r6.clone())]),
        z(&[(0, q(135, 1) * i.clone()), (8, q(70, 1) * i.clone())]),
        z(&[(4, q(210, 1) * sq(10))]),
        z(&[(5, q(70, 1) * i.clone() * r15.clone()), (3, q(126, 1) * i.clone() * r15.clone())]),
        z(&[(7, q(70, 1) * i.clone() * r6.clone()), (1, q(-75, 1) * i.clone() * r6.clone())]),
        z(&[(0, q(-135, 1)), (8, q(70, 1))]),
    ])
}

/// The degree-8 representative `70√2 · example_family(1, 2)`.
pub fn lowest_curve() -> CurveC7 {
    mirror().apply_curve(&lowest_curve_mirrored())
}

/// Parameters `r₁..r₈` of the r-family.
#[derive(Clone, Debug)]
pub struct RFamilyParams<S> {
    pub r: [S; 8],
}

impl<S: Scalar> RFamilyParams<S> {
    pub fn new(r: [S; 8]) -> Result<Self> {
        if r[0].is_zero() || r[7].is_zero() {
            return Err(Error::InvalidArgument("r1 and r8 must be nonzero".into()));
        }
        Ok(RFamilyParams { r })
    }

    /// `r₂ = … = r₇ = 0`.
    pub fn symmetric(r1: S, r8: S) -> Result<Self> {
        let mut r: [S; 8] = std::array::from_fn(|_| S::zero());
        r[0] = r1;
        r[7] = r8;
        Self::new(r)
    }
}

/// Coordinates of `v₀..v₆` of the r-family in the u-basis.
pub fn r_family_u_coords<S: Scalar>(
    spec: &SingularityTypeSpec,
    params: &RFamilyParams<S>,
) -> Result<[[S; 7]; 7]> {
    spec.require_almost_complex()?;
    let (a, b) = (spec.k1() as i64, spec.k2() as i64);
    let d21 = 2 * a + b;
    let d31 = 3 * a + b;
    let d32 = 3 * a + 2 * b;
    let c = |x: AlgScalar| S::from_alg(&x);
    let [r1, r2, r3, r4, r5, r6, r7, r8] = params.r.clone();
    let m = |x: &S, y: &S| x.mul_ref(y);
    let s2 = c(sq(2));
    let h = c(q(1, 2) * sq(2));
    let two = S::from_i64(2);
    let zero = S::zero;

    let c0 = m(&m(&c(q(a * b * b * (a + b), d32 * d31 * d21 * d21)), &m(&r1, &r1)), &m(&r8, &r8));
    let v0 = [c0, zero(), zero(), zero(), zero(), zero(), zero()];

    let c1 = m(&m(&c(q(a * b, d32 * d21)), &m(&r1, &r1)), &r8);
    let v1 = [m(&c1, &r5), c1, zero(), zero(), zero(), zero(), zero()];

    let c2 = m(&m(&c(q(b * (a + b), d21 * d31)), &r1), &r8);
    let v2 = [
        m(&c2, &m(&r2, &r5).sub_ref(&m(&r4, &r8))),
        m(&c2, &r2),
        m(&c2, &r8),
        zero(),
        zero(),
        zero(),
        zero(),
    ];

    let c3 = m(&m(&c(q(b, d21)), &r1), &r8);
    let v3 = [
        m(&c3, &m(&s2, &r3)),
        m(&c3, &m(&two, &r4)),
        m(&c3, &m(&two, &r5)),
        m(&c3, &s2),
        zero(),
        zero(),
        zero(),
    ];

    let c4 = m(&c(q(1, 2)), &r1);
    let v4 = [
        m(&c4, &m(&s2, &m(&r3, &r5)).sub_ref(&m(&two, &r6))),
        m(&c4, &m(&two, &m(&r4, &r5)).sub_ref(&m(&s2, &r3))),
        m(&c4, &m(&two, &m(&r5, &r5))),
        m(&c4, &m(&two, &m(&s2, &r5))),
        m(&c4, &two),
        zero(),
        zero(),
    ];

    let v5 = [
        m(&h, &m(&r2, &m(&r3, &r5)))
            .sub_ref(&m(&h, &m(&r3, &m(&r4, &r8))))
            .add_ref(&m(&r7, &r8))
            .sub_ref(&m(&r2, &r6)),
        m(&r2, &m(&r4, &r5)).sub_ref(&m(&h, &m(&r2, &r3))).sub_ref(&m(&m(&r4, &r4), &r8)),
        m(&r2, &m(&r5, &r5)).sub_ref(&m(&h, &m(&r3, &r8))).sub_ref(&m(&r4, &m(&r5, &r8))),
        m(&s2, &m(&r2, &r5).sub_ref(&m(&r4, &r8))),
        r2.clone(),
        r8.clone(),
        zero(),
    ];

    let v6 = [
        m(&r5, &r7).add_ref(&m(&c(q(1, 2)), &m(&r3, &r3))).sub_ref(&m(&r4, &r6)),
        r7,
        r6,
        r3,
        r4,
        r5,
        S::one(),
    ];
    Ok([v0, v1, v2, v3, v4, v5, v6])
}

/// Vector with the given u-coordinates, in the standard basis.
pub fn from_u_coords<S: Scalar>(coords: &[S; 7]) -> Vec7<S> {
    let u = u_basis();
    let mut out = Vec7::<S>::zero();
    for (j, cj) in coords.iter().enumerate() {
        if cj.is_zero() {
            continue;
        }
        out = out.add(&u[j].map(|x| S::from_alg(x)).scale(cj));
    }
    out
}

/// The r-parameter family of normal forms with the given increments.
pub fn r_family<S: Scalar>(
    spec: &SingularityTypeSpec,
    params: &RFamilyParams<S>,
) -> Result<NormalFormCurve<S>> {
    let coords = r_family_u_coords(spec, params)?;
    Ok(NormalFormCurve::new(*spec, coords.map(|c| from_u_coords(&c))))
}

/// The diagonal G₂ element of the normalization together with the chart
/// parameter `r`.
#[derive(Clone, Debug)]
pub enum Normalizer {
    Exact { r: AlgScalar, a: Mat7<AlgScalar> },
    Float { r: Complex64, a: Mat7<Complex64> },
}

impl Normalizer {
    pub fn is_exact(&self) -> bool {
        matches!(self, Normalizer::Exact { .. })
    }
}

/// Diagonal entries of `A` in the u-basis.
fn normalizer_scales<S: Scalar>(spec: &SingularityTypeSpec, r: &S, r1: &S, r8: &S) -> Result<[S; 7]> {
    let (k1, k2) = (spec.k1(), spec.k2());
    let pw = |n: u32| {
        let mut out = S::one();
        for _ in 0..n {
            out = out.mul_ref(r);
        }
        out
    };
    let c = |x: AlgScalar| S::from_alg(&x);
    let inv = |x: S| x.inv().ok_or(Error::DivisionByZero);
    let r1r8 = r1.mul_ref(r8);
    Ok([
        c(q(90, 1)).mul_ref(&inv(r1r8.mul_ref(&r1r8))?),
        c(q(15, 1) * sq(6)).mul_ref(&inv(pw(k1).mul_ref(&r1.mul_ref(&r1r8)))?),
        c(q(6, 1) * sq(15)).mul_ref(&inv(pw(k1 + k2).mul_ref(&r8.mul_ref(&r1r8)))?),
        c(sq(90)).mul_ref(&inv(pw(2 * k1 + k2).mul_ref(&r1r8))?),
        c(sq(15)).mul_ref(&inv(pw(3 * k1 + k2).mul_ref(r1))?),
        c(sq(6)).mul_ref(&inv(pw(3 * k1 + 2 * k2).mul_ref(r8))?),
        inv(pw(4 * k1 + 2 * k2))?,
    ])
}

/// `U · diag(s) · Uᴴ` with `U` the u-basis matrix.
fn in_standard_basis<S: Scalar>(s: &[S; 7]) -> Mat7<S> {
    let u = u_basis().map(|v| v.map(|x| S::from_alg(x)));
    Mat7::from_fn(|i, j| {
        let mut acc = S::zero();
        for (k, uk) in u.iter().enumerate() {
            acc.add_assign_ref(&uk.0[i].mul_ref(&s[k]).mul_ref(&uk.0[j].conj()));
        }
        acc
    })
}

fn approx_rational(x: f64, max_den: i64) -> Option<(i64, i64)> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut y = x;
    for _ in 0..40 {
        let a = y.floor();
        if a.abs() > 1e12 {
            return None;
        }
        let a = a as i64;
        let h2 = a.checked_mul(h1)?.checked_add(h0)?;
        let k2 = a.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_den {
            return None;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if (x - h1 as f64 / k1 as f64).abs() <= 1e-11 * x.abs().max(1.0) {
            return Some((h1, k1));
        }
        let frac = y - a as f64;
        if frac.abs() < 1e-15 {
            return None;
        }
        y = 1.0 / frac;
    }
    None
}

/// An exact root `r` of `r^n = c` of the form rational × basis monomial,
/// trying the principal root first.
pub fn exact_root(c: &AlgScalar, n: u32) -> Option<AlgScalar> {
    let cf = c.to_c64();
    if cf.norm() == 0.0 || n == 0 {
        return None;
    }
    let (modulus, arg) = cf.to_polar();
    let monomials: Vec<AlgScalar> = (0..16)
        .filter_map(|idx| {
            let mut coords: [BigRational; 16] = std::array::from_fn(|_| BigRational::zero());
            coords[idx] = BigRational::one();
            let b = AlgScalar::from_coords(&coords);
            (!b.is_zero()).then_some(b)
        })
        .collect();
    for m in 0..n {
        let theta = (arg + std::f64::consts::TAU * m as f64) / n as f64;
        let rf = Complex64::from_polar(modulus.powf(1.0 / n as f64), theta);
        for b in &monomials {
            let s = rf / b.to_c64();
            if s.im.abs() > 1e-9 * s.norm() {
                continue;
            }
            let Some((num, den)) = approx_rational(s.re, 1_000_000) else { continue };
            let r = AlgScalar::from_ratio(num, den) * b.clone();
            if r.pow(n) == *c {
                return Some(r);
            }
        }
    }
    None
}

/// The normalizing element for given `r₁, r₈`: `r` solves
/// `r^{2k₁+k₂} r₁ r₈ = √90` and `A` scales `u_j` as in the reduction to the
/// circle-symmetric family. Falls back to float arithmetic (with a warning)
/// when no exact root is found.
pub fn normalizer(spec: &SingularityTypeSpec, r1: &AlgScalar, r8: &AlgScalar) -> Result<Normalizer> {
    spec.require_almost_complex()?;
    if r1.is_zero() || r8.is_zero() {
        return Err(Error::InvalidArgument("r1 and r8 must be nonzero".into()));
    }
    let n = 2 * spec.k1() + spec.k2();
    let target = sq(90).checked_div(&(r1 * r8))?;
    if let Some(r) = exact_root(&target, n) {
        let s = normalizer_scales(spec, &r, r1, r8)?;
        return Ok(Normalizer::Exact { r, a: in_standard_basis(&s) });
    }
    log::warn!("no exact root of r^{n} = {target}; using float arithmetic");
    normalizer_float(spec, r1.to_c64(), r8.to_c64())
}

/// Float-mode normalizer with the principal root of `r^n = √90/(r₁r₈)`.
pub fn normalizer_float(spec: &SingularityTypeSpec, r1: Complex64, r8: Complex64) -> Result<Normalizer> {
    spec.require_almost_complex()?;
    let n = 2 * spec.k1() + spec.k2();
    let target = Complex64::new(90f64.sqrt(), 0.0) / (r1 * r8);
    let r = target.powf(1.0 / n as f64);
    let s = normalizer_scales(spec, &r, &r1, &r8)?;
    Ok(Normalizer::Float { r, a: in_standard_basis(&s) })
}

/// `A · f(r z)` for the circle-symmetric r-family (`r₂..r₇ = 0`). With an
/// exact normalizer the result is exact.
pub fn normalize_r_family(spec: &SingularityTypeSpec, r1: &AlgScalar, r8: &AlgScalar) -> Result<(Normalizer, CurveC7)> {
    let norm = normalizer(spec, r1, r8)?;
    match &norm {
        Normalizer::Exact { r, a } => {
            let params = RFamilyParams::symmetric(r1.clone(), r8.clone())?;
            let f = r_family(spec, &params)?.curve();
            let g = a.apply_curve(&f.map(|p| p.substitute_scale(r)));
            Ok((norm, g))
        }
        Normalizer::Float { .. } => Err(Error::InvalidArgument(
            "no exact root in the field; use normalize_r_family_float".into(),
        )),
    }
}

/// Float version of [`normalize_r_family`].
pub fn normalize_r_family_float(spec: &SingularityTypeSpec, r1: Complex64, r8: Complex64) -> Result<CurveC7<Complex64>> {
    let Normalizer::Float { r, a } = normalizer_float(spec, r1, r8)? else { unreachable!() };
    let params = RFamilyParams::symmetric(r1, r8)?;
    let f = r_family(spec, &params)?.curve();
    Ok(a.apply_curve(&f.map(|p| p.substitute_scale(&r))))
}

/// The circle-symmetric curve `Σ z^{K_p} c_p u_p` with real harmonic
/// sequence: the coefficients satisfy the reality relation with
/// `μ = −λ₃`. For increments outside the `(a, b, a, a, b, a)` pattern the
/// curve lies on the quadric but is not superhorizontal.
pub fn real_symmetric_curve(spec: &SingularityTypeSpec) -> Result<NormalFormCurve<AlgScalar>> {
    if (0..6).any(|j| spec.k[j] != spec.k[5 - j]) {
        return Err(Error::InvalidArgument("increments must be palindromic".into()));
    }
    let lambda = lambda_weights(spec).map(AlgScalar::from_rational);
    let u = u_basis();
    let v = std::array::from_fn(|j| {
        let c = match j {
            0..=2 => &lambda[3] * &lambda[j],
            3 => lambda[3].clone(),
            _ => AlgScalar::one(),
        };
        u[j].scale(&c)
    });
    Ok(NormalFormCurve::new(*spec, v))
}

/// Float image of the exact value, for reports.
pub fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twistor::is_superhorizontal;

    #[test]
    fn ladder_and_type() {
        let s = SingularityTypeSpec::almost_complex(1, 2).unwrap();
        assert_eq!(s.ladder(), [0, 1, 3, 4, 5, 7, 8]);
        assert_eq!(s.expected_type(), [0, 1, 0, 0, 1, 0]);
        assert!(SingularityTypeSpec::almost_complex(0, 1).is_err());
    }

    #[test]
    fn e4_component_for_1_2() {
        let f = example_family(1, 2).unwrap();
        assert_eq!(f.0[3], Poly::monomial(q(3, 1) * sq(5), 4));
        assert_eq!(f.0[3].ord0(), Some(4));
    }

    #[test]
    fn constant_term_on_e3_for_1_1() {
        let f = example_family_mirrored(1, 1).unwrap();
        assert_eq!(f.0[2].coeff(0), q(1, 2) * sq(2) * AlgScalar::i());
    }

    #[test]
    fn family_is_superhorizontal() {
        for (k1, k2) in [(1, 1), (2, 1)] {
            let f = example_family(k1, k2).unwrap();
            assert!(is_superhorizontal(&f).unwrap().superhorizontal);
        }
    }

    #[test]
    fn lambda_symmetry() {
        let s = SingularityTypeSpec::almost_complex(1, 2).unwrap();
        let l = lambda_weights(&s);
        for j in 0..7 {
            assert_eq!(l[j], l[6 - j]);
        }
    }

    #[test]
    fn reality_detects_violation() {
        let f = example_family(1, 1).unwrap();
        let spec = SingularityTypeSpec::almost_complex(1, 1).unwrap();
        let mut c = NormalFormCurve::from_curve(&f, spec).unwrap();
        assert!(reality_check(&c, 0.0).holds);
        c.v[5] = c.v[5].add(&c.v[1]);
        assert!(!reality_check(&c, 0.0).holds);
    }

    #[test]
    fn rational_recognition() {
        assert_eq!(approx_rational(0.75, 100), Some((3, 4)));
        assert_eq!(approx_rational(-2.0, 100), Some((-2, 1)));
        assert_eq!(approx_rational(std::f64::consts::PI, 100), None);
    }

    #[test]
    fn exact_roots() {
        assert_eq!(exact_root(&q(4, 1), 4), Some(sq(2)));
        assert_eq!(exact_root(&q(1, 1), 3), Some(q(1, 1)));
        assert_eq!(exact_root(&q(2, 1), 3), None);
    }

    #[test]
    fn lowest_is_scaled_family() {
        let f = example_family(1, 2).unwrap();
        let c = q(70, 1) * sq(2);
        assert_eq!(f.map(|p| p.scale(&c)), lowest_curve());
    }

    #[test]
    fn mu_for_1_1() {
        let spec = SingularityTypeSpec::almost_complex(1, 1).unwrap();
        let c = NormalFormCurve::from_curve(&example_family(1, 1).unwrap(), spec).unwrap();
        assert_eq!(lambda_weight(&spec, 0), big(34560));
        assert_eq!(lambda_weight(&spec, 3), big(691200));
        assert_eq!(reality_check(&c, 0.0).mu, Some(q(-1, 34560)));
    }

    #[test]
    fn r_family_normalizes_to_family() {
        for (k1, k2, r1) in [(1, 1, q(3, 1)), (1, 2, q(3, 4))] {
            let spec = SingularityTypeSpec::almost_complex(k1, k2).unwrap();
            let (n, g) = normalize_r_family(&spec, &r1, &sq(10)).unwrap();
            assert!(n.is_exact());
            assert_eq!(g, example_family(k1, k2).unwrap());
        }
    }

    #[test]
    fn r_family_general_params_superhorizontal() {
        let spec = SingularityTypeSpec::almost_complex(1, 2).unwrap();
        let r = std::array::from_fn(|j| q(j as i64 + 1, 2) + AlgScalar::i() * q(1, j as i64 + 2));
        let f = r_family(&spec, &RFamilyParams::new(r).unwrap()).unwrap().curve();
        assert!(is_superhorizontal(&f).unwrap().superhorizontal);
    }

    #[test]
    fn float_normalizer_matches_exact() {
        let spec = SingularityTypeSpec::almost_complex(1, 1).unwrap();
        let g = normalize_r_family_float(&spec, Complex64::new(3.0, 0.0), Complex64::new(10f64.sqrt(), 0.0)).unwrap();
        let f = example_family(1, 1).unwrap();
        for e in 0..=6 {
            let d = g.coeff_vec(e).dist(&f.coeff_vec(e).to_float());
            assert!(d < 1e-9, "exponent {e}: {d}");
        }
    }

    #[test]
    fn real_symmetric_curve_off_pattern() {
        let spec = SingularityTypeSpec::new([2, 1, 1, 1, 1, 2]).unwrap();
        let c = real_symmetric_curve(&spec).unwrap();
        assert!(reality_check(&c, 0.0).holds);
        let check = is_superhorizontal(&c.curve()).unwrap();
        assert!(!check.superhorizontal);
    }
}
