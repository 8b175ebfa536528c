//! The cross product on `ℂ⁷`, G₂-bases and G₂^ℂ membership.
//!
//! The cross product is defined by structure constants: each oriented
//! triple `(a, b, c)` below means `e_a × e_b = e_c` together with its cyclic
//! rotations and antisymmetry. Everything else in the crate is tested
//! against this table.

use std::fmt;
use std::ops::Index;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgScalar, Conjugate, Poly, Ring, Scalar};
use crate::error::{Error, Result};

/// Oriented triples, 0-based (`(0, 1, 2)` is `e₁ × e₂ = e₃`).
pub const TRIPLES: [(usize, usize, usize); 7] =
    [(0, 1, 2), (0, 3, 4), (0, 6, 5), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 5, 4)];

/// `TABLE[i][j] = (s, k)` means `e_i × e_j = s·e_k`; `s = 0` on the diagonal.
pub const TABLE: [[(i8, usize); 7]; 7] = build_table();

const fn build_table() -> [[(i8, usize); 7]; 7] {
    let mut t = [[(0i8, 0usize); 7]; 7];
    let mut n = 0;
    while n < 7 {
        let (a, b, c) = TRIPLES[n];
        t[a][b] = (1, c);
        t[b][c] = (1, a);
        t[c][a] = (1, b);
        t[b][a] = (-1, c);
        t[c][b] = (-1, a);
        t[a][c] = (-1, b);
        n += 1;
    }
    t
}

/// Seven components over a ring: scalars, polynomials or rational functions.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "R: Serialize", deserialize = "R: Deserialize<'de>"))]
pub struct Vec7<R>(pub [R; 7]);

impl<R> Index<usize> for Vec7<R> {
    type Output = R;
    fn index(&self, k: usize) -> &R {
        &self.0[k]
    }
}

impl<R: fmt::Debug> fmt::Debug for Vec7<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl<R: fmt::Display> fmt::Display for Vec7<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<R: Ring> Vec7<R> {
    pub fn zero() -> Self {
        Vec7(std::array::from_fn(|_| R::zero()))
    }

    pub fn from_fn(f: impl FnMut(usize) -> R) -> Self {
        Vec7(std::array::from_fn(f))
    }

    pub fn map<T>(&self, f: impl Fn(&R) -> T) -> Vec7<T> {
        Vec7(std::array::from_fn(|k| f(&self.0[k])))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Ring::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_fn(|k| self.0[k].add_ref(&o.0[k]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_fn(|k| self.0[k].sub_ref(&o.0[k]))
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::neg_ref)
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul_ref(c))
    }

    pub fn cross(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (i, row) in TABLE.iter().enumerate() {
            if self.0[i].is_zero() {
                continue;
            }
            for (j, &(s, k)) in row.iter().enumerate() {
                if s == 0 || o.0[j].is_zero() {
                    continue;
                }
                let p = self.0[i].mul_ref(&o.0[j]);
                if s > 0 {
                    out.0[k].add_assign_ref(&p);
                } else {
                    out.0[k].sub_assign_ref(&p);
                }
            }
        }
        out
    }

    /// The symmetric bilinear form `(u, v) = Σ u_k v_k`.
    pub fn bilinear(&self, o: &Self) -> R {
        let mut acc = R::zero();
        for (a, b) in self.0.iter().zip(&o.0) {
            if !a.is_zero() && !b.is_zero() {
                acc.add_assign_ref(&a.mul_ref(b));
            }
        }
        acc
    }

    /// `u ∧ v ≡ 0`, i.e. every 2×2 minor vanishes.
    pub fn wedge_is_zero(&self, o: &Self) -> bool {
        self.first_nonzero_minor(o).is_none()
    }

    /// First `(i, j)` with `u_i v_j − u_j v_i ≠ 0`.
    pub fn first_nonzero_minor(&self, o: &Self) -> Option<(usize, usize)> {
        for i in 0..7 {
            for j in i + 1..7 {
                let m = self.0[i].mul_ref(&o.0[j]).sub_ref(&self.0[j].mul_ref(&o.0[i]));
                if !m.is_zero() {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

impl<R: Ring + Conjugate> Vec7<R> {
    pub fn conj(&self) -> Self {
        self.map(Conjugate::conj)
    }

    /// Hermitian product `⟨u, v⟩ = (u, v̄)`, conjugate-linear in `v`.
    pub fn hermitian(&self, o: &Self) -> R {
        self.bilinear(&o.conj())
    }
}

impl<S: Scalar> Vec7<S> {
    pub fn basis(j: usize) -> Self {
        Self::from_fn(|k| if k == j { S::one() } else { S::zero() })
    }

    pub fn to_float(&self) -> Vec7<Complex64> {
        self.map(Scalar::to_c64)
    }

    /// Euclidean norm of the float image.
    pub fn norm(&self) -> f64 {
        self.0.iter().map(|c| c.to_c64().norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_negligible(&self, tol: f64) -> bool {
        self.0.iter().all(|c| c.is_negligible(tol))
    }
}

impl Vec7<Complex64> {
    pub fn from_real(v: [f64; 7]) -> Self {
        Vec7(v.map(|x| Complex64::new(x, 0.0)))
    }

    pub fn re(&self) -> [f64; 7] {
        self.0.map(|c| c.re)
    }

    pub fn max_imag(&self) -> f64 {
        self.0.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }

    pub fn dist(&self, o: &Self) -> f64 {
        self.sub(o).norm()
    }
}

impl<S: Scalar> Vec7<Poly<S>> {
    /// Evaluate a polynomial vector at a float point.
    pub fn eval(&self, z: Complex64) -> Vec7<Complex64> {
        self.map(|p| p.eval(z))
    }

    pub fn derivative(&self) -> Self {
        self.map(Poly::derivative)
    }

    /// `Σ c_p z^{e_p} v_p`.
    pub fn from_monomials(terms: &[(u32, Vec7<S>)]) -> Self {
        let mut out = Self::zero();
        for (e, v) in terms {
            for k in 0..7 {
                out.0[k].add_term(*e, &v.0[k]);
            }
        }
        out
    }

    /// Coefficient vector of `z^e`.
    pub fn coeff_vec(&self, e: u32) -> Vec7<S> {
        self.map(|p| p.coeff(e))
    }

    pub fn degree(&self) -> Option<u32> {
        self.0.iter().filter_map(Poly::degree).max()
    }

    pub fn ord0(&self) -> Option<u32> {
        self.0.iter().filter_map(Poly::ord0).min()
    }

    /// All exponents that occur in some component, increasing.
    pub fn exponents(&self) -> Vec<u32> {
        let mut e: Vec<u32> = self.0.iter().flat_map(|p| p.terms().map(|(e, _)| e)).collect();
        e.sort_unstable();
        e.dedup();
        e
    }
}

/// 7×7 matrix, row-major.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "S: Serialize", deserialize = "S: Deserialize<'de>"))]
pub struct Mat7<S> {
    pub rows: [[S; 7]; 7],
}

impl<S: fmt::Debug> fmt::Debug for Mat7<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.iter()).finish()
    }
}

/// Outcome of [`Mat7::g2c_membership`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Membership {
    pub member: bool,
    pub failure: Option<MembershipFailure>,
    /// Largest residual seen (0 in exact mode when all checks pass).
    pub max_residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum MembershipFailure {
    /// `M(e_i) × M(e_j) ≠ M(e_i × e_j)`, 0-based indices.
    Cross { i: usize, j: usize },
    /// `(MᵀM)_{ij} ≠ δ_{ij}`.
    Orthogonality { i: usize, j: usize },
}

impl<S: Scalar> Mat7<S> {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> S) -> Self {
        Mat7 { rows: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))) }
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn diagonal(d: [S; 7]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i].clone() } else { S::zero() })
    }

    pub fn from_columns(cols: &[Vec7<S>; 7]) -> Self {
        Self::from_fn(|i, j| cols[j].0[i].clone())
    }

    pub fn column(&self, j: usize) -> Vec7<S> {
        Vec7::from_fn(|i| self.rows[i][j].clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.rows[j][i].clone())
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(|i, j| self.rows[i][j].conj())
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_fn(|i, j| self.rows[i][j].mul_ref(c))
    }

    pub fn apply(&self, v: &Vec7<S>) -> Vec7<S> {
        Vec7::from_fn(|i| {
            let mut acc = S::zero();
            for j in 0..7 {
                if !v.0[j].is_zero() && !self.rows[i][j].is_zero() {
                    acc.add_assign_ref(&self.rows[i][j].mul_ref(&v.0[j]));
                }
            }
            acc
        })
    }

    /// Apply to a polynomial curve coefficient by coefficient.
    pub fn apply_curve(&self, f: &Vec7<Poly<S>>) -> Vec7<Poly<S>> {
        let terms: Vec<(u32, Vec7<S>)> =
            f.exponents().into_iter().map(|e| (e, self.apply(&f.coeff_vec(e)))).collect();
        Vec7::from_monomials(&terms)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::from_fn(|i, j| {
            let mut acc = S::zero();
            for k in 0..7 {
                acc.add_assign_ref(&self.rows[i][k].mul_ref(&o.rows[k][j]));
            }
            acc
        })
    }

    pub fn to_float(&self) -> Mat7<Complex64> {
        Mat7::from_fn(|i, j| self.rows[i][j].to_c64())
    }

    /// Tests `M(e_i) × M(e_j) = M(e_i × e_j)` for `i ≤ j` and `MᵀM = I`.
    /// Exact scalars ignore `tol`. The certificate is the first failing
    /// pair, cross-product checks first.
    pub fn g2c_membership(&self, tol: f64) -> Membership {
        let cols: Vec<Vec7<S>> = (0..7).map(|j| self.column(j)).collect();
        let mut worst = 0.0f64;
        for i in 0..7 {
            for j in i..7 {
                let lhs = cols[i].cross(&cols[j]);
                let (s, k) = TABLE[i][j];
                let rhs = match s {
                    0 => Vec7::zero(),
                    1 => cols[k].clone(),
                    _ => cols[k].neg(),
                };
                let diff = lhs.sub(&rhs);
                worst = worst.max(diff.norm());
                if !diff.is_negligible(tol) {
                    return Membership {
                        member: false,
                        failure: Some(MembershipFailure::Cross { i, j }),
                        max_residual: worst,
                    };
                }
            }
        }
        for i in 0..7 {
            for j in i..7 {
                let mut g = cols[i].bilinear(&cols[j]);
                if i == j {
                    g = g.sub_ref(&S::one());
                }
                worst = worst.max(g.magnitude());
                if !g.is_negligible(tol) {
                    return Membership {
                        member: false,
                        failure: Some(MembershipFailure::Orthogonality { i, j }),
                        max_residual: worst,
                    };
                }
            }
        }
        Membership { member: true, failure: None, max_residual: worst }
    }
}

/// An orthonormal basis satisfying the full multiplication table.
#[derive(Clone, Debug)]
pub struct G2Basis<S> {
    pub vectors: [Vec7<S>; 7],
    /// The generating triple `(f₁, f₂, f₄)`.
    pub generators: [Vec7<S>; 3],
}

impl<S: Scalar> G2Basis<S> {
    pub fn matrix(&self) -> Mat7<S> {
        Mat7::from_columns(&self.vectors)
    }

    /// First `(i, j)` where `f_i × f_j` disagrees with the table.
    pub fn table_violation(&self, tol: f64) -> Option<(usize, usize)> {
        for i in 0..7 {
            for j in 0..7 {
                let (s, k) = TABLE[i][j];
                let lhs = self.vectors[i].cross(&self.vectors[j]);
                let rhs = match s {
                    0 => Vec7::zero(),
                    1 => self.vectors[k].clone(),
                    _ => self.vectors[k].neg(),
                };
                if !lhs.sub(&rhs).is_negligible(tol) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Complete `(f₁, f₂, f₄)` to `f₃ = f₁×f₂, f₅ = f₁×f₄, f₆ = f₂×f₄, f₇ = f₃×f₄`.
pub fn complete_g2_basis<S: Scalar>(
    f1: &Vec7<S>,
    f2: &Vec7<S>,
    f4: &Vec7<S>,
    tol: f64,
) -> Result<G2Basis<S>> {
    let f3 = f1.cross(f2);
    let checks: [(&str, S, S); 6] = [
        ("(f1,f1) = 1", f1.bilinear(f1), S::one()),
        ("(f2,f2) = 1", f2.bilinear(f2), S::one()),
        ("(f4,f4) = 1", f4.bilinear(f4), S::one()),
        ("f1 ⊥ f2", f1.bilinear(f2), S::zero()),
        ("f1 ⊥ f4", f1.bilinear(f4), S::zero()),
        ("f2 ⊥ f4", f2.bilinear(f4), S::zero()),
    ];
    for (name, got, want) in checks {
        if !got.sub_ref(&want).is_negligible(tol) {
            return Err(Error::G2Precondition(format!("{name} fails")));
        }
    }
    if !f4.bilinear(&f3).is_negligible(tol) {
        return Err(Error::G2Precondition("f4 ⊥ f1×f2 fails".into()));
    }
    let f5 = f1.cross(f4);
    let f6 = f2.cross(f4);
    let f7 = f3.cross(f4);
    Ok(G2Basis {
        vectors: [f1.clone(), f2.clone(), f3, f4.clone(), f5, f6, f7],
        generators: [f1.clone(), f2.clone(), f4.clone()],
    })
}

fn random_unit_orthogonal<R: Rng>(rng: &mut R, against: &[[f64; 7]]) -> [f64; 7] {
    loop {
        let mut v: [f64; 7] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        for a in against {
            let d: f64 = v.iter().zip(a).map(|(x, y)| x * y).sum();
            for k in 0..7 {
                v[k] -= d * a[k];
            }
        }
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-3 {
            return v.map(|x| x / n);
        }
    }
}

/// A random admissible triple `(f₁, f₂, f₄)` of real float vectors.
pub fn random_admissible_triple<R: Rng>(rng: &mut R) -> [Vec7<Complex64>; 3] {
    let f1 = random_unit_orthogonal(rng, &[]);
    let f2 = random_unit_orthogonal(rng, &[f1]);
    let f3 = Vec7::from_real(f1).cross(&Vec7::from_real(f2)).re();
    let f4 = random_unit_orthogonal(rng, &[f1, f2, f3]);
    [Vec7::from_real(f1), Vec7::from_real(f2), Vec7::from_real(f4)]
}

/// A random element of G₂ as a float matrix.
pub fn random_g2<R: Rng>(rng: &mut R) -> Mat7<Complex64> {
    let [f1, f2, f4] = random_admissible_triple(rng);
    complete_g2_basis(&f1, &f2, &f4, 1e-9)
        .expect("random triple is admissible")
        .matrix()
}

fn inv_sqrt2() -> AlgScalar {
    AlgScalar::ratio_sqrt(1, 2, 2)
}

/// `(a·e_p + b·i·e_q)/√2` with integer signs `a`, `b` (1-based indices).
fn half_null(a: i64, p: usize, b: i64, q: usize) -> Vec7<AlgScalar> {
    let mut v = Vec7::zero();
    v.0[p - 1] = AlgScalar::from_int(a) * inv_sqrt2();
    v.0[q - 1] = AlgScalar::from_int(b) * AlgScalar::i() * inv_sqrt2();
    v
}

/// The reflection `S = diag(−1,−1,−1,1,−1,−1,−1)`. It is orthogonal but not
/// in G₂; it relates the frame used here to the mirrored frame in which the
/// u-basis and the catalog curves are usually tabulated.
pub fn mirror() -> Mat7<AlgScalar> {
    let mut d: [AlgScalar; 7] = std::array::from_fn(|_| AlgScalar::from_int(-1));
    d[3] = AlgScalar::one();
    Mat7::diagonal(d)
}

/// The u-basis in the mirrored frame, exactly as usually tabulated:
/// `u₀ = (−e₇+ie₃)/√2, u₁ = (e₂−ie₆)/√2, u₂ = (−e₁+ie₅)/√2, u₃ = e₄,
/// u₄ = (e₁+ie₅)/√2, u₅ = (e₂+ie₆)/√2, u₆ = (e₇+ie₃)/√2`.
pub fn u_basis_mirrored() -> [Vec7<AlgScalar>; 7] {
    [
        half_null(-1, 7, 1, 3),
        half_null(1, 2, -1, 6),
        half_null(-1, 1, 1, 5),
        Vec7::basis(3),
        half_null(1, 1, 1, 5),
        half_null(1, 2, 1, 6),
        half_null(1, 7, 1, 3),
    ]
}

/// Unitary basis `u₀..u₆` adapted to the circle action: `u₃ = e₄`,
/// `u₀ × u₃ = −i u₀`, and `ū_j = (−1)^{j+1} u_{6−j}`.
pub fn u_basis() -> [Vec7<AlgScalar>; 7] {
    let s = mirror();
    u_basis_mirrored().map(|u| s.apply(&u))
}

/// Change of basis from u-coordinates to e-coordinates: column `j` is `u_j`.
pub fn u_to_e() -> Mat7<AlgScalar> {
    Mat7::from_columns(&u_basis())
}

#[cfg(test)]
mod tests {
    use super::*;

    type V = Vec7<AlgScalar>;

    fn e(j: usize) -> V {
        V::basis(j - 1)
    }

    #[test]
    fn basic_products() {
        assert_eq!(e(1).cross(&e(2)), e(3));
        assert_eq!(e(4).cross(&e(5)), e(1));
        assert_eq!(e(2).cross(&e(1)), e(3).neg());
    }

    #[test]
    fn forms() {
        let x = e(1).add(&e(5).scale(&AlgScalar::i()));
        assert!(x.bilinear(&x).is_zero());
        assert_eq!(x.hermitian(&x), AlgScalar::from_int(2));
        assert!(e(1).cross(&e(2)).bilinear(&e(2)).is_zero());
    }

    #[test]
    fn identity_completion() {
        let b = complete_g2_basis(&e(1), &e(2), &e(4), 0.0).unwrap();
        for j in 0..7 {
            assert_eq!(b.vectors[j], V::basis(j));
        }
        let swapped = complete_g2_basis(&e(2), &e(1), &e(4), 0.0).unwrap();
        assert_eq!(swapped.vectors[2], e(3).neg());
        assert!(swapped.table_violation(0.0).is_none());
        assert!(swapped.matrix().g2c_membership(0.0).member);
    }

    #[test]
    fn inadmissible_triple() {
        let err = complete_g2_basis(&e(1), &e(2), &e(3), 0.0).unwrap_err();
        assert!(err.to_string().contains("f1×f2"));
    }

    #[test]
    fn membership_of_identity_and_negation() {
        let id = Mat7::<AlgScalar>::identity();
        assert!(id.g2c_membership(0.0).member);
        let neg = id.scale(&AlgScalar::from_int(-1));
        let m = neg.g2c_membership(0.0);
        assert!(!m.member);
        assert_eq!(m.failure, Some(MembershipFailure::Cross { i: 0, j: 1 }));
    }

    #[test]
    fn mirror_is_orthogonal_but_not_g2() {
        let m = mirror().g2c_membership(0.0);
        assert!(!m.member);
        assert!(matches!(m.failure, Some(MembershipFailure::Cross { .. })));
    }

    #[test]
    fn u_basis_is_unitary() {
        let u = u_basis();
        assert_eq!(u[3], e(4));
        for i in 0..7 {
            for j in 0..7 {
                let want = if i == j { AlgScalar::one() } else { AlgScalar::zero() };
                assert_eq!(u[i].hermitian(&u[j]), want);
            }
        }
        assert_eq!(u[0].cross(&u[3]), u[0].scale(&-AlgScalar::i()));
    }

    #[test]
    fn random_g2_elements_are_members() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let g = random_g2(&mut rng);
            let m = g.g2c_membership(1e-10);
            assert!(m.member, "{m:?}");
        }
    }

    #[test]
    fn polynomial_cross_product() {
        let f: Vec7<Poly<AlgScalar>> = Vec7::from_monomials(&[(0, e(1)), (2, e(2))]);
        let g = f.cross(&f.derivative());
        // (e₁ + z² e₂) × 2z e₂ = 2z e₃
        assert_eq!(g.0[2], Poly::monomial(AlgScalar::from_int(2), 1));
    }
}
