use std::fmt::Debug;

use num_complex::Complex64;

use super::alg::AlgScalar;

/// Commutative ring operations by reference.
///
/// Implemented by coefficient fields as well as by the polynomial and
/// rational-function rings, so that vector operations (cross product,
/// bilinear forms) can be written once for all of them.
pub trait Ring: Clone + Debug + PartialEq + Send + Sync {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self = self.sub_ref(other);
    }
}

/// Complex conjugation. For functions of `z` and `z̄` this swaps the two
/// variables and conjugates the coefficients.
pub trait Conjugate {
    fn conj(&self) -> Self;
}

/// A coefficient field: either the exact field `AlgScalar` or `Complex64`.
pub trait Scalar: Ring + Conjugate {
    /// `true` when arithmetic is exact and zero tests need no tolerance.
    const EXACT: bool;

    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn imag_unit() -> Self;
    fn inv(&self) -> Option<Self>;
    fn to_c64(&self) -> Complex64;

    /// Embed an exact scalar (rounding in float mode).
    fn from_alg(x: &AlgScalar) -> Self;

    /// Zero test used by elimination and residual checks. Exact scalars
    /// ignore `tol`.
    fn is_negligible(&self, tol: f64) -> bool;

    fn magnitude(&self) -> f64 {
        self.to_c64().norm()
    }

    fn div_ref(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self.mul_ref(&inv))
    }

    fn is_one(&self) -> bool {
        self.sub_ref(&Self::one()).is_zero()
    }
}

impl Ring for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
}

impl Conjugate for Complex64 {
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn imag_unit() -> Self {
        Complex64::new(0.0, 1.0)
    }
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(Complex64::new(1.0, 0.0) / self)
        }
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
    fn from_alg(x: &AlgScalar) -> Self {
        x.to_c64()
    }
    fn is_negligible(&self, tol: f64) -> bool {
        self.norm() <= tol
    }
}
