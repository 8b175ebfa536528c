use std::fmt;

use num_complex::Complex64;

use super::bipoly::BiPoly;
use super::scalar::{Conjugate, Ring, Scalar};
use crate::error::Error;

/// Quotient of two [`BiPoly`]s.
///
/// Only the monomial content `z^a z̄^b` shared by numerator and denominator
/// is cancelled automatically. Equality is decided by cross-multiplication,
/// so two representations of the same function compare equal.
#[derive(Clone)]
pub struct RationalFn<S> {
    num: BiPoly<S>,
    den: BiPoly<S>,
}

impl<S: Scalar> RationalFn<S> {
    pub fn new(num: BiPoly<S>, den: BiPoly<S>) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_bipoly(p: BiPoly<S>) -> Self {
        RationalFn { num: p, den: BiPoly::one() }
    }

    fn normalized(num: BiPoly<S>, den: BiPoly<S>) -> Self {
        if num.is_zero() {
            return RationalFn { num, den: BiPoly::one() };
        }
        let (na, nb) = num.monomial_content();
        let (da, db) = den.monomial_content();
        let (a, b) = (na.min(da) as i64, nb.min(db) as i64);
        let (mut num, mut den) = if a > 0 || b > 0 {
            (num.shift(-a, -b), den.shift(-a, -b))
        } else {
            (num, den)
        };
        // a constant denominator is folded into the numerator
        if den.len() == 1 && den.monomial_content() == (0, 0) {
            let inv = den.coeff(0, 0).inv().expect("nonzero denominator");
            num = num.scale(&inv);
            den = BiPoly::one();
        }
        RationalFn { num, den }
    }

    pub fn num(&self) -> &BiPoly<S> {
        &self.num
    }

    pub fn den(&self) -> &BiPoly<S> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `self ≡ other` as functions, tested as `n₁d₂ − n₂d₁ ≡ 0`.
    pub fn identity_eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        (&self.num * &other.den).sub_ref(&(&other.num * &self.den)).is_zero()
    }

    /// The constant `c` with `self ≡ c`, if there is one.
    pub fn as_constant(&self) -> Option<S> {
        if self.num.is_zero() {
            return Some(S::zero());
        }
        let ((nk, nc), (dk, dc)) = (self.num.leading()?, self.den.leading()?);
        if nk != dk {
            return None;
        }
        let c = nc.div_ref(dc)?;
        if self.num.sub_ref(&self.den.scale(&c)).is_zero() {
            Some(c)
        } else {
            None
        }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, Error> {
        if other.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &other.den, &self.den * &other.num))
    }

    pub fn d_z(&self) -> Self {
        let n = (&self.num.d_z() * &self.den).sub_ref(&(&self.num * &self.den.d_z()));
        Self::normalized(n, &self.den * &self.den)
    }

    pub fn d_zbar(&self) -> Self {
        let n = (&self.num.d_zbar() * &self.den).sub_ref(&(&self.num * &self.den.d_zbar()));
        Self::normalized(n, &self.den * &self.den)
    }

    /// `∂_z log self`.
    pub fn log_derivative(&self) -> Result<Self, Error> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = (&self.num.d_z() * &self.den).sub_ref(&(&self.num * &self.den.d_z()));
        Ok(Self::normalized(n, &self.num * &self.den))
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.num.eval(z) / self.den.eval(z)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }
}

impl<S: Scalar> PartialEq for RationalFn<S> {
    fn eq(&self, other: &Self) -> bool {
        self.identity_eq(other)
    }
}

impl<S: Scalar> Conjugate for RationalFn<S> {
    fn conj(&self) -> Self {
        RationalFn { num: self.num.conj(), den: self.den.conj() }
    }
}

impl<S: Scalar> Ring for RationalFn<S> {
    fn zero() -> Self {
        RationalFn { num: BiPoly::zero(), den: BiPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::normalized(self.num.add_ref(&other.num), self.den.clone());
        }
        Self::normalized(
            (&self.num * &other.den).add_ref(&(&other.num * &self.den)),
            &self.den * &other.den,
        )
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        Self::normalized(&self.num * &other.num, &self.den * &other.den)
    }
    fn neg_ref(&self) -> Self {
        RationalFn { num: self.num.neg_ref(), den: self.den.clone() }
    }
}

impl<S: fmt::Debug> fmt::Debug for RationalFn<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / ({:?})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgScalar;

    type B = BiPoly<AlgScalar>;
    type R = RationalFn<AlgScalar>;

    fn m(c: i64, a: u32, b: u32) -> B {
        B::monomial(AlgScalar::from_int(c), a, b)
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(R::new(m(1, 0, 0), B::zero()).is_err());
    }

    #[test]
    fn monomial_content_is_stripped() {
        let r = R::new(&m(1, 3, 1) + &m(2, 2, 2), m(1, 2, 1)).unwrap();
        assert_eq!(r.den(), &B::one());
        assert_eq!(r.num(), &(&m(1, 1, 0) + &m(2, 0, 1)));
    }

    #[test]
    fn cross_multiplied_equality() {
        let one_plus = &m(1, 0, 0) + &m(1, 1, 1);
        let a = R::new(&one_plus * &m(1, 1, 0), &one_plus * &one_plus).unwrap();
        let b = R::new(m(1, 1, 0), one_plus.clone()).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, R::from_bipoly(m(1, 1, 0)));
    }

    #[test]
    fn log_derivative_of_norm() {
        // ∂ log(1 + z z̄) = z̄ / (1 + z z̄)
        let n = R::from_bipoly(&m(1, 0, 0) + &m(1, 1, 1));
        let expected = R::new(m(1, 0, 1), &m(1, 0, 0) + &m(1, 1, 1)).unwrap();
        assert_eq!(n.log_derivative().unwrap(), expected);
    }

    #[test]
    fn constant_detection() {
        let d = &m(1, 0, 0) + &m(1, 1, 1);
        let r = R::new(d.scale(&AlgScalar::from_int(2)), d).unwrap();
        assert_eq!(r.as_constant(), Some(AlgScalar::from_int(2)));
        assert_eq!(R::from_bipoly(m(1, 1, 0)).as_constant(), None);
    }
}
