use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::alg::AlgScalar;
use super::scalar::{Ring, Scalar};

/// Polynomial in `z` stored as a sparse exponent map. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<S> {
    terms: BTreeMap<u32, S>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: S, exp: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Poly { terms }
    }

    /// z
    pub fn z() -> Self {
        Self::monomial(S::one(), 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, S)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, &c);
        }
        p
    }

    pub fn add_term(&mut self, exp: u32, c: &S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                v.add_assign_ref(c);
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Order of vanishing at `z = 0`.
    pub fn ord0(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, exp: u32) -> S {
        self.terms.get(&exp).cloned().unwrap_or_else(S::zero)
    }

    pub fn leading(&self) -> Option<(u32, &S)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &S)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, v)| (*e, v.mul_ref(c))))
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::from_terms(self.terms.iter().map(|(e, v)| (*e, f(v))))
    }

    /// Coefficient-wise conjugate; as a function this is `z ↦ conj(p(conj z))`.
    pub fn conj_coeffs(&self) -> Self {
        self.map_coeffs(|c| c.conj())
    }

    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| **e > 0)
                .map(|(e, c)| (e - 1, c.mul_ref(&S::from_i64(*e as i64)))),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    /// Multiply by `z^k`.
    pub fn shift_up(&self, k: u32) -> Self {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Divide by `z^k`; terms of lower degree must be absent.
    pub fn shift_down(&self, k: u32) -> Self {
        assert!(self.ord0().is_none_or(|o| o >= k), "shift_down below ord0");
        Poly {
            terms: self.terms.iter().map(|(e, c)| (e - k, c.clone())).collect(),
        }
    }

    /// `z^d · p(1/z)`, the polynomial in the chart at infinity.
    pub fn reversed(&self, d: u32) -> Self {
        assert!(self.degree().is_none_or(|deg| deg <= d), "reversal degree too small");
        Poly {
            terms: self.terms.iter().map(|(e, c)| (d - e, c.clone())).collect(),
        }
    }

    /// `p(c·z)`.
    pub fn substitute_scale(&self, c: &S) -> Self {
        let mut pow = S::one();
        let mut last = 0;
        let mut out = Self::zero();
        for (e, v) in &self.terms {
            for _ in last..*e {
                pow = pow.mul_ref(c);
            }
            last = *e;
            out.add_term(*e, &v.mul_ref(&pow));
        }
        out
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut prev = match self.degree() {
            Some(d) => d,
            None => return acc,
        };
        for (e, c) in self.terms.iter().rev() {
            acc *= z.powu(prev - e);
            acc += c.to_c64();
            prev = *e;
        }
        acc * z.powu(prev)
    }

    pub fn to_float(&self) -> Poly<Complex64> {
        self.map_coeffs(|c| c.to_c64())
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_one())
    }

    /// Long division `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let (dd, lc) = d.leading()?;
        let lc_inv = lc.inv()?;
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some((rd, rc)) = r.leading() {
            if rd < dd {
                break;
            }
            let c = rc.mul_ref(&lc_inv);
            let shift = rd - dd;
            for (e, v) in d.terms() {
                r.add_term(e + shift, &v.mul_ref(&c).neg_ref());
            }
            // guard against float round-off leaving a tiny leading term
            r.terms.remove(&rd);
            q.add_term(shift, &c);
        }
        Some((q, r))
    }

    pub fn make_monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
            None => Self::zero(),
        }
    }

    /// Monic gcd by the Euclidean algorithm (exact scalars).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.make_monic()
    }
}

impl Poly<AlgScalar> {
    pub fn from_int_terms(terms: &[(u32, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|(e, c)| (*e, AlgScalar::from_int(*c))))
    }
}

impl<S: Scalar> Ring for Poly<S> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(other);
        out
    }
    fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, &c.neg_ref());
        }
        out
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea + eb, &ca.mul_ref(cb));
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg_ref())).collect(),
        }
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(*e, c);
        }
    }
}

impl<'a, S: Scalar> Add<&'a Poly<S>> for &'a Poly<S> {
    type Output = Poly<S>;
    fn add(self, o: &Poly<S>) -> Poly<S> {
        self.add_ref(o)
    }
}

impl<'a, S: Scalar> Sub<&'a Poly<S>> for &'a Poly<S> {
    type Output = Poly<S>;
    fn sub(self, o: &Poly<S>) -> Poly<S> {
        self.sub_ref(o)
    }
}

impl<'a, S: Scalar> Mul<&'a Poly<S>> for &'a Poly<S> {
    type Output = Poly<S>;
    fn mul(self, o: &Poly<S>) -> Poly<S> {
        self.mul_ref(o)
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        self.neg_ref()
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{e}")?,
            }
        }
        Ok(())
    }
}

impl<S: fmt::Debug> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// JSON form: array of `[exponent, scalar]` pairs in increasing exponent.
impl<S: Scalar + Serialize> Serialize for Poly<S> {
    fn serialize<Se: serde::Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        s.collect_seq(self.terms.iter())
    }
}

impl<'de, S: Scalar + Deserialize<'de>> Deserialize<'de> for Poly<S> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs: Vec<(u32, S)> = Vec::deserialize(d)?;
        Ok(Poly::from_terms(pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Poly<AlgScalar>;

    #[test]
    fn derivative_of_cube() {
        let p = P::monomial(AlgScalar::one(), 3);
        assert_eq!(p.derivative(), P::monomial(AlgScalar::from_int(3), 2));
    }

    #[test]
    fn degree_and_order() {
        let p = P::from_int_terms(&[(2, 1), (5, -3)]);
        assert_eq!(p.degree(), Some(5));
        assert_eq!(p.ord0(), Some(2));
        assert_eq!(P::zero().degree(), None);
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = P::from_int_terms(&[(1, 2), (3, 1)]);
        let q = P::from_int_terms(&[(1, 2)]);
        assert_eq!((&p - &q).len(), 1);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn gcd_of_products() {
        let a = P::from_int_terms(&[(0, -1), (1, 1)]); // z - 1
        let b = P::from_int_terms(&[(0, 2), (1, 1)]); // z + 2
        let c = P::from_int_terms(&[(0, 3), (2, 1)]); // z² + 3
        let g = (&a * &b).gcd(&(&a * &c));
        assert_eq!(g, a);
        let g = P::monomial(AlgScalar::one(), 3).gcd(&P::from_int_terms(&[(2, 5), (4, 1)]));
        assert_eq!(g, P::monomial(AlgScalar::one(), 2));
    }

    #[test]
    fn evaluation_matches_termwise() {
        let p = P::from_int_terms(&[(0, 1), (2, -2), (7, 3)]);
        let z = Complex64::new(0.3, -1.1);
        let direct = Complex64::new(1.0, 0.0) - 2.0 * z * z + 3.0 * z.powu(7);
        assert!((p.eval(z) - direct).norm() < 1e-12);
        let q = P::monomial(AlgScalar::one(), 4);
        assert!((q.eval(z) - z.powu(4)).norm() < 1e-12);
    }

    #[test]
    fn reversal_and_scaling() {
        let p = P::from_int_terms(&[(0, 1), (2, 3)]);
        assert_eq!(p.reversed(4), P::from_int_terms(&[(4, 1), (2, 3)]));
        let two = AlgScalar::from_int(2);
        assert_eq!(p.substitute_scale(&two), P::from_int_terms(&[(0, 1), (2, 12)]));
    }

    #[test]
    fn json_pairs() {
        let p = P::from_int_terms(&[(3, 2)]);
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.starts_with("[[3,[\"2/1\""));
        let back: P = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
