use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::scalar::{Conjugate, Ring, Scalar};

/// Polynomial in the commuting variables `z` and `z̄`. Key `(a, b)` stands
/// for `z^a z̄^b`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly<S> {
    terms: BTreeMap<(u32, u32), S>,
}

impl<S: Scalar> BiPoly<S> {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(S::one(), 0, 0)
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: S, a: u32, b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        BiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), S)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in iter {
            p.add_term(k, &c);
        }
        p
    }

    pub fn add_term(&mut self, key: (u32, u32), c: &S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                v.add_assign_ref(c);
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    /// `p(z)` viewed as a function of `z` and `z̄`.
    pub fn holomorphic(p: &Poly<S>) -> Self {
        BiPoly {
            terms: p.terms().map(|(e, c)| ((e, 0), c.clone())).collect(),
        }
    }

    /// `conj(p(z))`, a polynomial in `z̄` alone.
    pub fn antiholomorphic(p: &Poly<S>) -> Self {
        BiPoly {
            terms: p.terms().map(|(e, c)| ((0, e), c.conj())).collect(),
        }
    }

    /// `p(z) · conj(q(z))`.
    pub fn outer(p: &Poly<S>, q: &Poly<S>) -> Self {
        let mut out = Self::zero();
        for (a, ca) in p.terms() {
            for (b, cb) in q.terms() {
                out.add_term((a, b), &ca.mul_ref(&cb.conj()));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ((u32, u32), &S)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, a: u32, b: u32) -> S {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(S::zero)
    }

    /// Term with the lexicographically largest exponent pair.
    pub fn leading(&self) -> Option<((u32, u32), &S)> {
        self.terms.iter().next_back().map(|(k, c)| (*k, c))
    }

    pub fn degree_z(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degree_zbar(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0 + k.1).max()
    }

    /// Largest `(a, b)` with `z^a z̄^b` dividing every term.
    pub fn monomial_content(&self) -> (u32, u32) {
        let a = self.terms.keys().map(|k| k.0).min().unwrap_or(0);
        let b = self.terms.keys().map(|k| k.1).min().unwrap_or(0);
        (a, b)
    }

    pub fn shift(&self, a: i64, b: i64) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    let na = k.0 as i64 + a;
                    let nb = k.1 as i64 + b;
                    assert!(na >= 0 && nb >= 0, "negative exponent after shift");
                    ((na as u32, nb as u32), c.clone())
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, v.mul_ref(c))))
    }

    pub fn d_z(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(k, _)| k.0 > 0)
                .map(|(k, c)| ((k.0 - 1, k.1), c.mul_ref(&S::from_i64(k.0 as i64)))),
        )
    }

    pub fn d_zbar(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(k, _)| k.1 > 0)
                .map(|(k, c)| ((k.0, k.1 - 1), c.mul_ref(&S::from_i64(k.1 as i64)))),
        )
    }

    /// True when the polynomial equals its own conjugate.
    pub fn is_real(&self) -> bool {
        self.terms
            .iter()
            .all(|((a, b), c)| self.coeff(*b, *a).sub_ref(&c.conj()).is_zero())
    }

    /// True when every term has `a == b`, i.e. the polynomial is a function
    /// of `|z|²` only.
    pub fn is_diagonal(&self) -> bool {
        self.terms.keys().all(|(a, b)| a == b)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let zb = z.conj();
        let mut acc = Complex64::new(0.0, 0.0);
        for ((a, b), c) in &self.terms {
            acc += c.to_c64() * z.powu(*a) * zb.powu(*b);
        }
        acc
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> BiPoly<T> {
        BiPoly::from_terms(self.terms.iter().map(|(k, v)| (*k, f(v))))
    }

    pub fn to_float(&self) -> BiPoly<Complex64> {
        self.map_coeffs(|c| c.to_c64())
    }

    /// Exact quotient `self / q` by lexicographic long division, or `None`
    /// when `q` does not divide `self`.
    pub fn exact_div(&self, q: &Self) -> Option<Self> {
        let (lk, lc) = q.leading()?;
        let lc_inv = lc.inv()?;
        let mut r = self.clone();
        let mut out = Self::zero();
        while let Some((rk, rc)) = r.leading() {
            if rk.0 < lk.0 || rk.1 < lk.1 {
                return None;
            }
            let c = rc.mul_ref(&lc_inv);
            let (sa, sb) = (rk.0 - lk.0, rk.1 - lk.1);
            for ((a, b), v) in q.terms.iter() {
                r.add_term((a + sa, b + sb), &v.mul_ref(&c).neg_ref());
            }
            r.terms.remove(&rk);
            out.add_term((sa, sb), &c);
        }
        Some(out)
    }
}

impl<S: Scalar> Conjugate for BiPoly<S> {
    fn conj(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|((a, b), c)| ((*b, *a), c.conj())).collect(),
        }
    }
}

impl<S: Scalar> Ring for BiPoly<S> {
    fn zero() -> Self {
        BiPoly::zero()
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
        for (k, c) in &other.terms {
            out.add_term(*k, &c.neg_ref());
        }
        out
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (Some(a1), Some(a2)) = (self.degree_z(), other.degree_z()) else {
            unreachable!()
        };
        let (b1, b2) = (self.degree_zbar().unwrap(), other.degree_zbar().unwrap());
        let width = (b1 + b2 + 1) as usize;
        let height = (a1 + a2 + 1) as usize;
        // dense accumulator; the products we form are small enough
        if width * height <= 1 << 20 {
            let mut acc: Vec<Option<S>> = vec![None; width * height];
            for ((ea, eb), ca) in &self.terms {
                for ((fa, fb), cb) in &other.terms {
                    let idx = (ea + fa) as usize * width + (eb + fb) as usize;
                    let p = ca.mul_ref(cb);
                    match &mut acc[idx] {
                        Some(v) => v.add_assign_ref(&p),
                        slot @ None => *slot = Some(p),
                    }
                }
            }
            let terms = acc
                .into_iter()
                .enumerate()
                .filter_map(|(idx, c)| {
                    c.filter(|c| !c.is_zero())
                        .map(|c| (((idx / width) as u32, (idx % width) as u32), c))
                })
                .collect();
            BiPoly { terms }
        } else {
            let mut out = Self::zero();
            for ((ea, eb), ca) in &self.terms {
                for ((fa, fb), cb) in &other.terms {
                    out.add_term((ea + fa, eb + fb), &ca.mul_ref(cb));
                }
            }
            out
        }
    }
    fn neg_ref(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg_ref())).collect(),
        }
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(*k, c);
        }
    }
}

impl<'a, S: Scalar> Add<&'a BiPoly<S>> for &'a BiPoly<S> {
    type Output = BiPoly<S>;
    fn add(self, o: &BiPoly<S>) -> BiPoly<S> {
        self.add_ref(o)
    }
}

impl<'a, S: Scalar> Sub<&'a BiPoly<S>> for &'a BiPoly<S> {
    type Output = BiPoly<S>;
    fn sub(self, o: &BiPoly<S>) -> BiPoly<S> {
        self.sub_ref(o)
    }
}

impl<'a, S: Scalar> Mul<&'a BiPoly<S>> for &'a BiPoly<S> {
    type Output = BiPoly<S>;
    fn mul(self, o: &BiPoly<S>) -> BiPoly<S> {
        self.mul_ref(o)
    }
}

impl<S: Scalar> Neg for &BiPoly<S> {
    type Output = BiPoly<S>;
    fn neg(self) -> BiPoly<S> {
        self.neg_ref()
    }
}

impl<S: fmt::Debug> fmt::Debug for BiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for BiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((a, b), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if *a > 0 {
                write!(f, "z^{a}")?;
            }
            if *b > 0 {
                write!(f, "z̄^{b}")?;
            }
        }
        Ok(())
    }
}

/// JSON form: array of `[[a, b], scalar]` pairs.
impl<S: Scalar + Serialize> Serialize for BiPoly<S> {
    fn serialize<Se: serde::Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        s.collect_seq(self.terms.iter())
    }
}

impl<'de, S: Scalar + Deserialize<'de>> Deserialize<'de> for BiPoly<S> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs: Vec<((u32, u32), S)> = Vec::deserialize(d)?;
        Ok(BiPoly::from_terms(pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgScalar;

    type B = BiPoly<AlgScalar>;

    fn m(c: i64, a: u32, b: u32) -> B {
        B::monomial(AlgScalar::from_int(c), a, b)
    }

    #[test]
    fn conj_swaps_exponents() {
        let p = B::monomial(AlgScalar::i(), 2, 1);
        assert_eq!(p.conj(), B::monomial(-AlgScalar::i(), 1, 2));
        assert_eq!(p.conj().conj(), p);
    }

    #[test]
    fn norm_squared_is_real() {
        let f = Poly::from_terms([(0, AlgScalar::i()), (3, AlgScalar::sqrt_int(2).unwrap())]);
        let n = B::outer(&f, &f);
        assert!(n.is_real());
        let z = Complex64::new(0.7, 0.2);
        let v = n.eval(z);
        assert!(v.im.abs() < 1e-12);
        assert!((v.re - f.eval(z).norm_sqr()).abs() < 1e-12);
    }

    #[test]
    fn derivatives() {
        let p = &m(3, 2, 1) + &m(1, 0, 4);
        assert_eq!(p.d_z(), m(6, 1, 1));
        assert_eq!(p.d_zbar(), &m(3, 2, 0) + &m(4, 0, 3));
    }

    #[test]
    fn product_and_exact_division() {
        let p = &m(1, 1, 0) + &m(2, 0, 1);
        let q = &m(1, 2, 2) + &m(-1, 0, 0);
        let pq = &p * &q;
        assert_eq!(pq.exact_div(&q).unwrap(), p);
        assert!(p.exact_div(&q).is_none());
    }

    #[test]
    fn content() {
        let p = &m(1, 3, 2) + &m(5, 1, 4);
        assert_eq!(p.monomial_content(), (1, 2));
        assert_eq!(p.shift(-1, -2), &m(1, 2, 0) + &m(5, 0, 2));
    }
}
