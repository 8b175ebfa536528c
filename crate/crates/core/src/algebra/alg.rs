//! The exact field `K = ℚ(i, √2, √3, √5)`.
//!
//! An element is stored as a sparse list of `(mask, rational)` terms. The
//! low three bits of a mask select the real radical `√2^a √3^b √5^c` and bit
//! three selects the factor `i`. Products of basis monomials are again basis
//! monomials up to an integer factor, so multiplication never leaves the
//! representation.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::scalar::{Conjugate, Ring, Scalar};
use crate::error::Error;

const BIT_SQRT2: u8 = 1;
const BIT_SQRT3: u8 = 2;
const BIT_SQRT5: u8 = 4;
const BIT_I: u8 = 8;
const PRIMES: [i64; 3] = [2, 3, 5];

/// Real radical masks in serialization order: 1, √2, √3, √5, √6, √10, √15, √30.
const REAL_ORDER: [u8; 8] = [0, 1, 2, 4, 3, 5, 6, 7];

const fn basis_product(a: u8, b: u8) -> (i64, u8) {
    let common = a & b & 7;
    let mut factor = 1i64;
    if common & BIT_SQRT2 != 0 {
        factor *= 2;
    }
    if common & BIT_SQRT3 != 0 {
        factor *= 3;
    }
    if common & BIT_SQRT5 != 0 {
        factor *= 5;
    }
    if a & b & BIT_I != 0 {
        factor = -factor;
    }
    (factor, a ^ b)
}

const fn product_table() -> [[(i64, u8); 16]; 16] {
    let mut t = [[(0i64, 0u8); 16]; 16];
    let mut a = 0;
    while a < 16 {
        let mut b = 0;
        while b < 16 {
            t[a][b] = basis_product(a as u8, b as u8);
            b += 1;
        }
        a += 1;
    }
    t
}

static PRODUCT: [[(i64, u8); 16]; 16] = product_table();

fn radical_value(mask: u8) -> f64 {
    let mut n = 1.0f64;
    for (bit, p) in PRIMES.iter().enumerate() {
        if mask & (1 << bit) != 0 {
            n *= *p as f64;
        }
    }
    n.sqrt()
}

fn radical_name(mask: u8) -> &'static str {
    ["", "√2", "√3", "√6", "√5", "√10", "√15", "√30"][(mask & 7) as usize]
}

/// Exact element of `ℚ(i, √2, √3, √5)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlgScalar {
    // sorted by mask, no zero coefficients
    terms: Vec<(u8, BigRational)>,
}

impl AlgScalar {
    pub fn zero() -> Self {
        AlgScalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn i() -> Self {
        Self::basis(BIT_I, BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::basis(0, q)
    }

    fn basis(mask: u8, q: BigRational) -> Self {
        if q.is_zero() {
            Self::zero()
        } else {
            AlgScalar { terms: vec![(mask, q)] }
        }
    }

    /// `√n` for an integer whose square-free part divides 30; negative `n`
    /// gives `i√|n|`. Returns `None` when the root is not in the field.
    pub fn sqrt_int(n: i64) -> Option<Self> {
        if n == 0 {
            return Some(Self::zero());
        }
        let mut rest = n.unsigned_abs();
        let mut outside = 1u64;
        let mut mask = if n < 0 { BIT_I } else { 0 };
        for (bit, &p) in PRIMES.iter().enumerate() {
            let p = p as u64;
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            outside *= p.pow(e / 2);
            if e % 2 == 1 {
                mask |= 1 << bit;
            }
        }
        let r = (rest as f64).sqrt().round() as u64;
        if r * r != rest {
            return None;
        }
        outside *= r;
        Some(Self::basis(mask, BigRational::from_integer(BigInt::from(outside))))
    }

    /// `q·√n` with `q = num/den`; panics when `√n` is outside the field.
    pub fn ratio_sqrt(num: i64, den: i64, n: i64) -> Self {
        let root = Self::sqrt_int(n).unwrap_or_else(|| panic!("√{n} is not in the field"));
        Self::from_ratio(num, den) * root
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|(m, _)| m & BIT_I == 0)
    }

    /// The rational value if the element lies in `ℚ`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(0, q)] => Some(q.clone()),
            _ => None,
        }
    }

    /// `Some((q, mask))` when the element is a single rational multiple of a
    /// basis monomial.
    pub fn as_monomial(&self) -> Option<(BigRational, u8)> {
        match self.terms.as_slice() {
            [(m, q)] => Some((q.clone(), *m)),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u8, &BigRational)> {
        self.terms.iter().map(|(m, q)| (*m, q))
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        AlgScalar {
            terms: self.terms.iter().map(|(m, c)| (*m, c * q)).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        self.flip(BIT_I)
    }

    /// Field automorphism negating the generators whose bits are in `bits`.
    fn flip(&self, bits: u8) -> Self {
        AlgScalar {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    if (m & bits).count_ones() % 2 == 1 {
                        (*m, -c)
                    } else {
                        (*m, c.clone())
                    }
                })
                .collect(),
        }
    }

    pub fn re(&self) -> Self {
        AlgScalar {
            terms: self.terms.iter().filter(|(m, _)| m & BIT_I == 0).cloned().collect(),
        }
    }

    /// Imaginary part, as a real element.
    pub fn im(&self) -> Self {
        AlgScalar {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m & BIT_I != 0)
                .map(|(m, c)| (m ^ BIT_I, c.clone()))
                .collect(),
        }
    }

    /// `|x|²` as an exact element.
    pub fn norm_sqr(&self) -> Self {
        self * &self.conj()
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some((q, m)) = self.as_monomial() {
            // b·b = ±n for a basis monomial b, so b⁻¹ = ±b/n
            let (f, _) = PRODUCT[m as usize][m as usize];
            let denom = q * BigRational::from_integer(BigInt::from(f));
            return Ok(Self::basis(m, denom.recip()));
        }
        // Multiply by conjugates until the product is rational.
        let mut y = self.clone();
        let mut acc = Self::one();
        for bit in [BIT_I, BIT_SQRT2, BIT_SQRT3, BIT_SQRT5] {
            let c = y.flip(bit);
            y = &y * &c;
            acc = &acc * &c;
        }
        let q = y
            .as_rational()
            .expect("norm of a nonzero element is a nonzero rational");
        Ok(acc.scale_rational(&q.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    pub fn to_c64(&self) -> Complex64 {
        let mut re = 0.0;
        let mut im = 0.0;
        for (m, q) in &self.terms {
            let v = q.to_f64().unwrap_or(f64::NAN) * radical_value(*m);
            if m & BIT_I != 0 {
                im += v;
            } else {
                re += v;
            }
        }
        Complex64::new(re, im)
    }

    /// The 16 rational coordinates in the fixed order
    /// `{1,√2,√3,√5,√6,√10,√15,√30} ⊗ {1,i}`.
    pub fn coords(&self) -> [BigRational; 16] {
        let mut out: [BigRational; 16] = std::array::from_fn(|_| BigRational::zero());
        for (m, q) in &self.terms {
            out[Self::coord_index(*m)] = q.clone();
        }
        out
    }

    pub fn from_coords(coords: &[BigRational; 16]) -> Self {
        let mut terms: Vec<(u8, BigRational)> = coords
            .iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .map(|(k, q)| (Self::coord_mask(k), q.clone()))
            .collect();
        terms.sort_by_key(|(m, _)| *m);
        AlgScalar { terms }
    }

    fn coord_index(mask: u8) -> usize {
        let pos = REAL_ORDER.iter().position(|&r| r == mask & 7).unwrap();
        2 * pos + usize::from(mask & BIT_I != 0)
    }

    fn coord_mask(index: usize) -> u8 {
        REAL_ORDER[index / 2] | if index % 2 == 1 { BIT_I } else { 0 }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (m, q) = b.next().unwrap();
                    out.push((*m, if negate { -q } else { q.clone() }));
                }
                (Some((ma, _)), Some((mb, _))) => match ma.cmp(mb) {
                    Ordering::Less => out.push(a.next().unwrap().clone()),
                    Ordering::Greater => {
                        let (m, q) = b.next().unwrap();
                        out.push((*m, if negate { -q } else { q.clone() }));
                    }
                    Ordering::Equal => {
                        let (m, qa) = a.next().unwrap();
                        let (_, qb) = b.next().unwrap();
                        let s = if negate { qa - qb } else { qa + qb };
                        if !s.is_zero() {
                            out.push((*m, s));
                        }
                    }
                },
            }
        }
        AlgScalar { terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut acc: [Option<BigRational>; 16] = Default::default();
        for (ma, qa) in &self.terms {
            for (mb, qb) in &other.terms {
                let (f, m) = PRODUCT[*ma as usize][*mb as usize];
                let mut p = qa * qb;
                if f != 1 {
                    p *= BigRational::from_integer(BigInt::from(f));
                }
                let slot = &mut acc[m as usize];
                *slot = Some(match slot.take() {
                    None => p,
                    Some(x) => x + p,
                });
            }
        }
        AlgScalar {
            terms: acc
                .into_iter()
                .enumerate()
                .filter_map(|(m, q)| q.filter(|q| !q.is_zero()).map(|q| (m as u8, q)))
                .collect(),
        }
    }
}

fn fmt_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

impl fmt::Display for AlgScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut sorted: Vec<_> = self.terms.iter().collect();
        sorted.sort_by_key(|(m, _)| Self::coord_index(*m));
        for (k, (m, q)) in sorted.into_iter().enumerate() {
            let neg = q.is_negative();
            if k > 0 {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = q.abs();
            let unit = *m == 0;
            if !(a.is_one() && !unit) {
                if a.is_integer() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "({}/{})", a.numer(), a.denom())?;
                }
            }
            if m & BIT_I != 0 {
                write!(f, "i")?;
            }
            write!(f, "{}", radical_name(*m))?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlgScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgScalar({self})")
    }
}

impl Serialize for AlgScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let coords = self.coords();
        let mut seq = serializer.serialize_seq(Some(16))?;
        for q in &coords {
            seq.serialize_element(&fmt_rational(q))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for AlgScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CoordsVisitor;
        impl<'de> Visitor<'de> for CoordsVisitor {
            type Value = AlgScalar;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an array of 16 rational strings")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<AlgScalar, A::Error> {
                let mut coords: [BigRational; 16] = std::array::from_fn(|_| BigRational::zero());
                for (k, slot) in coords.iter_mut().enumerate() {
                    let s: String = seq
                        .next_element()?
                        .ok_or_else(|| de::Error::invalid_length(k, &self))?;
                    *slot = parse_rational(&s).map_err(de::Error::custom)?;
                }
                if seq.next_element::<String>()?.is_some() {
                    return Err(de::Error::invalid_length(17, &self));
                }
                Ok(AlgScalar::from_coords(&coords))
            }
        }
        deserializer.deserialize_seq(CoordsVisitor)
    }
}

impl<'a> Add<&'a AlgScalar> for &'a AlgScalar {
    type Output = AlgScalar;
    fn add(self, o: &AlgScalar) -> AlgScalar {
        self.merge(o, false)
    }
}

impl<'a> Sub<&'a AlgScalar> for &'a AlgScalar {
    type Output = AlgScalar;
    fn sub(self, o: &AlgScalar) -> AlgScalar {
        self.merge(o, true)
    }
}

impl<'a> Mul<&'a AlgScalar> for &'a AlgScalar {
    type Output = AlgScalar;
    fn mul(self, o: &AlgScalar) -> AlgScalar {
        self.product(o)
    }
}

impl Neg for &AlgScalar {
    type Output = AlgScalar;
    fn neg(self) -> AlgScalar {
        AlgScalar {
            terms: self.terms.iter().map(|(m, q)| (*m, -q)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for AlgScalar {
            type Output = AlgScalar;
            fn $f(self, o: AlgScalar) -> AlgScalar {
                (&self).$f(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for AlgScalar {
    type Output = AlgScalar;
    fn neg(self) -> AlgScalar {
        -&self
    }
}

/// Panics on division by zero; use [`AlgScalar::checked_div`] for a
/// recoverable error.
impl Div for AlgScalar {
    type Output = AlgScalar;
    fn div(self, o: AlgScalar) -> AlgScalar {
        self.checked_div(&o).expect("division by zero")
    }
}

impl From<i64> for AlgScalar {
    fn from(n: i64) -> Self {
        AlgScalar::from_int(n)
    }
}

impl Ring for AlgScalar {
    fn zero() -> Self {
        AlgScalar::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.merge(other, false)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.merge(other, true)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.product(other)
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Conjugate for AlgScalar {
    fn conj(&self) -> Self {
        AlgScalar::conj(self)
    }
}

impl Scalar for AlgScalar {
    const EXACT: bool = true;

    fn one() -> Self {
        AlgScalar::one()
    }
    fn from_i64(n: i64) -> Self {
        AlgScalar::from_int(n)
    }
    fn imag_unit() -> Self {
        AlgScalar::i()
    }
    fn inv(&self) -> Option<Self> {
        AlgScalar::inv(self).ok()
    }
    fn to_c64(&self) -> Complex64 {
        AlgScalar::to_c64(self)
    }
    fn from_alg(x: &AlgScalar) -> Self {
        x.clone()
    }
    fn is_negligible(&self, _tol: f64) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> AlgScalar {
        AlgScalar::sqrt_int(n).unwrap()
    }

    #[test]
    fn radical_closure() {
        assert_eq!(&s(2) * &s(3), s(6));
        assert_eq!(&s(6) * &s(10), AlgScalar::from_int(2) * s(15));
        assert_eq!(&s(30) * &s(30), AlgScalar::from_int(30));
        assert_eq!(s(-1), AlgScalar::i());
    }

    #[test]
    fn gaussian_product() {
        let a = AlgScalar::one() + AlgScalar::i();
        let b = AlgScalar::one() - AlgScalar::i();
        assert_eq!(a * b, AlgScalar::from_int(2));
    }

    #[test]
    fn conjugation_negates_i_only() {
        let x = AlgScalar::i() * s(30) * AlgScalar::from_ratio(1, 2);
        assert_eq!(x.conj(), -x.clone());
        assert_eq!(s(15).conj(), s(15));
    }

    #[test]
    fn inverse_of_dense_element() {
        let x = AlgScalar::from_int(1) + s(2) + s(3) * AlgScalar::i() + s(5) + AlgScalar::from_ratio(2, 7) * s(30);
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, AlgScalar::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(AlgScalar::zero().inv(), Err(Error::DivisionByZero)));
        assert!(AlgScalar::one().checked_div(&AlgScalar::zero()).is_err());
    }

    #[test]
    fn sqrt_of_integers() {
        assert_eq!(AlgScalar::sqrt_int(90).unwrap(), AlgScalar::from_int(3) * s(10));
        assert_eq!(AlgScalar::sqrt_int(49).unwrap(), AlgScalar::from_int(7));
        assert!(AlgScalar::sqrt_int(7).is_none());
        assert!(AlgScalar::sqrt_int(14).is_none());
    }

    #[test]
    fn coordinate_order() {
        let x = s(30) * AlgScalar::i();
        let c = x.coords();
        assert!(c[15].is_one());
        assert_eq!(c.iter().filter(|q| !q.is_zero()).count(), 1);
        assert!(s(6).coords()[8].is_one());
        assert_eq!(AlgScalar::from_coords(&c), x);
    }

    #[test]
    fn serde_round_trip() {
        let x = AlgScalar::from_ratio(-3, 4) * s(10) + AlgScalar::i();
        let json = serde_json::to_string(&x).unwrap();
        assert!(json.starts_with("[\"0/1\",\"1/1\","));
        let back: AlgScalar = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn display() {
        let x = AlgScalar::from_ratio(1, 2) * s(30) * AlgScalar::i() - AlgScalar::from_int(3);
        assert_eq!(x.to_string(), "-3 + (1/2)i√30");
    }

    #[test]
    fn float_value() {
        let x = AlgScalar::from_int(3) * s(5) + AlgScalar::i() * s(2);
        let v = x.to_c64();
        assert!((v.re - 3.0 * 5f64.sqrt()).abs() < 1e-14);
        assert!((v.im - 2f64.sqrt()).abs() < 1e-14);
    }
}
