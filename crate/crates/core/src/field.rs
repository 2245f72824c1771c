//! Exact scalar fields: the rationals, prime fields F_p and extensions F_{p^m}.
//!
//! A [`Field`] is a cheap handle; [`Scalar`] values carry no field reference and
//! are always combined through the field that owns them. [`Elem`] pairs the two
//! for call sites that want mismatches reported as errors.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    Prime {
        p: u64,
    },
    /// `modulus` holds the coefficients c_0..c_m of a monic irreducible
    /// polynomial of degree m (so `modulus[m] == 1`).
    Extension {
        p: u64,
        degree: usize,
        modulus: Vec<u64>,
    },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Field(Arc<FieldKind>);

/// Canonical-form field element.
///
/// Rationals are reduced with positive denominator, residues lie in `[0, p)`,
/// extension elements are coefficient vectors of length m (constant term first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rational(BigRational),
    Residue(u64),
    Ext(Vec<u64>),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn invmod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    Some(s0.rem_euclid(p as i128) as u64)
}

/// Dense univariate polynomials over F_p, constant term first, no trailing zeros.
pub(crate) mod upoly {
    use super::{addmod, invmod, mulmod, submod};

    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| submod(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0), p))
            .collect();
        trim(out)
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = addmod(out[i + j], mulmod(x, y, p), p);
            }
        }
        trim(out)
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let b = trim(b.to_vec());
        assert!(!b.is_empty(), "division by the zero polynomial");
        let mut r = trim(a.to_vec());
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let lead_inv = invmod(*b.last().unwrap(), p).expect("nonzero leading coefficient");
        let mut q = vec![0u64; r.len() - b.len() + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let c = mulmod(*r.last().unwrap(), lead_inv, p);
            q[shift] = c;
            for (j, &bj) in b.iter().enumerate() {
                r[shift + j] = submod(r[shift + j], mulmod(c, bj, p), p);
            }
            r = trim(r);
        }
        (trim(q), r)
    }

    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        divrem(a, b, p).1
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        x
    }

    /// Returns `s` with `s * a == 1 (mod m)` when gcd(a, m) = 1.
    pub fn inverse_mod(a: &[u64], m: &[u64], p: u64) -> Option<Vec<u64>> {
        let (mut r0, mut r1) = (trim(m.to_vec()), trim(a.to_vec()));
        let (mut s0, mut s1): (Vec<u64>, Vec<u64>) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1, p);
            let s2 = sub(&s0, &mul(&q, &s1, p), p);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        if r0.len() != 1 {
            return None;
        }
        let c = invmod(r0[0], p)?;
        Some(trim(s0.iter().map(|&x| mulmod(x, c, p)).collect()))
    }

    /// `base^(p^k) mod m`, by k successive p-th powers.
    pub fn frobenius_power(base: &[u64], k: usize, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = rem(base, m, p);
        for _ in 0..k {
            acc = pow_rem(&acc, p, m, p);
        }
        acc
    }

    pub fn pow_rem(base: &[u64], mut exp: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = rem(&[1], m, p);
        let mut b = rem(base, m, p);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = rem(&mul(&acc, &b, p), m, p);
            }
            b = rem(&mul(&b, &b, p), m, p);
            exp >>= 1;
        }
        acc
    }

    /// Rabin's test: f monic of degree m is irreducible iff x^(p^m) = x mod f and
    /// gcd(x^(p^(m/q)) - x, f) = 1 for every prime q dividing m.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let f = trim(f.to_vec());
        if f.len() < 2 {
            return false;
        }
        let m = f.len() - 1;
        if m == 1 {
            return true;
        }
        let x = vec![0, 1];
        let x_mod = rem(&x, &f, p);
        if frobenius_power(&x, m, &f, p) != x_mod {
            return false;
        }
        super::prime_factors(m).into_iter().all(|q| {
            let h = frobenius_power(&x, m / q, &f, p);
            gcd(&sub(&h, &x_mod, p), &f, p).len() == 1
        })
    }
}

impl Field {
    pub fn rationals() -> Self {
        Field(Arc::new(FieldKind::Rationals))
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 32 {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field(Arc::new(FieldKind::Prime { p })))
    }

    /// F_{p^m} with the first monic irreducible of degree m in the scan order
    /// that reads the coefficient vector (c_0, .., c_{m-1}) as the base-p
    /// number sum c_i p^i. Degree 1 returns the prime field itself.
    pub fn extension(p: u64, m: usize) -> Result<Self> {
        let base = Field::prime(p)?;
        if m == 0 {
            return Err(Error::InvalidDegree);
        }
        if m == 1 {
            return Ok(base);
        }
        let total = (p as u128).checked_pow(m as u32).ok_or(Error::InvalidDegree)?;
        for idx in 0..total {
            let mut coeffs = Vec::with_capacity(m + 1);
            let mut rest = idx;
            for _ in 0..m {
                coeffs.push((rest % p as u128) as u64);
                rest /= p as u128;
            }
            coeffs.push(1);
            if coeffs[0] != 0 && upoly::is_irreducible(&coeffs, p) {
                return Ok(Field(Arc::new(FieldKind::Extension {
                    p,
                    degree: m,
                    modulus: coeffs,
                })));
            }
        }
        unreachable!("an irreducible polynomial of every degree exists over F_p")
    }

    /// Extension field with an explicitly supplied monic modulus (constant term first).
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        Field::prime(p)?;
        let modulus = upoly::trim(modulus.into_iter().map(|c| c % p).collect());
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidDegree);
        }
        if !upoly::is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus(p));
        }
        let degree = modulus.len() - 1;
        if degree == 1 {
            return Field::prime(p);
        }
        Ok(Field(Arc::new(FieldKind::Extension { p, degree, modulus })))
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match *self.0 {
            FieldKind::Rationals => 0,
            FieldKind::Prime { p } | FieldKind::Extension { p, .. } => p,
        }
    }

    /// Degree over the prime field; `None` for the rationals.
    pub fn degree(&self) -> Option<usize> {
        match &*self.0 {
            FieldKind::Rationals => None,
            FieldKind::Prime { .. } => Some(1),
            FieldKind::Extension { degree, .. } => Some(*degree),
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(*self.0, FieldKind::Rationals)
    }

    /// Number of elements, when finite and representable.
    pub fn order(&self) -> Option<u128> {
        let p = self.characteristic() as u128;
        let m = self.degree()? as u32;
        p.checked_pow(m)
    }

    pub fn modulus(&self) -> Option<&[u64]> {
        match &*self.0 {
            FieldKind::Extension { modulus, .. } => Some(modulus),
            _ => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match &*self.0 {
            FieldKind::Rationals => Scalar::Rational(BigRational::zero()),
            FieldKind::Prime { .. } => Scalar::Residue(0),
            FieldKind::Extension { degree, .. } => Scalar::Ext(vec![0; *degree]),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match &*self.0 {
            FieldKind::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldKind::Prime { p } => Scalar::Residue(reduce_bigint(n, *p)),
            FieldKind::Extension { p, degree, .. } => {
                let mut v = vec![0; *degree];
                v[0] = reduce_bigint(n, *p);
                Scalar::Ext(v)
            }
        }
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        if let FieldKind::Rationals = &*self.0 {
            return Ok(Scalar::Rational(q.clone()));
        }
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        self.div(&num, &den)
    }

    /// The class of the polynomial variable in F_p[a]/(modulus); `None` unless an extension.
    pub fn generator(&self) -> Option<Scalar> {
        match &*self.0 {
            FieldKind::Extension { degree, .. } => {
                let mut v = vec![0; *degree];
                v[1] = 1;
                Some(Scalar::Ext(v))
            }
            _ => None,
        }
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        match (&*self.0, x) {
            (FieldKind::Rationals, Scalar::Rational(_)) => true,
            (FieldKind::Prime { p }, Scalar::Residue(r)) => r < p,
            (FieldKind::Extension { p, degree, .. }, Scalar::Ext(v)) => v.len() == *degree && v.iter().all(|c| c < p),
            _ => false,
        }
    }

    pub fn is_zero(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue(r) => *r == 0,
            Scalar::Ext(v) => v.iter().all(|&c| c == 0),
        }
    }

    pub fn is_one(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue(r) => *r == 1,
            Scalar::Ext(v) => v[0] == 1 && v[1..].iter().all(|&c| c == 0),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&*self.0, a, b) {
            (FieldKind::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (FieldKind::Prime { p }, Scalar::Residue(x), Scalar::Residue(y)) => Scalar::Residue(addmod(*x, *y, *p)),
            (FieldKind::Extension { p, .. }, Scalar::Ext(x), Scalar::Ext(y)) => {
                Scalar::Ext(x.iter().zip(y).map(|(&u, &v)| addmod(u, v, *p)).collect())
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (&*self.0, a) {
            (FieldKind::Rationals, Scalar::Rational(x)) => Scalar::Rational(-x),
            (FieldKind::Prime { p }, Scalar::Residue(x)) => Scalar::Residue(submod(0, *x, *p)),
            (FieldKind::Extension { p, .. }, Scalar::Ext(x)) => {
                Scalar::Ext(x.iter().map(|&u| submod(0, u, *p)).collect())
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&*self.0, a, b) {
            (FieldKind::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (FieldKind::Prime { p }, Scalar::Residue(x), Scalar::Residue(y)) => Scalar::Residue(mulmod(*x, *y, *p)),
            (FieldKind::Extension { p, degree, modulus, .. }, Scalar::Ext(x), Scalar::Ext(y)) => {
                let prod = upoly::mul(&upoly::trim(x.clone()), &upoly::trim(y.clone()), *p);
                let r = upoly::rem(&prod, modulus, *p);
                Scalar::Ext(pad(r, *degree))
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match (&*self.0, a) {
            (FieldKind::Rationals, Scalar::Rational(x)) => Scalar::Rational(x.recip()),
            (FieldKind::Prime { p }, Scalar::Residue(x)) => Scalar::Residue(invmod(*x, *p).expect("nonzero residue")),
            (FieldKind::Extension { p, degree, modulus, .. }, Scalar::Ext(x)) => {
                let s = upoly::inverse_mod(x, modulus, *p)
                    .expect("modulus is irreducible, so every nonzero class is a unit");
                Scalar::Ext(pad(s, *degree))
            }
            _ => return Err(Error::NotInField(self.to_string())),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, mut exp: u64) -> Scalar {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// x -> x^p. The identity on prime fields; undefined over the rationals.
    pub fn frobenius(&self, a: &Scalar) -> Result<Scalar> {
        match &*self.0 {
            FieldKind::Rationals => Err(Error::NotFinite),
            FieldKind::Prime { .. } => Ok(a.clone()),
            FieldKind::Extension { p, .. } => Ok(self.pow(a, *p)),
        }
    }

    /// Re-expresses an element of `src` in `self`. Only the identity and the
    /// inclusion F_p -> F_{p^m} are supported.
    pub fn embed(&self, src: &Field, x: &Scalar) -> Result<Scalar> {
        if src == self {
            return Ok(x.clone());
        }
        match (&*src.0, &*self.0, x) {
            (FieldKind::Prime { p: q }, FieldKind::Extension { p, degree, .. }, Scalar::Residue(r)) if p == q => {
                let mut v = vec![0; *degree];
                v[0] = *r;
                Ok(Scalar::Ext(v))
            }
            _ => Err(Error::FieldMismatch(src.to_string(), self.to_string())),
        }
    }

    /// Bijection `[0, order) -> field` reading the index in base p, constant
    /// coefficient least significant.
    pub fn element_from_index(&self, idx: u128) -> Scalar {
        match &*self.0 {
            FieldKind::Rationals => panic!("the rationals are not enumerable by index"),
            FieldKind::Prime { p } => Scalar::Residue((idx % *p as u128) as u64),
            FieldKind::Extension { p, degree, .. } => {
                let mut rest = idx;
                let v = (0..*degree)
                    .map(|_| {
                        let c = (rest % *p as u128) as u64;
                        rest /= *p as u128;
                        c
                    })
                    .collect();
                Scalar::Ext(v)
            }
        }
    }

    pub fn index_of(&self, x: &Scalar) -> u128 {
        let p = self.characteristic() as u128;
        match x {
            Scalar::Residue(r) => *r as u128,
            Scalar::Ext(v) => v.iter().rev().fold(0u128, |acc, &c| acc * p + c as u128),
            Scalar::Rational(_) => panic!("the rationals are not enumerable by index"),
        }
    }

    /// Interprets a residue of the prime field as an integer in `[0, p)`.
    pub fn as_residue(&self, x: &Scalar) -> Option<u64> {
        match x {
            Scalar::Residue(r) => Some(*r),
            Scalar::Ext(v) if v[1..].iter().all(|&c| c == 0) => Some(v[0]),
            _ => None,
        }
    }

    pub fn display_scalar(&self, x: &Scalar) -> String {
        x.to_string()
    }
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

fn pad(mut v: Vec<u64>, len: usize) -> Vec<u64> {
    v.resize(len, 0);
    v
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Prime { p } => write!(f, "F_{p}"),
            FieldKind::Extension { p, modulus, .. } => {
                let m = Scalar::Ext(modulus.clone());
                write!(f, "F_{p}[a]/({m})")
            }
        }
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({self})")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue(r) => write!(f, "{r}"),
            Scalar::Ext(v) => {
                let mut parts = Vec::new();
                for (i, &c) in v.iter().enumerate().rev() {
                    if c == 0 {
                        continue;
                    }
                    parts.push(match (i, c) {
                        (0, c) => c.to_string(),
                        (1, 1) => "a".to_string(),
                        (1, c) => format!("{c}*a"),
                        (i, 1) => format!("a^{i}"),
                        (i, c) => format!("{c}*a^{i}"),
                    });
                }
                if parts.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", parts.join(" + "))
                }
            }
        }
    }
}

impl Scalar {
    /// Signed integer value for a rational that happens to be integral.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Rational(q) if q.is_integer() => Some(q.to_integer()),
            _ => None,
        }
    }

    pub fn is_negative_rational(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }
}

/// A scalar bundled with its field; arithmetic reports mismatched operands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elem {
    field: Field,
    value: Scalar,
}

impl Elem {
    pub fn new(field: &Field, value: Scalar) -> Result<Self> {
        if !field.contains(&value) {
            return Err(Error::NotInField(field.to_string()));
        }
        Ok(Elem {
            field: field.clone(),
            value,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> &Scalar {
        &self.value
    }

    fn same_field(&self, other: &Elem) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Elem) -> Result<Elem> {
        self.same_field(other)?;
        Ok(Elem {
            field: self.field.clone(),
            value: self.field.add(&self.value, &other.value),
        })
    }

    pub fn mul(&self, other: &Elem) -> Result<Elem> {
        self.same_field(other)?;
        Ok(Elem {
            field: self.field.clone(),
            value: self.field.mul(&self.value, &other.value),
        })
    }

    pub fn neg(&self) -> Elem {
        Elem {
            field: self.field.clone(),
            value: self.field.neg(&self.value),
        }
    }

    pub fn inv(&self) -> Result<Elem> {
        Ok(Elem {
            field: self.field.clone(),
            value: self.field.inv(&self.value)?,
        })
    }

    pub fn frobenius(&self) -> Result<Elem> {
        Ok(Elem {
            field: self.field.clone(),
            value: self.field.frobenius(&self.value)?,
        })
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Scalar {
        Scalar::Rational(BigRational::new(n.into(), d.into()))
    }

    /// Brute-force irreducibility for small degree: no roots (deg <= 3).
    fn has_root(coeffs: &[u64], p: u64) -> bool {
        (0..p).any(|x| coeffs.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p) == 0)
    }

    #[test]
    fn degree_one_extension_is_prime_field() {
        assert_eq!(Field::extension(2, 1).unwrap(), Field::prime(2).unwrap());
    }

    #[test]
    fn extension_moduli_match_exhaustive_scan() {
        // Oracle: scan monic quadratics/cubics by numeric index, root test.
        for (p, m) in [(3u64, 2usize), (2, 3), (5, 2), (7, 3)] {
            let mut expected = None;
            for idx in 0..p.pow(m as u32) {
                let mut c: Vec<u64> = (0..m).map(|i| (idx / p.pow(i as u32)) % p).collect();
                c.push(1);
                if !has_root(&c, p) {
                    expected = Some(c);
                    break;
                }
            }
            let f = Field::extension(p, m).unwrap();
            assert_eq!(f.modulus().unwrap(), expected.unwrap().as_slice(), "p={p} m={m}");
        }
        assert_eq!(Field::extension(3, 2).unwrap().modulus().unwrap(), &[1, 0, 1]);
        assert_eq!(Field::extension(2, 3).unwrap().modulus().unwrap(), &[1, 1, 0, 1]);
    }

    #[test]
    fn extension_is_deterministic() {
        for _ in 0..3 {
            assert_eq!(Field::extension(5, 4).unwrap(), Field::extension(5, 4).unwrap());
        }
    }

    #[test]
    fn rabin_rejects_products_of_irreducibles() {
        // (x^2+1)(x^2+x+2) over F_3 has no roots but is reducible.
        let f = upoly::mul(&[1, 0, 1], &[2, 1, 1], 3);
        assert!(!has_root(&f, 3));
        assert!(!upoly::is_irreducible(&f, 3));
        assert!(Field::with_modulus(3, f).is_err());
    }

    #[test]
    fn frobenius_examples() {
        let f9 = Field::extension(3, 2).unwrap();
        let t = f9.generator().unwrap();
        assert_eq!(f9.frobenius(&f9.one()).unwrap(), f9.one());
        assert_eq!(f9.frobenius(&t).unwrap(), Scalar::Ext(vec![0, 2]));
        let f7 = Field::prime(7).unwrap();
        for r in 0..7 {
            assert_eq!(f7.frobenius(&Scalar::Residue(r)).unwrap(), Scalar::Residue(r));
        }
        assert_eq!(Field::rationals().frobenius(&rat(1, 2)), Err(Error::NotFinite));
    }

    #[test]
    fn arithmetic_examples() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.inv(&Scalar::Residue(2)).unwrap(), Scalar::Residue(3));
        let q = Field::rationals();
        assert_eq!(q.add(&rat(1, 2), &rat(1, 3)), rat(5, 6));
        let f9 = Field::extension(3, 2).unwrap();
        let t = f9.generator().unwrap();
        assert_eq!(f9.inv(&t).unwrap(), Scalar::Ext(vec![0, 2]));
        assert_eq!(f5.inv(&f5.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = Elem::new(&Field::prime(5).unwrap(), Scalar::Residue(1)).unwrap();
        let b = Elem::new(&Field::prime(7).unwrap(), Scalar::Residue(1)).unwrap();
        assert!(matches!(a.add(&b), Err(Error::FieldMismatch(..))));
        assert!(Elem::new(&Field::prime(5).unwrap(), Scalar::Residue(5)).is_err());
    }

    #[test]
    fn index_round_trip() {
        let f = Field::extension(3, 3).unwrap();
        for i in 0..27 {
            assert_eq!(f.index_of(&f.element_from_index(i)), i);
        }
    }

    #[test]
    fn prime_validation() {
        assert_eq!(Field::prime(9), Err(Error::NotPrime(9)));
        assert_eq!(Field::prime(1), Err(Error::NotPrime(1)));
        assert!(Field::prime(101).is_ok());
    }
}
