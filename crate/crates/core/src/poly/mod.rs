//! Sparse multivariate polynomials over an exact [`Field`].
//!
//! Terms are kept sorted strictly decreasing in the ring's monomial order and
//! never store a zero coefficient.

mod monomial;
mod parse;
mod weights;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

pub use monomial::{Monomial, MonomialOrder};
pub use weights::{Homogeneity, WeightVector};

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    field: Field,
    nvars: usize,
    order: MonomialOrder,
}

/// Polynomial ring k[x0..x{n-1}] with an active monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring(Arc<RingData>);

impl Ring {
    pub fn new(field: Field, nvars: usize, order: MonomialOrder) -> Self {
        Ring(Arc::new(RingData { field, nvars, order }))
    }

    pub fn grevlex(field: Field, nvars: usize) -> Self {
        Ring::new(field, nvars, MonomialOrder::GrevLex)
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn nvars(&self) -> usize {
        self.0.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        if order == self.order() {
            return self.clone();
        }
        Ring::new(self.field().clone(), self.nvars(), order)
    }

    pub fn with_field(&self, field: Field) -> Ring {
        Ring::new(field, self.nvars(), self.order())
    }

    pub fn with_nvars(&self, nvars: usize) -> Ring {
        Ring::new(self.field().clone(), nvars, self.order())
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order().cmp(a, b)
    }

    pub fn zero(&self) -> Poly {
        Poly {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Poly {
        self.constant(self.field().one())
    }

    pub fn constant(&self, c: Scalar) -> Poly {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn var(&self, i: usize) -> Poly {
        assert!(i < self.nvars(), "variable index out of range");
        self.term(Monomial::var(self.nvars(), i), self.field().one())
    }

    pub fn term(&self, m: Monomial, c: Scalar) -> Poly {
        debug_assert_eq!(m.arity(), self.nvars());
        if self.field().is_zero(&c) {
            return self.zero();
        }
        Poly {
            ring: self.clone(),
            terms: vec![(m, c)],
        }
    }

    pub fn monomial(&self, m: Monomial) -> Poly {
        self.term(m, self.field().one())
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, Scalar)>) -> Poly {
        let field = self.field();
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !field.is_zero(c));
        Poly {
            ring: self.clone(),
            terms: out,
        }
    }

    pub fn parse(&self, text: &str) -> Result<Poly> {
        parse::parse(self, text)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: Ring,
    terms: Vec<(Monomial, Scalar)>,
}

impl Poly {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Everything but the leading term.
    pub fn tail(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    pub fn constant_term(&self) -> Scalar {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.field().zero(),
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Variables occurring in some term.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exp(i) > 0))
            .collect()
    }

    fn check_same(&self, other: &Poly) -> Result<()> {
        if self.nvars() != other.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.nvars(),
                found: other.nvars(),
            });
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(
                self.field().to_string(),
                other.field().to_string(),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let other = other.to_ring(&self.ring);
        Ok(self.merge(&other, false))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let other = other.to_ring(&self.ring);
        Ok(self.merge(&other, true))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                terms.push((m.mul(n)?, self.field().mul(c, d)));
            }
        }
        Ok(self.ring.from_terms(terms))
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let field = self.field();
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sgn = |c: &Scalar| if negate { field.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match self.ring.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sgn(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        field.sub(&a[i].1, &b[j].1)
                    } else {
                        field.add(&a[i].1, &b[j].1)
                    };
                    if !field.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sgn(c))));
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// self - c * m * g, with g in the same ring.
    pub fn sub_scaled(&self, c: &Scalar, m: &Monomial, g: &Poly) -> Poly {
        let field = self.field();
        let shifted = Poly {
            ring: self.ring.clone(),
            terms: g
                .terms
                .iter()
                .map(|(n, d)| (m.mul(n).expect("exponent overflow"), field.mul(c, d)))
                .collect(),
        };
        self.merge(&shifted, true)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        let field = self.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), field.mul(c, d))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Poly> {
        let terms = self
            .terms
            .iter()
            .map(|(n, c)| Ok((n.mul(m)?, c.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> Poly {
        let field = self.field();
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Result<Poly> {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => {
                let inv = self.field().inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Re-sorts the terms for another ring with the same field and arity.
    pub fn to_ring(&self, ring: &Ring) -> Poly {
        if &self.ring == ring {
            return self.clone();
        }
        assert_eq!(ring.nvars(), self.nvars(), "arity mismatch");
        assert_eq!(ring.field(), self.field(), "field mismatch");
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn to_order(&self, order: MonomialOrder) -> Poly {
        self.to_ring(&self.ring.with_order(order))
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars(), "point arity mismatch");
        let field = self.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = field.mul(&t, &field.pow(&point[i], e as u64));
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    pub fn partial(&self, i: usize) -> Poly {
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(i) > 0)
            .map(|(m, c)| {
                let e = m.exp(i);
                let mut exps = m.exps().to_vec();
                exps[i] -= 1;
                (Monomial::new(exps), field.mul(c, &field.from_i64(e as i64)))
            })
            .collect();
        self.ring.from_terms(terms)
    }

    /// Substitutes `images[i]` for x_i; all images must live in `target`.
    pub fn substitute(&self, target: &Ring, images: &[Poly]) -> Result<Poly> {
        assert_eq!(images.len(), self.nvars(), "one image per variable");
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![target.one(), p.clone()]).collect();
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().checked_mul(&images[i])?;
                    powers[i].push(next);
                }
                t = t.checked_mul(&powers[i][e as usize])?;
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }

    /// f(x + shift).
    pub fn translate(&self, shift: &[Scalar]) -> Result<Poly> {
        let images: Vec<Poly> = shift
            .iter()
            .enumerate()
            .map(|(i, a)| self.ring.var(i).checked_add(&self.ring.constant(a.clone())))
            .collect::<Result<_>>()?;
        self.substitute(&self.ring, &images)
    }

    /// Moves x_i to x_{map[i]} of `target`; pure relabelling, no arithmetic.
    pub fn relabel(&self, target: &Ring, map: &[usize]) -> Poly {
        assert_eq!(map.len(), self.nvars());
        assert_eq!(target.field(), self.field(), "field mismatch");
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; target.nvars()];
                for (i, &e) in m.exps().iter().enumerate() {
                    exps[map[i]] += e;
                }
                (Monomial::new(exps), c.clone())
            })
            .collect();
        target.from_terms(terms)
    }

    /// Keeps only the listed variables; returns `None` if a dropped variable occurs.
    pub fn restrict_vars(&self, target: &Ring, keep: &[usize]) -> Option<Poly> {
        let kept: std::collections::BTreeSet<usize> = keep.iter().copied().collect();
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            if (0..self.nvars()).any(|i| m.exp(i) > 0 && !kept.contains(&i)) {
                return None;
            }
            terms.push((Monomial::new(keep.iter().map(|&i| m.exp(i)).collect()), c.clone()));
        }
        Some(target.from_terms(terms))
    }

    /// Re-expresses coefficients in a larger field (F_p -> F_{p^m}).
    pub fn base_change(&self, field: &Field) -> Result<Poly> {
        let ring = self.ring.with_field(field.clone());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.clone(), field.embed(self.field(), c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(ring.from_terms(terms))
    }

    pub fn to_text(&self) -> String {
        parse::format_poly(self)
    }

    /// Like `to_text`, with `name(i)` for variable i.
    pub fn text_with(&self, name: &dyn Fn(usize) -> String) -> String {
        parse::format_poly_named(self, name)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::format_poly(self))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.field(), self)
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("polynomials from different rings")
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("polynomials from different rings")
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("polynomials from different rings")
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}
