//! Independent reference computations used by the acceptance suite. Nothing
//! here calls into the Gröbner or fixed-locus code it is compared against.

use std::collections::BTreeMap;

use rand::Rng;
use rostfix::{Monomial, Poly, Ring, Scalar};

pub fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "{a} is not invertible mod {p}");
    t0.rem_euclid(p as i128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Row-reduced basis of a span of vectors over F_p, kept in echelon form.
pub struct Span {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Span {
    pub fn new(p: u64) -> Self {
        Span { p, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [u64]) {
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + self.p - c * r % self.p) % self.p;
                }
            }
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(|&x| x == 0)
    }

    pub fn insert(&mut self, v: &[u64]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[pivot], self.p);
        for x in v.iter_mut() {
            *x = *x * inv % self.p;
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[pivot];
            if c != 0 {
                for (x, r) in row.iter_mut().zip(&v) {
                    *x = (*x + self.p - c * r % self.p) % self.p;
                }
            }
        }
        self.rows.push((pivot, v));
        true
    }
}

/// Exponent vectors of total degree d in n variables.
pub fn exponents(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for e in (0..=d).rev() {
        for mut rest in exponents(n - 1, d - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

pub fn residue(s: &Scalar) -> u64 {
    match s {
        Scalar::Residue(r) => *r,
        other => panic!("expected a prime-field residue, got {other:?}"),
    }
}

pub fn exps(m: &Monomial, n: usize) -> Vec<u32> {
    (0..n).map(|i| m.exp(i)).collect()
}

/// Dense coefficient vector of a form of degree d.
pub fn dense(f: &Poly, index: &BTreeMap<Vec<u32>, usize>) -> Vec<u64> {
    let mut v = vec![0; index.len()];
    for (m, c) in f.terms() {
        v[index[&exps(m, f.nvars())]] = residue(c);
    }
    v
}

/// The degree-d piece of the ideal generated by homogeneous forms, as a span
/// of all products monomial × generator.
pub fn ideal_piece(gens: &[Poly], n: usize, d: u32, p: u64) -> (Span, BTreeMap<Vec<u32>, usize>) {
    let index: BTreeMap<Vec<u32>, usize> = exponents(n, d).into_iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut span = Span::new(p);
    for g in gens {
        let dg = g.total_degree().unwrap() as u32;
        if dg > d {
            continue;
        }
        for e in exponents(n, d - dg) {
            let prod = g.mul_monomial(&Monomial::new(e)).unwrap();
            span.insert(&dense(&prod, &index));
        }
    }
    (span, index)
}

/// A random nonzero form of degree d supported on exponents accepted by `keep`.
pub fn random_form(rng: &mut impl Rng, ring: &Ring, d: u32, p: u64, keep: impl Fn(&[u32]) -> bool) -> Poly {
    let n = ring.nvars();
    loop {
        let mut terms = Vec::new();
        for e in exponents(n, d).into_iter().filter(|e| keep(e)) {
            if rng.gen_bool(0.6) {
                terms.push((Monomial::new(e), Scalar::Residue(rng.gen_range(1..p))));
            }
        }
        if !terms.is_empty() {
            return ring.from_terms(terms);
        }
    }
}

/// All points of P^n(F_l), normalised so the first nonzero coordinate is 1.
pub fn projective_points(n: usize, l: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for lead in 0..=n {
        let free = n - lead;
        let total = l.pow(free as u32);
        for mut k in 0..total {
            let mut v = vec![0; n + 1];
            v[lead] = 1;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = k % l;
                k /= l;
            }
            out.push(v);
        }
    }
    out
}

/// An element of exact order `order` in F_l^*.
pub fn root_of_unity(order: u64, l: u64) -> u64 {
    assert_eq!((l - 1) % order, 0);
    (1..l)
        .find(|&z| (1..=order).find(|&k| pow_mod(z, k, l) == 1) == Some(order))
        .expect("cyclic group has elements of every order dividing its size")
}

pub fn eval(f: &Poly, point: &[u64], l: u64) -> u64 {
    let mut acc = 0;
    for (m, c) in f.terms() {
        let mut t = residue(c);
        for (i, &x) in point.iter().enumerate() {
            t = t * pow_mod(x, m.exp(i) as u64, l) % l;
        }
        acc = (acc + t) % l;
    }
    acc
}

pub fn point_text(v: &[u64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(":")
}
