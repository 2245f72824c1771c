//! Dense row reduction over an exact field.

use crate::field::{Field, Scalar};

/// Incrementally built row-echelon basis of a subspace of k^ncols.
/// Stored rows have pivot entry 1 and vanish at the pivots of earlier rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    ncols: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    pub fn new(field: &Field, ncols: usize) -> Self {
        Echelon {
            field: field.clone(),
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Eliminates all pivot columns from `v` in place.
    pub fn reduce(&self, v: &mut [Scalar]) {
        let f = &self.field;
        for (piv, row) in &self.rows {
            if f.is_zero(&v[*piv]) {
                continue;
            }
            let c = v[*piv].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
    }

    /// Adds `v` to the span; returns whether it was independent.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        self.reduce(&mut v);
        let Some(piv) = v.iter().position(|x| !self.field.is_zero(x)) else {
            return false;
        };
        let inv = self.field.inv(&v[piv]).expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = self.field.mul(x, &inv);
        }
        self.rows.push((piv, v));
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.field.is_zero(x))
    }

    /// Stored basis vectors.
    pub fn basis(&self) -> impl Iterator<Item = &[Scalar]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }
}

pub fn rank(field: &Field, ncols: usize, rows: impl IntoIterator<Item = Vec<Scalar>>) -> usize {
    let mut e = Echelon::new(field, ncols);
    for r in rows {
        e.insert(r);
        if e.is_full() {
            break;
        }
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[u64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::Residue(x)).collect()
    }

    #[test]
    fn rank_over_f5() {
        let f = Field::prime(5).unwrap();
        assert_eq!(rank(&f, 3, [v(&[1, 2, 3]), v(&[2, 4, 1]), v(&[0, 1, 0])]), 2);
        assert_eq!(rank(&f, 2, [v(&[0, 0])]), 0);
        let mut e = Echelon::new(&f, 3);
        assert!(e.insert(v(&[0, 1, 1])));
        assert!(e.insert(v(&[1, 1, 0])));
        assert!(e.contains(&v(&[1, 2, 1])));
        assert!(!e.contains(&v(&[0, 0, 1])));
    }
}
