//! Degree-0 invariant subrings of affine models and their presentations.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::GradedIdeal;
use crate::poly::{Monomial, Poly, Ring, WeightVector};

/// Minimal generators of the monoid of weight-0 exponent vectors, in
/// descending lexicographic order.
pub fn invariant_monomials(w: &WeightVector) -> Vec<Monomial> {
    let n = w.len();
    let group = w.group();
    let orders: Vec<u32> = (0..n).map(|i| group.element_order(w.weight(i)) as u32).collect();
    let mut candidates: Vec<Monomial> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = orders[i];
            Monomial::new(e)
        })
        .collect();
    let mut e = vec![0u32; n];
    'scan: loop {
        let m = Monomial::new(e.clone());
        if !m.is_one() && w.monomial_weight(&m).is_zero() {
            candidates.push(m);
        }
        for i in (0..n).rev() {
            e[i] += 1;
            if e[i] < orders[i] {
                continue 'scan;
            }
            e[i] = 0;
        }
        break;
    }
    let mut minimal: Vec<Monomial> = candidates
        .iter()
        .filter(|m| !candidates.iter().any(|d| d != *m && d.divides(m)))
        .cloned()
        .collect();
    minimal.sort_by(|a, b| b.exps().cmp(a.exps()));
    minimal.dedup();
    minimal
}

/// k[z_0..z_{s-1}] / K with z_j ↦ m_j, presenting the degree-0 part of A.
#[derive(Clone, Debug)]
pub struct InvariantPresentation {
    monomials: Vec<Monomial>,
    relations: GradedIdeal,
}

impl InvariantPresentation {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn relations(&self) -> &GradedIdeal {
        &self.relations
    }

    pub fn ring(&self) -> &Ring {
        self.relations.ring()
    }

    /// Reduced Gröbner basis of the relation ideal.
    pub fn relation_basis(&self) -> Result<Vec<Poly>> {
        Ok(self.relations.basis(self.ring().order())?.to_vec())
    }

    /// (z_j, m_j) pairs as text.
    pub fn dictionary(&self) -> Vec<(String, String)> {
        self.monomials
            .iter()
            .enumerate()
            .map(|(j, m)| (format!("z{j}"), m.to_string()))
            .collect()
    }
}

impl fmt::Display for InvariantPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators:")?;
        for (z, m) in self.dictionary() {
            writeln!(f, "  {z} = {m}")?;
        }
        writeln!(f, "relations:")?;
        match self.relation_basis() {
            Ok(basis) => {
                for g in basis {
                    writeln!(f, "  {}", z_text(&g))?;
                }
            }
            Err(e) => writeln!(f, "  <{e}>")?,
        }
        Ok(())
    }
}

/// A polynomial of the invariant ring, written in z variables.
pub fn z_text(g: &Poly) -> String {
    g.to_text().replace('x', "z")
}

/// Kernel of k[z] → k[x]/I, z_j ↦ m_j, by eliminating x from I + (z_j - m_j).
pub fn degree0_presentation(ideal: &GradedIdeal) -> Result<InvariantPresentation> {
    let w = ideal.weights();
    let monomials = invariant_monomials(w);
    let n = ideal.nvars();
    let s = monomials.len();
    let big = Ring::grevlex(ideal.field().clone(), n + s);
    let zero = w.group().zero();
    let big_weights = w.without_degrees().extended(&vec![zero; s]);
    let x_map: Vec<usize> = (0..n).collect();
    let mut gens: Vec<Poly> = ideal.gens().iter().map(|g| g.relabel(&big, &x_map)).collect();
    for (j, m) in monomials.iter().enumerate() {
        let mut exps = m.exps().to_vec();
        exps.resize(n + s, 0);
        gens.push(big.var(n + j).checked_sub(&big.monomial(Monomial::new(exps)))?);
    }
    let relations = GradedIdeal::with_config(&big, gens, big_weights, ideal.config())?.eliminate(n)?;
    let images: Vec<Poly> = monomials.iter().map(|m| ideal.ring().monomial(m.clone())).collect();
    for r in relations.gens() {
        let back = r.substitute(ideal.ring(), &images)?;
        if !ideal.contains(&back)? {
            return Err(Error::Internal(format!(
                "relation {r} does not vanish on the invariants"
            )));
        }
    }
    Ok(InvariantPresentation { monomials, relations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::group::AbelianGroup;

    fn weights(group: &[u64], w: &[Vec<i64>]) -> WeightVector {
        WeightVector::from_ints(&AbelianGroup::new(group.to_vec()).unwrap(), w).unwrap()
    }

    fn text(ms: &[Monomial]) -> Vec<String> {
        ms.iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn monoid_generators() {
        assert_eq!(
            text(&invariant_monomials(&weights(&[2], &[vec![1], vec![1]]))),
            ["x0^2", "x0*x1", "x1^2"]
        );
        assert_eq!(
            text(&invariant_monomials(&weights(&[5], &[vec![1], vec![4]]))),
            ["x0^5", "x0*x1", "x1^5"]
        );
        assert_eq!(
            text(&invariant_monomials(&WeightVector::trivial(3))),
            ["x0", "x1", "x2"]
        );
    }

    #[test]
    fn torus_quotient() {
        let q = Field::rationals();
        let ring = Ring::grevlex(q, 2);
        let ideal = GradedIdeal::new(
            &ring,
            vec![ring.parse("x0*x1 - 1").unwrap()],
            weights(&[2], &[vec![1], vec![1]]),
        )
        .unwrap();
        let pres = degree0_presentation(&ideal).unwrap();
        let basis: Vec<String> = pres.relation_basis().unwrap().iter().map(|g| g.to_text()).collect();
        assert_eq!(basis, ["x1 - 1", "x0*x2 - 1"]);
    }

    #[test]
    fn quadric_cone() {
        let q = Field::rationals();
        let ring = Ring::grevlex(q, 2);
        let ideal = GradedIdeal::new(&ring, vec![], weights(&[2], &[vec![1], vec![1]])).unwrap();
        let pres = degree0_presentation(&ideal).unwrap();
        let basis: Vec<String> = pres.relation_basis().unwrap().iter().map(|g| g.to_text()).collect();
        assert_eq!(basis, ["x1^2 - x0*x2"]);
    }

    #[test]
    fn trivial_group_gives_identity() {
        let q = Field::rationals();
        let ring = Ring::grevlex(q, 2);
        let ideal = GradedIdeal::ungraded(&ring, vec![ring.parse("x0^2 - x1").unwrap()]).unwrap();
        let pres = degree0_presentation(&ideal).unwrap();
        let basis: Vec<String> = pres.relation_basis().unwrap().iter().map(|g| g.to_text()).collect();
        assert_eq!(basis, ["x0^2 - x1"]);
    }
}
