use super::{Monomial, Poly};
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, CyclicQuotient, GroupElement};

/// Per-variable Γ-weights and, for projective coordinates, ℤ-degrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    group: AbelianGroup,
    weights: Vec<GroupElement>,
    degrees: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(GroupElement),
    NonHomogeneous { first: Monomial, second: Monomial },
}

impl WeightVector {
    pub fn new(group: &AbelianGroup, weights: Vec<GroupElement>) -> Result<Self> {
        if let Some(w) = weights.iter().find(|w| !group.contains(w)) {
            return Err(Error::InvalidWeights(format!("{w} is not an element of {group}")));
        }
        Ok(WeightVector {
            group: group.clone(),
            weights,
            degrees: None,
        })
    }

    pub fn from_ints(group: &AbelianGroup, weights: &[Vec<i64>]) -> Result<Self> {
        let ws = weights.iter().map(|w| group.element(w)).collect::<Result<Vec<_>>>()?;
        WeightVector::new(group, ws)
    }

    /// All variables of weight zero in the trivial group.
    pub fn trivial(n: usize) -> Self {
        let g = AbelianGroup::trivial();
        WeightVector {
            weights: vec![g.zero(); n],
            group: g,
            degrees: None,
        }
    }

    pub fn with_standard_degrees(mut self) -> Self {
        self.degrees = Some(vec![1; self.weights.len()]);
        self
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[GroupElement] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> &GroupElement {
        &self.weights[i]
    }

    pub fn degrees(&self) -> Option<&[u32]> {
        self.degrees.as_deref()
    }

    /// Σ e_i g_i in Γ.
    pub fn monomial_weight(&self, m: &Monomial) -> GroupElement {
        m.exps()
            .iter()
            .zip(&self.weights)
            .fold(self.group.zero(), |acc, (&e, w)| {
                self.group.add(&acc, &self.group.scale(w, e as u64))
            })
    }

    pub fn poly_weight(&self, f: &Poly) -> Homogeneity {
        let mut terms = f.terms().iter();
        let Some((m0, _)) = terms.next() else {
            return Homogeneity::Zero;
        };
        let w0 = self.monomial_weight(m0);
        for (m, _) in terms {
            if self.monomial_weight(m) != w0 {
                return Homogeneity::NonHomogeneous {
                    first: m0.clone(),
                    second: m.clone(),
                };
            }
        }
        Homogeneity::Homogeneous(w0)
    }

    /// Weight of a homogeneous polynomial, `None` for the zero polynomial.
    pub fn weight_of(&self, f: &Poly) -> Result<Option<GroupElement>> {
        match self.poly_weight(f) {
            Homogeneity::Zero => Ok(None),
            Homogeneity::Homogeneous(g) => Ok(Some(g)),
            Homogeneity::NonHomogeneous { first, second } => Err(Error::NonHomogeneous {
                generator: 0,
                first: first.to_string(),
                second: second.to_string(),
            }),
        }
    }

    /// Homogeneity for the ℤ-degrees (standard grading if none were set).
    pub fn is_degree_homogeneous(&self, f: &Poly) -> bool {
        let deg = |m: &Monomial| -> u64 {
            match &self.degrees {
                Some(d) => m.exps().iter().zip(d).map(|(&e, &w)| e as u64 * w as u64).sum(),
                None => m.degree(),
            }
        };
        let mut it = f.terms().iter().map(|(m, _)| deg(m));
        match it.next() {
            None => true,
            Some(d0) => it.all(|d| d == d0),
        }
    }

    /// Pushes every weight through a quotient Γ -> Z/p.
    pub fn push(&self, q: &CyclicQuotient) -> WeightVector {
        WeightVector {
            group: q.target(),
            weights: self.weights.iter().map(|w| q.apply(w)).collect(),
            degrees: self.degrees.clone(),
        }
    }

    pub fn select(&self, indices: &[usize]) -> WeightVector {
        WeightVector {
            group: self.group.clone(),
            weights: indices.iter().map(|&i| self.weights[i].clone()).collect(),
            degrees: self.degrees.as_ref().map(|d| indices.iter().map(|&i| d[i]).collect()),
        }
    }

    pub fn extended(&self, extra: &[GroupElement]) -> WeightVector {
        let mut weights = self.weights.clone();
        weights.extend(extra.iter().cloned());
        WeightVector {
            group: self.group.clone(),
            weights,
            degrees: None,
        }
    }

    pub fn prepended(&self, extra: &[GroupElement]) -> WeightVector {
        let mut weights = extra.to_vec();
        weights.extend(self.weights.iter().cloned());
        WeightVector {
            group: self.group.clone(),
            weights,
            degrees: None,
        }
    }

    pub fn without_degrees(&self) -> WeightVector {
        WeightVector {
            degrees: None,
            ..self.clone()
        }
    }
}
