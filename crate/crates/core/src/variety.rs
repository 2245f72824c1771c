//! Embedded varieties with a diagonal group action, and their invariant charts.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::groebner::{GradedIdeal, GroebnerConfig};
use crate::group::{AbelianGroup, GroupElement};
use crate::poly::{Monomial, Poly, Ring, WeightVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "dim", rename_all = "lowercase")]
pub enum Ambient {
    /// A^n with coordinates x0..x{n-1}.
    Affine(usize),
    /// P^n with homogeneous coordinates x0..xn.
    Projective(usize),
}

impl Ambient {
    pub fn coordinates(&self) -> usize {
        match *self {
            Ambient::Affine(n) => n,
            Ambient::Projective(n) => n + 1,
        }
    }

    pub fn is_projective(&self) -> bool {
        matches!(self, Ambient::Projective(_))
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::Affine(n) => write!(f, "A^{n}"),
            Ambient::Projective(n) => write!(f, "P^{n}"),
        }
    }
}

/// An invariant affine open: D(x_j) for a projective model, or the whole
/// affine model.
#[derive(Clone, Debug)]
pub struct Chart {
    index: Option<usize>,
    coords: Vec<usize>,
    ideal: GradedIdeal,
}

impl Chart {
    /// Inverted coordinate, `None` for an affine model.
    pub fn index(&self) -> Option<usize> {
        self.index
    }

    /// Ambient coordinate index of each chart variable.
    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    pub fn ideal(&self) -> &GradedIdeal {
        &self.ideal
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn weights(&self) -> &WeightVector {
        self.ideal.weights()
    }

    pub fn nvars(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> Result<bool> {
        self.ideal.is_unit()
    }

    /// Chart variables whose ambient coordinate precedes the inverted one;
    /// points of this chart are canonical when these all vanish.
    pub fn preceding_vars(&self) -> Vec<usize> {
        match self.index {
            None => Vec::new(),
            Some(j) => (0..self.coords.len()).filter(|&k| self.coords[k] < j).collect(),
        }
    }

    /// Ambient coordinates of a chart point (1 inserted at the inverted slot).
    pub fn ambient_point(&self, field: &Field, coords: &[Scalar]) -> Vec<Scalar> {
        match self.index {
            None => coords.to_vec(),
            Some(j) => {
                let mut out = coords.to_vec();
                out.insert(j, field.one());
                out
            }
        }
    }

    /// Chart coordinates of an ambient point with nonzero inverted coordinate.
    pub fn chart_point(&self, field: &Field, ambient: &[Scalar]) -> Result<Vec<Scalar>> {
        match self.index {
            None => Ok(ambient.to_vec()),
            Some(j) => {
                let inv = field.inv(&ambient[j])?;
                Ok(self.coords.iter().map(|&i| field.mul(&ambient[i], &inv)).collect())
            }
        }
    }
}

/// A variety with a Diag(Γ)-action encoded by coordinate weights.
#[derive(Debug)]
pub struct ActionModel {
    name: String,
    ambient: Ambient,
    ideal: GradedIdeal,
    declared_equidimensional: bool,
    charts: OnceLock<Vec<Chart>>,
}

impl Clone for ActionModel {
    fn clone(&self) -> Self {
        ActionModel {
            name: self.name.clone(),
            ambient: self.ambient,
            ideal: self.ideal.clone(),
            declared_equidimensional: self.declared_equidimensional,
            charts: self.charts.clone(),
        }
    }
}

impl ActionModel {
    pub fn new(
        name: impl Into<String>,
        ring: &Ring,
        ambient: Ambient,
        weights: WeightVector,
        generators: Vec<Poly>,
        declared_equidimensional: bool,
        config: GroebnerConfig,
    ) -> Result<Self> {
        if ring.nvars() != ambient.coordinates() {
            return Err(Error::ArityMismatch {
                expected: ambient.coordinates(),
                found: ring.nvars(),
            });
        }
        let weights = if ambient.is_projective() {
            weights.with_standard_degrees()
        } else {
            weights
        };
        if ambient.is_projective() {
            if let Some(idx) = generators.iter().position(|g| !weights.is_degree_homogeneous(g)) {
                return Err(Error::NotDegreeHomogeneous(idx));
            }
        }
        let ideal = GradedIdeal::with_config(ring, generators, weights, config)?;
        Ok(ActionModel {
            name: name.into(),
            ambient,
            ideal,
            declared_equidimensional,
            charts: OnceLock::new(),
        })
    }

    /// Convenience constructor from integer weights and generator text.
    pub fn from_text(
        field: &Field,
        group: &AbelianGroup,
        ambient: Ambient,
        weights: &[Vec<i64>],
        generators: &[&str],
    ) -> Result<Self> {
        let ring = Ring::grevlex(field.clone(), ambient.coordinates());
        let w = WeightVector::from_ints(group, weights)?;
        let gens = generators.iter().map(|g| ring.parse(g)).collect::<Result<Vec<_>>>()?;
        ActionModel::new("model", &ring, ambient, w, gens, true, GroebnerConfig::default())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> &Field {
        self.ideal.field()
    }

    pub fn group(&self) -> &AbelianGroup {
        self.ideal.weights().group()
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn weights(&self) -> &WeightVector {
        self.ideal.weights()
    }

    pub fn ideal(&self) -> &GradedIdeal {
        &self.ideal
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn config(&self) -> GroebnerConfig {
        self.ideal.config()
    }

    pub fn declared_equidimensional(&self) -> bool {
        self.declared_equidimensional
    }

    /// Charts in order j = 0..n (a single identity chart for affine models).
    pub fn charts(&self) -> &[Chart] {
        self.charts.get_or_init(|| self.make_charts())
    }

    fn make_charts(&self) -> Vec<Chart> {
        match self.ambient {
            Ambient::Affine(n) => vec![Chart {
                index: None,
                coords: (0..n).collect(),
                ideal: self.ideal.clone(),
            }],
            Ambient::Projective(n) => (0..=n).map(|j| self.chart(j)).collect(),
        }
    }

    fn chart(&self, j: usize) -> Chart {
        let n = self.ambient.coordinates();
        let coords: Vec<usize> = (0..n).filter(|&i| i != j).collect();
        let ring = Ring::grevlex(self.field().clone(), n - 1);
        let group = self.group();
        let gj = self.weights().weight(j).clone();
        let weights: Vec<GroupElement> = coords
            .iter()
            .map(|&i| group.sub(self.weights().weight(i), &gj))
            .collect();
        let weights = WeightVector::new(group, weights).expect("group elements");
        let gens = self.ideal.gens().iter().map(|f| dehomogenize(f, j, &ring)).collect();
        let ideal = GradedIdeal::with_config(&ring, gens, weights, self.config())
            .expect("dehomogenisation preserves homogeneity");
        Chart {
            index: Some(j),
            coords,
            ideal,
        }
    }

    /// Projective (or affine) dimension of X; -1 when X is empty.
    pub fn global_dimension(&self) -> Result<i64> {
        let mut best = -1;
        for c in self.charts() {
            best = best.max(c.ideal().krull_dimension()?);
        }
        Ok(best)
    }
}

/// f(x) with x_j := 1 and the remaining coordinates renumbered.
pub fn dehomogenize(f: &Poly, j: usize, target: &Ring) -> Poly {
    let terms = f
        .terms()
        .iter()
        .map(|(m, c)| {
            let exps: Vec<u32> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != j)
                .map(|(_, &e)| e)
                .collect();
            (Monomial::new(exps), c.clone())
        })
        .collect();
    target.from_terms(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: u64) -> AbelianGroup {
        AbelianGroup::cyclic(n)
    }

    #[test]
    fn projective_line_charts() {
        let m = ActionModel::from_text(
            &Field::prime(3).unwrap(),
            &zn(2),
            Ambient::Projective(1),
            &[vec![0], vec![1]],
            &[],
        )
        .unwrap();
        let ch = m.charts();
        assert_eq!(ch.len(), 2);
        assert_eq!(ch[0].weights().weights(), &[zn(2).element(&[1]).unwrap()]);
        assert_eq!(ch[1].weights().weights(), &[zn(2).element(&[1]).unwrap()]);
    }

    #[test]
    fn hyperplane_charts() {
        let g = zn(3);
        let m = ActionModel::from_text(
            &Field::prime(7).unwrap(),
            &g,
            Ambient::Projective(2),
            &[vec![0], vec![1], vec![2]],
            &["x0"],
        )
        .unwrap();
        let ch = m.charts();
        assert!(ch[0].is_empty().unwrap());
        assert!(!ch[1].is_empty().unwrap());
        assert_eq!(
            ch[1].weights().weights(),
            &[g.element(&[2]).unwrap(), g.element(&[1]).unwrap()]
        );
        assert_eq!(ch[1].ideal().gens()[0].to_string(), "x0");
        assert_eq!(m.global_dimension().unwrap(), 1);
    }

    #[test]
    fn global_dimensions() {
        let q = Field::rationals();
        let g = zn(3);
        let w = [vec![0], vec![1], vec![2]];
        let p2 = |gens: &[&str]| ActionModel::from_text(&q, &g, Ambient::Projective(2), &w, gens).unwrap();
        assert_eq!(p2(&[]).global_dimension().unwrap(), 2);
        let plane = ActionModel::from_text(
            &q,
            &g,
            Ambient::Projective(2),
            &[vec![0], vec![0], vec![0]],
            &["x0 + x1 + x2"],
        );
        assert_eq!(plane.unwrap().global_dimension().unwrap(), 1);
        assert_eq!(p2(&["1"]).global_dimension().unwrap(), -1);
    }

    #[test]
    fn affine_model_has_identity_chart() {
        let m = ActionModel::from_text(&Field::rationals(), &zn(2), Ambient::Affine(1), &[vec![1]], &[]).unwrap();
        assert_eq!(m.charts().len(), 1);
        assert_eq!(m.charts()[0].index(), None);
        assert_eq!(m.global_dimension().unwrap(), 1);
    }

    #[test]
    fn invalid_models_are_rejected() {
        let q = Field::rationals();
        let g = zn(2);
        assert!(matches!(
            ActionModel::from_text(&q, &g, Ambient::Projective(1), &[vec![0], vec![1]], &["x0 + x1"]),
            Err(Error::NonHomogeneous { .. })
        ));
        assert!(matches!(
            ActionModel::from_text(&q, &g, Ambient::Projective(1), &[vec![0], vec![0]], &["x0^2 + x1"]),
            Err(Error::NotDegreeHomogeneous(0))
        ));
        assert!(ActionModel::from_text(&q, &g, Ambient::Projective(1), &[vec![0]], &[]).is_err());
    }
}
