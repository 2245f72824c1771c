//! Normal cone of the fixed locus: a presentation of the associated graded
//! ring gr_I(A) = ⊕ I^n / I^{n+1} and checks of its fixed locus and of the
//! multiplicity read off from it.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::fixed::fixed_ideal;
use crate::groebner::{GradedIdeal, GroebnerConfig};
use crate::group::{CyclicQuotient, GroupElement};
use crate::linalg::Echelon;
use crate::localgeom::tangent_report;
use crate::poly::{Monomial, MonomialOrder, Poly, Ring, WeightVector};
use crate::rost::local_multiplicity;
use crate::variety::Chart;

/// k[x_0..x_{n-1}, z_0..z_{r-1}] modulo the Rees kernel plus (f_0..f_{r-1}),
/// where z_j stands for f_j in degree one.
#[derive(Clone, Debug)]
pub struct GradedConePresentation {
    x_ring: Ring,
    x_weights: WeightVector,
    cone_generators: Vec<Poly>,
    kernel: Vec<Poly>,
    ideal: GradedIdeal,
}

impl GradedConePresentation {
    pub fn from_parts(
        x_ring: &Ring,
        x_weights: &WeightVector,
        cone_generators: Vec<Poly>,
        kernel: Vec<Poly>,
        config: GroebnerConfig,
    ) -> Result<Self> {
        let n = x_ring.nvars();
        let z_weights = cone_generators
            .iter()
            .map(|f| {
                x_weights
                    .weight_of(f)?
                    .ok_or_else(|| Error::Internal("zero cone generator".into()))
            })
            .collect::<Result<Vec<GroupElement>>>()?;
        let ring = Ring::grevlex(x_ring.field().clone(), n + cone_generators.len());
        let weights = x_weights.without_degrees().extended(&z_weights);
        let x_map: Vec<usize> = (0..n).collect();
        let mut gens = kernel.clone();
        gens.extend(cone_generators.iter().map(|f| f.relabel(&ring, &x_map)));
        let ideal = GradedIdeal::with_config(&ring, gens, weights, config)?;
        Ok(GradedConePresentation {
            x_ring: x_ring.clone(),
            x_weights: x_weights.clone(),
            cone_generators,
            kernel,
            ideal,
        })
    }

    pub fn nx(&self) -> usize {
        self.x_ring.nvars()
    }

    pub fn nz(&self) -> usize {
        self.cone_generators.len()
    }

    /// Chart coordinates are x0.., cone variables z0...
    pub fn var_name(&self, i: usize) -> String {
        if i < self.nx() {
            format!("x{i}")
        } else {
            format!("z{}", i - self.nx())
        }
    }

    pub fn text(&self, g: &Poly) -> String {
        g.text_with(&|i| self.var_name(i))
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn weights(&self) -> &WeightVector {
        self.ideal.weights()
    }

    pub fn z_weight(&self, j: usize) -> &GroupElement {
        self.weights().weight(self.nx() + j)
    }

    /// The f_j, as polynomials on the chart.
    pub fn cone_generators(&self) -> &[Poly] {
        &self.cone_generators
    }

    pub fn kernel(&self) -> &[Poly] {
        &self.kernel
    }

    pub fn ideal(&self) -> &GradedIdeal {
        &self.ideal
    }

    /// The same presentation with kernel generator `i` removed.
    pub fn without_kernel_generator(&self, i: usize) -> Result<Self> {
        let mut kernel = self.kernel.clone();
        kernel.remove(i);
        GradedConePresentation::from_parts(
            &self.x_ring,
            &self.x_weights,
            self.cone_generators.clone(),
            kernel,
            self.ideal.config(),
        )
    }

    /// The z-degree-0 slice P + (z), which should present A/I.
    pub fn zero_section(&self) -> Result<GradedIdeal> {
        let ring = self.ring();
        self.ideal.extend((self.nx()..ring.nvars()).map(|i| ring.var(i)))
    }

    /// dim_k of the part of gr of z-degree n. Needs A/I finite.
    pub fn gr_dimension(&self, n: u32) -> Result<usize> {
        let base = self.zero_section()?.staircase()?;
        let lms: Vec<Monomial> = self.ideal.leading_monomials(MonomialOrder::GrevLex)?;
        let nz = self.nz();
        let total = self.ring().nvars();
        let mut count = 0;
        for zb in monomials_of_degree(nz, n) {
            for xa in base.monomials() {
                let mut exps = xa.exps()[..self.nx()].to_vec();
                exps.extend_from_slice(zb.exps());
                let m = Monomial::new(exps);
                debug_assert_eq!(m.arity(), total);
                if !lms.iter().any(|l| l.divides(&m)) {
                    count += 1;
                }
            }
        }
        Ok(count)
    }
}

impl fmt::Display for GradedConePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "variables:")?;
        for i in 0..self.ring().nvars() {
            write!(f, "  {}  weight {}", self.var_name(i), self.weights().weight(i))?;
            if i >= self.nx() {
                write!(f, "  for {}", self.cone_generators[i - self.nx()])?;
            }
            writeln!(f)?;
        }
        writeln!(f, "relations:")?;
        for g in self.ideal.gens() {
            writeln!(f, "  {}", self.text(g))?;
        }
        Ok(())
    }
}

/// All monomials of total degree d in n variables, in descending lex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            go(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    go(n, d, &mut Vec::new(), &mut out);
    out
}

/// Presentation of gr_I(A) for A = k[x]/J the chart ring and I = `ifix`,
/// by eliminating s from J + (z_j - f_j s).
pub fn associated_graded(chart: &Chart, ifix: &GradedIdeal) -> Result<GradedConePresentation> {
    let x_ring = chart.ring();
    let w = ifix.weights();
    let j_ideal = chart.ideal().regrade(w.clone())?;
    if !ifix.contains_ideal(&j_ideal)? {
        return Err(Error::Unsupported("the ideal does not contain the chart ideal".into()));
    }
    let mut cone_generators = Vec::new();
    for g in ifix.gens() {
        if !j_ideal.contains(g)? {
            cone_generators.push(g.to_ring(x_ring));
        }
    }
    let n = x_ring.nvars();
    let r = cone_generators.len();
    let z_weights = cone_generators
        .iter()
        .map(|f| Ok(w.weight_of(f)?.expect("nonzero")))
        .collect::<Result<Vec<_>>>()?;
    let big = Ring::grevlex(x_ring.field().clone(), 1 + n + r);
    let big_weights = w.without_degrees().extended(&z_weights).prepended(&[w.group().zero()]);
    let x_map: Vec<usize> = (1..=n).collect();
    let s = big.var(0);
    let mut gens: Vec<Poly> = j_ideal.gens().iter().map(|g| g.relabel(&big, &x_map)).collect();
    for (jdx, f) in cone_generators.iter().enumerate() {
        let fs = f.relabel(&big, &x_map).checked_mul(&s)?;
        gens.push(big.var(1 + n + jdx).checked_sub(&fs)?);
    }
    let rees = GradedIdeal::with_config(&big, gens, big_weights, ifix.config())?;
    let kernel = rees.eliminate(1)?;
    GradedConePresentation::from_parts(x_ring, w, cone_generators, kernel.gens().to_vec(), ifix.config())
}

/// Whether the fixed locus of the cone equals the fixed locus of the chart,
/// both seen inside the cone: P + (nonzero-weight variables) against I + (z).
pub fn verify_cone_fixed_locus(pres: &GradedConePresentation, ifix: &GradedIdeal) -> Result<bool> {
    let ring = pres.ring();
    let w = pres.weights();
    let lhs = pres.ideal().extend(
        (0..ring.nvars())
            .filter(|&i| !w.weight(i).is_zero())
            .map(|i| ring.var(i)),
    )?;
    let x_map: Vec<usize> = (0..pres.nx()).collect();
    let mut rhs_gens: Vec<Poly> = ifix.gens().iter().map(|g| g.relabel(ring, &x_map)).collect();
    rhs_gens.extend((pres.nx()..ring.nvars()).map(|i| ring.var(i)));
    let rhs = GradedIdeal::with_config(ring, rhs_gens, w.clone(), pres.ideal().config())?;
    lhs.same_ideal(&rhs)
}

/// dim_k I^k / I^{k+1} for k = 0..=max, with A = k[x]/J and I = J + (f).
///
/// When J is zero-dimensional the powers are spanned inside A by dense linear
/// algebra; otherwise lengths of k[x]/(J + (f)^k) are compared.
pub fn adic_quotient_dimensions(j: &GradedIdeal, f: &[Poly], max: u32) -> Result<Vec<usize>> {
    if j.krull_dimension()? == 0 {
        return dense_adic_dimensions(j, f, max);
    }
    let mut lengths = Vec::new();
    for k in 0..=max + 1 {
        let power = ideal_power(j.ring(), f, k)?;
        let ideal = GradedIdeal::with_config(
            j.ring(),
            j.gens().iter().cloned().chain(power).collect(),
            WeightVector::trivial(j.nvars()),
            j.config(),
        )?;
        lengths.push(ideal.staircase()?.len());
    }
    Ok(lengths.windows(2).map(|w| w[1] - w[0]).collect())
}

fn dense_adic_dimensions(j: &GradedIdeal, f: &[Poly], max: u32) -> Result<Vec<usize>> {
    let ungraded = j.regrade(WeightVector::trivial(j.nvars()))?;
    let st = ungraded.staircase()?;
    let field = j.field().clone();
    let d = st.len();
    // I^0 = A
    let mut current: Vec<Vec<Scalar>> = (0..d)
        .map(|k| {
            (0..d)
                .map(|c| if c == k { field.one() } else { field.zero() })
                .collect()
        })
        .collect();
    let mut dims = vec![d];
    for _ in 0..=max {
        let mut next = Echelon::new(&field, d);
        for v in &current {
            let elem = poly_from_coords(&st, v);
            for g in f {
                next.insert(st.coords(&elem.checked_mul(&g.to_ring(elem.ring()))?));
            }
        }
        current = next.basis().map(<[Scalar]>::to_vec).collect();
        dims.push(current.len());
    }
    Ok(dims.windows(2).map(|w| w[0] - w[1]).collect())
}

fn poly_from_coords(st: &crate::groebner::Staircase, v: &[Scalar]) -> Poly {
    let terms = st
        .monomials()
        .iter()
        .zip(v)
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    st.ring().from_terms(terms)
}

/// Generators of (f)^k: products of k-element multisets.
fn ideal_power(ring: &Ring, f: &[Poly], k: u32) -> Result<Vec<Poly>> {
    let mut out = Vec::new();
    for e in monomials_of_degree(f.len(), k) {
        let mut prod = ring.one();
        for (g, &a) in f.iter().zip(e.exps()) {
            prod = prod.checked_mul(&g.to_ring(ring).pow(a)?)?;
        }
        out.push(prod);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeMultiplicityReport {
    /// Chart variables kept as minimal generators of the fixed ideal at the point.
    pub chosen: Vec<usize>,
    pub tangent_normal: Vec<usize>,
    pub cone_normal: Vec<usize>,
    pub tangent_u: u64,
    pub cone_u: u64,
}

impl ConeMultiplicityReport {
    pub fn holds(&self) -> bool {
        self.tangent_u == self.cone_u
    }
}

/// Compares the Rost multiplicity from Jacobian weights with the one read off
/// the cone variables of a minimal homogeneous generating set of the fixed
/// ideal at an isolated regular fixed point.
pub fn verify_cone_multiplicity(
    chart: &Chart,
    field: &Field,
    point: &[Scalar],
    pi: &CyclicQuotient,
    declared_dim: i64,
) -> Result<ConeMultiplicityReport> {
    let p = pi.p();
    let t = tangent_report(chart, field, point, Some(pi), declared_dim)?;
    let tangent_normal = t.normal.clone().expect("quotient given");
    if !t.regular || tangent_normal[0] != 0 {
        return Err(Error::Unsupported(
            "the point is not an isolated regular fixed point".into(),
        ));
    }
    let ifix = fixed_ideal(chart, Some(pi))?;
    let w = ifix.weights().clone();
    let ring = chart.ring().with_field(field.clone());
    let n = ring.nvars();
    let shift = |g: &Poly| g.base_change(field)?.translate(point);
    let j_local = chart.ideal().gens().iter().map(shift).collect::<Result<Vec<_>>>()?;
    let ifix_local = ifix.gens().iter().map(shift).collect::<Result<Vec<_>>>()?;
    let mut m_ifix = Vec::new();
    for g in &ifix_local {
        for i in 0..n {
            m_ifix.push(ring.var(i).checked_mul(g)?);
        }
    }
    let candidates: Vec<usize> = (0..n).filter(|&i| !w.weight(i).is_zero()).collect();
    let q_ideal = |chosen: &[usize]| -> Result<Vec<Poly>> {
        let mut gens = j_local.clone();
        gens.extend(chosen.iter().map(|&i| ring.var(i)));
        gens.extend(m_ifix.iter().cloned());
        Ok(gens)
    };
    let local_contains = |gens: Vec<Poly>, g: &Poly| -> Result<bool> {
        let ideal = LocalIdeal::new(&ring, gens, &w, ifix.config())?;
        ideal.contains(g)
    };
    let mut chosen = Vec::new();
    for &i in &candidates {
        if !local_contains(q_ideal(&chosen)?, &ring.var(i))? {
            chosen.push(i);
        }
    }
    for (pos, &i) in chosen.iter().enumerate() {
        let mut others = chosen.clone();
        others.remove(pos);
        if local_contains(q_ideal(&others)?, &ring.var(i))? {
            return Err(Error::Internal(format!("generator x{i} is redundant modulo m*I")));
        }
    }
    let mut cone_normal = vec![0usize; p as usize];
    let target = pi.target();
    for &i in &chosen {
        cone_normal[target.neg(w.weight(i)).components()[0] as usize] += 1;
    }
    Ok(ConeMultiplicityReport {
        tangent_u: local_multiplicity(&tangent_normal, p)?,
        cone_u: local_multiplicity(&cone_normal, p)?,
        chosen,
        tangent_normal,
        cone_normal,
    })
}

/// Ideal membership in the local ring at the origin, for ideals whose
/// localisation there is primary to the maximal ideal: Q_0 ∩ k[x] = Q + m^N
/// once the chain Q + m^N stabilises.
struct LocalIdeal {
    truncated: GradedIdeal,
}

const MAX_LOCAL_POWER: u32 = 12;

impl LocalIdeal {
    fn new(ring: &Ring, gens: Vec<Poly>, w: &WeightVector, config: GroebnerConfig) -> Result<Self> {
        let n = ring.nvars();
        let with_power = |k: u32| -> Result<GradedIdeal> {
            let mut all = gens.clone();
            all.extend(monomials_of_degree(n, k).into_iter().map(|m| ring.monomial(m)));
            GradedIdeal::with_config(ring, all, w.clone(), config)
        };
        let mut prev = with_power(1)?;
        for k in 2..=MAX_LOCAL_POWER {
            let next = with_power(k)?;
            if next.contains_ideal(&prev)? {
                return Ok(LocalIdeal { truncated: next });
            }
            prev = next;
        }
        Err(Error::Internal(
            "local ideal is not primary to the maximal ideal".into(),
        ))
    }

    fn contains(&self, g: &Poly) -> Result<bool> {
        self.truncated.contains(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::group::AbelianGroup;
    use crate::variety::{ActionModel, Ambient};

    fn affine(field: &Field, group: &[u64], w: &[Vec<i64>], gens: &[&str]) -> ActionModel {
        let g = AbelianGroup::new(group.to_vec()).unwrap();
        ActionModel::from_text(field, &g, Ambient::Affine(w.len()), w, gens).unwrap()
    }

    #[test]
    fn line_with_principal_fixed_ideal() {
        let q = Field::rationals();
        let m = affine(&q, &[2], &[vec![1]], &[]);
        let chart = &m.charts()[0];
        let ifix = fixed_ideal(chart, None).unwrap();
        let pres = associated_graded(chart, &ifix).unwrap();
        assert_eq!(pres.nz(), 1);
        assert_eq!(pres.z_weight(0).components(), [1]);
        assert!(pres.kernel().is_empty());
        assert!(verify_cone_fixed_locus(&pres, &ifix).unwrap());
        for n in 0..4 {
            assert_eq!(pres.gr_dimension(n).unwrap(), 1);
        }
    }

    #[test]
    fn node_matches_filtration_oracle() {
        let q = Field::rationals();
        let m = affine(&q, &[2], &[vec![1], vec![1]], &["x0*x1"]);
        let chart = &m.charts()[0];
        let ifix = fixed_ideal(chart, None).unwrap();
        let pres = associated_graded(chart, &ifix).unwrap();
        assert!(verify_cone_fixed_locus(&pres, &ifix).unwrap());
        let oracle = adic_quotient_dimensions(chart.ideal(), pres.cone_generators(), 3).unwrap();
        assert_eq!(oracle, [1, 2, 2, 2]);
        let gr: Vec<usize> = (0..4).map(|n| pres.gr_dimension(n).unwrap()).collect();
        assert_eq!(gr, oracle);
    }

    #[test]
    fn dense_oracle_on_an_artinian_ring() {
        let q = Field::rationals();
        let ring = Ring::grevlex(q.clone(), 2);
        let j = GradedIdeal::ungraded(&ring, vec![ring.parse("x0^3").unwrap(), ring.parse("x1^2").unwrap()]).unwrap();
        let f = vec![ring.var(0), ring.var(1)];
        // k[x,y]/(x^3, y^2) has Hilbert function 1, 2, 2, 1
        assert_eq!(adic_quotient_dimensions(&j, &f, 4).unwrap(), [1, 2, 2, 1, 0]);
    }

    #[test]
    fn dropping_the_curve_equation_is_detected() {
        let f3 = Field::prime(3).unwrap();
        let z2 = AbelianGroup::cyclic(2);
        let m = ActionModel::from_text(
            &f3,
            &z2,
            Ambient::Projective(2),
            &[vec![1], vec![0], vec![0]],
            &["x0^2 + x1^2 - x2^2"],
        )
        .unwrap();
        let chart = &m.charts()[1];
        let ifix = fixed_ideal(chart, None).unwrap();
        let pres = associated_graded(chart, &ifix).unwrap();
        assert_eq!(pres.nz(), 1);
        assert_eq!(pres.z_weight(0).components(), [1]);
        assert!(verify_cone_fixed_locus(&pres, &ifix).unwrap());
        let broken = (0..pres.kernel().len())
            .map(|i| pres.without_kernel_generator(i).unwrap())
            .any(|bad| !verify_cone_fixed_locus(&bad, &ifix).unwrap());
        assert!(broken);
    }

    #[test]
    fn multiplicity_examples() {
        let f3 = Field::prime(3).unwrap();
        let z2 = AbelianGroup::cyclic(2);
        let line = ActionModel::from_text(&f3, &z2, Ambient::Projective(1), &[vec![0], vec![1]], &[]).unwrap();
        let q2 = &z2.mu_p_quotients(2)[0];
        let r = verify_cone_multiplicity(&line.charts()[0], &f3, &[Scalar::Residue(0)], q2, 1).unwrap();
        assert_eq!(r.cone_normal, [0, 1]);
        assert!(r.holds());

        let conic = ActionModel::from_text(
            &f3,
            &z2,
            Ambient::Projective(2),
            &[vec![1], vec![0], vec![0]],
            &["x0^2 + x1^2 - x2^2"],
        )
        .unwrap();
        let pt = [Scalar::Residue(0), Scalar::Residue(1)];
        let r = verify_cone_multiplicity(&conic.charts()[1], &f3, &pt, q2, 1).unwrap();
        assert_eq!(r.chosen, [0]);
        assert!(r.holds());

        let f7 = Field::prime(7).unwrap();
        let z3 = AbelianGroup::cyclic(3);
        let plane =
            ActionModel::from_text(&f7, &z3, Ambient::Projective(2), &[vec![0], vec![1], vec![2]], &[]).unwrap();
        let q3 = &z3.mu_p_quotients(3)[0];
        let zero = [Scalar::Residue(0), Scalar::Residue(0)];
        let r = verify_cone_multiplicity(&plane.charts()[0], &f7, &zero, q3, 2).unwrap();
        assert_eq!(r.cone_normal, [0, 1, 1]);
        assert_eq!(r.tangent_normal, [0, 1, 1]);
        assert!(r.holds());
    }

    #[test]
    fn degree_slices() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(2, 0), [Monomial::one(2)]);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        assert!(monomials_of_degree(0, 1).is_empty());
    }
}
