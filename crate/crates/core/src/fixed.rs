//! Fixed loci of the full group and of its μ_p subgroups.
//!
//! On a chart the fixed ideal is the chart ideal plus every coordinate of
//! nonzero weight: a monomial of nonzero weight always contains such a
//! coordinate, so these generate the ideal of all nonzero-weight functions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::field::{Field, FieldKind, Scalar};
use crate::groebner::GradedIdeal;
use crate::group::{CyclicQuotient, GroupElement};
use crate::linalg;
use crate::poly::{MonomialOrder, Poly, WeightVector};
use crate::variety::{ActionModel, Chart};

pub const DEFAULT_SCAN_BUDGET: u128 = 2_000_000;

/// Chart ideal plus all variables of nonzero weight, graded by the (pushed) weights.
pub fn fixed_ideal(chart: &Chart, pi: Option<&CyclicQuotient>) -> Result<GradedIdeal> {
    let weights = match pi {
        Some(q) => chart.weights().push(q),
        None => chart.weights().clone(),
    };
    let ring = chart.ring();
    let mut gens: Vec<Poly> = chart.ideal().gens().to_vec();
    gens.extend(
        (0..ring.nvars())
            .filter(|&i| !weights.weight(i).is_zero())
            .map(|i| ring.var(i)),
    );
    GradedIdeal::with_config(ring, gens, weights, chart.ideal().config())
}

#[derive(Clone, Debug)]
pub struct FixedChart {
    /// Position of the chart in `ActionModel::charts`.
    pub chart: usize,
    pub ideal: GradedIdeal,
    pub dimension: i64,
}

impl FixedChart {
    /// Chart variables of weight zero; the only ones that can be nonzero at a fixed point.
    pub fn free_vars(&self) -> Vec<usize> {
        let w = self.ideal.weights();
        (0..w.len()).filter(|&i| w.weight(i).is_zero()).collect()
    }
}

#[derive(Clone, Debug)]
pub struct FixedPoint {
    pub chart: usize,
    /// Field over which `coords` are written: the residue field of the point.
    pub field: Field,
    pub coords: Vec<Scalar>,
    /// Ambient coordinates; for projective models the first nonzero one is 1.
    pub ambient: Vec<Scalar>,
    pub degree: usize,
    pub multiplicity: usize,
}

impl FixedPoint {
    pub fn ambient_text(&self) -> String {
        let parts: Vec<String> = self.ambient.iter().map(|c| c.to_string()).collect();
        parts.join(":")
    }
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub points: Vec<FixedPoint>,
    pub scheme_degree: usize,
    /// Whether Σ degree·multiplicity over `points` reaches the scheme degree.
    pub complete: bool,
    pub max_degree: usize,
}

impl Enumeration {
    pub fn counted_degree(&self) -> usize {
        self.points.iter().map(|p| p.degree * p.multiplicity).sum()
    }
}

/// Fixed subscheme of X under Diag(Γ) or under the μ_p selected by a quotient.
#[derive(Clone, Debug)]
pub struct FixedScheme {
    model: ActionModel,
    quotient: Option<CyclicQuotient>,
    charts: Vec<FixedChart>,
}

impl FixedScheme {
    pub fn new(model: &ActionModel, pi: Option<&CyclicQuotient>, exec: Execution) -> Result<Self> {
        let charts = model.charts();
        let results = exec.map_range(charts.len(), |k| -> Result<FixedChart> {
            let ideal = fixed_ideal(&charts[k], pi)?;
            let dimension = ideal.krull_dimension()?;
            Ok(FixedChart {
                chart: k,
                ideal,
                dimension,
            })
        });
        Ok(FixedScheme {
            model: model.clone(),
            quotient: pi.cloned(),
            charts: results.into_iter().collect::<Result<_>>()?,
        })
    }

    pub fn model(&self) -> &ActionModel {
        &self.model
    }

    pub fn quotient(&self) -> Option<&CyclicQuotient> {
        self.quotient.as_ref()
    }

    pub fn charts(&self) -> &[FixedChart] {
        &self.charts
    }

    pub fn is_finite(&self) -> bool {
        self.charts.iter().all(|c| c.dimension <= 0)
    }

    pub fn is_empty(&self) -> bool {
        self.charts.iter().all(|c| c.dimension < 0)
    }

    /// Dimension of the fixed locus (-1 when empty).
    pub fn dimension(&self) -> i64 {
        self.charts.iter().map(|c| c.dimension).max().unwrap_or(-1)
    }

    /// Whether the group acts trivially, so that X^G = X: all weights zero
    /// (affine) or all equal (projective).
    pub fn is_everything(&self) -> bool {
        let w = match &self.quotient {
            Some(q) => self.model.weights().push(q),
            None => self.model.weights().clone(),
        };
        let ws = w.weights();
        if self.model.ambient().is_projective() {
            ws.iter().all(|g| g == &ws[0])
        } else {
            ws.iter().all(|g| g.is_zero())
        }
    }

    /// Degree of the zero-dimensional fixed scheme, each point counted on its
    /// canonical chart only.
    pub fn scheme_degree(&self) -> Result<usize> {
        if !self.is_finite() {
            return Err(Error::FixedLocusNotFinite);
        }
        let charts = self.model.charts();
        let mut total = 0;
        for fc in &self.charts {
            if fc.dimension < 0 {
                continue;
            }
            let st = fc.ideal.staircase()?;
            total += st.truncated_length(&charts[fc.chart].preceding_vars());
        }
        Ok(total)
    }

    /// Closed points of the fixed scheme with degrees and multiplicities.
    pub fn enumerate(&self, max_degree: Option<usize>, scan_budget: u128, exec: Execution) -> Result<Enumeration> {
        let scheme_degree = self.scheme_degree()?;
        let field = self.model.field().clone();
        let (points, max_degree) = match field.kind() {
            FieldKind::Rationals => (self.rational_points(exec)?, 1),
            FieldKind::Prime { p } => {
                let maxdeg = max_degree.unwrap_or(scheme_degree);
                (self.finite_points(*p, maxdeg, scan_budget, exec)?, maxdeg)
            }
            FieldKind::Extension { .. } => {
                return Err(Error::Unsupported("a prime base field or the rationals".into()))
            }
        };
        let counted: usize = points.iter().map(|p| p.degree * p.multiplicity).sum();
        if counted > scheme_degree || (field.is_finite() && max_degree >= scheme_degree && counted != scheme_degree) {
            return Err(Error::Internal(format!(
                "enumerated points account for degree {counted}, scheme degree is {scheme_degree}"
            )));
        }
        Ok(Enumeration {
            complete: counted == scheme_degree,
            points,
            scheme_degree,
            max_degree,
        })
    }

    fn finite_points(&self, p: u64, maxdeg: usize, budget: u128, exec: Execution) -> Result<Vec<FixedPoint>> {
        let charts = self.model.charts();
        let live: Vec<&FixedChart> = self.charts.iter().filter(|c| c.dimension >= 0).collect();
        let mut scans: Vec<(usize, &FixedChart, Vec<usize>)> = Vec::new();
        let mut total: u128 = 0;
        for m in 1..=maxdeg {
            for fc in &live {
                let preceding = charts[fc.chart].preceding_vars();
                let free: Vec<usize> = fc.free_vars().into_iter().filter(|i| !preceding.contains(i)).collect();
                let count = (p as u128)
                    .checked_pow((m * free.len()) as u32)
                    .ok_or(Error::ScanBudget { limit: budget })?;
                total = total.saturating_add(count);
                if total > budget {
                    return Err(Error::ScanBudget { limit: budget });
                }
                scans.push((m, fc, free));
            }
        }
        let mut out = Vec::new();
        for (m, fc, free) in scans {
            let k = Field::extension(p, m)?;
            let gens = fc
                .ideal
                .gens()
                .iter()
                .map(|g| g.base_change(&k))
                .collect::<Result<Vec<_>>>()?;
            let q = k.order().expect("finite field");
            let count = q.pow(free.len() as u32);
            let n = fc.ideal.nvars();
            let found: Vec<Vec<Scalar>> = exec
                .map_range(count as usize, |idx| {
                    let mut coords = vec![k.zero(); n];
                    let mut rest = idx as u128;
                    for &i in &free {
                        coords[i] = k.element_from_index(rest % q);
                        rest /= q;
                    }
                    let on = gens.iter().all(|g| k.is_zero(&g.eval(&coords)));
                    (on && is_orbit_representative(&k, &coords, m)).then_some(coords)
                })
                .into_iter()
                .flatten()
                .collect();
            let pts = exec.map(&found, |coords| -> Result<FixedPoint> {
                let mult = multiplicity_at(&fc.ideal, &k, coords)?;
                let chart = &charts[fc.chart];
                Ok(FixedPoint {
                    chart: fc.chart,
                    field: k.clone(),
                    coords: coords.clone(),
                    ambient: chart.ambient_point(&k, coords),
                    degree: m,
                    multiplicity: mult,
                })
            });
            for pt in pts {
                out.push(pt?);
            }
        }
        Ok(out)
    }

    fn rational_points(&self, exec: Execution) -> Result<Vec<FixedPoint>> {
        let charts = self.model.charts();
        let field = self.model.field().clone();
        let per_chart = exec.map(&self.charts, |fc| -> Result<Vec<FixedPoint>> {
            if fc.dimension < 0 {
                return Ok(Vec::new());
            }
            let chart = &charts[fc.chart];
            let Some(candidates) = univariate_rational_solutions(&fc.ideal)? else {
                return Ok(Vec::new());
            };
            let preceding = chart.preceding_vars();
            let mut pts = Vec::new();
            for coords in candidates {
                if preceding.iter().any(|&i| !field.is_zero(&coords[i])) {
                    continue;
                }
                let mult = multiplicity_at(&fc.ideal, &field, &coords)?;
                pts.push(FixedPoint {
                    chart: fc.chart,
                    field: field.clone(),
                    ambient: chart.ambient_point(&field, &coords),
                    coords,
                    degree: 1,
                    multiplicity: mult,
                });
            }
            Ok(pts)
        });
        let mut out = Vec::new();
        for pts in per_chart {
            out.extend(pts?);
        }
        Ok(out)
    }
}

/// Whether the Frobenius orbit of `coords` has exactly m elements and `coords`
/// is its least member by element index.
fn is_orbit_representative(k: &Field, coords: &[Scalar], m: usize) -> bool {
    let key = |c: &[Scalar]| -> Vec<u128> { c.iter().map(|x| k.index_of(x)).collect() };
    let start = key(coords);
    let mut cur = coords.to_vec();
    for step in 1..=m {
        cur = cur.iter().map(|x| k.frobenius(x).expect("finite field")).collect();
        let kc = key(&cur);
        if kc == start {
            return step == m;
        }
        if kc < start {
            return false;
        }
    }
    false
}

/// Length of the local ring of `ideal` (base-changed to `k`) at `coords`.
pub fn multiplicity_at(ideal: &GradedIdeal, k: &Field, coords: &[Scalar]) -> Result<usize> {
    let ring = ideal.ring().with_field(k.clone());
    let gens = ideal
        .gens()
        .iter()
        .map(|g| g.base_change(k)?.translate(coords))
        .collect::<Result<Vec<_>>>()?;
    let local = GradedIdeal::with_config(&ring, gens, ideal.weights().clone(), ideal.config())?;
    local.local_multiplicity_at_origin()
}

/// Rational points of a zero-dimensional ideal over ℚ whose reduced lex basis
/// consists of univariate polynomials; `None` when the basis is not of that shape.
fn univariate_rational_solutions(ideal: &GradedIdeal) -> Result<Option<Vec<Vec<Scalar>>>> {
    let n = ideal.nvars();
    let field = ideal.field().clone();
    let basis = ideal.basis(MonomialOrder::Lex)?;
    let mut per_var: Vec<Option<Vec<Scalar>>> = vec![None; n];
    for b in basis.iter() {
        let support = b.support();
        if support.len() != 1 {
            return Ok(None);
        }
        let i = support[0];
        if per_var[i].is_some() {
            return Ok(None);
        }
        match rational_roots(b, i) {
            Some(roots) => per_var[i] = Some(roots.into_iter().map(Scalar::Rational).collect()),
            None => return Ok(None),
        }
    }
    let mut out: Vec<Vec<Scalar>> = vec![Vec::new()];
    for roots in per_var {
        let Some(roots) = roots else {
            return Ok(None);
        };
        out = out
            .into_iter()
            .flat_map(|prefix| {
                roots.iter().map(move |r| {
                    let mut v = prefix.clone();
                    v.push(r.clone());
                    v
                })
            })
            .collect();
    }
    let _ = field;
    Ok(Some(out))
}

const MAX_ROOT_TEST_COEFF: u64 = 1_000_000_000_000;

/// Rational roots of a univariate polynomial in variable `var`, by the rational
/// root test. `None` when coefficients are too large to factor by trial division.
fn rational_roots(f: &Poly, var: usize) -> Option<Vec<BigRational>> {
    let deg = f.terms().iter().map(|(m, _)| m.exp(var)).max()? as usize;
    let mut coeffs = vec![BigRational::zero(); deg + 1];
    for (m, c) in f.terms() {
        let Scalar::Rational(q) = c else {
            return None;
        };
        coeffs[m.exp(var) as usize] = q.clone();
    }
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|q| (q * BigRational::from(lcm.clone())).to_integer())
        .collect();
    let low = ints.iter().position(|c| !c.is_zero())?;
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(BigRational::zero());
    }
    let a0 = ints[low].abs().to_u64().filter(|&a| a <= MAX_ROOT_TEST_COEFF)?;
    let an = ints[deg].abs().to_u64().filter(|&a| a <= MAX_ROOT_TEST_COEFF)?;
    let eval = |x: &BigRational| -> BigRational {
        ints.iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from(c.clone()))
    };
    let mut seen = std::collections::BTreeSet::new();
    for num in divisors(a0) {
        for den in divisors(an) {
            for sign in [1i64, -1] {
                let r = BigRational::new(BigInt::from(sign) * BigInt::from(num), BigInt::from(den));
                if seen.insert(r.clone()) && eval(&r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Whether every chart fixed ideal is the unit ideal.
pub fn is_fixed_empty(model: &ActionModel, pi: Option<&CyclicQuotient>) -> Result<bool> {
    for chart in model.charts() {
        if !fixed_ideal(chart, pi)?.is_unit()? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Freeness of a finite graded algebra: all graded pieces have the dimension
/// of the degree-0 piece and every multiplication A_g × A_h → A_{g+h} is onto.
pub fn check_freeness_finite(ideal: &GradedIdeal) -> Result<bool> {
    let st = ideal.staircase()?;
    if st.is_empty() {
        return Ok(true);
    }
    let group = ideal.weights().group().clone();
    let elements = group.elements();
    let pieces: BTreeMap<GroupElement, Vec<usize>> = elements.iter().map(|g| (g.clone(), st.piece(g))).collect();
    let d0 = pieces[&group.zero()].len();
    if pieces.values().any(|v| v.len() != d0) {
        return Ok(false);
    }
    for g in &elements {
        for h in &elements {
            let target = &pieces[&group.add(g, h)];
            let products = pieces[g].iter().flat_map(|&a| pieces[h].iter().map(move |&b| (a, b)));
            let rows = products.map(|(a, b)| {
                let prod = &st.basis_element(a) * &st.basis_element(b);
                let coords = st.coords(&prod);
                target.iter().map(|&t| coords[t].clone()).collect::<Vec<_>>()
            });
            if linalg::rank(st.field(), target.len(), rows) != target.len() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetCheck {
    /// Variable that is a unit in A.
    pub variable: usize,
    pub weight: GroupElement,
    /// Whether the Hilbert function is constant on cosets of ⟨weight⟩.
    pub constant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegNofixReport {
    pub p: u64,
    pub dimension: usize,
    pub divisible: bool,
    pub hilbert: BTreeMap<GroupElement, usize>,
    pub coset_checks: Vec<CosetCheck>,
}

/// dim_k A ≡ 0 mod p for a finite graded algebra without fixed points under a p-group.
pub fn check_deg_nofix(ideal: &GradedIdeal, p: u64) -> Result<DegNofixReport> {
    let w: &WeightVector = ideal.weights();
    let group = w.group();
    if !group.is_p_group(p) {
        return Err(Error::InvalidGroup(format!("{group} is not a {p}-group")));
    }
    let ring = ideal.ring();
    let fixed = ideal.extend(
        (0..ring.nvars())
            .filter(|&i| !w.weight(i).is_zero())
            .map(|i| ring.var(i)),
    )?;
    if !fixed.is_unit()? {
        return Err(Error::FixedLocusNonEmpty);
    }
    let hilbert = ideal.graded_hilbert()?;
    let dimension: usize = hilbert.values().sum();
    let mut coset_checks = Vec::new();
    for i in 0..ring.nvars() {
        if !ideal.extend([ring.var(i)])?.is_unit()? {
            continue;
        }
        let g = w.weight(i).clone();
        let constant = hilbert.iter().all(|(a, &d)| hilbert[&group.add(a, &g)] == d);
        coset_checks.push(CosetCheck {
            variable: i,
            weight: g,
            constant,
        });
    }
    Ok(DegNofixReport {
        p,
        dimension,
        divisible: (dimension as u64).is_multiple_of(p),
        hilbert,
        coset_checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::AbelianGroup;
    use crate::poly::Ring;
    use crate::variety::Ambient;

    fn model(p: u64, group: &[u64], ambient: Ambient, w: &[Vec<i64>], gens: &[&str]) -> ActionModel {
        let field = if p == 0 {
            Field::rationals()
        } else {
            Field::prime(p).unwrap()
        };
        ActionModel::from_text(&field, &AbelianGroup::new(group.to_vec()).unwrap(), ambient, w, gens).unwrap()
    }

    fn points(m: &ActionModel, pi: Option<&CyclicQuotient>) -> Enumeration {
        FixedScheme::new(m, pi, Execution::Sequential)
            .unwrap()
            .enumerate(None, DEFAULT_SCAN_BUDGET, Execution::Sequential)
            .unwrap()
    }

    #[test]
    fn affine_line_fixes_the_origin() {
        let m = model(0, &[3], Ambient::Affine(1), &[vec![1]], &[]);
        let fi = fixed_ideal(&m.charts()[0], None).unwrap();
        assert_eq!(fi.gens()[0].to_string(), "x0");
        let e = points(&m, None);
        assert!(e.complete);
        assert_eq!(e.points.len(), 1);
        assert_eq!(e.points[0].multiplicity, 1);
        assert_eq!(e.scheme_degree, 1);
    }

    #[test]
    fn zero_weights_fix_everything() {
        let m = model(5, &[2], Ambient::Projective(1), &[vec![0], vec![0]], &[]);
        let fs = FixedScheme::new(&m, None, Execution::Sequential).unwrap();
        assert!(fs.is_everything());
        assert_eq!(fs.dimension(), 1);
        assert!(!is_fixed_empty(&m, None).unwrap());
    }

    #[test]
    fn klein_four_on_the_plane() {
        let m = model(
            5,
            &[2, 2],
            Ambient::Projective(2),
            &[vec![1, 0], vec![0, 1], vec![0, 0]],
            &[],
        );
        let e = points(&m, None);
        let texts: Vec<String> = e.points.iter().map(|p| p.ambient_text()).collect();
        assert_eq!(texts, ["1:0:0", "0:1:0", "0:0:1"]);
        assert_eq!(e.scheme_degree, 3);
    }

    #[test]
    fn projective_line_points() {
        let m = model(3, &[2], Ambient::Projective(1), &[vec![0], vec![1]], &[]);
        let e = points(&m, None);
        let texts: Vec<String> = e.points.iter().map(|p| p.ambient_text()).collect();
        assert_eq!(texts, ["1:0", "0:1"]);
        assert!(e.points.iter().all(|p| p.degree == 1 && p.multiplicity == 1));
    }

    #[test]
    fn conic_points_over_f3() {
        let m = model(
            3,
            &[2],
            Ambient::Projective(2),
            &[vec![1], vec![0], vec![0]],
            &["x0^2 + x1^2 - x2^2"],
        );
        let e = points(&m, None);
        let texts: Vec<String> = e.points.iter().map(|p| p.ambient_text()).collect();
        assert_eq!(texts, ["0:1:1", "0:1:2"]);
    }

    #[test]
    fn hyperplane_points_over_f7() {
        let m = model(7, &[3], Ambient::Projective(2), &[vec![0], vec![1], vec![2]], &["x0"]);
        let e = points(&m, None);
        let texts: Vec<String> = e.points.iter().map(|p| p.ambient_text()).collect();
        assert_eq!(texts, ["0:1:0", "0:0:1"]);
    }

    #[test]
    fn nonsplit_conic_has_a_degree_two_point() {
        // x0^2 + x1^2 + x2^2 with x0 of weight 1: fixed points satisfy x1^2 + x2^2 = 0,
        // which has no rational solution over F_3 but one closed point of degree 2.
        let m = model(
            3,
            &[2],
            Ambient::Projective(2),
            &[vec![1], vec![0], vec![0]],
            &["x0^2 + x1^2 + x2^2"],
        );
        let e = points(&m, None);
        assert_eq!(e.points.len(), 1);
        assert_eq!(e.points[0].degree, 2);
        assert_eq!(e.scheme_degree, 2);
    }

    #[test]
    fn fat_points_carry_multiplicity() {
        let m = model(5, &[2], Ambient::Projective(1), &[vec![0], vec![0]], &["x0^2"]);
        let e = points(&m, None);
        assert_eq!(e.points.len(), 1);
        assert_eq!(e.points[0].multiplicity, 2);
        assert_eq!(e.scheme_degree, 2);
    }

    #[test]
    fn freeness_examples() {
        let z2 = AbelianGroup::cyclic(2);
        let r = Ring::grevlex(Field::prime(5).unwrap(), 1);
        let w = WeightVector::from_ints(&z2, &[vec![1]]).unwrap();
        let a = GradedIdeal::new(&r, vec![r.parse("x0^2 - 2").unwrap()], w.clone()).unwrap();
        assert!(check_freeness_finite(&a).unwrap());
        let b = GradedIdeal::new(&r, vec![r.parse("x0^2").unwrap()], w).unwrap();
        assert!(!check_freeness_finite(&b).unwrap());
        let c = GradedIdeal::ungraded(&r, vec![r.parse("x0").unwrap()]).unwrap();
        assert!(check_freeness_finite(&c).unwrap());
    }

    #[test]
    fn deg_nofix_examples() {
        let z2 = AbelianGroup::cyclic(2);
        let r = Ring::grevlex(Field::prime(5).unwrap(), 1);
        let w = WeightVector::from_ints(&z2, &[vec![1]]).unwrap();
        let a = GradedIdeal::new(&r, vec![r.parse("x0^2 - 2").unwrap()], w).unwrap();
        let rep = check_deg_nofix(&a, 2).unwrap();
        assert_eq!(rep.dimension, 2);
        assert!(rep.divisible);
        assert_eq!(rep.hilbert.values().copied().collect::<Vec<_>>(), [1, 1]);
        assert!(rep.coset_checks[0].constant);

        let z3 = AbelianGroup::cyclic(3);
        let r7 = Ring::grevlex(Field::prime(7).unwrap(), 1);
        let w3 = WeightVector::from_ints(&z3, &[vec![1]]).unwrap();
        let b = GradedIdeal::new(&r7, vec![r7.parse("x0^3 - 1").unwrap()], w3.clone()).unwrap();
        let rep = check_deg_nofix(&b, 3).unwrap();
        assert_eq!(rep.dimension, 3);
        assert!(rep.divisible);

        let u = GradedIdeal::new(&r7, vec![r7.parse("1").unwrap()], w3.clone()).unwrap();
        assert_eq!(check_deg_nofix(&u, 3).unwrap().dimension, 0);

        let fixed = GradedIdeal::new(&r7, vec![r7.parse("x0^3").unwrap()], w3).unwrap();
        assert_eq!(check_deg_nofix(&fixed, 3).unwrap_err(), Error::FixedLocusNonEmpty);
    }

    #[test]
    fn rational_roots_by_the_root_test() {
        let r = Ring::grevlex(Field::rationals(), 1);
        let f = r.parse("2*x0^3 - 3*x0^2 - 2*x0").unwrap();
        let roots = rational_roots(&f, 0).unwrap();
        let texts: Vec<String> = roots.iter().map(|q| q.to_string()).collect();
        assert_eq!(texts, ["-1/2", "0", "2"]);
        assert!(rational_roots(&r.parse("x0^2 - 2").unwrap(), 0).unwrap().is_empty());
    }
}
