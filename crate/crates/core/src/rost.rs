//! Rost multiplicities, the mod-p fixed-point congruence, and the two
//! non-existence statements checked on concrete models.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::field::{Field, Scalar};
use crate::fixed::{FixedPoint, FixedScheme, DEFAULT_SCAN_BUDGET};
use crate::group::CyclicQuotient;
use crate::localgeom::{tangent_report, TangentReport};
use crate::variety::ActionModel;

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Largest residue degree scanned; `None` means the fixed scheme degree.
    pub max_ext_degree: Option<usize>,
    pub scan_budget: u128,
    pub exec: Execution,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_ext_degree: None,
            scan_budget: DEFAULT_SCAN_BUDGET,
            exec: Execution::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    Partial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IsolatedVerdict {
    Consistent,
    Violation,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Caveat {
    /// Equidimensionality and the absence of 0-dimensional components are taken on trust.
    HypothesesAsDeclared,
    NotProjective,
    DimensionBelowOne,
    NotDeclaredEquidimensional,
    FixedLocusNotFinite,
    PartialEnumeration,
    NonRegularPoints,
}

impl Caveat {
    /// Whether the caveat removes a hypothesis of the congruence.
    pub fn invalidates(&self) -> bool {
        !matches!(self, Caveat::HypothesesAsDeclared | Caveat::PartialEnumeration)
    }
}

macro_rules! display_via_serde {
    ($($t:ty),*) => {$(
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let s = serde_json::to_value(self).expect("unit variant");
                f.write_str(s.as_str().expect("string"))
            }
        }
    )*};
}
display_via_serde!(Verdict, IsolatedVerdict, Caveat);

/// u = ∏_{i ≠ 0} i^{-d_i} in F_p^×, for d = (d_0, ..., d_{p-1}) with d_0 = 0.
pub fn local_multiplicity(d: &[usize], p: u64) -> Result<u64> {
    if d.len() != p as usize {
        return Err(Error::ArityMismatch {
            expected: p as usize,
            found: d.len(),
        });
    }
    if d[0] != 0 {
        return Err(Error::InvalidWeights(
            "weight-0 normal directions make the point non-isolated".into(),
        ));
    }
    let f = Field::prime(p)?;
    let mut prod = f.one();
    for (i, &di) in d.iter().enumerate().skip(1) {
        prod = f.mul(&prod, &f.pow(&Scalar::Residue(i as u64), di as u64));
    }
    let u = f.inv(&prod)?;
    Ok(f.as_residue(&u).expect("prime field"))
}

/// Normal weights under the opposite sign convention: d'_i = d_{-i}.
pub fn flip_convention(d: &[usize]) -> Vec<usize> {
    let p = d.len();
    (0..p).map(|i| d[(p - i) % p]).collect()
}

#[derive(Clone, Debug)]
pub struct PointRecord {
    pub point: FixedPoint,
    pub tangent: TangentReport,
    /// Present when the point is regular on X.
    pub u: Option<u64>,
    pub u_flipped: Option<u64>,
    pub contribution: Option<u64>,
}

impl PointRecord {
    pub fn normal(&self) -> &[usize] {
        self.tangent.normal.as_deref().unwrap_or(&[])
    }
}

#[derive(Clone, Debug)]
pub struct CongruenceReport {
    pub p: u64,
    pub quotient: CyclicQuotient,
    pub dimension: i64,
    pub fixed_dimension: i64,
    pub points: Vec<PointRecord>,
    /// Σ deg(x)·u(x) mod p over regular points; `None` without a finite fixed locus.
    pub total: Option<u64>,
    /// The same sum with every normal weight negated.
    pub flipped_total: Option<u64>,
    pub verdict: Verdict,
    pub caveats: Vec<Caveat>,
}

impl CongruenceReport {
    /// Σ deg(x) over regular points.
    pub fn regular_degree(&self) -> usize {
        self.points
            .iter()
            .filter(|r| r.tangent.regular)
            .map(|r| r.point.degree)
            .sum()
    }
}

fn verdict_from(caveats: &[Caveat], total: Option<u64>) -> Verdict {
    if caveats.iter().any(Caveat::invalidates) {
        return Verdict::Inconclusive;
    }
    if caveats.contains(&Caveat::PartialEnumeration) {
        return Verdict::Partial;
    }
    match total {
        Some(0) => Verdict::Pass,
        Some(_) => Verdict::Fail,
        None => Verdict::Inconclusive,
    }
}

fn point_report(model: &ActionModel, pt: &FixedPoint, pi: &CyclicQuotient, dim: i64) -> Result<TangentReport> {
    let charts = model.charts();
    let t = tangent_report(&charts[pt.chart], &pt.field, &pt.coords, Some(pi), dim)?;
    // residue degree >= 2: a Galois conjugate must give the same weights
    if pt.degree >= 2 {
        let conj: Vec<Scalar> = pt.coords.iter().map(|x| pt.field.frobenius(x)).collect::<Result<_>>()?;
        let t2 = tangent_report(&charts[pt.chart], &pt.field, &conj, Some(pi), dim)?;
        if t2.normal != t.normal || t2.tangent_dim != t.tangent_dim {
            return Err(Error::Internal(
                "normal weights differ between Galois conjugates".into(),
            ));
        }
    }
    // the same point seen from another chart must give the same weights
    let nonzero: Vec<usize> = (0..pt.ambient.len())
        .filter(|&i| !pt.field.is_zero(&pt.ambient[i]))
        .collect();
    if model.ambient().is_projective() && nonzero.len() >= 2 {
        let k = *nonzero.last().unwrap();
        let other = &charts[k];
        let coords = other.chart_point(&pt.field, &pt.ambient)?;
        let t3 = tangent_report(other, &pt.field, &coords, Some(pi), dim)?;
        if t3.normal != t.normal {
            return Err(Error::Internal(format!(
                "normal weights at {} differ between charts {} and {k}",
                pt.ambient_text(),
                pt.chart
            )));
        }
    }
    Ok(t)
}

/// Σ_x [k(x):k]·u(x) in F_p over the μ_p-fixed points selected by `pi`.
pub fn verify_congruence(model: &ActionModel, pi: &CyclicQuotient, opts: &VerifyOptions) -> Result<CongruenceReport> {
    let p = pi.p();
    let mut caveats = vec![Caveat::HypothesesAsDeclared];
    if !model.ambient().is_projective() {
        caveats.push(Caveat::NotProjective);
    }
    let dimension = model.global_dimension()?;
    if dimension < 1 {
        caveats.push(Caveat::DimensionBelowOne);
    }
    if !model.declared_equidimensional() {
        caveats.push(Caveat::NotDeclaredEquidimensional);
    }
    let fs = FixedScheme::new(model, Some(pi), opts.exec)?;
    let mut report = CongruenceReport {
        p,
        quotient: pi.clone(),
        dimension,
        fixed_dimension: fs.dimension(),
        points: Vec::new(),
        total: None,
        flipped_total: None,
        verdict: Verdict::Inconclusive,
        caveats: Vec::new(),
    };
    if !fs.is_finite() {
        caveats.push(Caveat::FixedLocusNotFinite);
        report.verdict = verdict_from(&caveats, None);
        report.caveats = caveats;
        return Ok(report);
    }
    let en = fs.enumerate(opts.max_ext_degree, opts.scan_budget, opts.exec)?;
    if !en.complete {
        caveats.push(Caveat::PartialEnumeration);
    }
    let f = Field::prime(p)?;
    let tangents = opts.exec.map(&en.points, |pt| point_report(model, pt, pi, dimension));
    let mut total = f.zero();
    let mut flipped = f.zero();
    for (pt, t) in en.points.into_iter().zip(tangents) {
        let t = t?;
        let d = t.normal.clone().expect("quotient given");
        let (u, u_flipped, contribution) = if t.regular {
            if d[0] != 0 {
                return Err(Error::Internal(format!(
                    "regular isolated fixed point {} has weight-0 normal directions",
                    pt.ambient_text()
                )));
            }
            let u = local_multiplicity(&d, p)?;
            let uf = local_multiplicity(&flip_convention(&d), p)?;
            let deg = Scalar::Residue(pt.degree as u64 % p);
            let c = f.mul(&deg, &Scalar::Residue(u));
            total = f.add(&total, &c);
            flipped = f.add(&flipped, &f.mul(&deg, &Scalar::Residue(uf)));
            (Some(u), Some(uf), f.as_residue(&c))
        } else {
            if !caveats.contains(&Caveat::NonRegularPoints) {
                caveats.push(Caveat::NonRegularPoints);
            }
            (None, None, None)
        };
        report.points.push(PointRecord {
            point: pt,
            tangent: t,
            u,
            u_flipped,
            contribution,
        });
    }
    let total = f.as_residue(&total).unwrap();
    let flipped = f.as_residue(&flipped).unwrap();
    // u changes by (-1)^{tangent dim} under negation, a constant when X is equidimensional
    if model.declared_equidimensional() && !caveats.contains(&Caveat::NonRegularPoints) && dimension >= 0 {
        let sign = if dimension % 2 == 0 { 1 } else { p - 1 };
        if flipped != (total * sign) % p {
            return Err(Error::Internal(
                "negated weights do not rescale the congruence sum".into(),
            ));
        }
    }
    report.total = Some(total);
    report.flipped_total = Some(flipped);
    report.verdict = verdict_from(&caveats, Some(total));
    report.caveats = caveats;
    Ok(report)
}

/// Verdict obtained by re-evaluating a report with every normal weight negated.
pub fn flipped_verdict(report: &CongruenceReport) -> Verdict {
    verdict_from(&report.caveats, report.flipped_total)
}

#[derive(Clone, Debug)]
pub struct OddReport {
    pub congruence: CongruenceReport,
    /// Σ deg(x) over regular fixed points.
    pub regular_degree: usize,
    pub verdict: Verdict,
}

/// For μ_2: the regular fixed points, counted by degree, are even in number.
pub fn verify_th_odd(model: &ActionModel, pi: Option<&CyclicQuotient>, opts: &VerifyOptions) -> Result<OddReport> {
    let q = match pi {
        Some(q) => q.clone(),
        None => {
            let qs = model.group().mu_p_quotients(2);
            match qs.len() {
                1 => qs[0].clone(),
                0 => return Err(Error::InvalidQuotient("the group has no quotient of order 2".into())),
                _ => {
                    return Err(Error::InvalidQuotient(
                        "the group has several quotients of order 2; select one".into(),
                    ))
                }
            }
        }
    };
    if q.p() != 2 {
        return Err(Error::InvalidQuotient("the parity check needs p = 2".into()));
    }
    let congruence = verify_congruence(model, &q, opts)?;
    let regular_degree = congruence.regular_degree();
    let verdict = match congruence.verdict {
        Verdict::Pass | Verdict::Fail => {
            if regular_degree % 2 == 0 {
                Verdict::Pass
            } else {
                Verdict::Fail
            }
        }
        v => v,
    };
    if verdict != congruence.verdict {
        return Err(Error::Internal("parity and the p = 2 congruence disagree".into()));
    }
    Ok(OddReport {
        congruence,
        regular_degree,
        verdict,
    })
}

#[derive(Clone, Debug)]
pub struct IsolatedReport {
    pub p: u64,
    pub verdict: IsolatedVerdict,
    pub reasons: Vec<String>,
    /// Closed points of X^G (empty when X^G is not finite).
    pub fixed_points: Vec<FixedPoint>,
    pub fixed_dimension: i64,
    pub congruences: Vec<CongruenceReport>,
}

/// X^G is never a single regular closed point of degree prime to p.
pub fn verify_th_isolated(model: &ActionModel, p: u64, opts: &VerifyOptions) -> Result<IsolatedReport> {
    let mut reasons = Vec::new();
    let mut hypotheses_ok = true;
    if !model.group().is_p_group(p) {
        reasons.push(format!("{} is not a {p}-group", model.group()));
        hypotheses_ok = false;
    }
    if !model.ambient().is_projective() {
        reasons.push("model is not projective".into());
        hypotheses_ok = false;
    }
    let dimension = model.global_dimension()?;
    if dimension < 1 {
        reasons.push(format!("dimension {dimension} is below 1"));
        hypotheses_ok = false;
    }
    if !model.declared_equidimensional() {
        reasons.push("not declared equidimensional".into());
        hypotheses_ok = false;
    }
    let fs = FixedScheme::new(model, None, opts.exec)?;
    let mut fixed_points = Vec::new();
    let mut verdict = IsolatedVerdict::Consistent;
    if !fs.is_finite() {
        reasons.push(format!("fixed locus has dimension {}", fs.dimension()));
    } else {
        let en = fs.enumerate(opts.max_ext_degree, opts.scan_budget, opts.exec)?;
        fixed_points = en.points.clone();
        match (en.complete, fixed_points.len()) {
            (_, n) if n >= 2 => reasons.push(format!("fixed locus has {n} closed points")),
            (false, _) => {
                reasons.push("fixed points could not be enumerated completely".into());
                verdict = IsolatedVerdict::Inconclusive;
            }
            (true, 0) => reasons.push("fixed locus is empty".into()),
            (true, _) => {
                let pt = &fixed_points[0];
                let chart = &model.charts()[pt.chart];
                let t = tangent_report(chart, &pt.field, &pt.coords, None, dimension)?;
                let prime_to_p = !(pt.degree as u64).is_multiple_of(p);
                if t.regular && prime_to_p {
                    verdict = IsolatedVerdict::Violation;
                    reasons.push(format!(
                        "single regular fixed point {} of degree {} prime to {p}",
                        pt.ambient_text(),
                        pt.degree
                    ));
                } else if !t.regular {
                    reasons.push(format!("the single fixed point {} is not regular", pt.ambient_text()));
                } else {
                    reasons.push(format!(
                        "the single fixed point has degree {} divisible by {p}",
                        pt.degree
                    ));
                }
            }
        }
    }
    if !hypotheses_ok {
        verdict = IsolatedVerdict::Inconclusive;
    }
    let congruences = model
        .group()
        .mu_p_quotients(p)
        .iter()
        .map(|q| verify_congruence(model, q, opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(IsolatedReport {
        p,
        verdict,
        reasons,
        fixed_points,
        fixed_dimension: fs.dimension(),
        congruences,
    })
}
