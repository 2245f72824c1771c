//! Jacobian analysis at fixed points: tangent dimension, regularity and the
//! weight decomposition of the cotangent and normal spaces.
//!
//! Tangent (normal) weights are the negatives of coordinate-function weights.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::group::{CyclicQuotient, GroupElement};
use crate::linalg;
use crate::poly::WeightVector;
use crate::variety::Chart;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentReport {
    pub chart_dim: usize,
    pub jacobian_rank: usize,
    pub tangent_dim: usize,
    pub declared_dim: i64,
    pub regular: bool,
    /// Whether the point is fixed by the whole group; the weight maps below are
    /// then Γ-graded, otherwise graded by the μ_p quotient.
    pub fixed_by_group: bool,
    pub conormal: BTreeMap<GroupElement, usize>,
    pub cotangent: BTreeMap<GroupElement, usize>,
    /// d_0..d_{p-1}: normal weight dimensions under the quotient, if one was given.
    pub normal: Option<Vec<usize>>,
}

pub fn tangent_report(
    chart: &Chart,
    field: &Field,
    point: &[Scalar],
    pi: Option<&CyclicQuotient>,
    declared_dim: i64,
) -> Result<TangentReport> {
    let n = chart.nvars();
    if point.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: point.len(),
        });
    }
    let gens = chart
        .ideal()
        .gens()
        .iter()
        .map(|g| g.base_change(field))
        .collect::<Result<Vec<_>>>()?;
    if gens.iter().any(|g| !field.is_zero(&g.eval(point))) {
        return Err(Error::PointNotOnScheme);
    }
    let vanishes_off_zero = |w: &WeightVector| (0..n).all(|i| w.weight(i).is_zero() || field.is_zero(&point[i]));
    let full = chart.weights().clone();
    let fixed_by_group = vanishes_off_zero(&full);
    let grading = if fixed_by_group {
        full
    } else {
        match pi {
            Some(q) => {
                let pushed = chart.weights().push(q);
                if !vanishes_off_zero(&pushed) {
                    return Err(Error::PointNotFixed);
                }
                pushed
            }
            None => return Err(Error::PointNotFixed),
        }
    };
    let group = grading.group().clone();

    let mut blocks: BTreeMap<GroupElement, Vec<Vec<Scalar>>> = BTreeMap::new();
    let mut all_rows = Vec::new();
    for g in &gens {
        let Some(h) = grading.weight_of(g)? else {
            continue;
        };
        let grad: Vec<Scalar> = (0..n).map(|i| g.partial(i).eval(point)).collect();
        if let Some(i) = (0..n).find(|&i| !field.is_zero(&grad[i]) && grading.weight(i) != &h) {
            return Err(Error::Internal(format!(
                "gradient of {g} has a component along variable {i} of weight {} != {h}",
                grading.weight(i)
            )));
        }
        let cols: Vec<usize> = (0..n).filter(|&i| grading.weight(i) == &h).collect();
        blocks
            .entry(h)
            .or_default()
            .push(cols.iter().map(|&i| grad[i].clone()).collect());
        all_rows.push(grad);
    }
    let jacobian_rank = linalg::rank(field, n, all_rows);
    let mut conormal = BTreeMap::new();
    let mut cotangent = BTreeMap::new();
    for h in group.elements() {
        let count = (0..n).filter(|&i| grading.weight(i) == &h).count();
        let r = blocks.remove(&h).map_or(0, |rows| linalg::rank(field, count, rows));
        conormal.insert(h.clone(), r);
        cotangent.insert(h, count - r);
    }
    let block_sum: usize = conormal.values().sum();
    if block_sum != jacobian_rank {
        return Err(Error::Internal(format!(
            "Jacobian rank {jacobian_rank} differs from the sum {block_sum} of weight-block ranks"
        )));
    }
    let tangent_dim = n - jacobian_rank;
    let normal = pi.map(|q| {
        let p = q.p() as usize;
        let mut d = vec![0usize; p];
        for (h, &c) in &cotangent {
            let minus = group.neg(h);
            let target = if fixed_by_group { q.apply(&minus) } else { minus };
            d[target.components()[0] as usize] += c;
        }
        d
    });
    Ok(TangentReport {
        chart_dim: n,
        jacobian_rank,
        tangent_dim,
        declared_dim,
        regular: tangent_dim as i64 == declared_dim,
        fixed_by_group,
        conormal,
        cotangent,
        normal,
    })
}
