//! Serializable reports. Field order is fixed, maps are ordered, so the JSON
//! and text renderings are deterministic.

use std::collections::BTreeMap;

use rostfix::cone::ConeMultiplicityReport;
use rostfix::fixed::{DegNofixReport, Enumeration, FixedPoint};
use rostfix::rost::{Caveat, CongruenceReport, IsolatedReport, IsolatedVerdict, OddReport, Verdict};
use rostfix::CyclicQuotient;
use serde::Serialize;

use crate::corpus::LoadedEntry;
use crate::error::{CliError, ErrorKind};

#[derive(Debug, Serialize)]
pub struct Output {
    pub command: String,
    pub entries: Vec<EntryReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<Summary>,
}

#[derive(Debug, Default, Serialize)]
pub struct Summary {
    pub entries: usize,
    pub ok: usize,
    pub mismatches: usize,
    pub violations: usize,
    pub errors: usize,
}

#[derive(Debug, Default, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub provenance: String,
    pub field: String,
    pub group: Vec<u64>,
    pub ambient: String,
    pub p: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed_locus: Option<FixedLocusReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<PointsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<Vec<CongruenceJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient: Option<QuotientReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cone: Option<ConeReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deg_nofix: Option<DegNofixJson>,
}

impl EntryReport {
    pub fn header(e: &LoadedEntry) -> Self {
        EntryReport {
            name: e.entry.name.clone(),
            provenance: e.entry.provenance.clone(),
            field: e.model.field().to_string(),
            group: e.entry.group.clone(),
            ambient: e.entry.ambient.to_string(),
            p: e.entry.p,
            ..Default::default()
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorReport {
    pub kind: ErrorKind,
    pub message: String,
}

impl From<&CliError> for ErrorReport {
    fn from(e: &CliError) -> Self {
        ErrorReport {
            kind: e.kind(),
            message: e.to_string(),
        }
    }
}

/// Images of the generators of Γ, or `None` for the whole group.
pub fn subgroup_images(q: Option<&CyclicQuotient>) -> Option<Vec<u64>> {
    q.map(|q| q.images().to_vec())
}

#[derive(Debug, Serialize)]
pub struct PointJson {
    pub coordinates: String,
    pub chart: usize,
    pub residue_field: String,
    pub degree: usize,
    pub multiplicity: usize,
}

impl From<&FixedPoint> for PointJson {
    fn from(p: &FixedPoint) -> Self {
        PointJson {
            coordinates: p.ambient_text(),
            chart: p.chart,
            residue_field: p.field.to_string(),
            degree: p.degree,
            multiplicity: p.multiplicity,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FixedChartJson {
    /// Index of the nonvanishing coordinate; `None` for affine models.
    pub chart: Option<usize>,
    pub generators: Vec<String>,
    pub basis: Vec<String>,
    pub dimension: i64,
}

#[derive(Debug, Serialize)]
pub struct FixedLocusReport {
    pub subgroup: Option<Vec<u64>>,
    pub order: String,
    pub charts: Vec<FixedChartJson>,
    pub dimension: i64,
    pub empty: bool,
    pub finite: bool,
    pub everything: bool,
    pub points: Option<PointsReport>,
}

#[derive(Debug, Serialize)]
pub struct PointsReport {
    pub subgroup: Option<Vec<u64>>,
    pub scheme_degree: usize,
    pub counted_degree: usize,
    pub max_degree: usize,
    pub complete: bool,
    pub points: Vec<PointJson>,
}

impl PointsReport {
    pub fn new(q: Option<&CyclicQuotient>, en: &Enumeration) -> Self {
        PointsReport {
            subgroup: subgroup_images(q),
            scheme_degree: en.scheme_degree,
            counted_degree: en.counted_degree(),
            max_degree: en.max_degree,
            complete: en.complete,
            points: en.points.iter().map(PointJson::from).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PointRecordJson {
    pub point: PointJson,
    pub tangent_dim: usize,
    pub regular: bool,
    /// d_0..d_{p-1}
    pub normal: Vec<usize>,
    pub u: Option<u64>,
    pub u_flipped: Option<u64>,
    pub contribution: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct CongruenceJson {
    pub p: u64,
    pub subgroup: Vec<u64>,
    pub dimension: i64,
    pub fixed_dimension: i64,
    pub verdict: Verdict,
    pub flipped_verdict: Verdict,
    pub caveats: Vec<Caveat>,
    pub total: Option<u64>,
    pub flipped_total: Option<u64>,
    pub points: Vec<PointRecordJson>,
}

impl From<&CongruenceReport> for CongruenceJson {
    fn from(r: &CongruenceReport) -> Self {
        CongruenceJson {
            p: r.p,
            subgroup: r.quotient.images().to_vec(),
            dimension: r.dimension,
            fixed_dimension: r.fixed_dimension,
            verdict: r.verdict,
            flipped_verdict: rostfix::rost::flipped_verdict(r),
            caveats: r.caveats.clone(),
            total: r.total,
            flipped_total: r.flipped_total,
            points: r
                .points
                .iter()
                .map(|x| PointRecordJson {
                    point: PointJson::from(&x.point),
                    tangent_dim: x.tangent.tangent_dim,
                    regular: x.tangent.regular,
                    normal: x.normal().to_vec(),
                    u: x.u,
                    u_flipped: x.u_flipped,
                    contribution: x.contribution,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OddJson {
    pub subgroup: Vec<u64>,
    pub regular_degree: usize,
    pub verdict: Verdict,
}

impl From<&OddReport> for OddJson {
    fn from(r: &OddReport) -> Self {
        OddJson {
            subgroup: r.congruence.quotient.images().to_vec(),
            regular_degree: r.regular_degree,
            verdict: r.verdict,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct IsolatedJson {
    pub verdict: IsolatedVerdict,
    pub reasons: Vec<String>,
    pub fixed_dimension: i64,
    pub fixed_points: Vec<PointJson>,
}

impl From<&IsolatedReport> for IsolatedJson {
    fn from(r: &IsolatedReport) -> Self {
        IsolatedJson {
            verdict: r.verdict,
            reasons: r.reasons.clone(),
            fixed_dimension: r.fixed_dimension,
            fixed_points: r.fixed_points.iter().map(PointJson::from).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CosetJson {
    pub variable: usize,
    pub weight: String,
    pub constant: bool,
}

#[derive(Debug, Serialize)]
pub struct DegNofixJson {
    pub p: u64,
    pub dimension: usize,
    pub divisible: bool,
    pub hilbert: BTreeMap<String, usize>,
    pub coset_checks: Vec<CosetJson>,
}

impl From<&DegNofixReport> for DegNofixJson {
    fn from(r: &DegNofixReport) -> Self {
        DegNofixJson {
            p: r.p,
            dimension: r.dimension,
            divisible: r.divisible,
            hilbert: r.hilbert.iter().map(|(g, &d)| (g.to_string(), d)).collect(),
            coset_checks: r
                .coset_checks
                .iter()
                .map(|c| CosetJson {
                    variable: c.variable,
                    weight: c.weight.to_string(),
                    constant: c.constant,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Default, Serialize)]
pub struct VerifyReport {
    pub congruence: Vec<CongruenceJson>,
    pub th_odd: Vec<OddJson>,
    pub th_isolated: Option<IsolatedJson>,
    pub deg_nofix: Option<DegNofixJson>,
    pub fixed_locus: Option<String>,
    pub fixed_points: Option<Vec<String>>,
    pub quotient_relations: Option<Vec<String>>,
    pub violations: Vec<String>,
    pub mismatches: Vec<String>,
    pub ok: bool,
}

#[derive(Debug, Serialize)]
pub struct DictionaryJson {
    pub variable: String,
    pub monomial: String,
}

#[derive(Debug, Serialize)]
pub struct QuotientReport {
    pub generators: Vec<DictionaryJson>,
    pub relations: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ConeVariableJson {
    pub variable: String,
    pub weight: String,
    /// Chart coordinate, or the fixed-ideal generator a cone variable stands for.
    pub stands_for: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct ConeChartJson {
    pub chart: Option<usize>,
    pub variables: Vec<ConeVariableJson>,
    pub relations: Vec<String>,
    pub fixed_locus_agrees: bool,
}

#[derive(Debug, Serialize)]
pub struct ConePointJson {
    pub point: PointJson,
    pub chosen: Vec<usize>,
    pub tangent_normal: Vec<usize>,
    pub cone_normal: Vec<usize>,
    pub tangent_u: u64,
    pub cone_u: u64,
    pub agrees: bool,
}

impl ConePointJson {
    pub fn new(point: &FixedPoint, r: &ConeMultiplicityReport) -> Self {
        ConePointJson {
            point: PointJson::from(point),
            chosen: r.chosen.clone(),
            tangent_normal: r.tangent_normal.clone(),
            cone_normal: r.cone_normal.clone(),
            tangent_u: r.tangent_u,
            cone_u: r.cone_u,
            agrees: r.holds(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ConeReport {
    pub subgroup: Vec<u64>,
    pub charts: Vec<ConeChartJson>,
    pub points: Vec<ConePointJson>,
    /// Points skipped because they are not isolated regular fixed points.
    pub skipped: Vec<String>,
}
