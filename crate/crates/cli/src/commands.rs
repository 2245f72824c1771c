//! Command implementations: each turns a loaded entry into a report section.

use std::fmt::Write as _;

use rostfix::cone::{associated_graded, verify_cone_fixed_locus, verify_cone_multiplicity};
use rostfix::fixed::{check_deg_nofix, fixed_ideal, FixedScheme, DEFAULT_SCAN_BUDGET};
use rostfix::quotient::{degree0_presentation, z_text};
use rostfix::rost::{
    flipped_verdict, verify_congruence, verify_th_isolated, verify_th_odd, IsolatedVerdict, Verdict, VerifyOptions,
};
use rostfix::{CyclicQuotient, Error, Execution, MonomialOrder};

use crate::corpus::{FixedKind, LoadedEntry};
use crate::error::CliError;
use crate::report::*;

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub max_ext_degree: Option<usize>,
    pub scan_budget: u128,
    pub order: MonomialOrder,
    pub exec: Execution,
    pub subgroup: Option<usize>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_ext_degree: None,
            scan_budget: DEFAULT_SCAN_BUDGET,
            order: MonomialOrder::GrevLex,
            exec: Execution::default(),
            subgroup: None,
        }
    }
}

impl Options {
    pub fn verify_options(&self) -> VerifyOptions {
        VerifyOptions {
            max_ext_degree: self.max_ext_degree,
            scan_budget: self.scan_budget,
            exec: self.exec,
        }
    }

    /// Quotient picked with `--subgroup`, or the whole group.
    fn selected(&self, e: &LoadedEntry) -> Result<Option<CyclicQuotient>, CliError> {
        match self.subgroup {
            Some(i) => Ok(e.quotients(Some(i))?.pop()),
            None => Ok(None),
        }
    }
}

fn order_name(o: MonomialOrder) -> String {
    match o {
        MonomialOrder::GrevLex => "grevlex".into(),
        MonomialOrder::Lex => "lex".into(),
        MonomialOrder::BlockElim(k) => format!("block({k})"),
    }
}

pub fn points(e: &LoadedEntry, o: &Options) -> Result<PointsReport, CliError> {
    let q = o.selected(e)?;
    let fs = FixedScheme::new(&e.model, q.as_ref(), o.exec)?;
    if !fs.is_finite() {
        return Err(Error::FixedLocusNotFinite.into());
    }
    let en = fs.enumerate(o.max_ext_degree, o.scan_budget, o.exec)?;
    Ok(PointsReport::new(q.as_ref(), &en))
}

pub fn fixed_locus(e: &LoadedEntry, o: &Options) -> Result<FixedLocusReport, CliError> {
    let q = o.selected(e)?;
    let fs = FixedScheme::new(&e.model, q.as_ref(), o.exec)?;
    let charts = fs
        .charts()
        .iter()
        .map(|fc| {
            Ok(FixedChartJson {
                chart: e.model.charts()[fc.chart].index(),
                generators: fc.ideal.gens().iter().map(|g| g.to_text()).collect(),
                basis: fc.ideal.basis(o.order)?.iter().map(|g| g.to_text()).collect(),
                dimension: fc.dimension,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let points = if fs.is_finite() {
        let en = fs.enumerate(o.max_ext_degree, o.scan_budget, o.exec)?;
        Some(PointsReport::new(q.as_ref(), &en))
    } else {
        None
    };
    Ok(FixedLocusReport {
        subgroup: subgroup_images(q.as_ref()),
        order: order_name(o.order),
        charts,
        dimension: fs.dimension(),
        empty: fs.is_empty(),
        finite: fs.is_finite(),
        everything: fs.is_everything(),
        points,
    })
}

pub fn multiplicity(e: &LoadedEntry, o: &Options) -> Result<Vec<CongruenceJson>, CliError> {
    let vo = o.verify_options();
    e.quotients(o.subgroup)?
        .iter()
        .map(|q| Ok(CongruenceJson::from(&verify_congruence(&e.model, q, &vo)?)))
        .collect()
}

pub fn quotient(e: &LoadedEntry, _o: &Options) -> Result<QuotientReport, CliError> {
    if e.model.ambient().is_projective() {
        return Err(Error::Unsupported("an affine model".into()).into());
    }
    let pres = degree0_presentation(e.model.ideal())?;
    Ok(QuotientReport {
        generators: pres
            .dictionary()
            .into_iter()
            .map(|(variable, monomial)| DictionaryJson { variable, monomial })
            .collect(),
        relations: pres.relation_basis()?.iter().map(z_text).collect(),
    })
}

pub fn deg_nofix(e: &LoadedEntry, _o: &Options) -> Result<DegNofixJson, CliError> {
    if e.model.ambient().is_projective() {
        return Err(Error::Unsupported("an affine model".into()).into());
    }
    Ok(DegNofixJson::from(&check_deg_nofix(e.model.ideal(), e.entry.p)?))
}

pub fn cone(e: &LoadedEntry, o: &Options) -> Result<ConeReport, CliError> {
    let q = e
        .quotients(o.subgroup)?
        .into_iter()
        .next()
        .ok_or_else(|| CliError::input(format!("{} has no quotient of order {}", e.group(), e.entry.p)))?;
    let mut charts = Vec::new();
    for chart in e.model.charts() {
        let ifix = fixed_ideal(chart, Some(&q))?;
        if ifix.is_unit()? {
            continue;
        }
        let pres = associated_graded(chart, &ifix)?;
        let nx = pres.nx();
        let variables = (0..pres.ring().nvars())
            .map(|i| ConeVariableJson {
                variable: pres.var_name(i),
                weight: pres.weights().weight(i).to_string(),
                stands_for: (i >= nx).then(|| pres.cone_generators()[i - nx].to_text()),
            })
            .collect();
        charts.push(ConeChartJson {
            chart: chart.index(),
            variables,
            relations: pres.ideal().gens().iter().map(|g| pres.text(g)).collect(),
            fixed_locus_agrees: verify_cone_fixed_locus(&pres, &ifix)?,
        });
    }
    let fs = FixedScheme::new(&e.model, Some(&q), o.exec)?;
    let mut points = Vec::new();
    let mut skipped = Vec::new();
    if fs.is_finite() {
        let dim = e.model.global_dimension()?;
        let en = fs.enumerate(o.max_ext_degree, o.scan_budget, o.exec)?;
        for pt in &en.points {
            let chart = &e.model.charts()[pt.chart];
            match verify_cone_multiplicity(chart, &pt.field, &pt.coords, &q, dim) {
                Ok(r) => points.push(ConePointJson::new(pt, &r)),
                Err(Error::Unsupported(_)) => skipped.push(pt.ambient_text()),
                Err(err) => return Err(err.into()),
            }
        }
    }
    Ok(ConeReport {
        subgroup: q.images().to_vec(),
        charts,
        points,
        skipped,
    })
}

fn fixed_kind(fs: &FixedScheme) -> FixedKind {
    if fs.is_empty() {
        FixedKind::Empty
    } else if fs.is_everything() {
        FixedKind::Everything
    } else if fs.is_finite() {
        FixedKind::Finite
    } else {
        FixedKind::PositiveDimensional
    }
}

fn kind_name(k: &FixedKind) -> String {
    serde_json::to_value(k).unwrap().as_str().unwrap().to_string()
}

/// Runs every applicable check and compares with the entry's expectations.
pub fn verify(e: &LoadedEntry, o: &Options) -> Result<VerifyReport, CliError> {
    let vo = o.verify_options();
    let p = e.entry.p;
    let model = &e.model;
    let mut r = VerifyReport::default();
    let quotients = e.quotients(o.subgroup)?;
    let all_quotients = quotients == model.group().mu_p_quotients(p);

    let isolated = if model.group().is_p_group(p) {
        Some(verify_th_isolated(model, p, &vo)?)
    } else {
        None
    };
    let congruences = match &isolated {
        Some(iso) if all_quotients => iso.congruences.clone(),
        _ => quotients
            .iter()
            .map(|q| verify_congruence(model, q, &vo))
            .collect::<Result<Vec<_>, _>>()?,
    };
    for c in &congruences {
        if c.verdict == Verdict::Fail {
            r.violations.push(format!(
                "congruence fails for subgroup {:?}: total {}",
                c.quotient.images(),
                c.total.unwrap_or_default()
            ));
        }
        if model.declared_equidimensional() && flipped_verdict(c) != c.verdict {
            r.violations.push(format!(
                "negating the weights changes the verdict for subgroup {:?}",
                c.quotient.images()
            ));
        }
        r.congruence.push(CongruenceJson::from(c));
    }
    if p == 2 {
        for q in &quotients {
            let odd = verify_th_odd(model, Some(q), &vo)?;
            if odd.verdict == Verdict::Fail {
                r.violations.push(format!(
                    "odd number ({}) of regular fixed points for subgroup {:?}",
                    odd.regular_degree,
                    q.images()
                ));
            }
            r.th_odd.push(OddJson::from(&odd));
        }
    }
    if let Some(iso) = &isolated {
        if iso.verdict == IsolatedVerdict::Violation {
            r.violations
                .push(format!("single regular fixed point: {}", iso.reasons.join("; ")));
        }
        r.th_isolated = Some(IsolatedJson::from(iso));
    }

    let exp = &e.entry.expected;
    let runs_deg_nofix = !model.ambient().is_projective()
        && model.group().is_p_group(p)
        && model.ideal().krull_dimension()? == 0
        && rostfix::fixed::is_fixed_empty(model, None)?;
    if runs_deg_nofix || exp.deg_nofix_dimension.is_some() {
        let d = check_deg_nofix(model.ideal(), p)?;
        if !d.divisible {
            r.violations
                .push(format!("dim_k A = {} is not divisible by {p}", d.dimension));
        }
        if let Some(c) = d.coset_checks.iter().find(|c| !c.constant) {
            r.violations.push(format!(
                "Hilbert function is not constant on cosets of the weight {} of unit x{}",
                c.weight, c.variable
            ));
        }
        r.deg_nofix = Some(DegNofixJson::from(&d));
    }

    let mut mismatch = |what: &str, want: String, got: String| {
        if want != got {
            r.mismatches.push(format!("{what}: expected {want}, got {got}"));
        }
    };
    if exp.fixed_locus.is_some() || exp.fixed_points.is_some() {
        let fs = FixedScheme::new(model, None, o.exec)?;
        let kind = fixed_kind(&fs);
        let pts: Option<Vec<String>> = if fs.is_finite() {
            let en = fs.enumerate(o.max_ext_degree, o.scan_budget, o.exec)?;
            let mut v: Vec<String> = en.points.iter().map(|x| x.ambient_text()).collect();
            v.sort();
            Some(v)
        } else {
            None
        };
        if let Some(k) = &exp.fixed_locus {
            mismatch("fixed locus", kind_name(k), kind_name(&kind));
        }
        if let Some(want) = &exp.fixed_points {
            let mut want = want.clone();
            want.sort();
            mismatch(
                "fixed points",
                format!("{want:?}"),
                format!("{:?}", pts.clone().unwrap_or_default()),
            );
        }
        r.fixed_locus = Some(kind_name(&kind));
        r.fixed_points = pts;
    }
    if let Some(spec) = &exp.congruence {
        if !spec.len_matches(congruences.len()) {
            mismatch(
                "number of congruence checks",
                format!("{spec:?}"),
                congruences.len().to_string(),
            );
        }
        for (i, c) in congruences.iter().enumerate() {
            if let Some(v) = spec.expected_for(i) {
                mismatch(&format!("congruence[{i}]"), v.to_string(), c.verdict.to_string());
            }
        }
    }
    if let Some(us) = &exp.u_values {
        let show = |u: Option<u64>| u.map_or_else(|| "-".to_string(), |u| u.to_string());
        let got: Vec<String> = congruences
            .first()
            .map(|c| c.points.iter().map(|x| show(x.u)).collect())
            .unwrap_or_default();
        let want: Vec<String> = us.iter().map(|&u| show(Some(u))).collect();
        mismatch(
            "u values",
            format!("[{}]", want.join(", ")),
            format!("[{}]", got.join(", ")),
        );
    }
    if let Some(spec) = &exp.th_odd {
        if r.th_odd.is_empty() || !spec.len_matches(r.th_odd.len()) {
            mismatch("parity checks", format!("{spec:?}"), r.th_odd.len().to_string());
        }
        let got: Vec<Verdict> = r.th_odd.iter().map(|o| o.verdict).collect();
        for (i, v) in got.iter().enumerate() {
            if let Some(want) = spec.expected_for(i) {
                mismatch(&format!("parity[{i}]"), want.to_string(), v.to_string());
            }
        }
    }
    if let Some(v) = exp.th_isolated {
        let got = r
            .th_isolated
            .as_ref()
            .map_or("not run".to_string(), |i| i.verdict.to_string());
        mismatch("isolated-point check", v.to_string(), got);
    }
    if let Some(d) = exp.deg_nofix_dimension {
        let got = r
            .deg_nofix
            .as_ref()
            .map_or("not run".to_string(), |x| x.dimension.to_string());
        mismatch("dim_k A", d.to_string(), got);
    }
    if let Some(want) = &exp.quotient_relations {
        let got = quotient(e, o)?.relations;
        mismatch("quotient relations", format!("{want:?}"), format!("{got:?}"));
        r.quotient_relations = Some(got);
    }
    r.ok = r.violations.is_empty() && r.mismatches.is_empty();
    Ok(r)
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or("-".into(), |v| v.to_string())
}

fn render_points(out: &mut String, p: &PointsReport) {
    let _ = writeln!(
        out,
        "scheme degree {}, counted {}, residue degrees up to {}{}",
        p.scheme_degree,
        p.counted_degree,
        p.max_degree,
        if p.complete { "" } else { " (incomplete)" }
    );
    for pt in &p.points {
        let _ = writeln!(
            out,
            "  [{}]  degree {}  multiplicity {}  over {}",
            pt.coordinates, pt.degree, pt.multiplicity, pt.residue_field
        );
    }
}

fn render_congruence(out: &mut String, c: &CongruenceJson) {
    let _ = writeln!(
        out,
        "subgroup {:?} (p = {}): {}  total {}  negated {}",
        c.subgroup,
        c.p,
        c.verdict,
        opt(c.total),
        opt(c.flipped_total)
    );
    for x in &c.points {
        let _ = writeln!(
            out,
            "  [{}]  degree {}  d = {:?}  u = {}  contribution {}{}",
            x.point.coordinates,
            x.point.degree,
            x.normal,
            opt(x.u),
            opt(x.contribution),
            if x.regular { "" } else { "  (not regular)" }
        );
    }
    if !c.caveats.is_empty() {
        let cs: Vec<String> = c.caveats.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(out, "  caveats: {}", cs.join(", "));
    }
}

/// Human-readable rendering of one entry.
pub fn render_entry(r: &EntryReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "== {} ({}; {} over {}, group {:?}, p = {}) ==",
        r.name, r.provenance, r.ambient, r.field, r.group, r.p
    );
    if let Some(err) = &r.error {
        let _ = writeln!(out, "error: {}", err.message);
    }
    if let Some(f) = &r.fixed_locus {
        if f.everything {
            let _ = writeln!(out, "fixed locus = X");
        }
        let list = |v: &[String]| if v.is_empty() { "0".to_string() } else { v.join(", ") };
        for c in &f.charts {
            let _ = writeln!(
                out,
                "chart {}: ({})  dim {}  {} basis: {}",
                opt(c.chart),
                list(&c.generators),
                c.dimension,
                f.order,
                list(&c.basis)
            );
        }
        let shape = if f.everything {
            "everything"
        } else if f.empty {
            "empty"
        } else if f.finite {
            "finite"
        } else {
            "positive-dimensional"
        };
        let _ = writeln!(out, "fixed locus: {shape}, dimension {}", f.dimension);
        if let Some(p) = &f.points {
            render_points(&mut out, p);
        }
    }
    if let Some(p) = &r.points {
        render_points(&mut out, p);
    }
    if let Some(cs) = &r.multiplicity {
        for c in cs {
            render_congruence(&mut out, c);
        }
    }
    if let Some(q) = &r.quotient {
        let _ = writeln!(out, "generators:");
        for g in &q.generators {
            let _ = writeln!(out, "  {} = {}", g.variable, g.monomial);
        }
        let _ = writeln!(out, "relations:");
        for rel in &q.relations {
            let _ = writeln!(out, "  {rel}");
        }
    }
    if let Some(c) = &r.cone {
        let _ = writeln!(out, "subgroup {:?}", c.subgroup);
        for ch in &c.charts {
            let _ = writeln!(
                out,
                "chart {}: fixed loci agree: {}",
                opt(ch.chart),
                ch.fixed_locus_agrees
            );
            for v in &ch.variables {
                let _ = writeln!(
                    out,
                    "  {}  weight {}{}",
                    v.variable,
                    v.weight,
                    v.stands_for.as_ref().map_or(String::new(), |s| format!("  = {s}"))
                );
            }
            for rel in &ch.relations {
                let _ = writeln!(out, "  {rel}");
            }
        }
        for pt in &c.points {
            let _ = writeln!(
                out,
                "  [{}]  tangent d = {:?}  cone d = {:?}  u = {} / {}  {}",
                pt.point.coordinates,
                pt.tangent_normal,
                pt.cone_normal,
                pt.tangent_u,
                pt.cone_u,
                if pt.agrees { "agree" } else { "DIFFER" }
            );
        }
        for s in &c.skipped {
            let _ = writeln!(out, "  [{s}]  skipped (not an isolated regular fixed point)");
        }
    }
    if let Some(d) = &r.deg_nofix {
        let hil: Vec<String> = d.hilbert.iter().map(|(g, n)| format!("{g}:{n}")).collect();
        let _ = writeln!(
            out,
            "dim_k A = {}  divisible by {}: {}  Hilbert function {{{}}}",
            d.dimension,
            d.p,
            d.divisible,
            hil.join(", ")
        );
        for c in &d.coset_checks {
            let _ = writeln!(
                out,
                "  unit x{} of weight {}: constant on cosets: {}",
                c.variable, c.weight, c.constant
            );
        }
    }
    if let Some(v) = &r.verify {
        for c in &v.congruence {
            render_congruence(&mut out, c);
        }
        for o in &v.th_odd {
            let _ = writeln!(
                out,
                "parity, subgroup {:?}: {} (regular fixed degree {})",
                o.subgroup, o.verdict, o.regular_degree
            );
        }
        if let Some(i) = &v.th_isolated {
            let _ = writeln!(out, "isolated point: {} ({})", i.verdict, i.reasons.join("; "));
        }
        for m in &v.violations {
            let _ = writeln!(out, "VIOLATION: {m}");
        }
        for m in &v.mismatches {
            let _ = writeln!(out, "MISMATCH: {m}");
        }
        let _ = writeln!(out, "{}", if v.ok { "ok" } else { "FAILED" });
    }
    out
}
