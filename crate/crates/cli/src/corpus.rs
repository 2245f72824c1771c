//! Corpus entries: one JSON document per file, strictly validated.

use std::fs;
use std::path::{Path, PathBuf};

use rostfix::rost::{IsolatedVerdict, Verdict};
use rostfix::variety::Ambient;
use rostfix::{AbelianGroup, ActionModel, CyclicQuotient, Error, Field, GroebnerConfig, Ring, WeightVector};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldSpec {
    Rationals,
    Prime { p: u64 },
    Extension { p: u64, degree: usize },
}

impl FieldSpec {
    pub fn build(&self) -> rostfix::Result<Field> {
        match *self {
            FieldSpec::Rationals => Ok(Field::rationals()),
            FieldSpec::Prime { p } => Field::prime(p),
            FieldSpec::Extension { p, degree } => Field::extension(p, degree),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum FixedKind {
    Empty,
    Finite,
    PositiveDimensional,
    Everything,
}

/// A verdict for every selected quotient, or one verdict per quotient in order.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum VerdictSpec {
    All(Verdict),
    Each(Vec<Verdict>),
}

impl VerdictSpec {
    pub fn expected_for(&self, idx: usize) -> Option<Verdict> {
        match self {
            VerdictSpec::All(v) => Some(*v),
            VerdictSpec::Each(vs) => vs.get(idx).copied(),
        }
    }

    pub fn len_matches(&self, n: usize) -> bool {
        match self {
            VerdictSpec::All(_) => true,
            VerdictSpec::Each(vs) => vs.len() == n,
        }
    }
}

/// Annotations checked by `verify`; every field is optional.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    /// Shape of the fixed locus of the whole group.
    #[serde(default)]
    pub fixed_locus: Option<FixedKind>,
    /// Closed points of the fixed locus of the whole group, as ambient coordinates "a:b:c".
    #[serde(default)]
    pub fixed_points: Option<Vec<String>>,
    #[serde(default)]
    pub congruence: Option<VerdictSpec>,
    /// Local multiplicities, in point order, for the first selected quotient.
    #[serde(default)]
    pub u_values: Option<Vec<u64>>,
    #[serde(default)]
    pub th_odd: Option<VerdictSpec>,
    #[serde(default)]
    pub th_isolated: Option<IsolatedVerdict>,
    #[serde(default)]
    pub deg_nofix_dimension: Option<usize>,
    /// Reduced Gröbner basis of the invariant-ring relations, in z variables.
    #[serde(default)]
    pub quotient_relations: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    pub field: FieldSpec,
    pub group: Vec<u64>,
    pub ambient: Ambient,
    pub weights: Vec<Vec<i64>>,
    pub generators: Vec<String>,
    pub p: u64,
    #[serde(default)]
    pub subgroup: Option<Vec<i64>>,
    pub declared_equidimensional: bool,
    #[serde(default)]
    pub comment: String,
    /// Which worked example the entry instantiates, or "synthetic".
    pub provenance: String,
    #[serde(default)]
    pub expected: Expected,
}

/// A parsed entry together with the objects built from it.
#[derive(Clone, Debug)]
pub struct LoadedEntry {
    pub path: Option<PathBuf>,
    pub entry: CorpusEntry,
    pub model: ActionModel,
    /// Quotient from the entry's `subgroup` field, if present.
    pub subgroup: Option<CyclicQuotient>,
}

impl LoadedEntry {
    pub fn group(&self) -> &AbelianGroup {
        self.model.group()
    }

    /// Quotients selected by the entry or the command line (`index` into the
    /// list of all order-p quotients), defaulting to all of them.
    pub fn quotients(&self, index: Option<usize>) -> Result<Vec<CyclicQuotient>, CliError> {
        let all = self.group().mu_p_quotients(self.entry.p);
        if let Some(i) = index {
            return all.get(i).cloned().map(|q| vec![q]).ok_or_else(|| {
                CliError::input(format!(
                    "subgroup index {i} out of range: {} has {} quotient(s) of order {}",
                    self.group(),
                    all.len(),
                    self.entry.p
                ))
            });
        }
        Ok(match &self.subgroup {
            Some(q) => vec![q.clone()],
            None => all,
        })
    }
}

fn schema_err(pointer: impl Into<String>, e: impl ToString) -> CliError {
    CliError::Core(Error::Schema {
        pointer: pointer.into(),
        message: e.to_string(),
    })
}

/// Parses and validates an entry from JSON text.
pub fn parse_entry(text: &str, config: GroebnerConfig) -> Result<LoadedEntry, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let entry: CorpusEntry = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let pointer = if path == "." {
            String::new()
        } else {
            format!("/{}", path.replace(['.', '['], "/").replace(']', ""))
        };
        schema_err(pointer, e.into_inner())
    })?;
    build(entry, config)
}

fn build(entry: CorpusEntry, config: GroebnerConfig) -> Result<LoadedEntry, CliError> {
    if entry.name.is_empty() {
        return Err(schema_err("/name", "must not be empty"));
    }
    if entry.provenance.is_empty() {
        return Err(schema_err("/provenance", "must not be empty"));
    }
    let field = entry.field.build().map_err(|e| schema_err("/field", e))?;
    let group = AbelianGroup::new(entry.group.clone()).map_err(|e| schema_err("/group", e))?;
    if !rostfix::field::is_prime(entry.p) {
        return Err(schema_err("/p", Error::NotPrime(entry.p)));
    }
    let n = entry.ambient.coordinates();
    if entry.weights.len() != n {
        return Err(schema_err(
            "/weights",
            format!(
                "expected {n} weight vectors for {}, found {}",
                entry.ambient,
                entry.weights.len()
            ),
        ));
    }
    for (i, w) in entry.weights.iter().enumerate() {
        if w.len() != group.rank() {
            return Err(schema_err(
                format!("/weights/{i}"),
                format!("expected {} components, found {}", group.rank(), w.len()),
            ));
        }
    }
    let weights = WeightVector::from_ints(&group, &entry.weights).map_err(|e| schema_err("/weights", e))?;
    let ring = Ring::grevlex(field, n);
    let mut gens = Vec::with_capacity(entry.generators.len());
    for (i, g) in entry.generators.iter().enumerate() {
        gens.push(ring.parse(g).map_err(|e| schema_err(format!("/generators/{i}"), e))?);
    }
    let model = ActionModel::new(
        entry.name.clone(),
        &ring,
        entry.ambient,
        weights,
        gens,
        entry.declared_equidimensional,
        config,
    )
    .map_err(|e| match e {
        Error::NonHomogeneous { generator, .. } | Error::NotDegreeHomogeneous(generator) => {
            schema_err(format!("/generators/{generator}"), e)
        }
        other => CliError::Core(other),
    })?;
    let subgroup = match &entry.subgroup {
        Some(images) => {
            Some(CyclicQuotient::new(&group, entry.p, images.clone()).map_err(|e| schema_err("/subgroup", e))?)
        }
        None => None,
    };
    Ok(LoadedEntry {
        path: None,
        entry,
        model,
        subgroup,
    })
}

pub fn load_entry(path: &Path, config: GroebnerConfig) -> Result<LoadedEntry, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let mut loaded = parse_entry(&text, config).map_err(|e| e.in_file(path))?;
    loaded.path = Some(path.to_path_buf());
    Ok(loaded)
}

/// All `*.json` files of a directory, sorted by entry name.
pub fn load_dir(dir: &Path, config: GroebnerConfig) -> Result<Vec<LoadedEntry>, CliError> {
    let mut entries = Vec::new();
    for path in json_files(dir)? {
        entries.push(load_entry(&path, config)?);
    }
    entries.sort_by(|a, b| a.entry.name.cmp(&b.entry.name));
    if let Some(w) = entries.windows(2).find(|w| w[0].entry.name == w[1].entry.name) {
        return Err(CliError::input(format!("duplicate entry name `{}`", w[0].entry.name)));
    }
    Ok(entries)
}

pub fn json_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let read = fs::read_dir(dir).map_err(|e| CliError::input(format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = read
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    Ok(paths)
}

/// Directory of the corpus shipped with the crate.
pub fn bundled_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

#[cfg(test)]
mod tests {
    use super::*;

    const LINE: &str = r#"{
        "name": "line", "field": {"kind": "prime", "p": 3}, "group": [2],
        "ambient": {"kind": "projective", "dim": 1}, "weights": [[0], [1]],
        "generators": [], "p": 2, "declared_equidimensional": true,
        "provenance": "synthetic"
    }"#;

    fn err_pointer(text: &str) -> String {
        match parse_entry(text, GroebnerConfig::default()) {
            Err(CliError::Core(Error::Schema { pointer, .. })) => pointer,
            other => panic!("expected a schema error, got {other:?}"),
        }
    }

    #[test]
    fn parses_a_minimal_entry() {
        let e = parse_entry(LINE, GroebnerConfig::default()).unwrap();
        assert_eq!(e.entry.name, "line");
        assert_eq!(e.quotients(None).unwrap().len(), 1);
        assert!(e.quotients(Some(1)).is_err());
    }

    #[test]
    fn rejects_unknown_keys() {
        let text = LINE.replace("\"p\": 2,", "\"p\": 2, \"colour\": 1,");
        assert_eq!(err_pointer(&text), "/colour");
        let text = LINE.replace(
            "\"kind\": \"prime\", \"p\": 3",
            "\"kind\": \"prime\", \"p\": 3, \"q\": 1",
        );
        assert_eq!(err_pointer(&text), "/field");
    }

    #[test]
    fn reports_pointers_for_semantic_errors() {
        assert_eq!(err_pointer(&LINE.replace("[[0], [1]]", "[[0], [1, 2]]")), "/weights/1");
        assert_eq!(
            err_pointer(&LINE.replace("\"generators\": []", "\"generators\": [\"x0 + x1\"]")),
            "/generators/0"
        );
        assert_eq!(
            err_pointer(&LINE.replace("\"generators\": []", "\"generators\": [\"x0 x1\"]")),
            "/generators/0"
        );
        assert_eq!(err_pointer(&LINE.replace("\"p\": 2,", "\"p\": 4,")), "/p");
        assert_eq!(err_pointer(&LINE.replace("\"p\": 3}", "\"p\": 9}")), "/field");
        assert_eq!(
            err_pointer(&LINE.replace("\"group\": [2]", "\"group\": [\"two\"]")),
            "/group/0"
        );
    }
}
