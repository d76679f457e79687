//! Scenario files: what to build and which checks to run on it.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use eqkk_core::construct::{
    dual_group_algebra, graded_group_algebra, matrix2, scalar_algebra, sum_swap_algebra,
};
use eqkk_core::equivariance::{GAction, GGrading};
use eqkk_core::group::GroupSpec;
use eqkk_core::scalar::ScalarSpec;
use eqkk_core::{
    Algebra, AlgebraRef, CheckBudget, CosetSpace, FiniteGroup, GroupRef, Matrix, ScalarRing,
    SparseVec, Subgroup,
};
use serde::{Deserialize, Serialize};

use crate::HarnessError;

pub const DEFAULT_TRUNCATION: usize = 3;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub scalars: ScalarSpec,
    pub group: GroupSource,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<SubgroupSpec>,
    #[serde(default)]
    pub algebras: Vec<AlgebraSpec>,
    #[serde(default = "default_truncation")]
    pub truncation: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<BudgetSpec>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expected_failures: Vec<ExpectedFailure>,
}

fn default_truncation() -> usize {
    DEFAULT_TRUNCATION
}

/// Either a named group (`C<n>`, `S3`) or an explicit multiplication table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSource {
    Named { named: String },
    Table(GroupSpec),
}

/// Subgroup by element names; `section` lists one representative per
/// coset and must contain the identity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubgroupSpec {
    pub members: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub name: String,
    /// One of `l`, `lG`, `(lG)*`, `M2`, `l+l-swap`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<TableSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<ActionSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<GradingSpec>,
}

/// Structure constants by basis label; coefficients are scalar literals
/// such as `"1"`, `"-2"` or `"7/3"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableSpec {
    pub basis: Vec<String>,
    pub products: Vec<ProductSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductSpec {
    pub left: String,
    pub right: String,
    pub value: BTreeMap<String, String>,
}

/// `"trivial"`, `"none"`, or one matrix (as rows of scalar literals) per
/// group element name; the identity may be omitted.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ActionSpec {
    Keyword(String),
    Matrices(BTreeMap<String, Vec<Vec<String>>>),
}

/// `"trivial"`, `"none"`, or a degree (group element name) per basis label.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GradingSpec {
    Keyword(String),
    Degrees(BTreeMap<String, String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BudgetSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair_limit: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triple_limit: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
}

/// A failure the scenario expects: records of `suite` (optionally only
/// `anchor`) failing with error kind `kind` are reported as `expected`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedFailure {
    pub suite: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchor: Option<String>,
    pub kind: String,
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Scenario, HarnessError> {
        serde_json::from_str(text).map_err(|e| HarnessError::BadScenario {
            path: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })
    }

    pub fn budget(&self, seed: u64) -> CheckBudget {
        let base = CheckBudget::with_seed(seed);
        match &self.budget {
            None => base,
            Some(b) => CheckBudget {
                pair_limit: b.pair_limit.unwrap_or(base.pair_limit),
                triple_limit: b.triple_limit.unwrap_or(base.triple_limit),
                samples: b.samples.unwrap_or(base.samples),
                seed,
            },
        }
    }
}

/// A built algebra, or the error its specification ran into.
#[derive(Clone, Debug)]
pub struct NamedAlgebra {
    pub name: String,
    pub built: Result<AlgebraRef, eqkk_core::Error>,
}

/// Everything a scenario refers to, constructed.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub ring: ScalarRing,
    pub group: GroupRef,
    pub cosets: Option<CosetSpace>,
    pub algebras: Vec<NamedAlgebra>,
}

/// Result of resolving a scenario: a group-table failure is reported as a
/// verification outcome, anything unresolvable is a [`HarnessError`].
#[derive(Clone, Debug)]
pub enum Resolution {
    Ready(Resolved),
    BrokenGroup(eqkk_core::Error),
}

fn bad(path: impl Into<String>, message: impl Into<String>) -> HarnessError {
    HarnessError::BadScenario { path: path.into(), message: message.into() }
}

pub fn named_group(name: &str) -> Option<FiniteGroup> {
    match name {
        "S3" => Some(FiniteGroup::symmetric3()),
        "trivial" => Some(FiniteGroup::trivial()),
        _ => {
            let n: usize = name.strip_prefix('C')?.parse().ok()?;
            (n >= 1).then(|| FiniteGroup::cyclic(n))
        }
    }
}

pub fn resolve(scenario: &Scenario) -> Result<Resolution, HarnessError> {
    let ring = ScalarRing::from_spec(&scenario.scalars).map_err(|e| bad("scalars", e.to_string()))?;
    if scenario.truncation == 0 {
        return Err(bad("truncation", "truncation degree must be at least 1"));
    }
    let group = match &scenario.group {
        GroupSource::Named { named } => {
            named_group(named).ok_or_else(|| bad("group.named", format!("unknown group {named:?}")))?
        }
        GroupSource::Table(spec) => match FiniteGroup::from_spec(spec) {
            Ok(g) => g,
            Err(e @ eqkk_core::Error::NotAGroup { .. }) => return Ok(Resolution::BrokenGroup(e)),
            Err(e) => return Err(bad("group", e.to_string())),
        },
    };
    let group: GroupRef = Arc::new(group);
    let cosets = scenario.subgroup.as_ref().map(|s| resolve_subgroup(s, &group)).transpose()?;
    let mut seen = BTreeSet::new();
    let mut algebras = Vec::new();
    for (k, spec) in scenario.algebras.iter().enumerate() {
        if !seen.insert(spec.name.clone()) {
            return Err(bad(format!("algebras[{k}].name"), format!("duplicate name {:?}", spec.name)));
        }
        let built = resolve_algebra(spec, k, &ring, &group, &scenario.budget(scenario.seed))?;
        algebras.push(NamedAlgebra { name: spec.name.clone(), built });
    }
    Ok(Resolution::Ready(Resolved { ring, group, cosets, algebras }))
}

fn element(group: &GroupRef, name: &str, path: &str) -> Result<usize, HarnessError> {
    group.index_of(name).map_err(|_| bad(path, format!("unknown group element {name:?}")))
}

fn resolve_subgroup(spec: &SubgroupSpec, group: &GroupRef) -> Result<CosetSpace, HarnessError> {
    let members = spec
        .members
        .iter()
        .enumerate()
        .map(|(k, n)| element(group, n, &format!("subgroup.members[{k}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let sub = Subgroup::new(group.clone(), &members).map_err(|e| bad("subgroup.members", e.to_string()))?;
    match &spec.section {
        None => Ok(CosetSpace::new(sub)),
        Some(names) => {
            let reps = names
                .iter()
                .enumerate()
                .map(|(k, n)| element(group, n, &format!("subgroup.section[{k}]")))
                .collect::<Result<Vec<_>, _>>()?;
            CosetSpace::with_section(sub, &reps).map_err(|e| bad("subgroup.section", e.to_string()))
        }
    }
}

/// Builds one algebra. Unresolvable references are scenario errors; a
/// table that fails the algebra axioms is returned as the inner error so
/// the harness can report it.
fn resolve_algebra(
    spec: &AlgebraSpec,
    k: usize,
    ring: &ScalarRing,
    group: &GroupRef,
    budget: &CheckBudget,
) -> Result<Result<AlgebraRef, eqkk_core::Error>, HarnessError> {
    let path = format!("algebras[{k}]");
    let base: Result<Algebra, eqkk_core::Error> = match (&spec.builtin, &spec.table) {
        (Some(name), None) => builtin_algebra(name, ring, group)
            .ok_or_else(|| bad(format!("{path}.builtin"), format!("unknown builtin algebra {name:?}")))?
            .map(Arc::unwrap_or_clone),
        (None, Some(table)) => table_algebra(&spec.name, table, ring, &path, budget)?,
        _ => return Err(bad(&path, "exactly one of `builtin` and `table` is required")),
    };
    let alg = match base {
        Ok(a) => a.with_name(spec.name.clone()),
        Err(e) => return Ok(Err(e)),
    };
    let action = match &spec.action {
        None => None,
        Some(ActionSpec::Keyword(w)) if w == "none" => Some(None),
        Some(ActionSpec::Keyword(w)) if w == "trivial" => {
            Some(Some(GAction::trivial(group.clone(), alg.dim())))
        }
        Some(ActionSpec::Keyword(w)) => {
            return Err(bad(format!("{path}.action"), format!("unknown action keyword {w:?}")))
        }
        Some(ActionSpec::Matrices(m)) => {
            Some(Some(action_from_matrices(m, &alg, ring, group, &format!("{path}.action"))?))
        }
    };
    let grading = match &spec.grading {
        None => None,
        Some(GradingSpec::Keyword(w)) if w == "none" => Some(None),
        Some(GradingSpec::Keyword(w)) if w == "trivial" => {
            Some(Some(GGrading::trivial(group.clone(), alg.dim())))
        }
        Some(GradingSpec::Keyword(w)) => {
            return Err(bad(format!("{path}.grading"), format!("unknown grading keyword {w:?}")))
        }
        Some(GradingSpec::Degrees(d)) => {
            Some(Some(grading_from_degrees(d, &alg, group, &format!("{path}.grading"))?))
        }
    };
    let attach = || -> eqkk_core::Result<Algebra> {
        let mut alg = alg;
        if let Some(action) = action {
            alg = alg.without_action();
            if let Some(a) = action {
                alg = alg.with_action(a, budget)?;
            }
        }
        if let Some(grading) = grading {
            alg = alg.without_grading();
            if let Some(g) = grading {
                alg = alg.with_grading(g)?;
            }
        }
        Ok(alg)
    };
    Ok(attach().map(Arc::new))
}

/// The shipped algebras with their default structures:
/// `l` (trivial action and grading), `lG` (conjugation action, graded by
/// `|d_g| = g`), `(lG)*` (translation action, trivial grading), `M2`
/// (trivial action and grading) and `l+l-swap` (summands exchanged by odd
/// elements, trivial grading).
pub fn builtin_algebra(
    name: &str,
    ring: &ScalarRing,
    group: &GroupRef,
) -> Option<Result<AlgebraRef, eqkk_core::Error>> {
    let budget = CheckBudget::default();
    let trivial_action = |a: AlgebraRef| -> eqkk_core::Result<Algebra> {
        let d = a.dim();
        Arc::unwrap_or_clone(a).with_action(GAction::trivial(group.clone(), d), &budget)
    };
    let trivial_grading = |a: Algebra| -> eqkk_core::Result<AlgebraRef> {
        let d = a.dim();
        Ok(Arc::new(a.with_grading(GGrading::trivial(group.clone(), d))?))
    };
    let built = match name {
        "l" => trivial_action(scalar_algebra(ring)).and_then(trivial_grading),
        "lG" => graded_group_algebra(ring, group).and_then(|a| {
            let g = group.clone();
            let action = GAction::permutation(group.clone(), group.order(), move |x, h| {
                g.mul(g.mul(x, h), g.inv(x))
            });
            Ok(Arc::new(Arc::unwrap_or_clone(a).with_action(action, &budget)?))
        }),
        "(lG)*" => dual_group_algebra(ring, group).and_then(|a| trivial_grading(Arc::unwrap_or_clone(a))),
        "M2" => trivial_action(matrix2(ring)).and_then(trivial_grading),
        "l+l-swap" => sum_swap_algebra(ring, group).and_then(|a| trivial_grading(Arc::unwrap_or_clone(a))),
        _ => return None,
    };
    Some(built)
}

pub const BUILTIN_ALGEBRAS: [&str; 5] = ["l", "lG", "(lG)*", "M2", "l+l-swap"];

fn parse_vector(
    alg_basis: &[String],
    ring: &ScalarRing,
    entries: &BTreeMap<String, String>,
    path: &str,
) -> Result<SparseVec, HarnessError> {
    let mut v = SparseVec::new();
    for (label, value) in entries {
        let i = alg_basis
            .iter()
            .position(|b| b == label)
            .ok_or_else(|| bad(path, format!("unknown basis label {label:?}")))?;
        let c = ring.parse(value).map_err(|e| bad(path, e.to_string()))?;
        v.add_at(ring, i, &c);
    }
    Ok(v)
}

fn table_algebra(
    name: &str,
    table: &TableSpec,
    ring: &ScalarRing,
    path: &str,
    budget: &CheckBudget,
) -> Result<Result<Algebra, eqkk_core::Error>, HarnessError> {
    let basis = &table.basis;
    let index = |label: &str, at: &str| {
        basis.iter().position(|b| b == label).ok_or_else(|| bad(at, format!("unknown basis label {label:?}")))
    };
    let mut products = Vec::with_capacity(table.products.len());
    for (k, p) in table.products.iter().enumerate() {
        let at = format!("{path}.table.products[{k}]");
        let i = index(&p.left, &at)?;
        let j = index(&p.right, &at)?;
        products.push(((i, j), parse_vector(basis, ring, &p.value, &at)?));
    }
    let unit = table
        .unit
        .as_ref()
        .map(|u| parse_vector(basis, ring, u, &format!("{path}.table.unit")))
        .transpose()?;
    Ok(Algebra::build(name, ring.clone(), basis.clone(), products, unit, budget))
}

fn action_from_matrices(
    by_element: &BTreeMap<String, Vec<Vec<String>>>,
    alg: &Algebra,
    ring: &ScalarRing,
    group: &GroupRef,
    path: &str,
) -> Result<GAction, HarnessError> {
    let d = alg.dim();
    let mut matrices = vec![None; group.order()];
    for (name, rows) in by_element {
        let at = format!("{path}.{name}");
        let g = element(group, name, &at)?;
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|x| ring.parse(x)).collect::<eqkk_core::Result<Vec<_>>>())
            .collect::<eqkk_core::Result<Vec<_>>>()
            .map_err(|e| bad(&at, e.to_string()))?;
        if parsed.len() != d || parsed.iter().any(|r| r.len() != d) {
            return Err(bad(&at, format!("matrix must be {d}x{d}")));
        }
        matrices[g] = Some(Matrix::from_rows(d, &parsed).map_err(|e| bad(&at, e.to_string()))?);
    }
    let e = group.identity();
    let matrices = matrices
        .into_iter()
        .enumerate()
        .map(|(g, m)| match m {
            Some(m) => Ok(m),
            None if g == e => Ok(Matrix::identity(d)),
            None => Err(bad(path, format!("no matrix for {}", group.name(g)))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    GAction::new(group.clone(), matrices).map_err(|e| bad(path, e.to_string()))
}

fn grading_from_degrees(
    degrees: &BTreeMap<String, String>,
    alg: &Algebra,
    group: &GroupRef,
    path: &str,
) -> Result<GGrading, HarnessError> {
    let mut out = vec![None; alg.dim()];
    for (label, g) in degrees {
        let i = alg.index_of(label).map_err(|_| bad(path, format!("unknown basis label {label:?}")))?;
        out[i] = Some(element(group, g, &format!("{path}.{label}"))?);
    }
    let out = out
        .into_iter()
        .enumerate()
        .map(|(i, d)| d.ok_or_else(|| bad(path, format!("no degree for {}", alg.label(i)))))
        .collect::<Result<Vec<_>, _>>()?;
    GGrading::new(group.clone(), out).map_err(|e| bad(path, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Scenario {
        Scenario::from_json(text).unwrap()
    }

    fn bad_path(text: &str) -> String {
        match resolve(&parse(text)) {
            Err(HarnessError::BadScenario { path, .. }) => path,
            other => panic!("expected a bad scenario, got {other:?}"),
        }
    }

    #[test]
    fn unknown_fields_report_their_position() {
        let err = Scenario::from_json(r#"{"name": "x", "scalars": {"ring": "Q"}, "group": {"named": "C2"}, "extra": 1}"#)
            .unwrap_err();
        match err {
            HarnessError::BadScenario { path, message } => {
                assert!(path.starts_with("line 1"), "{path}");
                assert!(message.contains("extra"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unresolvable_references_name_the_field() {
        let head = r#""name": "x", "scalars": {"ring": "Q"}"#;
        assert_eq!(bad_path(&format!(r#"{{{head}, "group": {{"named": "D5"}}}}"#)), "group.named");
        assert_eq!(
            bad_path(&format!(r#"{{{head}, "group": {{"named": "C2"}}, "subgroup": {{"members": ["e", "t"]}}}}"#)),
            "subgroup.members[1]"
        );
        assert_eq!(
            bad_path(&format!(r#"{{{head}, "group": {{"named": "C2"}}, "truncation": 0}}"#)),
            "truncation"
        );
        let dup = format!(
            r#"{{{head}, "group": {{"named": "C2"}}, "algebras": [{{"name": "a", "builtin": "l"}}, {{"name": "a", "builtin": "M2"}}]}}"#
        );
        assert_eq!(bad_path(&dup), "algebras[1].name");
        let zmod1 = r#"{"name": "x", "scalars": {"ring": "Zmod", "m": 1}, "group": {"named": "C2"}}"#;
        assert_eq!(bad_path(zmod1), "scalars");
    }

    #[test]
    fn explicit_action_and_grading_are_attached() {
        let s = parse(
            r#"{
              "name": "swap", "scalars": {"ring": "Q"}, "group": {"named": "C2"},
              "algebras": [{
                "name": "pair",
                "table": {
                  "basis": ["p", "q"],
                  "products": [
                    {"left": "p", "right": "p", "value": {"p": "1"}},
                    {"left": "q", "right": "q", "value": {"q": "1"}}
                  ],
                  "unit": {"p": "1", "q": "1"}
                },
                "action": {"s": [["0", "1"], ["1", "0"]]},
                "grading": {"p": "e", "q": "e"}
              }]
            }"#,
        );
        let Resolution::Ready(r) = resolve(&s).unwrap() else { panic!("group resolves") };
        let alg = r.algebras[0].built.as_ref().unwrap();
        let act = alg.action().unwrap();
        assert_eq!(act.apply(&r.ring, 1, &SparseVec::unit(0)), SparseVec::unit(1));
        assert!(act.matrix(0).is_identity());
        assert!(alg.grading().unwrap().is_trivial());
    }

    #[test]
    fn invalid_action_is_an_algebra_error() {
        // p -> 2p is linear but not an automorphism of order two
        let s = parse(
            r#"{
              "name": "bad-action", "scalars": {"ring": "Q"}, "group": {"named": "C2"},
              "algebras": [{
                "name": "line",
                "table": {"basis": ["p"], "products": [{"left": "p", "right": "p", "value": {"p": "1"}}]},
                "action": {"s": [["2"]]}
              }]
            }"#,
        );
        let Resolution::Ready(r) = resolve(&s).unwrap() else { panic!("group resolves") };
        assert!(r.algebras[0].built.is_err());
    }

    #[test]
    fn broken_table_is_a_verification_outcome() {
        let s = parse(
            r#"{"name": "t", "scalars": {"ring": "Q"},
                "group": {"elements": ["e", "a"], "table": [[0, 1], [1, 1]]}}"#,
        );
        assert!(matches!(resolve(&s).unwrap(), Resolution::BrokenGroup(eqkk_core::Error::NotAGroup { .. })));
    }

    #[test]
    fn named_groups() {
        assert_eq!(named_group("C5").unwrap().order(), 5);
        assert_eq!(named_group("S3").unwrap().order(), 6);
        assert_eq!(named_group("trivial").unwrap().order(), 1);
        assert!(named_group("C0").is_none());
        assert!(named_group("Q8").is_none());
    }
}
