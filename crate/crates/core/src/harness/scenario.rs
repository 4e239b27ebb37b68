//! JSON scenario files.
//!
//! ```json
//! {
//!   "id": "d4_inversion",
//!   "groups": [{"id": "D4", "builtin": "dihedral", "n": 4}],
//!   "actions": [{"id": "inv", "builtin": "conjugation", "group": "D4", "actor_gens": [4], "target_gens": [1]}],
//!   "gsets": [{"id": "cosets", "group": "D4", "coset_of": [4]}],
//!   "checks": [
//!     {"check": "h1", "action": "inv", "classes": 2},
//!     {"check": "prop2", "group": "D4", "normal": [1]}
//!   ]
//! }
//! ```
//!
//! Groups are `{"kind": "table", "n", "mul"}`, `{"kind": "perm", "degree",
//! "generators"}` or `{"builtin": name, ...}` with builtins `cyclic(n)`,
//! `abelian(factors)`, `dihedral(n)`, `quaternion8`, `heisenberg(p)`,
//! `symmetric(n)`, `alternating(n)`, `trivial` and `direct_product(of)`.
//! Action images are permutations of the target or the shorthands `id`,
//! `inv`, `swap`, `pow:k`, `conj:g`; `"builtin": "trivial"` needs neither
//! gens nor images. `{"builtin": "conjugation", "group", "actor_gens",
//! "target_gens"}` is conjugation of one subgroup on another it normalizes,
//! both given by generators. Subgroups are given by generators. Elements of a
//! semidirect product are numbered `n + |N|·j`.

use std::collections::{HashMap, HashSet};
use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;

use crate::actions::{coset_gset, ActionOnGroup, GSet, SemidirectProduct};
use crate::catalog::{self, Auto};
use crate::error::Error;
use crate::group::{Elem, Group, Subgroup, DEFAULT_ORDER_CAP};

use super::suite::{Check, CheckKind, Expect, CHECK_NAMES};

#[derive(Debug, thiserror::Error)]
pub enum ScenarioError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{line}:{column}: {message}")]
    Parse { path: String, line: usize, column: usize, message: String },
    #[error("{constructor}: {reason}")]
    Validation { constructor: String, reason: Invalid },
}

#[derive(Debug, thiserror::Error)]
pub enum Invalid {
    #[error(transparent)]
    Algebra(#[from] Error),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("unknown reference `{0}`")]
    UnknownReference(String),
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("missing field `{0}`")]
    MissingField(&'static str),
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("bad automorphism `{0}`")]
    BadImage(String),
    #[error("{0}")]
    Other(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    id: String,
    #[serde(default)]
    #[allow(dead_code)]
    description: Option<String>,
    #[serde(default)]
    order_cap: Option<usize>,
    #[serde(default)]
    groups: Vec<GroupSpec>,
    #[serde(default)]
    actions: Vec<ActionSpec>,
    #[serde(default)]
    gsets: Vec<GSetSpec>,
    #[serde(default)]
    checks: Vec<CheckSpec>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupSpec {
    id: String,
    builtin: Option<String>,
    kind: Option<String>,
    n: Option<usize>,
    p: Option<usize>,
    factors: Option<Vec<usize>>,
    of: Option<Vec<String>>,
    mul: Option<Vec<Vec<usize>>>,
    degree: Option<usize>,
    generators: Option<Vec<Vec<usize>>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ImageSpec {
    Table(Vec<Elem>),
    Named(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionSpec {
    id: String,
    actor: Option<String>,
    target: Option<String>,
    builtin: Option<String>,
    group: Option<String>,
    #[serde(default)]
    actor_gens: Vec<Elem>,
    #[serde(default)]
    target_gens: Vec<Elem>,
    #[serde(default)]
    gens: Vec<Elem>,
    #[serde(default)]
    images: Vec<ImageSpec>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GSetSpec {
    id: String,
    action: Option<String>,
    group: Option<String>,
    size: Option<usize>,
    table: Option<Vec<Vec<usize>>>,
    coset_of: Option<Vec<Elem>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CheckSpec {
    check: String,
    id: Option<String>,
    action: Option<String>,
    group: Option<String>,
    normal: Option<Vec<Elem>>,
    complement: Option<Vec<Elem>>,
    subgroup: Option<Vec<Elem>>,
    subgroups: Option<Vec<Vec<Elem>>>,
    gset: Option<String>,
    classes: Option<usize>,
    cocycles: Option<usize>,
    expect: Option<Expect>,
    #[serde(default)]
    expect_hypothesis_fail: bool,
}

/// A fully validated scenario.
pub struct Scenario {
    pub id: String,
    pub groups: Vec<(String, Arc<Group>)>,
    pub actions: Vec<(String, Arc<ActionOnGroup>)>,
    pub gsets: Vec<(String, Arc<GSet>)>,
    pub checks: Vec<Check>,
}

impl Scenario {
    pub fn action(&self, id: &str) -> Option<&Arc<ActionOnGroup>> {
        self.actions.iter().find(|(k, _)| k == id).map(|(_, a)| a)
    }
}

pub fn load_scenario(path: impl AsRef<Path>) -> Result<Scenario, ScenarioError> {
    let path = path.as_ref();
    let label = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| ScenarioError::Io { path: label.clone(), source })?;
    parse_scenario(&text, &label)
}

pub fn parse_scenario(text: &str, label: &str) -> Result<Scenario, ScenarioError> {
    let file: ScenarioFile = serde_json::from_str(text).map_err(|e| ScenarioError::Parse {
        path: label.into(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Builder::new(file.order_cap.unwrap_or(DEFAULT_ORDER_CAP)).build(file)
}

fn invalid(constructor: impl Into<String>, reason: impl Into<Invalid>) -> ScenarioError {
    ScenarioError::Validation { constructor: constructor.into(), reason: reason.into() }
}

struct Builder {
    cap: usize,
    ids: HashSet<String>,
    groups: HashMap<String, Arc<Group>>,
    actions: HashMap<String, Arc<ActionOnGroup>>,
    products: HashMap<String, Arc<SemidirectProduct>>,
    gsets: HashMap<String, (Arc<GSet>, Option<String>)>,
}

impl Builder {
    fn new(cap: usize) -> Builder {
        Builder {
            cap,
            ids: HashSet::new(),
            groups: HashMap::new(),
            actions: HashMap::new(),
            products: HashMap::new(),
            gsets: HashMap::new(),
        }
    }

    fn claim(&mut self, kind: &str, id: &str) -> Result<(), ScenarioError> {
        if !self.ids.insert(id.to_string()) {
            return Err(invalid(format!("{kind} `{id}`"), Invalid::DuplicateId(id.into())));
        }
        Ok(())
    }

    fn build(mut self, file: ScenarioFile) -> Result<Scenario, ScenarioError> {
        let mut groups = Vec::new();
        for spec in &file.groups {
            self.claim("group", &spec.id)?;
            let g = Arc::new(self.group(spec).map_err(|r| invalid(format!("group `{}`", spec.id), r))?);
            self.groups.insert(spec.id.clone(), g.clone());
            groups.push((spec.id.clone(), g));
        }
        let mut actions = Vec::new();
        for spec in &file.actions {
            self.claim("action", &spec.id)?;
            let a = Arc::new(self.action(spec).map_err(|r| invalid(format!("action `{}`", spec.id), r))?);
            let p = SemidirectProduct::with_cap(a.clone(), self.cap)
                .map_err(|e| invalid(format!("action `{}`", spec.id), e))?;
            self.actions.insert(spec.id.clone(), a.clone());
            self.products.insert(spec.id.clone(), Arc::new(p));
            actions.push((spec.id.clone(), a));
        }
        let mut gsets = Vec::new();
        for spec in &file.gsets {
            self.claim("gset", &spec.id)?;
            let g = Arc::new(self.gset(spec).map_err(|r| invalid(format!("gset `{}`", spec.id), r))?);
            self.gsets.insert(spec.id.clone(), (g.clone(), spec.action.clone()));
            gsets.push((spec.id.clone(), g));
        }
        let mut checks = Vec::new();
        let mut check_ids = HashSet::new();
        for (i, spec) in file.checks.iter().enumerate() {
            let label = format!("check #{i} ({})", spec.check);
            let check = self.check(&file.id, spec).map_err(|r| invalid(label.clone(), r))?;
            // the same id may carry several theorems
            if !check_ids.insert((check.id.clone(), check.kind.name())) {
                return Err(invalid(label, Invalid::DuplicateId(check.id)));
            }
            checks.push(check);
        }
        Ok(Scenario { id: file.id, groups, actions, gsets, checks })
    }

    fn group_ref(&self, id: &str) -> Result<Arc<Group>, Invalid> {
        self.groups.get(id).cloned().ok_or_else(|| Invalid::UnknownReference(id.into()))
    }

    fn group(&self, s: &GroupSpec) -> Result<Group, Invalid> {
        let need = |v: Option<usize>, f: &'static str| v.ok_or(Invalid::MissingField(f));
        match (s.builtin.as_deref(), s.kind.as_deref()) {
            (Some(b), None) => Ok(match b {
                "cyclic" => catalog::cyclic(need(s.n, "n")?.max(1)),
                "abelian" => catalog::abelian(s.factors.as_deref().ok_or(Invalid::MissingField("factors"))?),
                "dihedral" => catalog::dihedral(need(s.n, "n")?.max(1)),
                "quaternion8" => catalog::quaternion8(),
                "heisenberg" => {
                    let p = need(s.p, "p")?;
                    if !crate::structure::is_prime(p as u64) {
                        return Err(Error::NotPrime(p as u64).into());
                    }
                    catalog::heisenberg(p)
                }
                "symmetric" => catalog::symmetric(need(s.n, "n")?)?,
                "alternating" => catalog::alternating(need(s.n, "n")?)?,
                "trivial" => Group::trivial(),
                "direct_product" => {
                    let of = s.of.as_deref().ok_or(Invalid::MissingField("of"))?;
                    let mut acc = Group::trivial();
                    for id in of {
                        acc = catalog::direct_product(&acc, &*self.group_ref(id)?);
                    }
                    acc
                }
                other => return Err(Invalid::UnknownBuiltin(other.into())),
            }),
            (None, Some("table")) => {
                let mul = s.mul.as_deref().ok_or(Invalid::MissingField("mul"))?;
                if let Some(n) = s.n {
                    if n != mul.len() {
                        return Err(Invalid::Other(format!("n = {n} but the table has {} rows", mul.len())));
                    }
                }
                Ok(Group::from_table_with_cap(mul, self.cap)?)
            }
            (None, Some("perm")) => {
                let gens = s.generators.as_deref().ok_or(Invalid::MissingField("generators"))?;
                Ok(Group::from_permutations(need(s.degree, "degree")?, gens, self.cap)?)
            }
            (None, Some(k)) => Err(Invalid::UnknownBuiltin(k.into())),
            _ => Err(Invalid::Other("exactly one of `builtin` and `kind` is required".into())),
        }
    }

    fn action(&self, s: &ActionSpec) -> Result<ActionOnGroup, Invalid> {
        if s.builtin.as_deref() == Some("conjugation") {
            let g = self.group_ref(s.group.as_deref().ok_or(Invalid::MissingField("group"))?)?;
            let j = Subgroup::generated(&g, &s.actor_gens)?;
            let n = Subgroup::generated(&g, &s.target_gens)?;
            return Ok(ActionOnGroup::conjugation(&n, &j)?);
        }
        let j = self.group_ref(s.actor.as_deref().ok_or(Invalid::MissingField("actor"))?)?;
        let n = self.group_ref(s.target.as_deref().ok_or(Invalid::MissingField("target"))?)?;
        if s.builtin.as_deref() == Some("trivial") {
            return Ok(ActionOnGroup::trivial(j, n));
        }
        if let Some(b) = &s.builtin {
            return Err(Invalid::UnknownBuiltin(b.clone()));
        }
        if s.gens.len() != s.images.len() {
            return Err(Invalid::Other(format!("{} gens but {} images", s.gens.len(), s.images.len())));
        }
        let images = s
            .images
            .iter()
            .map(|im| match im {
                ImageSpec::Table(t) => Ok(t.clone()),
                ImageSpec::Named(name) => Auto::parse(name)
                    .ok_or_else(|| Invalid::BadImage(name.clone()))?
                    .permutation(&n)
                    .map_err(Invalid::from),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ActionOnGroup::from_generator_images(j, n, &s.gens, &images)?)
    }

    fn product(&self, action: &str) -> Result<Arc<SemidirectProduct>, Invalid> {
        self.products.get(action).cloned().ok_or_else(|| Invalid::UnknownReference(action.into()))
    }

    fn gset(&self, s: &GSetSpec) -> Result<GSet, Invalid> {
        let g = match (&s.action, &s.group) {
            (Some(a), None) => self.product(a)?.group.clone(),
            (None, Some(id)) => self.group_ref(id)?,
            _ => return Err(Invalid::Other("exactly one of `action` and `group` is required".into())),
        };
        let gset = match (&s.table, &s.coset_of) {
            (Some(t), None) => GSet::new(g, t)?,
            (None, Some(gens)) => coset_gset(&Subgroup::generated(&g, gens)?),
            _ => return Err(Invalid::Other("exactly one of `table` and `coset_of` is required".into())),
        };
        if let Some(size) = s.size {
            if size != gset.size() {
                return Err(Invalid::Other(format!("size {size} but the set has {} points", gset.size())));
            }
        }
        Ok(gset)
    }

    /// `(G, N)` from either an action or a group with normal generators.
    fn ambient(&self, s: &CheckSpec) -> Result<(Arc<Group>, Subgroup, Option<Subgroup>), Invalid> {
        match (&s.action, &s.group) {
            (Some(a), None) => {
                let p = self.product(a)?;
                let complement = match &s.complement {
                    Some(gens) => Some(Subgroup::generated(&p.group, gens)?),
                    None => Some(p.j_subgroup()),
                };
                let n = match &s.normal {
                    Some(gens) => Subgroup::generated(&p.group, gens)?,
                    None => p.n_subgroup(),
                };
                Ok((p.group.clone(), n, complement))
            }
            (None, Some(gid)) => {
                let g = self.group_ref(gid)?;
                let n = Subgroup::generated(&g, s.normal.as_deref().ok_or(Invalid::MissingField("normal"))?)?;
                n.require_normal()?;
                let complement = s.complement.as_deref().map(|c| Subgroup::generated(&g, c)).transpose()?;
                Ok((g, n, complement))
            }
            _ => Err(Invalid::Other("exactly one of `action` and `group` is required".into())),
        }
    }

    fn check(&self, scenario: &str, s: &CheckSpec) -> Result<Check, Invalid> {
        if !CHECK_NAMES.contains(&s.check.as_str()) {
            return Err(Invalid::UnknownCheck(s.check.clone()));
        }
        let action = || -> Result<Arc<ActionOnGroup>, Invalid> {
            let a = s.action.as_deref().ok_or(Invalid::MissingField("action"))?;
            self.actions.get(a).cloned().ok_or_else(|| Invalid::UnknownReference(a.into()))
        };
        let kind = match s.check.as_str() {
            "cocycle_oracle" => CheckKind::CocycleOracle { action: action()? },
            "complements" => CheckKind::Complements { action: action()? },
            "lemma1" => CheckKind::Lemma1 { action: action()? },
            "eq3" => CheckKind::Eq3 { action: action()? },
            "h1" => CheckKind::H1 { action: action()?, classes: s.classes, cocycles: s.cocycles },
            "prop2" => CheckKind::Prop2 { normal: self.ambient(s)?.1 },
            "prop3" => CheckKind::Prop3 { normal: self.ambient(s)?.1 },
            "prop5" => {
                let (g, normal, complement) = self.ambient(s)?;
                let complement = complement.ok_or(Invalid::MissingField("complement"))?;
                let subgroup =
                    Subgroup::generated(&g, s.subgroup.as_deref().ok_or(Invalid::MissingField("subgroup"))?)?;
                CheckKind::Prop5 { normal, complement, subgroup }
            }
            "thm4" => {
                let gid = s.gset.as_deref().ok_or(Invalid::MissingField("gset"))?;
                let (gset, gset_action) =
                    self.gsets.get(gid).cloned().ok_or_else(|| Invalid::UnknownReference(gid.into()))?;
                let a = match (&s.action, gset_action) {
                    (Some(a), _) => a.clone(),
                    (None, Some(a)) => a,
                    (None, None) => return Err(Invalid::MissingField("action")),
                };
                let action = self.actions.get(&a).cloned().ok_or(Invalid::UnknownReference(a))?;
                CheckKind::Thm4 { action, gset }
            }
            "intersection" => {
                let (g, normal, _) = self.ambient(s)?;
                let subgroups = match &s.subgroups {
                    Some(list) => list.iter().map(|gens| Subgroup::generated(&g, gens)).collect::<Result<_, _>>()?,
                    None => super::instances::small_subgroups(&g),
                };
                CheckKind::Intersection { normal, subgroups }
            }
            _ => unreachable!("names checked above"),
        };
        let target = s.action.as_deref().or(s.group.as_deref()).or(s.gset.as_deref()).unwrap_or("");
        let id = s.id.clone().unwrap_or_else(|| format!("{scenario}/{target}"));
        let expect = if s.expect_hypothesis_fail { Expect::HypothesisFail } else { s.expect.unwrap_or_default() };
        Ok(Check { id, kind, expect })
    }
}
