//! Check definitions, execution and the ordered merge into records.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::actions::{ActionOnGroup, GSet};
use crate::cohomology::h1_with_budget;
use crate::error::Result;
use crate::group::Subgroup;
use crate::par;
use crate::theorems::{
    verify_cocycle_oracle, verify_complement_correspondence, verify_eq3, verify_intersection_lemma, verify_lemma1,
    verify_prop2, verify_prop3, verify_prop5, verify_thm4, VerificationReport, VerifyOptions,
};

use super::instances::small_subgroups;

/// Names accepted in the `check` field of a scenario.
pub const CHECK_NAMES: [&str; 10] =
    ["cocycle_oracle", "complements", "lemma1", "eq3", "h1", "prop2", "prop3", "prop5", "thm4", "intersection"];

#[derive(Clone)]
pub enum CheckKind {
    /// Generator enumeration against the brute-force oracle on the subgroups
    /// of `J`.
    CocycleOracle {
        action: Arc<ActionOnGroup>,
    },
    Complements {
        action: Arc<ActionOnGroup>,
    },
    Lemma1 {
        action: Arc<ActionOnGroup>,
    },
    Eq3 {
        action: Arc<ActionOnGroup>,
    },
    /// `|H¹(J, N)|` and `|Z¹(J, N)|` against expected values.
    H1 {
        action: Arc<ActionOnGroup>,
        classes: Option<usize>,
        cocycles: Option<usize>,
    },
    Prop2 {
        normal: Subgroup,
    },
    Prop3 {
        normal: Subgroup,
    },
    Prop5 {
        normal: Subgroup,
        complement: Subgroup,
        subgroup: Subgroup,
    },
    Thm4 {
        action: Arc<ActionOnGroup>,
        gset: Arc<GSet>,
    },
    Intersection {
        normal: Subgroup,
        subgroups: Vec<Subgroup>,
    },
}

impl CheckKind {
    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::CocycleOracle { .. } => "cocycle_oracle",
            CheckKind::Complements { .. } => "complements",
            CheckKind::Lemma1 { .. } => "lemma1",
            CheckKind::Eq3 { .. } => "eq3",
            CheckKind::H1 { .. } => "h1",
            CheckKind::Prop2 { .. } => "prop2",
            CheckKind::Prop3 { .. } => "prop3",
            CheckKind::Prop5 { .. } => "prop5",
            CheckKind::Thm4 { .. } => "thm4",
            CheckKind::Intersection { .. } => "intersection",
        }
    }

    /// Whether a failed conclusion under met hypotheses contradicts a
    /// theorem. `h1` compares against user-supplied counts and
    /// `cocycle_oracle` compares two implementations; both only fail.
    pub fn is_theorem(&self) -> bool {
        !matches!(self, CheckKind::H1 { .. } | CheckKind::CocycleOracle { .. })
    }
}

/// What counts as a pass.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expect {
    /// Hypotheses hold and the conclusion is verified.
    #[default]
    Pass,
    /// At least one hypothesis fails.
    HypothesisFail,
    /// Anything but a falsification.
    Any,
}

#[derive(Clone)]
pub struct Check {
    pub id: String,
    pub kind: CheckKind,
    pub expect: Expect,
}

/// One line of the report. Field order is the serialized key order.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub theorem: String,
    pub instance: String,
    pub hypotheses: BTreeMap<String, bool>,
    pub pass: bool,
    pub witness: Option<Value>,
    pub falsification: bool,
    pub expect: Expect,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Record {
    fn from_report(r: VerificationReport, check: &Check) -> Record {
        let falsification = r.falsification() && check.kind.is_theorem();
        let pass = match check.expect {
            Expect::Pass => r.passed(),
            Expect::HypothesisFail => !r.hypotheses_met,
            Expect::Any => !r.falsification(),
        };
        Record {
            falsification,
            theorem: r.theorem,
            instance: r.instance,
            hypotheses: r.hypotheses,
            pass,
            witness: r.witness,
            expect: check.expect,
            notes: r.notes,
            error: None,
        }
    }

    fn from_error(check: &Check, e: crate::Error) -> Record {
        Record {
            theorem: check.kind.name().into(),
            instance: check.id.clone(),
            hypotheses: BTreeMap::new(),
            pass: false,
            witness: None,
            falsification: false,
            expect: check.expect,
            notes: Vec::new(),
            error: Some(e.to_string()),
        }
    }
}

fn verify_h1(
    action: &Arc<ActionOnGroup>,
    classes: Option<usize>,
    cocycles: Option<usize>,
    id: &str,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let h = h1_with_budget(action, &Subgroup::whole(action.actor()), opts.budget)?;
    let ok = classes.is_none_or(|c| c == h.len()) && cocycles.is_none_or(|c| c == h.num_cocycles());
    Ok(VerificationReport {
        theorem: "h1".into(),
        instance: id.into(),
        hypotheses: BTreeMap::new(),
        hypotheses_met: true,
        conclusion_verified: ok,
        witness: Some(json!({"classes": h.len(), "cocycles": h.num_cocycles()})),
        notes: Vec::new(),
        elapsed: Default::default(),
    })
}

pub fn run_check(check: &Check, opts: &VerifyOptions) -> Record {
    let id = check.id.as_str();
    let outcome = match &check.kind {
        CheckKind::CocycleOracle { action } => {
            let domains = small_subgroups(action.actor());
            verify_cocycle_oracle(action, &domains, id, opts)
        }
        CheckKind::Complements { action } => verify_complement_correspondence(action, id, opts),
        CheckKind::Lemma1 { action } => verify_lemma1(action, id, opts),
        CheckKind::Eq3 { action } => verify_eq3(action, id, opts),
        CheckKind::H1 { action, classes, cocycles } => verify_h1(action, *classes, *cocycles, id, opts),
        CheckKind::Prop2 { normal } => verify_prop2(normal, id, opts),
        CheckKind::Prop3 { normal } => verify_prop3(normal, id, opts),
        CheckKind::Prop5 { normal, complement, subgroup } => verify_prop5(normal, complement, subgroup, id, opts),
        CheckKind::Thm4 { action, gset } => verify_thm4(action, gset, id, opts),
        CheckKind::Intersection { normal, subgroups } => verify_intersection_lemma(normal, subgroups, id),
    };
    match outcome {
        Ok(r) => Record::from_report(r, check),
        Err(e) => Record::from_error(check, e),
    }
}

/// Runs every check, in parallel when enabled, and returns records in check
/// order.
pub fn run_suite(checks: &[Check], opts: &VerifyOptions) -> Vec<Record> {
    par::map_slice(checks, |c| {
        log::debug!("running {} on {}", c.kind.name(), c.id);
        run_check(c, opts)
    })
}

/// 0 all passed, 1 some check failed, 2 a falsification.
pub fn exit_code(records: &[Record]) -> i32 {
    if records.iter().any(|r| r.falsification) {
        2
    } else if records.iter().all(|r| r.pass) {
        0
    } else {
        1
    }
}
