//! Restrictions a value filter places on planning: which goals an agent
//! may hold, which operators it may use, and whether an operator cleans
//! up rejected propositions it relies on.

use std::collections::BTreeSet;
use std::fmt;

use crate::filter::{prop_base_clean, prop_base_clean_complement};
use crate::model::{AgentProfile, Goal, Operator, PlanningProblem, PropId, World};

/// How an operator relates to the rejected propositions among its true
/// preconditions: it deletes all of them (`Positive`), it relies on none
/// (`Vacuous`), or it leaves at least one in place (`Violating`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Cleaning {
    Positive,
    Vacuous,
    Violating,
}

impl fmt::Display for Cleaning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cleaning::Positive => "positive",
            Cleaning::Vacuous => "vacuous",
            Cleaning::Violating => "violating",
        })
    }
}

/// Verdict and diagnostics for a goal validity check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GoalCheck {
    /// Required-true propositions outside the agent's clean base.
    pub outside_base: BTreeSet<PropId>,
    /// Incompatible pairs required true together.
    pub incompatible: BTreeSet<(PropId, PropId)>,
}

impl GoalCheck {
    pub fn is_valid(&self) -> bool {
        self.outside_base.is_empty() && self.incompatible.is_empty()
    }
}

impl fmt::Display for GoalCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("goal is valid");
        }
        let mut parts = Vec::new();
        for p in &self.outside_base {
            parts.push(format!("{p} is outside the agent's clean base"));
        }
        for (a, b) in &self.incompatible {
            parts.push(format!("{a} and {b} are incompatible but both required"));
        }
        f.write_str(&parts.join("; "))
    }
}

/// Checks a goal against an agent: every required-true proposition must be
/// in the clean base, and no two required-true propositions may be
/// mutually incompatible. The required-false side is unconstrained.
pub fn check_goal(goal: &Goal, profile: &AgentProfile, world: &World) -> GoalCheck {
    let base = prop_base_clean(profile, world);
    let mut check = GoalCheck::default();
    for p in goal.require_true() {
        if !base.contains(p) {
            check.outside_base.insert(p.clone());
        }
    }
    for (a, b) in world.incompat_pairs() {
        if goal.require_true().contains(a) && goal.require_true().contains(b) {
            check.incompatible.insert((a.clone(), b.clone()));
        }
    }
    check
}

pub fn goal_valid(goal: &Goal, profile: &AgentProfile, world: &World) -> bool {
    check_goal(goal, profile, world).is_valid()
}

/// An operator is admissible when everything it adds is in `base`.
pub fn operator_admissible_in(op: &Operator, base: &BTreeSet<PropId>) -> bool {
    op.add().is_subset(base)
}

pub fn operator_admissible(op: &Operator, profile: &AgentProfile, world: &World) -> bool {
    operator_admissible_in(op, &prop_base_clean(profile, world))
}

/// Classifies `op` against a precomputed complement of the clean base.
pub fn classify_cleaning_in(op: &Operator, complement: &BTreeSet<PropId>) -> Cleaning {
    let relied_on: BTreeSet<&PropId> = op.pre_true().intersection(complement).collect();
    if relied_on.is_empty() {
        Cleaning::Vacuous
    } else if relied_on.iter().all(|p| op.del().contains(*p)) {
        Cleaning::Positive
    } else {
        Cleaning::Violating
    }
}

pub fn classify_cleaning(op: &Operator, profile: &AgentProfile, world: &World) -> Cleaning {
    classify_cleaning_in(op, &prop_base_clean_complement(profile, world))
}

/// A full per-operator verdict for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorClassification {
    pub operator: String,
    pub admissible: bool,
    pub cleaning: Cleaning,
}

/// One classification per operator, in declaration order.
pub fn classify_operators(
    problem: &PlanningProblem,
    profile: &AgentProfile,
) -> Vec<OperatorClassification> {
    let base = prop_base_clean(profile, problem.world());
    let complement: BTreeSet<PropId> = problem.world().props().difference(&base).cloned().collect();
    problem
        .operators()
        .iter()
        .map(|op| OperatorClassification {
            operator: op.name().to_string(),
            admissible: operator_admissible_in(op, &base),
            cleaning: classify_cleaning_in(op, &complement),
        })
        .collect()
}

/// The operators the agent may plan with, in declaration order. With
/// `require_cleaning`, operators classified as violating are dropped too.
pub fn admissible_operators<'a>(
    problem: &'a PlanningProblem,
    profile: &AgentProfile,
    require_cleaning: bool,
) -> Vec<&'a Operator> {
    let base = prop_base_clean(profile, problem.world());
    let complement: BTreeSet<PropId> = problem.world().props().difference(&base).cloned().collect();
    problem
        .operators()
        .iter()
        .filter(|op| {
            operator_admissible_in(op, &base)
                && (!require_cleaning
                    || classify_cleaning_in(op, &complement) != Cleaning::Violating)
        })
        .collect()
}
