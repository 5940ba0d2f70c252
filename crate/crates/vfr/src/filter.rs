//! The value filter: which propositions an agent's value system lets
//! through, plus two-agent agreement and cooperation analysis.
//!
//! A proposition passes for a value when its assessed weight is not below
//! the agent's threshold weight for that value. Comparisons touching the
//! indeterminate weight are all false, so missing assessments and missing
//! thresholds never reject anything.

use std::collections::BTreeSet;

use crate::model::{AgentProfile, PropId, State, ValueId, World};

/// True iff `prop` passes the filter of `profile` with respect to `value`.
pub fn passes_value(profile: &AgentProfile, value: &ValueId, prop: &PropId) -> bool {
    let assessed = profile.prop_weight(value, prop);
    let threshold = profile.value_weight(value);
    !assessed.lt(threshold)
}

/// The propositions of `world` that pass the filter on every value.
pub fn prop_base_clean(profile: &AgentProfile, world: &World) -> BTreeSet<PropId> {
    world
        .props()
        .iter()
        .filter(|p| world.values().iter().all(|v| passes_value(profile, v, p)))
        .cloned()
        .collect()
}

/// The propositions of `world` rejected by at least one value.
pub fn prop_base_clean_complement(profile: &AgentProfile, world: &World) -> BTreeSet<PropId> {
    let clean = prop_base_clean(profile, world);
    world.props().difference(&clean).cloned().collect()
}

/// Per-proposition filter outcome with the values that rejected it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterVerdict {
    pub prop: PropId,
    pub passed: bool,
    pub failing_values: BTreeSet<ValueId>,
}

/// One verdict per proposition, in proposition order.
pub fn explain_filter(profile: &AgentProfile, world: &World) -> Vec<FilterVerdict> {
    world
        .props()
        .iter()
        .map(|p| {
            let failing_values: BTreeSet<ValueId> = world
                .values()
                .iter()
                .filter(|v| !passes_value(profile, v, p))
                .cloned()
                .collect();
            FilterVerdict {
                prop: p.clone(),
                passed: failing_values.is_empty(),
                failing_values,
            }
        })
        .collect()
}

/// Four-way partition of the proposition base by two agents' filters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgentComparison {
    pub both_accept: BTreeSet<PropId>,
    pub only_first: BTreeSet<PropId>,
    pub only_second: BTreeSet<PropId>,
    pub both_reject: BTreeSet<PropId>,
}

pub fn compare_agents(a: &AgentProfile, b: &AgentProfile, world: &World) -> AgentComparison {
    let base_a = prop_base_clean(a, world);
    let base_b = prop_base_clean(b, world);
    let mut cmp = AgentComparison {
        both_accept: BTreeSet::new(),
        only_first: BTreeSet::new(),
        only_second: BTreeSet::new(),
        both_reject: BTreeSet::new(),
    };
    for p in world.props() {
        let bucket = match (base_a.contains(p), base_b.contains(p)) {
            (true, true) => &mut cmp.both_accept,
            (true, false) => &mut cmp.only_first,
            (false, true) => &mut cmp.only_second,
            (false, false) => &mut cmp.both_reject,
        };
        bucket.insert(p.clone());
    }
    cmp
}

/// A proposition in a trace state that one of the two agents rejects.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoopOffence {
    /// Index into the trace; 0 is the initial state.
    pub state_index: usize,
    pub prop: PropId,
    pub agent: String,
}

/// Outcome of a cooperation check over a state trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CooperationReport {
    pub cooperative: bool,
    pub offences: Vec<CoopOffence>,
}

/// Two agents can cooperate on a trace when every proposition of every
/// state lies in both clean bases. Offences list each rejection as
/// (state index, proposition, rejecting agent), first agent first.
///
/// This reading is deliberately strict and should be treated as
/// experimental; weaker notions (final state only, negotiated subsets)
/// are plausible refinements.
pub fn cooperation_check(
    a: &AgentProfile,
    b: &AgentProfile,
    world: &World,
    trace: &[State],
) -> CooperationReport {
    let base_a = prop_base_clean(a, world);
    let base_b = prop_base_clean(b, world);
    let mut offences = Vec::new();
    for (state_index, state) in trace.iter().enumerate() {
        for prop in state.iter() {
            for (agent, base) in [(a.agent(), &base_a), (b.agent(), &base_b)] {
                if !base.contains(prop) {
                    offences.push(CoopOffence {
                        state_index,
                        prop: prop.clone(),
                        agent: agent.to_string(),
                    });
                }
            }
        }
    }
    CooperationReport {
        cooperative: offences.is_empty(),
        offences,
    }
}
