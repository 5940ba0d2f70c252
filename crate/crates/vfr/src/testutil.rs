//! Shared builders for the worked examples used across module tests.

use std::collections::BTreeSet;

use crate::model::{
    AgentProfile, Goal, Operator, PlanningProblem, PropId, Scale, ValueId, Weight, World,
};

pub fn prop(name: &str) -> PropId {
    PropId::new(name).unwrap()
}

pub fn value(name: &str) -> ValueId {
    ValueId::new(name).unwrap()
}

pub fn props<const N: usize>(names: [&str; N]) -> BTreeSet<PropId> {
    names.into_iter().map(prop).collect()
}

/// Four propositions, two values, scale 1..3, no incompatibilities.
pub fn table1_world() -> World {
    World::new(
        ["p1", "p2", "p3", "p4"].map(prop),
        ["P", "Q"].map(value),
        Scale::new([1, 2, 3]).unwrap(),
        [],
    )
    .unwrap()
}

/// Agent A's thresholds (P=2, Q=1) and the full assessment grid. The
/// filter accepts p2, p3, p4 and rejects p1 (rated 1 on P).
pub fn table1_profile() -> AgentProfile {
    let mut profile = AgentProfile::new("A").unwrap();
    profile.set_value_weight(value("P"), Weight::Determinate(2));
    profile.set_value_weight(value("Q"), Weight::Determinate(1));
    for (p, weight_p, weight_q) in [("p1", 1, 2), ("p2", 2, 2), ("p3", 2, 3), ("p4", 3, 1)] {
        profile.set_prop_weight(value("P"), prop(p), Weight::Determinate(weight_p));
        profile.set_prop_weight(value("Q"), prop(p), Weight::Determinate(weight_q));
    }
    profile
}

pub fn op(
    name: &str,
    pre_true: &[&str],
    pre_false: &[&str],
    add: &[&str],
    del: &[&str],
) -> Operator {
    Operator::new(
        name,
        pre_true.iter().map(|n| prop(n)),
        pre_false.iter().map(|n| prop(n)),
        add.iter().map(|n| prop(n)),
        del.iter().map(|n| prop(n)),
    )
    .unwrap()
}

fn example3_operators() -> Vec<Operator> {
    vec![
        op("O1", &["p1", "p2"], &[], &["p3"], &["p1"]),
        op("O2", &["p2"], &[], &["p3"], &[]),
        op("O3", &["p3"], &[], &["p4"], &[]),
    ]
}

/// Initial {p1, p2}, goal requires p4, operators O1..O3.
pub fn example3_problem() -> PlanningProblem {
    let world = table1_world();
    let initial = world.make_state([prop("p1"), prop("p2")]).unwrap();
    let goal = Goal::new([prop("p4")], []).unwrap();
    PlanningProblem::new(world, example3_operators(), initial, goal).unwrap()
}

/// Same instance plus O3p, which also re-adds the rejected p1.
pub fn example3_problem_with_o3p() -> PlanningProblem {
    let world = table1_world();
    let initial = world.make_state([prop("p1"), prop("p2")]).unwrap();
    let goal = Goal::new([prop("p4")], []).unwrap();
    let mut operators = example3_operators();
    operators.push(op("O3p", &["p3"], &[], &["p1", "p4"], &[]));
    PlanningProblem::new(world, operators, initial, goal).unwrap()
}
