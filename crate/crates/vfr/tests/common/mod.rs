//! Random instance generators and fixture helpers shared by the
//! integration suites.
//!
//! Generated instances are deliberately small: at most six propositions,
//! four operators, and three values, so exhaustive oracles stay fast.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use proptest::prelude::*;
use vfr::model::{
    AgentProfile, Goal, Operator, PlanningProblem, PropId, Scale, ValueId, Weight, World,
};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn load_fixture(name: &str) -> vfr::dsl::Document {
    let source = std::fs::read_to_string(fixture_path(name)).unwrap();
    vfr::dsl::parse(&source)
        .unwrap_or_else(|errs| panic!("fixture {name} does not parse: {errs:?}"))
}

pub fn prop_id(index: usize) -> PropId {
    PropId::new(format!("p{}", index + 1)).unwrap()
}

pub fn value_id(index: usize) -> ValueId {
    ValueId::new(format!("V{}", index + 1)).unwrap()
}

pub fn arb_weight() -> impl Strategy<Value = Weight> {
    prop_oneof![
        3 => (1u32..=3).prop_map(Weight::Determinate),
        1 => Just(Weight::Indeterminate),
    ]
}

fn subset(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::sample::subsequence((0..n).collect::<Vec<usize>>(), 0..=n)
}

type RawOps = Vec<(Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>)>;
type RawInstance = (
    usize,
    usize,
    RawOps,
    Vec<Weight>,
    BTreeMap<(usize, usize), Weight>,
    Vec<usize>,
    (Vec<usize>, Vec<usize>),
    Option<(usize, usize)>,
);

/// A small planning instance together with one agent profile. Operator
/// contradictions are repaired rather than rejected so shrinking stays
/// effective; an occasional incompatibility pair exercises consistency
/// failures.
pub fn arb_instance() -> impl Strategy<Value = (PlanningProblem, AgentProfile)> {
    (2usize..=6, 1usize..=4, 0usize..=3).prop_flat_map(|(n_props, n_ops, n_values)| {
        (
            Just(n_props),
            Just(n_values),
            proptest::collection::vec(
                (
                    subset(n_props),
                    subset(n_props),
                    subset(n_props),
                    subset(n_props),
                ),
                n_ops,
            ),
            proptest::collection::vec(arb_weight(), n_values),
            proptest::collection::btree_map(
                ((0..n_props), (0..n_values.max(1))),
                arb_weight(),
                0..=2 * n_props,
            ),
            subset(n_props),
            (subset(n_props), subset(n_props)),
            proptest::option::weighted(0.25, ((0..n_props), (0..n_props))),
        )
            .prop_map(build_instance)
    })
}

fn build_instance(parts: RawInstance) -> (PlanningProblem, AgentProfile) {
    let (n_props, n_values, ops, thresholds, assessments, initial, goal, incompat) = parts;
    let props =
        |indices: &[usize]| -> BTreeSet<PropId> { indices.iter().map(|&i| prop_id(i)).collect() };

    let pair = incompat.and_then(|(a, b)| (a != b).then(|| (prop_id(a), prop_id(b))));
    let world = World::new(
        (0..n_props).map(prop_id),
        (0..n_values).map(value_id),
        Scale::new([1, 2, 3]).unwrap(),
        pair.clone(),
    )
    .unwrap();

    let mut init = props(&initial);
    if let Some((a, b)) = &pair {
        if init.contains(a) && init.contains(b) {
            init.remove(b);
        }
    }
    let init = world.make_state(init).unwrap();

    let operators = ops
        .iter()
        .enumerate()
        .map(|(i, (x, y, z, t))| {
            let x = props(x);
            let y: BTreeSet<PropId> = props(y).difference(&x).cloned().collect();
            let z = props(z);
            let t: BTreeSet<PropId> = props(t).difference(&z).cloned().collect();
            Operator::new(format!("o{}", i + 1), x, y, z, t).unwrap()
        })
        .collect();

    let plus = props(&goal.0);
    let minus: BTreeSet<PropId> = props(&goal.1).difference(&plus).cloned().collect();
    let goal = Goal::new(plus, minus).unwrap();

    let problem = PlanningProblem::new(world, operators, init, goal).unwrap();

    let mut profile = AgentProfile::new("A").unwrap();
    for (i, weight) in thresholds.iter().enumerate() {
        profile.set_value_weight(value_id(i), *weight);
    }
    for (&(pi, vi), weight) in &assessments {
        if vi < n_values {
            profile.set_prop_weight(value_id(vi), prop_id(pi), *weight);
        }
    }

    (problem, profile)
}

/// A profile over a fixed grid world, for filter-only properties.
pub fn arb_grid_profile(n_props: usize, n_values: usize) -> impl Strategy<Value = AgentProfile> {
    (
        proptest::collection::vec(arb_weight(), n_values),
        proptest::collection::vec(proptest::collection::vec(arb_weight(), n_values), n_props),
    )
        .prop_map(move |(thresholds, grid)| {
            let mut profile = AgentProfile::new("A").unwrap();
            for (vi, weight) in thresholds.iter().enumerate() {
                profile.set_value_weight(value_id(vi), *weight);
            }
            for (pi, row) in grid.iter().enumerate() {
                for (vi, weight) in row.iter().enumerate() {
                    profile.set_prop_weight(value_id(vi), prop_id(pi), *weight);
                }
            }
            profile
        })
}

/// The world matching [`arb_grid_profile`]: every proposition, every
/// value, scale 1..3, no incompatibilities.
pub fn grid_world(n_props: usize, n_values: usize) -> World {
    World::new(
        (0..n_props).map(prop_id),
        (0..n_values).map(value_id),
        Scale::new([1, 2, 3]).unwrap(),
        [],
    )
    .unwrap()
}
