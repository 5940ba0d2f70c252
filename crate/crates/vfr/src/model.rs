//! Vocabulary and problem types: propositions, values, weights, worlds,
//! states, operators, goals, planning problems, and agent profiles.
//!
//! Everything here is immutable once constructed and iterates in a fixed
//! lexicographic order, so downstream search and reports are reproducible.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Errors raised while constructing or validating model values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("{0:?} is not a valid identifier")]
    InvalidName(String),
    #[error("scale must contain at least one level")]
    EmptyScale,
    #[error("scale levels must be strictly increasing ({prev} precedes {next})")]
    NonIncreasingScale { prev: u32, next: u32 },
    #[error("proposition {0} cannot be incompatible with itself")]
    SelfIncompatible(PropId),
    #[error("unknown proposition {0}")]
    UnknownProposition(PropId),
    #[error("unknown value {0}")]
    UnknownValue(ValueId),
    #[error("inconsistent state: {0} and {1} cannot co-occur")]
    InconsistentState(PropId, PropId),
    #[error("operator {operator}: {prop} is required both true and false")]
    ContradictoryPrecondition { operator: String, prop: PropId },
    #[error("operator {operator}: {prop} is both added and deleted")]
    ContradictoryEffect { operator: String, prop: PropId },
    #[error("goal requires {0} both true and false")]
    ContradictoryGoal(PropId),
    #[error("duplicate operator name {0}")]
    DuplicateOperator(String),
}

/// True when `name` is a non-empty `[A-Za-z_][A-Za-z0-9_]*` identifier.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn checked_name(name: impl Into<String>) -> Result<String, ModelError> {
    let name = name.into();
    if is_identifier(&name) {
        Ok(name)
    } else {
        Err(ModelError::InvalidName(name))
    }
}

/// A proposition name. Propositions are atoms; two ids are the same
/// proposition exactly when their names are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PropId(String);

impl PropId {
    pub fn new(name: impl Into<String>) -> Result<Self, ModelError> {
        checked_name(name).map(PropId)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for PropId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An abstract value concept (privacy, safety, ...), identified by name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ValueId(String);

impl ValueId {
    pub fn new(name: impl Into<String>) -> Result<Self, ModelError> {
        checked_name(name).map(ValueId)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ValueId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A weight on the scale, or the designated indeterminate weight `?`.
///
/// `?` is unordered with respect to every weight: all four order
/// comparisons return `false` whenever either operand is indeterminate.
/// That convention is what lets unassessed propositions pass every value
/// filter, so this type deliberately does not implement `PartialOrd`;
/// use [`Weight::lt`] and friends instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Weight {
    Determinate(u32),
    Indeterminate,
}

impl Weight {
    pub fn is_indeterminate(self) -> bool {
        matches!(self, Weight::Indeterminate)
    }

    /// Ordering between two determinate weights; `None` if either is `?`.
    pub fn compare(self, other: Weight) -> Option<Ordering> {
        match (self, other) {
            (Weight::Determinate(a), Weight::Determinate(b)) => Some(a.cmp(&b)),
            _ => None,
        }
    }

    pub fn lt(self, other: Weight) -> bool {
        self.compare(other) == Some(Ordering::Less)
    }

    pub fn le(self, other: Weight) -> bool {
        matches!(self.compare(other), Some(Ordering::Less | Ordering::Equal))
    }

    pub fn gt(self, other: Weight) -> bool {
        self.compare(other) == Some(Ordering::Greater)
    }

    pub fn ge(self, other: Weight) -> bool {
        matches!(
            self.compare(other),
            Some(Ordering::Greater | Ordering::Equal)
        )
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Determinate(level) => write!(f, "{level}"),
            Weight::Indeterminate => f.write_str("?"),
        }
    }
}

/// A finite, totally ordered set of weight levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scale {
    levels: Vec<u32>,
}

impl Scale {
    /// Builds a scale from a strictly increasing, non-empty level sequence.
    pub fn new(levels: impl IntoIterator<Item = u32>) -> Result<Self, ModelError> {
        let levels: Vec<u32> = levels.into_iter().collect();
        if levels.is_empty() {
            return Err(ModelError::EmptyScale);
        }
        for pair in levels.windows(2) {
            if pair[0] >= pair[1] {
                return Err(ModelError::NonIncreasingScale {
                    prev: pair[0],
                    next: pair[1],
                });
            }
        }
        Ok(Scale { levels })
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub fn contains(&self, level: u32) -> bool {
        self.levels.binary_search(&level).is_ok()
    }

    /// True unless `weight` is determinate at a level outside the scale.
    pub fn admits(&self, weight: Weight) -> bool {
        match weight {
            Weight::Determinate(level) => self.contains(level),
            Weight::Indeterminate => true,
        }
    }
}

/// The shared vocabulary: registered propositions and values, the weight
/// scale, and the symmetric objective-incompatibility relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct World {
    props: BTreeSet<PropId>,
    values: BTreeSet<ValueId>,
    scale: Scale,
    // Stored with the lexicographically smaller proposition first.
    incompat: BTreeSet<(PropId, PropId)>,
}

impl World {
    pub fn new(
        props: impl IntoIterator<Item = PropId>,
        values: impl IntoIterator<Item = ValueId>,
        scale: Scale,
        incompat: impl IntoIterator<Item = (PropId, PropId)>,
    ) -> Result<Self, ModelError> {
        let props: BTreeSet<PropId> = props.into_iter().collect();
        let values: BTreeSet<ValueId> = values.into_iter().collect();
        let mut pairs = BTreeSet::new();
        for (a, b) in incompat {
            if a == b {
                return Err(ModelError::SelfIncompatible(a));
            }
            for p in [&a, &b] {
                if !props.contains(p) {
                    return Err(ModelError::UnknownProposition(p.clone()));
                }
            }
            let pair = if a < b { (a, b) } else { (b, a) };
            pairs.insert(pair);
        }
        Ok(World {
            props,
            values,
            scale,
            incompat: pairs,
        })
    }

    pub fn props(&self) -> &BTreeSet<PropId> {
        &self.props
    }

    pub fn values(&self) -> &BTreeSet<ValueId> {
        &self.values
    }

    pub fn scale(&self) -> &Scale {
        &self.scale
    }

    pub fn incompat_pairs(&self) -> impl Iterator<Item = &(PropId, PropId)> {
        self.incompat.iter()
    }

    pub fn has_prop(&self, prop: &PropId) -> bool {
        self.props.contains(prop)
    }

    pub fn incompatible(&self, a: &PropId, b: &PropId) -> bool {
        let pair = if a < b { (a, b) } else { (b, a) };
        self.incompat
            .iter()
            .any(|(x, y)| (x, y) == (pair.0, pair.1))
    }

    /// First (lexicographically) incompatible pair within `props`, if any.
    pub fn find_conflict(&self, props: &BTreeSet<PropId>) -> Option<(PropId, PropId)> {
        self.incompat
            .iter()
            .find(|(a, b)| props.contains(a) && props.contains(b))
            .cloned()
    }

    /// Builds a consistent state out of registered propositions.
    pub fn make_state(&self, props: impl IntoIterator<Item = PropId>) -> Result<State, ModelError> {
        let props: BTreeSet<PropId> = props.into_iter().collect();
        for p in &props {
            if !self.props.contains(p) {
                return Err(ModelError::UnknownProposition(p.clone()));
            }
        }
        if let Some((a, b)) = self.find_conflict(&props) {
            return Err(ModelError::InconsistentState(a, b));
        }
        Ok(State { props })
    }
}

/// A consistent, finite set of propositions taken to be true; everything
/// else is false.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct State {
    props: BTreeSet<PropId>,
}

impl State {
    /// Wraps an already-validated proposition set. Callers must have
    /// checked registration and consistency against the relevant world.
    pub(crate) fn from_checked(props: BTreeSet<PropId>) -> Self {
        State { props }
    }

    pub fn props(&self) -> &BTreeSet<PropId> {
        &self.props
    }

    pub fn contains(&self, prop: &PropId) -> bool {
        self.props.contains(prop)
    }

    pub fn len(&self) -> usize {
        self.props.len()
    }

    pub fn is_empty(&self) -> bool {
        self.props.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &PropId> {
        self.props.iter()
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.props.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// A STRIPS operator: true preconditions, false preconditions, add
/// effects, and delete effects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Operator {
    name: String,
    pre_true: BTreeSet<PropId>,
    pre_false: BTreeSet<PropId>,
    add: BTreeSet<PropId>,
    del: BTreeSet<PropId>,
}

impl Operator {
    /// Rejects operators that require a proposition both true and false,
    /// or that both add and delete the same proposition.
    pub fn new(
        name: impl Into<String>,
        pre_true: impl IntoIterator<Item = PropId>,
        pre_false: impl IntoIterator<Item = PropId>,
        add: impl IntoIterator<Item = PropId>,
        del: impl IntoIterator<Item = PropId>,
    ) -> Result<Self, ModelError> {
        let name = checked_name(name)?;
        let pre_true: BTreeSet<PropId> = pre_true.into_iter().collect();
        let pre_false: BTreeSet<PropId> = pre_false.into_iter().collect();
        let add: BTreeSet<PropId> = add.into_iter().collect();
        let del: BTreeSet<PropId> = del.into_iter().collect();
        if let Some(p) = pre_true.intersection(&pre_false).next() {
            return Err(ModelError::ContradictoryPrecondition {
                operator: name,
                prop: p.clone(),
            });
        }
        if let Some(p) = add.intersection(&del).next() {
            return Err(ModelError::ContradictoryEffect {
                operator: name,
                prop: p.clone(),
            });
        }
        Ok(Operator {
            name,
            pre_true,
            pre_false,
            add,
            del,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn pre_true(&self) -> &BTreeSet<PropId> {
        &self.pre_true
    }

    pub fn pre_false(&self) -> &BTreeSet<PropId> {
        &self.pre_false
    }

    pub fn add(&self) -> &BTreeSet<PropId> {
        &self.add
    }

    pub fn del(&self) -> &BTreeSet<PropId> {
        &self.del
    }

    fn referenced_props(&self) -> impl Iterator<Item = &PropId> {
        self.pre_true
            .iter()
            .chain(&self.pre_false)
            .chain(&self.add)
            .chain(&self.del)
    }
}

/// A goal: propositions that must be true and propositions that must be
/// false in a satisfying state.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Goal {
    require_true: BTreeSet<PropId>,
    require_false: BTreeSet<PropId>,
}

impl Goal {
    pub fn new(
        require_true: impl IntoIterator<Item = PropId>,
        require_false: impl IntoIterator<Item = PropId>,
    ) -> Result<Self, ModelError> {
        let require_true: BTreeSet<PropId> = require_true.into_iter().collect();
        let require_false: BTreeSet<PropId> = require_false.into_iter().collect();
        if let Some(p) = require_true.intersection(&require_false).next() {
            return Err(ModelError::ContradictoryGoal(p.clone()));
        }
        Ok(Goal {
            require_true,
            require_false,
        })
    }

    pub fn require_true(&self) -> &BTreeSet<PropId> {
        &self.require_true
    }

    pub fn require_false(&self) -> &BTreeSet<PropId> {
        &self.require_false
    }
}

/// A complete planning instance: world, operator list (declaration order
/// is significant for search), initial state, and goal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanningProblem {
    world: World,
    operators: Vec<Operator>,
    initial: State,
    goal: Goal,
}

impl PlanningProblem {
    pub fn new(
        world: World,
        operators: Vec<Operator>,
        initial: State,
        goal: Goal,
    ) -> Result<Self, ModelError> {
        let mut seen = BTreeSet::new();
        for op in &operators {
            if !seen.insert(op.name().to_string()) {
                return Err(ModelError::DuplicateOperator(op.name().to_string()));
            }
            for p in op.referenced_props() {
                if !world.has_prop(p) {
                    return Err(ModelError::UnknownProposition(p.clone()));
                }
            }
        }
        for p in goal.require_true().iter().chain(goal.require_false()) {
            if !world.has_prop(p) {
                return Err(ModelError::UnknownProposition(p.clone()));
            }
        }
        // Revalidate the initial state against this world; the caller may
        // have built it elsewhere.
        let initial = world.make_state(initial.props.clone())?;
        Ok(PlanningProblem {
            world,
            operators,
            initial,
            goal,
        })
    }

    pub fn world(&self) -> &World {
        &self.world
    }

    pub fn operators(&self) -> &[Operator] {
        &self.operators
    }

    pub fn initial(&self) -> &State {
        &self.initial
    }

    pub fn goal(&self) -> &Goal {
        &self.goal
    }

    pub fn operator(&self, name: &str) -> Option<&Operator> {
        self.operators.iter().find(|op| op.name() == name)
    }

    pub fn operator_index(&self, name: &str) -> Option<usize> {
        self.operators.iter().position(|op| op.name() == name)
    }
}

/// An agent's value profile: how much each value matters to the agent
/// (`value_weight`) and how the agent rates each proposition against each
/// value (`prop_weight`).
///
/// Both maps are total by default: anything not stored is `?`, so an
/// unassessed proposition or an unweighted value never blocks a filter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgentProfile {
    agent: String,
    value_weights: BTreeMap<ValueId, Weight>,
    prop_assessments: BTreeMap<(ValueId, PropId), Weight>,
}

impl AgentProfile {
    pub fn new(agent: impl Into<String>) -> Result<Self, ModelError> {
        Ok(AgentProfile {
            agent: checked_name(agent)?,
            value_weights: BTreeMap::new(),
            prop_assessments: BTreeMap::new(),
        })
    }

    pub fn agent(&self) -> &str {
        &self.agent
    }

    pub fn set_value_weight(&mut self, value: ValueId, weight: Weight) {
        self.value_weights.insert(value, weight);
    }

    pub fn set_prop_weight(&mut self, value: ValueId, prop: PropId, weight: Weight) {
        self.prop_assessments.insert((value, prop), weight);
    }

    /// Importance the agent ascribes to `value`; `?` when unstated.
    pub fn value_weight(&self, value: &ValueId) -> Weight {
        self.value_weights
            .get(value)
            .copied()
            .unwrap_or(Weight::Indeterminate)
    }

    /// The agent's rating of `prop` with respect to `value`; `?` when
    /// unstated.
    pub fn prop_weight(&self, value: &ValueId, prop: &PropId) -> Weight {
        self.prop_assessments
            .get(&(value.clone(), prop.clone()))
            .copied()
            .unwrap_or(Weight::Indeterminate)
    }

    /// Stored value weights, in value order.
    pub fn value_weights(&self) -> impl Iterator<Item = (&ValueId, Weight)> {
        self.value_weights.iter().map(|(v, w)| (v, *w))
    }

    /// Stored assessments, ordered by value then proposition.
    pub fn prop_weights(&self) -> impl Iterator<Item = (&ValueId, &PropId, Weight)> {
        self.prop_assessments.iter().map(|((v, p), w)| (v, p, *w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn prop(name: &str) -> PropId {
        PropId::new(name).unwrap()
    }

    fn value(name: &str) -> ValueId {
        ValueId::new(name).unwrap()
    }

    fn small_world() -> World {
        World::new(
            ["p1", "p2", "p3", "p4"].map(prop),
            ["P", "Q"].map(value),
            Scale::new([1, 2, 3]).unwrap(),
            [(prop("p1"), prop("p4"))],
        )
        .unwrap()
    }

    #[test]
    fn identifiers_are_validated() {
        assert!(PropId::new("p1").is_ok());
        assert!(PropId::new("_x_2").is_ok());
        assert!(PropId::new("").is_err());
        assert!(PropId::new("1p").is_err());
        assert!(PropId::new("a-b").is_err());
        assert!(ValueId::new("tick tock").is_err());
    }

    #[test]
    fn indeterminate_comparisons_are_all_false() {
        let q = Weight::Indeterminate;
        for level in [1, 2, 3] {
            let d = Weight::Determinate(level);
            for (a, b) in [(q, d), (d, q), (q, q)] {
                assert!(!a.lt(b));
                assert!(!a.le(b));
                assert!(!a.gt(b));
                assert!(!a.ge(b));
            }
        }
        assert_eq!(Weight::Indeterminate, Weight::Indeterminate);
    }

    #[test]
    fn determinate_comparisons_follow_integer_order() {
        let one = Weight::Determinate(1);
        let two = Weight::Determinate(2);
        assert!(one.lt(two));
        assert!(one.le(one));
        assert!(two.gt(one));
        assert!(two.ge(two));
        assert!(!two.lt(one));
    }

    #[test]
    fn scale_rejects_disorder() {
        assert_eq!(Scale::new([]), Err(ModelError::EmptyScale));
        assert!(Scale::new([3, 1]).is_err());
        assert!(Scale::new([1, 1]).is_err());
        let scale = Scale::new([1, 2, 3]).unwrap();
        assert!(scale.contains(2));
        assert!(!scale.contains(4));
        assert!(scale.admits(Weight::Indeterminate));
        assert!(!scale.admits(Weight::Determinate(7)));
    }

    #[test]
    fn incompatible_props_cannot_share_a_state() {
        let world = small_world();
        let err = world.make_state([prop("p1"), prop("p4")]).unwrap_err();
        assert_eq!(err, ModelError::InconsistentState(prop("p1"), prop("p4")));
    }

    #[test]
    fn empty_state_is_consistent() {
        let world = small_world();
        let state = world.make_state([]).unwrap();
        assert!(state.is_empty());
    }

    #[test]
    fn example_initial_state_builds() {
        let world = small_world();
        let state = world.make_state([prop("p1"), prop("p2")]).unwrap();
        assert_eq!(state.to_string(), "{p1, p2}");
    }

    #[test]
    fn make_state_rejects_unregistered_props() {
        let world = small_world();
        let err = world.make_state([prop("p9")]).unwrap_err();
        assert_eq!(err, ModelError::UnknownProposition(prop("p9")));
    }

    #[test]
    fn incompat_is_symmetric_and_irreflexive() {
        let world = small_world();
        assert!(world.incompatible(&prop("p1"), &prop("p4")));
        assert!(world.incompatible(&prop("p4"), &prop("p1")));
        assert!(!world.incompatible(&prop("p1"), &prop("p2")));
        let err = World::new(
            [prop("p1")],
            [],
            Scale::new([1]).unwrap(),
            [(prop("p1"), prop("p1"))],
        )
        .unwrap_err();
        assert_eq!(err, ModelError::SelfIncompatible(prop("p1")));
    }

    #[test]
    fn operator_rejects_contradictions() {
        let err = Operator::new("o", [prop("a")], [prop("a")], [], []).unwrap_err();
        assert!(matches!(err, ModelError::ContradictoryPrecondition { .. }));
        let err = Operator::new("o", [], [], [prop("a")], [prop("a")]).unwrap_err();
        assert!(matches!(err, ModelError::ContradictoryEffect { .. }));
    }

    #[test]
    fn goal_rejects_overlap() {
        let err = Goal::new([prop("a")], [prop("a")]).unwrap_err();
        assert_eq!(err, ModelError::ContradictoryGoal(prop("a")));
    }

    #[test]
    fn problem_requires_registered_props_everywhere() {
        let world = small_world();
        let initial = world.make_state([prop("p1")]).unwrap();
        let op = Operator::new("o", [prop("p9")], [], [], []).unwrap();
        let err = PlanningProblem::new(world.clone(), vec![op], initial.clone(), Goal::default())
            .unwrap_err();
        assert_eq!(err, ModelError::UnknownProposition(prop("p9")));

        let goal = Goal::new([prop("p9")], []).unwrap();
        let err = PlanningProblem::new(world, vec![], initial, goal).unwrap_err();
        assert_eq!(err, ModelError::UnknownProposition(prop("p9")));
    }

    #[test]
    fn problem_rejects_duplicate_operator_names() {
        let world = small_world();
        let initial = world.make_state([]).unwrap();
        let o1 = Operator::new("o", [], [], [prop("p1")], []).unwrap();
        let o2 = Operator::new("o", [], [], [prop("p2")], []).unwrap();
        let err = PlanningProblem::new(world, vec![o1, o2], initial, Goal::default()).unwrap_err();
        assert_eq!(err, ModelError::DuplicateOperator("o".into()));
    }

    #[test]
    fn profile_defaults_to_indeterminate() {
        let mut profile = AgentProfile::new("A").unwrap();
        profile.set_value_weight(value("P"), Weight::Determinate(2));
        profile.set_value_weight(value("Q"), Weight::Determinate(1));
        profile.set_prop_weight(value("P"), prop("p1"), Weight::Determinate(1));
        profile.set_prop_weight(value("Q"), prop("p3"), Weight::Determinate(3));

        assert_eq!(profile.value_weight(&value("P")), Weight::Determinate(2));
        assert_eq!(profile.value_weight(&value("Q")), Weight::Determinate(1));
        assert_eq!(profile.value_weight(&value("R")), Weight::Indeterminate);
        assert_eq!(
            profile.prop_weight(&value("P"), &prop("p1")),
            Weight::Determinate(1)
        );
        assert_eq!(
            profile.prop_weight(&value("Q"), &prop("p3")),
            Weight::Determinate(3)
        );
        assert_eq!(
            profile.prop_weight(&value("P"), &prop("p2")),
            Weight::Indeterminate
        );
    }

    fn prop_names() -> impl Strategy<Value = Vec<String>> {
        prop::collection::vec("[a-z][a-z0-9]{0,3}", 1..6).prop_map(|mut v| {
            v.sort();
            v.dedup();
            v
        })
    }

    proptest! {
        #[test]
        fn state_construction_is_canonical(names in prop_names()) {
            let props: Vec<PropId> = names.iter().map(|n| prop(n)).collect();
            let world = World::new(
                props.clone(),
                [],
                Scale::new([1]).unwrap(),
                [],
            ).unwrap();
            let state = world.make_state(props).unwrap();
            let again = world.make_state(state.props().clone()).unwrap();
            prop_assert_eq!(state, again);
        }

        #[test]
        fn operator_rejects_random_overlaps(
            xs in prop::collection::btree_set("[a-e]", 1..4),
            extra in prop::collection::btree_set("[f-j]", 0..3),
        ) {
            let overlap: Vec<PropId> = xs.iter().map(|n| prop(n)).collect();
            let rest: Vec<PropId> = extra.iter().map(|n| prop(n)).collect();
            // Shared member in pre_true and pre_false.
            let mut pre_false = rest.clone();
            pre_false.push(overlap[0].clone());
            prop_assert!(Operator::new("o", overlap.clone(), pre_false, [], []).is_err());
            // Shared member in add and del.
            let mut del = rest;
            del.push(overlap[0].clone());
            prop_assert!(Operator::new("o", [], [], overlap, del).is_err());
        }
    }
}
