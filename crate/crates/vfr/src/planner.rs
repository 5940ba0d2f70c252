//! Successor semantics, exhaustive plan enumeration in standard and
//! value-filtered modes, plan replay validation, and a literal
//! brute-force oracle for cross-checking the search.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::ethics::{
    admissible_operators, check_goal, classify_cleaning_in, operator_admissible_in, Cleaning,
    GoalCheck,
};
use crate::filter::{prop_base_clean, prop_base_clean_complement};
use crate::model::{AgentProfile, Goal, Operator, PlanningProblem, PropId, State, World};

/// Whether search respects the agent's value filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Classical planning: every operator is available.
    Standard,
    /// Value-filtered planning: the goal must be valid for the agent and
    /// only admissible operators are available.
    Vfr,
}

/// Search parameters. `require_cleaning` additionally bars operators that
/// leave a rejected precondition in place (vfr mode only). `strict_goal`
/// extends the goal's required-false set with the agent's complement, so
/// no rejected proposition may survive into a final state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub mode: SearchMode,
    pub require_cleaning: bool,
    pub strict_goal: bool,
    pub max_depth: usize,
}

impl SearchConfig {
    pub const DEFAULT_MAX_DEPTH: usize = 32;

    pub fn standard() -> Self {
        SearchConfig {
            mode: SearchMode::Standard,
            require_cleaning: false,
            strict_goal: false,
            max_depth: Self::DEFAULT_MAX_DEPTH,
        }
    }

    pub fn vfr() -> Self {
        SearchConfig {
            mode: SearchMode::Vfr,
            ..Self::standard()
        }
    }
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self::standard()
    }
}

/// A goal-reaching operator sequence with its full state trace.
/// `trace[0]` is the initial state and `trace.len() == steps.len() + 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Plan {
    pub steps: Vec<String>,
    pub trace: Vec<State>,
}

impl Plan {
    pub fn final_state(&self) -> &State {
        self.trace.last().expect("plan trace is never empty")
    }
}

/// Failure applying one operator to one state.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransitionError {
    #[error("operator {operator} is not applicable")]
    NotApplicable { operator: String },
    #[error("operator {operator} produces an inconsistent state ({} with {})", .conflict.0, .conflict.1)]
    Inconsistent {
        operator: String,
        conflict: (PropId, PropId),
    },
}

/// Failure of a whole search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanError {
    #[error("a value profile is required for this search")]
    MissingProfile,
    #[error("goal is not valid for this agent: {0}")]
    InvalidGoal(GoalCheck),
    #[error(transparent)]
    Transition(#[from] TransitionError),
    #[error("instance exceeds the oracle bound (12 propositions, 10 operators, depth 8)")]
    BoundExceeded,
}

/// Failure replaying a named step sequence. Step indices are zero-based;
/// messages render them one-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidateError {
    #[error("a value profile is required for this validation")]
    MissingProfile,
    #[error("unknown operator {name} at step {}", step + 1)]
    UnknownOperator { step: usize, name: String },
    #[error("operator {operator} not applicable at step {}", step + 1)]
    NotApplicable { step: usize, operator: String },
    #[error("inadmissible operator {operator} at step {}", step + 1)]
    Inadmissible { step: usize, operator: String },
    #[error("operator {operator} at step {} produces an inconsistent state ({} with {})", step + 1, .conflict.0, .conflict.1)]
    Inconsistent {
        step: usize,
        operator: String,
        conflict: (PropId, PropId),
    },
    #[error("final state {final_state} does not satisfy the goal")]
    GoalNotSatisfied { final_state: State },
}

/// True iff `op` may fire in `s`: required-true propositions hold and
/// required-false ones do not.
pub fn applicable(op: &Operator, s: &State) -> bool {
    op.pre_true().is_subset(s.props()) && op.pre_false().is_disjoint(s.props())
}

/// Applies `op` to `s`: deletions first, then additions; untouched
/// propositions persist. The result must be consistent in `world`.
pub fn succ(s: &State, op: &Operator, world: &World) -> Result<State, TransitionError> {
    if !applicable(op, s) {
        return Err(TransitionError::NotApplicable {
            operator: op.name().to_string(),
        });
    }
    let mut props: BTreeSet<PropId> = s.props().difference(op.del()).cloned().collect();
    props.extend(op.add().iter().cloned());
    if let Some(conflict) = world.find_conflict(&props) {
        return Err(TransitionError::Inconsistent {
            operator: op.name().to_string(),
            conflict,
        });
    }
    Ok(State::from_checked(props))
}

/// True iff `s` meets the goal: required-true propositions hold and
/// required-false ones do not.
pub fn satisfied(s: &State, goal: &Goal) -> bool {
    goal.require_true().is_subset(s.props()) && goal.require_false().is_disjoint(s.props())
}

// The goal actually searched for: possibly widened required-false set.
// Held as raw sets because the widened sides may overlap in standard
// mode, which simply makes the goal unsatisfiable.
struct EffectiveGoal {
    require_true: BTreeSet<PropId>,
    require_false: BTreeSet<PropId>,
}

impl EffectiveGoal {
    fn new(
        goal: &Goal,
        profile: Option<&AgentProfile>,
        world: &World,
        strict: bool,
    ) -> Result<Self, PlanError> {
        let mut require_false = goal.require_false().clone();
        if strict {
            let profile = profile.ok_or(PlanError::MissingProfile)?;
            require_false.extend(prop_base_clean_complement(profile, world));
        }
        Ok(EffectiveGoal {
            require_true: goal.require_true().clone(),
            require_false,
        })
    }

    fn satisfied(&self, s: &State) -> bool {
        self.require_true.is_subset(s.props()) && self.require_false.is_disjoint(s.props())
    }
}

/// Enumerates every plan reachable under the branch rules, depth first
/// over the operator pool in declaration order:
///
/// - a move is taken only if the successor is not a subset of the current
///   state (the progress rule);
/// - no state may repeat along a path;
/// - a branch ends, emitting a plan, at the first state satisfying the
///   goal (so the empty plan is the sole result when the initial state
///   already satisfies it);
/// - branches are cut at `max_depth` steps.
///
/// In vfr mode the profile is required, the goal must be valid for the
/// agent, and the pool shrinks to the admissible operators.
pub fn find_plans(
    problem: &PlanningProblem,
    profile: Option<&AgentProfile>,
    config: &SearchConfig,
) -> Result<Vec<Plan>, PlanError> {
    let pool: Vec<&Operator> = match config.mode {
        SearchMode::Standard => problem.operators().iter().collect(),
        SearchMode::Vfr => {
            let profile = profile.ok_or(PlanError::MissingProfile)?;
            let check = check_goal(problem.goal(), profile, problem.world());
            if !check.is_valid() {
                return Err(PlanError::InvalidGoal(check));
            }
            admissible_operators(problem, profile, config.require_cleaning)
        }
    };
    let goal = EffectiveGoal::new(problem.goal(), profile, problem.world(), config.strict_goal)?;

    let mut plans = Vec::new();
    let mut trace = vec![problem.initial().clone()];
    let mut steps = Vec::new();
    if goal.satisfied(problem.initial()) {
        plans.push(Plan {
            steps: steps.clone(),
            trace: trace.clone(),
        });
        return Ok(plans);
    }
    dfs(
        problem.world(),
        &pool,
        &goal,
        config.max_depth,
        &mut trace,
        &mut steps,
        &mut plans,
    )?;
    Ok(plans)
}

fn dfs(
    world: &World,
    pool: &[&Operator],
    goal: &EffectiveGoal,
    max_depth: usize,
    trace: &mut Vec<State>,
    steps: &mut Vec<String>,
    plans: &mut Vec<Plan>,
) -> Result<(), TransitionError> {
    if steps.len() >= max_depth {
        return Ok(());
    }
    let current = trace.last().expect("trace is never empty").clone();
    for op in pool {
        if !applicable(op, &current) {
            continue;
        }
        let next = succ(&current, op, world)?;
        if next.props().is_subset(current.props()) {
            continue;
        }
        if trace.contains(&next) {
            continue;
        }
        let reached_goal = goal.satisfied(&next);
        trace.push(next);
        steps.push(op.name().to_string());
        if reached_goal {
            plans.push(Plan {
                steps: steps.clone(),
                trace: trace.clone(),
            });
        } else {
            dfs(world, pool, goal, max_depth, trace, steps, plans)?;
        }
        steps.pop();
        trace.pop();
    }
    Ok(())
}

/// Replays a named step sequence from the initial state. In vfr mode
/// every step must additionally be admissible for the agent. The replay
/// succeeds when every step fires and the final state satisfies the
/// (possibly strict) goal.
pub fn validate_plan(
    problem: &PlanningProblem,
    steps: &[String],
    profile: Option<&AgentProfile>,
    config: &SearchConfig,
) -> Result<Plan, ValidateError> {
    let admissible: Option<(BTreeSet<PropId>, BTreeSet<PropId>)> = match config.mode {
        SearchMode::Standard => None,
        SearchMode::Vfr => {
            let profile = profile.ok_or(ValidateError::MissingProfile)?;
            let base = prop_base_clean(profile, problem.world());
            let complement = prop_base_clean_complement(profile, problem.world());
            Some((base, complement))
        }
    };
    let goal = EffectiveGoal::new(problem.goal(), profile, problem.world(), config.strict_goal)
        .map_err(|_| ValidateError::MissingProfile)?;

    let mut trace = vec![problem.initial().clone()];
    let mut taken = Vec::new();
    for (step, name) in steps.iter().enumerate() {
        let op = problem
            .operator(name)
            .ok_or_else(|| ValidateError::UnknownOperator {
                step,
                name: name.clone(),
            })?;
        if let Some((base, complement)) = &admissible {
            let barred = !operator_admissible_in(op, base)
                || (config.require_cleaning
                    && classify_cleaning_in(op, complement) == Cleaning::Violating);
            if barred {
                return Err(ValidateError::Inadmissible {
                    step,
                    operator: name.clone(),
                });
            }
        }
        let current = trace.last().expect("trace is never empty");
        match succ(current, op, problem.world()) {
            Ok(next) => trace.push(next),
            Err(TransitionError::NotApplicable { operator }) => {
                return Err(ValidateError::NotApplicable { step, operator })
            }
            Err(TransitionError::Inconsistent { operator, conflict }) => {
                return Err(ValidateError::Inconsistent {
                    step,
                    operator,
                    conflict,
                })
            }
        }
        taken.push(name.clone());
    }
    let final_state = trace.last().expect("trace is never empty");
    if !goal.satisfied(final_state) {
        return Err(ValidateError::GoalNotSatisfied {
            final_state: final_state.clone(),
        });
    }
    Ok(Plan {
        steps: taken,
        trace,
    })
}

const ORACLE_MAX_PROPS: usize = 12;
const ORACLE_MAX_OPERATORS: usize = 10;
const ORACLE_MAX_DEPTH: usize = 8;

/// Literal re-statement of the search semantics for testing: enumerates
/// every operator index sequence up to the depth bound, replays each one
/// independently from scratch, and keeps those that are plans. Intended
/// for small instances only; anything beyond 12 propositions, 10
/// operators, or depth 8 is rejected.
pub fn oracle_plans(
    problem: &PlanningProblem,
    profile: Option<&AgentProfile>,
    config: &SearchConfig,
) -> Result<Vec<Plan>, PlanError> {
    if problem.world().props().len() > ORACLE_MAX_PROPS
        || problem.operators().len() > ORACLE_MAX_OPERATORS
        || config.max_depth > ORACLE_MAX_DEPTH
    {
        return Err(PlanError::BoundExceeded);
    }

    // Recompute the filter artifacts from first principles rather than
    // calling into the filter module.
    let clean_base: Option<BTreeSet<PropId>> = match config.mode {
        SearchMode::Standard => None,
        SearchMode::Vfr => {
            let profile = profile.ok_or(PlanError::MissingProfile)?;
            Some(oracle_clean_base(profile, problem.world()))
        }
    };
    if let Some(base) = &clean_base {
        // Goal validity, stated directly.
        let mut check = GoalCheck::default();
        for p in problem.goal().require_true() {
            if !base.contains(p) {
                check.outside_base.insert(p.clone());
            }
        }
        for (a, b) in problem.world().incompat_pairs() {
            if problem.goal().require_true().contains(a)
                && problem.goal().require_true().contains(b)
            {
                check.incompatible.insert((a.clone(), b.clone()));
            }
        }
        if !check.is_valid() {
            return Err(PlanError::InvalidGoal(check));
        }
    }
    let mut require_false = problem.goal().require_false().clone();
    if config.strict_goal {
        let profile = profile.ok_or(PlanError::MissingProfile)?;
        let base = oracle_clean_base(profile, problem.world());
        for p in problem.world().props() {
            if !base.contains(p) {
                require_false.insert(p.clone());
            }
        }
    }

    // Visit sequences in lexicographic order by operator index, shortest
    // prefix first; this is the same order the search discovers plans in.
    let mut keyed: Vec<(Vec<usize>, Plan)> = Vec::new();
    let mut sequence = Vec::new();
    oracle_visit(
        problem,
        clean_base.as_ref(),
        &require_false,
        config,
        &mut sequence,
        &mut keyed,
    )?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, plan)| plan).collect())
}

fn oracle_clean_base(profile: &AgentProfile, world: &World) -> BTreeSet<PropId> {
    use crate::model::Weight;
    let mut base = BTreeSet::new();
    for p in world.props() {
        let mut ok = true;
        for v in world.values() {
            let assessed = profile.prop_weight(v, p);
            let threshold = profile.value_weight(v);
            let below = match (assessed, threshold) {
                (Weight::Determinate(a), Weight::Determinate(t)) => a < t,
                _ => false,
            };
            if below {
                ok = false;
                break;
            }
        }
        if ok {
            base.insert(p.clone());
        }
    }
    base
}

fn oracle_visit(
    problem: &PlanningProblem,
    clean_base: Option<&BTreeSet<PropId>>,
    require_false: &BTreeSet<PropId>,
    config: &SearchConfig,
    sequence: &mut Vec<usize>,
    keyed: &mut Vec<(Vec<usize>, Plan)>,
) -> Result<(), PlanError> {
    if let Some(plan) = oracle_replay(problem, clean_base, require_false, config, sequence)? {
        keyed.push((sequence.clone(), plan));
    }
    if sequence.len() < config.max_depth {
        for index in 0..problem.operators().len() {
            sequence.push(index);
            oracle_visit(problem, clean_base, require_false, config, sequence, keyed)?;
            sequence.pop();
        }
    }
    Ok(())
}

// Replays one index sequence from scratch. Returns Ok(None) when the
// sequence is not a plan, Ok(Some) when it is, and an error only for an
// inconsistent transition actually reached under the branch rules.
fn oracle_replay(
    problem: &PlanningProblem,
    clean_base: Option<&BTreeSet<PropId>>,
    require_false: &BTreeSet<PropId>,
    config: &SearchConfig,
    sequence: &[usize],
) -> Result<Option<Plan>, PlanError> {
    let world = problem.world();
    let goal_true = problem.goal().require_true();
    let holds = |s: &BTreeSet<PropId>| {
        goal_true.iter().all(|p| s.contains(p)) && require_false.iter().all(|p| !s.contains(p))
    };

    let mut trace: Vec<BTreeSet<PropId>> = vec![problem.initial().props().clone()];
    let mut steps: Vec<String> = Vec::new();
    for &index in sequence {
        let current = trace.last().expect("trace is never empty").clone();
        // A solved state is never left, so any longer sequence is not a plan.
        if holds(&current) {
            return Ok(None);
        }
        let op = &problem.operators()[index];
        if let Some(base) = clean_base {
            if !op.add().iter().all(|p| base.contains(p)) {
                return Ok(None);
            }
            if config.require_cleaning {
                let relied: Vec<&PropId> = op
                    .pre_true()
                    .iter()
                    .filter(|p| !base.contains(*p))
                    .collect();
                let violating = !relied.is_empty() && relied.iter().any(|p| !op.del().contains(*p));
                if violating {
                    return Ok(None);
                }
            }
        }
        let pre_ok = op.pre_true().iter().all(|p| current.contains(p))
            && op.pre_false().iter().all(|p| !current.contains(p));
        if !pre_ok {
            return Ok(None);
        }
        let mut next: BTreeSet<PropId> = current
            .iter()
            .filter(|p| !op.del().contains(*p))
            .cloned()
            .collect();
        next.extend(op.add().iter().cloned());
        if let Some((a, b)) = world.find_conflict(&next) {
            return Err(TransitionError::Inconsistent {
                operator: op.name().to_string(),
                conflict: (a, b),
            }
            .into());
        }
        if next.iter().all(|p| current.contains(p)) {
            return Ok(None);
        }
        if trace.contains(&next) {
            return Ok(None);
        }
        trace.push(next);
        steps.push(op.name().to_string());
    }
    let final_state = trace.last().expect("trace is never empty");
    if !holds(final_state) {
        return Ok(None);
    }
    Ok(Some(Plan {
        steps,
        trace: trace.into_iter().map(State::from_checked).collect(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Goal;
    use crate::testutil::{
        example3_problem, example3_problem_with_o3p, op, prop, table1_profile, table1_world,
    };

    fn plan_steps(plans: &[Plan]) -> Vec<Vec<&str>> {
        plans
            .iter()
            .map(|p| p.steps.iter().map(String::as_str).collect())
            .collect()
    }

    #[test]
    fn applicability_checks_both_precondition_sets() {
        let world = table1_world();
        let s = world.make_state([prop("p1"), prop("p2")]).unwrap();
        let o1 = op("O1", &["p1", "p2"], &[], &["p3"], &["p1"]);
        let o3 = op("O3", &["p3"], &[], &["p4"], &[]);
        let guarded = op("g", &["p1"], &["p2"], &[], &[]);
        let free = op("f", &[], &[], &[], &[]);
        assert!(applicable(&o1, &s));
        assert!(!applicable(&o3, &s));
        assert!(!applicable(&guarded, &s));
        assert!(applicable(&free, &s));
    }

    #[test]
    fn successor_deletes_then_adds_with_inertia() {
        let world = table1_world();
        let s = world.make_state([prop("p1"), prop("p2")]).unwrap();
        let o1 = op("O1", &["p1", "p2"], &[], &["p3"], &["p1"]);
        let o2 = op("O2", &["p2"], &[], &["p3"], &[]);
        assert_eq!(succ(&s, &o1, &world).unwrap().to_string(), "{p2, p3}");
        assert_eq!(succ(&s, &o2, &world).unwrap().to_string(), "{p1, p2, p3}");
        let noop = op("noop", &[], &[], &[], &[]);
        assert_eq!(succ(&s, &noop, &world).unwrap(), s);
    }

    #[test]
    fn successor_rejects_inapplicable_and_inconsistent() {
        let world = World::new(
            ["a", "b"].map(prop),
            [],
            crate::model::Scale::new([1]).unwrap(),
            [(prop("a"), prop("b"))],
        )
        .unwrap();
        let s = world.make_state([prop("a")]).unwrap();
        let o3 = op("O3", &["b"], &[], &[], &[]);
        assert_eq!(
            succ(&s, &o3, &world),
            Err(TransitionError::NotApplicable {
                operator: "O3".into()
            })
        );
        let bad = op("bad", &["a"], &[], &["b"], &[]);
        assert_eq!(
            succ(&s, &bad, &world),
            Err(TransitionError::Inconsistent {
                operator: "bad".into(),
                conflict: (prop("a"), prop("b")),
            })
        );
    }

    #[test]
    fn satisfaction_mirrors_applicability_shape() {
        let world = table1_world();
        let goal = Goal::new([prop("p4")], []).unwrap();
        let yes = world
            .make_state([prop("p2"), prop("p3"), prop("p4")])
            .unwrap();
        let no = world.make_state([prop("p1"), prop("p2")]).unwrap();
        assert!(satisfied(&yes, &goal));
        assert!(!satisfied(&no, &goal));
        assert!(satisfied(&no, &Goal::default()));
    }

    #[test]
    fn vfr_search_finds_the_two_plans() {
        let problem = example3_problem();
        let profile = table1_profile();
        let plans = find_plans(&problem, Some(&profile), &SearchConfig::vfr()).unwrap();
        assert_eq!(plan_steps(&plans), vec![vec!["O1", "O3"], vec!["O2", "O3"]]);
        assert_eq!(plans[0].final_state().to_string(), "{p2, p3, p4}");
        assert_eq!(plans[1].final_state().to_string(), "{p1, p2, p3, p4}");
    }

    #[test]
    fn inertia_carries_p1_through_the_second_plan() {
        let problem = example3_problem();
        let profile = table1_profile();
        let plans = find_plans(&problem, Some(&profile), &SearchConfig::vfr()).unwrap();
        let o2_plan = &plans[1];
        assert!(o2_plan.trace.iter().all(|s| s.contains(&prop("p1"))));
    }

    #[test]
    fn standard_search_picks_up_o3p_plans() {
        let problem = example3_problem_with_o3p();
        let profile = table1_profile();
        let standard = find_plans(&problem, None, &SearchConfig::standard()).unwrap();
        assert_eq!(
            plan_steps(&standard),
            vec![
                vec!["O1", "O3"],
                vec!["O1", "O3p"],
                vec!["O2", "O3"],
                vec!["O2", "O3p"],
            ]
        );
        let vfr = find_plans(&problem, Some(&profile), &SearchConfig::vfr()).unwrap();
        assert_eq!(plan_steps(&vfr), vec![vec!["O1", "O3"], vec!["O2", "O3"]]);
    }

    #[test]
    fn strict_goal_rules_out_the_inertial_plan() {
        let problem = example3_problem();
        let profile = table1_profile();
        let config = SearchConfig {
            strict_goal: true,
            ..SearchConfig::vfr()
        };
        let plans = find_plans(&problem, Some(&profile), &config).unwrap();
        assert_eq!(plan_steps(&plans), vec![vec!["O1", "O3"]]);
    }

    #[test]
    fn satisfied_initial_state_yields_the_empty_plan() {
        let world = table1_world();
        let initial = world.make_state([prop("p4")]).unwrap();
        let goal = Goal::new([prop("p4")], []).unwrap();
        let problem = PlanningProblem::new(
            world,
            vec![op("O3", &["p3"], &[], &["p4"], &[])],
            initial,
            goal,
        )
        .unwrap();
        let plans = find_plans(&problem, None, &SearchConfig::standard()).unwrap();
        assert_eq!(plans.len(), 1);
        assert!(plans[0].steps.is_empty());
        assert_eq!(plans[0].trace.len(), 1);
    }

    #[test]
    fn vfr_mode_requires_a_profile() {
        let problem = example3_problem();
        assert_eq!(
            find_plans(&problem, None, &SearchConfig::vfr()),
            Err(PlanError::MissingProfile)
        );
    }

    #[test]
    fn invalid_goal_is_reported_before_searching() {
        let world = table1_world();
        let initial = world.make_state([]).unwrap();
        let goal = Goal::new([prop("p1")], []).unwrap();
        let problem = PlanningProblem::new(world, vec![], initial, goal).unwrap();
        let profile = table1_profile();
        match find_plans(&problem, Some(&profile), &SearchConfig::vfr()) {
            Err(PlanError::InvalidGoal(check)) => {
                assert_eq!(check.outside_base, [prop("p1")].into_iter().collect());
            }
            other => panic!("expected InvalidGoal, got {other:?}"),
        }
    }

    #[test]
    fn progress_rule_blocks_non_growing_moves() {
        // A swap pair loops forever without the progress and repeat rules.
        let world = World::new(
            ["a", "b", "g"].map(prop),
            [],
            crate::model::Scale::new([1]).unwrap(),
            [],
        )
        .unwrap();
        let initial = world.make_state([prop("a")]).unwrap();
        let goal = Goal::new([prop("g")], []).unwrap();
        let problem = PlanningProblem::new(
            world,
            vec![
                op("swap_ab", &["a"], &[], &["b"], &["a"]),
                op("swap_ba", &["b"], &[], &["a"], &["b"]),
                op("noop", &[], &[], &[], &[]),
            ],
            initial,
            goal,
        )
        .unwrap();
        let plans = find_plans(&problem, None, &SearchConfig::standard()).unwrap();
        assert!(plans.is_empty());
    }

    #[test]
    fn deep_chain_is_cut_by_max_depth() {
        let world = World::new(
            ["a", "b", "c"].map(prop),
            [],
            crate::model::Scale::new([1]).unwrap(),
            [],
        )
        .unwrap();
        let initial = world.make_state([]).unwrap();
        let goal = Goal::new([prop("c")], []).unwrap();
        let problem = PlanningProblem::new(
            world,
            vec![
                op("s1", &[], &[], &["a"], &[]),
                op("s2", &["a"], &[], &["b"], &[]),
                op("s3", &["b"], &[], &["c"], &[]),
            ],
            initial,
            goal,
        )
        .unwrap();
        let shallow = SearchConfig {
            max_depth: 2,
            ..SearchConfig::standard()
        };
        assert!(find_plans(&problem, None, &shallow).unwrap().is_empty());
        let deep = SearchConfig {
            max_depth: 3,
            ..SearchConfig::standard()
        };
        assert_eq!(find_plans(&problem, None, &deep).unwrap().len(), 1);
    }

    #[test]
    fn inconsistent_transition_is_a_hard_error() {
        let world = World::new(
            ["a", "b"].map(prop),
            [],
            crate::model::Scale::new([1]).unwrap(),
            [(prop("a"), prop("b"))],
        )
        .unwrap();
        let initial = world.make_state([prop("a")]).unwrap();
        let goal = Goal::new([prop("b")], []).unwrap();
        let problem = PlanningProblem::new(
            world,
            vec![op("bad", &["a"], &[], &["b"], &[])],
            initial,
            goal,
        )
        .unwrap();
        assert!(matches!(
            find_plans(&problem, None, &SearchConfig::standard()),
            Err(PlanError::Transition(TransitionError::Inconsistent { .. }))
        ));
    }

    fn names(steps: &[&str]) -> Vec<String> {
        steps.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn validate_accepts_the_first_plan() {
        let problem = example3_problem();
        let profile = table1_profile();
        let plan = validate_plan(
            &problem,
            &names(&["O1", "O3"]),
            Some(&profile),
            &SearchConfig::vfr(),
        )
        .unwrap();
        assert_eq!(plan.final_state().to_string(), "{p2, p3, p4}");
        assert_eq!(plan.trace.len(), 3);
    }

    #[test]
    fn validate_rejects_o3p_as_inadmissible() {
        let problem = example3_problem_with_o3p();
        let profile = table1_profile();
        let err = validate_plan(
            &problem,
            &names(&["O1", "O3p"]),
            Some(&profile),
            &SearchConfig::vfr(),
        )
        .unwrap_err();
        assert_eq!(
            err,
            ValidateError::Inadmissible {
                step: 1,
                operator: "O3p".into()
            }
        );
        assert_eq!(err.to_string(), "inadmissible operator O3p at step 2");
    }

    #[test]
    fn validate_rejects_inapplicable_first_step() {
        let problem = example3_problem();
        let err =
            validate_plan(&problem, &names(&["O3"]), None, &SearchConfig::standard()).unwrap_err();
        assert_eq!(
            err,
            ValidateError::NotApplicable {
                step: 0,
                operator: "O3".into()
            }
        );
        assert_eq!(err.to_string(), "operator O3 not applicable at step 1");
    }

    #[test]
    fn validate_flags_unknown_operators_and_missed_goals() {
        let problem = example3_problem();
        let err =
            validate_plan(&problem, &names(&["O9"]), None, &SearchConfig::standard()).unwrap_err();
        assert_eq!(
            err,
            ValidateError::UnknownOperator {
                step: 0,
                name: "O9".into()
            }
        );
        let err =
            validate_plan(&problem, &names(&["O1"]), None, &SearchConfig::standard()).unwrap_err();
        assert!(matches!(err, ValidateError::GoalNotSatisfied { .. }));
    }

    #[test]
    fn search_results_replay_cleanly() {
        let problem = example3_problem_with_o3p();
        let profile = table1_profile();
        for (config, profile) in [
            (SearchConfig::standard(), None),
            (SearchConfig::vfr(), Some(&profile)),
        ] {
            for plan in find_plans(&problem, profile, &config).unwrap() {
                let replayed = validate_plan(&problem, &plan.steps, profile, &config).unwrap();
                assert_eq!(replayed, plan);
            }
        }
    }

    #[test]
    fn oracle_agrees_on_the_worked_instances() {
        let profile = table1_profile();
        let plain = example3_problem();
        let extended = example3_problem_with_o3p();
        let shallow = |mode| SearchConfig {
            max_depth: 6,
            ..match mode {
                SearchMode::Standard => SearchConfig::standard(),
                SearchMode::Vfr => SearchConfig::vfr(),
            }
        };
        for problem in [&plain, &extended] {
            let config = shallow(SearchMode::Vfr);
            assert_eq!(
                find_plans(problem, Some(&profile), &config).unwrap(),
                oracle_plans(problem, Some(&profile), &config).unwrap()
            );
            let config = shallow(SearchMode::Standard);
            assert_eq!(
                find_plans(problem, None, &config).unwrap(),
                oracle_plans(problem, None, &config).unwrap()
            );
        }
    }

    #[test]
    fn oracle_rejects_oversized_instances() {
        let problem = example3_problem();
        let config = SearchConfig::standard();
        assert_eq!(
            oracle_plans(&problem, None, &config),
            Err(PlanError::BoundExceeded)
        );
    }
}
