//! Search invariants on randomized instances, beyond the oracle
//! equivalence the acceptance gate already checks.

mod common;

use common::arb_instance;
use proptest::prelude::*;
use vfr::ethics::operator_admissible;
use vfr::planner::{find_plans, satisfied, validate_plan, SearchConfig, SearchMode};

fn small(mode: SearchMode) -> SearchConfig {
    let mut config = SearchConfig::standard();
    config.mode = mode;
    config.max_depth = 4;
    config
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn plans_replay_cleanly_in_their_own_config((problem, profile) in arb_instance()) {
        for mode in [SearchMode::Standard, SearchMode::Vfr] {
            let config = small(mode);
            let Ok(plans) = find_plans(&problem, Some(&profile), &config) else {
                continue;
            };
            for plan in &plans {
                let replayed = validate_plan(&problem, &plan.steps, Some(&profile), &config);
                prop_assert_eq!(replayed.as_ref(), Ok(plan));
            }
        }
    }

    #[test]
    fn traces_are_wellformed((problem, profile) in arb_instance()) {
        let config = small(SearchMode::Vfr);
        let Ok(plans) = find_plans(&problem, Some(&profile), &config) else {
            return Ok(());
        };
        for plan in &plans {
            prop_assert_eq!(plan.trace.len(), plan.steps.len() + 1);
            prop_assert_eq!(&plan.trace[0], problem.initial());
            for pair in plan.trace.windows(2) {
                // The progress rule: no successor may collapse into its
                // predecessor.
                prop_assert!(!pair[1].props().is_subset(pair[0].props()));
            }
            for (i, s) in plan.trace.iter().enumerate() {
                prop_assert!(!plan.trace[..i].contains(s), "trace revisits {s}");
            }
        }
    }

    #[test]
    fn only_the_final_state_satisfies_the_goal((problem, _) in arb_instance()) {
        let config = small(SearchMode::Standard);
        let Ok(plans) = find_plans(&problem, None, &config) else {
            return Ok(());
        };
        for plan in &plans {
            prop_assert!(satisfied(plan.final_state(), problem.goal()));
            for s in &plan.trace[..plan.trace.len() - 1] {
                prop_assert!(!satisfied(s, problem.goal()));
            }
        }
    }

    #[test]
    fn vfr_plans_use_only_admissible_operators((problem, profile) in arb_instance()) {
        let config = small(SearchMode::Vfr);
        let Ok(plans) = find_plans(&problem, Some(&profile), &config) else {
            return Ok(());
        };
        for plan in &plans {
            for name in &plan.steps {
                let op = problem.operator(name).unwrap();
                prop_assert!(operator_admissible(op, &profile, problem.world()));
            }
        }
    }

    #[test]
    fn search_is_deterministic((problem, profile) in arb_instance()) {
        let config = small(SearchMode::Vfr);
        prop_assert_eq!(
            find_plans(&problem, Some(&profile), &config),
            find_plans(&problem, Some(&profile), &config)
        );
    }

    #[test]
    fn deeper_bounds_only_extend_the_plan_set((problem, _) in arb_instance()) {
        let mut shallow = small(SearchMode::Standard);
        shallow.max_depth = 3;
        let mut deep = shallow;
        deep.max_depth = 4;
        let (Ok(short), Ok(long)) = (
            find_plans(&problem, None, &shallow),
            find_plans(&problem, None, &deep),
        ) else {
            return Ok(());
        };
        for plan in &short {
            prop_assert!(long.contains(plan));
        }
        for plan in &long {
            if plan.steps.len() <= 3 {
                prop_assert!(short.contains(plan));
            }
        }
    }
}
