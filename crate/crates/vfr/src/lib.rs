//! Value-filtered STRIPS planning.
//!
//! The library models agents whose plans must respect their own value
//! systems. An agent's profile induces a filter over the proposition base;
//! goals, operators, and whole plans are then screened against the surviving
//! propositions before and during search.
//!
//! Modules:
//! - [`model`]: propositions, values, weights, operators, problems.
//! - [`filter`]: the value filter and agent comparison utilities.
//! - [`ethics`]: goal validity, operator admissibility, cleaning classes.
//! - [`planner`]: exhaustive plan enumeration and plan validation.
//! - [`dsl`]: the `.vfr` domain description language.
//! - [`report`]: serializable reports shared by the CLI and the C ABI.

pub mod dsl;
pub mod ethics;
pub mod filter;
pub mod model;
pub mod planner;
pub mod report;

pub use ethics::{Cleaning, GoalCheck, OperatorClassification};
pub use filter::{AgentComparison, CooperationReport, FilterVerdict};
pub use model::{
    AgentProfile, Goal, ModelError, Operator, PlanningProblem, PropId, Scale, State, ValueId,
    Weight, World,
};
pub use planner::{Plan, PlanError, SearchConfig, SearchMode, TransitionError, ValidateError};

#[cfg(test)]
pub(crate) mod testutil;
