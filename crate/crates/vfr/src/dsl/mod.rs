//! The `.vfr` domain-description language.
//!
//! One text file declares the proposition and value vocabulary, a weight
//! scale, incompatibilities, any number of agents with their thresholds
//! and assessments, the operators, one initial state, and one goal:
//!
//! ```text
//! props p1 p2;
//! values P;
//! scale 1 2 3;
//!
//! agent A {
//!   P = 2;
//! }
//!
//! assess A p1 {
//!   P = 1;
//! }
//!
//! operator step {
//!   pre + p1;
//!   pre -;
//!   add p2;
//!   del;
//! }
//!
//! init p1;
//! goal + p2; -;
//! ```
//!
//! `#` comments run to the end of the line. [`parse`] and [`render`] are
//! inverse on valid documents.

pub mod parser;
pub mod render;
pub mod token;

pub use parser::{parse, parse_with_diagnostics};
pub use render::render;
pub use token::{tokenize, ParseDiagnostic, Severity, SourceSpan, Token, TokenKind, KEYWORDS};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::model::{AgentProfile, PlanningProblem, PropId, ValueId, Weight};

/// Why a [`Document`] could not be assembled.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("{0:?} is a reserved word")]
    ReservedName(String),
    #[error("profile stored under {key:?} names agent {agent:?}")]
    MismatchedProfileKey { key: String, agent: String },
    #[error("profile for {agent} references unknown value {value}")]
    UnknownValue { agent: String, value: ValueId },
    #[error("profile for {agent} assesses unknown proposition {prop}")]
    UnknownProposition { agent: String, prop: PropId },
    #[error("profile for {agent} uses weight {weight}, which is not on the scale")]
    WeightOffScale { agent: String, weight: u32 },
}

/// A parsed source file: the planning problem plus every agent profile,
/// keyed by agent name.
///
/// The constructor enforces exactly what the concrete syntax can express,
/// so every `Document` can be rendered and re-parsed to an equal value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    problem: PlanningProblem,
    profiles: BTreeMap<String, AgentProfile>,
}

impl Document {
    pub fn new(
        problem: PlanningProblem,
        profiles: BTreeMap<String, AgentProfile>,
    ) -> Result<Self, DocumentError> {
        let reserved = |name: &str| KEYWORDS.contains(&name);
        let world = problem.world();
        for p in world.props() {
            if reserved(p.as_str()) {
                return Err(DocumentError::ReservedName(p.as_str().into()));
            }
        }
        for v in world.values() {
            if reserved(v.as_str()) {
                return Err(DocumentError::ReservedName(v.as_str().into()));
            }
        }
        for op in problem.operators() {
            if reserved(op.name()) {
                return Err(DocumentError::ReservedName(op.name().into()));
            }
        }
        for (key, profile) in &profiles {
            if reserved(key) {
                return Err(DocumentError::ReservedName(key.clone()));
            }
            if key != profile.agent() {
                return Err(DocumentError::MismatchedProfileKey {
                    key: key.clone(),
                    agent: profile.agent().into(),
                });
            }
            let check_weight = |weight: Weight| match weight {
                Weight::Determinate(n) if !world.scale().contains(n) => {
                    Err(DocumentError::WeightOffScale {
                        agent: key.clone(),
                        weight: n,
                    })
                }
                _ => Ok(()),
            };
            for (v, w) in profile.value_weights() {
                if !world.values().contains(v) {
                    return Err(DocumentError::UnknownValue {
                        agent: key.clone(),
                        value: v.clone(),
                    });
                }
                check_weight(w)?;
            }
            for (v, p, w) in profile.prop_weights() {
                if !world.values().contains(v) {
                    return Err(DocumentError::UnknownValue {
                        agent: key.clone(),
                        value: v.clone(),
                    });
                }
                if !world.has_prop(p) {
                    return Err(DocumentError::UnknownProposition {
                        agent: key.clone(),
                        prop: p.clone(),
                    });
                }
                check_weight(w)?;
            }
        }
        Ok(Document { problem, profiles })
    }

    pub fn problem(&self) -> &PlanningProblem {
        &self.problem
    }

    pub fn profiles(&self) -> &BTreeMap<String, AgentProfile> {
        &self.profiles
    }

    pub fn profile(&self, agent: &str) -> Option<&AgentProfile> {
        self.profiles.get(agent)
    }

    pub fn agent_names(&self) -> impl Iterator<Item = &str> {
        self.profiles.keys().map(String::as_str)
    }
}
