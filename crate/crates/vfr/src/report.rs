//! Serializable reports. Each command-level result has a plain-text and a
//! JSON rendering built from the same struct, so the two formats always
//! carry the same data; the structs also serve as the C API's payloads.

use serde::{Deserialize, Serialize};

use crate::ethics::OperatorClassification;
use crate::filter::{
    compare_agents, cooperation_check, explain_filter, prop_base_clean, prop_base_clean_complement,
};
use crate::model::{AgentProfile, State, World};
use crate::planner::{Plan, ValidateError};

fn set_text(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn json_string<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("reports always serialize");
    out.push('\n');
    out
}

/// A proposition's filter outcome, with the values that rejected it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRow {
    pub prop: String,
    pub passed: bool,
    #[serde(rename = "failingValues")]
    pub failing_values: Vec<String>,
}

/// The clean base partition for one agent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterReport {
    pub agent: String,
    #[serde(rename = "propBaseClean")]
    pub prop_base_clean: Vec<String>,
    pub complement: Vec<String>,
    pub verdicts: Vec<VerdictRow>,
}

impl FilterReport {
    pub fn build(profile: &AgentProfile, world: &World) -> Self {
        FilterReport {
            agent: profile.agent().to_string(),
            prop_base_clean: prop_base_clean(profile, world)
                .iter()
                .map(|p| p.to_string())
                .collect(),
            complement: prop_base_clean_complement(profile, world)
                .iter()
                .map(|p| p.to_string())
                .collect(),
            verdicts: explain_filter(profile, world)
                .into_iter()
                .map(|v| VerdictRow {
                    prop: v.prop.to_string(),
                    passed: v.passed,
                    failing_values: v.failing_values.iter().map(|v| v.to_string()).collect(),
                })
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut lines = vec![
            format!("agent: {}", self.agent),
            format!("propBaseClean: {}", set_text(&self.prop_base_clean)),
            format!("complement: {}", set_text(&self.complement)),
            "verdicts:".to_string(),
        ];
        for v in &self.verdicts {
            if v.passed {
                lines.push(format!("  {}: accepted", v.prop));
            } else {
                lines.push(format!(
                    "  {}: rejected by {}",
                    v.prop,
                    v.failing_values.join(", ")
                ));
            }
        }
        lines.join("\n") + "\n"
    }

    pub fn to_json(&self) -> String {
        json_string(self)
    }
}

/// One enumerated plan: its steps and the state trace as display text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanEntry {
    pub steps: Vec<String>,
    pub trace: Vec<String>,
}

impl PlanEntry {
    fn build(plan: &Plan) -> Self {
        PlanEntry {
            steps: plan.steps.clone(),
            trace: plan.trace.iter().map(State::to_string).collect(),
        }
    }
}

/// Result of plan enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanReport {
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub agent: Option<String>,
    pub plans: Vec<PlanEntry>,
    pub count: usize,
}

impl PlanReport {
    pub fn build(mode: &str, agent: Option<&str>, plans: &[Plan]) -> Self {
        PlanReport {
            mode: mode.to_string(),
            agent: agent.map(str::to_string),
            plans: plans.iter().map(PlanEntry::build).collect(),
            count: plans.len(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut lines = Vec::new();
        for (i, plan) in self.plans.iter().enumerate() {
            let steps = if plan.steps.is_empty() {
                "(empty)".to_string()
            } else {
                plan.steps.join(", ")
            };
            lines.push(format!("plan {}: {}", i + 1, steps));
            lines.push(format!("  trace: {}", plan.trace.join(" -> ")));
        }
        lines.push(format!("plans: {}", self.count));
        lines.join("\n") + "\n"
    }

    pub fn to_json(&self) -> String {
        json_string(self)
    }
}

/// Result of replaying a named step sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidateReport {
    pub valid: bool,
    pub steps: Vec<String>,
    pub trace: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

impl ValidateReport {
    pub fn build(steps: &[String], outcome: &Result<Plan, ValidateError>) -> Self {
        match outcome {
            Ok(plan) => ValidateReport {
                valid: true,
                steps: plan.steps.clone(),
                trace: plan.trace.iter().map(State::to_string).collect(),
                error: None,
            },
            Err(err) => ValidateReport {
                valid: false,
                steps: steps.to_vec(),
                trace: Vec::new(),
                error: Some(err.to_string()),
            },
        }
    }

    pub fn to_text(&self) -> String {
        let mut lines = vec![format!("valid: {}", self.valid)];
        if !self.steps.is_empty() {
            lines.push(format!("steps: {}", self.steps.join(", ")));
        }
        if !self.trace.is_empty() {
            lines.push(format!("trace: {}", self.trace.join(" -> ")));
        }
        if let Some(error) = &self.error {
            lines.push(format!("error: {error}"));
        }
        lines.join("\n") + "\n"
    }

    pub fn to_json(&self) -> String {
        json_string(self)
    }
}

/// Admissibility plus cleaning class for one operator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorRow {
    pub operator: String,
    pub admissible: bool,
    pub cleaning: String,
}

/// Per-operator classification table for one agent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub agent: String,
    pub operators: Vec<OperatorRow>,
}

impl ClassifyReport {
    pub fn build(agent: &str, rows: &[OperatorClassification]) -> Self {
        ClassifyReport {
            agent: agent.to_string(),
            operators: rows
                .iter()
                .map(|r| OperatorRow {
                    operator: r.operator.clone(),
                    admissible: r.admissible,
                    cleaning: r.cleaning.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut lines = vec![format!("agent: {}", self.agent)];
        for row in &self.operators {
            let admissible = if row.admissible {
                "admissible"
            } else {
                "inadmissible"
            };
            lines.push(format!(
                "{}: {}, {}",
                row.operator, admissible, row.cleaning
            ));
        }
        lines.join("\n") + "\n"
    }

    pub fn to_json(&self) -> String {
        json_string(self)
    }
}

/// Four-way clean base partition for two agents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub first: String,
    pub second: String,
    #[serde(rename = "bothAccept")]
    pub both_accept: Vec<String>,
    #[serde(rename = "onlyFirst")]
    pub only_first: Vec<String>,
    #[serde(rename = "onlySecond")]
    pub only_second: Vec<String>,
    #[serde(rename = "bothReject")]
    pub both_reject: Vec<String>,
}

impl CompareReport {
    pub fn build(a: &AgentProfile, b: &AgentProfile, world: &World) -> Self {
        let cmp = compare_agents(a, b, world);
        let strings = |s: &std::collections::BTreeSet<crate::model::PropId>| {
            s.iter().map(|p| p.to_string()).collect::<Vec<_>>()
        };
        CompareReport {
            first: a.agent().to_string(),
            second: b.agent().to_string(),
            both_accept: strings(&cmp.both_accept),
            only_first: strings(&cmp.only_first),
            only_second: strings(&cmp.only_second),
            both_reject: strings(&cmp.both_reject),
        }
    }

    pub fn to_text(&self) -> String {
        [
            format!("agents: {}, {}", self.first, self.second),
            format!("both accept: {}", set_text(&self.both_accept)),
            format!("only {}: {}", self.first, set_text(&self.only_first)),
            format!("only {}: {}", self.second, set_text(&self.only_second)),
            format!("both reject: {}", set_text(&self.both_reject)),
        ]
        .join("\n")
            + "\n"
    }

    pub fn to_json(&self) -> String {
        json_string(self)
    }
}

/// One trace state with each agent's acceptance of it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoopStateRow {
    pub index: usize,
    pub state: String,
    #[serde(rename = "firstAccepts")]
    pub first_accepts: bool,
    #[serde(rename = "secondAccepts")]
    pub second_accepts: bool,
}

/// A rejected proposition in a trace state.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoopOffenceRow {
    #[serde(rename = "stateIndex")]
    pub state_index: usize,
    pub prop: String,
    pub agent: String,
}

/// Cooperation verdict for two agents over a replayed trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoopReport {
    pub first: String,
    pub second: String,
    pub steps: Vec<String>,
    pub cooperative: bool,
    pub states: Vec<CoopStateRow>,
    pub offences: Vec<CoopOffenceRow>,
}

impl CoopReport {
    pub fn build(
        a: &AgentProfile,
        b: &AgentProfile,
        world: &World,
        steps: &[String],
        trace: &[State],
    ) -> Self {
        let outcome = cooperation_check(a, b, world, trace);
        let base_a = prop_base_clean(a, world);
        let base_b = prop_base_clean(b, world);
        let states = trace
            .iter()
            .enumerate()
            .map(|(index, state)| CoopStateRow {
                index,
                state: state.to_string(),
                first_accepts: state.iter().all(|p| base_a.contains(p)),
                second_accepts: state.iter().all(|p| base_b.contains(p)),
            })
            .collect();
        CoopReport {
            first: a.agent().to_string(),
            second: b.agent().to_string(),
            steps: steps.to_vec(),
            cooperative: outcome.cooperative,
            states,
            offences: outcome
                .offences
                .iter()
                .map(|o| CoopOffenceRow {
                    state_index: o.state_index,
                    prop: o.prop.to_string(),
                    agent: o.agent.clone(),
                })
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut lines = vec![format!("agents: {}, {}", self.first, self.second)];
        if !self.steps.is_empty() {
            lines.push(format!("steps: {}", self.steps.join(", ")));
        }
        for row in &self.states {
            let yn = |b: bool| if b { "yes" } else { "no" };
            lines.push(format!(
                "state {}: {} {}:{} {}:{}",
                row.index,
                row.state,
                self.first,
                yn(row.first_accepts),
                self.second,
                yn(row.second_accepts)
            ));
        }
        for offence in &self.offences {
            lines.push(format!(
                "offence: state {}, {}, {}",
                offence.state_index, offence.prop, offence.agent
            ));
        }
        lines.push(format!("cooperative: {}", self.cooperative));
        lines.join("\n") + "\n"
    }

    pub fn to_json(&self) -> String {
        json_string(self)
    }
}
