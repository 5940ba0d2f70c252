//! Canonical pretty-printer. Re-parsing the output of [`render`] yields a
//! document equal to the input, and rendering is idempotent: sets are
//! emitted in sorted order, operators in declaration order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;

use super::Document;
use crate::model::{PropId, ValueId, Weight};

fn names<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn set_line(label: &str, set: &BTreeSet<PropId>) -> String {
    if set.is_empty() {
        format!("  {label};")
    } else {
        format!("  {label} {};", names(set))
    }
}

pub fn render(doc: &Document) -> String {
    let problem = doc.problem();
    let world = problem.world();
    let mut paragraphs: Vec<String> = Vec::new();

    let mut header: Vec<String> = Vec::new();
    if !world.props().is_empty() {
        header.push(format!("props {};", names(world.props())));
    }
    if !world.values().is_empty() {
        header.push(format!("values {};", names(world.values())));
    }
    header.push(format!("scale {};", names(world.scale().levels())));
    for (a, b) in world.incompat_pairs() {
        header.push(format!("incompat {a} {b};"));
    }
    paragraphs.push(header.join("\n"));

    for (name, profile) in doc.profiles() {
        let mut block = vec![format!("agent {name} {{")];
        for (v, w) in profile.value_weights() {
            block.push(format!("  {v} = {w};"));
        }
        block.push("}".to_string());
        paragraphs.push(block.join("\n"));
    }

    for (name, profile) in doc.profiles() {
        let mut by_prop: BTreeMap<&PropId, Vec<(&ValueId, Weight)>> = BTreeMap::new();
        for (v, p, w) in profile.prop_weights() {
            by_prop.entry(p).or_default().push((v, w));
        }
        for (p, entries) in by_prop {
            let mut block = vec![format!("assess {name} {p} {{")];
            for (v, w) in entries {
                block.push(format!("  {v} = {w};"));
            }
            block.push("}".to_string());
            paragraphs.push(block.join("\n"));
        }
    }

    for op in problem.operators() {
        let block = [
            format!("operator {} {{", op.name()),
            set_line("pre +", op.pre_true()),
            set_line("pre -", op.pre_false()),
            set_line("add", op.add()),
            set_line("del", op.del()),
            "}".to_string(),
        ];
        paragraphs.push(block.join("\n"));
    }

    let mut footer: Vec<String> = Vec::new();
    footer.push(if problem.initial().is_empty() {
        "init;".to_string()
    } else {
        format!("init {};", names(problem.initial().iter()))
    });
    let goal = problem.goal();
    let plus = if goal.require_true().is_empty() {
        "goal +;".to_string()
    } else {
        format!("goal + {};", names(goal.require_true()))
    };
    let minus = if goal.require_false().is_empty() {
        "-;".to_string()
    } else {
        format!("- {};", names(goal.require_false()))
    };
    footer.push(format!("{plus} {minus}"));
    paragraphs.push(footer.join("\n"));

    let mut out = paragraphs.join("\n\n");
    out.push('\n');
    out
}
