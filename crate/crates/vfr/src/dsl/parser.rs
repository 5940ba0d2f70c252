//! Recursive-descent parser and semantic checks.
//!
//! The parser keeps going after an error: line declarations resynchronize
//! at the next ";", block bodies at their closing "}". Semantic analysis
//! then runs over whatever parsed, so one pass reports as much as
//! possible. A document is produced only when no error was recorded.

use std::collections::{BTreeMap, BTreeSet};

use super::token::{
    end_of_source, tokenize, ParseDiagnostic, Severity, SourceSpan, Token, TokenKind,
};
use super::Document;
use crate::model::{
    AgentProfile, Goal, Operator, PlanningProblem, PropId, Scale, ValueId, Weight, World,
};

/// Parses a source text. On success the document is returned along with
/// any warnings; on failure the document is absent and at least one
/// diagnostic is an error.
pub fn parse_with_diagnostics(source: &str) -> (Option<Document>, Vec<ParseDiagnostic>) {
    let tokens = match tokenize(source) {
        Ok(tokens) => tokens,
        Err(diagnostics) => return (None, diagnostics),
    };
    let eof = end_of_source(source);
    let mut parser = Parser {
        tokens,
        pos: 0,
        eof,
        diagnostics: Vec::new(),
    };
    let raw = parser.parse_document();
    let mut diagnostics = parser.diagnostics;
    let document = analyze(&raw, eof, &mut diagnostics);
    (document, diagnostics)
}

/// Like [`parse_with_diagnostics`], but discards warnings on success.
pub fn parse(source: &str) -> Result<Document, Vec<ParseDiagnostic>> {
    match parse_with_diagnostics(source) {
        (Some(document), _) => Ok(document),
        (None, diagnostics) => Err(diagnostics),
    }
}

type Spanned = (String, SourceSpan);

#[derive(Default)]
struct RawDocument {
    props: Vec<Spanned>,
    values: Vec<Spanned>,
    scales: Vec<(Vec<(u32, SourceSpan)>, SourceSpan)>,
    incompat: Vec<(Spanned, Spanned)>,
    agents: Vec<RawAgent>,
    assessments: Vec<RawAssess>,
    operators: Vec<RawOperator>,
    inits: Vec<(Vec<Spanned>, SourceSpan)>,
    goals: Vec<(RawGoal, SourceSpan)>,
}

struct RawAgent {
    name: String,
    span: SourceSpan,
    entries: Vec<RawEntry>,
}

struct RawAssess {
    agent: Spanned,
    prop: Spanned,
    entries: Vec<RawEntry>,
}

struct RawEntry {
    value: String,
    span: SourceSpan,
    weight: Weight,
    weight_span: SourceSpan,
}

struct RawOperator {
    name: String,
    span: SourceSpan,
    pre_true: Vec<Spanned>,
    pre_false: Vec<Spanned>,
    add: Vec<Spanned>,
    del: Vec<Spanned>,
}

struct RawGoal {
    require_true: Vec<Spanned>,
    require_false: Vec<Spanned>,
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    eof: SourceSpan,
    diagnostics: Vec<ParseDiagnostic>,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn advance(&mut self) -> Option<Token> {
        let token = self.tokens.get(self.pos).cloned();
        if token.is_some() {
            self.pos += 1;
        }
        token
    }

    fn here(&self) -> SourceSpan {
        self.peek().map(|t| t.span).unwrap_or(self.eof)
    }

    fn error_here(&mut self, message: impl Into<String>) {
        let span = self.here();
        self.diagnostics.push(ParseDiagnostic::error(message, span));
    }

    fn describe_here(&self) -> String {
        match self.peek() {
            Some(token) => token.kind.describe(),
            None => "end of input".into(),
        }
    }

    fn expect(&mut self, kind: TokenKind, what: &str) -> Result<SourceSpan, ()> {
        match self.peek() {
            Some(token) if token.kind == kind => Ok(self.advance().unwrap().span),
            _ => {
                let found = self.describe_here();
                self.error_here(format!("expected {what}, found {found}"));
                Err(())
            }
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<Spanned, ()> {
        match self.peek() {
            Some(Token {
                kind: TokenKind::Ident(_),
                ..
            }) => {
                let token = self.advance().unwrap();
                match token.kind {
                    TokenKind::Ident(name) => Ok((name, token.span)),
                    _ => unreachable!(),
                }
            }
            _ => {
                let found = self.describe_here();
                self.error_here(format!("expected {what}, found {found}"));
                Err(())
            }
        }
    }

    /// Zero or more identifiers, stopping at the first non-identifier.
    fn ident_list(&mut self) -> Vec<Spanned> {
        let mut items = Vec::new();
        while matches!(
            self.peek(),
            Some(Token {
                kind: TokenKind::Ident(_),
                ..
            })
        ) {
            let token = self.advance().unwrap();
            if let TokenKind::Ident(name) = token.kind {
                items.push((name, token.span));
            }
        }
        items
    }

    /// Skips to just past the next ";" (stopping before "}" so block ends
    /// are not swallowed).
    fn sync_line(&mut self) {
        while let Some(token) = self.peek() {
            match token.kind {
                TokenKind::Semicolon => {
                    self.advance();
                    return;
                }
                TokenKind::RBrace => return,
                _ => {
                    self.advance();
                }
            }
        }
    }

    /// Skips to just past the next "}".
    fn sync_block(&mut self) {
        while let Some(token) = self.advance() {
            if token.kind == TokenKind::RBrace {
                return;
            }
        }
    }

    fn parse_document(&mut self) -> RawDocument {
        let mut raw = RawDocument::default();
        while let Some(token) = self.peek() {
            match token.kind {
                TokenKind::KwProps => self.parse_name_list_decl(&mut raw, NameListKind::Props),
                TokenKind::KwValues => self.parse_name_list_decl(&mut raw, NameListKind::Values),
                TokenKind::KwScale => self.parse_scale(&mut raw),
                TokenKind::KwIncompat => self.parse_incompat(&mut raw),
                TokenKind::KwAgent => self.parse_agent(&mut raw),
                TokenKind::KwAssess => self.parse_assess(&mut raw),
                TokenKind::KwOperator => self.parse_operator(&mut raw),
                TokenKind::KwInit => self.parse_init(&mut raw),
                TokenKind::KwGoal => self.parse_goal(&mut raw),
                TokenKind::Semicolon | TokenKind::RBrace => {
                    let found = self.describe_here();
                    self.error_here(format!("expected a declaration, found {found}"));
                    self.advance();
                }
                _ => {
                    let found = self.describe_here();
                    self.error_here(format!("expected a declaration, found {found}"));
                    self.advance();
                    self.sync_line();
                }
            }
        }
        raw
    }

    fn parse_name_list_decl(&mut self, raw: &mut RawDocument, kind: NameListKind) {
        self.advance();
        let names = self.ident_list();
        if names.is_empty() {
            let found = self.describe_here();
            self.error_here(format!(
                "expected at least one {}, found {found}",
                kind.noun()
            ));
            self.sync_line();
            return;
        }
        if self.expect(TokenKind::Semicolon, "\";\"").is_err() {
            self.sync_line();
        }
        match kind {
            NameListKind::Props => raw.props.extend(names),
            NameListKind::Values => raw.values.extend(names),
        }
    }

    fn parse_scale(&mut self, raw: &mut RawDocument) {
        let kw_span = self.advance().unwrap().span;
        let mut levels = Vec::new();
        while matches!(
            self.peek(),
            Some(Token {
                kind: TokenKind::Int(_),
                ..
            })
        ) {
            let token = self.advance().unwrap();
            if let TokenKind::Int(n) = token.kind {
                levels.push((n, token.span));
            }
        }
        if levels.is_empty() {
            let found = self.describe_here();
            self.error_here(format!("expected at least one scale level, found {found}"));
            self.sync_line();
            return;
        }
        if self.expect(TokenKind::Semicolon, "\";\"").is_err() {
            self.sync_line();
        }
        raw.scales.push((levels, kw_span));
    }

    fn parse_incompat(&mut self, raw: &mut RawDocument) {
        self.advance();
        let first = match self.expect_ident("a proposition name") {
            Ok(name) => name,
            Err(()) => return self.sync_line(),
        };
        let second = match self.expect_ident("a proposition name") {
            Ok(name) => name,
            Err(()) => return self.sync_line(),
        };
        if self.expect(TokenKind::Semicolon, "\";\"").is_err() {
            self.sync_line();
        }
        raw.incompat.push((first, second));
    }

    fn parse_agent(&mut self, raw: &mut RawDocument) {
        self.advance();
        let (name, span) = match self.expect_ident("an agent name") {
            Ok(name) => name,
            Err(()) => return self.sync_line(),
        };
        if self.expect(TokenKind::LBrace, "\"{\"").is_err() {
            return self.sync_line();
        }
        let entries = self.parse_weight_entries();
        raw.agents.push(RawAgent {
            name,
            span,
            entries,
        });
    }

    fn parse_assess(&mut self, raw: &mut RawDocument) {
        self.advance();
        let agent = match self.expect_ident("an agent name") {
            Ok(name) => name,
            Err(()) => return self.sync_line(),
        };
        let prop = match self.expect_ident("a proposition name") {
            Ok(name) => name,
            Err(()) => return self.sync_line(),
        };
        if self.expect(TokenKind::LBrace, "\"{\"").is_err() {
            return self.sync_line();
        }
        let entries = self.parse_weight_entries();
        raw.assessments.push(RawAssess {
            agent,
            prop,
            entries,
        });
    }

    /// The shared `name = weight ;` entry list of agent and assess
    /// blocks, up to and including the closing "}". Recovers to the next
    /// ";" after a bad entry.
    fn parse_weight_entries(&mut self) -> Vec<RawEntry> {
        let mut entries = Vec::new();
        loop {
            match self.peek().map(|t| &t.kind) {
                None => {
                    self.error_here("unclosed block, expected \"}\"");
                    return entries;
                }
                Some(TokenKind::RBrace) => {
                    self.advance();
                    return entries;
                }
                Some(TokenKind::Ident(_)) => match self.parse_weight_entry() {
                    Ok(entry) => entries.push(entry),
                    Err(()) => self.sync_line(),
                },
                Some(_) => {
                    let found = self.describe_here();
                    self.error_here(format!("expected a weight entry or \"}}\", found {found}"));
                    self.advance();
                }
            }
        }
    }

    fn parse_weight_entry(&mut self) -> Result<RawEntry, ()> {
        let (value, span) = self.expect_ident("a value name")?;
        self.expect(TokenKind::Equals, "\"=\"")?;
        let (weight, weight_span) = match self.peek().map(|t| t.kind.clone()) {
            Some(TokenKind::Int(n)) => (Weight::Determinate(n), self.advance().unwrap().span),
            Some(TokenKind::Question) => (Weight::Indeterminate, self.advance().unwrap().span),
            _ => {
                let found = self.describe_here();
                self.error_here(format!(
                    "expected a weight (integer or \"?\"), found {found}"
                ));
                return Err(());
            }
        };
        self.expect(TokenKind::Semicolon, "\";\"")?;
        Ok(RawEntry {
            value,
            span,
            weight,
            weight_span,
        })
    }

    fn parse_operator(&mut self, raw: &mut RawDocument) {
        self.advance();
        let (name, span) = match self.expect_ident("an operator name") {
            Ok(name) => name,
            Err(()) => return self.sync_line(),
        };
        if self.expect(TokenKind::LBrace, "\"{\"").is_err() {
            return self.sync_line();
        }
        match self.parse_operator_lines() {
            Ok((pre_true, pre_false, add, del)) => raw.operators.push(RawOperator {
                name,
                span,
                pre_true,
                pre_false,
                add,
                del,
            }),
            Err(()) => self.sync_block(),
        }
    }

    #[allow(clippy::type_complexity)]
    fn parse_operator_lines(
        &mut self,
    ) -> Result<(Vec<Spanned>, Vec<Spanned>, Vec<Spanned>, Vec<Spanned>), ()> {
        self.expect(TokenKind::KwPre, "keyword \"pre\"")?;
        self.expect(TokenKind::Plus, "\"+\"")?;
        let pre_true = self.ident_list();
        self.expect(TokenKind::Semicolon, "\";\"")?;
        self.expect(TokenKind::KwPre, "keyword \"pre\"")?;
        self.expect(TokenKind::Minus, "\"-\"")?;
        let pre_false = self.ident_list();
        self.expect(TokenKind::Semicolon, "\";\"")?;
        self.expect(TokenKind::KwAdd, "keyword \"add\"")?;
        let add = self.ident_list();
        self.expect(TokenKind::Semicolon, "\";\"")?;
        self.expect(TokenKind::KwDel, "keyword \"del\"")?;
        let del = self.ident_list();
        self.expect(TokenKind::Semicolon, "\";\"")?;
        self.expect(TokenKind::RBrace, "\"}\"")?;
        Ok((pre_true, pre_false, add, del))
    }

    fn parse_init(&mut self, raw: &mut RawDocument) {
        let kw_span = self.advance().unwrap().span;
        let props = self.ident_list();
        if self.expect(TokenKind::Semicolon, "\";\"").is_err() {
            self.sync_line();
            return;
        }
        raw.inits.push((props, kw_span));
    }

    fn parse_goal(&mut self, raw: &mut RawDocument) {
        let kw_span = self.advance().unwrap().span;
        match self.parse_goal_body() {
            Ok(goal) => raw.goals.push((goal, kw_span)),
            Err(()) => self.sync_line(),
        }
    }

    fn parse_goal_body(&mut self) -> Result<RawGoal, ()> {
        self.expect(TokenKind::Plus, "\"+\"")?;
        let require_true = self.ident_list();
        self.expect(TokenKind::Semicolon, "\";\"")?;
        self.expect(TokenKind::Minus, "\"-\"")?;
        let require_false = self.ident_list();
        self.expect(TokenKind::Semicolon, "\";\"")?;
        Ok(RawGoal {
            require_true,
            require_false,
        })
    }
}

#[derive(Clone, Copy)]
enum NameListKind {
    Props,
    Values,
}

impl NameListKind {
    fn noun(self) -> &'static str {
        match self {
            NameListKind::Props => "proposition name",
            NameListKind::Values => "value name",
        }
    }
}

fn err(diagnostics: &mut Vec<ParseDiagnostic>, message: String, span: SourceSpan) {
    diagnostics.push(ParseDiagnostic::error(message, span));
}

fn check_weight(
    diagnostics: &mut Vec<ParseDiagnostic>,
    weight: Weight,
    span: SourceSpan,
    levels: &[u32],
) {
    if let Weight::Determinate(n) = weight {
        if !levels.contains(&n) {
            err(diagnostics, format!("weight {n} is not on the scale"), span);
        }
    }
}

fn check_prop<'a>(
    diagnostics: &mut Vec<ParseDiagnostic>,
    props: &BTreeMap<&'a str, SourceSpan>,
    name: &'a str,
    span: SourceSpan,
    used: &mut BTreeSet<&'a str>,
) -> bool {
    if props.contains_key(name) {
        used.insert(name);
        true
    } else {
        err(diagnostics, format!("unknown proposition {name}"), span);
        false
    }
}

fn check_entries(
    diagnostics: &mut Vec<ParseDiagnostic>,
    entries: &[RawEntry],
    values: &BTreeMap<&str, SourceSpan>,
    levels: &[u32],
) {
    let mut seen: BTreeSet<&str> = BTreeSet::new();
    for entry in entries {
        if !values.contains_key(entry.value.as_str()) {
            err(
                diagnostics,
                format!("unknown value {}", entry.value),
                entry.span,
            );
        }
        if !seen.insert(&entry.value) {
            err(
                diagnostics,
                format!("duplicate weight for value {}", entry.value),
                entry.span,
            );
        }
        check_weight(diagnostics, entry.weight, entry.weight_span, levels);
    }
}

// Semantic checks over the raw declarations, then construction. Returns
// None when any error diagnostic exists (pre-existing or new).
fn analyze(
    raw: &RawDocument,
    eof: SourceSpan,
    diagnostics: &mut Vec<ParseDiagnostic>,
) -> Option<Document> {
    let mut props: BTreeMap<&str, SourceSpan> = BTreeMap::new();
    for (name, span) in &raw.props {
        if props.insert(name, *span).is_some() {
            err(diagnostics, format!("duplicate proposition {name}"), *span);
        }
    }
    let mut values: BTreeMap<&str, SourceSpan> = BTreeMap::new();
    for (name, span) in &raw.values {
        if values.insert(name, *span).is_some() {
            err(diagnostics, format!("duplicate value {name}"), *span);
        }
    }

    // Without a scale declaration, only "?" and weight 1 make sense.
    let mut scale_levels: Vec<u32> = vec![1];
    if let Some((levels, _)) = raw.scales.first() {
        for pair in levels.windows(2) {
            if pair[0].0 >= pair[1].0 {
                err(
                    diagnostics,
                    "scale must be strictly increasing".into(),
                    pair[1].1,
                );
            }
        }
        scale_levels = levels.iter().map(|(n, _)| *n).collect();
    }
    for (_, span) in raw.scales.iter().skip(1) {
        err(diagnostics, "duplicate scale declaration".into(), *span);
    }

    let mut used_props: BTreeSet<&str> = BTreeSet::new();
    let mut incompat_pairs: BTreeSet<(String, String)> = BTreeSet::new();
    for ((a, a_span), (b, b_span)) in &raw.incompat {
        let a_ok = check_prop(diagnostics, &props, a, *a_span, &mut used_props);
        let b_ok = check_prop(diagnostics, &props, b, *b_span, &mut used_props);
        if !(a_ok && b_ok) {
            continue;
        }
        if a == b {
            err(
                diagnostics,
                format!("proposition {a} cannot be incompatible with itself"),
                *b_span,
            );
            continue;
        }
        let pair = if a < b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        if !incompat_pairs.insert(pair) {
            err(
                diagnostics,
                format!("duplicate incompatibility between {a} and {b}"),
                *a_span,
            );
        }
    }

    let mut agent_names: BTreeSet<&str> = BTreeSet::new();
    for agent in &raw.agents {
        if !agent_names.insert(agent.name.as_str()) {
            err(
                diagnostics,
                format!("duplicate agent {}", agent.name),
                agent.span,
            );
        }
        check_entries(diagnostics, &agent.entries, &values, &scale_levels);
    }

    let mut assessed: BTreeSet<(&str, &str)> = BTreeSet::new();
    for assess in &raw.assessments {
        let (agent_name, agent_span) = &assess.agent;
        let (prop_name, prop_span) = &assess.prop;
        if !agent_names.contains(agent_name.as_str()) {
            err(
                diagnostics,
                format!("unknown agent {agent_name}"),
                *agent_span,
            );
        }
        check_prop(diagnostics, &props, prop_name, *prop_span, &mut used_props);
        if !assessed.insert((agent_name, prop_name)) {
            err(
                diagnostics,
                format!("duplicate assessment of {prop_name} by {agent_name}"),
                *prop_span,
            );
        }
        check_entries(diagnostics, &assess.entries, &values, &scale_levels);
    }

    let mut operator_names: BTreeSet<&str> = BTreeSet::new();
    for op in &raw.operators {
        if !operator_names.insert(&op.name) {
            err(
                diagnostics,
                format!("duplicate operator {}", op.name),
                op.span,
            );
        }
        for (name, span) in op
            .pre_true
            .iter()
            .chain(&op.pre_false)
            .chain(&op.add)
            .chain(&op.del)
        {
            check_prop(diagnostics, &props, name, *span, &mut used_props);
        }
        let pre_true: BTreeSet<&str> = op.pre_true.iter().map(|(n, _)| n.as_str()).collect();
        for (name, span) in &op.pre_false {
            if pre_true.contains(name.as_str()) {
                err(
                    diagnostics,
                    format!("{name} is required both true and false"),
                    *span,
                );
            }
        }
        let add: BTreeSet<&str> = op.add.iter().map(|(n, _)| n.as_str()).collect();
        for (name, span) in &op.del {
            if add.contains(name.as_str()) {
                err(
                    diagnostics,
                    format!("{name} is both added and deleted"),
                    *span,
                );
            }
        }
    }

    if raw.inits.is_empty() {
        err(diagnostics, "missing init declaration".into(), eof);
    }
    for (_, span) in raw.inits.iter().skip(1) {
        err(diagnostics, "duplicate init declaration".into(), *span);
    }
    if let Some((init_props, init_span)) = raw.inits.first() {
        let mut present: BTreeSet<&str> = BTreeSet::new();
        for (name, span) in init_props {
            check_prop(diagnostics, &props, name, *span, &mut used_props);
            present.insert(name);
        }
        for (a, b) in &incompat_pairs {
            if present.contains(a.as_str()) && present.contains(b.as_str()) {
                err(
                    diagnostics,
                    format!("init is inconsistent: {a} and {b} are incompatible"),
                    *init_span,
                );
            }
        }
    }

    if raw.goals.is_empty() {
        err(diagnostics, "missing goal declaration".into(), eof);
    }
    for (_, span) in raw.goals.iter().skip(1) {
        err(diagnostics, "duplicate goal declaration".into(), *span);
    }
    if let Some((goal, _)) = raw.goals.first() {
        for (name, span) in goal.require_true.iter().chain(&goal.require_false) {
            check_prop(diagnostics, &props, name, *span, &mut used_props);
        }
        let require_true: BTreeSet<&str> =
            goal.require_true.iter().map(|(n, _)| n.as_str()).collect();
        for (name, span) in &goal.require_false {
            if require_true.contains(name.as_str()) {
                err(
                    diagnostics,
                    format!("goal requires {name} both true and false"),
                    *span,
                );
            }
        }
    }

    for (name, span) in &props {
        if !used_props.contains(*name) {
            diagnostics.push(ParseDiagnostic::warning(
                format!("proposition {name} is never used"),
                *span,
            ));
        }
    }

    if diagnostics.iter().any(|d| d.severity == Severity::Error) {
        return None;
    }

    // All invariants were checked above, so construction cannot fail.
    let pid = |n: &str| PropId::new(n).expect("checked name");
    let vid = |n: &str| ValueId::new(n).expect("checked name");

    let scale = Scale::new(scale_levels).expect("scale was validated");
    let world = World::new(
        props.keys().map(|n| pid(n)),
        values.keys().map(|n| vid(n)),
        scale,
        incompat_pairs.iter().map(|(a, b)| (pid(a), pid(b))),
    )
    .expect("world was validated");

    let operators: Vec<Operator> = raw
        .operators
        .iter()
        .map(|op| {
            let ids = |list: &[Spanned]| list.iter().map(|(n, _)| pid(n)).collect::<Vec<_>>();
            Operator::new(
                op.name.as_str(),
                ids(&op.pre_true),
                ids(&op.pre_false),
                ids(&op.add),
                ids(&op.del),
            )
            .expect("operator was validated")
        })
        .collect();

    let (init_props, _) = raw.inits.first().expect("checked init");
    let initial = world
        .make_state(init_props.iter().map(|(n, _)| pid(n)))
        .expect("init was validated");

    let (goal, _) = raw.goals.first().expect("checked goal");
    let goal = Goal::new(
        goal.require_true.iter().map(|(n, _)| pid(n)),
        goal.require_false.iter().map(|(n, _)| pid(n)),
    )
    .expect("goal was validated");

    let problem =
        PlanningProblem::new(world, operators, initial, goal).expect("problem was validated");

    let mut profiles: BTreeMap<String, AgentProfile> = BTreeMap::new();
    for agent in &raw.agents {
        let mut profile = AgentProfile::new(agent.name.as_str()).expect("checked name");
        for entry in &agent.entries {
            profile.set_value_weight(vid(&entry.value), entry.weight);
        }
        profiles.insert(agent.name.clone(), profile);
    }
    for assess in &raw.assessments {
        let profile = profiles
            .get_mut(&assess.agent.0)
            .expect("agent was validated");
        for entry in &assess.entries {
            profile.set_prop_weight(vid(&entry.value), pid(&assess.prop.0), entry.weight);
        }
    }

    Some(Document::new(problem, profiles).expect("document was validated"))
}
