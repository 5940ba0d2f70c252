//! Tokens, source positions, and the lexer.

use std::fmt;

/// A position in the parsed source. Lines and columns are 1-based and
/// counted in characters; `length` is the token length in characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub line: usize,
    pub column: usize,
    pub length: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        })
    }
}

/// A single problem found while lexing, parsing, or checking a source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDiagnostic {
    pub severity: Severity,
    pub message: String,
    pub span: SourceSpan,
}

impl ParseDiagnostic {
    pub fn error(message: impl Into<String>, span: SourceSpan) -> Self {
        ParseDiagnostic {
            severity: Severity::Error,
            message: message.into(),
            span,
        }
    }

    pub fn warning(message: impl Into<String>, span: SourceSpan) -> Self {
        ParseDiagnostic {
            severity: Severity::Warning,
            message: message.into(),
            span,
        }
    }
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}: {}: {}",
            self.span.line, self.span.column, self.severity, self.message
        )
    }
}

/// The reserved words of the language, in grammar order.
pub const KEYWORDS: [&str; 12] = [
    "props", "incompat", "values", "scale", "agent", "assess", "operator", "pre", "add", "del",
    "init", "goal",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    Int(u32),
    Question,
    LBrace,
    RBrace,
    Equals,
    Comma,
    Semicolon,
    Colon,
    Plus,
    Minus,
    KwProps,
    KwIncompat,
    KwValues,
    KwScale,
    KwAgent,
    KwAssess,
    KwOperator,
    KwPre,
    KwAdd,
    KwDel,
    KwInit,
    KwGoal,
}

impl TokenKind {
    fn keyword(word: &str) -> Option<TokenKind> {
        match word {
            "props" => Some(TokenKind::KwProps),
            "incompat" => Some(TokenKind::KwIncompat),
            "values" => Some(TokenKind::KwValues),
            "scale" => Some(TokenKind::KwScale),
            "agent" => Some(TokenKind::KwAgent),
            "assess" => Some(TokenKind::KwAssess),
            "operator" => Some(TokenKind::KwOperator),
            "pre" => Some(TokenKind::KwPre),
            "add" => Some(TokenKind::KwAdd),
            "del" => Some(TokenKind::KwDel),
            "init" => Some(TokenKind::KwInit),
            "goal" => Some(TokenKind::KwGoal),
            _ => None,
        }
    }

    /// Short description for diagnostics.
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Ident(name) => format!("identifier {name:?}"),
            TokenKind::Int(n) => format!("integer {n}"),
            TokenKind::Question => "\"?\"".into(),
            TokenKind::LBrace => "\"{\"".into(),
            TokenKind::RBrace => "\"}\"".into(),
            TokenKind::Equals => "\"=\"".into(),
            TokenKind::Comma => "\",\"".into(),
            TokenKind::Semicolon => "\";\"".into(),
            TokenKind::Colon => "\":\"".into(),
            TokenKind::Plus => "\"+\"".into(),
            TokenKind::Minus => "\"-\"".into(),
            TokenKind::KwProps => "keyword \"props\"".into(),
            TokenKind::KwIncompat => "keyword \"incompat\"".into(),
            TokenKind::KwValues => "keyword \"values\"".into(),
            TokenKind::KwScale => "keyword \"scale\"".into(),
            TokenKind::KwAgent => "keyword \"agent\"".into(),
            TokenKind::KwAssess => "keyword \"assess\"".into(),
            TokenKind::KwOperator => "keyword \"operator\"".into(),
            TokenKind::KwPre => "keyword \"pre\"".into(),
            TokenKind::KwAdd => "keyword \"add\"".into(),
            TokenKind::KwDel => "keyword \"del\"".into(),
            TokenKind::KwInit => "keyword \"init\"".into(),
            TokenKind::KwGoal => "keyword \"goal\"".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: SourceSpan,
}

/// Position of the end of the source, for diagnostics about missing
/// trailing declarations.
pub fn end_of_source(source: &str) -> SourceSpan {
    let mut line = 1;
    let mut column = 1;
    for c in source.chars() {
        if c == '\n' {
            line += 1;
            column = 1;
        } else {
            column += 1;
        }
    }
    SourceSpan {
        line,
        column,
        length: 0,
    }
}

/// Splits `source` into tokens. `#` starts a comment running to the end
/// of the line; whitespace only separates tokens. On failure, every
/// offending character is reported, not just the first.
pub fn tokenize(source: &str) -> Result<Vec<Token>, Vec<ParseDiagnostic>> {
    let mut tokens = Vec::new();
    let mut diagnostics = Vec::new();
    let mut chars = source.chars().peekable();
    let mut line = 1usize;
    let mut column = 1usize;

    macro_rules! bump {
        () => {{
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else if c.is_some() {
                column += 1;
            }
            c
        }};
    }

    while let Some(&c) = chars.peek() {
        let span_start = SourceSpan {
            line,
            column,
            length: 1,
        };
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                bump!();
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump!();
                }
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        word.push(c);
                        bump!();
                    } else {
                        break;
                    }
                }
                let span = SourceSpan {
                    length: word.chars().count(),
                    ..span_start
                };
                let kind = TokenKind::keyword(&word).unwrap_or(TokenKind::Ident(word));
                tokens.push(Token { kind, span });
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        bump!();
                    } else {
                        break;
                    }
                }
                let span = SourceSpan {
                    length: digits.len(),
                    ..span_start
                };
                match digits.parse::<u32>() {
                    Ok(n) => tokens.push(Token {
                        kind: TokenKind::Int(n),
                        span,
                    }),
                    Err(_) => diagnostics.push(ParseDiagnostic::error(
                        format!("integer literal {digits} is too large"),
                        span,
                    )),
                }
            }
            _ => {
                let kind = match c {
                    '?' => Some(TokenKind::Question),
                    '{' => Some(TokenKind::LBrace),
                    '}' => Some(TokenKind::RBrace),
                    '=' => Some(TokenKind::Equals),
                    ',' => Some(TokenKind::Comma),
                    ';' => Some(TokenKind::Semicolon),
                    ':' => Some(TokenKind::Colon),
                    '+' => Some(TokenKind::Plus),
                    '-' => Some(TokenKind::Minus),
                    _ => None,
                };
                bump!();
                match kind {
                    Some(kind) => tokens.push(Token {
                        kind,
                        span: span_start,
                    }),
                    None => diagnostics.push(ParseDiagnostic::error(
                        format!("unexpected character {c:?}"),
                        span_start,
                    )),
                }
            }
        }
    }

    if diagnostics.is_empty() {
        Ok(tokens)
    } else {
        Err(diagnostics)
    }
}
