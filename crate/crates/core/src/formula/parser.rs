//! Recursive-descent parser for the ASCII surface syntax.
//!
//! Precedence from loosest to tightest: `<->`, `->`, `|`, `&`, prefix
//! operators. `<->` and `->` associate to the right, `|` and `&` to the left.

use std::fmt;

use thiserror::Error;

use super::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// A character sequence that is not an operator, keyword or atom.
    UnknownToken(String),
    UnexpectedToken {
        found: String,
        expected: &'static str,
    },
    UnexpectedEnd {
        expected: &'static str,
    },
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnknownToken(t) => write!(f, "unknown operator token {t:?}"),
            ParseErrorKind::UnexpectedToken { found, expected } => {
                write!(f, "expected {expected}, found {found:?}")
            }
            ParseErrorKind::UnexpectedEnd { expected } => {
                write!(f, "expected {expected}, found end of input")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    Know,
    Believe,
    Knowable,
    Dia,
    HatKnow,
    HatBelieve,
    True,
    False,
    Ident(String),
}

impl Tok {
    fn text(&self) -> String {
        match self {
            Tok::Not => "!".into(),
            Tok::And => "&".into(),
            Tok::Or => "|".into(),
            Tok::Implies => "->".into(),
            Tok::Iff => "<->".into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
            Tok::Know => "K".into(),
            Tok::Believe => "B".into(),
            Tok::Knowable => "box".into(),
            Tok::Dia => "dia".into(),
            Tok::HatKnow => "hatK".into(),
            Tok::HatBelieve => "hatB".into(),
            Tok::True => "true".into(),
            Tok::False => "false".into(),
            Tok::Ident(s) => s.clone(),
        }
    }
}

/// Atom names match `[a-z][a-z0-9_]*` and are not reserved words.
pub fn is_atom_name(word: &str) -> bool {
    let mut chars = word.chars();
    matches!(chars.next(), Some('a'..='z'))
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
        && !matches!(word, "box" | "dia" | "true" | "false")
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let single = match c {
            b'!' | b'~' => Some(Tok::Not),
            b'&' => Some(Tok::And),
            b'|' => Some(Tok::Or),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            toks.push((start, t));
            i += 1;
        } else if text[i..].starts_with("->") {
            toks.push((start, Tok::Implies));
            i += 2;
        } else if text[i..].starts_with("<->") {
            toks.push((start, Tok::Iff));
            i += 3;
        } else if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let word = &text[start..i];
            let tok = match word {
                "K" => Tok::Know,
                "B" => Tok::Believe,
                "box" => Tok::Knowable,
                "dia" => Tok::Dia,
                "hatK" => Tok::HatKnow,
                "hatB" => Tok::HatBelieve,
                "true" => Tok::True,
                "false" => Tok::False,
                w if is_atom_name(w) => Tok::Ident(w.to_string()),
                w => {
                    return Err(ParseError {
                        offset: start,
                        kind: ParseErrorKind::UnknownToken(w.to_string()),
                    })
                }
            };
            toks.push((start, tok));
        } else {
            let ch = text[i..].chars().next().unwrap_or('?');
            return Err(ParseError {
                offset: start,
                kind: ParseErrorKind::UnknownToken(ch.to_string()),
            });
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &'static str) -> ParseError {
        let kind = match self.peek() {
            Some(t) => ParseErrorKind::UnexpectedToken {
                found: t.text(),
                expected,
            },
            None => ParseErrorKind::UnexpectedEnd { expected },
        };
        ParseError {
            offset: self.offset(),
            kind,
        }
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.imp()?;
        if self.eat(&Tok::Iff) {
            Ok(Formula::iff(lhs, self.iff()?))
        } else {
            Ok(lhs)
        }
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if self.eat(&Tok::Implies) {
            Ok(Formula::implies(lhs, self.imp()?))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while self.eat(&Tok::Or) {
            lhs = Formula::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::And) {
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let wrap: fn(Formula) -> Formula = match self.peek() {
            Some(Tok::Not) => Formula::not,
            Some(Tok::Know) => Formula::know,
            Some(Tok::Believe) => Formula::believe,
            Some(Tok::Knowable) => Formula::knowable,
            Some(Tok::Dia) => Formula::dia,
            Some(Tok::HatKnow) => Formula::hat_know,
            Some(Tok::HatBelieve) => Formula::hat_believe,
            _ => return self.atom(),
        };
        self.pos += 1;
        Ok(wrap(self.unary()?))
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        const EXPECTED: &str = "an atom, constant, prefix operator or '('";
        let f = match self.peek() {
            Some(Tok::True) => Formula::Top,
            Some(Tok::False) => Formula::Bot,
            Some(Tok::Ident(name)) => Formula::Atom(name.clone()),
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.iff()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.error("')'"));
                }
                return Ok(inner);
            }
            _ => return Err(self.error(EXPECTED)),
        };
        self.pos += 1;
        Ok(f)
    }
}

/// Parses a formula. Offsets in errors are byte offsets into `text`.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let f = p.iff()?;
    if p.peek().is_some() {
        return Err(p.error("end of input"));
    }
    Ok(f)
}
