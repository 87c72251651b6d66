//! Named polynomial fixtures.
//!
//! One entry per line, `"<name>" "<source-ref>" := <expression>`. Blank lines
//! and lines starting with `#` are ignored.

use std::collections::HashSet;

use thiserror::Error;

use crate::bipoly::BiPoly;
use crate::io::parse::{parse_poly, ParseError};

/// The built-in corpus of transcribed polynomials.
pub const PAPER_FIXTURES: &str = include_str!("../../fixtures/paper.fix");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub source_ref: String,
    pub poly: BiPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixtureError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    Expression {
        line: usize,
        #[source]
        source: ParseError,
    },
    #[error("line {line}: duplicate fixture name `{name}`")]
    Duplicate { line: usize, name: String },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FixtureSet {
    fixtures: Vec<Fixture>,
}

impl FixtureSet {
    pub fn parse(text: &str) -> Result<Self, FixtureError> {
        let mut fixtures = Vec::new();
        let mut seen = HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fixture = parse_line(trimmed, line)?;
            if !seen.insert(fixture.name.clone()) {
                return Err(FixtureError::Duplicate {
                    line,
                    name: fixture.name,
                });
            }
            fixtures.push(fixture);
        }
        Ok(FixtureSet { fixtures })
    }

    pub fn builtin() -> Self {
        FixtureSet::parse(PAPER_FIXTURES).expect("built-in fixtures are well formed")
    }

    pub fn get(&self, name: &str) -> Option<&Fixture> {
        self.fixtures.iter().find(|f| f.name == name)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Fixture> {
        self.fixtures.iter()
    }

    pub fn len(&self) -> usize {
        self.fixtures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fixtures.is_empty()
    }
}

impl<'a> IntoIterator for &'a FixtureSet {
    type Item = &'a Fixture;
    type IntoIter = std::slice::Iter<'a, Fixture>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

/// Reads a `"..."` token, returning its contents and the remainder.
fn quoted(s: &str) -> Option<(&str, &str)> {
    let rest = s.trim_start().strip_prefix('"')?;
    let end = rest.find('"')?;
    Some((&rest[..end], &rest[end + 1..]))
}

fn parse_line(text: &str, line: usize) -> Result<Fixture, FixtureError> {
    let malformed = |message: &str| FixtureError::Malformed {
        line,
        message: message.to_string(),
    };
    let (name, rest) = quoted(text).ok_or_else(|| malformed("expected quoted fixture name"))?;
    if name.is_empty() {
        return Err(malformed("empty fixture name"));
    }
    let (source_ref, rest) =
        quoted(rest).ok_or_else(|| malformed("expected quoted source reference"))?;
    let expr = rest
        .trim_start()
        .strip_prefix(":=")
        .ok_or_else(|| malformed("expected `:=`"))?;
    let poly = parse_poly(expr).map_err(|source| FixtureError::Expression { line, source })?;
    Ok(Fixture {
        name: name.to_string(),
        source_ref: source_ref.to_string(),
        poly,
    })
}
