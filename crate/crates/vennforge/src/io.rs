//! The "setfam v1" text format.
//!
//! First non-comment line is `n=<int>`. Each subsequent non-comment line is
//! one set, written as strictly increasing comma-separated 1-based
//! elements, or `-` for the empty set. `#` starts a comment line.
//! Serialization is bit-exact: no trailing spaces, every line
//! newline-terminated.

use crate::error::{FamilyError, ParseError};
use crate::family::Family;
use crate::set_word::SetWord;

pub fn parse(text: &str) -> Result<Family, ParseError> {
    let mut ground: Option<usize> = None;
    let mut members: Vec<SetWord> = Vec::new();
    let mut set_index = 0usize;
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match ground {
            None => {
                let n = trimmed
                    .strip_prefix("n=")
                    .and_then(|v| v.parse::<usize>().ok())
                    .ok_or(ParseError::BadHeader { line })?;
                SetWord::empty(n).map_err(|source| ParseError::Family { line, source })?;
                ground = Some(n);
            }
            Some(n) => {
                let set = parse_set_line(trimmed, n, line, set_index)?;
                members.push(set);
                set_index += 1;
            }
        }
    }
    let n = ground.ok_or(ParseError::MissingHeader)?;
    Family::new(n, members).map_err(|source| ParseError::Family { line: 0, source })
}

fn parse_set_line(
    text: &str,
    ground: usize,
    line: usize,
    set_index: usize,
) -> Result<SetWord, ParseError> {
    if text == "-" {
        return SetWord::empty(ground).map_err(|source| ParseError::Family { line, source });
    }
    let mut elements = Vec::new();
    let mut prev = 0usize;
    for piece in text.split(',') {
        let e: usize = piece.trim().parse().map_err(|_| ParseError::BadSet {
            line,
            text: text.to_string(),
        })?;
        if e <= prev {
            return Err(ParseError::BadSet {
                line,
                text: text.to_string(),
            });
        }
        if e > ground {
            return Err(ParseError::Family {
                line,
                source: FamilyError::ElementOutOfRange {
                    element: e,
                    ground_size: ground,
                    set_index,
                },
            });
        }
        prev = e;
        elements.push(e - 1);
    }
    SetWord::from_elements(ground, elements).map_err(|source| ParseError::Family { line, source })
}

pub fn serialize(family: &Family) -> String {
    let mut out = format!("n={}\n", family.ground_size());
    for m in family.iter() {
        out.push_str(&serialize_set(m));
        out.push('\n');
    }
    out
}

pub fn serialize_set(set: &SetWord) -> String {
    if set.is_empty() {
        return "-".to_string();
    }
    set.elements()
        .map(|e| (e + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}
