//! Execution semantics: position resolution and program evaluation.
//!
//! Substrings are half-open slices `[start, end)`. `Start` resolves to a
//! match's first index and `End` to one past its last index. An inverted
//! slice (start > end) is an error rather than an empty string so that
//! degenerate programs are filtered out by dataset generation.

use std::fmt;

use crate::ast::{Boundary, Expression, Position, Program, RegexClass, RegexKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExecError {
    /// A constant position fell outside `[0, len]`.
    PosOutOfRange { pos: i32, len: usize },
    /// Fewer matches exist than the regex index requires.
    NotEnoughMatches { wanted: i32, found: usize },
    /// Resolved slice bounds were inverted.
    InvertedSlice { start: usize, end: usize },
}

impl fmt::Display for ExecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExecError::PosOutOfRange { pos, len } => {
                write!(f, "position {pos} out of range for length {len}")
            }
            ExecError::NotEnoughMatches { wanted, found } => {
                write!(f, "regex index {wanted} needs more than {found} matches")
            }
            ExecError::InvertedSlice { start, end } => {
                write!(f, "inverted slice [{start}, {end})")
            }
        }
    }
}

impl std::error::Error for ExecError {}

/// All matches of `kind` in `chars` as half-open index ranges, left to right.
/// Run-based classes match maximal runs; `Digit`, `Char`, and literals match
/// single characters.
pub fn find_matches(kind: RegexKind, chars: &[char]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    match kind {
        RegexKind::Literal(d) => {
            let c = d.ch();
            for (i, &x) in chars.iter().enumerate() {
                if x == c {
                    out.push((i, i + 1));
                }
            }
        }
        RegexKind::Class(RegexClass::Digit) => {
            for (i, &x) in chars.iter().enumerate() {
                if x.is_ascii_digit() {
                    out.push((i, i + 1));
                }
            }
        }
        RegexKind::Class(RegexClass::Char) => {
            for i in 0..chars.len() {
                out.push((i, i + 1));
            }
        }
        RegexKind::Class(RegexClass::Propcase) => {
            let mut i = 0;
            while i < chars.len() {
                if chars[i].is_ascii_uppercase() {
                    let mut j = i + 1;
                    while j < chars.len() && chars[j].is_ascii_lowercase() {
                        j += 1;
                    }
                    out.push((i, j));
                    i = j;
                } else {
                    i += 1;
                }
            }
        }
        RegexKind::Class(class) => {
            let pred: fn(char) -> bool = match class {
                RegexClass::Word => |c| c.is_ascii_alphabetic(),
                RegexClass::Num => |c| c.is_ascii_digit(),
                RegexClass::Alphanum => |c| c.is_ascii_alphanumeric(),
                RegexClass::Allcaps => |c| c.is_ascii_uppercase(),
                RegexClass::Lower => |c| c.is_ascii_lowercase(),
                _ => unreachable!(),
            };
            let mut i = 0;
            while i < chars.len() {
                if pred(chars[i]) {
                    let mut j = i + 1;
                    while j < chars.len() && pred(chars[j]) {
                        j += 1;
                    }
                    out.push((i, j));
                    i = j;
                } else {
                    i += 1;
                }
            }
        }
    }
    out
}

/// Resolves a position to an index in `[0, len]` over a pre-split character
/// slice.
pub fn resolve_on(pos: &Position, chars: &[char]) -> Result<usize, ExecError> {
    let len = chars.len();
    match *pos {
        Position::ConstPos(k) => {
            let idx = if k >= 0 { k as i64 } else { len as i64 + k as i64 + 1 };
            if idx < 0 || idx > len as i64 {
                return Err(ExecError::PosOutOfRange { pos: k, len });
            }
            Ok(idx as usize)
        }
        Position::RegexPos { kind, index, boundary } => {
            let matches = find_matches(kind, chars);
            let mi = if index >= 0 {
                index as i64
            } else {
                matches.len() as i64 + index as i64
            };
            if mi < 0 || mi >= matches.len() as i64 {
                return Err(ExecError::NotEnoughMatches {
                    wanted: index,
                    found: matches.len(),
                });
            }
            let (start, end) = matches[mi as usize];
            Ok(match boundary {
                Boundary::Start => start,
                Boundary::End => end,
            })
        }
    }
}

/// Resolves a position against an input string.
pub fn resolve_position(pos: &Position, input: &str) -> Result<usize, ExecError> {
    let chars: Vec<char> = input.chars().collect();
    resolve_on(pos, &chars)
}

/// Evaluates one expression over a pre-split character slice.
pub fn eval_expr(expr: &Expression, chars: &[char]) -> Result<String, ExecError> {
    match expr {
        Expression::ConstStr(d) => Ok(d.ch().to_string()),
        Expression::SubStr(q1, q2) => {
            let start = resolve_on(q1, chars)?;
            let end = resolve_on(q2, chars)?;
            if start > end {
                return Err(ExecError::InvertedSlice { start, end });
            }
            Ok(chars[start..end].iter().collect())
        }
    }
}

/// Runs a program on an input string, concatenating expression outputs in
/// order. Fails with the first expression error.
pub fn execute(program: &Program, input: &str) -> Result<String, ExecError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = String::new();
    for expr in program.exprs() {
        out.push_str(&eval_expr(expr, &chars)?);
    }
    Ok(out)
}
