//! Parsing between token sequences and program ASTs, plus the inverse
//! printer. `parse(print(p))` structurally equals `p` for every program.

use std::fmt;

use crate::ast::{Boundary, Delimiter, Expression, Position, Program, RegexKind};
use crate::token::Token;

/// Parse failure at the first offending token.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    /// Index of the offending token (equals the input length when the
    /// sequence ended early).
    pub index: usize,
    pub expected: &'static str,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at token {}: expected {}", self.index, self.expected)
    }
}

impl std::error::Error for SyntaxError {}

struct Cursor<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<Token> {
        self.tokens.get(self.pos).copied()
    }

    fn err<T>(&self, expected: &'static str) -> Result<T, SyntaxError> {
        Err(SyntaxError { index: self.pos, expected })
    }

    fn eat(&mut self, want: Token, expected: &'static str) -> Result<(), SyntaxError> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(expected)
        }
    }

    fn int(&mut self, lo: i32, hi: i32, expected: &'static str) -> Result<i32, SyntaxError> {
        match self.peek() {
            Some(Token::Int(k)) if (lo..=hi).contains(&k) => {
                self.pos += 1;
                Ok(k)
            }
            _ => self.err(expected),
        }
    }

    fn delimiter(&mut self, expected: &'static str) -> Result<Delimiter, SyntaxError> {
        match self.peek() {
            Some(Token::Delim(d)) => {
                self.pos += 1;
                Ok(d)
            }
            _ => self.err(expected),
        }
    }

    fn position(&mut self) -> Result<Position, SyntaxError> {
        match self.peek() {
            Some(Token::ConstPos) => {
                self.pos += 1;
                self.eat(Token::PosOpen, "p(")?;
                let k = self.int(-20, 20, "integer in [-20, 20]")?;
                self.eat(Token::PosClose, "p)")?;
                Ok(Position::ConstPos(k))
            }
            Some(Token::Regex) => {
                self.pos += 1;
                self.eat(Token::RegexOpen, "r(")?;
                let kind = match self.peek() {
                    Some(Token::Class(c)) => {
                        self.pos += 1;
                        RegexKind::Class(c)
                    }
                    Some(Token::Delim(d)) => {
                        self.pos += 1;
                        RegexKind::Literal(d)
                    }
                    _ => return self.err("regex class or delimiter"),
                };
                let n = self.int(-3, 3, "integer in [-3, 3]")?;
                let boundary = match self.peek() {
                    Some(Token::Start) => Boundary::Start,
                    Some(Token::End) => Boundary::End,
                    _ => return self.err("Start or End"),
                };
                self.pos += 1;
                self.eat(Token::RegexClose, "r)")?;
                Ok(Position::RegexPos { kind, index: n, boundary })
            }
            _ => self.err("ConstPos or Regex"),
        }
    }

    fn expression(&mut self) -> Result<Expression, SyntaxError> {
        match self.peek() {
            Some(Token::ConstStr) => {
                self.pos += 1;
                self.eat(Token::ConstOpen, "k(")?;
                let d = self.delimiter("delimiter")?;
                self.eat(Token::ConstClose, "k)")?;
                Ok(Expression::ConstStr(d))
            }
            Some(Token::SubStr) => {
                self.pos += 1;
                self.eat(Token::SubOpen, "s(")?;
                let q1 = self.position()?;
                let q2 = self.position()?;
                self.eat(Token::SubClose, "s)")?;
                Ok(Expression::SubStr(q1, q2))
            }
            _ => self.err("ConstStr or SubStr"),
        }
    }
}

/// Parses a full token sequence into a program. The sequence must contain no
/// PAD/SOS/EOS tokens and no trailing tokens after the closing `c)`.
pub fn parse(tokens: &[Token]) -> Result<Program, SyntaxError> {
    let mut cur = Cursor { tokens, pos: 0 };
    cur.eat(Token::Concat, "Concat")?;
    cur.eat(Token::ConcatOpen, "c(")?;
    let mut exprs = vec![cur.expression()?];
    loop {
        match cur.peek() {
            Some(Token::ConcatClose) => {
                cur.pos += 1;
                break;
            }
            Some(Token::ConstStr) | Some(Token::SubStr) => exprs.push(cur.expression()?),
            _ => return cur.err("ConstStr, SubStr, or c)"),
        }
    }
    if cur.pos != tokens.len() {
        return cur.err("end of sequence");
    }
    Ok(Program::new(exprs))
}

/// Serializes a program into its grammar-valid token sequence.
pub fn print(program: &Program) -> Vec<Token> {
    let mut out = Vec::with_capacity(program.token_len());
    out.push(Token::Concat);
    out.push(Token::ConcatOpen);
    for expr in program.exprs() {
        match expr {
            Expression::ConstStr(d) => {
                out.extend([Token::ConstStr, Token::ConstOpen, Token::Delim(*d), Token::ConstClose]);
            }
            Expression::SubStr(q1, q2) => {
                out.push(Token::SubStr);
                out.push(Token::SubOpen);
                for q in [q1, q2] {
                    match q {
                        Position::ConstPos(k) => {
                            out.extend([
                                Token::ConstPos,
                                Token::PosOpen,
                                Token::Int(*k),
                                Token::PosClose,
                            ]);
                        }
                        Position::RegexPos { kind, index, boundary } => {
                            out.push(Token::Regex);
                            out.push(Token::RegexOpen);
                            out.push(match kind {
                                RegexKind::Class(c) => Token::Class(*c),
                                RegexKind::Literal(d) => Token::Delim(*d),
                            });
                            out.push(Token::Int(*index));
                            out.push(match boundary {
                                Boundary::Start => Token::Start,
                                Boundary::End => Token::End,
                            });
                            out.push(Token::RegexClose);
                        }
                    }
                }
                out.push(Token::SubClose);
            }
        }
    }
    out.push(Token::ConcatClose);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TextError {
    /// A whitespace-separated word is not in the vocabulary.
    UnknownToken { index: usize, word: String },
    Syntax(SyntaxError),
}

impl fmt::Display for TextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TextError::UnknownToken { index, word } => {
                write!(f, "unknown token {word:?} at position {index}")
            }
            TextError::Syntax(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for TextError {}

/// Tokenizes whitespace-separated surface text.
pub fn tokenize(text: &str) -> Result<Vec<Token>, TextError> {
    text.split_whitespace()
        .enumerate()
        .map(|(index, word)| {
            Token::from_surface(word).ok_or_else(|| TextError::UnknownToken {
                index,
                word: word.to_string(),
            })
        })
        .collect()
}

/// Parses whitespace-separated surface text into a program.
pub fn parse_text(text: &str) -> Result<Program, TextError> {
    let tokens = tokenize(text)?;
    parse(&tokens).map_err(TextError::Syntax)
}

/// Prints a program as whitespace-separated surface text.
pub fn print_text(program: &Program) -> String {
    let tokens = print(program);
    let mut s = String::new();
    for (i, t) in tokens.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        s.push_str(&t.to_string());
    }
    s
}
