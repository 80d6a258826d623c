//! String-transformation DSL: token vocabulary, program AST, parsing and
//! printing, execution semantics, and a grammar-based next-token mask.
//!
//! Programs concatenate the outputs of constant-string and substring
//! expressions. Substring bounds are either absolute indices or regex-style
//! positions (character classes or literal delimiters) resolved against the
//! input string. All types are immutable after construction and every
//! operation is a pure function.

pub mod ast;
pub mod exec;
pub mod mask;
pub mod parse;
pub mod token;

#[cfg(any(test, feature = "oracle"))]
pub mod oracle;

pub use ast::{Boundary, Delimiter, Expression, Position, Program, RegexClass, RegexKind};
pub use exec::{execute, resolve_position, ExecError};
pub use mask::{next_token_mask, MaskError, MaskState};
pub use parse::{parse, parse_text, print, print_text, SyntaxError};
pub use token::{Token, TokenId, VOCAB_SIZE};
