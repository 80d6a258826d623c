//! Surface tokens and their dense integer ids.
//!
//! The text format is whitespace-separated surface tokens. Quoted delimiter
//! tokens keep their quotes and the space character is spelled `"SPACE"`.

use std::fmt;

use crate::ast::{Delimiter, RegexClass};

/// Dense id into the token vocabulary.
pub type TokenId = usize;

/// Number of distinct tokens: 3 specials + 15 structural + 2 boundaries
/// + 8 classes + 20 delimiters + 41 integers.
pub const VOCAB_SIZE: usize = 89;

/// Smallest integer token.
pub const INT_MIN: i32 = -20;
/// Largest integer token.
pub const INT_MAX: i32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Token {
    Pad,
    Sos,
    Eos,
    Concat,
    ConcatOpen,
    ConcatClose,
    ConstStr,
    ConstOpen,
    ConstClose,
    SubStr,
    SubOpen,
    SubClose,
    ConstPos,
    PosOpen,
    PosClose,
    Regex,
    RegexOpen,
    RegexClose,
    Start,
    End,
    Class(RegexClass),
    Delim(Delimiter),
    /// Integer literal in [-20, 20]; doubles as position and regex index.
    Int(i32),
}

impl Token {
    pub fn id(self) -> TokenId {
        match self {
            Token::Pad => 0,
            Token::Sos => 1,
            Token::Eos => 2,
            Token::Concat => 3,
            Token::ConcatOpen => 4,
            Token::ConcatClose => 5,
            Token::ConstStr => 6,
            Token::ConstOpen => 7,
            Token::ConstClose => 8,
            Token::SubStr => 9,
            Token::SubOpen => 10,
            Token::SubClose => 11,
            Token::ConstPos => 12,
            Token::PosOpen => 13,
            Token::PosClose => 14,
            Token::Regex => 15,
            Token::RegexOpen => 16,
            Token::RegexClose => 17,
            Token::Start => 18,
            Token::End => 19,
            Token::Class(c) => 20 + c as usize,
            Token::Delim(d) => 28 + d.index(),
            Token::Int(k) => {
                debug_assert!((INT_MIN..=INT_MAX).contains(&k));
                (48 + (k - INT_MIN)) as usize
            }
        }
    }

    pub fn from_id(id: TokenId) -> Option<Token> {
        Some(match id {
            0 => Token::Pad,
            1 => Token::Sos,
            2 => Token::Eos,
            3 => Token::Concat,
            4 => Token::ConcatOpen,
            5 => Token::ConcatClose,
            6 => Token::ConstStr,
            7 => Token::ConstOpen,
            8 => Token::ConstClose,
            9 => Token::SubStr,
            10 => Token::SubOpen,
            11 => Token::SubClose,
            12 => Token::ConstPos,
            13 => Token::PosOpen,
            14 => Token::PosClose,
            15 => Token::Regex,
            16 => Token::RegexOpen,
            17 => Token::RegexClose,
            18 => Token::Start,
            19 => Token::End,
            20..=27 => Token::Class(RegexClass::from_index(id - 20)?),
            28..=47 => Token::Delim(Delimiter::from_index(id - 28)?),
            48..=88 => Token::Int(id as i32 - 48 + INT_MIN),
            _ => return None,
        })
    }

    pub fn from_surface(s: &str) -> Option<Token> {
        Some(match s {
            "PAD" => Token::Pad,
            "SOS" => Token::Sos,
            "EOS" => Token::Eos,
            "Concat" => Token::Concat,
            "c(" => Token::ConcatOpen,
            "c)" => Token::ConcatClose,
            "ConstStr" => Token::ConstStr,
            "k(" => Token::ConstOpen,
            "k)" => Token::ConstClose,
            "SubStr" => Token::SubStr,
            "s(" => Token::SubOpen,
            "s)" => Token::SubClose,
            "ConstPos" => Token::ConstPos,
            "p(" => Token::PosOpen,
            "p)" => Token::PosClose,
            "Regex" => Token::Regex,
            "r(" => Token::RegexOpen,
            "r)" => Token::RegexClose,
            "Start" => Token::Start,
            "End" => Token::End,
            _ => {
                if let Some(c) = RegexClass::from_name(s) {
                    return Some(Token::Class(c));
                }
                if let Some(d) = Delimiter::from_surface(s) {
                    return Some(Token::Delim(d));
                }
                let k: i32 = s.parse().ok()?;
                if (INT_MIN..=INT_MAX).contains(&k) {
                    return Some(Token::Int(k));
                }
                return None;
            }
        })
    }

    /// All tokens in id order.
    pub fn all() -> impl Iterator<Item = Token> {
        (0..VOCAB_SIZE).map(|i| Token::from_id(i).unwrap())
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Pad => f.write_str("PAD"),
            Token::Sos => f.write_str("SOS"),
            Token::Eos => f.write_str("EOS"),
            Token::Concat => f.write_str("Concat"),
            Token::ConcatOpen => f.write_str("c("),
            Token::ConcatClose => f.write_str("c)"),
            Token::ConstStr => f.write_str("ConstStr"),
            Token::ConstOpen => f.write_str("k("),
            Token::ConstClose => f.write_str("k)"),
            Token::SubStr => f.write_str("SubStr"),
            Token::SubOpen => f.write_str("s("),
            Token::SubClose => f.write_str("s)"),
            Token::ConstPos => f.write_str("ConstPos"),
            Token::PosOpen => f.write_str("p("),
            Token::PosClose => f.write_str("p)"),
            Token::Regex => f.write_str("Regex"),
            Token::RegexOpen => f.write_str("r("),
            Token::RegexClose => f.write_str("r)"),
            Token::Start => f.write_str("Start"),
            Token::End => f.write_str("End"),
            Token::Class(c) => f.write_str(c.name()),
            Token::Delim(d) => f.write_str(d.surface()),
            Token::Int(k) => write!(f, "{k}"),
        }
    }
}
