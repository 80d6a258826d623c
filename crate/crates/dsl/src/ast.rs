//! Typed program AST: concatenations of constant-string and substring
//! expressions over regex-style positions.

use std::fmt;

/// The fixed 20-character delimiter set. `' '` serializes as `"SPACE"`.
pub const DELIMITERS: [char; 20] = [
    ' ', '.', ',', '!', '?', '@', '#', '$', '%', '&', '(', ')', '[', ']', '{', '}', '\'', '/',
    ':', ';',
];

/// One printable character from the fixed 20-element delimiter set.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Delimiter(u8);

impl Delimiter {
    pub fn from_char(c: char) -> Option<Delimiter> {
        DELIMITERS.iter().position(|&d| d == c).map(|i| Delimiter(i as u8))
    }

    pub fn from_index(i: usize) -> Option<Delimiter> {
        (i < DELIMITERS.len()).then_some(Delimiter(i as u8))
    }

    /// Parses the quoted surface form, e.g. `"SPACE"` or `"."`.
    pub fn from_surface(s: &str) -> Option<Delimiter> {
        let inner = s.strip_prefix('"')?.strip_suffix('"')?;
        if inner == "SPACE" {
            return Delimiter::from_char(' ');
        }
        let mut chars = inner.chars();
        let c = chars.next()?;
        if chars.next().is_some() {
            return None;
        }
        Delimiter::from_char(c)
    }

    pub fn ch(self) -> char {
        DELIMITERS[self.0 as usize]
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Quoted surface form used by the token text format.
    pub fn surface(self) -> &'static str {
        const SURFACES: [&str; 20] = [
            "\"SPACE\"", "\".\"", "\",\"", "\"!\"", "\"?\"", "\"@\"", "\"#\"", "\"$\"", "\"%\"",
            "\"&\"", "\"(\"", "\")\"", "\"[\"", "\"]\"", "\"{\"", "\"}\"", "\"'\"", "\"/\"",
            "\":\"", "\";\"",
        ];
        SURFACES[self.0 as usize]
    }

    pub fn all() -> impl Iterator<Item = Delimiter> {
        (0..DELIMITERS.len()).map(|i| Delimiter(i as u8))
    }
}

impl fmt::Debug for Delimiter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Delimiter({:?})", self.ch())
    }
}

/// Character-class alternatives for regex positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegexClass {
    /// Maximal run of ASCII letters.
    Word = 0,
    /// Maximal run of digits.
    Num = 1,
    /// Maximal run of letters and digits.
    Alphanum = 2,
    /// Maximal run of uppercase letters.
    Allcaps = 3,
    /// One uppercase letter followed by the maximal run of lowercase letters.
    Propcase = 4,
    /// Maximal run of lowercase letters.
    Lower = 5,
    /// A single digit.
    Digit = 6,
    /// Any single character.
    Char = 7,
}

impl RegexClass {
    pub const ALL: [RegexClass; 8] = [
        RegexClass::Word,
        RegexClass::Num,
        RegexClass::Alphanum,
        RegexClass::Allcaps,
        RegexClass::Propcase,
        RegexClass::Lower,
        RegexClass::Digit,
        RegexClass::Char,
    ];

    pub fn from_index(i: usize) -> Option<RegexClass> {
        Self::ALL.get(i).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            RegexClass::Word => "Word",
            RegexClass::Num => "Num",
            RegexClass::Alphanum => "Alphanum",
            RegexClass::Allcaps => "Allcaps",
            RegexClass::Propcase => "Propcase",
            RegexClass::Lower => "Lower",
            RegexClass::Digit => "Digit",
            RegexClass::Char => "Char",
        }
    }

    pub fn from_name(s: &str) -> Option<RegexClass> {
        Self::ALL.iter().copied().find(|c| c.name() == s)
    }
}

/// What a regex position refers to: the match start or one past its end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Boundary {
    Start,
    End,
}

/// Pattern matched by a regex position: a character class or a literal
/// delimiter occurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegexKind {
    Class(RegexClass),
    Literal(Delimiter),
}

/// A resolvable index into the input string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Position {
    /// Absolute index; negative values count from the end of the string,
    /// with -1 denoting one past the last character.
    ConstPos(i32),
    /// Index of the `index`-th match of `kind` (0-based from the left for
    /// non-negative indices, |index|-th from the right for negative ones).
    RegexPos {
        kind: RegexKind,
        index: i32,
        boundary: Boundary,
    },
}

/// One concatenated piece of the program output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Expression {
    ConstStr(Delimiter),
    SubStr(Position, Position),
}

impl Expression {
    /// Serialized length in tokens.
    pub fn token_len(&self) -> usize {
        match self {
            Expression::ConstStr(_) => 5,
            Expression::SubStr(a, b) => 3 + a.token_len() + b.token_len(),
        }
    }
}

impl Position {
    pub fn token_len(&self) -> usize {
        match self {
            Position::ConstPos(_) => 4,
            Position::RegexPos { .. } => 6,
        }
    }
}

/// A non-empty ordered list of expressions; output is the concatenation of
/// each expression's output.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Program {
    exprs: Vec<Expression>,
}

impl Program {
    /// Builds a program from at least one expression.
    pub fn new(exprs: Vec<Expression>) -> Program {
        assert!(!exprs.is_empty(), "a program holds at least one expression");
        Program { exprs }
    }

    pub fn exprs(&self) -> &[Expression] {
        &self.exprs
    }

    /// Serialized length in tokens, including the Concat wrapper.
    pub fn token_len(&self) -> usize {
        3 + self.exprs.iter().map(Expression::token_len).sum::<usize>()
    }

    /// In-order concatenation of the expression lists of `subs`.
    pub fn compose<'a>(subs: impl IntoIterator<Item = &'a Program>) -> Program {
        let exprs: Vec<Expression> =
            subs.into_iter().flat_map(|p| p.exprs.iter().copied()).collect();
        Program::new(exprs)
    }
}
