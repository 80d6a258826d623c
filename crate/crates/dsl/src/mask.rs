//! Grammar-based next-token mask (syntax checker).
//!
//! The serialized token language has fixed nesting depth, so validity is
//! tracked by a small finite-state machine. [`MaskState`] advances one token
//! at a time during decoding; [`next_token_mask`] folds a whole prefix.

use std::fmt;

use crate::token::{Token, TokenId, VOCAB_SIZE};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaskError {
    /// Index of the token that invalidated the prefix.
    pub index: usize,
    pub token: Token,
}

impl fmt::Display for MaskError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid token {} at position {}", self.token, self.index)
    }
}

impl std::error::Error for MaskError {}

/// Which substring position slot is being filled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    Begin,
    AfterConcat,
    BodyFirst,
    Body,
    CsOpen,
    CsDelim,
    CsClose,
    SsOpen,
    PosStart(Slot),
    CpOpen(Slot),
    CpInt(Slot),
    CpClose(Slot),
    RxOpen(Slot),
    RxKind(Slot),
    RxIdx(Slot),
    RxBound(Slot),
    RxClose(Slot),
    SsClose,
    Done,
}

/// Incremental tracker for grammar-valid prefixes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaskState {
    state: State,
    consumed: usize,
}

impl Default for MaskState {
    fn default() -> Self {
        Self::new()
    }
}

impl MaskState {
    /// State accepting exactly the valid program serializations.
    pub fn new() -> MaskState {
        MaskState { state: State::Begin, consumed: 0 }
    }

    /// True when the prefix is a complete program; only then is EOS allowed.
    pub fn is_complete(&self) -> bool {
        self.state == State::Done
    }

    /// Minimum number of further tokens needed to reach a complete program
    /// (0 when already complete). Used for budget-aware decoding.
    pub fn min_tokens_to_complete(&self) -> usize {
        // Cheapest continuations: ConstStr k( d k) costs 5 tokens per
        // expression, ConstPos p( k p) costs 4 tokens per position.
        match self.state {
            State::Begin => 8,            // Concat c( <expr:5> c)
            State::AfterConcat => 7,      // c( <expr:5> c)
            State::BodyFirst => 6,        // <expr:5> c)
            State::Body => 1,             // c)
            State::CsOpen => 4,           // k( d k) c)
            State::CsDelim => 3,          // d k) c)
            State::CsClose => 2,          // k) c)
            State::SsOpen => 11,          // s( <pos:4> <pos:4> s) c)
            State::PosStart(s) => 4 + rest_after_pos(s),
            State::CpOpen(s) => 3 + rest_after_pos(s),
            State::CpInt(s) => 2 + rest_after_pos(s),
            State::CpClose(s) => 1 + rest_after_pos(s),
            State::RxOpen(s) => 5 + rest_after_pos(s),
            State::RxKind(s) => 4 + rest_after_pos(s),
            State::RxIdx(s) => 3 + rest_after_pos(s),
            State::RxBound(s) => 2 + rest_after_pos(s),
            State::RxClose(s) => 1 + rest_after_pos(s),
            State::SsClose => 2,          // s) c)
            State::Done => 0,
        }
    }

    fn allows(&self, token: Token) -> bool {
        match self.state {
            State::Begin => token == Token::Concat,
            State::AfterConcat => token == Token::ConcatOpen,
            State::BodyFirst => matches!(token, Token::ConstStr | Token::SubStr),
            State::Body => {
                matches!(token, Token::ConstStr | Token::SubStr | Token::ConcatClose)
            }
            State::CsOpen => token == Token::ConstOpen,
            State::CsDelim => matches!(token, Token::Delim(_)),
            State::CsClose => token == Token::ConstClose,
            State::SsOpen => token == Token::SubOpen,
            State::PosStart(_) => matches!(token, Token::ConstPos | Token::Regex),
            State::CpOpen(_) => token == Token::PosOpen,
            State::CpInt(_) => matches!(token, Token::Int(_)),
            State::CpClose(_) => token == Token::PosClose,
            State::RxOpen(_) => token == Token::RegexOpen,
            State::RxKind(_) => matches!(token, Token::Class(_) | Token::Delim(_)),
            State::RxIdx(_) => matches!(token, Token::Int(k) if (-3..=3).contains(&k)),
            State::RxBound(_) => matches!(token, Token::Start | Token::End),
            State::RxClose(_) => token == Token::RegexClose,
            State::SsClose => token == Token::SubClose,
            State::Done => token == Token::Eos,
        }
    }

    /// Exactly the tokens that keep the prefix extensible to a valid
    /// program, plus EOS when the prefix already is one.
    pub fn allowed(&self) -> Vec<Token> {
        Token::all().filter(|&t| self.allows(t)).collect()
    }

    /// Boolean mask over the dense vocabulary.
    pub fn allowed_ids(&self) -> [bool; VOCAB_SIZE] {
        let mut mask = [false; VOCAB_SIZE];
        for t in Token::all() {
            if self.allows(t) {
                mask[t.id()] = true;
            }
        }
        mask
    }

    /// Advances over one token, failing if it is not currently allowed.
    pub fn advance(&mut self, token: Token) -> Result<(), MaskError> {
        if !self.allows(token) {
            return Err(MaskError { index: self.consumed, token });
        }
        self.state = match (self.state, token) {
            (State::Begin, _) => State::AfterConcat,
            (State::AfterConcat, _) => State::BodyFirst,
            (State::BodyFirst | State::Body, Token::ConstStr) => State::CsOpen,
            (State::BodyFirst | State::Body, Token::SubStr) => State::SsOpen,
            (State::Body, Token::ConcatClose) => State::Done,
            (State::CsOpen, _) => State::CsDelim,
            (State::CsDelim, _) => State::CsClose,
            (State::CsClose, _) => State::Body,
            (State::SsOpen, _) => State::PosStart(Slot::First),
            (State::PosStart(s), Token::ConstPos) => State::CpOpen(s),
            (State::PosStart(s), Token::Regex) => State::RxOpen(s),
            (State::CpOpen(s), _) => State::CpInt(s),
            (State::CpInt(s), _) => State::CpClose(s),
            (State::CpClose(Slot::First), _) | (State::RxClose(Slot::First), _) => {
                State::PosStart(Slot::Second)
            }
            (State::CpClose(Slot::Second), _) | (State::RxClose(Slot::Second), _) => {
                State::SsClose
            }
            (State::RxOpen(s), _) => State::RxKind(s),
            (State::RxKind(s), _) => State::RxIdx(s),
            (State::RxIdx(s), _) => State::RxBound(s),
            (State::RxBound(s), _) => State::RxClose(s),
            (State::SsClose, _) => State::Body,
            (State::Done, Token::Eos) => State::Done,
            (s, t) => unreachable!("allowed but unhandled: {s:?} {t}"),
        };
        self.consumed += 1;
        Ok(())
    }

    /// Tokens allowed next that still admit completion within `budget`
    /// further tokens (EOS consumes no budget).
    pub fn allowed_within(&self, budget: usize) -> Vec<Token> {
        self.allowed()
            .into_iter()
            .filter(|&t| {
                if t == Token::Eos {
                    return true;
                }
                if budget == 0 {
                    return false;
                }
                let mut next = self.clone();
                next.advance(t).expect("token came from allowed()");
                next.min_tokens_to_complete() <= budget - 1
            })
            .collect()
    }
}

/// Cost of everything after the current position finishes: the second
/// position (if pending), `s)`, and `c)`.
fn rest_after_pos(slot: Slot) -> usize {
    match slot {
        Slot::First => 4 + 2,
        Slot::Second => 2,
    }
}

/// The set of tokens that may follow `prefix`, which must itself be a valid
/// prefix of some grammar-valid sequence.
pub fn next_token_mask(prefix: &[Token]) -> Result<Vec<Token>, MaskError> {
    let mut state = MaskState::new();
    for &t in prefix {
        state.advance(t)?;
    }
    Ok(state.allowed())
}

/// Convenience: mask as boolean array over token ids.
pub fn next_token_mask_ids(prefix: &[TokenId]) -> Result<[bool; VOCAB_SIZE], MaskError> {
    let mut state = MaskState::new();
    for (index, &id) in prefix.iter().enumerate() {
        let token = Token::from_id(id).ok_or(MaskError { index, token: Token::Pad })?;
        state.advance(token)?;
    }
    Ok(state.allowed_ids())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse, tokenize};

    fn mask_of(text: &str) -> Vec<Token> {
        next_token_mask(&tokenize(text).unwrap()).unwrap()
    }

    #[test]
    fn after_concat_open_expressions_only() {
        assert_eq!(mask_of("Concat c("), vec![Token::ConstStr, Token::SubStr]);
    }

    #[test]
    fn after_const_str_single_production() {
        assert_eq!(mask_of("Concat c( ConstStr"), vec![Token::ConstOpen]);
    }

    #[test]
    fn complete_program_allows_eos_only() {
        let m = mask_of(r#"Concat c( ConstStr k( "!" k) c)"#);
        assert_eq!(m, vec![Token::Eos]);
    }

    #[test]
    fn open_body_allows_more_expressions_or_close() {
        let m = mask_of(r#"Concat c( ConstStr k( "!" k)"#);
        assert_eq!(m, vec![Token::ConcatClose, Token::ConstStr, Token::SubStr]);
    }

    #[test]
    fn regex_index_tokens_are_restricted() {
        let m = mask_of(r#"Concat c( SubStr s( Regex r( Num"#);
        assert_eq!(m.len(), 7);
        assert!(m.iter().all(|t| matches!(t, Token::Int(k) if (-3..=3).contains(k))));
    }

    #[test]
    fn invalid_prefix_reports_offender() {
        let tokens = tokenize("Concat Concat").unwrap();
        let err = next_token_mask(&tokens).unwrap_err();
        assert_eq!(err.index, 1);
    }

    #[test]
    fn min_tokens_reaches_completion_via_allowed_path() {
        // From any state reached below, repeatedly taking a token that
        // decreases min_tokens_to_complete must terminate at Done, and the
        // produced sequence must parse.
        let prefixes = [
            "",
            "Concat",
            "Concat c(",
            "Concat c( SubStr",
            "Concat c( SubStr s( Regex r( Num -3 Start r)",
            r#"Concat c( ConstStr k( ";" k)"#,
        ];
        for prefix in prefixes {
            let mut toks = tokenize(prefix).unwrap();
            let mut state = MaskState::new();
            for &t in &toks {
                state.advance(t).unwrap();
            }
            let mut steps = state.min_tokens_to_complete();
            while !state.is_complete() {
                let choice = state
                    .allowed()
                    .into_iter()
                    .filter(|&t| t != Token::Eos)
                    .min_by_key(|&t| {
                        let mut s = state.clone();
                        s.advance(t).unwrap();
                        s.min_tokens_to_complete()
                    })
                    .unwrap();
                state.advance(choice).unwrap();
                toks.push(choice);
                assert_eq!(state.min_tokens_to_complete(), steps - 1, "at {toks:?}");
                steps -= 1;
            }
            assert!(parse(&toks).is_ok(), "completion of {prefix:?} must parse");
        }
    }

    #[test]
    fn budget_filter_forces_short_completions() {
        let mut state = MaskState::new();
        for t in tokenize("Concat c(").unwrap() {
            state.advance(t).unwrap();
        }
        // Exactly enough budget for one ConstStr expression plus c).
        let allowed = state.allowed_within(6);
        assert_eq!(allowed, vec![Token::ConstStr]);
        // Not enough for anything.
        assert!(state.allowed_within(5).is_empty());
    }
}
