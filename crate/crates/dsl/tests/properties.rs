//! Cross-module properties: print/parse round-trips, mask soundness and
//! completeness, and agreement between the main interpreter and the naive
//! string-scanning oracle.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use hnps_dsl::ast::DELIMITERS;
use hnps_dsl::oracle::naive_run;
use hnps_dsl::parse::tokenize;
use hnps_dsl::{
    execute, next_token_mask, parse, print, print_text, Boundary, Delimiter, Expression,
    MaskState, Position, Program, RegexClass, RegexKind, Token,
};

/// Uniform AST sampler, independent of the dataset generator's weighted one.
fn random_program(rng: &mut impl Rng) -> Program {
    let n = rng.gen_range(1..=4);
    let exprs = (0..n).map(|_| random_expr(rng)).collect();
    Program::new(exprs)
}

fn random_expr(rng: &mut impl Rng) -> Expression {
    if rng.gen_bool(0.25) {
        Expression::ConstStr(random_delim(rng))
    } else {
        Expression::SubStr(random_pos(rng), random_pos(rng))
    }
}

fn random_pos(rng: &mut impl Rng) -> Position {
    if rng.gen_bool(0.3) {
        Position::ConstPos(rng.gen_range(-20..=20))
    } else {
        let kind = if rng.gen_bool(0.5) {
            RegexKind::Class(*RegexClass::ALL.choose(rng).unwrap())
        } else {
            RegexKind::Literal(random_delim(rng))
        };
        Position::RegexPos {
            kind,
            index: rng.gen_range(-3..=3),
            boundary: if rng.gen_bool(0.5) { Boundary::Start } else { Boundary::End },
        }
    }
}

fn random_delim(rng: &mut impl Rng) -> Delimiter {
    Delimiter::from_index(rng.gen_range(0..DELIMITERS.len())).unwrap()
}

fn random_input(rng: &mut impl Rng) -> String {
    let len = rng.gen_range(0..=80);
    let mut pool: Vec<char> = ('a'..='z').chain('A'..='Z').chain('0'..='9').collect();
    pool.extend(DELIMITERS);
    (0..len).map(|_| *pool.choose(rng).unwrap()).collect()
}

#[test]
fn print_parse_roundtrip_10k() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10_000 {
        let p = random_program(&mut rng);
        let tokens = print(&p);
        let back = parse(&tokens).expect("printed programs parse");
        assert_eq!(back, p);
    }
}

#[test]
fn mask_soundness_true_next_token_always_allowed() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..2_000 {
        let p = random_program(&mut rng);
        let tokens = print(&p);
        let mut state = MaskState::new();
        for &t in &tokens {
            assert!(
                state.allowed().contains(&t),
                "mask rejected {t} in {}",
                print_text(&p)
            );
            state.advance(t).unwrap();
        }
        assert!(state.is_complete());
        assert_eq!(state.allowed(), vec![Token::Eos]);
    }
}

#[test]
fn mask_completeness_every_allowed_token_extends_to_a_program() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..1_000 {
        let p = random_program(&mut rng);
        let tokens = print(&p);
        let cut = rng.gen_range(0..tokens.len());
        let prefix = &tokens[..cut];
        for &t in next_token_mask(prefix).unwrap().iter() {
            if t == Token::Eos {
                assert!(parse(prefix).is_ok(), "EOS allowed only after a full program");
                continue;
            }
            // Bounded search: greedily chase the cheapest completion and
            // check the result with the parser, which is independent of the
            // mask machinery.
            let mut seq: Vec<Token> = prefix.to_vec();
            seq.push(t);
            let mut state = MaskState::new();
            for &x in &seq {
                state.advance(x).unwrap();
            }
            let mut guard = 0;
            while !state.is_complete() {
                let next = state
                    .allowed()
                    .into_iter()
                    .filter(|&x| x != Token::Eos)
                    .min_by_key(|&x| {
                        let mut s = state.clone();
                        s.advance(x).unwrap();
                        s.min_tokens_to_complete()
                    })
                    .expect("non-complete state offers a continuation");
                state.advance(next).unwrap();
                seq.push(next);
                guard += 1;
                assert!(guard <= 70, "completion did not terminate");
            }
            assert!(parse(&seq).is_ok(), "completion must parse: {seq:?}");
        }
    }
}

#[test]
fn oracle_agrees_with_interpreter() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut successes = 0usize;
    for _ in 0..1_000 {
        let p = random_program(&mut rng);
        let text = print_text(&p);
        for _ in 0..20 {
            let input = random_input(&mut rng);
            let ours = execute(&p, &input);
            let naive = naive_run(&text, &input);
            match (ours, naive) {
                (Ok(a), Ok(b)) => {
                    assert_eq!(a, b, "outputs differ on {text} / {input:?}");
                    successes += 1;
                }
                (Err(_), Err(_)) => {}
                (a, b) => panic!("disagreement on {text} / {input:?}: {a:?} vs {b:?}"),
            }
        }
    }
    // Uniform sampling errors a lot; make sure the agreement isn't vacuous.
    assert!(successes > 2_000, "only {successes} successful pairs");
}

#[test]
fn execute_concat_equals_sub_execution() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..2_000 {
        let a = random_program(&mut rng);
        let b = random_program(&mut rng);
        let c = Program::compose([&a, &b]);
        let input = random_input(&mut rng);
        if let (Ok(oa), Ok(ob)) = (execute(&a, &input), execute(&b, &input)) {
            assert_eq!(execute(&c, &input).unwrap(), format!("{oa}{ob}"));
        }
    }
}

#[test]
fn tokenizer_rejects_unknown_words() {
    assert!(tokenize("Concat c( Bogus c)").is_err());
}
