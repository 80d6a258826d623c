//! A second, deliberately naive interpreter used as a differential-testing
//! oracle. It consumes the whitespace token text directly and scans the
//! input string from scratch for every position lookup, sharing no code with
//! the main parser or executor.

/// Runs serialized program text on an input. Returns a plain error string
/// for any syntactic or semantic failure.
pub fn naive_run(program_text: &str, input: &str) -> Result<String, String> {
    let words: Vec<&str> = program_text.split_whitespace().collect();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0usize;
    let mut expect = |w: &mut usize, lit: &str| -> Result<(), String> {
        if words.get(*w) == Some(&lit) {
            *w += 1;
            Ok(())
        } else {
            Err(format!("expected {lit} at {w}", w = *w))
        }
    };
    expect(&mut i, "Concat")?;
    expect(&mut i, "c(")?;
    let mut out = String::new();
    let mut n_exprs = 0;
    loop {
        match words.get(i).copied() {
            Some("c)") => {
                i += 1;
                break;
            }
            Some("ConstStr") => {
                i += 1;
                expect(&mut i, "k(")?;
                let d = unquote(words.get(i).copied().ok_or("eof")?)?;
                i += 1;
                expect(&mut i, "k)")?;
                out.push(d);
                n_exprs += 1;
            }
            Some("SubStr") => {
                i += 1;
                expect(&mut i, "s(")?;
                let a = scan_position(&words, &mut i, &chars)?;
                let b = scan_position(&words, &mut i, &chars)?;
                expect(&mut i, "s)")?;
                if a > b {
                    return Err(format!("inverted {a}..{b}"));
                }
                for &c in &chars[a..b] {
                    out.push(c);
                }
                n_exprs += 1;
            }
            other => return Err(format!("unexpected {other:?} at {i}")),
        }
    }
    if i != words.len() {
        return Err(format!("trailing tokens at {i}"));
    }
    if n_exprs == 0 {
        return Err("empty concat".into());
    }
    Ok(out)
}

fn unquote(word: &str) -> Result<char, String> {
    let inner = word
        .strip_prefix('"')
        .and_then(|w| w.strip_suffix('"'))
        .ok_or_else(|| format!("bad delimiter {word}"))?;
    if inner == "SPACE" {
        return Ok(' ');
    }
    let mut cs = inner.chars();
    match (cs.next(), cs.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(format!("bad delimiter {word}")),
    }
}

fn scan_position(words: &[&str], i: &mut usize, chars: &[char]) -> Result<usize, String> {
    match words.get(*i).copied() {
        Some("ConstPos") => {
            *i += 1;
            if words.get(*i) != Some(&"p(") {
                return Err("expected p(".into());
            }
            *i += 1;
            let k: i64 = words
                .get(*i)
                .ok_or("eof")?
                .parse()
                .map_err(|_| "bad int".to_string())?;
            if !(-20..=20).contains(&k) {
                return Err("int out of range".into());
            }
            *i += 1;
            if words.get(*i) != Some(&"p)") {
                return Err("expected p)".into());
            }
            *i += 1;
            let n = chars.len() as i64;
            let idx = if k >= 0 { k } else { n + k + 1 };
            if idx < 0 || idx > n {
                return Err(format!("const pos {k} out of range"));
            }
            Ok(idx as usize)
        }
        Some("Regex") => {
            *i += 1;
            if words.get(*i) != Some(&"r(") {
                return Err("expected r(".into());
            }
            *i += 1;
            let kind = words.get(*i).copied().ok_or("eof")?.to_string();
            *i += 1;
            let n: i64 = words
                .get(*i)
                .ok_or("eof")?
                .parse()
                .map_err(|_| "bad int".to_string())?;
            if !(-3..=3).contains(&n) {
                return Err("regex index out of range".into());
            }
            *i += 1;
            let bound = words.get(*i).copied().ok_or("eof")?.to_string();
            if bound != "Start" && bound != "End" {
                return Err(format!("bad boundary {bound}"));
            }
            *i += 1;
            if words.get(*i) != Some(&"r)") {
                return Err("expected r)".into());
            }
            *i += 1;

            // Count matches by checking, at every index, whether a match
            // begins there, then extending it greedily.
            let mut spans: Vec<(usize, usize)> = Vec::new();
            for start in 0..chars.len() {
                if let Some(end) = match_at(&kind, chars, start)? {
                    if spans.last().map_or(true, |&(_, pe)| start >= pe) {
                        spans.push((start, end));
                    }
                }
            }
            let total = spans.len() as i64;
            let pick = if n >= 0 { n } else { total + n };
            if pick < 0 || pick >= total {
                return Err(format!("match {n} of {total} missing"));
            }
            let (s, e) = spans[pick as usize];
            Ok(if bound == "Start" { s } else { e })
        }
        other => Err(format!("unexpected position {other:?}")),
    }
}

/// If a match of `kind` begins exactly at `start`, returns its end.
fn match_at(kind: &str, chars: &[char], start: usize) -> Result<Option<usize>, String> {
    let upper = |c: char| c.is_ascii_uppercase();
    let lower = |c: char| c.is_ascii_lowercase();
    let digit = |c: char| c.is_ascii_digit();
    let letter = |c: char| c.is_ascii_alphabetic();
    let alnum = |c: char| c.is_ascii_alphanumeric();
    let run = |pred: &dyn Fn(char) -> bool| -> Option<usize> {
        if !pred(chars[start]) || (start > 0 && pred(chars[start - 1])) {
            return None;
        }
        let mut end = start + 1;
        while end < chars.len() && pred(chars[end]) {
            end += 1;
        }
        Some(end)
    };
    Ok(match kind {
        "Word" => run(&letter),
        "Num" => run(&digit),
        "Alphanum" => run(&alnum),
        "Allcaps" => run(&upper),
        "Lower" => run(&lower),
        "Digit" => digit(chars[start]).then_some(start + 1),
        "Char" => Some(start + 1),
        "Propcase" => {
            if upper(chars[start]) {
                let mut end = start + 1;
                while end < chars.len() && lower(chars[end]) {
                    end += 1;
                }
                Some(end)
            } else {
                None
            }
        }
        quoted => {
            let c = unquote(quoted)?;
            (chars[start] == c).then_some(start + 1)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_main_interpreter_on_anchor() {
        let text = r#"Concat c( SubStr s( ConstPos p( 0 p) ConstPos p( 1 p) s) ConstStr k( "!" k) c)"#;
        assert_eq!(naive_run(text, "John-01").unwrap(), "J!");
    }

    #[test]
    fn reports_errors() {
        let text = r#"Concat c( SubStr s( ConstPos p( 3 p) ConstPos p( 1 p) s) c)"#;
        assert!(naive_run(text, "abcdef").is_err());
    }

    #[test]
    fn propcase_spans() {
        let text = r#"Concat c( SubStr s( Regex r( Propcase 1 Start r) Regex r( Propcase 1 End r) s) c)"#;
        // "ABc": Propcase matches are "A" and "Bc"; second is [1,3).
        assert_eq!(naive_run(text, "ABc").unwrap(), "Bc");
    }
}
