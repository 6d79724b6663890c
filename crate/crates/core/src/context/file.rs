//! Group definition files.
//!
//! Line-based `key value...` text; `#` starts a comment.
//!
//! ```text
//! group free            group free_product       group rws
//! rank 2                factors 2 3              delta 1
//! delta 1               names x y                letters x y Y
//!                       delta 1                  inverses x:x y:Y
//!                                                rule yy -> Y
//!                                                rule YY -> y
//! ```
//!
//! `delta` defaults to 1 for free groups and is required otherwise.
//! `names` defaults to `a b c ...`. A rule whose right-hand side is empty
//! or `1` rewrites to the empty word. Inverse-cancellation rules are
//! implied.

use super::{GroupContext, Rule};
use crate::error::{Error, Result};
use crate::words::Alphabet;

fn err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::File {
        line,
        message: message.into(),
    })
}

fn single_char(line: usize, tok: &str) -> Result<char> {
    let mut it = tok.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Ok(c),
        _ => err(
            line,
            format!("expected a single-letter symbol, got {tok:?}"),
        ),
    }
}

#[derive(Default)]
struct Fields {
    kind: Option<(usize, String)>,
    rank: Option<(usize, usize)>,
    delta: Option<(usize, u32)>,
    factors: Option<(usize, Vec<u32>)>,
    names: Option<(usize, Vec<char>)>,
    letters: Option<(usize, Vec<char>)>,
    inverses: Option<(usize, Vec<(char, char)>)>,
    rules: Vec<(usize, String, String)>,
}

pub fn parse_group(text: &str) -> Result<GroupContext> {
    let mut f = Fields::default();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let toks: Vec<&str> = rest.split_whitespace().collect();
        let dup = |present: bool| -> Result<()> {
            if present {
                err(ln, format!("duplicate key {key:?}"))
            } else {
                Ok(())
            }
        };
        match key {
            "group" => {
                dup(f.kind.is_some())?;
                if toks.len() != 1 {
                    return err(ln, "expected `group free|free_product|rws`");
                }
                f.kind = Some((ln, toks[0].to_string()));
            }
            "rank" => {
                dup(f.rank.is_some())?;
                let n = rest
                    .parse()
                    .or_else(|_| err(ln, format!("bad rank {rest:?}")))?;
                f.rank = Some((ln, n));
            }
            "delta" => {
                dup(f.delta.is_some())?;
                let d = rest
                    .parse()
                    .or_else(|_| err(ln, format!("bad delta {rest:?}")))?;
                f.delta = Some((ln, d));
            }
            "factors" => {
                dup(f.factors.is_some())?;
                let v = toks
                    .iter()
                    .map(|t| {
                        t.parse()
                            .or_else(|_| err(ln, format!("bad factor order {t:?}")))
                    })
                    .collect::<Result<Vec<u32>>>()?;
                f.factors = Some((ln, v));
            }
            "names" => {
                dup(f.names.is_some())?;
                let v = toks
                    .iter()
                    .map(|t| single_char(ln, t))
                    .collect::<Result<Vec<_>>>()?;
                f.names = Some((ln, v));
            }
            "letters" => {
                dup(f.letters.is_some())?;
                let v = toks
                    .iter()
                    .map(|t| single_char(ln, t))
                    .collect::<Result<Vec<_>>>()?;
                f.letters = Some((ln, v));
            }
            "inverses" => {
                dup(f.inverses.is_some())?;
                let v = toks
                    .iter()
                    .map(|t| {
                        let (a, b) = t
                            .split_once(':')
                            .map_or_else(|| err(ln, format!("expected x:X, got {t:?}")), Ok)?;
                        Ok((single_char(ln, a)?, single_char(ln, b)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                f.inverses = Some((ln, v));
            }
            "rule" => {
                let Some((lhs, rhs)) = rest.split_once("->") else {
                    return err(ln, "expected `rule LHS -> RHS`");
                };
                f.rules
                    .push((ln, lhs.trim().to_string(), rhs.trim().to_string()));
            }
            other => return err(ln, format!("unknown key {other:?}")),
        }
    }
    build(f)
}

fn build(f: Fields) -> Result<GroupContext> {
    let Some((kind_line, kind)) = f.kind else {
        return err(1, "missing `group` line");
    };
    let with_line = |line: usize| {
        move |e: Error| match e {
            Error::Config(message) => Error::File { line, message },
            other => other,
        }
    };
    let required_delta = || match f.delta {
        Some((_, d)) => Ok(d),
        None => err(kind_line, format!("group {kind} needs a `delta` line")),
    };
    let delta_line = f.delta.map_or(kind_line, |(l, _)| l);
    match kind.as_str() {
        "free" => {
            let Some((rl, rank)) = f.rank else {
                return err(kind_line, "free group needs a `rank` line");
            };
            let delta = f.delta.map_or(1, |(_, d)| d);
            let alphabet = Alphabet::free(rank).map_err(with_line(rl))?;
            GroupContext::new(alphabet, super::Backend::FreeGroup { rank }, delta)
                .map_err(with_line(delta_line))
        }
        "free_product" => {
            let Some((fl, orders)) = f.factors else {
                return err(kind_line, "free product needs a `factors` line");
            };
            let names = match f.names {
                Some((_, n)) => n,
                None => (0..orders.len())
                    .map(|i| (b'a' + i as u8) as char)
                    .collect(),
            };
            let delta = required_delta()?;
            GroupContext::free_product(&orders, &names, delta).map_err(with_line(fl))
        }
        "rws" => {
            let Some((ll, letters)) = f.letters else {
                return err(kind_line, "rws needs a `letters` line");
            };
            let Some((il, pairs)) = f.inverses else {
                return err(kind_line, "rws needs an `inverses` line");
            };
            let delta = required_delta()?;
            let pos = |c: char, line: usize| {
                letters
                    .iter()
                    .position(|&x| x == c)
                    .map_or_else(|| err(line, format!("{c:?} is not a declared letter")), Ok)
            };
            let mut inverses = vec![usize::MAX; letters.len()];
            for &(a, b) in &pairs {
                let (i, j) = (pos(a, il)?, pos(b, il)?);
                inverses[i] = j;
                inverses[j] = i;
            }
            if let Some(i) = inverses.iter().position(|&j| j == usize::MAX) {
                return err(il, format!("no inverse given for {:?}", letters[i]));
            }
            let alphabet = Alphabet::new(letters, inverses).map_err(with_line(ll))?;
            let mut rules = Vec::with_capacity(f.rules.len());
            for (ln, lhs, rhs) in &f.rules {
                let side = |s: &str| {
                    if s == "1" {
                        Ok(crate::words::Word::empty())
                    } else {
                        alphabet.parse(s).or_else(|e| err(*ln, e.to_string()))
                    }
                };
                rules.push(Rule {
                    lhs: side(lhs)?,
                    rhs: side(rhs)?,
                });
            }
            let first_rule = f.rules.first().map_or(kind_line, |r| r.0);
            let rws =
                super::RewritingSystem::new(&alphabet, rules).map_err(with_line(first_rule))?;
            GroupContext::new(alphabet, super::Backend::RewritingSystem(rws), delta)
                .map_err(with_line(delta_line))
        }
        other => err(kind_line, format!("unknown group kind {other:?}")),
    }
}
