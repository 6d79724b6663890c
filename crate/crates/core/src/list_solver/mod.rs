//! Conjugacy and centralisers of finite lists.
//!
//! [`solve_lists`] and [`centraliser_lists`] reduce the input, drop
//! redundant entries, and then either find an infinite-order element to
//! anchor the search ([`infinite`]) or conjugate the whole list into a short
//! one and search exhaustively ([`finite`]).

pub mod finite;
pub mod infinite;

use serde::Serialize;

pub use finite::{
    bounded_centraliser_generators, check_shorten_bound, ensure_distinct, find_centraliser_exp,
    prefix_products, shorten_words, test_conjugacy_exp, Shortening,
};
pub use infinite::{
    centraliser_infinite_case, crt_combine, solve_infinite_case, ProgressionEntry,
    ProgressionFamily,
};

use crate::context::{Caps, GroupContext};
use crate::error::{arg, Error, Result};
use crate::straightness::{test_inf_order, OrderClass};
use crate::words::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ListOutcome {
    /// `witness⁻¹·aᵢ·witness = bᵢ` for every `i`; the witness is reduced.
    Conjugate(Word),
    NotConjugate,
    /// No verdict within the configured caps.
    UnverifiedAtCap(String),
}

impl ListOutcome {
    pub fn tag(&self) -> &'static str {
        match self {
            ListOutcome::Conjugate(_) => "conjugate",
            ListOutcome::NotConjugate => "not_conjugate",
            ListOutcome::UnverifiedAtCap(_) => "unverified_at_cap",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentraliserResult {
    /// Every generator centralises the list.
    pub generators: Vec<Word>,
    pub complete: bool,
}

/// Which branch of the orchestration produced the answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "route", rename_all = "snake_case")]
pub enum Route {
    /// Every entry was removed as redundant; the lists are trivially
    /// conjugate.
    Empty,
    /// A partial product is trivial on one side only.
    TrivialProductMismatch,
    /// `a_j⋯a_k` has infinite order on one side and finite on the other.
    OrderMismatch { j: usize, k: usize },
    /// Anchored on the infinite-order product `a_j⋯a_k`, found by
    /// `source` ("shorten_words" or "suffix_order").
    Infinite {
        j: usize,
        k: usize,
        source: &'static str,
    },
    /// All suffix products have finite order. `m` is the list length after
    /// redundant entries were dropped and `n` the length of the shortened
    /// prefix.
    Finite { m: usize, n: usize },
    /// A practical cap stopped the pipeline before a verdict.
    CapReached,
}

/// A verdict together with how it was reached.
#[derive(Clone, Debug)]
pub struct ListReport {
    pub outcome: ListOutcome,
    pub route: Route,
    /// Definitional checks performed on the result before returning.
    pub checks: Vec<&'static str>,
    pub caps: Caps,
}

#[derive(Clone, Debug)]
pub struct CentraliserReport {
    pub result: CentraliserResult,
    pub route: Route,
    pub checks: Vec<&'static str>,
    pub caps: Caps,
}

/// Fails unless `g` conjugates every `aᵢ` to the reduced `bᵢ`.
pub(crate) fn verify_witness(
    ctx: &GroupContext,
    a: &[Word],
    b_reduced: &[Word],
    g: &Word,
) -> Result<()> {
    if ctx.conjugates_list(a, b_reduced, g) {
        Ok(())
    } else {
        Err(Error::Inconsistency(format!(
            "{} does not conjugate the lists",
            ctx.format(g)
        )))
    }
}

enum Prepared {
    Decided(ListOutcome, Route),
    Infinite {
        a: Vec<Word>,
        b: Vec<Word>,
        route: Route,
    },
    Finite {
        a: Vec<Word>,
        b: Vec<Word>,
        n: usize,
        c_a: Word,
        c_b: Word,
    },
}

fn product(ctx: &GroupContext, a: &[Word], j: usize, k: usize) -> Word {
    ctx.reduce(&Word::concat(&a[j - 1..k].iter().collect::<Vec<_>>()))
}

fn prepend(w: Word, list: &[Word]) -> Vec<Word> {
    let mut out = Vec::with_capacity(list.len() + 1);
    out.push(w);
    out.extend_from_slice(list);
    out
}

/// Everything up to the split into the infinite and finite branches.
fn prepare(ctx: &GroupContext, a: &[Word], b: &[Word]) -> Result<Prepared> {
    if a.len() != b.len() {
        return arg(format!("lists have lengths {} and {}", a.len(), b.len()));
    }
    let a: Vec<Word> = a.iter().map(|w| ctx.reduce(w)).collect();
    let b: Vec<Word> = b.iter().map(|w| ctx.reduce(w)).collect();
    let n = ctx.constants().distinct_prefix_count(a.len());
    let Some((a, b)) = ensure_distinct(ctx, &a, &b, n)? else {
        return Ok(Prepared::Decided(
            ListOutcome::NotConjugate,
            Route::TrivialProductMismatch,
        ));
    };
    if a.is_empty() {
        return Ok(Prepared::Decided(
            ListOutcome::Conjugate(Word::empty()),
            Route::Empty,
        ));
    }
    let n = ctx.constants().distinct_prefix_count(a.len());
    let (a_head, b_head) = (&a[..n], &b[..n]);

    let mut shortened = [Word::empty(), Word::empty()];
    for (side, (this, other)) in [(a_head, b_head), (b_head, a_head)].into_iter().enumerate() {
        match shorten_words(ctx, this)? {
            Shortening::Shortened(c) => shortened[side] = c,
            Shortening::InfiniteWitness { j, k } => {
                let o = product(ctx, other, j, k);
                if !test_inf_order(ctx, &o)?.is_infinite() {
                    return Ok(Prepared::Decided(
                        ListOutcome::NotConjugate,
                        Route::OrderMismatch { j, k },
                    ));
                }
                let t = product(ctx, this, j, k);
                let (pa, pb) = if side == 0 { (t, o) } else { (o, t) };
                return Ok(Prepared::Infinite {
                    a: prepend(pa, &a),
                    b: prepend(pb, &b),
                    route: Route::Infinite {
                        j,
                        k,
                        source: "shorten_words",
                    },
                });
            }
        }
    }
    for i in 1..=n {
        let pa = product(ctx, a_head, i, n);
        let pb = product(ctx, b_head, i, n);
        let ia = test_inf_order(ctx, &pa)?.is_infinite();
        let ib = test_inf_order(ctx, &pb)?.is_infinite();
        match (ia, ib) {
            (true, true) => {
                return Ok(Prepared::Infinite {
                    a: prepend(pa, &a),
                    b: prepend(pb, &b),
                    route: Route::Infinite {
                        j: i,
                        k: n,
                        source: "suffix_order",
                    },
                })
            }
            (false, false) => {}
            _ => {
                return Ok(Prepared::Decided(
                    ListOutcome::NotConjugate,
                    Route::OrderMismatch { j: i, k: n },
                ))
            }
        }
    }
    let [c_a, c_b] = shortened;
    Ok(Prepared::Finite { a, b, n, c_a, c_b })
}

/// `aᵢ' = π((aᵢ⋯a_n)^c)` for `i ≤ n`.
fn short_list(ctx: &GroupContext, a: &[Word], n: usize, c: &Word) -> Result<Vec<Word>> {
    Ok(prefix_products(a, n)?
        .iter()
        .map(|p| ctx.conjugate(p, c))
        .collect())
}

/// Decides whether some `g` has `g⁻¹aᵢg = bᵢ` for all `i`.
pub fn solve_lists(ctx: &GroupContext, a: &[Word], b: &[Word]) -> Result<ListOutcome> {
    solve_lists_report(ctx, a, b).map(|r| r.outcome)
}

/// [`solve_lists`] with the route taken and the checks performed.
/// A practical cap hit inside the pipeline is reported as
/// [`ListOutcome::UnverifiedAtCap`].
pub fn solve_lists_report(ctx: &GroupContext, a: &[Word], b: &[Word]) -> Result<ListReport> {
    let mut checks = Vec::new();
    let (outcome, route) = match solve_inner(ctx, a, b, &mut checks) {
        Ok(x) => x,
        Err(Error::CapReached(msg)) => (ListOutcome::UnverifiedAtCap(msg), Route::CapReached),
        Err(e) => return Err(e),
    };
    if let ListOutcome::Conjugate(g) = &outcome {
        let b_red: Vec<Word> = b.iter().map(|w| ctx.reduce(w)).collect();
        verify_witness(ctx, a, &b_red, g)?;
        checks.push("witness conjugates every entry");
    }
    Ok(ListReport {
        outcome,
        route,
        checks,
        caps: *ctx.caps(),
    })
}

fn solve_inner(
    ctx: &GroupContext,
    a: &[Word],
    b: &[Word],
    checks: &mut Vec<&'static str>,
) -> Result<(ListOutcome, Route)> {
    match prepare(ctx, a, b)? {
        Prepared::Decided(o, r) => Ok((o, r)),
        Prepared::Infinite { a, b, route } => {
            checks.push("|S| <= V");
            let outcome = match infinite::progression_family(ctx, &a, &b, true)? {
                Some(f) => ListOutcome::Conjugate(f.element(ctx, &f.entries[0], 0)?),
                None => ListOutcome::NotConjugate,
            };
            Ok((outcome, route))
        }
        Prepared::Finite { a, b, n, c_a, c_b } => {
            checks.push("shorten_words length bound");
            let route = Route::Finite { m: a.len(), n };
            let sa = short_list(ctx, &a, n, &c_a)?;
            let sb = short_list(ctx, &b, n, &c_b)?;
            let caps = *ctx.caps();
            let u = match test_conjugacy_exp(ctx, &sa, &sb, caps.conjugator_radius)? {
                ListOutcome::Conjugate(u) => u,
                other => return Ok((other, route)),
            };
            let c_b_inv = ctx.invert(&c_b);
            let b_red: Vec<Word> = b.iter().map(|w| ctx.reduce(w)).collect();
            if a.len() == n {
                let g = ctx.reduce_concat(&[&c_a, &u, &c_b_inv]);
                return Ok((ListOutcome::Conjugate(g), route));
            }
            let cent = find_centraliser_exp(ctx, &sa, caps.centraliser_radius)?;
            for w in &cent.generators {
                let g = ctx.reduce_concat(&[&c_a, w, &u, &c_b_inv]);
                if ctx.conjugates_list(&a, &b_red, &g) {
                    return Ok((ListOutcome::Conjugate(g), route));
                }
            }
            let outcome = if cent.complete {
                ListOutcome::NotConjugate
            } else {
                ListOutcome::UnverifiedAtCap(format!(
                    "centraliser search of radius {} did not complete",
                    caps.centraliser_radius
                ))
            };
            Ok((outcome, route))
        }
    }
}

/// Generating set for `C_G(A)`.
pub fn centraliser_lists(ctx: &GroupContext, a: &[Word]) -> Result<CentraliserResult> {
    centraliser_lists_report(ctx, a).map(|r| r.result)
}

pub fn centraliser_lists_report(ctx: &GroupContext, a: &[Word]) -> Result<CentraliserReport> {
    let caps = *ctx.caps();
    let mut checks = vec!["every generator centralises every entry"];
    let (result, route) = match prepare(ctx, a, a)? {
        Prepared::Decided(ListOutcome::Conjugate(_), route) => {
            let generators = (0..ctx.alphabet().len())
                .map(|i| Word(vec![crate::words::Letter(i as u8)]))
                .filter(|w| ctx.reduce(w) == *w)
                .collect();
            (
                CentraliserResult {
                    generators,
                    complete: true,
                },
                route,
            )
        }
        Prepared::Decided(other, _) => {
            return Err(Error::Inconsistency(format!(
                "a list was found not conjugate to itself ({})",
                other.tag()
            )))
        }
        Prepared::Infinite { a: full, route, .. } => {
            checks.push("|S| <= V");
            checks.push("nonzero periods agree");
            (centraliser_infinite_case(ctx, &full)?, route)
        }
        Prepared::Finite {
            a: full, n, c_a, ..
        } => {
            checks.push("shorten_words length bound");
            let route = Route::Finite { m: full.len(), n };
            let sa = short_list(ctx, &full, n, &c_a)?;
            let c_a_inv = ctx.invert(&c_a);
            let cent = if full.len() == n {
                bounded_centraliser_generators(ctx, &sa, caps.centraliser_radius)?
            } else {
                find_centraliser_exp(ctx, &sa, caps.centraliser_radius)?
            };
            let full_red: Vec<Word> = full.iter().map(|w| ctx.reduce(w)).collect();
            let mut generators: Vec<Word> = cent
                .generators
                .iter()
                .map(|w| ctx.reduce_concat(&[&c_a, w, &c_a_inv]))
                .filter(|g| ctx.conjugates_list(&full, &full_red, g))
                .collect();
            generators.sort();
            generators.dedup();
            (
                CentraliserResult {
                    generators,
                    complete: cent.complete,
                },
                route,
            )
        }
    };
    let a_red: Vec<Word> = a.iter().map(|w| ctx.reduce(w)).collect();
    for g in &result.generators {
        verify_witness(ctx, a, &a_red, g)?;
    }
    Ok(CentraliserReport {
        result,
        route,
        checks,
        caps,
    })
}

/// Order of every entry, for diagnostics.
pub fn entry_orders(ctx: &GroupContext, a: &[Word]) -> Result<Vec<OrderClass>> {
    a.iter().map(|w| test_inf_order(ctx, w)).collect()
}
