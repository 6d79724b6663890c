//! Reductions for lists of finite-order elements and the exhaustive
//! fallbacks used on them.

use super::{verify_witness, CentraliserResult, ListOutcome};
use crate::context::{GroupContext, Profile, PAPER_RADIUS_BUDGET};
use crate::error::{arg, Error, Result};
use crate::straightness::{long_enough, test_inf_order, OrderClass};
use crate::words::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shortening {
    /// `c` with `|c⁻¹·aᵢ⋯a_m·c|_G ≤ 3^{m−i}(7L + δ + ½)` for every `i`.
    Shortened(Word),
    /// `a_j⋯a_k` has infinite order (1-based, `j ≤ k`).
    InfiniteWitness { j: usize, k: usize },
}

/// `(a₁⋯a_n, a₂⋯a_n, …, a_n)`, unreduced.
pub fn prefix_products(a: &[Word], n: usize) -> Result<Vec<Word>> {
    if n < 1 || n > a.len() {
        return arg(format!("n = {n} out of range 1..={}", a.len()));
    }
    let mut out = vec![Word::empty(); n];
    let mut acc = Word::empty();
    for i in (0..n).rev() {
        acc = a[i].then(&acc);
        out[i] = acc.clone();
    }
    Ok(out)
}

/// Deletes entries until the products `a_i⋯a_j` with `i ≤ j ≤ n` are all
/// nontrivial. `None` means the lists are not conjugate.
pub fn ensure_distinct(
    ctx: &GroupContext,
    a: &[Word],
    b: &[Word],
    n: usize,
) -> Result<Option<(Vec<Word>, Vec<Word>)>> {
    if a.len() != b.len() {
        return arg("lists differ in length");
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    'restart: loop {
        for j in 0..n.min(a.len()) {
            let (mut pa, mut pb) = (Word::empty(), Word::empty());
            for i in (0..=j).rev() {
                pa = ctx.reduce_concat(&[&a[i], &pa]);
                pb = ctx.reduce_concat(&[&b[i], &pb]);
                match (pa.is_empty(), pb.is_empty()) {
                    (true, true) => {
                        a.remove(j);
                        b.remove(j);
                        continue 'restart;
                    }
                    (false, false) => {}
                    _ => return Ok(None),
                }
            }
        }
        return Ok(Some((a, b)));
    }
}

/// Conjugates the list so that its suffix products become short, or finds
/// a contiguous product of infinite order.
pub fn shorten_words(ctx: &GroupContext, a: &[Word]) -> Result<Shortening> {
    let mut c = Word::empty();
    for k in 0..a.len() {
        let c_inv = ctx.invert(&c);
        let mut products = vec![Word::empty(); k + 1];
        let mut acc = Word::empty();
        for j in (0..=k).rev() {
            acc = ctx.reduce_concat(&[&a[j], &acc]);
            products[j] = acc.clone();
        }
        for (j, prod) in products.iter().enumerate() {
            let conj = ctx.reduce_concat(&[&c_inv, prod, &c]);
            if long_enough(ctx, &conj) {
                return Ok(Shortening::InfiniteWitness { j: j + 1, k: k + 1 });
            }
        }
        let d = ctx.reduce_concat(&[&c_inv, &a[k], &c]);
        c = ctx.reduce_concat(&[&c, &d.left_half()]);
    }
    check_shorten_bound(ctx, a, &c)?;
    Ok(Shortening::Shortened(c))
}

/// Checks `2·|c⁻¹aᵢ⋯a_m c|_G ≤ 3^{m−i}(14L + 2δ + 1)` for every `i`.
pub fn check_shorten_bound(ctx: &GroupContext, a: &[Word], c: &Word) -> Result<()> {
    let m = a.len();
    if m == 0 {
        return Ok(());
    }
    let k = ctx.constants();
    let base = 14 * k.l as u128 + 2 * k.delta as u128 + 1;
    let c_inv = ctx.invert(c);
    for (i, prod) in prefix_products(a, m)?.iter().enumerate() {
        let len = ctx.reduce_concat(&[&c_inv, prod, c]).len() as u128;
        let bound = 3u128
            .checked_pow((m - 1 - i) as u32)
            .and_then(|p| p.checked_mul(base))
            .unwrap_or(u128::MAX);
        if 2 * len > bound {
            return Err(Error::Inconsistency(format!(
                "shortened product {} has length {len}, above the bound for i = {}",
                i + 1,
                i + 1
            )));
        }
    }
    Ok(())
}

pub(crate) fn max_len(lists: &[&[Word]]) -> usize {
    lists
        .iter()
        .flat_map(|l| l.iter())
        .map(Word::len)
        .max()
        .unwrap_or(0)
}

/// Radius actually searched: the cap, or the theoretical bound if smaller.
/// The paper profile refuses radii above its budget.
fn search_radius(ctx: &GroupContext, cap: u128, bound: u128, what: &str) -> Result<usize> {
    let radius = cap.min(bound);
    if ctx.profile() == Profile::Paper && radius > PAPER_RADIUS_BUDGET {
        return Err(Error::Config(format!(
            "paper profile: {what} needs an exhaustive search of radius {radius}, above the budget of {PAPER_RADIUS_BUDGET}"
        )));
    }
    usize::try_from(radius).map_err(|_| Error::Resource(format!("radius {radius} is too large")))
}

fn show_bound(bound: u128) -> String {
    if bound == u128::MAX {
        "at least 2^128".into()
    } else {
        bound.to_string()
    }
}

fn orders_match(ctx: &GroupContext, a: &[Word], b: &[Word]) -> Result<bool> {
    for (x, y) in a.iter().zip(b) {
        let same = match (test_inf_order(ctx, x)?, test_inf_order(ctx, y)?) {
            (OrderClass::Finite(p), OrderClass::Finite(q)) => p == q,
            (OrderClass::Infinite(_), OrderClass::Infinite(_)) => true,
            _ => false,
        };
        if !same {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive conjugator search over group elements by increasing length.
pub fn test_conjugacy_exp(
    ctx: &GroupContext,
    a: &[Word],
    b: &[Word],
    radius_cap: u128,
) -> Result<ListOutcome> {
    if a.len() != b.len() {
        return arg("lists differ in length");
    }
    if !orders_match(ctx, a, b)? {
        return Ok(ListOutcome::NotConjugate);
    }
    let bound = ctx.constants().conjugator_search_bound(max_len(&[a, b]));
    let radius = search_radius(ctx, radius_cap, bound, "the conjugator search")?;
    let b_red: Vec<Word> = b.iter().map(|w| ctx.reduce(w)).collect();
    for g in ctx.ball(radius)?.iter() {
        if ctx.conjugates_list(a, &b_red, g) {
            verify_witness(ctx, a, &b_red, g)?;
            return Ok(ListOutcome::Conjugate(g.clone()));
        }
    }
    if radius as u128 >= bound {
        Ok(ListOutcome::NotConjugate)
    } else {
        Ok(ListOutcome::UnverifiedAtCap(format!(
            "no conjugator of length <= {radius}; the theoretical bound is {}",
            show_bound(bound)
        )))
    }
}

fn centralising_ball(ctx: &GroupContext, a: &[Word], radius: usize) -> Result<Vec<Word>> {
    let a_red: Vec<Word> = a.iter().map(|w| ctx.reduce(w)).collect();
    Ok(ctx
        .ball(radius)?
        .iter()
        .filter(|g| ctx.conjugates_list(a, &a_red, g))
        .cloned()
        .collect())
}

fn finite_distinct(ctx: &GroupContext, a: &[Word]) -> Result<bool> {
    let mut seen = std::collections::HashSet::new();
    for w in a {
        if !seen.insert(ctx.reduce(w)) || test_inf_order(ctx, w)?.is_infinite() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every `g` with `|g|_G ≤ min(cap, R(μ + 2δ))` centralising `A`. Complete
/// when the whole radius was searched and `A` has more than `V⁴` distinct
/// finite-order entries, in which case the centraliser is finite and was
/// found in full.
pub fn find_centraliser_exp(
    ctx: &GroupContext,
    a: &[Word],
    radius_cap: u128,
) -> Result<CentraliserResult> {
    let bound = ctx.constants().centraliser_search_bound(max_len(&[a]));
    let radius = search_radius(ctx, radius_cap, bound, "the centraliser search")?;
    let generators = centralising_ball(ctx, a, radius)?;
    let complete = radius as u128 >= bound
        && a.len() as u128 > ctx.constants().v4()
        && finite_distinct(ctx, a)?;
    Ok(CentraliserResult {
        generators,
        complete,
    })
}

/// All centralising elements up to the cap, as a generating set. Only
/// reported complete under the conditions of [`find_centraliser_exp`].
pub fn bounded_centraliser_generators(
    ctx: &GroupContext,
    a: &[Word],
    radius_cap: u128,
) -> Result<CentraliserResult> {
    find_centraliser_exp(ctx, a, radius_cap)
}
