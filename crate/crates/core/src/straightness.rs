//! Shortlex straightness, infinite-order testing and straightening powers.
//!
//! The "2L-criterion" for a reduced word `w` and exponent `n` is
//! `|π(π((w_C)ⁿ)_C)| > 2L`. When it holds, `w` has infinite order.

use serde::Serialize;

use crate::context::{GroupContext, Profile};
use crate::error::{arg, Error, Result};
use crate::words::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum OrderClass {
    Finite(u64),
    /// The exponent at which the 2L-criterion was observed.
    Infinite(u128),
}

impl OrderClass {
    pub fn is_infinite(&self) -> bool {
        matches!(self, OrderClass::Infinite(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraighteningResult {
    pub k: u64,
    pub a: Word,
    pub z: Word,
}

/// Whether the 2L-criterion holds for an already computed `π((w_C)ⁿ)`.
pub(crate) fn long_enough(ctx: &GroupContext, power: &Word) -> bool {
    ctx.geodesic_length(&power.half_cyclic()) > 2 * ctx.constants().l as usize
}

pub(crate) fn cap_error(ctx: &GroupContext, what: String) -> Error {
    match ctx.profile() {
        Profile::Practical => Error::CapReached(what),
        Profile::Paper => Error::Inconsistency(what),
    }
}

/// Bounded-power straightness test: `π(u^P) = u^P` for the configured `P`.
/// Since subwords of shortlex reduced words are shortlex reduced this
/// covers every power up to `P`.
pub fn is_shortlex_straight(ctx: &GroupContext, u: &Word) -> Result<bool> {
    if u.is_empty() {
        return arg("straightness test needs a nonempty word");
    }
    if ctx.reduce(u) != *u {
        return arg(format!("{} is not shortlex reduced", ctx.format(u)));
    }
    let p = ctx.caps().straight_check_power.max(2);
    let up = u.repeat(p);
    Ok(ctx.reduce(&up) == up)
}

/// Decides whether `w` has finite order.
///
/// Powers of `π(w_C)` (conjugate to `w`) are scanned one at a time up to
/// the torsion order bound, looking for the identity; at exponents
/// `1, 2, 4, ...` the 2L-criterion is checked as a positive certificate of
/// infinite order. Past the torsion bound only the criterion is evaluated.
pub fn test_inf_order(ctx: &GroupContext, w: &Word) -> Result<OrderClass> {
    let w = ctx.reduce(w);
    if w.is_empty() {
        return Ok(OrderClass::Finite(1));
    }
    let wc = ctx.reduce(&w.half_cyclic());
    let bound = ctx.constants().torsion_order_bound;
    let mut power = Word::empty();
    let mut next_check: u128 = 1;
    for n in 1..=bound {
        power = ctx.reduce_concat(&[&power, &wc]);
        if power.is_empty() {
            return Ok(OrderClass::Finite(n));
        }
        if n as u128 == next_check {
            if long_enough(ctx, &power) {
                return Ok(OrderClass::Infinite(next_check));
            }
            next_check *= 2;
        }
    }
    let cap = ctx.caps().power_cap.max(next_check);
    while next_check <= cap {
        let p = ctx.reduce(&wc.repeat(next_check as usize));
        if long_enough(ctx, &p) {
            return Ok(OrderClass::Infinite(next_check));
        }
        next_check *= 2;
    }
    Err(cap_error(
        ctx,
        format!(
            "{} has no torsion up to {bound} but the 2L-criterion failed up to exponent {cap}",
            ctx.format(&w)
        ),
    ))
}

/// Finds the least `k ≤ V⁴` and then shortlex-least `a` with `|a| ≤ 4δ`
/// such that `π(a⁻¹uᵏa)` is shortlex straight.
pub fn straighten_power(ctx: &GroupContext, u: &Word) -> Result<StraighteningResult> {
    let l = ctx.constants().l as usize;
    if u.len() <= l {
        return arg(format!(
            "straighten_power needs |u| > L = {l}, got {}",
            u.len()
        ));
    }
    if ctx.reduce(u) != *u {
        return arg("straighten_power needs a shortlex reduced word");
    }
    let ball = ctx.ball(4 * ctx.delta() as usize)?;
    let max_k = u64::try_from(ctx.constants().v4()).unwrap_or(u64::MAX);
    let mut uk = Word::empty();
    for k in 1..=max_k {
        uk = uk.then(u);
        for a in ball.iter() {
            let z = ctx.conjugate(&uk, a);
            if !z.is_empty() && is_shortlex_straight(ctx, &z)? {
                return Ok(StraighteningResult { k, a: a.clone(), z });
            }
        }
    }
    Err(Error::Inconsistency(format!(
        "no straight conjugate of a power of {} with k <= V^4",
        ctx.format(u)
    )))
}

/// Least `n` in `L, 2L, 4L, ...` at which both inputs meet the
/// 2L-criterion; returns `(n, π((u_C)ⁿ), π((v_C)ⁿ))`.
pub fn common_long_power(ctx: &GroupContext, u: &Word, v: &Word) -> Result<(u128, Word, Word)> {
    for w in [u, v] {
        if !test_inf_order(ctx, w)?.is_infinite() {
            return arg(format!("{} has finite order", ctx.format(w)));
        }
    }
    let l = ctx.constants().l as u128;
    let cap = ctx.caps().power_cap;
    let uc = ctx.reduce(&ctx.reduce(u).half_cyclic());
    let vc = ctx.reduce(&ctx.reduce(v).half_cyclic());
    let mut n = l;
    let mut up = ctx.reduce(&uc.repeat(l as usize));
    let mut vp = ctx.reduce(&vc.repeat(l as usize));
    while n <= cap {
        if long_enough(ctx, &up) && long_enough(ctx, &vp) {
            return Ok((n, up, vp));
        }
        n *= 2;
        up = ctx.reduce_concat(&[&up, &up]);
        vp = ctx.reduce_concat(&[&vp, &vp]);
    }
    Err(cap_error(
        ctx,
        format!("2L-criterion not reached below exponent cap {cap}"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> GroupContext {
        GroupContext::free(2, 1).unwrap()
    }

    fn z2z3() -> GroupContext {
        GroupContext::free_product(&[2, 3], &['x', 'y'], 1).unwrap()
    }

    fn w(ctx: &GroupContext, s: &str) -> Word {
        ctx.parse(s).unwrap()
    }

    #[test]
    fn straightness_examples() {
        let g = f2();
        assert!(is_shortlex_straight(&g, &w(&g, "ab")).unwrap());
        assert!(!is_shortlex_straight(&g, &w(&g, "Aba")).unwrap());
        let h = z2z3();
        assert!(is_shortlex_straight(&h, &w(&h, "xy")).unwrap());
        // oracle for the example above: powers up to 4 stay reduced
        for k in 1..=4 {
            let p = w(&h, "xy").repeat(k);
            assert_eq!(h.reduce(&p), p);
        }
        assert!(!is_shortlex_straight(&h, &w(&h, "y")).unwrap());
        assert!(is_shortlex_straight(&g, &Word::empty()).is_err());
        assert!(is_shortlex_straight(&g, &w(&g, "aA")).is_err());
    }

    #[test]
    fn order_examples() {
        let h = z2z3();
        assert_eq!(
            test_inf_order(&h, &w(&h, "x")).unwrap(),
            OrderClass::Finite(2)
        );
        assert_eq!(
            test_inf_order(&h, &w(&h, "Y")).unwrap(),
            OrderClass::Finite(3)
        );
        assert_eq!(
            test_inf_order(&h, &w(&h, "yxY")).unwrap(),
            OrderClass::Finite(2)
        );
        assert!(test_inf_order(&h, &w(&h, "xy")).unwrap().is_infinite());
        let g = f2();
        assert_eq!(
            test_inf_order(&g, &Word::empty()).unwrap(),
            OrderClass::Finite(1)
        );
        // |(ba)^n| = 2n first exceeds 72 at n = 64 on the doubling schedule
        assert_eq!(
            test_inf_order(&g, &w(&g, "ab")).unwrap(),
            OrderClass::Infinite(64)
        );
    }

    #[test]
    fn straighten_examples() {
        let g = f2();
        let u = g.reduce(&w(&g, "ab").repeat(40));
        let r = straighten_power(&g, &u).unwrap();
        assert_eq!((r.k, r.a.clone(), r.z.clone()), (1, Word::empty(), u));
        let u = g.reduce(&w(&g, "aab").repeat(30));
        let r = straighten_power(&g, &u).unwrap();
        assert_eq!((r.k, r.a.is_empty()), (1, true));
        assert!(is_shortlex_straight(&g, &r.z).unwrap());
        assert!(straighten_power(&g, &w(&g, "ab")).is_err());
    }

    #[test]
    fn straighten_conjugated_power() {
        // B (ab)^20 b is not straight; a conjugate by a short word is
        let g = f2();
        let u = g.reduce(&w(&g, "B").then(&w(&g, "ab").repeat(20)).then(&w(&g, "b")));
        assert!(!is_shortlex_straight(&g, &u).unwrap());
        let r = straighten_power(&g, &u).unwrap();
        assert!(r.k >= 1 && r.k as u128 <= g.constants().v4());
        assert!(r.a.len() <= 4);
        assert_eq!(r.z, g.conjugate(&u.repeat(r.k as usize), &r.a));
        assert!(is_shortlex_straight(&g, &r.z).unwrap());
    }

    #[test]
    fn common_long_power_examples() {
        let g = f2();
        let u = g.reduce(&w(&g, "ab").repeat(40));
        let (n, up, vp) = common_long_power(&g, &u, &u).unwrap();
        assert_eq!(n, 36);
        assert_eq!(up, vp);
        assert_eq!(up.len(), 80 * 36);
        let (n, up, vp) = common_long_power(&g, &w(&g, "ab"), &w(&g, "ba")).unwrap();
        assert_eq!(n, 72);
        assert_eq!((up.len(), vp.len()), (144, 144));
        let h = z2z3();
        assert!(matches!(
            common_long_power(&h, &w(&h, "x"), &w(&h, "xy")),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn practical_cap_is_reported() {
        let g = f2();
        let mut caps = *g.caps();
        caps.power_cap = 36;
        let capped = g.with_caps(caps);
        assert!(matches!(
            common_long_power(&capped, &w(&g, "ab"), &w(&g, "ba")),
            Err(Error::CapReached(_))
        ));
    }
}
