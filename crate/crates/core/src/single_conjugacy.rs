//! Candidate conjugators for pairs of infinite-order elements.
//!
//! Every conjugator is covered by a [`ConjugatorFamily`]: it equals
//! `p·yⁿ·s` for some integer `n` and some `s ∈ S`. Conjugation is
//! `u^g = g⁻¹ug`.

use crate::context::GroupContext;
use crate::error::{arg, Error, Result};
use crate::straightness::{
    common_long_power, is_shortlex_straight, straighten_power, test_inf_order,
};
use crate::stringology::{cyclic_match, primitive_root};
use crate::words::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugatorFamily {
    pub p: Word,
    /// Shortlex straight and nonempty.
    pub y: Word,
    pub s: Vec<Word>,
}

impl ConjugatorFamily {
    /// `π(p·yⁿ·s)`.
    pub fn member(&self, ctx: &GroupContext, n: i64, s: &Word) -> Word {
        let yn = ctx.alphabet().power(&self.y, n);
        ctx.reduce_concat(&[&self.p, &yn, s])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Candidates {
    Family(ConjugatorFamily),
    NotConjugate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlsCentraliser {
    pub y: Word,
    pub l: usize,
    pub s: Vec<Word>,
}

fn bound_check(ctx: &GroupContext, what: &str, n: usize) -> Result<()> {
    let v = ctx.constants().v as usize;
    if n > v {
        return Err(Error::Inconsistency(format!(
            "|{what}| = {n} exceeds V = {v}"
        )));
    }
    Ok(())
}

/// Coset representatives for `C_G(z)` modulo `⟨y⟩`, where `y` is the
/// primitive root of the straight word `z`.
///
/// Candidates are `y₁·h` with `y₁` a prefix of `y` and `|h| ≤ 2δ`. For each
/// `h` the matching prefix is read off by locating `π(h·z·h⁻¹)` among the
/// rotations of `z`, so the whole scan is linear in `|z|`. Candidates that
/// differ by a power of `y` are merged, keeping the shortlex-least one.
pub fn sls_centraliser(ctx: &GroupContext, z: &Word) -> Result<SlsCentraliser> {
    if z.is_empty() {
        return arg("sls_centraliser needs a nonempty word");
    }
    if !is_shortlex_straight(ctx, z)? {
        return arg(format!("{} is not shortlex straight", ctx.format(z)));
    }
    let (y, l) = primitive_root(z)?;
    if !is_shortlex_straight(ctx, &y)? {
        return Err(Error::Inconsistency(format!(
            "primitive root {} of a straight word is not straight",
            ctx.format(&y)
        )));
    }
    let ball = ctx.ball(2 * ctx.delta() as usize)?;
    let mut found = Vec::new();
    for h in ball.iter() {
        let hz = ctx.reduce_concat(&[h, z, &ctx.invert(h)]);
        if let Some(k) = cyclic_match(&hz, z) {
            let g = ctx.reduce_concat(&[&y.prefix(k % y.len()), h]);
            debug_assert_eq!(ctx.conjugate(z, &g), *z);
            found.push(g);
        }
    }
    found.sort();
    found.dedup();
    let max_exp = 2 + (4 * ctx.delta() as usize).div_ceil(y.len()) as i64;
    let mut reps: Vec<Word> = Vec::new();
    for g in found {
        let same_coset = reps.iter().any(|r| {
            let q = ctx.reduce_concat(&[&g, &ctx.invert(r)]);
            (-max_exp..=max_exp).any(|i| ctx.power(&y, i) == q)
        });
        if !same_coset {
            reps.push(g);
        }
    }
    bound_check(ctx, "S'", reps.len())?;
    Ok(SlsCentraliser { y, l, s: reps })
}

/// Family for `u, v` whose half-cyclic conjugates are longer than `2L`.
pub fn eh_solve_conj(ctx: &GroupContext, u: &Word, v: &Word) -> Result<Candidates> {
    let two_l = 2 * ctx.constants().l as usize;
    for w in [u, v] {
        if ctx.reduce(w) != *w {
            return arg(format!("{} is not shortlex reduced", ctx.format(w)));
        }
        if ctx.geodesic_length(&w.half_cyclic()) <= two_l {
            return arg(format!("|{}_C| is at most 2L", ctx.format(w)));
        }
    }
    let uc = ctx.reduce(&u.half_cyclic());
    let vc = ctx.reduce(&v.half_cyclic());
    let st = straighten_power(ctx, &uc)?;
    let z = st.z;
    let vci = vc.repeat(st.k as usize);
    let ball = ctx.ball(6 * ctx.delta() as usize)?;
    let mut c = None;
    for b in ball.iter() {
        let t = ctx.conjugate(&vci, b);
        if let Some(k) = cyclic_match(&t, &z) {
            c = Some(ctx.reduce_concat(&[&z.prefix(k), &ctx.invert(b)]));
            break;
        }
    }
    let Some(c) = c else {
        return Ok(Candidates::NotConjugate);
    };
    let cent = sls_centraliser(ctx, &z)?;
    let p = ctx.reduce_concat(&[&u.left_half(), &st.a]);
    let vl_inv = ctx.invert(&v.left_half());
    let s: Vec<Word> = cent
        .s
        .iter()
        .map(|s1| ctx.reduce_concat(&[s1, &c, &vl_inv]))
        .collect();
    bound_check(ctx, "S", s.len())?;
    Ok(Candidates::Family(ConjugatorFamily { p, y: cent.y, s }))
}

/// Family covering every `g` with `u^g = v`, for `u, v` of infinite order.
pub fn conj_candidates(ctx: &GroupContext, u: &Word, v: &Word) -> Result<Candidates> {
    let u = ctx.reduce(u);
    let v = ctx.reduce(v);
    for w in [&u, &v] {
        if !test_inf_order(ctx, w)?.is_infinite() {
            return arg(format!("{} has finite order", ctx.format(w)));
        }
    }
    let (_, up, vp) = common_long_power(ctx, &u, &v)?;
    let inner = match eh_solve_conj(ctx, &up, &vp)? {
        Candidates::Family(f) => f,
        Candidates::NotConjugate => return Ok(Candidates::NotConjugate),
    };
    let p = ctx.reduce_concat(&[&u.left_half(), &inner.p]);
    let vl_inv = ctx.invert(&v.left_half());
    let s: Vec<Word> = inner
        .s
        .iter()
        .map(|s| ctx.reduce_concat(&[s, &vl_inv]))
        .collect();
    bound_check(ctx, "S", s.len())?;
    Ok(Candidates::Family(ConjugatorFamily { p, y: inner.y, s }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> GroupContext {
        GroupContext::free(2, 1).unwrap()
    }

    fn w(ctx: &GroupContext, s: &str) -> Word {
        ctx.parse(s).unwrap()
    }

    fn family(c: Candidates) -> ConjugatorFamily {
        match c {
            Candidates::Family(f) => f,
            Candidates::NotConjugate => panic!("expected a family"),
        }
    }

    fn covers(ctx: &GroupContext, f: &ConjugatorFamily, g: &Word) -> bool {
        let g = ctx.reduce(g);
        (-8..=8).any(|n| f.s.iter().any(|s| f.member(ctx, n, s) == g))
    }

    #[test]
    fn sls_examples() {
        let g = f2();
        let c = sls_centraliser(&g, &w(&g, "ab")).unwrap();
        assert_eq!(
            (g.format(&c.y), c.l, c.s.clone()),
            ("ab".into(), 1, vec![Word::empty()])
        );
        let c2 = sls_centraliser(&g, &w(&g, "abab")).unwrap();
        assert_eq!((g.format(&c2.y), c2.l, c2.s), ("ab".into(), 2, c.s));
        assert!(sls_centraliser(&g, &Word::empty()).is_err());
        assert!(sls_centraliser(&g, &w(&g, "Aba")).is_err());
    }

    #[test]
    fn sls_matches_prefix_ball_enumeration() {
        let g = f2();
        for z in ["ab", "aab", "abAB", "aabab", "bbba"] {
            let z = w(&g, z);
            let c = sls_centraliser(&g, &z).unwrap();
            let ball = g.ball(2).unwrap();
            for k in 0..c.y.len() {
                for h in ball.iter() {
                    let cand = g.reduce_concat(&[&c.y.prefix(k), h]);
                    if g.conjugate(&z, &cand) == z {
                        let hit = (-4..=4).any(|i| {
                            c.s.iter()
                                .any(|s| g.reduce_concat(&[&g.power(&c.y, i), s]) == cand)
                        });
                        assert!(hit, "{}", g.format(&cand));
                    }
                }
            }
        }
    }

    #[test]
    fn eh_examples() {
        let g = f2();
        let u = g.power(&w(&g, "ab"), 40);
        let v = g.power(&w(&g, "ba"), 40);
        let f = family(eh_solve_conj(&g, &u, &u).unwrap());
        assert!(covers(&g, &f, &Word::empty()));
        let f = family(eh_solve_conj(&g, &u, &v).unwrap());
        assert!(covers(&g, &f, &w(&g, "a")));
        let v = g.power(&w(&g, "aab"), 40);
        assert_eq!(eh_solve_conj(&g, &u, &v).unwrap(), Candidates::NotConjugate);
        assert!(eh_solve_conj(&g, &w(&g, "ab"), &w(&g, "ab")).is_err());
    }

    #[test]
    fn candidate_examples() {
        let g = f2();
        let f = family(conj_candidates(&g, &w(&g, "ab"), &w(&g, "ba")).unwrap());
        assert!(covers(&g, &f, &w(&g, "a")));
        let f = family(conj_candidates(&g, &w(&g, "ab"), &w(&g, "ab")).unwrap());
        assert!(covers(&g, &f, &Word::empty()));
        assert_eq!(
            conj_candidates(&g, &w(&g, "ab"), &w(&g, "aab")).unwrap(),
            Candidates::NotConjugate
        );
        assert!(conj_candidates(&g, &Word::empty(), &w(&g, "a")).is_err());
    }

    #[test]
    fn candidates_in_free_product() {
        let h = GroupContext::free_product(&[2, 3], &['x', 'y'], 1).unwrap();
        let u = h.parse("xyxY").unwrap();
        let g = h.parse("yx").unwrap();
        let v = h.conjugate(&u, &g);
        let f = family(conj_candidates(&h, &u, &v).unwrap());
        let found = (-8..=8).any(|n| {
            f.s.iter()
                .any(|s| h.conjugate(&u, &f.member(&h, n, s)) == v)
        });
        assert!(found);
    }
}
