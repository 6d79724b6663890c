//! Brute-force ground truth for testing.
//!
//! Nothing here shares code with the solver beyond the reducer itself:
//! balls are built by enumerating raw words rather than by the context's
//! breadth-first search.
//!
//! [`estimate_delta`] can refute a configured δ on a small ball, but a small
//! value never certifies hyperbolicity.

use crate::context::{free_cyclically_reduce, Backend, GroupContext};
use crate::error::{arg, Error, Result};
use crate::stringology::cyclic_match;
use crate::words::{Letter, Word};

/// All normal forms of length at most `radius`, in shortlex order.
pub fn ball(ctx: &GroupContext, radius: usize) -> Result<Vec<Word>> {
    let k = ctx.alphabet().len() as u128;
    let total: u128 = (0..=radius as u32).map(|i| k.saturating_pow(i)).sum();
    if total > ctx.node_budget() as u128 {
        return Err(Error::Resource(format!(
            "{total} raw words of length <= {radius} exceed the node budget of {}",
            ctx.node_budget()
        )));
    }
    let mut out = Vec::new();
    for len in 0..=radius {
        let mut digits = vec![0u8; len];
        'words: loop {
            let w = Word(digits.iter().map(|&d| Letter(d)).collect());
            if ctx.reduce(&w) == w {
                out.push(w);
            }
            let mut i = len;
            loop {
                if i == 0 {
                    break 'words;
                }
                i -= 1;
                digits[i] += 1;
                if (digits[i] as u128) < k {
                    continue 'words;
                }
                digits[i] = 0;
            }
        }
    }
    Ok(out)
}

fn conjugates_all(ctx: &GroupContext, a: &[Word], b: &[Word], g: &Word) -> bool {
    let gi = ctx.invert(g);
    a.iter()
        .zip(b)
        .all(|(x, y)| ctx.equal(&Word::concat(&[&gi, x, g]), y))
}

/// Shortlex-least `g` with `|g|_G ≤ radius` and `g⁻¹aᵢg = bᵢ` for all `i`.
pub fn brute_conjugator(
    ctx: &GroupContext,
    a: &[Word],
    b: &[Word],
    radius: usize,
) -> Result<Option<Word>> {
    if a.len() != b.len() {
        return arg("lists differ in length");
    }
    Ok(ball(ctx, radius)?
        .into_iter()
        .find(|g| conjugates_all(ctx, a, b, g)))
}

/// Every `g` with `|g|_G ≤ radius` centralising `A`, in shortlex order.
pub fn brute_centraliser(ctx: &GroupContext, a: &[Word], radius: usize) -> Result<Vec<Word>> {
    Ok(ball(ctx, radius)?
        .into_iter()
        .filter(|g| conjugates_all(ctx, a, a, g))
        .collect())
}

/// Free-group conjugacy: cyclic reductions are rotations of each other.
pub fn free_conjugacy_oracle(ctx: &GroupContext, u: &Word, v: &Word) -> Result<bool> {
    if !matches!(ctx.backend(), Backend::FreeGroup { .. }) {
        return arg("free_conjugacy_oracle needs a free group");
    }
    let cu = free_cyclically_reduce(ctx.alphabet(), &ctx.reduce(u));
    let cv = free_cyclically_reduce(ctx.alphabet(), &ctx.reduce(v));
    Ok(cyclic_match(&cu, &cv).is_some())
}

/// Gromov product `(x, y)_z`, doubled so it stays integral.
pub fn gromov_product_x2(ctx: &GroupContext, x: &Word, y: &Word, z: &Word) -> usize {
    let d = |p: &Word, q: &Word| ctx.reduce(&Word::concat(&[&ctx.invert(p), q])).len();
    d(x, z) + d(y, z) - d(x, y)
}

/// Largest distance between corresponding points over geodesic triangles
/// with corners `1, y, z`, `y, z` in the ball of the given radius. Sides are
/// the shortlex geodesics `π(y)`, `π(z)` and `y·π(y⁻¹z)`; points on the two
/// sides at a corner correspond while their distance from it is at most
/// the Gromov product there.
pub fn estimate_delta(ctx: &GroupContext, radius: usize) -> Result<usize> {
    let pts = ball(ctx, radius)?;
    let budget = ctx.node_budget() as u128;
    if (pts.len() as u128).pow(2) > budget {
        return Err(Error::Resource(format!(
            "{} triangles exceed the node budget of {budget}",
            pts.len() * pts.len()
        )));
    }
    let one = Word::empty();
    let dist = |p: &Word, q: &Word| ctx.reduce(&Word::concat(&[&ctx.invert(p), q])).len();
    let mut worst = 0;
    for y in &pts {
        for z in &pts {
            let side_yz = ctx.reduce(&Word::concat(&[&ctx.invert(y), z]));
            let dy = y.len();
            let dz = z.len();
            let dyz = side_yz.len();
            // point at distance t along [1,y], [1,z], and [y,z] from y
            let on_y = |t: usize| y.prefix(t);
            let on_z = |t: usize| z.prefix(t);
            let on_yz = |t: usize| y.then(&side_yz.prefix(t));
            let corners = [
                (gromov_product_x2(ctx, y, z, &one) / 2, 0),
                (gromov_product_x2(ctx, &one, z, y) / 2, 1),
                (gromov_product_x2(ctx, &one, y, z) / 2, 2),
            ];
            for (g, corner) in corners {
                for t in 0..=g {
                    let (p, q) = match corner {
                        0 => (on_y(t), on_z(t)),
                        1 => (on_y(dy - t), on_yz(t)),
                        _ => (on_z(dz - t), on_yz(dyz - t)),
                    };
                    worst = worst.max(dist(&p, &q));
                }
            }
        }
    }
    Ok(worst)
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

    #[test]
    fn ball_examples() {
        let g = f2();
        assert_eq!(ball(&g, 0).unwrap(), vec![Word::empty()]);
        assert_eq!(ball(&g, 1).unwrap().len(), 5);
        assert_eq!(ball(&g, 2).unwrap().len(), 17);
        for r in 0..=4 {
            assert_eq!(*ball(&g, r).unwrap(), *g.ball(r).unwrap());
        }
        let h = z2z3();
        assert_eq!(ball(&h, 2).unwrap().len() as u64, h.constants().v);
        let small =
            GroupContext::with_node_budget(g.alphabet().clone(), g.backend().clone(), 1, 100_000)
                .unwrap();
        assert!(matches!(ball(&small, 9), Err(Error::Resource(_))));
    }

    #[test]
    fn conjugator_examples() {
        let g = f2();
        let w = |s: &str| g.parse(s).unwrap();
        assert_eq!(
            brute_conjugator(&g, &[w("ab")], &[w("ba")], 2).unwrap(),
            Some(w("a"))
        );
        assert_eq!(
            brute_conjugator(&g, &[w("ab")], &[w("ab")], 2).unwrap(),
            Some(Word::empty())
        );
        assert_eq!(brute_conjugator(&g, &[w("a")], &[w("b")], 6).unwrap(), None);
    }

    #[test]
    fn centraliser_examples() {
        let g = f2();
        let fmt = |v: Vec<Word>| v.iter().map(|w| g.format(w)).collect::<Vec<_>>();
        assert_eq!(
            fmt(brute_centraliser(&g, &[g.parse("a").unwrap()], 2).unwrap()),
            ["", "a", "A", "aa", "AA"]
        );
        let h = z2z3();
        let c = brute_centraliser(&h, &[h.parse("x").unwrap()], 3).unwrap();
        assert_eq!(c.iter().map(|w| h.format(w)).collect::<Vec<_>>(), ["", "x"]);
        assert_eq!(brute_centraliser(&g, &[], 2).unwrap().len(), 17);
    }

    #[test]
    fn free_oracle_examples() {
        let g = f2();
        let t = |u: &str, v: &str| {
            free_conjugacy_oracle(&g, &g.parse(u).unwrap(), &g.parse(v).unwrap()).unwrap()
        };
        assert!(t("ab", "ba"));
        assert!(!t("a", "b"));
        assert!(t("Aba", "b"));
        assert!(t("Babb", "ab"));
        assert!(!t("ab", "aB"));
        let h = z2z3();
        assert!(free_conjugacy_oracle(&h, &Word::empty(), &Word::empty()).is_err());
    }

    #[test]
    fn delta_examples() {
        let g = f2();
        assert_eq!(estimate_delta(&g, 0).unwrap(), 0);
        assert_eq!(estimate_delta(&g, 3).unwrap(), 0);
        let h = z2z3();
        assert!(estimate_delta(&h, 3).unwrap() <= h.delta() as usize);
    }
}
