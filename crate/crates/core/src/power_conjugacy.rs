//! For which exponents `n` does `yⁿ` conjugate `u` to `v`, with `y`
//! straight.

use serde::Serialize;

use crate::context::GroupContext;
use crate::error::{arg, Error, Result};
use crate::words::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PowerConjResult {
    /// `u^{yʲ} = v` iff `j ≡ r (mod t)`, with `0 ≤ r < t ≤ V`.
    Periodic {
        r: i64,
        t: i64,
    },
    /// `r` is the only exponent that works.
    Unique {
        r: i64,
    },
    None,
}

impl PowerConjResult {
    /// Whether exponent `j` is a solution according to this result.
    pub fn contains(&self, j: i64) -> bool {
        match *self {
            PowerConjResult::Periodic { r, t } => (j - r).rem_euclid(t) == 0,
            PowerConjResult::Unique { r } => j == r,
            PowerConjResult::None => false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PowerClass {
    /// Conjugates by powers of `y` stay short; some `yᵉ` with
    /// `0 < e ≤ V` centralises `g`.
    BoundedCentral,
    /// `|g^{y^N}|_G`, which exceeds `|g|_G + 2δ`.
    Escaping(usize),
}

/// Diagnostics from [`test_conj_vs_sls_probed`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Probe {
    pub n: u64,
    /// Conjugates tested in the escaping window.
    pub window_checks: usize,
}

/// `π(y⁻ⁿ·g·yⁿ)`, negative `n` allowed.
pub fn conj_by_power(ctx: &GroupContext, g: &Word, y: &Word, n: i64) -> Word {
    let yn = ctx.alphabet().power(y, n);
    ctx.conjugate(g, &yn)
}

fn check_y(y: &Word) -> Result<()> {
    if y.is_empty() {
        return arg("y must be nonempty");
    }
    Ok(())
}

fn classify_at(ctx: &GroupContext, g: &Word, y: &Word, n: u64) -> PowerClass {
    let len = ctx.geodesic_length(g);
    let l = conj_by_power(ctx, g, y, n as i64).len();
    if l <= len + 2 * ctx.delta() as usize {
        PowerClass::BoundedCentral
    } else {
        PowerClass::Escaping(l)
    }
}

fn big_n(ctx: &GroupContext, total_len: usize, y: &Word) -> u64 {
    let c = ctx.constants();
    c.v + 1 + ((total_len as u64 + c.delta as u64) / y.len() as u64)
}

pub fn classify_large_power(ctx: &GroupContext, g: &Word, y: &Word) -> Result<PowerClass> {
    check_y(y)?;
    let y = ctx.reduce(y);
    check_y(&y)?;
    let n = big_n(ctx, ctx.geodesic_length(g), &y);
    Ok(classify_at(ctx, g, &y, n))
}

pub fn test_conj_vs_sls(
    ctx: &GroupContext,
    u: &Word,
    v: &Word,
    y: &Word,
) -> Result<PowerConjResult> {
    test_conj_vs_sls_probed(ctx, u, v, y).map(|(r, _)| r)
}

/// [`test_conj_vs_sls`] that also reports `N` and the number of window
/// checks made.
pub fn test_conj_vs_sls_probed(
    ctx: &GroupContext,
    u: &Word,
    v: &Word,
    y: &Word,
) -> Result<(PowerConjResult, Probe)> {
    check_y(y)?;
    let y = ctx.reduce(y);
    check_y(&y)?;
    let u = ctx.reduce(u);
    let v = ctx.reduce(v);
    let n = big_n(ctx, u.len() + v.len(), &y);
    let mut probe = Probe {
        n,
        window_checks: 0,
    };
    let delta = ctx.delta() as i64;
    let result = match (classify_at(ctx, &u, &y, n), classify_at(ctx, &v, &y, n)) {
        (PowerClass::BoundedCentral, PowerClass::BoundedCentral) => {
            let vmax = ctx.constants().v as i64;
            let t = (1..=vmax)
                .find(|&t| conj_by_power(ctx, &u, &y, t) == u)
                .ok_or_else(|| {
                    Error::Inconsistency(format!(
                        "no power y^e with 0 < e <= {vmax} centralises {}",
                        ctx.format(&u)
                    ))
                })?;
            match (0..t).find(|&r| conj_by_power(ctx, &u, &y, r) == v) {
                Some(r) => {
                    assert_eq!(conj_by_power(ctx, &u, &y, t), u);
                    PowerConjResult::Periodic { r, t }
                }
                None => PowerConjResult::None,
            }
        }
        (PowerClass::Escaping(lu), PowerClass::Escaping(lv)) => {
            let d = lv as i64 - lu as i64;
            let two_y = 2 * y.len() as i64;
            let lo = (d - 6 * delta).div_euclid(two_y)
                + i64::from((d - 6 * delta).rem_euclid(two_y) != 0);
            let hi = (d + 6 * delta).div_euclid(two_y);
            let mut found = PowerConjResult::None;
            for r in lo..=hi {
                probe.window_checks += 1;
                if conj_by_power(ctx, &u, &y, r) == v {
                    found = PowerConjResult::Unique { r };
                    break;
                }
            }
            assert!(probe.window_checks <= 6 * delta as usize + 1);
            found
        }
        _ => PowerConjResult::None,
    };
    Ok((result, probe))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f2() -> GroupContext {
        GroupContext::free(2, 1).unwrap()
    }

    fn w(ctx: &GroupContext, s: &str) -> Word {
        ctx.parse(s).unwrap()
    }

    #[test]
    fn classify_examples() {
        let g = f2();
        assert_eq!(
            classify_large_power(&g, &w(&g, "a"), &w(&g, "a")).unwrap(),
            PowerClass::BoundedCentral
        );
        // N = 17 + 1 + (1 + 1) / 1 = 20
        assert_eq!(
            classify_large_power(&g, &w(&g, "a"), &w(&g, "b")).unwrap(),
            PowerClass::Escaping(41)
        );
        assert_eq!(
            classify_large_power(&g, &Word::empty(), &w(&g, "b")).unwrap(),
            PowerClass::BoundedCentral
        );
        assert!(classify_large_power(&g, &w(&g, "a"), &Word::empty()).is_err());
    }

    #[test]
    fn conj_examples() {
        let g = f2();
        let t = |u: &str, v: &str, y: &str| {
            test_conj_vs_sls(&g, &w(&g, u), &w(&g, v), &w(&g, y)).unwrap()
        };
        assert_eq!(t("a", "a", "a"), PowerConjResult::Periodic { r: 0, t: 1 });
        assert_eq!(t("a", "a", "b"), PowerConjResult::Unique { r: 0 });
        assert_eq!(t("a", "b", "a"), PowerConjResult::None);
        assert_eq!(t("a", "BBabb", "b"), PowerConjResult::Unique { r: 2 });
        assert_eq!(t("a", "bbaBB", "b"), PowerConjResult::Unique { r: -2 });
        let (_, probe) =
            test_conj_vs_sls_probed(&g, &w(&g, "a"), &w(&g, "a"), &w(&g, "b")).unwrap();
        assert_eq!((probe.n, probe.window_checks), (21, 4));
        assert!(test_conj_vs_sls(&g, &w(&g, "a"), &w(&g, "a"), &Word::empty()).is_err());
    }

    #[test]
    fn periodic_in_free_product() {
        let h = GroupContext::free_product(&[2, 3], &['x', 'y'], 1).unwrap();
        let y = h.parse("xy").unwrap();
        let u = h.parse("xyxy").unwrap();
        assert_eq!(
            test_conj_vs_sls(&h, &u, &u, &y).unwrap(),
            PowerConjResult::Periodic { r: 0, t: 1 }
        );
    }

    #[test]
    fn agrees_with_scan() {
        let g = f2();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let letters: Vec<_> = g.alphabet().letters().collect();
        let random = |rng: &mut ChaCha8Rng, max: usize| {
            let n = rng.gen_range(0..=max);
            g.reduce(&Word(
                (0..n).map(|_| letters[rng.gen_range(0..4)]).collect(),
            ))
        };
        for _ in 0..40 {
            let y = loop {
                let y = crate::context::free_cyclically_reduce(g.alphabet(), &random(&mut rng, 4));
                if !y.is_empty() {
                    break y;
                }
            };
            let u = random(&mut rng, 6);
            let v = if rng.gen_bool(0.5) {
                conj_by_power(&g, &u, &y, rng.gen_range(-5..=5))
            } else {
                random(&mut rng, 6)
            };
            let (res, probe) = test_conj_vs_sls_probed(&g, &u, &v, &y).unwrap();
            let span = probe.n as i64 + 17;
            for j in -span..=span {
                assert_eq!(conj_by_power(&g, &u, &y, j) == v, res.contains(j));
            }
        }
    }
}
