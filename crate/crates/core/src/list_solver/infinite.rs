//! Lists whose first element has infinite order.

use num_integer::Integer;

use super::{verify_witness, CentraliserResult, ListOutcome};
use crate::context::GroupContext;
use crate::error::{arg, Error, Result};
use crate::power_conjugacy::{test_conj_vs_sls, PowerConjResult};
use crate::single_conjugacy::{conj_candidates, Candidates};
use crate::straightness::test_inf_order;
use crate::words::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProgressionEntry {
    pub s: Word,
    /// `R_s`
    pub r: i128,
    /// `T_s`; zero when only `R_s` works.
    pub t: i128,
}

/// All `g = p·y^{R_s + n·T_s}·s` conjugate the lists that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProgressionFamily {
    pub p: Word,
    pub y: Word,
    pub entries: Vec<ProgressionEntry>,
}

impl ProgressionFamily {
    pub fn element(&self, ctx: &GroupContext, entry: &ProgressionEntry, n: i128) -> Result<Word> {
        let e = n
            .checked_mul(entry.t)
            .and_then(|x| x.checked_add(entry.r))
            .and_then(|x| i64::try_from(x).ok())
            .ok_or_else(|| Error::Overflow("exponent out of range".into()))?;
        let yn = ctx.alphabet().power(&self.y, e);
        Ok(ctx.reduce_concat(&[&self.p, &yn, &entry.s]))
    }
}

fn overflow() -> Error {
    Error::Overflow("congruence modulus exceeds 128 bits".into())
}

/// Solves `j ≡ rᵢ (mod tᵢ)` simultaneously. Returns `(R, T)` with
/// `T = lcm(tᵢ)` and `0 ≤ R < T`, or `None` if the system is inconsistent.
pub fn crt_combine(congruences: &[(i128, i128)]) -> Result<Option<(i128, i128)>> {
    let (mut r, mut t) = (0i128, 1i128);
    for &(ri, ti) in congruences {
        if ti <= 0 {
            return arg(format!("modulus {ti} must be positive"));
        }
        let ri = ri.rem_euclid(ti);
        let eg = t.extended_gcd(&ti);
        let g = eg.gcd;
        if (ri - r).rem_euclid(g) != 0 {
            return Ok(None);
        }
        let m = ti / g;
        let k = ((ri - r) / g)
            .rem_euclid(m)
            .checked_mul(eg.x.rem_euclid(m))
            .ok_or_else(overflow)?
            .rem_euclid(m);
        let lcm = (t / g).checked_mul(ti).ok_or_else(overflow)?;
        r = t
            .checked_mul(k)
            .and_then(|x| x.checked_add(r))
            .ok_or_else(overflow)?
            .rem_euclid(lcm);
        t = lcm;
    }
    Ok(Some((r, t)))
}

fn conjugator(ctx: &GroupContext, p: &Word, y: &Word, e: i128, s: &Word) -> Result<Word> {
    let e = i64::try_from(e).map_err(|_| Error::Overflow("exponent out of range".into()))?;
    Ok(ctx.reduce_concat(&[p, &ctx.alphabet().power(y, e), s]))
}

/// Family of every conjugator from `A` to `B`. With `first_only` the scan
/// over `S` stops at the first surviving `s`.
pub(crate) fn progression_family(
    ctx: &GroupContext,
    a: &[Word],
    b: &[Word],
    first_only: bool,
) -> Result<Option<ProgressionFamily>> {
    if a.len() != b.len() {
        return arg("lists differ in length");
    }
    let Some(a1) = a.first() else {
        return arg("lists must be nonempty");
    };
    if !test_inf_order(ctx, a1)?.is_infinite() {
        return arg(format!("{} has finite order", ctx.format(a1)));
    }
    if !test_inf_order(ctx, &b[0])?.is_infinite() {
        return Ok(None);
    }
    let fam = match conj_candidates(ctx, a1, &b[0])? {
        Candidates::Family(f) => f,
        Candidates::NotConjugate => return Ok(None),
    };
    let b_red: Vec<Word> = b.iter().map(|w| ctx.reduce(w)).collect();
    let u: Vec<Word> = a.iter().map(|ai| ctx.conjugate(ai, &fam.p)).collect();
    let mut entries = Vec::new();
    'next_s: for s in &fam.s {
        let s_inv = ctx.invert(s);
        let mut periodic = Vec::with_capacity(a.len());
        for (ui, bi) in u.iter().zip(&b_red) {
            let vi = ctx.conjugate(bi, &s_inv);
            match test_conj_vs_sls(ctx, ui, &vi, &fam.y)? {
                PowerConjResult::None => continue 'next_s,
                PowerConjResult::Unique { r } => {
                    let g = conjugator(ctx, &fam.p, &fam.y, r as i128, s)?;
                    if ctx.conjugates_list(a, &b_red, &g) {
                        entries.push(ProgressionEntry {
                            s: s.clone(),
                            r: r as i128,
                            t: 0,
                        });
                        if first_only {
                            break 'next_s;
                        }
                    }
                    continue 'next_s;
                }
                PowerConjResult::Periodic { r, t } => periodic.push((r as i128, t as i128)),
            }
        }
        if let Some((r, t)) = crt_combine(&periodic)? {
            entries.push(ProgressionEntry { s: s.clone(), r, t });
            if first_only {
                break;
            }
        }
    }
    if entries.is_empty() {
        return Ok(None);
    }
    let fam = ProgressionFamily {
        p: fam.p,
        y: fam.y,
        entries,
    };
    for e in &fam.entries {
        verify_witness(ctx, a, &b_red, &fam.element(ctx, e, 0)?)?;
    }
    Ok(Some(fam))
}

/// Decides `A ~ B` when `a₁` has infinite order.
pub fn solve_infinite_case(
    ctx: &GroupContext,
    a: &[Word],
    b: &[Word],
) -> Result<(ListOutcome, Option<ProgressionFamily>)> {
    match progression_family(ctx, a, b, false)? {
        Some(f) => {
            let g = f.element(ctx, &f.entries[0], 0)?;
            Ok((ListOutcome::Conjugate(g), Some(f)))
        }
        None => Ok((ListOutcome::NotConjugate, None)),
    }
}

/// Generators of `C_G(A)` when `a₁` has infinite order.
pub fn centraliser_infinite_case(ctx: &GroupContext, a: &[Word]) -> Result<CentraliserResult> {
    let fam = progression_family(ctx, a, a, false)?.ok_or_else(|| {
        Error::Inconsistency("the identity was not found to centralise the list".into())
    })?;
    let mut generators = Vec::new();
    for e in &fam.entries {
        generators.push(fam.element(ctx, e, 0)?);
    }
    let mut periods = fam.entries.iter().map(|e| e.t).filter(|&t| t != 0);
    if let Some(t) = periods.next() {
        if periods.any(|u| u != t) {
            return Err(Error::Inconsistency("nonzero periods T_s differ".into()));
        }
        let p_inv = ctx.invert(&fam.p);
        generators.push(conjugator(ctx, &fam.p, &fam.y, t, &p_inv)?);
    }
    generators.sort();
    generators.dedup();
    let a_red: Vec<Word> = a.iter().map(|w| ctx.reduce(w)).collect();
    for g in &generators {
        verify_witness(ctx, a, &a_red, g)?;
    }
    Ok(CentraliserResult {
        generators,
        complete: true,
    })
}
