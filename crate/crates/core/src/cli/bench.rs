//! Round-trip timing instances and random words.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::context::{Backend, GroupContext};
use crate::error::{Error, Result};
use crate::list_solver::{solve_lists, ListOutcome};
use crate::words::{Letter, Word};

#[derive(Clone, Copy, Debug, Serialize)]
pub struct BenchPoint {
    pub mu: usize,
    /// Fastest of the repetitions, in seconds.
    pub seconds: f64,
    pub median_seconds: f64,
}

/// Uniform raw word of the given length, reduced. In a free group the
/// result has exactly that length.
pub fn random_word(ctx: &GroupContext, rng: &mut impl Rng, len: usize) -> Word {
    let k = ctx.alphabet().len() as u8;
    if matches!(ctx.backend(), Backend::FreeGroup { .. }) {
        let mut out: Vec<Letter> = Vec::with_capacity(len);
        while out.len() < len {
            let x = Letter(rng.gen_range(0..k));
            if out.last().is_none_or(|&p| ctx.alphabet().inverse(p) != x) {
                out.push(x);
            }
        }
        return Word(out);
    }
    let raw: Vec<Letter> = (0..len).map(|_| Letter(rng.gen_range(0..k))).collect();
    ctx.reduce_letters(&raw)
}

/// `(A, B, g)` with `A` of `m` random words of length `mu` and `B = A^g`.
pub fn round_trip_instance(
    ctx: &GroupContext,
    m: usize,
    mu: usize,
    seed: u64,
) -> (Vec<Word>, Vec<Word>, Word) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a: Vec<Word> = (0..m).map(|_| random_word(ctx, &mut rng, mu)).collect();
    let g = random_word(ctx, &mut rng, 6);
    let b = a.iter().map(|w| ctx.conjugate(w, &g)).collect();
    (a, b, g)
}

/// Times `solve_lists` on round-trip instances for each `μ`.
pub fn run_bench(
    ctx: &GroupContext,
    m: usize,
    mu_list: &[usize],
    reps: usize,
    seed: u64,
) -> Result<Vec<BenchPoint>> {
    let mut out = Vec::with_capacity(mu_list.len());
    for &mu in mu_list {
        let (a, b, _) = round_trip_instance(ctx, m, mu, seed ^ mu as u64);
        let mut times = Vec::with_capacity(reps.max(1));
        for _ in 0..reps.max(1) {
            let start = Instant::now();
            let outcome = solve_lists(ctx, &a, &b)?;
            times.push(start.elapsed().as_secs_f64());
            if !matches!(outcome, ListOutcome::Conjugate(_)) {
                return Err(Error::Inconsistency(format!(
                    "round-trip instance with mu = {mu} was not solved: {}",
                    outcome.tag()
                )));
            }
        }
        times.sort_by(f64::total_cmp);
        out.push(BenchPoint {
            mu,
            seconds: times[0],
            median_seconds: times[times.len() / 2],
        });
    }
    Ok(out)
}
