//! Compares the solver with brute-force search on random pairs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hypconj::cli::bench::random_word;
use hypconj::list_solver::{solve_lists, ListOutcome};
use hypconj::oracle::{brute_conjugator, estimate_delta, free_conjugacy_oracle};
use hypconj::GroupContext;

fn main() -> hypconj::Result<()> {
    let g = GroupContext::free(2, 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut agree = 0;
    for _ in 0..50 {
        let lu = rng.gen_range(1..10);
        let u = random_word(&g, &mut rng, lu);
        let v = if rng.gen_bool(0.5) {
            let c = random_word(&g, &mut rng, 3);
            g.conjugate(&u, &c)
        } else {
            let lv = rng.gen_range(1..10);
            random_word(&g, &mut rng, lv)
        };
        let solver = matches!(
            solve_lists(&g, std::slice::from_ref(&u), std::slice::from_ref(&v))?,
            ListOutcome::Conjugate(_)
        );
        let brute =
            brute_conjugator(&g, std::slice::from_ref(&u), std::slice::from_ref(&v), 5)?.is_some();
        let oracle = free_conjugacy_oracle(&g, &u, &v)?;
        agree += usize::from(solver == oracle && (brute || !oracle));
    }
    println!("{agree}/50 pairs agree");

    let z = GroupContext::free_product(&[2, 3], &['x', 'y'], 1)?;
    println!(
        "thinness estimate on the radius-3 ball of Z2*Z3: {}",
        estimate_delta(&z, 3)?
    );
    Ok(())
}
