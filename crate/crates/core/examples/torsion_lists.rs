//! Lists of finite-order elements in the modular group Z2 * Z3.

use hypconj::list_solver::finite::{shorten_words, Shortening};
use hypconj::list_solver::{solve_lists_report, ListOutcome};
use hypconj::{GroupContext, Word};

fn main() -> hypconj::Result<()> {
    let z = GroupContext::free_product(&[2, 3], &['x', 'y'], 1)?;
    let g = z.parse("yxyxY")?;
    let a: Vec<Word> = ["y", "Y", "y"]
        .iter()
        .map(|w| z.parse(w))
        .collect::<hypconj::Result<_>>()?;
    let a: Vec<Word> = a
        .iter()
        .map(|w| z.conjugate(w, &z.parse("xyx").unwrap()))
        .collect();
    let b: Vec<Word> = a.iter().map(|w| z.conjugate(w, &g)).collect();

    match shorten_words(&z, &a)? {
        Shortening::Shortened(c) => println!("shortening conjugator for A: {}", z.format(&c)),
        Shortening::InfiniteWitness { j, k } => println!("a{j}..a{k} has infinite order"),
    }
    let r = solve_lists_report(&z, &a, &b)?;
    if let ListOutcome::Conjugate(w) = &r.outcome {
        println!("A ~ B via {} ({:?})", z.format(w), r.route);
    }

    let y = [z.parse("y")?];
    let yi = [z.parse("Y")?];
    let r = solve_lists_report(&z, &y, &yi)?;
    println!("y ~ Y: {} ({:?})", r.outcome.tag(), r.outcome);
    Ok(())
}
