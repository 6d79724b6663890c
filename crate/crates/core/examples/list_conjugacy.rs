//! Conjugacy of lists with a report of the route taken.

use hypconj::list_solver::{solve_lists_report, ListOutcome};
use hypconj::{GroupContext, Word};

fn words(g: &GroupContext, ws: &[&str]) -> hypconj::Result<Vec<Word>> {
    ws.iter().map(|w| g.parse(w)).collect()
}

fn main() -> hypconj::Result<()> {
    let g = GroupContext::free(2, 1)?;
    let a = words(&g, &["abAAb", "bab", "aaB"])?;
    let conj = g.parse("Bab")?;
    let b: Vec<Word> = a.iter().map(|w| g.conjugate(w, &conj)).collect();

    let mut wrong = b.clone();
    wrong[2] = g.parse("aab")?;

    for (label, target) in [("conjugated", &b), ("perturbed", &wrong)] {
        let r = solve_lists_report(&g, &a, target)?;
        let witness = match &r.outcome {
            ListOutcome::Conjugate(w) => g.format(w),
            _ => "-".into(),
        };
        println!(
            "{label}: {} witness {witness} via {:?}",
            r.outcome.tag(),
            r.route
        );
    }
    Ok(())
}
