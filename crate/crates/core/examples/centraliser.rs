//! Centraliser generators for lists.

use hypconj::list_solver::centraliser_lists_report;
use hypconj::GroupContext;

fn main() -> hypconj::Result<()> {
    let f2 = GroupContext::free(2, 1)?;
    let z = GroupContext::free_product(&[2, 3], &['x', 'y'], 1)?;
    let cases = [
        (&f2, vec!["abab"]),
        (&f2, vec!["ab", "Baab"]),
        (&f2, vec![]),
        (&z, vec!["xy"]),
        (&z, vec!["y"]),
    ];
    for (g, list) in cases {
        let a = list
            .iter()
            .map(|w| g.parse(w))
            .collect::<hypconj::Result<Vec<_>>>()?;
        let r = centraliser_lists_report(g, &a)?;
        let gens: Vec<String> = r
            .result
            .generators
            .iter()
            .filter(|w| !w.is_empty())
            .map(|w| g.format(w))
            .collect();
        println!(
            "C({list:?}) = <{}>  complete: {}",
            gens.join(", "),
            r.result.complete
        );
    }
    Ok(())
}
