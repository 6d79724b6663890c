//! Conjugator families for a pair of infinite-order elements.

use hypconj::single_conjugacy::{conj_candidates, sls_centraliser, Candidates};
use hypconj::GroupContext;

fn main() -> hypconj::Result<()> {
    let g = GroupContext::free(2, 1)?;
    let u = g.parse("aabAB")?;
    let v = g.conjugate(&u, &g.parse("bA")?);
    match conj_candidates(&g, &u, &v)? {
        Candidates::Family(f) => {
            println!(
                "|p| = {}, y = {}, |S| = {}",
                f.p.len(),
                g.format(&f.y),
                f.s.len()
            );
            for s in &f.s {
                for n in -1..=1 {
                    let w = f.member(&g, n, s);
                    let ok = g.conjugate(&u, &w) == v;
                    println!(
                        "  n = {n:>2}: p y^n s = {:<12} conjugates: {ok}",
                        g.format(&w)
                    );
                }
            }
        }
        Candidates::NotConjugate => println!("not conjugate"),
    }

    let c = sls_centraliser(&g, &g.parse("abab")?)?;
    println!(
        "centraliser of abab: y = {}, l = {}, |S'| = {}",
        g.format(&c.y),
        c.l,
        c.s.len()
    );
    Ok(())
}
