//! The constants derived from δ and the caps in each profile.

use hypconj::{GroupContext, Profile};

fn main() -> hypconj::Result<()> {
    for (name, g) in [
        ("F2", GroupContext::free(2, 1)?),
        ("F3", GroupContext::free(3, 1)?),
        (
            "Z2*Z3",
            GroupContext::free_product(&[2, 3], &['x', 'y'], 1)?,
        ),
    ] {
        let c = g.constants();
        println!(
            "{name:<6} L={} V={} M={} R={} torsion bound={}",
            c.l, c.v, c.m, c.exp_search_bound, c.torsion_order_bound
        );
    }
    let g = GroupContext::free(2, 1)?;
    println!("practical caps: {:?}", g.caps());
    println!(
        "paper caps:     {:?}",
        g.with_profile(Profile::Paper).caps()
    );
    Ok(())
}
