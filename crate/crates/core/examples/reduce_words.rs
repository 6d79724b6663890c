//! Shortlex normal forms in three backends.

use hypconj::GroupContext;

fn main() -> hypconj::Result<()> {
    let f2 = GroupContext::free(2, 1)?;
    let z = GroupContext::free_product(&[2, 3], &['x', 'y'], 1)?;
    let rws = GroupContext::from_file(concat!(env!("CARGO_MANIFEST_DIR"), "/groups/z2z3_rws.grp"))?;

    for w in ["abBA", "aBbAab", "bbbaAB"] {
        let r = f2.reduce(&f2.parse(w)?);
        let shown = if r.is_empty() {
            "1".to_string()
        } else {
            f2.format(&r)
        };
        println!("F2       {w:>10} -> {shown}");
    }
    for w in ["yy", "xyyxy", "yxxYxyyy"] {
        let a = z.reduce(&z.parse(w)?);
        let b = rws.reduce(&rws.parse(w)?);
        println!(
            "Z2*Z3    {w:>10} -> {:<8} rws -> {}",
            z.format(&a),
            rws.format(&b)
        );
    }
    Ok(())
}
