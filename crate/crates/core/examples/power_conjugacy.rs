//! Which powers of a straight word conjugate one element to another.

use hypconj::power_conjugacy::{conj_by_power, test_conj_vs_sls_probed};
use hypconj::GroupContext;

fn main() -> hypconj::Result<()> {
    let g = GroupContext::free(2, 1)?;
    let y = g.parse("ab")?;
    let cases = [
        ("a", conj_by_power(&g, &g.parse("a")?, &y, 3)),
        ("abab", g.parse("abab")?),
        ("b", g.parse("a")?),
    ];
    for (u, v) in cases {
        let (res, probe) = test_conj_vs_sls_probed(&g, &g.parse(u)?, &v, &y)?;
        println!(
            "{u} -> {}: {res:?} (N = {}, window checks = {})",
            g.format(&v),
            probe.n,
            probe.window_checks
        );
    }
    Ok(())
}
