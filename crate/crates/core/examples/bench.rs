//! Timing round-trip instances of growing length.

use hypconj::cli::bench::run_bench;
use hypconj::GroupContext;

fn main() -> hypconj::Result<()> {
    let g = GroupContext::free(2, 1)?;
    let points = run_bench(&g, 2, &[1000, 2000, 4000, 8000], 3, 1)?;
    for p in &points {
        println!("mu={} seconds={:.6}", p.mu, p.seconds);
    }
    println!(
        "t(8000)/t(1000) = {:.2}",
        points[3].seconds / points[0].seconds
    );
    Ok(())
}
