//! Deciding finite versus infinite order, and straightening a long power.

use hypconj::straightness::{is_shortlex_straight, straighten_power, test_inf_order};
use hypconj::GroupContext;

fn main() -> hypconj::Result<()> {
    let z = GroupContext::free_product(&[2, 3], &['x', 'y'], 1)?;
    for w in ["x", "y", "xyx", "xy", "Yxyxy"] {
        println!("{w:>6}: {:?}", test_inf_order(&z, &z.parse(w)?)?);
    }

    let f2 = GroupContext::free(2, 1)?;
    let u = f2.parse("Bab")?;
    println!("Bab straight: {}", is_shortlex_straight(&f2, &u)?);
    let long = f2.power(&f2.parse("Baab")?, 20);
    let s = straighten_power(&f2, &long)?;
    println!(
        "(Baab)^20 straightened: k = {}, a = {}, z = {}",
        s.k,
        f2.format(&s.a),
        f2.format(&s.z)
    );
    Ok(())
}
