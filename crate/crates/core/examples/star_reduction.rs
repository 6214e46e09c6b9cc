//! Decomposes stars of empty-lattice wavevectors into C4v irreps by counting
//! fixed points.
//!
//!     cargo run --example star_reduction

use ptcrystal::classify::{reduce_star, stars_up_to, Star};

fn show(star: &Star) -> ptcrystal::Result<()> {
    let r = reduce_star(star)?;
    let parts: Vec<String> = r
        .irreps
        .iter()
        .zip(&r.multiplicities)
        .filter(|(_, &m)| m > 0)
        .map(|(n, m)| if *m == 1 { n.to_string() } else { format!("{m}{n}") })
        .collect();
    println!("{:<18} |star| {:>2}  P = {:?}  ->  {}", star.name, star.len(), r.profile, parts.join(" + "));
    Ok(())
}

fn main() -> ptcrystal::Result<()> {
    for name in ["gamma1", "gamma2", "x1", "m1", "m2"] {
        show(&Star::named(name)?)?;
    }
    println!();
    for star in stars_up_to(10) {
        show(&star)?;
    }
    Ok(())
}
