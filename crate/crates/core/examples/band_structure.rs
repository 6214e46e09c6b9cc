//! Band structure along Γ-X-M-Γ for the default lattice, written as CSV.
//!
//!     cargo run --release --example band_structure -- 32 8 > bands.csv

use ptcrystal::kpoint::KPath;
use ptcrystal::lattice::LatticeConfig;
use ptcrystal::output::fmt_f64;
use ptcrystal::pwe::solve_path;

fn main() -> ptcrystal::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let samples = args.next().unwrap_or(16);
    let bands = args.next().unwrap_or(8);

    let cfg = LatticeConfig::default();
    let path = KPath::standard(samples);
    let bs = solve_path(&cfg, &path.samples(), bands)?;

    println!("distance,kx,ky,band,re_omega,im_omega");
    for (s, sol) in bs.samples.iter().zip(&bs.solutions) {
        for (b, m) in sol.modes.iter().enumerate() {
            println!(
                "{},{},{},{b},{},{}",
                fmt_f64(s.cumulative),
                fmt_f64(s.k.x()),
                fmt_f64(s.k.y()),
                fmt_f64(m.omega.re),
                fmt_f64(m.omega.im)
            );
        }
    }
    let complex = bs.solutions.iter().filter(|s| s.modes.iter().any(|m| m.omega.im.abs() > 1e-8)).count();
    eprintln!("{} k-points, {} with complex modes", bs.solutions.len(), complex);
    Ok(())
}
