//! Dimmock-Wheeler test, squared antiunitary elements and character tables
//! at the three high-symmetry points.
//!
//!     cargo run --example character_tables

use ptcrystal::corep::CharacterTable;
use ptcrystal::kpoint::HighSymmetryPoint;
use ptcrystal::symmetry::LittleGroup;

fn main() -> ptcrystal::Result<()> {
    for p in HighSymmetryPoint::ALL {
        let group = LittleGroup::at(p);
        let table = CharacterTable::for_group(&group)?;
        let labels = group.labels();
        let n = group.unitary_count();
        println!("{} ({} unitary, {} antiunitary)", p.symbol(), n, group.order() - n);

        let squares: Vec<String> = group.squared_antiunitary().into_iter().map(|i| group.label(i)).collect();
        println!("  W^2 = ({})", squares.join(", "));

        print!("  {:<5}", "");
        for l in &labels[..n] {
            print!("{l:>7}");
        }
        println!("{:>8}", "DW");
        for irrep in &table.irreps {
            let chi = irrep.characters();
            print!("  {:<5}", irrep.name);
            for c in &chi {
                print!("{:>7}", c.re);
            }
            let sum = group.dimmock_wheeler_sum(&chi).re;
            let kind = group.dimmock_wheeler(&chi)?;
            println!("{sum:>6} ({kind}){}", if irrep.physical { "" } else { "  *" });
        }
        if table.irreps.iter().any(|i| !i.physical) {
            println!("  * characters do not change sign under the bar: no Bloch modes");
        }
        println!();
    }
    Ok(())
}
