//! Cyclotomic units ξ_a = ζ^((1−a)/2)·(1−ζ^a)/(1−ζ) of ℚ(ζ_p), their
//! multiplicative independence mod p-th powers, and the count of degree-p
//! Kummer subextensions they cut out.

use fermatinv::cycunits::{cyclotomic_unit_generators, subextension_count};
use fermatinv::exactnum::cyc_norm;

fn main() -> fermatinv::Result<()> {
    let gens = cyclotomic_unit_generators(7)?;
    println!("p = 7: {} independent unit generators", gens.len());
    for g in &gens {
        println!("  expvec {:?}: {}", g.expvec(), g.element());
        println!("    norm {}", cyc_norm(g.element()));
    }

    println!();
    for p in [5u64, 7, 11, 13] {
        let rep = subextension_count(p, true)?;
        println!(
            "p = {:>2}: t = {} independent units, {} Kummer subextensions",
            rep.p, rep.t, rep.count
        );
    }
    Ok(())
}
