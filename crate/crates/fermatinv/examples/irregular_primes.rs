//! Irregular primes: p dividing the numerator of some Bernoulli number
//! B_k with k = 2, 4, …, p−3, computed exactly and re-checked mod p.

use fermatinv::cycunits::{bernoulli_numbers_exact, bernoulli_numbers_mod_p, irregularity};
use fermatinv::exactnum::primes_up_to;

fn main() -> fermatinv::Result<()> {
    println!("irregular primes below 150:");
    for p in primes_up_to(149) {
        if p < 5 {
            continue;
        }
        let rep = irregularity(p)?;
        if rep.irregular {
            println!("  p = {:>3}, witnesses k = {:?}", rep.p, rep.witnesses);
        }
    }

    // The witness pair (37, 32) seen both ways.
    let exact = bernoulli_numbers_exact(32)?;
    println!("\nB_32 = {}", exact[32].to_fraction_string());
    let residues = bernoulli_numbers_mod_p(37)?;
    println!("B_32 mod 37 = {}", residues[32]);
    Ok(())
}
