//! Newton–Hensel lifting of approximate p-adic roots. The simple case
//! doubles precision per step; the Wieferich case X^p − 2 starts with a
//! repeated root mod p and lifts only because the pair satisfies the
//! stronger congruence.

use fermatinv::padic::{hensel_lift, PadicApprox, ZPoly};

fn main() -> fermatinv::Result<()> {
    // x^2 = 2 in Z_7, starting from 3^2 = 9 = 2 mod 7.
    let f = ZPoly::x_pow_minus(2, 2);
    let seed = PadicApprox::new(7, 1, 3)?;
    for target in [2, 4, 8, 16] {
        let root = hensel_lift(&f, &seed, target)?;
        println!("sqrt(2) = {} mod 7^{}", root.value(), target);
    }

    // X^1093 = 2 in Z_1093: the seed 2 is a root mod 1093 by Fermat, and
    // it lifts because 2^1092 = 1 mod 1093^2.
    let f = ZPoly::x_pow_minus(1093, 2);
    let seed = PadicApprox::new(1093, 1, 2)?;
    let root = hensel_lift(&f, &seed, 2)?;
    println!("\n2^(1/1093) = {} mod 1093^2", root.value());

    // For a non-Wieferich pair the same lift is impossible.
    let f = ZPoly::x_pow_minus(5, 2);
    let seed = PadicApprox::new(5, 1, 2)?;
    match hensel_lift(&f, &seed, 2) {
        Err(e) => println!("X^5 - 2 over Z_5: {e}"),
        Ok(_) => unreachable!("5 is totally ramified in the quintic Kummer extension"),
    }
    Ok(())
}
