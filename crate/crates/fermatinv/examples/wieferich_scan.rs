//! Scans for Wieferich primes: primes p with l^(p−1) ≡ 1 (mod p²).
//! Their scarcity is the reason degree-p Kummer extensions of the
//! cyclotomic field are usually ramified above p.

use fermatinv::padic::{is_wieferich_pair, wieferich_scan};

fn main() -> fermatinv::Result<()> {
    for base in [2u64, 3, 5] {
        let hits = wieferich_scan(base, 100_000)?;
        println!("base {base}: Wieferich primes below 100000: {hits:?}");
    }

    // The classical pair (1093, 2), checked directly.
    println!();
    for p in [13, 1093, 3511] {
        println!("2^({p}-1) = 1 mod {p}^2: {}", is_wieferich_pair(2, p)?);
    }
    Ok(())
}
