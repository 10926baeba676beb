//! S-class groups: the class group modulo the classes of primes above p.
//! When p is inert the quotient is the whole group; when p splits the
//! prime above it can swallow most of it.

use fermatinv::quadclass::{class_group, primes_above, s_class_group};

fn main() -> fermatinv::Result<()> {
    for (p, d) in [(5u64, -127i128), (5, -971), (5, -12499), (5, -31103)] {
        let cg = class_group(d)?;
        let (splitting, primes) = primes_above(p, d)?;
        let s_classes: Vec<_> = primes
            .iter()
            .map(|pr| pr.to_class())
            .collect::<fermatinv::Result<_>>()?;
        let scg = s_class_group(&cg, &s_classes)?;
        println!(
            "d = {d}: h = {}, {p} is {}, |<S>| = {}, |Cl/S| = {}",
            cg.h(),
            splitting.as_str(),
            scg.subgroup_order(),
            scg.quotient_order()
        );
    }
    Ok(())
}
