//! How p behaves in the degree-p Kummer extension N = K(l^(1/p)) of the
//! p-th cyclotomic field: totally ramified in the generic case, unramified
//! with p primes above p exactly when (p, l) is a Wieferich pair — and in
//! that case no extension of K is needed for good reduction.

use fermatinv::padic::{good_reduction_field, ramification_report, GoodReductionField};

fn main() -> fermatinv::Result<()> {
    for (p, l) in [(5u64, 2u64), (7, 2), (11, 3), (1093, 2), (3511, 2)] {
        let r = ramification_report(p, l)?;
        println!(
            "p = {:>4}, l = {}: wieferich = {:<5} unramified = {:<5} shape {}, primes above p: {}",
            r.p, r.l, r.wieferich, r.p_unramified_in_n, r.shape_in_l, r.num_primes_above_p_in_n
        );
    }

    println!();
    for p in [5u64, 7, 1093] {
        let field = match good_reduction_field(p)? {
            GoodReductionField::K => "K itself".to_string(),
            GoodReductionField::KAdjoinPthRootOfTwo => format!("K(2^(1/{p}))"),
        };
        println!("p = {p}: everywhere-good reduction over {field}");
    }
    Ok(())
}
