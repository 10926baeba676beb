//! Scans u = −2, −3, … for points whose ideal-class invariant is nonzero,
//! in parallel, and prints one witness row per nonvanishing field.

use fermatinv::exactnum::DEFAULT_FACTOR_BOUND;
use fermatinv::invariant::search_nonvanishing;

fn main() -> fermatinv::Result<()> {
    let outcome = search_nonvanishing(5, -12, -2, 2, None, DEFAULT_FACTOR_BOUND)?;
    println!("  u           d      h   |Cl/S|  c-order  infinite order");
    for r in &outcome.reports {
        println!(
            "{:>3}  {:>10}  {:>5}  {:>6}  {:>7}  {}",
            r.u,
            r.d,
            r.h,
            r.s_quotient_order,
            r.c_order,
            r.infinite_order.as_str()
        );
    }
    println!(
        "\ntested {} values, {} witnesses, {} skipped",
        outcome.tested,
        outcome.witnesses,
        outcome.skipped.len()
    );
    Ok(())
}
