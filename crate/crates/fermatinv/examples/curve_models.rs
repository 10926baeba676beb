//! The quotient curve y^p = x(1−x) and its hyperelliptic models. The
//! substitution (x, y) ↦ (−y, x − 1/2) turns it into v² = u^p + 1/4 of
//! genus (p−1)/2, with an integral twin w² = 4u^p + 1.

use fermatinv::curves::{fermat_model, AffinePoint};
use fermatinv::exactnum::Rat;
use num_bigint::BigInt;

fn main() -> fermatinv::Result<()> {
    for p in [5u64, 7, 11] {
        let model = fermat_model(p)?;
        println!("p = {p}: genus {}", model.genus());
        println!("  hyper    {}", model.hyper().to_json("Q"));
        println!("  integral {}", model.integral().to_json("Q"));
    }

    // The point (x, y) = (1/2, y0) with y0^p = 1/4 is not rational, but
    // (0, 0) and (1, 0) are; they map to the base point u = 0, v = ±1/2.
    let model = fermat_model(5)?;
    let half = Rat::new(BigInt::from(-1), BigInt::from(2))?;
    let q = AffinePoint::finite(Rat::zero(), half);
    println!("\nQ = (0, -1/2) on v^2 = u^5 + 1/4: {}", model.is_on_hyper(&q));

    let origin = AffinePoint::finite(Rat::zero(), Rat::zero());
    println!("(0, 0) on y^5 = x(1-x): {}", model.is_on_original(&origin));
    println!("(0, 0) maps to {}", model.to_hyper(&origin)?);
    Ok(())
}
