//! The base point Q = (0, −1/2) on v² = u^p + 1/4 generates a cyclic
//! subgroup of exact order p in the jacobian.

use fermatinv::curves::{fermat_model, AffinePoint};
use fermatinv::exactnum::Rat;
use fermatinv::jacobian::Jacobian;
use num_bigint::BigInt;

fn main() -> fermatinv::Result<()> {
    for p in [5u64, 7] {
        let model = fermat_model(p)?;
        let jac = Jacobian::new(model.hyper().clone());
        let y = Rat::new(BigInt::from(-1), BigInt::from(2))?;
        let q = jac.point_divisor(&AffinePoint::finite(Rat::zero(), y))?;

        println!("p = {p}: Q ~ {q}");
        for k in 1..=p {
            let kq = jac.scalar_mul(k as i64, &q)?;
            println!("  {k}·Q = {kq}{}", if kq.is_identity() { "  (identity)" } else { "" });
        }
        println!("  order_of(Q) = {}\n", jac.order_of(&q, 100)?);
    }
    Ok(())
}
