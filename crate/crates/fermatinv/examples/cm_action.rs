//! Complex multiplication by ζ_p on the jacobian of v² = u^p + 1/4 over
//! ℚ(ζ_p): the automorphism (u, v) ↦ (ζu, v) on divisor classes. The base
//! point class is fixed, i.e. killed by 1 − ζ.

use fermatinv::curves::{fermat_model, AffinePoint};
use fermatinv::exactnum::{CycFieldElem, ExactField, Rat};
use fermatinv::jacobian::Jacobian;
use num_bigint::BigInt;

fn main() -> fermatinv::Result<()> {
    let p = 5u64;
    let zeta = CycFieldElem::zeta(p)?;
    let jac = Jacobian::new(fermat_model(p)?.hyper_over(&zeta)?);

    let x = CycFieldElem::from_rat(p, Rat::zero())?;
    let y = CycFieldElem::from_rat(p, Rat::new(BigInt::from(-1), BigInt::from(2))?)?;
    let q = jac.point_divisor(&AffinePoint::finite(x, y))?;

    let cq = jac.cm_action(&q)?;
    println!("Q        ~ {q}");
    println!("zeta(Q)  ~ {cq}");
    println!("zeta(Q) = Q: {}", cq == q);
    println!("(1 - zeta)·Q = 0: {}", jac.sub(&q, &cq)?.is_identity());

    // A divisor with an honest orbit: the class of (zeta, sqrt(5)/2),
    // with sqrt(5) = -1 - 2*zeta^2 - 2*zeta^3 in the zeta-basis.
    let sqrt5 = CycFieldElem::new(
        p,
        vec![
            Rat::from_int(-1),
            Rat::zero(),
            Rat::from_int(-2),
            Rat::from_int(-2),
        ],
    )?;
    let half = CycFieldElem::from_rat(p, Rat::new(BigInt::from(1), BigInt::from(2))?)?;
    let pt = AffinePoint::finite(CycFieldElem::zeta(p)?, sqrt5.mul(&half));
    let mut d = jac.point_divisor(&pt)?;
    println!("\norbit of the class of (zeta, sqrt(5)/2) under zeta:");
    for step in 0..=p {
        println!("  zeta^{step}: {d}");
        d = jac.cm_action(&d)?;
    }
    Ok(())
}
