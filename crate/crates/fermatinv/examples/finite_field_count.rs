//! Point counts on jacobians over small prime fields by exhausting the
//! Mumford pairs, and the Lagrange consequence m·D = 0.

use fermatinv::curves::{fermat_model, AffinePoint, HyperellipticCurve};
use fermatinv::exactnum::{ExactField, Fp};
use fermatinv::jacobian::{jacobian_order_finite_field, Jacobian};
use fermatinv::poly::Poly;

fn main() -> fermatinv::Result<()> {
    let model = fermat_model(5)?;
    println!("jacobian orders of the reduced p = 5 model:");
    for q in [3u64, 7, 11, 13, 101] {
        let curve = model.hyper_over(&Fp::new(q, 0)?)?;
        println!("  |J(F_{q})| = {}", jacobian_order_finite_field(&curve)?);
    }

    // A custom curve given by its coefficient list, y² = x⁵ + x + 1.
    let q = 31u64;
    let coeffs: Vec<Fp> = [1i128, 1, 0, 0, 0, 1]
        .iter()
        .map(|&c| Fp::new(q, c))
        .collect::<fermatinv::Result<_>>()?;
    let curve = HyperellipticCurve::new(Poly::new(coeffs))?;
    let m = jacobian_order_finite_field(&curve)?;
    println!("\ny^2 = x^5 + x + 1 over F_{q}: |J| = {m}");

    // Every class dies under multiplication by the group order.
    let jac = Jacobian::new(curve);
    let mut checked = 0;
    for x in 0..q {
        let xf = Fp::new(q, x as i128)?;
        let fx = jac.curve().f().eval(&xf);
        for y in 1..q {
            let yf = Fp::new(q, y as i128)?;
            if yf.mul(&yf) == fx {
                let d = jac.point_divisor(&AffinePoint::finite(xf.clone(), yf))?;
                assert!(jac.scalar_mul(m as i64, &d)?.is_identity());
                checked += 1;
                break;
            }
        }
        if checked == 10 {
            break;
        }
    }
    println!("m·D = 0 for {checked} point classes D");
    Ok(())
}
