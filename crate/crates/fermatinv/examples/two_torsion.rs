//! Rational 2-torsion on a genus-2 curve whose quintic splits: one
//! divisor above each finite Weierstrass point, a single linear relation,
//! and the 16 classes generated by any four of them.

use fermatinv::curves::HyperellipticCurve;
use fermatinv::exactnum::Rat;
use fermatinv::jacobian::Jacobian;
use fermatinv::poly::Poly;

fn main() -> fermatinv::Result<()> {
    // y² = x(x−1)(x−2)(x−3)(x−4)
    let mut f = Poly::new(vec![Rat::one()]);
    for t in 0..5 {
        f = f.mul(&Poly::new(vec![Rat::from_int(-t), Rat::one()]));
    }
    let jac = Jacobian::new(HyperellipticCurve::new(f)?);
    let basis = jac.two_torsion_basis()?;

    let mut total = jac.identity();
    for (i, d) in basis.divisors.iter().enumerate() {
        let doubled = jac.add(d, d)?;
        println!("D{i} = {d}: 2·D{i} = 0 is {}", doubled.is_identity());
        total = jac.add(&total, d)?;
    }
    println!("D0 + D1 + D2 + D3 + D4 = 0 is {}", total.is_identity());

    // Subset sums of four independent generators: 2^4 distinct classes.
    let mut classes = Vec::new();
    for mask in 0u32..16 {
        let mut s = jac.identity();
        for (i, d) in basis.divisors.iter().take(4).enumerate() {
            if mask & (1 << i) != 0 {
                s = jac.add(&s, d)?;
            }
        }
        classes.push(s);
    }
    let distinct = classes
        .iter()
        .enumerate()
        .all(|(i, a)| classes.iter().take(i).all(|b| a != b));
    println!("16 subset sums, pairwise distinct: {distinct}");
    Ok(())
}
