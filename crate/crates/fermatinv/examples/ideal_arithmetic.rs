//! Ideal arithmetic in an imaginary quadratic order: two-element
//! generation, Hermite normal form, products, powers, conjugates, and the
//! correspondence with form classes.

use fermatinv::exactnum::{QuadFieldElem, Rat};
use fermatinv::quadclass::{class_group, QuadIdeal};
use num_bigint::BigInt;

fn main() -> fermatinv::Result<()> {
    let d = -127i128;
    let half = Rat::new(BigInt::from(1), BigInt::from(2))?;
    // x0 = (1 + sqrt(-127))/2, an algebraic integer of norm 32 = 2^5.
    let x0 = QuadFieldElem::new(d, half.clone(), half)?;
    println!("x0 = {x0}, trace {}, norm {}", x0.trace(), x0.norm());

    let two = QuadFieldElem::from_rat(d, Rat::from_int(2))?;
    let a = QuadIdeal::generated(d, &[two, x0.clone()])?;
    println!("a = (2, x0): hnf {:?}, norm {}", a.hnf(), a.norm());

    let a5 = a.pow(5)?;
    let px0 = QuadIdeal::principal(d, &x0)?;
    println!("a^5: hnf {:?}, norm {}", a5.hnf(), a5.norm());
    println!("(x0): hnf {:?} — equal: {}", px0.hnf(), a5.hnf() == px0.hnf());

    // a times its conjugate is the full norm ideal (2).
    let norm_ideal = a.mul(&a.conj())?;
    println!("a·ā: hnf {:?}", norm_ideal.hnf());

    // The class of a has order 5 in Cl(-127).
    let cg = class_group(d)?;
    let class = a.to_class()?;
    println!(
        "class of a: ({}, {}, {}), order {}",
        class.a(),
        class.b(),
        class.c(),
        cg.order_of(&class)?
    );
    Ok(())
}
