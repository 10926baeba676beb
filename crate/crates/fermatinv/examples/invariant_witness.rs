//! The full pipeline on one witness: the point (u, v) = (−2, √−127/2) on
//! v² = 4u⁵ + 1 divided by 5, the resulting norm-2 ideal a with
//! a⁵ = (x0), and the nonvanishing of its class in the S-class group —
//! plus a two-prime reduction certificate that the point has infinite
//! order.

use fermatinv::exactnum::DEFAULT_FACTOR_BOUND;
use fermatinv::invariant::{divide_ideal, make_candidate, psi};

fn main() -> fermatinv::Result<()> {
    let (p, u) = (5u64, -2i64);
    let cand = make_candidate(p, u, DEFAULT_FACTOR_BOUND)?;
    println!(
        "4·({u})^{p} + 1 = {} = m²·d with m = {}, d = {}",
        cand.d_raw(),
        cand.m(),
        cand.d()
    );
    println!("x0 = (1 + m·sqrt(d))/2 = {}", cand.x0());

    let a = divide_ideal(&cand)?;
    println!("a = (u, x0): hnf {:?}, norm {}", a.hnf(), a.norm());
    println!("a^{p} = (x0): {}", a.pow(p as u32)?.hnf() == fermatinv::quadclass::QuadIdeal::principal(cand.d(), cand.x0())?.hnf());

    let rep = psi(p, u, DEFAULT_FACTOR_BOUND)?;
    println!("\nh({}) = {}", rep.d, rep.h);
    println!("{p} is {} in Q(sqrt({}))", rep.p_splitting.as_str(), rep.d);
    println!("|Cl/S| = {}", rep.s_quotient_order);
    println!("orders of psi(kP), k = 0..{}: {:?}", p - 1, rep.psi_tuple_orders);
    println!("c = class of a mod S has order {}", rep.c_order);
    println!("invariant nonvanishing: {}", rep.nonvanishing);

    println!("\ninfinite order: {}", rep.infinite_order.as_str());
    if let Some(cert) = &rep.certificate {
        println!(
            "  certificate: order {} mod {} vs order {} mod {} (jacobian orders {}, {})",
            cert.n1, cert.q1, cert.n2, cert.q2, cert.jacobian_order1, cert.jacobian_order2
        );
        println!("  {}", cert.detail);
    }
    Ok(())
}
