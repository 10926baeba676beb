//! Non-torsion certificates: a divisor class over a quadratic field whose
//! reduction orders at two odd primes of good reduction admit no common
//! torsion order has infinite order.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use serde_json::json;

use crate::curves::{rat_over, HyperellipticCurve};
use crate::exactnum::{
    is_prime_u64, legendre_symbol, ExactField, FiniteExactField, Fp, Fq2, QuadFieldElem,
};
use crate::jacobian::{count::jacobian_order_finite_field, Jacobian, MumfordDivisor};
use crate::poly::Poly;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    ProvenInfinite,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::ProvenInfinite => "proven",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of comparing reduction orders at two primes. `ProvenInfinite`
/// means no positive integer is a plausible torsion order for the divisor;
/// `Inconclusive` never asserts finiteness.
#[derive(Clone, Debug)]
pub struct NonTorsionCertificate {
    pub divisor: MumfordDivisor<QuadFieldElem>,
    pub q1: u64,
    pub q2: u64,
    /// Order of the reduction at the chosen prime above q1.
    pub n1: u64,
    /// Order of the reduction at the chosen prime above q2.
    pub n2: u64,
    pub jacobian_order1: u64,
    pub jacobian_order2: u64,
    pub verdict: Verdict,
    pub detail: String,
}

impl NonTorsionCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "divisor": self.divisor.to_json(),
            "q1": self.q1,
            "q2": self.q2,
            "n1": self.n1,
            "n2": self.n2,
            "jacobian_order1": self.jacobian_order1,
            "jacobian_order2": self.jacobian_order2,
            "verdict": self.verdict.as_str(),
            "detail": self.detail,
        })
    }
}

/// Reduces the divisor at one prime above each of q1 and q2 (the prime
/// with the smaller residue of √d when q splits) and tests whether any
/// single torsion order is compatible with both reduction orders.
pub fn certify_infinite_order(
    jac: &Jacobian<QuadFieldElem>,
    d: &MumfordDivisor<QuadFieldElem>,
    q1: u64,
    q2: u64,
) -> crate::Result<NonTorsionCertificate> {
    for q in [q1, q2] {
        if q < 3 || q % 2 == 0 || !is_prime_u64(q) {
            return Err(crate::Error::InvalidInput(format!(
                "reduction prime {q} must be an odd prime"
            )));
        }
    }
    if q1 == q2 {
        return Err(crate::Error::InvalidInput(
            "the two reduction primes must be distinct".into(),
        ));
    }
    if !jac.is_valid(d) {
        return Err(crate::Error::InvalidInput(format!(
            "{d} is not a reduced Mumford divisor on this curve"
        )));
    }

    let (n1, j1) = reduced_order(jac, d, q1)?;
    let (n2, j2) = reduced_order(jac, d, q2)?;

    let (solvable, detail) = torsion_compatibility(n1, q1, n2, q2);
    Ok(NonTorsionCertificate {
        divisor: d.clone(),
        q1,
        q2,
        n1,
        n2,
        jacobian_order1: j1,
        jacobian_order2: j2,
        verdict: if solvable {
            Verdict::Inconclusive
        } else {
            Verdict::ProvenInfinite
        },
        detail,
    })
}

/// Order of the reduced class and of the reduced jacobian at a prime
/// above q, through the residue field F_q (split) or F_q² (inert).
fn reduced_order(
    jac: &Jacobian<QuadFieldElem>,
    d: &MumfordDivisor<QuadFieldElem>,
    q: u64,
) -> crate::Result<(u64, u64)> {
    let disc = jac
        .curve()
        .f()
        .leading_coeff()
        .expect("nonzero f")
        .d();
    match legendre_symbol(&BigInt::from(disc), q) {
        0 => Err(crate::Error::RamifiedPrime(format!(
            "{q} divides the radicand {disc}"
        ))),
        1 => {
            let r = split_roots(disc, q)[0];
            order_in(jac, d, &Fp::new(q, r as i128)?)
        }
        _ => {
            let img = inert_sqrt_image(disc, q)?;
            order_in(jac, d, &img)
        }
    }
}

/// Both square roots of d mod a split prime, ascending.
pub(crate) fn split_roots(disc: i128, q: u64) -> Vec<u64> {
    (0..q)
        .filter(|&r| ((r as i128) * (r as i128) - disc).rem_euclid(q as i128) == 0)
        .collect()
}

/// The image of √d in F_q², as a multiple of the generator w.
fn inert_sqrt_image(disc: i128, q: u64) -> crate::Result<Fq2> {
    let nr = Fq2::least_nonresidue(q);
    let c = (1..q)
        .find(|&c| ((c as i128) * (c as i128) * (nr as i128) - disc).rem_euclid(q as i128) == 0)
        .ok_or_else(|| {
            crate::Error::InternalFieldError(format!(
                "no square root of {disc} in the quadratic extension of F_{q}"
            ))
        })?;
    Fq2::new(q, 0, c as i128)
}

pub(crate) fn order_in<F>(
    jac: &Jacobian<QuadFieldElem>,
    d: &MumfordDivisor<QuadFieldElem>,
    sqrt_img: &F,
) -> crate::Result<(u64, u64)>
where
    F: FiniteExactField + Hash + Eq,
{
    let f = map_poly(jac.curve().f(), sqrt_img)?;
    if !f.is_squarefree() {
        return Err(crate::Error::BadReduction(format!(
            "the model is singular over the field of size {}",
            sqrt_img.field_size()
        )));
    }
    let rjac = Jacobian::new(HyperellipticCurve::new(f)?);
    let u = map_poly(d.u(), sqrt_img)?;
    let v = map_poly(d.v(), sqrt_img)?;
    let rd = rjac.divisor(u, v).map_err(|_| {
        crate::Error::InternalFieldError(
            "reduction of a valid divisor broke the Mumford invariants".into(),
        )
    })?;
    let jorder = jacobian_order_finite_field(rjac.curve())?;
    let n = rjac.order_dividing(&rd, jorder)?;
    Ok((n, jorder))
}

fn map_poly<F: ExactField>(p: &Poly<QuadFieldElem>, sqrt_img: &F) -> crate::Result<Poly<F>> {
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| {
            let a = rat_over(c.a(), sqrt_img)?;
            let b = rat_over(c.b(), sqrt_img)?;
            Ok(a.add(&b.mul(sqrt_img)))
        })
        .collect::<crate::Result<Vec<F>>>()?;
    Ok(Poly::new(coeffs))
}

fn val_of(mut n: u64, q: u64) -> (u64, u32) {
    let mut v = 0;
    while n % q == 0 {
        n /= q;
        v += 1;
    }
    (n, v)
}

/// Whether some m ≥ 1 satisfies m = n1·q1^a = n2·q2^b, with an explanation.
fn torsion_compatibility(n1: u64, q1: u64, n2: u64, q2: u64) -> (bool, String) {
    let (a1, e11) = val_of(n1, q1);
    let (core1, e12) = val_of(a1, q2);
    let (a2, e22) = val_of(n2, q2);
    let (core2, e21) = val_of(a2, q1);
    // Any torsion order m has prime-to-qᵢ part equal to that of nᵢ.
    if core1 != core2 {
        return (
            false,
            format!(
                "reduction orders {n1} (mod {q1}) and {n2} (mod {q2}) disagree away \
                 from {q1} and {q2}: {core1} vs {core2}"
            ),
        );
    }
    if e12 < e22 {
        return (
            false,
            format!(
                "any torsion order would need {q2}-adic valuation {e22} from the \
                 reduction at {q2} but the reduction at {q1} pins it to {e12}"
            ),
        );
    }
    if e21 < e11 {
        return (
            false,
            format!(
                "any torsion order would need {q1}-adic valuation {e11} from the \
                 reduction at {q1} but the reduction at {q2} pins it to {e21}"
            ),
        );
    }
    let m = core1 * q2.pow(e12) * q1.pow(e21);
    (
        true,
        format!("a torsion order of {m} is consistent with both reductions"),
    )
}
