//! Cyclotomic units of the p-th cyclotomic field, Kummer equivalence of
//! their exponent vectors mod p, counts of the resulting degree-p Kummer
//! extensions of the real subfield, and irregular primes via exact
//! Bernoulli numbers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::json;

use crate::exactnum::{is_prime_u64, CycFieldElem, ExactField, Rat};

/// A unit written in the generator basis ξ_a, a = 2, …, (p−1)/2, where
/// ξ_a = ζ^((1−a)/2)·(1 − ζ^a)/(1 − ζ), together with its field element.
#[derive(Clone, PartialEq, Debug)]
pub struct CyclotomicUnit {
    p: u64,
    expvec: Vec<i64>,
    element: CycFieldElem,
}

impl CyclotomicUnit {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Exponents with respect to the generators ξ_2, …, ξ_(p−1)/2.
    pub fn expvec(&self) -> &[i64] {
        &self.expvec
    }

    pub fn element(&self) -> &CycFieldElem {
        &self.element
    }

    /// Fixed by ζ ↦ ζ^(p−1), i.e. by complex conjugation.
    pub fn is_real(&self) -> crate::Result<bool> {
        Ok(self.element.galois(self.p - 1)? == self.element)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "expvec": self.expvec,
            "element": self
                .element
                .coeffs()
                .iter()
                .map(|c| c.to_fraction_string())
                .collect::<Vec<_>>(),
        })
    }
}

/// Number of generators, (p − 3)/2.
pub fn generator_count(p: u64) -> usize {
    ((p - 3) / 2) as usize
}

fn check_p(p: u64) -> crate::Result<()> {
    if p < 5 || !is_prime_u64(p) {
        return Err(crate::Error::InvalidInput(format!(
            "p = {p} must be a prime at least 5"
        )));
    }
    Ok(())
}

/// The units ξ_a for a = 2, …, (p−1)/2, each with a standard basis
/// exponent vector.
pub fn cyclotomic_unit_generators(p: u64) -> crate::Result<Vec<CyclotomicUnit>> {
    check_p(p)?;
    let t = generator_count(p);
    let one = CycFieldElem::from_rat(p, Rat::one())?;
    let zeta = CycFieldElem::zeta(p)?;
    let den = one.sub(&zeta);
    let den_inv = den.inv().expect("1 - zeta is nonzero");
    let half = ((p + 1) / 2) as i128; // inverse of 2 mod p
    let mut out = Vec::with_capacity(t);
    for a in 2..=(p - 1) / 2 {
        let e = ((1 - a as i128) * half).rem_euclid(p as i128) as i64;
        let za = CycFieldElem::zeta_pow(p, a as i64)?;
        let elt = CycFieldElem::zeta_pow(p, e)?
            .mul(&one.sub(&za))
            .mul(&den_inv);
        let mut expvec = vec![0i64; t];
        expvec[(a - 2) as usize] = 1;
        out.push(CyclotomicUnit {
            p,
            expvec,
            element: elt,
        });
    }
    Ok(out)
}

/// The unit Π ξ_a^(e_a) for an exponent vector of length (p−3)/2.
pub fn unit_from_expvec(p: u64, expvec: &[i64]) -> crate::Result<CyclotomicUnit> {
    check_p(p)?;
    let gens = cyclotomic_unit_generators(p)?;
    if expvec.len() != gens.len() {
        return Err(crate::Error::InvalidInput(format!(
            "expected {} exponents, got {}",
            gens.len(),
            expvec.len()
        )));
    }
    let mut elt = CycFieldElem::from_rat(p, Rat::one())?;
    for (g, &e) in gens.iter().zip(expvec) {
        let base = if e < 0 {
            g.element.inv().expect("units are invertible")
        } else {
            g.element.clone()
        };
        elt = elt.mul(&base.pow_u(e.unsigned_abs()));
    }
    Ok(CyclotomicUnit {
        p,
        expvec: expvec.to_vec(),
        element: elt,
    })
}

/// Norm to the rationals: the product of all Galois conjugates.
pub fn cyc_norm(x: &CycFieldElem) -> crate::Result<Rat> {
    let mut acc = x.clone();
    for a in 2..x.p() {
        acc = acc.mul(&x.galois(a)?);
    }
    acc.as_rational().ok_or_else(|| {
        crate::Error::InternalFieldError("norm did not land in the rationals".into())
    })
}

/// Witness that β·γ^(−p) lies in the subgroup generated by α modulo p-th
/// powers: expvec(β) = k·expvec(α) + p·expvec(γ).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KummerWitness {
    pub k: u64,
    pub gamma_expvec: Vec<i64>,
}

/// Finds k ∈ [1, p−1] with expvec(β) ≡ k·expvec(α) mod p, if any.
pub fn kummer_equivalent(
    alpha: &CyclotomicUnit,
    beta: &CyclotomicUnit,
) -> crate::Result<Option<KummerWitness>> {
    if alpha.p != beta.p {
        return Err(crate::Error::FieldMismatch(format!(
            "units over p = {} and p = {}",
            alpha.p, beta.p
        )));
    }
    let p = alpha.p as i64;
    for k in 1..p {
        let mut gamma = Vec::with_capacity(alpha.expvec.len());
        let mut ok = true;
        for (&va, &vb) in alpha.expvec.iter().zip(&beta.expvec) {
            let diff = vb - k * va;
            if diff.rem_euclid(p) != 0 {
                ok = false;
                break;
            }
            gamma.push(diff / p);
        }
        if ok {
            return Ok(Some(KummerWitness {
                k: k as u64,
                gamma_expvec: gamma,
            }));
        }
    }
    Ok(None)
}

/// Count of degree-p Kummer extensions cut out by cyclotomic units:
/// (p^t − 1)/(p − 1) lines in an F_p-space of dimension t = (p−3)/2.
/// Only meaningful when the units are independent modulo p-th powers,
/// which the caller must assert.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubextensionReport {
    pub p: u64,
    pub t: u64,
    pub count: BigInt,
}

impl SubextensionReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({ "p": self.p, "t": self.t, "count": self.count.to_string() })
    }
}

pub fn subextension_count(p: u64, vandiver_assumed: bool) -> crate::Result<SubextensionReport> {
    check_p(p)?;
    if !vandiver_assumed {
        return Err(crate::Error::VandiverNotAssumed);
    }
    let t = (p - 3) / 2;
    let count = (BigInt::from(p).pow(t as u32) - 1) / (BigInt::from(p) - 1);
    Ok(SubextensionReport { p, t, count })
}

/// B_0, …, B_max by the recurrence Σ_j C(m+1, j)·B_j = 0 (B_1 = −1/2).
pub fn bernoulli_numbers_exact(max_index: usize) -> crate::Result<Vec<Rat>> {
    if max_index > 200 {
        return Err(crate::Error::BoundExceeded(format!(
            "index {max_index} above the supported 200"
        )));
    }
    let mut b: Vec<Rat> = Vec::with_capacity(max_index + 1);
    b.push(Rat::one());
    for m in 1..=max_index {
        // binom holds C(m+1, j) as j runs over 0..=m.
        let mut binom = BigInt::one();
        let mut sum = Rat::zero();
        for (j, bj) in b.iter().enumerate() {
            sum = sum.add(&bj.mul(&Rat::from_int(binom.clone())));
            binom = &binom * BigInt::from((m + 1 - j) as u64) / BigInt::from((j + 1) as u64);
        }
        let coeff = Rat::new(BigInt::from(-1), BigInt::from((m + 1) as u64))?;
        b.push(sum.mul(&coeff));
    }
    Ok(b)
}

/// B_0, …, B_(p−3) mod p via the same recurrence in F_p; every such
/// Bernoulli number is p-integral by von Staudt–Clausen.
pub fn bernoulli_numbers_mod_p(p: u64) -> crate::Result<Vec<u64>> {
    check_p(p)?;
    let inv = |n: u64| -> u64 {
        // Fermat inversion; n is nonzero mod p.
        let mut acc = 1u128;
        let mut base = (n % p) as u128;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p as u128;
            }
            base = base * base % p as u128;
            e >>= 1;
        }
        acc as u64
    };
    let top = (p - 3) as usize;
    let mut b: Vec<u64> = Vec::with_capacity(top + 1);
    b.push(1);
    for m in 1..=top {
        let mut binom = 1u64; // C(m+1, j) mod p, j = 0..m; m+1 < p keeps it exact
        let mut sum = 0u64;
        for (j, &bj) in b.iter().enumerate() {
            sum = (sum + (binom as u128 * bj as u128 % p as u128) as u64) % p;
            binom = (binom as u128 * ((m + 1 - j) as u128) % p as u128) as u64;
            binom = (binom as u128 * inv((j + 1) as u64) as u128 % p as u128) as u64;
        }
        let neg_inv = p - inv((m + 1) as u64);
        b.push((sum as u128 * neg_inv as u128 % p as u128) as u64);
    }
    Ok(b)
}

/// Irregularity of a prime: the even k in [2, p−3] with p dividing the
/// numerator of B_k.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IrregularityReport {
    pub p: u64,
    pub irregular: bool,
    pub witnesses: Vec<u64>,
}

impl IrregularityReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({ "p": self.p, "irregular": self.irregular, "witnesses": self.witnesses })
    }
}

pub fn irregularity(p: u64) -> crate::Result<IrregularityReport> {
    check_p(p)?;
    if p > 200 {
        return Err(crate::Error::BoundExceeded(format!(
            "p = {p} above the supported 200"
        )));
    }
    let bern = bernoulli_numbers_exact((p - 3) as usize)?;
    let pb = BigInt::from(p);
    let witnesses: Vec<u64> = (2..=p - 3)
        .step_by(2)
        .filter(|&k| bern[k as usize].numer().mod_floor(&pb).is_zero())
        .collect();
    Ok(IrregularityReport {
        p,
        irregular: !witnesses.is_empty(),
        witnesses,
    })
}
