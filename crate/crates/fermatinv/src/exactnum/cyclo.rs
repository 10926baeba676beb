//! Arithmetic in the cyclotomic field Q(ζ_p) for an odd prime p, in the
//! power basis 1, ζ, …, ζ^(p−2) modulo the p-th cyclotomic polynomial.

use std::fmt;

use super::factor::is_prime_u64;
use super::field::ExactField;
use super::rat::Rat;

/// An element of Q(ζ_p), stored as p−1 rational coordinates over the power
/// basis. Elements carry p; binary operations require both operands to
/// share it.
#[derive(Clone, PartialEq, Eq)]
pub struct CycFieldElem {
    p: u64,
    /// coeffs[i] multiplies ζ^i; length is exactly p−1.
    coeffs: Vec<Rat>,
}

impl CycFieldElem {
    pub fn new(p: u64, coeffs: Vec<Rat>) -> crate::Result<Self> {
        if p < 3 || !is_prime_u64(p) {
            return Err(crate::Error::InvalidInput(format!(
                "root-of-unity order {p} must be an odd prime"
            )));
        }
        if coeffs.len() != (p - 1) as usize {
            return Err(crate::Error::InvalidInput(format!(
                "expected {} coordinates for p = {p}, got {}",
                p - 1,
                coeffs.len()
            )));
        }
        Ok(CycFieldElem { p, coeffs })
    }

    pub fn from_rat(p: u64, r: Rat) -> crate::Result<Self> {
        let mut coeffs = vec![Rat::zero(); (p - 1) as usize];
        coeffs[0] = r;
        CycFieldElem::new(p, coeffs)
    }

    /// The primitive root ζ_p.
    pub fn zeta(p: u64) -> crate::Result<Self> {
        let mut z = CycFieldElem::from_rat(p, Rat::zero())?;
        z.coeffs[1] = Rat::one();
        Ok(z)
    }

    /// ζ^e for any integer exponent (reduced mod p).
    pub fn zeta_pow(p: u64, e: i64) -> crate::Result<Self> {
        let z = CycFieldElem::zeta(p)?;
        let e = e.rem_euclid(p as i64) as u64;
        Ok(z.pow_u(e))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// True when all coordinates above the constant one vanish.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| ExactField::is_zero(c))
    }

    /// The constant coordinate when the element is rational.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Galois action σ_a: ζ ↦ ζ^a, for a not divisible by p.
    pub fn galois(&self, a: u64) -> crate::Result<Self> {
        if a % self.p == 0 {
            return Err(crate::Error::InvalidInput(format!(
                "galois exponent {a} is divisible by p = {}",
                self.p
            )));
        }
        let p = self.p as usize;
        // Accumulate over exponents 0..p−1, then fold ζ^(p−1).
        let mut acc = vec![Rat::zero(); p];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = (i * (a as usize)) % p;
            acc[e] = &acc[e] + c;
        }
        Ok(Self::fold_top(self.p, acc))
    }

    /// Complex conjugation ζ ↦ ζ^(p−1).
    pub fn conj(&self) -> Self {
        self.galois(self.p - 1).expect("p-1 is coprime to p")
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Norm to Q: the product of all p−1 Galois conjugates.
    pub fn norm(&self) -> Rat {
        let mut prod = self.clone();
        for a in 2..self.p {
            prod = prod.mul(&self.galois(a).unwrap());
        }
        prod.as_rational()
            .expect("product over the full Galois orbit is rational")
    }

    /// Reduces an exponent-indexed accumulator of length p (exponents
    /// 0..p−1) into the power basis using ζ^(p−1) = −(1 + ζ + … + ζ^(p−2)).
    fn fold_top(p: u64, mut acc: Vec<Rat>) -> Self {
        let n =(p - 1) as usize;
        let top = acc.pop().expect("accumulator has length p");
        if !ExactField::is_zero(&top) {
            for c in acc.iter_mut() {
                *c = &*c - &top;
            }
        }
        debug_assert_eq!(acc.len(), n);
        CycFieldElem { p, coeffs: acc }
    }

    fn assert_same_field(&self, rhs: &Self) {
        assert_eq!(
            self.p, rhs.p,
            "cyclotomic field mismatch: p = {} vs p = {}",
            self.p, rhs.p
        );
    }
}

/// Product in Q(ζ_p), validating that both factors share p.
pub fn cyc_mul(x: &CycFieldElem, y: &CycFieldElem) -> crate::Result<CycFieldElem> {
    if x.p != y.p {
        return Err(crate::Error::FieldMismatch(format!(
            "cyclotomic orders {} and {} differ",
            x.p, y.p
        )));
    }
    Ok(x.mul(y))
}

/// Norm from Q(ζ_p) to Q.
pub fn cyc_norm(x: &CycFieldElem) -> Rat {
    x.norm()
}

impl fmt::Display for CycFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if ExactField::is_zero(c) {
                continue;
            }
            let t = match i {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{i}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for CycFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (p={})", self.p)
    }
}

impl ExactField for CycFieldElem {
    fn zero_like(&self) -> Self {
        CycFieldElem {
            p: self.p,
            coeffs: vec![Rat::zero(); self.coeffs.len()],
        }
    }

    fn one_like(&self) -> Self {
        let mut coeffs = vec![Rat::zero(); self.coeffs.len()];
        coeffs[0] = Rat::one();
        CycFieldElem { p: self.p, coeffs }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| ExactField::is_zero(c))
    }

    fn add(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycFieldElem { p: self.p, coeffs }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycFieldElem { p: self.p, coeffs }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        let p = self.p as usize;
        // Convolve, reducing exponents mod p on the fly (ζ^p = 1), then
        // fold the ζ^(p−1) slot through the cyclotomic relation.
        let mut acc = vec![Rat::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if ExactField::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if ExactField::is_zero(b) {
                    continue;
                }
                let e = (i + j) % p;
                acc[e] = &acc[e] + &(a * b);
            }
        }
        Self::fold_top(self.p, acc)
    }

    fn neg(&self) -> Self {
        CycFieldElem {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn inv(&self) -> Option<Self> {
        if ExactField::is_zero(self) {
            return None;
        }
        // x^{-1} = (∏_{a≥2} σ_a(x)) / N(x).
        let mut prod = self.one_like();
        for a in 2..self.p {
            prod = prod.mul(&self.galois(a).unwrap());
        }
        let n = self.mul(&prod).as_rational().expect("norm is rational");
        let n_inv = n.inv().expect("nonzero element has nonzero norm");
        let scale = CycFieldElem::from_rat(self.p, n_inv).unwrap();
        Some(prod.mul(&scale))
    }

    fn from_i64_like(&self, n: i64) -> Self {
        CycFieldElem::from_rat(self.p, Rat::from_int(n)).unwrap()
    }
}
