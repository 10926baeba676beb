//! Small prime fields F_q and their quadratic extensions F_q², used for
//! reductions of curves and divisors at good primes.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::factor::is_prime_u64;
use super::field::{ExactField, ExactSqrt, FiniteExactField};
use super::rat::Rat;

/// An element of the prime field F_q, q an odd prime small enough for u64
/// arithmetic (q² must fit in u64, enforced as q < 2^31).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    q: u64,
    v: u64,
}

impl Fp {
    pub fn new(q: u64, v: impl Into<i128>) -> crate::Result<Self> {
        if q < 2 || q >= (1 << 31) || !is_prime_u64(q) {
            return Err(crate::Error::InvalidInput(format!(
                "{q} is not a prime below 2^31"
            )));
        }
        let v = v.into().rem_euclid(q as i128) as u64;
        Ok(Fp { q, v })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    /// Reduction of an exact rational mod q; errors when the denominator
    /// vanishes mod q.
    pub fn from_rat(q: u64, r: &Rat) -> crate::Result<Self> {
        let qi = BigInt::from(q);
        let num = r.numer().mod_floor(&qi).to_u64().unwrap();
        let den = r.denom().mod_floor(&qi).to_u64().unwrap();
        if den == 0 {
            return Err(crate::Error::BadReduction(format!(
                "denominator of {r} vanishes mod {q}"
            )));
        }
        let d = Fp::new(q, den as i128)?;
        let n = Fp::new(q, num as i128)?;
        Ok(n.mul(&d.inv().expect("nonzero denominator")))
    }

    fn assert_same_field(&self, rhs: &Self) {
        assert_eq!(self.q, rhs.q, "prime field mismatch: {} vs {}", self.q, rhs.q);
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.v, self.q)
    }
}

impl ExactField for Fp {
    fn zero_like(&self) -> Self {
        Fp { q: self.q, v: 0 }
    }

    fn one_like(&self) -> Self {
        Fp {
            q: self.q,
            v: 1 % self.q,
        }
    }

    fn is_zero(&self) -> bool {
        self.v == 0
    }

    fn add(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        Fp {
            q: self.q,
            v: (self.v + rhs.v) % self.q,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        Fp {
            q: self.q,
            v: (self.v + self.q - rhs.v) % self.q,
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        Fp {
            q: self.q,
            v: self.v * rhs.v % self.q,
        }
    }

    fn neg(&self) -> Self {
        Fp {
            q: self.q,
            v: (self.q - self.v) % self.q,
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        Some(self.pow_u(self.q - 2))
    }

    fn from_i64_like(&self, n: i64) -> Self {
        Fp {
            q: self.q,
            v: (n as i128).rem_euclid(self.q as i128) as u64,
        }
    }
}

impl ExactSqrt for Fp {
    fn sqrt(&self) -> Option<Self> {
        // Deterministic scan; fields here are small by construction of the
        // counting bounds.
        (0..self.q)
            .map(|y| Fp { q: self.q, v: y })
            .find(|y| y.mul(y) == *self)
    }
}

impl FiniteExactField for Fp {
    fn field_size(&self) -> u64 {
        self.q
    }

    fn characteristic(&self) -> u64 {
        self.q
    }

    fn enumerate_like(&self) -> Vec<Self> {
        (0..self.q).map(|v| Fp { q: self.q, v }).collect()
    }
}

/// An element a + b·w of F_q² = F_q(w), w² a fixed non-residue of F_q.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fq2 {
    q: u64,
    /// The non-residue w².
    nr: u64,
    a: u64,
    b: u64,
}

impl Fq2 {
    /// Least quadratic non-residue of F_q (q odd prime).
    pub fn least_nonresidue(q: u64) -> u64 {
        (2..q)
            .find(|&n| Fp { q, v: n }.sqrt().is_none())
            .expect("odd prime field has a non-residue")
    }

    /// Builds the extension over F_q with the least non-residue.
    pub fn new(q: u64, a: impl Into<i128>, b: impl Into<i128>) -> crate::Result<Self> {
        if q < 3 || q >= (1 << 15) || !is_prime_u64(q) {
            return Err(crate::Error::InvalidInput(format!(
                "{q} is not an odd prime below 2^15"
            )));
        }
        let nr = Self::least_nonresidue(q);
        Ok(Fq2 {
            q,
            nr,
            a: a.into().rem_euclid(q as i128) as u64,
            b: b.into().rem_euclid(q as i128) as u64,
        })
    }

    pub fn from_fp(x: &Fp) -> crate::Result<Self> {
        Fq2::new(x.q(), x.value() as i128, 0)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    fn fp(&self, v: u64) -> Fp {
        Fp { q: self.q, v }
    }

    fn assert_same_field(&self, rhs: &Self) {
        assert_eq!(
            (self.q, self.nr),
            (rhs.q, rhs.nr),
            "quadratic extension mismatch"
        );
    }
}

impl fmt::Display for Fq2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == 0 {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}+{}w", self.a, self.b)
        }
    }
}

impl fmt::Debug for Fq2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (q={}, w^2={})", self.q, self.nr)
    }
}

impl ExactField for Fq2 {
    fn zero_like(&self) -> Self {
        Fq2 { a: 0, b: 0, ..*self }
    }

    fn one_like(&self) -> Self {
        Fq2 { a: 1 % self.q, b: 0, ..*self }
    }

    fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    fn add(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        Fq2 {
            a: (self.a + rhs.a) % self.q,
            b: (self.b + rhs.b) % self.q,
            ..*self
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        Fq2 {
            a: (self.a + self.q - rhs.a) % self.q,
            b: (self.b + self.q - rhs.b) % self.q,
            ..*self
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        let q = self.q;
        let (a1, b1, a2, b2) = (self.a, self.b, rhs.a, rhs.b);
        Fq2 {
            a: (a1 * a2 % q + b1 * b2 % q * self.nr) % q,
            b: (a1 * b2 + b1 * a2) % q,
            ..*self
        }
    }

    fn neg(&self) -> Self {
        Fq2 {
            a: (self.q - self.a) % self.q,
            b: (self.q - self.b) % self.q,
            ..*self
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // (a + bw)(a − bw) = a² − nr·b² lies in F_q*.
        let n = self
            .fp(self.a)
            .mul(&self.fp(self.a))
            .sub(&self.fp(self.b).mul(&self.fp(self.b)).mul(&self.fp(self.nr)));
        let ni = n.inv().expect("norm of nonzero element is nonzero");
        Some(Fq2 {
            a: self.fp(self.a).mul(&ni).value(),
            b: self.fp(self.b).neg().mul(&ni).value(),
            ..*self
        })
    }

    fn from_i64_like(&self, n: i64) -> Self {
        Fq2 {
            a: (n as i128).rem_euclid(self.q as i128) as u64,
            b: 0,
            ..*self
        }
    }
}

impl ExactSqrt for Fq2 {
    fn sqrt(&self) -> Option<Self> {
        self.enumerate_like().into_iter().find(|y| y.mul(y) == *self)
    }
}

impl FiniteExactField for Fq2 {
    fn field_size(&self) -> u64 {
        self.q * self.q
    }

    fn characteristic(&self) -> u64 {
        self.q
    }

    fn enumerate_like(&self) -> Vec<Self> {
        let mut out = Vec::with_capacity((self.q * self.q) as usize);
        for a in 0..self.q {
            for b in 0..self.q {
                out.push(Fq2 { a, b, ..*self });
            }
        }
        out
    }
}
