//! Residue arithmetic modulo an arbitrary positive integer.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// An element of Z/nZ. The residue is kept in `[0, modulus)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModInt {
    value: BigInt,
    modulus: BigInt,
}

impl ModInt {
    pub fn new(value: impl Into<BigInt>, modulus: impl Into<BigInt>) -> crate::Result<Self> {
        let modulus = modulus.into();
        if modulus <= BigInt::one() {
            return Err(crate::Error::InvalidInput(format!(
                "modulus must be at least 2, got {modulus}"
            )));
        }
        Ok(ModInt {
            value: value.into().mod_floor(&modulus),
            modulus,
        })
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    fn check(&self, rhs: &Self) -> crate::Result<()> {
        if self.modulus != rhs.modulus {
            return Err(crate::Error::FieldMismatch(format!(
                "moduli {} and {} differ",
                self.modulus, rhs.modulus
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> crate::Result<Self> {
        self.check(rhs)?;
        Ok(ModInt {
            value: (&self.value + &rhs.value).mod_floor(&self.modulus),
            modulus: self.modulus.clone(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> crate::Result<Self> {
        self.check(rhs)?;
        Ok(ModInt {
            value: (&self.value - &rhs.value).mod_floor(&self.modulus),
            modulus: self.modulus.clone(),
        })
    }

    pub fn mul(&self, rhs: &Self) -> crate::Result<Self> {
        self.check(rhs)?;
        Ok(ModInt {
            value: (&self.value * &rhs.value).mod_floor(&self.modulus),
            modulus: self.modulus.clone(),
        })
    }

    pub fn pow(&self, exp: &BigInt) -> crate::Result<Self> {
        if exp.is_negative() {
            let inv = self.inv()?;
            return inv.pow(&-exp);
        }
        Ok(ModInt {
            value: self.value.modpow(exp, &self.modulus),
            modulus: self.modulus.clone(),
        })
    }

    /// Inverse modulo the modulus; errors when gcd(value, modulus) > 1.
    pub fn inv(&self) -> crate::Result<Self> {
        let (g, x) = ext_gcd_first(&self.value, &self.modulus);
        if !g.is_one() {
            return Err(crate::Error::InternalFieldError(format!(
                "{} is not invertible mod {} (gcd {})",
                self.value, self.modulus, g
            )));
        }
        Ok(ModInt {
            value: x.mod_floor(&self.modulus),
            modulus: self.modulus.clone(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl fmt::Display for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Debug for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Extended Euclid returning (gcd, x) with x*a ≡ gcd (mod b), gcd ≥ 0.
pub fn ext_gcd_first(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let s2 = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.is_negative() {
        (-r0, -s0)
    } else {
        (r0, s0)
    }
}

/// Extended Euclid returning (gcd, x, y) with x*a + y*b = gcd ≥ 0.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (g, x) = ext_gcd_first(a, b);
    if b.is_zero() {
        return (g, x, BigInt::zero());
    }
    let y = (&g - &x * a) / b;
    (g, x, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_canonical_residue() {
        let m = ModInt::new(-3, 7).unwrap();
        assert_eq!(m.value(), &BigInt::from(4));
    }

    #[test]
    fn test_modulus_mismatch() {
        let a = ModInt::new(1, 5).unwrap();
        let b = ModInt::new(1, 7).unwrap();
        assert!(matches!(a.add(&b), Err(crate::Error::FieldMismatch(_))));
    }

    #[test]
    fn test_pow_and_inv() {
        let a = ModInt::new(22, 25).unwrap();
        assert_eq!(
            a.pow(&BigInt::from(5)).unwrap().value(),
            &BigInt::from(7),
            "22^5 = 5153632 = 206145*25 + 7"
        );
        let i = a.inv().unwrap();
        assert_eq!(a.mul(&i).unwrap().value(), &BigInt::one());
        assert!(ModInt::new(5, 25).unwrap().inv().is_err());
    }

    #[test]
    fn test_ext_gcd() {
        let (g, x, y) = ext_gcd(&BigInt::from(240), &BigInt::from(46));
        assert_eq!(g, BigInt::from(2));
        assert_eq!(x * 240 + y * 46, BigInt::from(2));
        let (g, x, y) = ext_gcd(&BigInt::from(-5), &BigInt::from(3));
        assert_eq!(&x * (-5) + &y * 3, g);
    }
}
