//! Arithmetic in quadratic fields Q(√d) for squarefree d ≠ 0, 1.

use std::fmt;

use num_bigint::BigInt;

use super::field::{ExactField, ExactSqrt};
use super::rat::Rat;

/// An element a + b√d of Q(√d). Elements carry d; binary operations
/// require both operands to share it.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadFieldElem {
    d: i128,
    a: Rat,
    b: Rat,
}

impl QuadFieldElem {
    /// `a + b√d`. d must be squarefree and ≠ 0, 1; small square divisors
    /// are rejected outright.
    pub fn new(d: i128, a: Rat, b: Rat) -> crate::Result<Self> {
        if d == 0 || d == 1 {
            return Err(crate::Error::InvalidInput(format!(
                "radicand {d} does not generate a quadratic field"
            )));
        }
        for q in 2i128..=97 {
            if d % (q * q) == 0 {
                return Err(crate::Error::InvalidInput(format!(
                    "radicand {d} is divisible by {}",
                    q * q
                )));
            }
        }
        Ok(QuadFieldElem { d, a, b })
    }

    pub fn from_rat(d: i128, a: Rat) -> crate::Result<Self> {
        QuadFieldElem::new(d, a, Rat::zero())
    }

    /// √d itself.
    pub fn sqrt_d(d: i128) -> crate::Result<Self> {
        QuadFieldElem::new(d, Rat::zero(), Rat::one())
    }

    pub fn d(&self) -> i128 {
        self.d
    }

    /// Rational part.
    pub fn a(&self) -> &Rat {
        &self.a
    }

    /// Coefficient of √d.
    pub fn b(&self) -> &Rat {
        &self.b
    }

    /// The nontrivial Galois conjugate a − b√d.
    pub fn conj(&self) -> Self {
        QuadFieldElem {
            d: self.d,
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// Field norm a² − d·b² (multiplicative, rational-valued).
    pub fn norm(&self) -> Rat {
        let d = Rat::from_int(BigInt::from(self.d));
        &(&self.a * &self.a) - &(&d * &(&self.b * &self.b))
    }

    /// Field trace 2a.
    pub fn trace(&self) -> Rat {
        &self.a + &self.a
    }

    /// True when the element is a rational number.
    pub fn is_rational(&self) -> bool {
        use num_traits::Zero;
        self.b.0.is_zero()
    }

    fn assert_same_field(&self, rhs: &Self) {
        assert_eq!(
            self.d, rhs.d,
            "quadratic field mismatch: sqrt({}) vs sqrt({})",
            self.d, rhs.d
        );
    }
}

impl fmt::Display for QuadFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Zero;
        if self.b.0.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.0.is_zero() {
            return write!(f, "{}*sqrt({})", self.b, self.d);
        }
        if self.b.is_negative() {
            write!(f, "{} - {}*sqrt({})", self.a, self.b.abs(), self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl fmt::Debug for QuadFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl ExactField for QuadFieldElem {
    fn zero_like(&self) -> Self {
        QuadFieldElem {
            d: self.d,
            a: Rat::zero(),
            b: Rat::zero(),
        }
    }

    fn one_like(&self) -> Self {
        QuadFieldElem {
            d: self.d,
            a: Rat::one(),
            b: Rat::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        use num_traits::Zero;
        self.a.0.is_zero() && self.b.0.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        QuadFieldElem {
            d: self.d,
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        QuadFieldElem {
            d: self.d,
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        let d = Rat::from_int(BigInt::from(self.d));
        QuadFieldElem {
            d: self.d,
            a: &(&self.a * &rhs.a) + &(&d * &(&self.b * &rhs.b)),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.a),
        }
    }

    fn neg(&self) -> Self {
        QuadFieldElem {
            d: self.d,
            a: -&self.a,
            b: -&self.b,
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // 1/(a + b√d) = (a − b√d)/norm; the norm of a nonzero element is
        // nonzero because d is not a rational square.
        let n = self.norm().inv().expect("nonzero element with zero norm");
        let c = self.conj();
        Some(QuadFieldElem {
            d: self.d,
            a: &c.a * &n,
            b: &c.b * &n,
        })
    }

    fn from_i64_like(&self, n: i64) -> Self {
        QuadFieldElem {
            d: self.d,
            a: Rat::from_int(n),
            b: Rat::zero(),
        }
    }
}

impl ExactSqrt for QuadFieldElem {
    fn sqrt(&self) -> Option<Self> {
        use num_traits::Zero;
        if self.is_zero() {
            return Some(self.clone());
        }
        let d = Rat::from_int(BigInt::from(self.d));
        if self.b.0.is_zero() {
            // √(a): rational square, or a = d·s² giving s√d.
            if let Some(r) = self.a.sqrt() {
                return Some(QuadFieldElem {
                    d: self.d,
                    a: r,
                    b: Rat::zero(),
                });
            }
            let quot = &self.a * &d.inv().unwrap();
            if let Some(s) = quot.sqrt() {
                return Some(QuadFieldElem {
                    d: self.d,
                    a: Rat::zero(),
                    b: s,
                });
            }
            return None;
        }
        // (x + y√d)² = a + b√d with b ≠ 0 forces y = b/(2x) and
        // x² = (a ± √(a² − d·b²))/2, both square roots rational.
        let n = self.norm().sqrt()?;
        let half = Rat::parse("1/2").unwrap();
        for root in [n.clone(), -&n] {
            let x2 = &(&self.a + &root) * &half;
            if let Some(x) = x2.sqrt() {
                if !x.0.is_zero() {
                    let y = &self.b * &(&x + &x).inv().unwrap();
                    let cand = QuadFieldElem {
                        d: self.d,
                        a: x,
                        b: y,
                    };
                    if cand.mul(&cand) == *self {
                        return Some(cand);
                    }
                }
            }
        }
        None
    }
}
