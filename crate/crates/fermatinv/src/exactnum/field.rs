//! The exact-field contract shared by every coefficient domain.
//!
//! Elements of parametrized fields (a prime modulus, a quadratic radicand,
//! a root-of-unity order) carry their parameters with them, so identities
//! are derived from an existing element via `zero_like`/`one_like` instead
//! of free-standing constructors. Binary operations require both operands
//! to share parameters and panic otherwise; public entry points validate
//! parameters up front and report [`crate::Error::FieldMismatch`].

use std::fmt::{Debug, Display};

/// Exact field arithmetic: no rounding, no precision loss, equality is
/// decidable. Implemented by the rationals, quadratic fields, cyclotomic
/// fields, prime fields, and quadratic extensions of prime fields.
pub trait ExactField: Clone + PartialEq + Debug + Display {
    /// Additive identity with the same field parameters as `self`.
    fn zero_like(&self) -> Self;

    /// Multiplicative identity with the same field parameters as `self`.
    fn one_like(&self) -> Self;

    fn is_zero(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;

    fn sub(&self, rhs: &Self) -> Self;

    fn mul(&self, rhs: &Self) -> Self;

    fn neg(&self) -> Self;

    /// Multiplicative inverse; `None` exactly when `self` is zero.
    fn inv(&self) -> Option<Self>;

    /// Image of `n` under the canonical ring map from the integers.
    fn from_i64_like(&self, n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Fields in which square roots are decidable.
pub trait ExactSqrt: ExactField {
    /// A square root of `self` in the field, or `None` if none exists.
    /// When both roots exist the implementation picks a canonical one.
    fn sqrt(&self) -> Option<Self>;
}

/// Finite fields that can be exhaustively enumerated.
pub trait FiniteExactField: ExactField {
    /// Number of elements q.
    fn field_size(&self) -> u64;

    fn characteristic(&self) -> u64;

    /// All q elements, in a fixed deterministic order.
    fn enumerate_like(&self) -> Vec<Self>;
}
