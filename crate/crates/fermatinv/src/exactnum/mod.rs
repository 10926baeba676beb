//! Exact arithmetic backends: rationals, residue rings, quadratic and
//! cyclotomic fields, small finite fields, and integer factorization
//! helpers. Everything downstream (polynomials, curves, divisor classes)
//! is generic over the [`ExactField`] contract defined here.

mod cyclo;
mod factor;
mod field;
mod finite;
mod modint;
mod quad;
mod rat;

pub use cyclo::{cyc_mul, cyc_norm, CycFieldElem};
pub use factor::{
    factorize, is_prime, is_prime_u64, kronecker_symbol_two, legendre_symbol, primes_up_to,
    squarefree_part, DEFAULT_FACTOR_BOUND,
};
pub use field::{ExactField, ExactSqrt, FiniteExactField};
pub use finite::{Fp, Fq2};
pub use modint::{ext_gcd, ext_gcd_first, ModInt};
pub use quad::QuadFieldElem;
pub use rat::{perfect_sqrt, Rat};
