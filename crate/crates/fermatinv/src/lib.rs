//! Exact arithmetic on Jacobians of Fermat quotient curves.
//!
//! The crate computes, with no floating point and no probabilistic
//! shortcuts:
//!
//! - congruence criteria deciding when X^p − l has p-adic roots, and the
//!   ramification pictures they control ([`padic`]);
//! - the genus-(p−1)/2 curve y^p = x(1−x), its odd-degree hyperelliptic
//!   model v² = u^p + 1/4, and divisor arithmetic on it ([`curves`]);
//! - Mumford-coordinate divisor classes with Cantor composition, torsion
//!   bases, the root-of-unity action, point counts over small finite
//!   fields, and non-torsion certificates ([`jacobian`]);
//! - binary quadratic forms, Gauss composition, class groups, and ideal
//!   arithmetic in imaginary quadratic orders ([`quadclass`]);
//! - cyclotomic units, Kummer-power equivalence, and irregular-prime
//!   detection through exact Bernoulli numbers ([`cycunits`]);
//! - the class-invariant pipeline tying those together: integral points of
//!   shape x0 = (1 + m√d)/2, the ideal class c = [(u, x0)], and searches
//!   for parameters where it does not vanish ([`invariant`]).
//!
//! Start with the runnable examples (`cargo run --example <name>` inside
//! this crate; see the README for the list), or the `fermatinv` binary for
//! a command-line front end over the same entry points.

pub mod cli;
pub mod curves;
pub mod cycunits;
pub mod exactnum;
pub mod invariant;
pub mod jacobian;
pub mod padic;
pub mod poly;
pub mod quadclass;

mod error;

pub use error::{Error, Result};
