//! Integral ideals of imaginary quadratic fields in Hermite form
//! nZ + (b + cω)Z, prime splitting, and the ideal/form correspondence.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::exactnum::{
    is_prime_u64, kronecker_symbol_two, legendre_symbol, ExactField, QuadFieldElem, Rat,
};
use crate::quadclass::forms::{gcd_i, xgcd_i, QuadForm};

/// Largest prime accepted by the splitting root scan.
const MAX_SPLIT_PRIME: u64 = 10_000_000;

fn check_disc(disc: i128) -> crate::Result<()> {
    if disc >= 0 {
        return Err(crate::Error::InvalidInput(format!(
            "discriminant must be negative, got {disc}"
        )));
    }
    match disc.rem_euclid(4) {
        1 => Ok(()),
        0 => {
            let m = (disc / 4).rem_euclid(4);
            if m == 2 || m == 3 {
                Ok(())
            } else {
                Err(crate::Error::InvalidInput(format!(
                    "{disc} is not a field discriminant"
                )))
            }
        }
        _ => Err(crate::Error::InvalidInput(format!(
            "{disc} is not a discriminant (need 0 or 1 mod 4)"
        ))),
    }
}

/// The squarefree d with ℚ(√d) of discriminant disc.
fn field_d(disc: i128) -> i128 {
    if disc.rem_euclid(4) == 1 {
        disc
    } else {
        disc / 4
    }
}

/// Tr(ω): 1 for odd discriminants, 0 for even.
fn sigma(disc: i128) -> i128 {
    disc.rem_euclid(2)
}

/// N(ω) = (σ² − disc)/4.
fn omega_norm(disc: i128) -> i128 {
    let s = sigma(disc);
    (s * s - disc) / 4
}

/// N(u + vω).
fn nrm(disc: i128, u: i128, v: i128) -> i128 {
    u * u + sigma(disc) * u * v + omega_norm(disc) * v * v
}

fn big_to_i128(n: &BigInt, what: &str) -> crate::Result<i128> {
    n.to_i128().ok_or_else(|| {
        crate::Error::BoundExceeded(format!("{what} = {n} does not fit the ideal layer"))
    })
}

/// Coordinates of an integral element in the (1, ω) basis.
fn elem_to_uv(disc: i128, x: &QuadFieldElem) -> crate::Result<(i128, i128)> {
    if x.d() != field_d(disc) {
        return Err(crate::Error::FieldMismatch(format!(
            "element lives in Q(sqrt({})), ideal in Q(sqrt({}))",
            x.d(),
            field_d(disc)
        )));
    }
    let (u_rat, v_rat) = if sigma(disc) == 1 {
        (x.a() - x.b(), x.b() + x.b())
    } else {
        (x.a().clone(), x.b().clone())
    };
    if !u_rat.is_integer() || !v_rat.is_integer() {
        return Err(crate::Error::InvalidInput(format!(
            "{x} is not an algebraic integer of discriminant {disc}"
        )));
    }
    Ok((
        big_to_i128(u_rat.numer(), "coordinate")?,
        big_to_i128(v_rat.numer(), "coordinate")?,
    ))
}

fn uv_to_elem(disc: i128, u: i128, v: i128) -> QuadFieldElem {
    let d = field_d(disc);
    let (a, b) = if sigma(disc) == 1 {
        (
            Rat::new(BigInt::from(2 * u + v), BigInt::from(2)).expect("nonzero denominator"),
            Rat::new(BigInt::from(v), BigInt::from(2)).expect("nonzero denominator"),
        )
    } else {
        (Rat::from_int(u), Rat::from_int(v))
    };
    QuadFieldElem::new(d, a, b).expect("valid field")
}

/// An integral ideal nZ + (b + cω)Z of the maximal order of discriminant
/// disc, in canonical Hermite form: n, c > 0, c | n, c | b, 0 ≤ b < n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QuadIdeal {
    disc: i128,
    n: i128,
    b: i128,
    c: i128,
}

impl QuadIdeal {
    fn from_parts(disc: i128, n: i128, b: i128, c: i128) -> crate::Result<Self> {
        if n <= 0 || c <= 0 || n % c != 0 || b % c != 0 || b < 0 || b >= n {
            return Err(crate::Error::InvalidInput(format!(
                "({n}, {b}, {c}) is not a Hermite basis"
            )));
        }
        if nrm(disc, b, c) % (n * c) != 0 {
            return Err(crate::Error::InvalidInput(format!(
                "module {n}Z + ({b} + {c}w)Z is not stable under the maximal order"
            )));
        }
        Ok(QuadIdeal { disc, n, b, c })
    }

    /// Hermite form of the Z-span of the given (1, ω)-coordinate rows.
    fn from_rows(disc: i128, rows: &[(i128, i128)]) -> crate::Result<Self> {
        let mut comb = (0i128, 0i128);
        for &(u, v) in rows {
            if v == 0 {
                continue;
            }
            if comb.1 == 0 {
                comb = if v < 0 { (-u, -v) } else { (u, v) };
                continue;
            }
            let (g, s, t) = xgcd_i(comb.1, v);
            comb = (s * comb.0 + t * u, g);
        }
        let c = comb.1;
        if c == 0 {
            return Err(crate::Error::InvalidInput(
                "module has rank below 2, not an ideal".into(),
            ));
        }
        let mut n = 0i128;
        for &(u, v) in rows {
            n = gcd_i(n, u - (v / c) * comb.0);
        }
        if n == 0 {
            return Err(crate::Error::InvalidInput(
                "module has rank below 2, not an ideal".into(),
            ));
        }
        QuadIdeal::from_parts(disc, n, comb.0.rem_euclid(n), c)
    }

    pub fn unit_ideal(disc: i128) -> crate::Result<Self> {
        check_disc(disc)?;
        QuadIdeal::from_parts(disc, 1, 0, 1)
    }

    /// The module nZ + xZ, which must already be O-stable.
    pub fn from_pair(disc: i128, n: i128, x: &QuadFieldElem) -> crate::Result<Self> {
        check_disc(disc)?;
        if n <= 0 {
            return Err(crate::Error::InvalidInput(format!(
                "integer generator must be positive, got {n}"
            )));
        }
        let (u, v) = elem_to_uv(disc, x)?;
        QuadIdeal::from_rows(disc, &[(n, 0), (u, v)])
    }

    /// The O-ideal generated by the given elements.
    pub fn generated(disc: i128, gens: &[QuadFieldElem]) -> crate::Result<Self> {
        check_disc(disc)?;
        let mut rows = Vec::with_capacity(2 * gens.len());
        let (s, nw) = (sigma(disc), omega_norm(disc));
        for g in gens {
            let (u, v) = elem_to_uv(disc, g)?;
            rows.push((u, v));
            rows.push((-v * nw, u + v * s));
        }
        QuadIdeal::from_rows(disc, &rows)
    }

    pub fn principal(disc: i128, x: &QuadFieldElem) -> crate::Result<Self> {
        if x.is_zero() {
            return Err(crate::Error::InvalidInput(
                "zero does not generate an ideal".into(),
            ));
        }
        QuadIdeal::generated(disc, std::slice::from_ref(x))
    }

    pub fn discriminant(&self) -> i128 {
        self.disc
    }

    /// The Hermite triple (n, b, c).
    pub fn hnf(&self) -> (i128, i128, i128) {
        (self.n, self.b, self.c)
    }

    pub fn n(&self) -> i128 {
        self.n
    }

    /// The second basis element b + cω as a field element.
    pub fn x(&self) -> QuadFieldElem {
        uv_to_elem(self.disc, self.b, self.c)
    }

    /// Index in the maximal order.
    pub fn norm(&self) -> i128 {
        self.n * self.c
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.norm() == 1
    }

    /// Ideal sum I + J, the smallest ideal containing both; I + J = O
    /// exactly when the two are coprime.
    pub fn sum(&self, other: &QuadIdeal) -> crate::Result<QuadIdeal> {
        if self.disc != other.disc {
            return Err(crate::Error::FieldMismatch(format!(
                "ideal discriminants differ: {} vs {}",
                self.disc, other.disc
            )));
        }
        let rows = [
            (self.n, 0),
            (self.b, self.c),
            (other.n, 0),
            (other.b, other.c),
        ];
        QuadIdeal::from_rows(self.disc, &rows)
    }

    pub fn mul(&self, other: &QuadIdeal) -> crate::Result<QuadIdeal> {
        if self.disc != other.disc {
            return Err(crate::Error::FieldMismatch(format!(
                "ideal discriminants differ: {} vs {}",
                self.disc, other.disc
            )));
        }
        let (s, nw) = (sigma(self.disc), omega_norm(self.disc));
        let (b1, c1, b2, c2) = (self.b, self.c, other.b, other.c);
        let rows = [
            (self.n * other.n, 0),
            (self.n * b2, self.n * c2),
            (other.n * b1, other.n * c1),
            (b1 * b2 - c1 * c2 * nw, b1 * c2 + b2 * c1 + c1 * c2 * s),
        ];
        QuadIdeal::from_rows(self.disc, &rows)
    }

    pub fn pow(&self, e: u32) -> crate::Result<QuadIdeal> {
        let mut acc = QuadIdeal::unit_ideal(self.disc)?;
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            if e > 1 {
                base = base.mul(&base)?;
            }
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn conj(&self) -> QuadIdeal {
        let rows = [(self.n, 0), (self.b + self.c * sigma(self.disc), -self.c)];
        QuadIdeal::from_rows(self.disc, &rows).expect("conjugate of an ideal is an ideal")
    }

    /// The reduced form of this ideal's class.
    pub fn to_class(&self) -> crate::Result<QuadForm> {
        let a = self.n / self.c;
        let b = 2 * self.b / self.c + sigma(self.disc);
        let c_num = nrm(self.disc, self.b, self.c);
        let den = self.n * self.c;
        debug_assert_eq!(c_num % den, 0);
        Ok(QuadForm::new(a, b, c_num / den)?.reduce())
    }

    /// An ideal whose class corresponds to the given form: the module
    /// aZ + ((b + √disc)/2)Z, the inverse of [`QuadIdeal::to_class`].
    pub fn from_class(f: &QuadForm) -> crate::Result<QuadIdeal> {
        let disc = f.discriminant();
        check_disc(disc)?;
        let u = (f.b() - sigma(disc)) / 2;
        QuadIdeal::from_rows(disc, &[(f.a(), 0), (u, 1)])
    }
}

impl fmt::Display for QuadIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}Z + ({} + {}w)Z", self.n, self.b, self.c)
    }
}

/// Alias matching the operation vocabulary: class of an ideal as a form.
pub fn ideal_to_class(ideal: &QuadIdeal) -> crate::Result<QuadForm> {
    ideal.to_class()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SplittingType {
    Split,
    Inert,
    Ramified,
}

impl SplittingType {
    pub fn as_str(&self) -> &'static str {
        match self {
            SplittingType::Split => "split",
            SplittingType::Inert => "inert",
            SplittingType::Ramified => "ramified",
        }
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// The primes above q, found by the Kronecker symbol (disc/q) and a root
/// scan of N(x + ω) mod q. Split: two conjugate ideals of norm q;
/// ramified: one; inert: the ideal (q), of norm q².
pub fn primes_above(q: u64, disc: i128) -> crate::Result<(SplittingType, Vec<QuadIdeal>)> {
    check_disc(disc)?;
    if !is_prime_u64(q) {
        return Err(crate::Error::InvalidInput(format!("q = {q} is not prime")));
    }
    if q > MAX_SPLIT_PRIME {
        return Err(crate::Error::BoundExceeded(format!(
            "splitting scan supports q up to {MAX_SPLIT_PRIME}, got {q}"
        )));
    }
    let disc_big = BigInt::from(disc);
    let symbol = if q == 2 {
        kronecker_symbol_two(&disc_big)
    } else {
        legendre_symbol(&disc_big, q)
    };
    if symbol == -1 {
        let qi = q as i128;
        return Ok((
            SplittingType::Inert,
            vec![QuadIdeal::from_parts(disc, qi, 0, qi)?],
        ));
    }
    let tag = if symbol == 0 {
        SplittingType::Ramified
    } else {
        SplittingType::Split
    };
    let qi = q as i128;
    let mut ideals = Vec::new();
    for x in 0..qi {
        if nrm(disc, x, 1).rem_euclid(qi) == 0 {
            ideals.push(QuadIdeal::from_parts(disc, qi, x, 1)?);
        }
    }
    let expected = if tag == SplittingType::Split { 2 } else { 1 };
    if ideals.len() != expected {
        return Err(crate::Error::InternalFieldError(format!(
            "found {} primes above {q}, expected {expected}",
            ideals.len()
        )));
    }
    Ok((tag, ideals))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadclass::group::class_group;

    fn half(n: i128) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(2)).unwrap()
    }

    #[test]
    fn test_principal_ideal_of_x0() {
        // x0 = (1 + √−127)/2 = ω generates 32Z + ωZ of norm 32.
        let x0 = QuadFieldElem::new(-127, half(1), half(1)).unwrap();
        let ideal = QuadIdeal::principal(-127, &x0).unwrap();
        assert_eq!(ideal.hnf(), (32, 0, 1));
        assert_eq!(ideal.norm(), 32);
        assert!(ideal.to_class().unwrap().is_principal_class());
        assert_eq!(ideal.x(), x0);
    }

    #[test]
    fn test_unit_ideal() {
        let one = QuadIdeal::unit_ideal(-127).unwrap();
        assert_eq!(one.norm(), 1);
        assert!(one.is_unit_ideal());
        assert!(one.to_class().unwrap().is_principal_class());
        let p2 = QuadIdeal::from_parts(-127, 2, 0, 1).unwrap();
        assert_eq!(one.mul(&p2).unwrap(), p2);
    }

    #[test]
    fn test_primes_above_inert() {
        let (tag, ideals) = primes_above(5, -127).unwrap();
        assert_eq!(tag, SplittingType::Inert);
        assert_eq!(ideals.len(), 1);
        assert_eq!(ideals[0].norm(), 25);
        assert!(ideals[0].to_class().unwrap().is_principal_class());
    }

    #[test]
    fn test_primes_above_split() {
        let (tag, ideals) = primes_above(2, -127).unwrap();
        assert_eq!(tag, SplittingType::Split);
        assert_eq!(ideals.len(), 2);
        for i in &ideals {
            assert_eq!(i.norm(), 2);
        }
        // Conjugate pair multiplying to (2).
        assert_eq!(ideals[0].conj(), ideals[1]);
        let two = QuadIdeal::from_parts(-127, 2, 0, 2).unwrap();
        assert_eq!(ideals[0].mul(&ideals[1]).unwrap(), two);
        // Classes are each other's inverses.
        let f0 = ideals[0].to_class().unwrap();
        let f1 = ideals[1].to_class().unwrap();
        assert_eq!(f0, QuadForm::new(2, 1, 16).unwrap());
        assert_eq!(f1, f0.inverse());
    }

    #[test]
    fn test_primes_above_ramified() {
        let (tag, ideals) = primes_above(3, -3).unwrap();
        assert_eq!(tag, SplittingType::Ramified);
        assert_eq!(ideals.len(), 1);
        let three = QuadIdeal::from_parts(-3, 3, 0, 3).unwrap();
        assert_eq!(ideals[0].pow(2).unwrap(), three);
    }

    #[test]
    fn test_ideal_sum() {
        // Split conjugates are coprime: their sum is the whole ring.
        let (_, ideals) = primes_above(2, -127).unwrap();
        let s = ideals[0].sum(&ideals[1]).unwrap();
        assert!(s.is_unit_ideal());
        // Sum with itself (or with a multiple) changes nothing.
        assert_eq!(ideals[0].sum(&ideals[0]).unwrap(), ideals[0]);
        let sq = ideals[0].pow(2).unwrap();
        assert_eq!(ideals[0].sum(&sq).unwrap(), ideals[0]);
        let mismatch = QuadIdeal::unit_ideal(-23).unwrap();
        assert!(ideals[0].sum(&mismatch).is_err());
    }

    #[test]
    fn test_conj_product_is_norm() {
        for q in [2u64, 11, 13] {
            let (tag, ideals) = primes_above(q, -127).unwrap();
            assert_eq!(tag, SplittingType::Split, "q = {q}");
            let i = &ideals[0];
            let prod = i.mul(&i.conj()).unwrap();
            let qi = q as i128;
            assert_eq!(prod, QuadIdeal::from_parts(-127, qi, 0, qi).unwrap());
        }
    }

    #[test]
    fn test_form_ideal_roundtrip() {
        for d in [-23i128, -84, -127] {
            let cg = class_group(d).unwrap();
            for f in cg.forms() {
                let ideal = QuadIdeal::from_class(f).unwrap();
                assert_eq!(&ideal.to_class().unwrap(), f, "d = {d}, form {f}");
            }
        }
    }

    #[test]
    fn test_ideal_to_class_is_homomorphism() {
        let mut ideals = Vec::new();
        for q in [2u64, 11, 13, 17] {
            let (tag, ps) = primes_above(q, -127).unwrap();
            assert_eq!(tag, SplittingType::Split);
            ideals.extend(ps);
        }
        for i in &ideals {
            for j in &ideals {
                let lhs = i.mul(j).unwrap().to_class().unwrap();
                let rhs = i
                    .to_class()
                    .unwrap()
                    .compose(&j.to_class().unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs, "i = {i}, j = {j}");
            }
        }
    }

    #[test]
    fn test_powers_match_form_powers() {
        let (_, ideals) = primes_above(2, -127).unwrap();
        let f = ideals[0].to_class().unwrap();
        for e in 0..=6u32 {
            assert_eq!(
                ideals[0].pow(e).unwrap().to_class().unwrap(),
                f.pow(e as u64).unwrap(),
                "e = {e}"
            );
        }
    }

    #[test]
    fn test_from_pair_requires_stability() {
        // 3Z + √−6·Z is stable; 5Z + √−6·Z is not (N(√−6) = 6 ∉ 5Z).
        let root = QuadFieldElem::sqrt_d(-6).unwrap();
        assert!(QuadIdeal::from_pair(-24, 3, &root).is_ok());
        assert!(QuadIdeal::from_pair(-24, 5, &root).is_err());
    }

    #[test]
    fn test_even_discriminant_ideals() {
        // d = −6, disc = −24: 2 and 3 ramify.
        for q in [2u64, 3] {
            let (tag, ideals) = primes_above(q, -24).unwrap();
            assert_eq!(tag, SplittingType::Ramified, "q = {q}");
            let qi = q as i128;
            assert_eq!(
                ideals[0].pow(2).unwrap(),
                QuadIdeal::from_parts(-24, qi, 0, qi).unwrap()
            );
        }
        let (tag, ideals) = primes_above(5, -24).unwrap();
        assert_eq!(tag, SplittingType::Split);
        assert_eq!(ideals[0].mul(&ideals[1]).unwrap().norm(), 25);
    }

    #[test]
    fn test_rejects_non_integral_generator() {
        let x = QuadFieldElem::new(-127, half(1), Rat::from_int(1)).unwrap();
        assert!(QuadIdeal::principal(-127, &x).is_err());
    }
}
