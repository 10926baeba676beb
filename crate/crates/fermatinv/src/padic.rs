//! p-adic approximations, Hensel lifting, and the congruence criterion
//! l^(p−1) ≡ 1 (mod p²) together with the ramification facts it decides.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactnum::{is_prime_u64, primes_up_to};

/// An integer polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        ZPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// X^n − l.
    pub fn x_pow_minus(n: u32, l: impl Into<BigInt>) -> Self {
        let mut coeffs = vec![BigInt::zero(); n as usize + 1];
        coeffs[0] = -l.into();
        coeffs[n as usize] = BigInt::one();
        ZPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return ZPoly::new(Vec::new());
        }
        ZPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*X"),
                _ => format!("{c}*X^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// p-adic valuation of n; `None` encodes +∞ (n = 0).
pub fn val_p(n: &BigInt, p: &BigInt) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let mut v = 0u64;
    let mut rest = n.abs();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return Some(v);
        }
        v += 1;
        rest = q;
    }
}

/// A truncated p-adic integer: a residue known modulo p^precision.
#[derive(Clone, PartialEq, Eq)]
pub struct PadicApprox {
    p: u64,
    precision: u32,
    value: BigInt,
}

impl PadicApprox {
    pub fn new(p: u64, precision: u32, value: impl Into<BigInt>) -> crate::Result<Self> {
        if !is_prime_u64(p) {
            return Err(crate::Error::InvalidInput(format!("{p} is not prime")));
        }
        if precision == 0 {
            return Err(crate::Error::InvalidInput(
                "precision must be at least 1".into(),
            ));
        }
        let modulus = BigInt::from(p).pow(precision);
        Ok(PadicApprox {
            p,
            precision,
            value: value.into().mod_floor(&modulus),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }
}

impl fmt::Display for PadicApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O({}^{})", self.value, self.p, self.precision)
    }
}

impl fmt::Debug for PadicApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Lifts `x0` to a root of `f` known modulo p^target.
///
/// The returned approximation `y` satisfies f(y) ≡ 0 (mod p^target) and
/// agrees with `x0` to x0's full precision. The valuation hypothesis
/// v_p(f(x)) ≥ 2·v_p(f′(x)) + 1 is certified before Newton iteration
/// starts; when the given representative does not yet satisfy it, the seed
/// is deepened inside its residue class by choosing, digit by digit, the
/// extension maximizing v_p(f(x)). If no extension can ever satisfy the
/// hypothesis the residue class contains no root and
/// [`crate::Error::HenselHypothesisFails`] is reported.
pub fn hensel_lift(f: &ZPoly, x0: &PadicApprox, target: u32) -> crate::Result<PadicApprox> {
    if target < x0.precision {
        return Err(crate::Error::InvalidInput(format!(
            "target precision {target} below starting precision {}",
            x0.precision
        )));
    }
    let p = BigInt::from(x0.p);
    let df = f.derivative();
    if f.is_zero() {
        return PadicApprox::new(x0.p, target, x0.value.clone());
    }
    if df.is_zero() {
        return Err(crate::Error::HenselHypothesisFails(
            "derivative is identically zero".into(),
        ));
    }

    let mut x = x0.value.clone();
    let mut level = x0.precision;
    let mut level_mod = p.pow(level);

    // Seed phase: certify v_p(f(x)) ≥ 2k+1 somewhere in the class of x0.
    let mut guard = 0u32;
    loop {
        guard += 1;
        if guard > 4 * target + 64 {
            return Err(crate::Error::InternalFieldError(
                "hensel seed refinement did not terminate".into(),
            ));
        }
        let fx = f.eval(&x);
        if fx.is_zero() {
            return PadicApprox::new(x0.p, target, x);
        }
        let vf = val_p(&fx, &p).expect("nonzero");
        let k = val_p(&df.eval(&x), &p);
        if let Some(k) = k {
            if vf >= 2 * k + 1 {
                let y = newton_phase(f, &df, &p, x, k, target)?;
                return PadicApprox::new(x0.p, target, y);
            }
            // Once both valuations are pinned below the current level they
            // can no longer change; the hypothesis is unsatisfiable.
            if vf < level as u64 && k < level as u64 {
                return Err(crate::Error::HenselHypothesisFails(format!(
                    "v_p(f) = {vf} < 2k+1 = {} is frozen at precision {level}",
                    2 * k + 1
                )));
            }
        }
        // Deepen one digit, keeping the value with maximal v_p(f(x)).
        let mut best: Option<(u64, BigInt)> = None;
        for t in 0..x0.p {
            let cand = &x + BigInt::from(t) * &level_mod;
            let v = val_p(&f.eval(&cand), &p).unwrap_or(u64::MAX);
            if best.as_ref().map_or(true, |(bv, _)| v > *bv) {
                best = Some((v, cand));
            }
        }
        x = best.unwrap().1;
        level += 1;
        level_mod *= &p;
    }
}

/// Quadratically convergent Newton iteration under a certified hypothesis.
fn newton_phase(
    f: &ZPoly,
    df: &ZPoly,
    p: &BigInt,
    mut x: BigInt,
    k: u64,
    target: u32,
) -> crate::Result<BigInt> {
    let target_mod = p.pow(target);
    // Work with k + 1 guard digits so the division by p^k is harmless.
    let work_mod = p.pow(target + k as u32 + 1);
    let pk = p.pow(k as u32);
    for _ in 0..64 {
        let fx = f.eval(&x);
        if val_p(&fx, p).map_or(true, |v| v >= target as u64 + k) {
            return Ok(x.mod_floor(&target_mod));
        }
        let dfx = df.eval(&x);
        debug_assert_eq!(val_p(&dfx, p), Some(k));
        let unit = (&dfx / &pk).mod_floor(&work_mod);
        let unit_inv = crate::exactnum::ModInt::new(unit, work_mod.clone())?.inv()?;
        let delta = ((&fx / &pk) * unit_inv.value()).mod_floor(&work_mod);
        x = (&x - delta).mod_floor(&work_mod);
    }
    Err(crate::Error::InternalFieldError(
        "newton iteration did not converge".into(),
    ))
}

/// Whether l^(p−1) ≡ 1 (mod p²). Both arguments must be prime and distinct.
pub fn is_wieferich_pair(l: u64, p: u64) -> crate::Result<bool> {
    if !is_prime_u64(l) {
        return Err(crate::Error::InvalidInput(format!("l = {l} is not prime")));
    }
    if !is_prime_u64(p) {
        return Err(crate::Error::InvalidInput(format!("p = {p} is not prime")));
    }
    if l == p {
        return Err(crate::Error::InvalidInput(format!(
            "l and p must be distinct, both are {l}"
        )));
    }
    let p2 = BigInt::from(p) * BigInt::from(p);
    let r = BigInt::from(l).modpow(&BigInt::from(p - 1), &p2);
    Ok(r.is_one())
}

/// All primes p ≤ bound, p ≠ l, with l^(p−1) ≡ 1 (mod p²), ascending.
pub fn wieferich_scan(l: u64, bound: u64) -> crate::Result<Vec<u64>> {
    if !is_prime_u64(l) {
        return Err(crate::Error::InvalidInput(format!("l = {l} is not prime")));
    }
    let mut out = Vec::new();
    for p in primes_up_to(bound) {
        if p == l {
            continue;
        }
        // p below 2^31 keeps p² in u64 range and products in u128 range.
        if p < (1 << 31) {
            let p2 = (p as u128) * (p as u128);
            let mut acc = 1u128;
            let mut base = (l as u128) % p2;
            let mut e = p - 1;
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc * base % p2;
                }
                base = base * base % p2;
                e >>= 1;
            }
            if acc == 1 {
                out.push(p);
            }
        } else if is_wieferich_pair(l, p)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// How p·O_L factors in L = Q(l^(1/p)).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SplittingShape {
    /// p O_L = t^p: one prime, fully ramified.
    TotallyRamified,
    /// p O_L = s · t^(p−1): an unramified prime times a ramified power.
    UnramifiedTimesPower,
}

impl fmt::Display for SplittingShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplittingShape::TotallyRamified => write!(f, "t^p (totally ramified)"),
            SplittingShape::UnramifiedTimesPower => write!(f, "s * t^(p-1)"),
        }
    }
}

/// Ramification picture of p in L = Q(l^(1/p)) and N = Q(ζ_p, l^(1/p)),
/// decided entirely by the congruence l^(p−1) mod p².
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RamificationReport {
    pub p: u64,
    pub l: u64,
    pub wieferich: bool,
    pub p_unramified_in_n: bool,
    pub shape_in_l: SplittingShape,
    pub num_primes_above_p_in_n: u64,
}

/// Requires p ≥ 5 and l a prime distinct from p.
pub fn ramification_report(p: u64, l: u64) -> crate::Result<RamificationReport> {
    if p < 5 {
        return Err(crate::Error::InvalidInput(format!(
            "p = {p} must be a prime at least 5"
        )));
    }
    let wieferich = is_wieferich_pair(l, p)?;
    Ok(if wieferich {
        RamificationReport {
            p,
            l,
            wieferich,
            p_unramified_in_n: true,
            shape_in_l: SplittingShape::UnramifiedTimesPower,
            num_primes_above_p_in_n: p,
        }
    } else {
        RamificationReport {
            p,
            l,
            wieferich,
            p_unramified_in_n: false,
            shape_in_l: SplittingShape::TotallyRamified,
            num_primes_above_p_in_n: 1,
        }
    })
}

/// The smallest field over which the genus-(p−1)/2 quotient curve acquires
/// good reduction above p, with K = Q(ζ_p).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GoodReductionField {
    K,
    KAdjoinPthRootOfTwo,
}

impl fmt::Display for GoodReductionField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GoodReductionField::K => write!(f, "K"),
            GoodReductionField::KAdjoinPthRootOfTwo => write!(f, "K(2^(1/p))"),
        }
    }
}

/// K itself iff 2^(p−1) ≡ 1 (mod p²), otherwise K(2^(1/p)).
pub fn good_reduction_field(p: u64) -> crate::Result<GoodReductionField> {
    if p < 5 {
        return Err(crate::Error::InvalidInput(format!(
            "p = {p} must be a prime at least 5"
        )));
    }
    Ok(if is_wieferich_pair(2, p)? {
        GoodReductionField::K
    } else {
        GoodReductionField::KAdjoinPthRootOfTwo
    })
}
