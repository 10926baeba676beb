//! Dense univariate polynomials over any [`ExactField`].
//!
//! Coefficients are stored in ascending degree with no trailing zeros, so
//! the zero polynomial is the empty vector and the representation is
//! canonical: two polynomials are equal iff their coefficient vectors are.

use std::fmt;

use crate::exactnum::{ExactField, Fp, Rat};

#[derive(Clone, PartialEq, Eq)]
pub struct Poly<F: ExactField> {
    coeffs: Vec<F>,
}

impl<F: ExactField> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    pub fn one_like(sample: &F) -> Self {
        Poly::constant(sample.one_like())
    }

    /// The monomial X.
    pub fn x_like(sample: &F) -> Self {
        Poly::new(vec![sample.zero_like(), sample.one_like()])
    }

    /// c·X^k.
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![c.zero_like(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Coefficient of X^k (zero when k exceeds the degree; requires a
    /// sample element to materialize that zero).
    pub fn coeff_or_zero(&self, k: usize, sample: &F) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(|| sample.zero_like())
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map_or(false, |c| c.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(c);
        }
        Poly::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&c.from_i64_like(i as i64)))
            .collect();
        Poly::new(out)
    }

    /// Euclidean division: `self = q·den + r` with deg r < deg den.
    /// Panics on a zero divisor.
    pub fn divmod(&self, den: &Self) -> (Self, Self) {
        let dlc = den
            .leading_coeff()
            .expect("division by the zero polynomial");
        let dlc_inv = dlc.inv().expect("leading coefficient is invertible");
        let dd = den.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quot: Vec<F> = Vec::new();
        while rem.len() > dd {
            // strip top term
            let top = rem.last().unwrap().clone();
            if top.is_zero() {
                rem.pop();
                continue;
            }
            let k = rem.len() - 1 - dd;
            let c = top.mul(&dlc_inv);
            for i in 0..=dd {
                let idx = k + i;
                let delta = den.coeffs[i].mul(&c);
                rem[idx] = rem[idx].sub(&delta);
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            while quot.len() <= k {
                quot.push(top.zero_like());
            }
            quot[k] = c;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, den: &Self) -> Self {
        self.divmod(den).1
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, den: &Self) -> crate::Result<Self> {
        let (q, r) = self.divmod(den);
        if !r.is_zero() {
            return Err(crate::Error::InternalFieldError(
                "expected exact polynomial division".into(),
            ));
        }
        Ok(q)
    }

    /// Monic associate (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(lc) => {
                if lc.is_one() {
                    self.clone()
                } else {
                    self.scale(&lc.inv().expect("nonzero leading coefficient"))
                }
            }
        }
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    /// Extended gcd: returns monic `g` and `(s, t)` with `s·self + t·rhs = g`.
    pub fn ext_gcd(&self, rhs: &Self) -> (Self, Self, Self) {
        // Seed identities; sample any nonzero coefficient for `one`.
        let sample = self
            .coeffs
            .first()
            .or_else(|| rhs.coeffs.first())
            .cloned();
        let one = match sample {
            None => return (Poly::zero(), Poly::zero(), Poly::zero()),
            Some(c) => Poly::one_like(&c),
        };
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (one.clone(), Poly::<F>::zero());
        let (mut t0, mut t1) = (Poly::<F>::zero(), one);
        while !r1.is_zero() {
            let (q, r2) = r0.divmod(&r1);
            r0 = std::mem::replace(&mut r1, r2);
            let s2 = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        // Normalize to a monic gcd.
        match r0.leading_coeff() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                let ci = Poly::constant(inv);
                (r0.monic(), s0.mul(&ci), t0.mul(&ci))
            }
        }
    }

    /// Substitution X ↦ c·X.
    pub fn compose_scale_x(&self, c: &F) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut power = c.one_like();
        for a in &self.coeffs {
            out.push(a.mul(&power));
            power = power.mul(c);
        }
        Poly::new(out)
    }

    /// True when the polynomial has no repeated roots over the algebraic
    /// closure, i.e. gcd(f, f′) is constant.
    pub fn is_squarefree(&self) -> bool {
        let d = self.derivative();
        if d.is_zero() {
            return self.degree() == Some(0);
        }
        self.gcd(&d).degree() == Some(0)
    }
}

impl Poly<Rat> {
    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn from_str_coeffs(coeffs: &[&str]) -> crate::Result<Self> {
        let cs: crate::Result<Vec<Rat>> = coeffs.iter().map(|s| Rat::parse(s)).collect();
        Ok(Poly::new(cs?))
    }
}

impl<F: ExactField> fmt::Display for Poly<F> {
    /// Ascending terms joined by " + ".
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
                0 => format!("({c})"),
                1 => format!("({c})*X"),
                _ => format!("({c})*X^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl<F: ExactField> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Roots of a polynomial lying inside its coefficient field, without
/// multiplicity, in a deterministic order.
pub trait FieldRoots: ExactField {
    fn poly_roots(f: &Poly<Self>) -> Vec<Self>;
}

impl FieldRoots for Rat {
    /// Rational root theorem on the denominator-cleared polynomial.
    fn poly_roots(f: &Poly<Rat>) -> Vec<Rat> {
        use num_bigint::BigInt;
        use num_traits::{Signed, Zero};
        let mut f = f.clone();
        let mut roots: Vec<Rat> = Vec::new();
        if f.is_zero() {
            return roots;
        }
        // Factor out X^k first so the constant term is nonzero.
        let zero = Rat::zero();
        while !f.is_zero() && f.coeffs()[0] == zero {
            if !roots.contains(&zero) {
                roots.push(zero.clone());
            }
            f = Poly::new(f.coeffs()[1..].to_vec());
        }
        if f.degree().map_or(true, |d| d == 0) {
            roots.sort();
            return roots;
        }
        // Clear denominators to c_n X^n + … + c_0 over the integers.
        let mut den = BigInt::from(1);
        for c in f.coeffs() {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let ints: Vec<BigInt> = f
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let c0 = ints[0].abs();
        let cn = ints.last().unwrap().abs();
        let divisors = |n: &BigInt| -> Vec<BigInt> {
            let mut out = Vec::new();
            let mut k = BigInt::from(1);
            while &k * &k <= *n {
                if (n % &k).is_zero() {
                    out.push(k.clone());
                    out.push(n / &k);
                }
                k += 1;
            }
            out
        };
        for p in divisors(&c0) {
            for q in divisors(&cn) {
                for cand in [
                    Rat::new(p.clone(), q.clone()).unwrap(),
                    Rat::new(-p.clone(), q.clone()).unwrap(),
                ] {
                    if f.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

impl FieldRoots for Fp {
    fn poly_roots(f: &Poly<Fp>) -> Vec<Fp> {
        match f.leading_coeff() {
            None => Vec::new(),
            Some(sample) => sample
                .enumerate_like()
                .into_iter()
                .filter(|x| f.eval(x).is_zero())
                .collect(),
        }
    }
}

use crate::exactnum::FiniteExactField;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ExactSqrt;

    fn p(coeffs: &[i64]) -> Poly<Rat> {
        Poly::from_i64_coeffs(coeffs)
    }

    #[test]
    fn test_canonical_trailing_zeros() {
        let f = p(&[1, 2, 0, 0]);
        assert_eq!(f.degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(Poly::<Rat>::zero().degree(), None);
    }

    #[test]
    fn test_mul_and_eval() {
        // (X−1)(X−2) = X² − 3X + 2
        let f = p(&[-1, 1]).mul(&p(&[-2, 1]));
        assert_eq!(f, p(&[2, -3, 1]));
        assert_eq!(f.eval(&Rat::from_int(3)), Rat::from_int(2));
        assert!(f.eval(&Rat::from_int(1)).is_zero());
    }

    #[test]
    fn test_divmod() {
        let num = p(&[2, -3, 0, 1]);
        let den = p(&[-1, 1]);
        let (q, r) = num.divmod(&den);
        assert_eq!(num, q.mul(&den).add(&r));
        assert!(r.degree() < den.degree());
        // Exact division detects remainders.
        assert!(num.div_exact(&p(&[7, 1])).is_err());
    }

    #[test]
    fn test_gcd_and_ext_gcd() {
        let a = p(&[-1, 1]).mul(&p(&[-2, 1]));
        let b = p(&[-1, 1]).mul(&p(&[-3, 1]));
        let g = a.gcd(&b);
        assert_eq!(g, p(&[-1, 1]));
        let (g2, s, t) = a.ext_gcd(&b);
        assert_eq!(g2, g);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn test_squarefree_detection() {
        assert!(p(&[-2, 0, 1]).is_squarefree());
        assert!(!p(&[1, 2, 1]).is_squarefree());
        // X⁵ + 1/4 is squarefree.
        let f = Poly::from_str_coeffs(&["1/4", "0", "0", "0", "0", "1"]).unwrap();
        assert!(f.is_squarefree());
    }

    #[test]
    fn test_rational_roots() {
        // x(x−1)(x−2)(x−3)(x−4) has exactly the five integer roots.
        let f = p(&[0, 24, -50, 35, -10, 1]);
        let roots = Rat::poly_roots(&f);
        assert_eq!(
            roots,
            [0i64, 1, 2, 3, 4]
                .iter()
                .map(|&n| Rat::from_int(n))
                .collect::<Vec<_>>()
        );
        // 4X⁵ + 1 has none (candidates ±1, ±1/2, ±1/4 all fail).
        let g = Poly::from_str_coeffs(&["1/4", "0", "0", "0", "0", "1"]).unwrap();
        assert!(Rat::poly_roots(&g).is_empty());
        // Non-integer root: (2X−1)(X+3).
        let h = p(&[-3, 5, 2]);
        let roots = Rat::poly_roots(&h);
        assert_eq!(roots, vec![Rat::from_int(-3), Rat::parse("1/2").unwrap()]);
    }

    #[test]
    fn test_fp_roots() {
        let two = Fp::new(5, 2).unwrap();
        // X² − 2 has no roots mod 5; X² − 4 has {2, 3}.
        let f = Poly::new(vec![two.neg(), two.zero_like(), two.one_like()]);
        assert!(Fp::poly_roots(&f).is_empty());
        let g = Poly::new(vec![
            two.from_i64_like(-4),
            two.zero_like(),
            two.one_like(),
        ]);
        let roots = Fp::poly_roots(&g);
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert!(g.eval(&r).is_zero());
        }
    }

    #[test]
    fn test_compose_scale_x() {
        // f(X) = X² + X, f(3X) = 9X² + 3X.
        let f = p(&[0, 1, 1]);
        let three = Rat::from_int(3);
        assert_eq!(f.compose_scale_x(&three), p(&[0, 3, 9]));
    }

    #[test]
    fn test_sqrt_trait_usable_with_poly_eval() {
        let f = p(&[0, 24, -50, 35, -10, 1]);
        // f(−1) = −120: not a rational square.
        assert!(f.eval(&Rat::from_int(-1)).sqrt().is_none());
    }
}
