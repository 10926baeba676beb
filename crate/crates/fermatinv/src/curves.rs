//! Odd-degree hyperelliptic curves y² = f(x), the plane curve
//! y^p = x(1−x) with its hyperelliptic model v² = u^p + 1/4, coordinate
//! transforms between them, and divisors of coordinate functions.

use std::fmt;

use serde_json::json;

use crate::exactnum::{is_prime_u64, ExactField, ExactSqrt, Rat};
use crate::poly::{FieldRoots, Poly};

/// A point on an affine chart y² = f(x), or the single point at infinity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AffinePoint<F: ExactField> {
    Finite { x: F, y: F },
    Infinity,
}

impl<F: ExactField> AffinePoint<F> {
    pub fn finite(x: F, y: F) -> Self {
        AffinePoint::Finite { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, AffinePoint::Infinity)
    }
}

impl<F: ExactField> fmt::Display for AffinePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffinePoint::Finite { x, y } => write!(f, "({x}, {y})"),
            AffinePoint::Infinity => write!(f, "Inf"),
        }
    }
}

/// A formal Z-linear combination of points, kept normalized.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalDivisor<F: ExactField> {
    terms: Vec<(AffinePoint<F>, i64)>,
}

impl<F: ExactField> FormalDivisor<F> {
    pub fn new(terms: Vec<(AffinePoint<F>, i64)>) -> Self {
        let mut out: Vec<(AffinePoint<F>, i64)> = Vec::new();
        for (pt, k) in terms {
            if let Some(entry) = out.iter_mut().find(|(q, _)| *q == pt) {
                entry.1 += k;
            } else {
                out.push((pt, k));
            }
        }
        out.retain(|(_, k)| *k != 0);
        FormalDivisor { terms: out }
    }

    pub fn terms(&self) -> &[(AffinePoint<F>, i64)] {
        &self.terms
    }

    pub fn degree(&self) -> i64 {
        self.terms.iter().map(|(_, k)| k).sum()
    }

    pub fn coefficient(&self, pt: &AffinePoint<F>) -> i64 {
        self.terms
            .iter()
            .find(|(q, _)| q == pt)
            .map_or(0, |(_, k)| *k)
    }
}

impl<F: ExactField> fmt::Display for FormalDivisor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(pt, k)| format!("{k}*{pt}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The affine chart y² = f(x) with f squarefree of odd degree 2g + 1,
/// together with the single point P∞ at infinity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HyperellipticCurve<F: ExactField> {
    f: Poly<F>,
    genus: usize,
}

impl<F: ExactField> HyperellipticCurve<F> {
    pub fn new(f: Poly<F>) -> crate::Result<Self> {
        let deg = f.degree().unwrap_or(0);
        if deg < 3 || deg % 2 == 0 {
            return Err(crate::Error::InvalidInput(format!(
                "need odd degree at least 3, got a polynomial of degree {deg}"
            )));
        }
        if !f.is_squarefree() {
            return Err(crate::Error::InvalidInput(
                "defining polynomial has repeated roots".into(),
            ));
        }
        Ok(HyperellipticCurve {
            f,
            genus: (deg - 1) / 2,
        })
    }

    pub fn f(&self) -> &Poly<F> {
        &self.f
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn contains(&self, pt: &AffinePoint<F>) -> bool {
        match pt {
            AffinePoint::Infinity => true,
            AffinePoint::Finite { x, y } => y.mul(y) == self.f.eval(x),
        }
    }
}

impl HyperellipticCurve<Rat> {
    pub fn to_json(&self, field: &str) -> serde_json::Value {
        json!({
            "model": "hyperelliptic",
            "field": field,
            "f_coeffs": self
                .f
                .coeffs()
                .iter()
                .map(|c| c.to_fraction_string())
                .collect::<Vec<_>>(),
        })
    }
}

/// Recasts a rational polynomial over another field, reducing each
/// coefficient; fails when a denominator dies in the target field.
pub fn rat_poly_over<G: ExactField>(f: &Poly<Rat>, sample: &G) -> crate::Result<Poly<G>> {
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| rat_over(c, sample))
        .collect::<crate::Result<Vec<G>>>()?;
    Ok(Poly::new(coeffs))
}

pub fn rat_over<G: ExactField>(r: &Rat, sample: &G) -> crate::Result<G> {
    let to_i64 = |n: &num_bigint::BigInt, what: &str| -> crate::Result<i64> {
        i64::try_from(n.clone()).map_err(|_| {
            crate::Error::BoundExceeded(format!("{what} {n} too large for field conversion"))
        })
    };
    let num = sample.from_i64_like(to_i64(r.numer(), "numerator")?);
    let den = sample.from_i64_like(to_i64(r.denom(), "denominator")?);
    let den_inv = den.inv().ok_or_else(|| {
        crate::Error::BadReduction(format!(
            "denominator {} is not invertible in the target field",
            r.denom()
        ))
    })?;
    Ok(num.mul(&den_inv))
}

/// The curve y^p = x(1−x) together with its odd-degree hyperelliptic
/// model v² = u^p + 1/4 (genus (p−1)/2) and the denominator-free chart
/// w² = 4u^p + 1, w = 2v.
#[derive(Clone, Debug)]
pub struct FermatQuotientModel {
    p: u64,
    hyper: HyperellipticCurve<Rat>,
    integral: HyperellipticCurve<Rat>,
}

/// Builds the models for a prime p ≥ 5.
pub fn fermat_model(p: u64) -> crate::Result<FermatQuotientModel> {
    if p < 5 || !is_prime_u64(p) {
        return Err(crate::Error::InvalidInput(format!(
            "p = {p} must be a prime at least 5"
        )));
    }
    let quarter = Rat::new(1.into(), 4.into()).expect("nonzero denominator");
    let mut coeffs = vec![Rat::zero(); p as usize + 1];
    coeffs[0] = quarter;
    coeffs[p as usize] = Rat::one();
    let hyper = HyperellipticCurve::new(Poly::new(coeffs))?;

    let mut int_coeffs = vec![Rat::zero(); p as usize + 1];
    int_coeffs[0] = Rat::one();
    int_coeffs[p as usize] = Rat::from_int(4);
    let integral = HyperellipticCurve::new(Poly::new(int_coeffs))?;

    Ok(FermatQuotientModel { p, hyper, integral })
}

impl FermatQuotientModel {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn genus(&self) -> usize {
        self.hyper.genus()
    }

    /// The model v² = u^p + 1/4.
    pub fn hyper(&self) -> &HyperellipticCurve<Rat> {
        &self.hyper
    }

    /// The model w² = 4u^p + 1 with w = 2v.
    pub fn integral(&self) -> &HyperellipticCurve<Rat> {
        &self.integral
    }

    /// The hyperelliptic model with coefficients moved into another field.
    pub fn hyper_over<G: ExactField>(&self, sample: &G) -> crate::Result<HyperellipticCurve<G>> {
        let f = rat_poly_over(self.hyper.f(), sample)?;
        if !f.is_squarefree() {
            return Err(crate::Error::BadReduction(
                "the model acquires repeated roots over the target field".into(),
            ));
        }
        HyperellipticCurve::new(f)
    }

    /// Whether (x, y) satisfies y^p = x(1−x).
    pub fn is_on_original<G: ExactField>(&self, pt: &AffinePoint<G>) -> bool {
        match pt {
            AffinePoint::Infinity => true,
            AffinePoint::Finite { x, y } => {
                let rhs = x.mul(&x.one_like().sub(x));
                y.pow_u(self.p) == rhs
            }
        }
    }

    /// (x, y) ↦ (u, v) = (−y, x − 1/2), from y^p = x(1−x) to the
    /// hyperelliptic model.
    pub fn to_hyper<G: ExactField>(&self, pt: &AffinePoint<G>) -> crate::Result<AffinePoint<G>> {
        if !self.is_on_original(pt) {
            return Err(crate::Error::PointNotOnCurve(format!(
                "{pt} does not satisfy y^{} = x(1-x)",
                self.p
            )));
        }
        Ok(match pt {
            AffinePoint::Infinity => AffinePoint::Infinity,
            AffinePoint::Finite { x, y } => {
                let half = invert_two(y)?;
                AffinePoint::finite(y.neg(), x.sub(&half))
            }
        })
    }

    /// (u, v) ↦ (x, y) = (v + 1/2, −u), inverse of [`Self::to_hyper`].
    pub fn from_hyper<G: ExactField>(&self, pt: &AffinePoint<G>) -> crate::Result<AffinePoint<G>> {
        if !self.is_on_hyper(pt) {
            return Err(crate::Error::PointNotOnCurve(format!(
                "{pt} does not satisfy v^2 = u^{} + 1/4",
                self.p
            )));
        }
        Ok(match pt {
            AffinePoint::Infinity => AffinePoint::Infinity,
            AffinePoint::Finite { x: u, y: v } => {
                let half = invert_two(u)?;
                AffinePoint::finite(v.add(&half), u.neg())
            }
        })
    }

    pub fn is_on_hyper<G: ExactField>(&self, pt: &AffinePoint<G>) -> bool {
        match pt {
            AffinePoint::Infinity => true,
            AffinePoint::Finite { x, y } => {
                let quarter = match invert_two(x) {
                    Ok(h) => h.mul(&h),
                    Err(_) => return false,
                };
                y.mul(y) == x.pow_u(self.p).add(&quarter)
            }
        }
    }

    /// (u, v) ↦ (u, w) = (u, 2v) onto w² = 4u^p + 1.
    pub fn to_integral<G: ExactField>(
        &self,
        pt: &AffinePoint<G>,
    ) -> crate::Result<AffinePoint<G>> {
        if !self.is_on_hyper(pt) {
            return Err(crate::Error::PointNotOnCurve(format!(
                "{pt} does not satisfy v^2 = u^{} + 1/4",
                self.p
            )));
        }
        Ok(match pt {
            AffinePoint::Infinity => AffinePoint::Infinity,
            AffinePoint::Finite { x: u, y: v } => {
                AffinePoint::finite(u.clone(), v.add(v))
            }
        })
    }

    pub fn from_integral<G: ExactField>(
        &self,
        pt: &AffinePoint<G>,
    ) -> crate::Result<AffinePoint<G>> {
        let back = match pt {
            AffinePoint::Infinity => AffinePoint::Infinity,
            AffinePoint::Finite { x: u, y: w } => {
                AffinePoint::finite(u.clone(), w.mul(&invert_two(w)?))
            }
        };
        if !self.is_on_hyper(&back) {
            return Err(crate::Error::PointNotOnCurve(format!(
                "{pt} does not satisfy w^2 = 4u^{} + 1",
                self.p
            )));
        }
        Ok(back)
    }

    /// div(x) on y^p = x(1−x): p·(0,0) − p·P∞.
    pub fn divisor_of_x(&self) -> FormalDivisor<Rat> {
        FormalDivisor::new(vec![
            (AffinePoint::finite(Rat::zero(), Rat::zero()), self.p as i64),
            (AffinePoint::Infinity, -(self.p as i64)),
        ])
    }
}

fn invert_two<G: ExactField>(sample: &G) -> crate::Result<G> {
    sample.from_i64_like(2).inv().ok_or_else(|| {
        crate::Error::InternalFieldError("2 is not invertible (characteristic 2)".into())
    })
}

/// All rational Weierstrass points (t, 0) with f(t) = 0, plus P∞.
pub fn weierstrass_points<F: FieldRoots>(curve: &HyperellipticCurve<F>) -> Vec<AffinePoint<F>> {
    let mut pts: Vec<AffinePoint<F>> = F::poly_roots(curve.f())
        .into_iter()
        .map(|t| {
            let zero = t.zero_like();
            AffinePoint::finite(t, zero)
        })
        .collect();
    pts.push(AffinePoint::Infinity);
    pts
}

/// div(x − c) on y² = f(x): 2(c, 0) − 2P∞ at a Weierstrass root, otherwise
/// (c, y) + (c, −y) − 2P∞ when y = √f(c) exists in the field.
pub fn divisor_of_x_minus_c<F: ExactSqrt>(
    curve: &HyperellipticCurve<F>,
    c: &F,
) -> crate::Result<FormalDivisor<F>> {
    let val = curve.f().eval(c);
    if val.is_zero() {
        return Ok(FormalDivisor::new(vec![
            (AffinePoint::finite(c.clone(), val), 2),
            (AffinePoint::Infinity, -2),
        ]));
    }
    let y = val.sqrt().ok_or_else(|| {
        crate::Error::PointNotRational(format!(
            "f({c}) = {val} is not a square in the coefficient field"
        ))
    })?;
    Ok(FormalDivisor::new(vec![
        (AffinePoint::finite(c.clone(), y.clone()), 1),
        (AffinePoint::finite(c.clone(), y.neg()), 1),
        (AffinePoint::Infinity, -2),
    ]))
}
