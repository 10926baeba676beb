//! Primitive positive-definite binary quadratic forms: Gauss reduction
//! and composition.

use std::fmt;

/// gcd with nonnegative result.
pub(crate) fn gcd_i(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Extended gcd: returns (g, s, t) with s·a + t·b = g and g ≥ 0.
pub(crate) fn xgcd_i(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// The form aX² + bXY + cY² with b² − 4ac < 0, a > 0, gcd(a, b, c) = 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QuadForm {
    a: i128,
    b: i128,
    c: i128,
}

impl QuadForm {
    pub fn new(a: i128, b: i128, c: i128) -> crate::Result<Self> {
        if a <= 0 {
            return Err(crate::Error::InvalidInput(format!(
                "leading coefficient must be positive, got {a}"
            )));
        }
        if b * b - 4 * a * c >= 0 {
            return Err(crate::Error::InvalidInput(format!(
                "form ({a}, {b}, {c}) does not have negative discriminant"
            )));
        }
        if gcd_i(gcd_i(a, b), c) != 1 {
            return Err(crate::Error::InvalidInput(format!(
                "form ({a}, {b}, {c}) is not primitive"
            )));
        }
        Ok(QuadForm { a, b, c })
    }

    pub fn a(&self) -> i128 {
        self.a
    }

    pub fn b(&self) -> i128 {
        self.b
    }

    pub fn c(&self) -> i128 {
        self.c
    }

    pub fn discriminant(&self) -> i128 {
        self.b * self.b - 4 * self.a * self.c
    }

    /// The principal form of discriminant d.
    pub fn identity(d: i128) -> crate::Result<Self> {
        if d >= 0 {
            return Err(crate::Error::InvalidInput(format!(
                "discriminant must be negative, got {d}"
            )));
        }
        match d.rem_euclid(4) {
            0 => QuadForm::new(1, 0, -d / 4),
            1 => QuadForm::new(1, 1, (1 - d) / 4),
            _ => Err(crate::Error::InvalidInput(format!(
                "{d} is not a discriminant (need 0 or 1 mod 4)"
            ))),
        }
    }

    /// −a < b ≤ a ≤ c, with b ≥ 0 whenever a = c or |b| = a.
    pub fn is_reduced(&self) -> bool {
        -self.a < self.b
            && self.b <= self.a
            && self.a <= self.c
            && !((self.a == self.c || self.b.abs() == self.a) && self.b < 0)
    }

    /// The unique reduced form equivalent to this one.
    pub fn reduce(&self) -> QuadForm {
        let d = self.discriminant();
        let (mut a, mut b) = (self.a, self.b);
        loop {
            let two_a = 2 * a;
            let mut r = b.rem_euclid(two_a);
            if r > a {
                r -= two_a;
            }
            b = r;
            let c = (b * b - d) / (4 * a);
            if a > c {
                a = c;
                b = -b;
                continue;
            }
            if (a == c || b.abs() == a) && b < 0 {
                b = -b;
            }
            return QuadForm { a, b, c };
        }
    }

    /// The class inverse (a, −b, c), reduced.
    pub fn inverse(&self) -> QuadForm {
        QuadForm {
            a: self.a,
            b: -self.b,
            c: self.c,
        }
        .reduce()
    }

    pub fn is_principal_class(&self) -> bool {
        self.reduce().a == 1
    }

    /// Gauss composition; the reduced representative of the product class.
    pub fn compose(&self, other: &QuadForm) -> crate::Result<QuadForm> {
        let d = self.discriminant();
        if d != other.discriminant() {
            return Err(crate::Error::InvalidInput(format!(
                "discriminant mismatch: {} vs {}",
                d,
                other.discriminant()
            )));
        }
        let (a1, b1) = (self.a, self.b);
        let (a2, b2) = (other.a, other.b);
        let s = (b1 + b2) / 2;
        let (g1, u, v) = xgcd_i(a1, a2);
        let (m, t, e3) = xgcd_i(g1, s);
        let (e1, e2) = (t * u, t * v);
        debug_assert_eq!(e1 * a1 + e2 * a2 + e3 * s, m);
        let big_a = (a1 / m) * (a2 / m);
        let bnum = e1 * a1 * b2 + e2 * a2 * b1 + e3 * ((b1 * b2 + d) / 2);
        if bnum % m != 0 {
            return Err(crate::Error::InternalFieldError(
                "composition produced a non-integral middle coefficient".into(),
            ));
        }
        let mut big_b = (bnum / m).rem_euclid(2 * big_a);
        if big_b > big_a {
            big_b -= 2 * big_a;
        }
        let cnum = big_b * big_b - d;
        if cnum % (4 * big_a) != 0 {
            return Err(crate::Error::InternalFieldError(
                "composition produced a non-integral last coefficient".into(),
            ));
        }
        Ok(QuadForm::new(big_a, big_b, cnum / (4 * big_a))?.reduce())
    }

    /// k-fold composition of the class with itself; k = 0 gives the
    /// principal form.
    pub fn pow(&self, k: u64) -> crate::Result<QuadForm> {
        let mut acc = QuadForm::identity(self.discriminant())?;
        let mut base = self.reduce();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base)?;
            }
            base = base.compose(&base)?;
            k >>= 1;
        }
        Ok(acc)
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}
