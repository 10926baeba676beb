//! The ideal-class invariant of integral points: for a prime p ≥ 5 and an
//! integer u ≤ −1, the odd number 4u^p + 1 factors as m²d with d < 0
//! squarefree, and x0 = (1 + m√d)/2 satisfies x0 + x̄0 = 1 and
//! x0·x̄0 = |u|^p. The ideal a = (u, x0) of ℚ(√d) then has norm |u| and
//! a^p = (x0), so its class is p-torsion. The invariant attached to (p, u)
//! is the image of that class in Cl(ℚ(√d)) modulo the classes of primes
//! above p; when it does not vanish, the matching point (u, m√d/2) on
//! v² = u^p + 1/4 is coupled with a two-prime non-torsion certificate on
//! the jacobian.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde_json::json;

use crate::curves::{fermat_model, AffinePoint};
use crate::exactnum::{
    factorize, is_prime_u64, squarefree_part, QuadFieldElem, Rat, DEFAULT_FACTOR_BOUND,
};
use crate::jacobian::{certify_infinite_order, Jacobian, NonTorsionCertificate, Verdict};
use crate::quadclass::{
    class_group, form_json, ideal_to_class, primes_above, s_class_group, QuadForm, QuadIdeal,
    SplittingType,
};

/// Largest |u| the candidate and search layers accept.
pub const MAX_SEARCH_U: i64 = 10_000;

/// Largest |u|^p the ideal layer accepts; beyond it the i128 Hermite
/// arithmetic behind a^p = (x0) could overflow.
const MAX_IDEAL_NORM: i128 = 100_000_000_000_000_000;

fn half(n: BigInt) -> Rat {
    Rat::new(n, BigInt::from(2)).expect("nonzero denominator")
}

/// One integral point of shape x0 = (1 + m√d)/2 with x0(1 − x0) = |u|^p,
/// together with its image (u, m√d/2) on the odd-degree model.
#[derive(Clone, Debug)]
pub struct PointCandidate {
    p: u64,
    u: i64,
    d_raw: BigInt,
    m: BigInt,
    d: i128,
    x0: QuadFieldElem,
    degenerate_field: bool,
}

impl PointCandidate {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn u(&self) -> i64 {
        self.u
    }

    /// 4u^p + 1, before the square part is removed.
    pub fn d_raw(&self) -> &BigInt {
        &self.d_raw
    }

    /// The m in 4u^p + 1 = m²d.
    pub fn m(&self) -> &BigInt {
        &self.m
    }

    /// Squarefree radicand of the field ℚ(√d) the point generates.
    pub fn d(&self) -> i128 {
        self.d
    }

    /// x0 = (1 + m√d)/2.
    pub fn x0(&self) -> &QuadFieldElem {
        &self.x0
    }

    /// True exactly for d = −3 (u = −1), where x0 is a root of unity and
    /// the class group is trivial.
    pub fn degenerate_field(&self) -> bool {
        self.degenerate_field
    }

    /// The point (u, m√d/2) on v² = u^p + 1/4, image of (x0, |u|) on
    /// y^p = x(1 − x).
    pub fn hyper_point(&self) -> AffinePoint<QuadFieldElem> {
        let x = QuadFieldElem::from_rat(self.d, Rat::from_int(self.u)).expect("valid radicand");
        let y =
            QuadFieldElem::new(self.d, Rat::zero(), half(self.m.clone())).expect("valid radicand");
        AffinePoint::finite(x, y)
    }
}

/// Builds the candidate attached to (p, u): factors 4u^p + 1 = m²d, forms
/// x0 = (1 + m√d)/2, and checks the identities x0 + x̄0 = 1 and
/// x0·x̄0 = |u|^p exactly.
pub fn make_candidate(p: u64, u: i64, factor_bound: u64) -> crate::Result<PointCandidate> {
    if p < 5 || !is_prime_u64(p) {
        return Err(crate::Error::InvalidInput(format!(
            "exponent must be a prime of at least 5, got {p}"
        )));
    }
    let exp = u32::try_from(p).map_err(|_| {
        crate::Error::BoundExceeded(format!("exponent {p} is beyond the candidate layer"))
    })?;
    if !(-MAX_SEARCH_U..=-1).contains(&u) {
        return Err(crate::Error::InvalidInput(format!(
            "u must lie in [-{MAX_SEARCH_U}, -1], got {u}"
        )));
    }
    let d_raw = BigInt::from(4) * BigInt::from(u).pow(exp) + 1;
    let (m, d_big) = squarefree_part(&d_raw, factor_bound)?;
    let d = d_big.to_i128().ok_or_else(|| {
        crate::Error::BoundExceeded(format!(
            "radicand {d_big} does not fit the class-group layer"
        ))
    })?;
    // 4u^p + 1 ≡ 1 (mod 4) and m is odd, so d < 0 and d ≡ 1 (mod 4).
    if d >= 0 || d.rem_euclid(4) != 1 {
        return Err(crate::Error::InternalFieldError(format!(
            "squarefree part {d} of {d_raw} is not a negative fundamental discriminant"
        )));
    }
    let x0 = QuadFieldElem::new(d, half(BigInt::one()), half(m.clone()))?;
    if x0.trace() != Rat::one() {
        return Err(crate::Error::InternalFieldError(format!(
            "x0 = {x0} does not have trace 1"
        )));
    }
    if x0.norm() != Rat::from_int(BigInt::from(-u).pow(exp)) {
        return Err(crate::Error::InternalFieldError(format!(
            "x0 = {x0} does not have norm |{u}|^{p}"
        )));
    }
    Ok(PointCandidate {
        p,
        u,
        d_raw,
        m,
        d,
        x0,
        degenerate_field: d == -3,
    })
}

/// The ideal a = (u, x0), verified to have norm |u|, to satisfy
/// a^p = (x0) at the level of Hermite bases, and to be supported on
/// split primes only.
pub fn divide_ideal(cand: &PointCandidate) -> crate::Result<QuadIdeal> {
    let norm_bound = BigInt::from(MAX_IDEAL_NORM);
    let abs_u_pow = BigInt::from(-cand.u).pow(cand.p as u32);
    if abs_u_pow > norm_bound {
        return Err(crate::Error::BoundExceeded(format!(
            "|u|^p = {abs_u_pow} exceeds the ideal-layer bound {MAX_IDEAL_NORM}"
        )));
    }
    let u_elem = QuadFieldElem::from_rat(cand.d, Rat::from_int(cand.u))?;
    let a = QuadIdeal::generated(cand.d, &[u_elem, cand.x0.clone()])?;
    if a.norm() != (-cand.u) as i128 {
        return Err(crate::Error::InternalFieldError(format!(
            "(u, x0) has norm {}, expected |u| = {}",
            a.norm(),
            -cand.u
        )));
    }
    let principal_x0 = QuadIdeal::principal(cand.d, &cand.x0)?;
    if a.pow(cand.p as u32)? != principal_x0 {
        return Err(crate::Error::InternalFieldError(format!(
            "a^{} and (x0) have different Hermite bases",
            cand.p
        )));
    }
    // q | u divides N(x0) but neither x0 nor the radicand, so it splits.
    for (q, _) in factorize(&BigInt::from(-cand.u), DEFAULT_FACTOR_BOUND)? {
        let q = q.to_u64().expect("factor of |u| fits u64");
        let (tag, _) = primes_above(q, cand.d)?;
        if tag != SplittingType::Split {
            return Err(crate::Error::InternalFieldError(format!(
                "prime {q} divides u yet is {tag} in Q(sqrt({}))",
                cand.d
            )));
        }
    }
    Ok(a)
}

/// Everything the invariant map reports for one (p, u): the field, the
/// ideal a and its class, the quotient by classes of primes above p, and
/// the non-torsion verdict for the matching jacobian point.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub p: u64,
    pub u: i64,
    pub d: i128,
    /// Class number of ℚ(√d).
    pub h: u64,
    pub a: QuadIdeal,
    pub class_of_a: QuadForm,
    pub p_splitting: SplittingType,
    /// Order of Cl(ℚ(√d)) modulo the classes of primes above p.
    pub s_quotient_order: u64,
    /// Order of [a] in that quotient.
    pub c_order: u64,
    /// Orders of the images of [a]^k for k = 0, …, p − 1.
    pub psi_tuple_orders: Vec<u64>,
    pub nonvanishing: bool,
    pub infinite_order: Verdict,
    /// Prime pair backing the verdict, when a reduction pair worked.
    pub certificate: Option<NonTorsionCertificate>,
    pub degenerate_field: bool,
}

impl InvariantReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "p": self.p,
            "u": self.u,
            "d": self.d.to_string(),
            "h": self.h,
            "a": {
                "norm": self.a.norm().to_string(),
                "basis": [self.a.n().to_string(), self.a.x().to_string()],
            },
            "class_of_a": form_json(&self.class_of_a),
            "p_splitting": self.p_splitting.as_str(),
            "s_quotient_order": self.s_quotient_order,
            "c_order": self.c_order,
            "psi_tuple_orders": self.psi_tuple_orders,
            "nonvanishing": self.nonvanishing,
            "infinite_order": self.infinite_order.as_str(),
        })
    }
}

/// The invariant map: class data of a = (u, x0) in the S-class group of
/// ℚ(√d) with S the primes above p, plus a non-torsion certificate
/// attempt for the point (u, m√d/2).
pub fn psi(p: u64, u: i64, factor_bound: u64) -> crate::Result<InvariantReport> {
    let cand = make_candidate(p, u, factor_bound)?;
    let a = divide_ideal(&cand)?;
    let cg = class_group(cand.d)?;
    let c = ideal_to_class(&a)?;
    let (p_splitting, p_ideals) = primes_above(p, cand.d)?;
    let mut s_classes = Vec::with_capacity(p_ideals.len());
    for ideal in &p_ideals {
        s_classes.push(ideal.to_class()?);
    }
    let scg = s_class_group(&cg, &s_classes)?;

    let mut psi_tuple_orders = Vec::with_capacity(p as usize);
    let mut acc = cg.identity().clone();
    for _ in 0..p {
        psi_tuple_orders.push(scg.order_in_quotient(&acc)?);
        acc = acc.compose(&c)?;
    }
    let c_order = psi_tuple_orders[1];
    let nonvanishing = c_order > 1;
    let (infinite_order, certificate) = certify_candidate(&cand)?;

    Ok(InvariantReport {
        p,
        u,
        d: cand.d,
        h: cg.h(),
        a,
        class_of_a: c,
        p_splitting,
        s_quotient_order: scg.quotient_order(),
        c_order,
        psi_tuple_orders,
        nonvanishing,
        infinite_order,
        certificate,
        degenerate_field: cand.degenerate_field,
    })
}

/// First four odd primes distinct from p and prime to d, in order.
fn certification_primes(p: u64, d: i128) -> Vec<u64> {
    let mut out = Vec::with_capacity(4);
    let mut q = 3u64;
    while out.len() < 4 {
        if is_prime_u64(q) && q != p && d % (q as i128) != 0 {
            out.push(q);
        }
        q += 2;
    }
    out
}

/// Tries reduction pairs in order until one proves the class of
/// (u, m√d/2) − ∞ non-torsion; pairs a prime rules out (ramified, or a
/// point count out of bounds) are skipped.
fn certify_candidate(
    cand: &PointCandidate,
) -> crate::Result<(Verdict, Option<NonTorsionCertificate>)> {
    let model = fermat_model(cand.p)?;
    let curve = model.hyper_over(&cand.x0)?;
    let jac = Jacobian::new(curve);
    let div = jac.point_divisor(&cand.hyper_point())?;
    let qs = certification_primes(cand.p, cand.d);
    let mut fallback: Option<NonTorsionCertificate> = None;
    for i in 0..qs.len() {
        for j in (i + 1)..qs.len() {
            match certify_infinite_order(&jac, &div, qs[i], qs[j]) {
                Ok(cert) => {
                    if cert.verdict == Verdict::ProvenInfinite {
                        return Ok((Verdict::ProvenInfinite, Some(cert)));
                    }
                    if fallback.is_none() {
                        fallback = Some(cert);
                    }
                }
                Err(crate::Error::BoundExceeded(_))
                | Err(crate::Error::RamifiedPrime(_))
                | Err(crate::Error::BadReduction(_)) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    Ok((Verdict::Inconclusive, fallback))
}

/// Result of scanning a u-range: full reports for the witnesses (u values
/// with nonvanishing invariant), plus counts and the skipped rows.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// Witness reports, ordered by |u| ascending.
    pub reports: Vec<InvariantReport>,
    pub tested: u64,
    pub witnesses: u64,
    /// (u, reason) rows the scan could not decide, never dropped.
    pub skipped: Vec<(i64, String)>,
}

impl SearchOutcome {
    pub fn footer_json(&self) -> serde_json::Value {
        json!({
            "tested": self.tested,
            "witnesses": self.witnesses,
            "skipped": self
                .skipped
                .iter()
                .map(|(u, reason)| json!({"u": u, "reason": reason}))
                .collect::<Vec<_>>(),
        })
    }
}

/// Scans u from u_max down to u_min (|u| ascending), reporting every u
/// whose invariant does not vanish. Factorization failures and bound
/// overruns become skipped rows. The outcome is deterministic and
/// independent of the worker count.
pub fn search_nonvanishing(
    p: u64,
    u_min: i64,
    u_max: i64,
    workers: usize,
    resume_from: Option<i64>,
    factor_bound: u64,
) -> crate::Result<SearchOutcome> {
    if p < 5 || !is_prime_u64(p) {
        return Err(crate::Error::InvalidInput(format!(
            "exponent must be a prime of at least 5, got {p}"
        )));
    }
    if workers == 0 {
        return Err(crate::Error::InvalidInput(
            "worker count must be positive".into(),
        ));
    }
    if u_min > u_max {
        return Err(crate::Error::InvalidInput(format!(
            "empty u range: {u_min} > {u_max}"
        )));
    }
    if u_max > -1 {
        return Err(crate::Error::InvalidInput(format!(
            "the scan covers negative u only, got upper end {u_max}"
        )));
    }
    if -u_min > MAX_SEARCH_U {
        return Err(crate::Error::InvalidInput(format!(
            "|u| is capped at {MAX_SEARCH_U}, got lower end {u_min}"
        )));
    }
    if let Some(r) = resume_from {
        if r > -1 {
            return Err(crate::Error::InvalidInput(format!(
                "resume point must be a negative u, got {r}"
            )));
        }
    }

    enum Row {
        Witness(Box<InvariantReport>),
        Quiet,
        Skipped(i64, String),
    }

    let start = resume_from.unwrap_or(u_max).min(u_max);
    let us: Vec<i64> = (u_min..=start).rev().collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| crate::Error::InvalidInput(format!("worker pool: {e}")))?;
    let rows = pool.install(|| {
        us.par_iter()
            .map(|&u| match psi(p, u, factor_bound) {
                Ok(report) => Ok(if report.nonvanishing {
                    Row::Witness(Box::new(report))
                } else {
                    Row::Quiet
                }),
                Err(crate::Error::FactorizationIncomplete(msg)) => {
                    Ok(Row::Skipped(u, format!("factorization incomplete: {msg}")))
                }
                Err(crate::Error::BoundExceeded(msg)) => {
                    Ok(Row::Skipped(u, format!("bound exceeded: {msg}")))
                }
                Err(e) => Err(e),
            })
            .collect::<crate::Result<Vec<Row>>>()
    })?;

    let mut out = SearchOutcome {
        reports: Vec::new(),
        tested: us.len() as u64,
        witnesses: 0,
        skipped: Vec::new(),
    };
    for row in rows {
        match row {
            Row::Witness(report) => {
                out.witnesses += 1;
                out.reports.push(*report);
            }
            Row::Quiet => {}
            Row::Skipped(u, reason) => out.skipped.push((u, reason)),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::DEFAULT_FACTOR_BOUND as BOUND;

    #[test]
    fn test_candidate_at_u_minus_two() {
        let cand = make_candidate(5, -2, BOUND).unwrap();
        assert_eq!(cand.p(), 5);
        assert_eq!(cand.u(), -2);
        assert_eq!(cand.d_raw(), &BigInt::from(-127));
        assert_eq!(cand.m(), &BigInt::one());
        assert_eq!(cand.d(), -127);
        assert!(!cand.degenerate_field());
        let x0 = cand.x0();
        assert_eq!(x0.a(), &half(BigInt::one()));
        assert_eq!(x0.b(), &half(BigInt::one()));
        // (x0, |u|) sits on y^p = x(1−x) and maps to the hyper point.
        let model = fermat_model(5).unwrap();
        let orig = AffinePoint::finite(
            x0.clone(),
            QuadFieldElem::from_rat(-127, Rat::from_int(2)).unwrap(),
        );
        assert!(model.is_on_original(&orig));
        assert_eq!(model.to_hyper(&orig).unwrap(), cand.hyper_point());
        assert!(model.is_on_hyper(&cand.hyper_point()));
    }

    #[test]
    fn test_candidate_identities() {
        for (u, want_d) in [
            (-2i64, -127i128),
            (-3, -971),
            (-4, -455),
            (-5, -12499),
            (-6, -31103),
            (-9, -236195),
        ] {
            let cand = make_candidate(5, u, BOUND).unwrap();
            assert_eq!(cand.d(), want_d, "u = {u}");
            assert_eq!(cand.d().rem_euclid(4), 1);
            let x0 = cand.x0();
            let conj = x0.conj();
            assert_eq!(x0.trace(), Rat::one());
            assert_eq!(
                x0.norm(),
                Rat::from_int(BigInt::from(-u).pow(5)),
                "u = {u}"
            );
            // m²d reassembles 4u^5 + 1.
            assert_eq!(
                cand.m() * cand.m() * BigInt::from(cand.d()),
                cand.d_raw().clone()
            );
            // (x0) and (x̄0) are coprime with product (|u|^5).
            let p1 = QuadIdeal::principal(cand.d(), x0).unwrap();
            let p2 = QuadIdeal::principal(cand.d(), &conj).unwrap();
            assert!(p1.sum(&p2).unwrap().is_unit_ideal());
            let norm_elem =
                QuadFieldElem::from_rat(cand.d(), Rat::from_int(BigInt::from(-u).pow(5))).unwrap();
            assert_eq!(
                p1.mul(&p2).unwrap(),
                QuadIdeal::principal(cand.d(), &norm_elem).unwrap()
            );
        }
    }

    #[test]
    fn test_candidate_rejections() {
        assert!(make_candidate(4, -2, BOUND).is_err());
        assert!(make_candidate(3, -2, BOUND).is_err());
        assert!(make_candidate(9, -2, BOUND).is_err());
        assert!(make_candidate(5, 0, BOUND).is_err());
        assert!(make_candidate(5, 1, BOUND).is_err());
        assert!(make_candidate(5, -MAX_SEARCH_U - 1, BOUND).is_err());
        // 4·(−6)^5 + 1 = −31103 = −19·1637: both factors above a tiny bound.
        match make_candidate(5, -6, 18) {
            Err(crate::Error::FactorizationIncomplete(_)) => {}
            other => panic!("expected FactorizationIncomplete, got {other:?}"),
        }
    }

    #[test]
    fn test_divide_ideal_at_u_minus_two() {
        let cand = make_candidate(5, -2, BOUND).unwrap();
        let a = divide_ideal(&cand).unwrap();
        assert_eq!(a.hnf(), (2, 0, 1));
        assert_eq!(a.norm(), 2);
        let c = ideal_to_class(&a).unwrap();
        assert_eq!(c, QuadForm::new(2, 1, 16).unwrap());
        // a^5 = (x0) as modules, not only as classes.
        let fifth = a.pow(5).unwrap();
        assert_eq!(fifth, QuadIdeal::principal(-127, cand.x0()).unwrap());
        assert_eq!(fifth.hnf(), (32, 0, 1));
        // The conjugate candidate ideal lands in the inverse class.
        let conj_class = ideal_to_class(&a.conj()).unwrap();
        assert_eq!(conj_class, c.inverse());
    }

    #[test]
    fn test_divide_ideal_class_is_p_torsion() {
        for u in [-2i64, -3, -4, -5, -6, -7, -8] {
            let cand = make_candidate(5, u, BOUND).unwrap();
            let a = divide_ideal(&cand).unwrap();
            assert_eq!(a.norm(), -u as i128, "u = {u}");
            let c = ideal_to_class(&a).unwrap();
            assert!(c.pow(5).unwrap().is_principal_class(), "u = {u}");
        }
    }

    #[test]
    fn test_psi_full_report_at_u_minus_two() {
        let r = psi(5, -2, BOUND).unwrap();
        assert_eq!(r.p, 5);
        assert_eq!(r.u, -2);
        assert_eq!(r.d, -127);
        assert_eq!(r.h, 5);
        assert_eq!(r.a.hnf(), (2, 0, 1));
        assert_eq!(r.class_of_a, QuadForm::new(2, 1, 16).unwrap());
        assert_eq!(r.p_splitting, SplittingType::Inert);
        assert_eq!(r.s_quotient_order, 5);
        assert_eq!(r.c_order, 5);
        assert_eq!(r.psi_tuple_orders, vec![1, 5, 5, 5, 5]);
        assert!(r.nonvanishing);
        assert_eq!(r.infinite_order, Verdict::ProvenInfinite);
        assert!(!r.degenerate_field);
        let cert = r.certificate.expect("proven verdicts carry a certificate");
        assert_eq!((cert.q1, cert.q2), (3, 7));
        assert_eq!((cert.n1, cert.n2), (5, 50));
        assert_eq!(cert.jacobian_order1, 100);
        assert_eq!(cert.jacobian_order2, 2500);
        assert_eq!(cert.verdict, Verdict::ProvenInfinite);
        // The certified divisor is (X + 2, √−127/2).
        assert_eq!(
            cert.divisor.u().coeffs(),
            &[
                QuadFieldElem::from_rat(-127, Rat::from_int(2)).unwrap(),
                QuadFieldElem::from_rat(-127, Rat::one()).unwrap()
            ]
        );
        assert_eq!(
            cert.divisor.v().coeffs(),
            &[QuadFieldElem::new(-127, Rat::zero(), half(BigInt::one())).unwrap()]
        );
    }

    #[test]
    fn test_report_json_exact_shape() {
        let r = psi(5, -2, BOUND).unwrap();
        assert_eq!(
            r.to_json().to_string(),
            "{\"p\":5,\"u\":-2,\"d\":\"-127\",\"h\":5,\
             \"a\":{\"norm\":\"2\",\"basis\":[\"2\",\"1/2 + 1/2*sqrt(-127)\"]},\
             \"class_of_a\":[\"2\",\"1\",\"16\"],\"p_splitting\":\"inert\",\
             \"s_quotient_order\":5,\"c_order\":5,\"psi_tuple_orders\":[1,5,5,5,5],\
             \"nonvanishing\":true,\"infinite_order\":\"proven\"}"
        );
    }

    #[test]
    fn test_psi_degenerate_u_minus_one() {
        // u = −1 gives d = −3: x0 is a sixth root of unity, a = O, and the
        // invariant vanishes; the point itself is still proven non-torsion.
        let r = psi(5, -1, BOUND).unwrap();
        assert!(r.degenerate_field);
        assert_eq!(r.d, -3);
        assert_eq!(r.h, 1);
        assert!(r.a.is_unit_ideal());
        assert_eq!(r.p_splitting, SplittingType::Inert);
        assert_eq!(r.s_quotient_order, 1);
        assert_eq!(r.psi_tuple_orders, vec![1, 1, 1, 1, 1]);
        assert!(!r.nonvanishing);
        assert_eq!(r.infinite_order, Verdict::ProvenInfinite);
        // 3 divides d and 5 = p, so the first usable reduction pair is (7, 11).
        let cert = r.certificate.unwrap();
        assert_eq!((cert.q1, cert.q2), (7, 11));
        assert_eq!((cert.n1, cert.n2), (50, 101));
        assert_eq!((cert.jacobian_order1, cert.jacobian_order2), (50, 12625));
    }

    #[test]
    fn test_psi_vanishing_cases() {
        // 5 | u puts a above p itself, so the image in the quotient dies.
        let r5 = psi(5, -5, BOUND).unwrap();
        assert_eq!(r5.d, -12499);
        assert_eq!(r5.h, 20);
        assert_eq!(r5.a.norm(), 5);
        assert_eq!(r5.p_splitting, SplittingType::Split);
        assert_eq!(r5.s_quotient_order, 4);
        assert_eq!(r5.c_order, 1);
        assert!(!r5.nonvanishing);
        // 5 | h(−971) = 15, yet the primes above 5 generate everything.
        let r3 = psi(5, -3, BOUND).unwrap();
        assert_eq!(r3.d, -971);
        assert_eq!(r3.h, 15);
        assert_eq!(r3.p_splitting, SplittingType::Split);
        assert_eq!(r3.s_quotient_order, 1);
        assert_eq!(r3.c_order, 1);
        assert!(!r3.nonvanishing);
        // Both points are still certified non-torsion.
        assert_eq!(r5.infinite_order, Verdict::ProvenInfinite);
        assert_eq!(r3.infinite_order, Verdict::ProvenInfinite);
    }

    #[test]
    fn test_search_range_and_worker_independence() {
        let s1 = search_nonvanishing(5, -12, -2, 1, None, BOUND).unwrap();
        assert_eq!(s1.tested, 11);
        assert_eq!(s1.witnesses, 7);
        assert!(s1.skipped.is_empty());
        let found: Vec<(i64, i128, u64)> = s1.reports.iter().map(|r| (r.u, r.d, r.h)).collect();
        assert_eq!(
            found,
            vec![
                (-2, -127, 5),
                (-4, -455, 20),
                (-6, -31103, 110),
                (-7, -67227, 70),
                (-9, -236195, 100),
                (-11, -13147, 15),
                (-12, -995327, 495),
            ]
        );
        for r in &s1.reports {
            assert!(r.nonvanishing);
            assert_eq!(r.c_order, 5);
            assert_eq!(r.infinite_order, Verdict::ProvenInfinite);
        }
        // u = −11 has m = 7, so reduction at 7 lands on a Weierstrass point.
        let r11 = &s1.reports[5];
        assert_eq!(r11.certificate.as_ref().unwrap().n2, 2);

        let s4 = search_nonvanishing(5, -12, -2, 4, None, BOUND).unwrap();
        let json1: Vec<String> = s1.reports.iter().map(|r| r.to_json().to_string()).collect();
        let json4: Vec<String> = s4.reports.iter().map(|r| r.to_json().to_string()).collect();
        assert_eq!(json1, json4);
        assert_eq!(s1.footer_json(), s4.footer_json());
    }

    #[test]
    fn test_search_resume_and_edges() {
        let resumed = search_nonvanishing(5, -8, -2, 2, Some(-5), BOUND).unwrap();
        assert_eq!(resumed.tested, 4);
        assert_eq!(resumed.witnesses, 2);
        let us: Vec<i64> = resumed.reports.iter().map(|r| r.u).collect();
        assert_eq!(us, vec![-6, -7]);
        // A resume point above the range is a no-op; one below empties it.
        let noop = search_nonvanishing(5, -4, -2, 1, Some(-1), BOUND).unwrap();
        assert_eq!(noop.tested, 3);
        let empty = search_nonvanishing(5, -4, -2, 1, Some(-999), BOUND).unwrap();
        assert_eq!(empty.tested, 0);
        assert_eq!(empty.witnesses, 0);
        // The degenerate endpoint alone: tested but no witness.
        let degen = search_nonvanishing(5, -1, -1, 1, None, BOUND).unwrap();
        assert_eq!(degen.tested, 1);
        assert_eq!(degen.witnesses, 0);
        assert!(degen.reports.is_empty());
        assert!(degen.skipped.is_empty());
    }

    #[test]
    fn test_search_input_rejections() {
        assert!(search_nonvanishing(5, -5, 0, 1, None, BOUND).is_err());
        assert!(search_nonvanishing(5, -2, -5, 1, None, BOUND).is_err());
        assert!(search_nonvanishing(5, -5, -2, 0, None, BOUND).is_err());
        assert!(search_nonvanishing(6, -5, -2, 1, None, BOUND).is_err());
        assert!(search_nonvanishing(5, -MAX_SEARCH_U - 1, -2, 1, None, BOUND).is_err());
        assert!(search_nonvanishing(5, -5, -2, 1, Some(3), BOUND).is_err());
    }

    #[test]
    fn test_search_skip_rows_surface() {
        let out = search_nonvanishing(5, -6, -6, 1, None, 18).unwrap();
        assert_eq!(out.tested, 1);
        assert_eq!(out.witnesses, 0);
        assert!(out.reports.is_empty());
        assert_eq!(out.skipped.len(), 1);
        assert_eq!(out.skipped[0].0, -6);
        assert!(out.skipped[0].1.contains("factorization incomplete"));
        let footer = out.footer_json();
        assert_eq!(footer["tested"], 1);
        assert_eq!(footer["skipped"][0]["u"], -6);
    }
}
