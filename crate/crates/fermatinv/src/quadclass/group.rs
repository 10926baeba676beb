//! Full enumeration of the form class group of a negative discriminant,
//! with structure (elementary divisors), generators, and S-quotients.

use std::collections::HashMap;
use std::sync::OnceLock;

use serde_json::json;

use crate::exactnum::primes_up_to;
use crate::quadclass::forms::{gcd_i, QuadForm};

/// Largest |d| accepted by [`class_group`] before reporting BoundExceeded.
pub const DEFAULT_DISC_BOUND: u64 = 4_000_000_000;

/// Hard ceiling tied to the enumeration's factor base.
const MAX_DISC_BOUND: u64 = 16_000_000_000;

fn factor_base() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(131_072))
}

/// Factors m using the cached prime table; m must stay below 1.7·10^10.
fn factor_small(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for &p in factor_base() {
        if p * p > m {
            break;
        }
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

fn divisors_from(factors: &[(u64, u32)]) -> Vec<u64> {
    let mut out = vec![1u64];
    for &(p, e) in factors {
        let len = out.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out
}

/// The class group of discriminant d, fully enumerated.
#[derive(Clone, Debug)]
pub struct ClassGroup {
    d: i128,
    forms: Vec<QuadForm>,
    index: HashMap<QuadForm, usize>,
    identity_idx: usize,
    h: u64,
    structure: Vec<u64>,
    generators: Vec<QuadForm>,
}

pub fn class_group(d: i128) -> crate::Result<ClassGroup> {
    class_group_with_bound(d, DEFAULT_DISC_BOUND)
}

pub fn class_group_with_bound(d: i128, bound: u64) -> crate::Result<ClassGroup> {
    if d >= 0 {
        return Err(crate::Error::InvalidInput(format!(
            "discriminant must be negative, got {d}"
        )));
    }
    let r = d.rem_euclid(4);
    if r != 0 && r != 1 {
        return Err(crate::Error::InvalidInput(format!(
            "{d} is not a discriminant (need 0 or 1 mod 4)"
        )));
    }
    let bound = bound.min(MAX_DISC_BOUND);
    let abs_d = (-d) as u128;
    if abs_d > bound as u128 {
        return Err(crate::Error::BoundExceeded(format!(
            "|d| = {abs_d} exceeds the class-group bound {bound}"
        )));
    }
    let abs_d = abs_d as u64;

    // Reduced forms: b ≥ 0, b ≡ d (mod 2), 3b² ≤ |d|, a·c = (b² + |d|)/4
    // with b ≤ a ≤ c; the mirror (a, −b, c) exists off the boundaries.
    let mut forms = Vec::new();
    let mut b = abs_d % 2;
    while 3 * b * b <= abs_d {
        let m = (b * b + abs_d) / 4;
        for a in divisors_from(&factor_small(m)) {
            if a < b.max(1) || a * a > m {
                continue;
            }
            let c = m / a;
            let (ai, bi, ci) = (a as i128, b as i128, c as i128);
            if gcd_i(gcd_i(ai, bi), ci) != 1 {
                continue;
            }
            forms.push(QuadForm::new(ai, bi, ci).expect("reduced by construction"));
            if b > 0 && b < a && a < c {
                forms.push(QuadForm::new(ai, -bi, ci).expect("reduced by construction"));
            }
        }
        b += 2;
    }
    forms.sort();
    let index: HashMap<QuadForm, usize> =
        forms.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
    let identity_idx = *index
        .get(&QuadForm::identity(d)?)
        .expect("principal form is reduced");
    let h = forms.len() as u64;

    let structure = elementary_divisors(&forms, &index, identity_idx)?;
    let generators = greedy_generators(&forms, &index, identity_idx)?;
    Ok(ClassGroup {
        d,
        forms,
        index,
        identity_idx,
        h,
        structure,
        generators,
    })
}

/// Elementary divisors (prime-power cyclic orders) via kernel counting:
/// for each prime q | h the sizes of ker(x ↦ x^{q^k}) determine the
/// partition of the q-Sylow subgroup.
fn elementary_divisors(
    forms: &[QuadForm],
    index: &HashMap<QuadForm, usize>,
    identity_idx: usize,
) -> crate::Result<Vec<u64>> {
    let h = forms.len() as u64;
    let mut out = Vec::new();
    for (q, e) in factor_small(h) {
        let map_q: Vec<usize> = forms
            .iter()
            .map(|f| {
                let fq = f.pow(q)?;
                Ok(*index.get(&fq).ok_or_else(|| {
                    crate::Error::InternalFieldError("composition left the reduced set".into())
                })?)
            })
            .collect::<crate::Result<_>>()?;
        // s[k] = log_q #ker(q^k-power map), k = 0..e.
        let mut s = vec![0u32];
        let mut cur: Vec<usize> = (0..forms.len()).collect();
        for _ in 1..=e {
            cur = cur.into_iter().map(|i| map_q[i]).collect();
            let n_k = cur.iter().filter(|&&i| i == identity_idx).count() as u64;
            let mut log = 0u32;
            let mut acc = 1u64;
            while acc < n_k {
                acc *= q;
                log += 1;
            }
            if acc != n_k {
                return Err(crate::Error::InternalFieldError(format!(
                    "kernel size {n_k} is not a power of {q}"
                )));
            }
            s.push(log);
        }
        // m[k] = #partition parts ≥ k; conjugate to read off the parts.
        let m: Vec<u32> = (1..=e as usize).map(|k| s[k] - s[k - 1]).collect();
        for i in 1..=m[0] {
            let part = m.iter().filter(|&&mk| mk >= i).count() as u32;
            out.push(q.pow(part));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// A generating set found by closing over lex-least missing classes.
/// Generators need not align with the elementary divisors.
fn greedy_generators(
    forms: &[QuadForm],
    index: &HashMap<QuadForm, usize>,
    identity_idx: usize,
) -> crate::Result<Vec<QuadForm>> {
    let h = forms.len();
    let mut in_sub = vec![false; h];
    in_sub[identity_idx] = true;
    let mut count = 1;
    let mut gens = Vec::new();
    let mut scan_from = 0;
    while count < h {
        while in_sub[scan_from] {
            scan_from += 1;
        }
        let g = forms[scan_from].clone();
        gens.push(g.clone());
        let members: Vec<usize> = (0..h).filter(|&i| in_sub[i]).collect();
        for x in members {
            let mut cur = x;
            loop {
                let next = forms[cur].compose(&g)?;
                cur = *index.get(&next).ok_or_else(|| {
                    crate::Error::InternalFieldError("composition left the reduced set".into())
                })?;
                if in_sub[cur] {
                    break;
                }
                in_sub[cur] = true;
                count += 1;
            }
        }
    }
    Ok(gens)
}

impl ClassGroup {
    pub fn d(&self) -> i128 {
        self.d
    }

    pub fn h(&self) -> u64 {
        self.h
    }

    /// All reduced forms, sorted lexicographically by (a, b, c).
    pub fn forms(&self) -> &[QuadForm] {
        &self.forms
    }

    /// Elementary divisors: prime-power cyclic orders whose product is h.
    /// Empty for the trivial group.
    pub fn structure(&self) -> &[u64] {
        &self.structure
    }

    pub fn generators(&self) -> &[QuadForm] {
        &self.generators
    }

    pub fn identity(&self) -> &QuadForm {
        &self.forms[self.identity_idx]
    }

    pub fn is_cyclic(&self) -> bool {
        // Pairwise-coprime elementary divisors.
        for (i, a) in self.structure.iter().enumerate() {
            for b in &self.structure[i + 1..] {
                if gcd_i(*a as i128, *b as i128) != 1 {
                    return false;
                }
            }
        }
        true
    }

    pub fn contains(&self, f: &QuadForm) -> bool {
        f.discriminant() == self.d && self.index.contains_key(&f.reduce())
    }

    /// Order of the class of f under composition.
    pub fn order_of(&self, f: &QuadForm) -> crate::Result<u64> {
        if !self.contains(f) {
            return Err(crate::Error::InvalidInput(format!(
                "form {f} is not a class of discriminant {}",
                self.d
            )));
        }
        let f = f.reduce();
        let mut acc = f.clone();
        let mut ord = 1;
        while !acc.is_principal_class() {
            acc = acc.compose(&f)?;
            ord += 1;
        }
        Ok(ord)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "d": self.d.to_string(),
            "h": self.h,
            "structure": self.structure,
            "forms": self.forms.iter().map(form_json).collect::<Vec<_>>(),
        })
    }
}

pub(crate) fn form_json(f: &QuadForm) -> serde_json::Value {
    json!([f.a().to_string(), f.b().to_string(), f.c().to_string()])
}

/// The quotient of a class group by the subgroup generated by the classes
/// of a set S of ideals; "trivial in Cl_S" means "lies in that subgroup".
#[derive(Clone, Debug)]
pub struct SClassGroup {
    d: i128,
    subgroup: Vec<QuadForm>,
    quotient_order: u64,
}

pub fn s_class_group(cg: &ClassGroup, s_classes: &[QuadForm]) -> crate::Result<SClassGroup> {
    let h = cg.forms.len();
    let mut in_sub = vec![false; h];
    in_sub[cg.identity_idx] = true;
    let mut count = 1usize;
    for g in s_classes {
        if !cg.contains(g) {
            return Err(crate::Error::InvalidInput(format!(
                "class {g} does not belong to discriminant {}",
                cg.d
            )));
        }
        let g = g.reduce();
        let members: Vec<usize> = (0..h).filter(|&i| in_sub[i]).collect();
        for x in members {
            let mut cur = x;
            loop {
                let next = cg.forms[cur].compose(&g)?;
                cur = cg.index[&next];
                if in_sub[cur] {
                    break;
                }
                in_sub[cur] = true;
                count += 1;
            }
        }
    }
    if h % count != 0 {
        return Err(crate::Error::InternalFieldError(
            "subgroup order does not divide the class number".into(),
        ));
    }
    let subgroup = (0..h)
        .filter(|&i| in_sub[i])
        .map(|i| cg.forms[i].clone())
        .collect();
    Ok(SClassGroup {
        d: cg.d,
        subgroup,
        quotient_order: (h / count) as u64,
    })
}

impl SClassGroup {
    pub fn d(&self) -> i128 {
        self.d
    }

    pub fn subgroup_order(&self) -> u64 {
        self.subgroup.len() as u64
    }

    pub fn quotient_order(&self) -> u64 {
        self.quotient_order
    }

    /// Sorted members of the subgroup ⟨classes of S⟩.
    pub fn subgroup(&self) -> &[QuadForm] {
        &self.subgroup
    }

    pub fn is_trivial_in_quotient(&self, f: &QuadForm) -> bool {
        f.discriminant() == self.d && self.subgroup.binary_search(&f.reduce()).is_ok()
    }

    /// Order of the image of f in the quotient.
    pub fn order_in_quotient(&self, f: &QuadForm) -> crate::Result<u64> {
        if f.discriminant() != self.d {
            return Err(crate::Error::InvalidInput(format!(
                "form {f} has discriminant {}, expected {}",
                f.discriminant(),
                self.d
            )));
        }
        let f = f.reduce();
        let mut acc = f.clone();
        let mut ord = 1;
        while !self.is_trivial_in_quotient(&acc) {
            acc = acc.compose(&f)?;
            ord += 1;
        }
        Ok(ord)
    }
}
