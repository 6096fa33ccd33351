//! Normal-form arithmetic for the presentation families of cyclic-by-cyclic
//! extensions, including the infinite ones.
//!
//! Every family fixes a two-generator normal form and a closed multiplication
//! law derived from its defining relations. The laws below are exact; residue
//! components stay reduced and free components are plain integers that are
//! never allowed to wrap.
//!
//! - `Holder { n, m, i, j }`: `<a, b | a^n = 1, b^m = a^i, b^-1 a b = a^j>`
//!   with `i(j-1) = 0 (mod n)` and `j^m = 1 (mod n)`. Normal form `a^p b^q`,
//!   `p` mod `n`, `q` mod `m`. From `b^-1 a b = a^j` one gets
//!   `b a b^-1 = a^(j*)` with `j* = j^-1 (mod n)` (invertible because
//!   `j^m = 1` forces `gcd(j, n) = 1`), hence `b^q a^r = a^(r (j*)^q) b^q`,
//!   and `b^(q+s) = a^(i floor((q+s)/m)) b^((q+s) mod m)`:
//!
//!   ```text
//!   (p, q)(r, s) = (p + r (j*)^q + i floor((q+s)/m) mod n, (q+s) mod m)
//!   ```
//!
//! - `FinByInf { n, t }`: `<a, g | a^n = 1, g^-1 a g = a^t>`, `gcd(t, n) = 1`.
//!   Normal form `g^p a^q`, `p` free, `q` mod `n`; moving `g^p'` left across
//!   `a^q` conjugates, so `(p, q)(p', q') = (p + p', q t^p' + q' mod n)` with
//!   `t^p'` computed modulo `n` (negative `p'` via the inverse of `t`).
//!
//! - `InfByFinAbelian { n, t }`: `<g, h | gh = hg, h^n = g^t>`. Normal form
//!   `h^p g^q`, `p` mod `n` with carry `h^n = g^t`:
//!   `(p, q)(p', q') = ((p+p') mod n, q + q' + t floor((p+p')/n))`.
//!
//! - `InfByFinFlip { n }` (`n` even): `<g, h | h^n = 1, ghg = h>`. The
//!   relation gives `g h = h g^-1`, so `g^q h^p' = h^p' g^(q (-1)^p')` and
//!   `(p, q)(p', q') = ((p+p') mod n, q (-1)^p' + q')`. Reduction of `p`
//!   modulo the even `n` preserves the parity the sign rule depends on.
//!
//! - `ZxZ`: free abelian on two generators, componentwise addition on
//!   `g2^p g1^q`.
//!
//! - `KleinBottle`: `<g1, g2 | g1 g2 g1 = g2>`, normal form `g2^p g1^q` with
//!   `(p, q)(p', q') = (p + p', q (-1)^p' + q')` like the flip family but
//!   with a free first component.
//!
//! - `TwistedFinite` / `TwistedInfinite`: pairs `(u, k)` with `u` the
//!   exponent in the coefficient group (mod `n`, or free for the infinite
//!   target) and `k` the index in `C_m`, multiplied by
//!   `(u, k)(u', k') = (u + u' + S[k+k'] - S[k] - S[k'], (k+k') mod m)`
//!   where `S` are the partial sums of the profile.

use crate::arith::{gcd, mod_pow, narrow};
use crate::cocycle::{partial_sums, CocycleError, CocycleProfile, CocycleTarget, PartialSums};
use crate::table::FiniteGroupTable;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("parameter {name} = {value} violates: {requirement}")]
    BadParameter {
        name: &'static str,
        value: i64,
        requirement: &'static str,
    },
    #[error("Holder condition i(j-1) = 0 (mod n) fails for n={n}, i={i}, j={j}")]
    HolderCongruenceIj { n: u64, i: u64, j: u64 },
    #[error("Holder condition j^m = 1 (mod n) fails for n={n}, m={m}, j={j}")]
    HolderCongruenceJm { n: u64, m: u64, j: u64 },
    #[error("t = {t} must be coprime to n = {n}, gcd = {d}")]
    NotCoprime { n: u64, t: i64, d: u64 },
    #[error("flip family requires even n, got {n}")]
    OddOrderFlip { n: u64 },
    #[error("twisted family target does not match the profile")]
    TargetMismatch,
    #[error("infinite family has no finite multiplication table")]
    InfiniteFamily,
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
}

/// Normal-form element: a pair of exponents whose meaning is fixed by the
/// family (see the module docs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyElement {
    pub p: i64,
    pub q: i64,
}

impl FamilyElement {
    pub fn new(p: i64, q: i64) -> Self {
        FamilyElement { p, q }
    }
}

impl From<(i64, i64)> for FamilyElement {
    fn from((p, q): (i64, i64)) -> Self {
        FamilyElement { p, q }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementOrder {
    Finite(u64),
    Infinite,
}

/// Twisted-family payload: the profile together with its cached partial sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedData {
    profile: CocycleProfile,
    sums: PartialSums,
}

impl TwistedData {
    pub fn profile(&self) -> &CocycleProfile {
        &self.profile
    }

    pub fn sums(&self) -> &PartialSums {
        &self.sums
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupFamily {
    Holder { n: u64, m: u64, i: u64, j: u64 },
    FinByInf { n: u64, t: i64 },
    InfByFinAbelian { n: u64, t: i64 },
    InfByFinFlip { n: u64 },
    ZxZ,
    KleinBottle,
    TwistedFinite(TwistedData),
    TwistedInfinite(TwistedData),
}

impl GroupFamily {
    pub fn holder(n: u64, m: u64, i: u64, j: u64) -> Result<Self, FamilyError> {
        let fam = GroupFamily::Holder { n, m, i, j };
        fam.validate()?;
        Ok(fam)
    }

    pub fn fin_by_inf(n: u64, t: i64) -> Result<Self, FamilyError> {
        let fam = GroupFamily::FinByInf { n, t };
        fam.validate()?;
        Ok(fam)
    }

    pub fn inf_by_fin_abelian(n: u64, t: i64) -> Result<Self, FamilyError> {
        let fam = GroupFamily::InfByFinAbelian { n, t };
        fam.validate()?;
        Ok(fam)
    }

    pub fn inf_by_fin_flip(n: u64) -> Result<Self, FamilyError> {
        let fam = GroupFamily::InfByFinFlip { n };
        fam.validate()?;
        Ok(fam)
    }

    pub fn twisted_finite(profile: CocycleProfile) -> Result<Self, FamilyError> {
        if !profile.target().is_finite() {
            return Err(FamilyError::TargetMismatch);
        }
        let sums = partial_sums(&profile);
        Ok(GroupFamily::TwistedFinite(TwistedData { profile, sums }))
    }

    pub fn twisted_infinite(profile: CocycleProfile) -> Result<Self, FamilyError> {
        if profile.target().is_finite() {
            return Err(FamilyError::TargetMismatch);
        }
        let sums = partial_sums(&profile);
        Ok(GroupFamily::TwistedInfinite(TwistedData { profile, sums }))
    }

    /// Checks the parameter conditions the family's presentation requires.
    pub fn validate(&self) -> Result<(), FamilyError> {
        match self {
            GroupFamily::Holder { n, m, i, j } => {
                require_at_least_two("n", *n)?;
                require_at_least_two("m", *m)?;
                for (name, v) in [("i", *i), ("j", *j)] {
                    if v >= *n {
                        return Err(FamilyError::BadParameter {
                            name,
                            value: v as i64,
                            requirement: "must lie in [0, n)",
                        });
                    }
                }
                // i(j - 1) = 0 (mod n)
                let ij = (*i as i128) * (*j as i128 - 1);
                if ij.rem_euclid(*n as i128) != 0 {
                    return Err(FamilyError::HolderCongruenceIj {
                        n: *n,
                        i: *i,
                        j: *j,
                    });
                }
                // j^m = 1 (mod n); in particular j is invertible mod n
                let jm = mod_pow(*j as i64, *m as i64, *n).expect("non-negative exponent");
                if jm.value() != 1 % *n {
                    return Err(FamilyError::HolderCongruenceJm {
                        n: *n,
                        m: *m,
                        j: *j,
                    });
                }
                Ok(())
            }
            GroupFamily::FinByInf { n, t } => {
                require_at_least_two("n", *n)?;
                let d = gcd(*t, *n as i64);
                if d != 1 {
                    return Err(FamilyError::NotCoprime { n: *n, t: *t, d });
                }
                Ok(())
            }
            GroupFamily::InfByFinAbelian { n, .. } => require_at_least_two("n", *n),
            GroupFamily::InfByFinFlip { n } => {
                require_at_least_two("n", *n)?;
                if *n % 2 != 0 {
                    return Err(FamilyError::OddOrderFlip { n: *n });
                }
                Ok(())
            }
            GroupFamily::ZxZ | GroupFamily::KleinBottle => Ok(()),
            GroupFamily::TwistedFinite(data) => {
                if !data.profile.target().is_finite() {
                    return Err(FamilyError::TargetMismatch);
                }
                Ok(())
            }
            GroupFamily::TwistedInfinite(data) => {
                if data.profile.target().is_finite() {
                    return Err(FamilyError::TargetMismatch);
                }
                Ok(())
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(
            self,
            GroupFamily::Holder { .. } | GroupFamily::TwistedFinite(_)
        )
    }

    /// Group order for the finite families.
    pub fn order(&self) -> Option<u64> {
        match self {
            GroupFamily::Holder { n, m, .. } => Some(n * m),
            GroupFamily::TwistedFinite(data) => match data.profile.target() {
                CocycleTarget::Finite(n) => Some(n * data.profile.m()),
                CocycleTarget::InfiniteCyclic => unreachable!("finite target by construction"),
            },
            _ => None,
        }
    }

    pub fn identity_element(&self) -> FamilyElement {
        FamilyElement::new(0, 0)
    }

    /// Reduces an arbitrary exponent pair into the family's normal form.
    pub fn element(&self, p: i64, q: i64) -> FamilyElement {
        match self {
            GroupFamily::Holder { n, m, i, .. } => {
                // b^q = a^(i floor(q/m)) b^(q mod m)
                let carry = q.div_euclid(*m as i64);
                let q = q.rem_euclid(*m as i64);
                let p = (p as i128 + *i as i128 * carry as i128).rem_euclid(*n as i128) as i64;
                FamilyElement::new(p, q)
            }
            GroupFamily::FinByInf { n, .. } => FamilyElement::new(p, q.rem_euclid(*n as i64)),
            GroupFamily::InfByFinAbelian { n, t } => {
                // h^p = h^(p mod n) g^(t floor(p/n))
                let carry = p.div_euclid(*n as i64);
                let p = p.rem_euclid(*n as i64);
                let q = narrow(q as i128 + *t as i128 * carry as i128);
                FamilyElement::new(p, q)
            }
            GroupFamily::InfByFinFlip { n } => FamilyElement::new(p.rem_euclid(*n as i64), q),
            GroupFamily::ZxZ | GroupFamily::KleinBottle => FamilyElement::new(p, q),
            GroupFamily::TwistedFinite(data) => {
                let m = data.profile.m() as i64;
                let n = finite_target_order(&data.profile) as i64;
                FamilyElement::new(p.rem_euclid(n), q.rem_euclid(m))
            }
            GroupFamily::TwistedInfinite(data) => {
                FamilyElement::new(p, q.rem_euclid(data.profile.m() as i64))
            }
        }
    }

    /// Whether the pair already is a normal form for this family.
    pub fn in_normal_form(&self, e: FamilyElement) -> bool {
        self.element(e.p, e.q) == e
    }

    /// Exact normal-form product. Inputs must be in normal form.
    pub fn multiply(&self, e1: FamilyElement, e2: FamilyElement) -> FamilyElement {
        debug_assert!(self.in_normal_form(e1), "left factor not in normal form");
        debug_assert!(self.in_normal_form(e2), "right factor not in normal form");
        match self {
            GroupFamily::Holder { n, m, i, j } => {
                let m = *m as i64;
                // r (j*)^q with j* = j^-1 (mod n)
                let twist = mod_pow(*j as i64, -e1.q, *n)
                    .expect("j is invertible mod n for valid parameters")
                    .value();
                let qs = e1.q + e2.q;
                let carry = qs / m;
                let p = (e1.p as i128 + e2.p as i128 * twist as i128
                    + *i as i128 * carry as i128)
                    .rem_euclid(*n as i128) as i64;
                FamilyElement::new(p, qs % m)
            }
            GroupFamily::FinByInf { n, t } => {
                let tp = mod_pow(*t, e2.p, *n)
                    .expect("t is invertible mod n for valid parameters")
                    .value();
                let q = (e1.q as i128 * tp as i128 + e2.q as i128).rem_euclid(*n as i128) as i64;
                FamilyElement::new(checked_add(e1.p, e2.p), q)
            }
            GroupFamily::InfByFinAbelian { n, t } => {
                let n = *n as i64;
                let ps = e1.p + e2.p;
                let carry = ps / n;
                let q = narrow(e1.q as i128 + e2.q as i128 + *t as i128 * carry as i128);
                FamilyElement::new(ps % n, q)
            }
            GroupFamily::InfByFinFlip { n } => {
                let n = *n as i64;
                let q = if e2.p % 2 == 1 {
                    checked_add(-e1.q, e2.q)
                } else {
                    checked_add(e1.q, e2.q)
                };
                FamilyElement::new((e1.p + e2.p) % n, q)
            }
            GroupFamily::ZxZ => {
                FamilyElement::new(checked_add(e1.p, e2.p), checked_add(e1.q, e2.q))
            }
            GroupFamily::KleinBottle => {
                let q = if e2.p.rem_euclid(2) == 1 {
                    checked_add(-e1.q, e2.q)
                } else {
                    checked_add(e1.q, e2.q)
                };
                FamilyElement::new(checked_add(e1.p, e2.p), q)
            }
            GroupFamily::TwistedFinite(data) => {
                let m = data.profile.m() as i64;
                let n = finite_target_order(&data.profile) as i128;
                let ks = e1.q + e2.q;
                let f = data.sums.at(ks as u64) - data.sums.at(e1.q as u64)
                    - data.sums.at(e2.q as u64);
                let u = (e1.p as i128 + e2.p as i128 + f as i128).rem_euclid(n) as i64;
                FamilyElement::new(u, ks % m)
            }
            GroupFamily::TwistedInfinite(data) => {
                let m = data.profile.m() as i64;
                let ks = e1.q + e2.q;
                let f = data.sums.at(ks as u64) - data.sums.at(e1.q as u64)
                    - data.sums.at(e2.q as u64);
                let u = narrow(e1.p as i128 + e2.p as i128 + f as i128);
                FamilyElement::new(u, ks % m)
            }
        }
    }

    pub fn inverse(&self, e: FamilyElement) -> FamilyElement {
        let inv = match self {
            GroupFamily::Holder { n, m, i, j } => {
                let m = *m as i64;
                let s = (m - e.q) % m;
                let carry = (e.q + s) / m;
                let jq = mod_pow(*j as i64, e.q, *n).expect("valid parameters").value();
                let r = ((-(e.p as i128) - *i as i128 * carry as i128) * jq as i128)
                    .rem_euclid(*n as i128) as i64;
                FamilyElement::new(r, s)
            }
            GroupFamily::FinByInf { n, t } => {
                let tp = mod_pow(*t, -e.p, *n).expect("valid parameters").value();
                let q = (-(e.q as i128) * tp as i128).rem_euclid(*n as i128) as i64;
                FamilyElement::new(-e.p, q)
            }
            GroupFamily::InfByFinAbelian { n, t } => {
                let n = *n as i64;
                let p = (n - e.p) % n;
                let carry = (e.p + p) / n;
                FamilyElement::new(p, narrow(-(e.q as i128) - *t as i128 * carry as i128))
            }
            GroupFamily::InfByFinFlip { n } => {
                let n = *n as i64;
                let p = (n - e.p) % n;
                let q = if p % 2 == 1 { e.q } else { -e.q };
                FamilyElement::new(p, q)
            }
            GroupFamily::ZxZ => FamilyElement::new(-e.p, -e.q),
            GroupFamily::KleinBottle => {
                let q = if e.p.rem_euclid(2) == 1 { e.q } else { -e.q };
                FamilyElement::new(-e.p, q)
            }
            GroupFamily::TwistedFinite(data) | GroupFamily::TwistedInfinite(data) => {
                let m = data.profile.m() as i64;
                let k = (m - e.q) % m;
                let f = data.sums.at((e.q + k) as u64) - data.sums.at(e.q as u64)
                    - data.sums.at(k as u64);
                let u = match data.profile.target() {
                    CocycleTarget::Finite(n) => {
                        (-(e.p as i128) - f as i128).rem_euclid(n as i128) as i64
                    }
                    CocycleTarget::InfiniteCyclic => narrow(-(e.p as i128) - f as i128),
                };
                FamilyElement::new(u, k)
            }
        };
        debug_assert_eq!(self.multiply(e, inv), self.identity_element());
        inv
    }

    /// `e^k` by repeated squaring; negative `k` goes through the inverse.
    pub fn power(&self, e: FamilyElement, k: i64) -> FamilyElement {
        if k < 0 {
            return self.power(self.inverse(e), k.checked_neg().expect("exponent overflow"));
        }
        let mut acc = self.identity_element();
        let mut base = e;
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.multiply(acc, base);
            }
            k >>= 1;
            if k > 0 {
                base = self.multiply(base, base);
            }
        }
        acc
    }

    /// Least `k >= 1` with `e^k = 1`, or `Infinite`.
    ///
    /// Infinite families are decided structurally: an element can only be
    /// torsion when its image under the family's homomorphism to the
    /// integers vanishes (`FinByInf`: the free `g`-exponent;
    /// `InfByFinAbelian`: `theta(h^p g^q) = p t + q n`; `TwistedInfinite`:
    /// the same through the presentation isomorphism; `ZxZ`/`KleinBottle`:
    /// both exponents). The bounded torsion part is then searched directly.
    pub fn element_order(&self, e: FamilyElement) -> ElementOrder {
        debug_assert!(self.in_normal_form(e));
        match self {
            GroupFamily::Holder { n, m, .. } => self.order_by_iteration(e, n * m),
            GroupFamily::TwistedFinite(data) => {
                let n = finite_target_order(&data.profile);
                self.order_by_iteration(e, n * data.profile.m())
            }
            GroupFamily::FinByInf { n, .. } => {
                if e.p != 0 {
                    ElementOrder::Infinite
                } else {
                    ElementOrder::Finite(n / gcd(e.q, *n as i64))
                }
            }
            GroupFamily::InfByFinAbelian { n, t } => {
                let theta = e.p as i128 * *t as i128 + e.q as i128 * *n as i128;
                if theta != 0 {
                    ElementOrder::Infinite
                } else {
                    // kernel elements are powers of h^(n/d) g^(-t/d), whose
                    // d-th power is trivial
                    self.order_by_iteration(e, *n)
                }
            }
            GroupFamily::InfByFinFlip { n } => {
                if e.p % 2 == 1 || e.q == 0 {
                    // odd p squares into the finite part <h>
                    self.order_by_iteration(e, 2 * n)
                } else {
                    ElementOrder::Infinite
                }
            }
            GroupFamily::ZxZ | GroupFamily::KleinBottle => {
                if e == self.identity_element() {
                    ElementOrder::Finite(1)
                } else {
                    ElementOrder::Infinite
                }
            }
            GroupFamily::TwistedInfinite(data) => {
                let m = data.profile.m();
                let s_m = data.sums.s_m();
                let theta = e.q as i128 * s_m as i128
                    + (e.p as i128 - data.sums.at(e.q as u64) as i128) * m as i128;
                if theta != 0 {
                    ElementOrder::Infinite
                } else {
                    self.order_by_iteration(e, m)
                }
            }
        }
    }

    fn order_by_iteration(&self, e: FamilyElement, bound: u64) -> ElementOrder {
        let id = self.identity_element();
        let mut cur = e;
        let mut k = 1u64;
        while cur != id {
            cur = self.multiply(cur, e);
            k += 1;
            assert!(k <= bound, "order search exceeded the structural bound");
        }
        ElementOrder::Finite(k)
    }

    /// Multiplication table of a finite family, element `(p, q)` at index
    /// `p * m + q`.
    ///
    /// The fill is a specialized form of [`GroupFamily::multiply`] with the
    /// twist and cocycle terms precomputed; agreement with `multiply` is
    /// pinned by tests.
    pub fn to_table(&self) -> Result<FiniteGroupTable, FamilyError> {
        let (n, m) = match self {
            GroupFamily::Holder { n, m, .. } => (*n as usize, *m as usize),
            GroupFamily::TwistedFinite(data) => (
                finite_target_order(&data.profile) as usize,
                data.profile.m() as usize,
            ),
            _ => return Err(FamilyError::InfiniteFamily),
        };
        let order = n * m;
        let mut product = vec![0usize; order * order];
        match self {
            GroupFamily::Holder { n: nn, j, i, .. } => {
                // twist[q] = (j*)^q mod n
                let jstar = mod_pow(*j as i64, -1, *nn)
                    .expect("j is invertible mod n for valid parameters")
                    .value();
                let mut twist = vec![1u64; m];
                for q in 1..m {
                    twist[q] = twist[q - 1] * jstar % *nn;
                }
                for p1 in 0..n {
                    for (q1, tw) in twist.iter().enumerate() {
                        let row = (p1 * m + q1) * order;
                        for p2 in 0..n {
                            let conj = (p2 as u64 * tw % *nn) as usize;
                            for q2 in 0..m {
                                let carry = (q1 + q2) / m;
                                let p = (p1 + conj + *i as usize * carry) % n;
                                let q = (q1 + q2) % m;
                                product[row + p2 * m + q2] = p * m + q;
                            }
                        }
                    }
                }
            }
            GroupFamily::TwistedFinite(data) => {
                // fterm[k][l] = S[k+l] - S[k] - S[l] reduced mod n
                let mut fterm = vec![0usize; m * m];
                for k in 0..m {
                    for l in 0..m {
                        let v = data.sums.at((k + l) as u64)
                            - data.sums.at(k as u64)
                            - data.sums.at(l as u64);
                        fterm[k * m + l] = v.rem_euclid(n as i64) as usize;
                    }
                }
                for u1 in 0..n {
                    for k1 in 0..m {
                        let row = (u1 * m + k1) * order;
                        for u2 in 0..n {
                            for k2 in 0..m {
                                let u = (u1 + u2 + fterm[k1 * m + k2]) % n;
                                let k = (k1 + k2) % m;
                                product[row + u2 * m + k2] = u * m + k;
                            }
                        }
                    }
                }
            }
            _ => unreachable!("finite families only"),
        }
        let labels = (0..n as i64)
            .flat_map(|p| (0..m as i64).map(move |q| self.element_label(p, q)))
            .collect();
        Ok(FiniteGroupTable::from_flat(order, product, Some(labels))
            .expect("family multiplication law yields a group table"))
    }

    fn element_label(&self, p: i64, q: i64) -> String {
        match self {
            GroupFamily::Holder { .. } => {
                let a = exponent_label("a", p);
                let b = exponent_label("b", q);
                match (a, b) {
                    (None, None) => "1".to_owned(),
                    (Some(a), None) => a,
                    (None, Some(b)) => b,
                    (Some(a), Some(b)) => format!("{a} {b}"),
                }
            }
            // match the pair labels of a crossed product over C_n, C_m
            _ => {
                let a = exponent_label("a", p).unwrap_or_else(|| "1".to_owned());
                let x = exponent_label("x", q).unwrap_or_else(|| "1".to_owned());
                format!("({a}, {x})")
            }
        }
    }
}

fn require_at_least_two(name: &'static str, n: u64) -> Result<(), FamilyError> {
    if n < 2 {
        return Err(FamilyError::BadParameter {
            name,
            value: n as i64,
            requirement: "must be at least 2",
        });
    }
    Ok(())
}

fn finite_target_order(profile: &CocycleProfile) -> u64 {
    match profile.target() {
        CocycleTarget::Finite(n) => n,
        CocycleTarget::InfiniteCyclic => unreachable!("finite target by construction"),
    }
}

fn exponent_label(symbol: &str, e: i64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(symbol.to_owned()),
        _ => Some(format!("{symbol}^{e}")),
    }
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("exponent overflow")
}
