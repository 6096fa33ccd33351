//! Decision procedures for when a crossed product of cyclic groups is
//! cyclic, with explicit witnesses.
//!
//! The finite-by-finite case `C_n #_i^j C_m` is cyclic exactly when `j = 1`
//! and `gcd(m, n, i) = 1`; a generator `a^u b^v` comes out of the constrained
//! Bezout identity `u m + v i + w n = 1` with `gcd(m, v) = 1`. The
//! infinite-by-finite abelian case `<g, h | gh = hg, h^n = g^t>` is cyclic
//! exactly when `gcd(n, t) = 1`, witnessed by the scaled homomorphism
//! `theta(h^p g^q) = p t + q n` onto `gcd(n, t) Z`. Twisted products reduce
//! to these through explicit isomorphisms, with `i` (resp. `t`) the partial
//! sum `S_m` of the cocycle profile. Everything else is blocked by torsion
//! or by having a non-finite proper quotient.

use crate::arith::{ext_gcd, gcd, gcd3, narrow, BezoutWitness};
use crate::cocycle::{
    cocycle_to_profile, partial_sums, CocycleError, CocycleProfile, CocycleTarget,
    SymmetricCocycle,
};
use crate::crossed::CrossedSystem;
use crate::families::{ElementOrder, FamilyElement, FamilyError, GroupFamily};
use crate::oracle;
use crate::table::FiniteGroupTable;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CyclicityError {
    #[error("gcd({m}, {n}, {i}) != 1")]
    NotCoprimeTriple { m: u64, n: u64, i: i64 },
    #[error("{group} is not cyclic; the decision applies to cyclic-by-cyclic products only")]
    NotCyclicInputs { group: &'static str },
    #[error("crossed system must be validated first")]
    NotValidated,
    #[error("operation requires a finite-target profile")]
    ExpectedFiniteTarget,
    #[error("operation requires an infinite-target profile")]
    ExpectedInfiniteTarget,
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
}

/// The scaled integer form of the embedding `theta`: `h` maps to `t` and `g`
/// maps to `n`, so the image is `gcd(n, t) Z` inside `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThetaWitness {
    /// Image of `h`, i.e. the parameter `t`.
    pub h_image: i64,
    /// Image of `g`, i.e. the subgroup index `n`.
    pub g_image: i64,
    /// `gcd(n, t)`; the map is injective precisely when this is 1.
    pub d: u64,
    /// `h^(n/d) g^(-t/d)`, generating the kernel.
    pub kernel_generator: FamilyElement,
}

impl ThetaWitness {
    /// `theta(h^p g^q) = p t + q n`.
    pub fn apply(&self, e: FamilyElement) -> i64 {
        narrow(e.p as i128 * self.h_image as i128 + e.q as i128 * self.g_image as i128)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A generator of a finite cyclic product, with its verified order.
    FiniteGenerator { element: FamilyElement, order: u64 },
    /// An isomorphism onto the integers together with a preimage of 1.
    InfiniteEmbedding {
        theta: ThetaWitness,
        generator: FamilyElement,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    /// A cyclic product must be abelian, so the action must be trivial.
    NonTrivialAction,
    /// Holder parameter `j != 1` makes the product non-abelian.
    JNotOne { j: u64 },
    /// The governing gcd is `d > 1`; for infinite products the kernel
    /// generator of `theta` witnesses non-injectivity.
    GcdObstruction {
        d: u64,
        kernel_generator: Option<FamilyElement>,
    },
    /// The product is infinite but contains torsion, so it cannot be `Z`.
    TorsionObstruction,
    /// The product has an infinite proper quotient, which `Z` does not.
    QuotientObstruction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicityVerdict {
    pub cyclic: bool,
    pub witness: Option<Witness>,
    pub obstruction: Option<Obstruction>,
}

impl CyclicityVerdict {
    fn yes(witness: Witness) -> Self {
        CyclicityVerdict {
            cyclic: true,
            witness: Some(witness),
            obstruction: None,
        }
    }

    fn no(obstruction: Obstruction) -> Self {
        CyclicityVerdict {
            cyclic: false,
            witness: None,
            obstruction: Some(obstruction),
        }
    }
}

/// For `gcd(m, n, i) = 1` finds `(u, v, w)` with `u m + v i + w n = 1` and
/// `gcd(m, v) = 1`; the returned `d` is `gcd(m, n)`.
///
/// Construction: with `d = gcd(m, n)` pick `m'`, the largest divisor of `m`
/// coprime to `d` (then `m' d` contains every prime factor of `m`), scan for
/// `v` with `d | v i - 1` and `m' | v - 1` (a Chinese-remainder solution
/// exists and is nonzero, so the scan is bounded by `d m'`), write
/// `v i + r d = 1` and split `r d` through `u' m + w' n = d`.
pub fn bezout_coprime(m: u64, n: u64, i: i64) -> Result<BezoutWitness, CyclicityError> {
    assert!(m >= 2, "m must be at least 2");
    assert!(n >= 1, "n must be at least 1");
    if gcd3(m as i64, n as i64, i) != 1 {
        return Err(CyclicityError::NotCoprimeTriple { m, n, i });
    }
    let d = gcd(m as i64, n as i64);
    let mut m1 = m;
    loop {
        let g = gcd(m1 as i64, d as i64);
        if g == 1 {
            break;
        }
        m1 /= g;
    }
    let bound = d.checked_mul(m1).expect("scan bound overflow");
    let mut v = 0i64;
    for cand in 1..=bound {
        let vi = cand as i128 * i as i128;
        if (vi - 1).rem_euclid(d as i128) == 0 && (cand - 1) % m1 == 0 {
            v = cand as i64;
            break;
        }
    }
    assert!(v != 0, "a solution exists whenever gcd(m, n, i) = 1");
    let r = (1 - v as i128 * i as i128) / d as i128;
    let (_, u1, w1) = ext_gcd(m as i64, n as i64);
    let witness = BezoutWitness {
        u: narrow(r * u1 as i128),
        v,
        w: narrow(r * w1 as i128),
        d: d as i64,
    };
    assert_eq!(
        witness.u as i128 * m as i128 + witness.v as i128 * i as i128
            + witness.w as i128 * n as i128,
        1,
        "Bezout identity must hold exactly"
    );
    assert_eq!(gcd(m as i64, witness.v), 1, "v must be coprime to m");
    Ok(witness)
}

/// Cyclicity of `C_n #_i^j C_m`: cyclic iff `j = 1` and `gcd(m, n, i) = 1`,
/// with generator `a^u b^v` from [`bezout_coprime`] whose order is verified
/// to be `n m`.
pub fn decide_cyclic_holder(
    n: u64,
    m: u64,
    i: u64,
    j: u64,
) -> Result<CyclicityVerdict, CyclicityError> {
    let fam = GroupFamily::holder(n, m, i, j)?;
    if j != 1 {
        return Ok(CyclicityVerdict::no(Obstruction::JNotOne { j }));
    }
    let d = gcd3(m as i64, n as i64, i as i64);
    if d != 1 {
        return Ok(CyclicityVerdict::no(Obstruction::GcdObstruction {
            d,
            kernel_generator: None,
        }));
    }
    let bw = bezout_coprime(m, n, i as i64)?;
    let a = fam.element(1, 0);
    let b = fam.element(0, 1);
    let element = fam.multiply(fam.power(a, bw.u), fam.power(b, bw.v));
    let order = n * m;
    assert_eq!(
        fam.element_order(element),
        ElementOrder::Finite(order),
        "a^u b^v must generate when j = 1 and gcd(m, n, i) = 1"
    );
    Ok(CyclicityVerdict::yes(Witness::FiniteGenerator {
        element,
        order,
    }))
}

/// The scaled `theta` of `<g, h | gh = hg, h^n = g^t>`, with its gcd and
/// kernel generator.
pub fn theta_witness(n: u64, t: i64) -> ThetaWitness {
    assert!(n >= 2, "n must be at least 2");
    let fam = GroupFamily::InfByFinAbelian { n, t };
    let d = gcd(n as i64, t);
    let kernel_generator = fam.element((n / d) as i64, -(t / d as i64));
    ThetaWitness {
        h_image: t,
        g_image: n as i64,
        d,
        kernel_generator,
    }
}

/// Cyclicity of `<g, h | gh = hg, h^n = g^t>`: cyclic iff `gcd(n, t) = 1`.
///
/// The verdict always carries the scaled `theta`; when cyclic the generator
/// is a preimage of 1, otherwise the kernel generator `h^(n/d) g^(-t/d)`
/// (on which `theta` vanishes) is the obstruction witness.
pub fn decide_cyclic_inf_by_fin(n: u64, t: i64) -> CyclicityVerdict {
    let fam = GroupFamily::InfByFinAbelian { n, t };
    let theta = theta_witness(n, t);
    let d = theta.d;
    let kernel_generator = theta.kernel_generator;
    assert_eq!(theta.apply(kernel_generator), 0, "kernel generator must map to 0");
    if d == 1 {
        let (_, x, y) = ext_gcd(t, n as i64);
        let generator = fam.element(x, y);
        assert_eq!(theta.apply(generator), 1, "generator must map to 1");
        CyclicityVerdict::yes(Witness::InfiniteEmbedding { theta, generator })
    } else {
        CyclicityVerdict::no(Obstruction::GcdObstruction {
            d,
            kernel_generator: Some(kernel_generator),
        })
    }
}

/// The isomorphism `C_n #_i^1 C_m -> C_n x^f C_m` with `i = S_m mod n`,
/// sending `a` to `(a, 1)` and `b` to `(1, x)`, tabulated on indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedHolderIso {
    /// `S_m` reduced modulo `n`.
    pub i: u64,
    pub holder: GroupFamily,
    pub twisted: GroupFamily,
    /// Table index map: Holder `(p, q) = p*m + q` to twisted `(u, k) = u*m + k`.
    pub map: Vec<usize>,
}

/// Builds and exhaustively verifies the isomorphism between the twisted
/// product of a finite-target profile and its Holder presentation.
///
/// Uses `(1,x)^k = (a^{S_k}, x^k)`, so `a^p b^q` lands on `(a^{p+S_q}, x^q)`.
pub fn twisted_to_holder_iso(profile: &CocycleProfile) -> Result<TwistedHolderIso, CyclicityError> {
    let n = match profile.target() {
        CocycleTarget::Finite(n) => n,
        CocycleTarget::InfiniteCyclic => return Err(CyclicityError::ExpectedFiniteTarget),
    };
    let m = profile.m();
    let sums = partial_sums(profile);
    let i = sums.s_m().rem_euclid(n as i64) as u64;
    let holder = GroupFamily::holder(n, m, i, 1)?;
    let twisted = GroupFamily::twisted_finite(profile.clone())?;
    let mut map = vec![0usize; (n * m) as usize];
    for p in 0..n {
        for q in 0..m {
            let u = (p as i128 + sums.at(q) as i128).rem_euclid(n as i128) as u64;
            map[(p * m + q) as usize] = (u * m + q) as usize;
        }
    }
    let holder_table = holder.to_table()?;
    let twisted_table = twisted.to_table()?;
    let order = (n * m) as usize;
    let mut hit = vec![false; order];
    for &y in &map {
        assert!(!hit[y], "isomorphism map must be injective");
        hit[y] = true;
    }
    for x in 0..order {
        for y in 0..order {
            assert_eq!(
                map[holder_table.mul(x, y)],
                twisted_table.mul(map[x], map[y]),
                "isomorphism map must preserve products"
            );
        }
    }
    Ok(TwistedHolderIso {
        i,
        holder,
        twisted,
        map,
    })
}

/// The isomorphism `<g, h | gh = hg, h^m = g^t> -> C_g x^f C_m` with
/// `t = S_m`, sending `g` to `(g, 1)` and `h` to `(1, x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedInfIso {
    /// The representative integer `S_m`.
    pub t: i64,
    pub presentation: GroupFamily,
    pub twisted: GroupFamily,
    sums: crate::cocycle::PartialSums,
}

impl TwistedInfIso {
    /// `h^p g^q` maps to `(S_p + q, p)`.
    pub fn apply(&self, e: FamilyElement) -> FamilyElement {
        FamilyElement::new(
            narrow(self.sums.at(e.p as u64) as i128 + e.q as i128),
            e.p,
        )
    }

    /// `(u, k)` pulls back to `h^k g^(u - S_k)`.
    pub fn apply_inverse(&self, e: FamilyElement) -> FamilyElement {
        FamilyElement::new(e.q, narrow(e.p as i128 - self.sums.at(e.q as u64) as i128))
    }
}

/// Builds the isomorphism for an infinite-target profile and verifies it on
/// a bounded exponent box (all residue components, free exponents up to 50
/// in magnitude): homomorphism, injectivity, and surjectivity onto normal
/// forms.
pub fn twisted_inf_to_presentation_iso(
    profile: &CocycleProfile,
) -> Result<TwistedInfIso, CyclicityError> {
    if profile.target().is_finite() {
        return Err(CyclicityError::ExpectedInfiniteTarget);
    }
    let m = profile.m();
    let sums = partial_sums(profile);
    let t = sums.s_m();
    let presentation = GroupFamily::inf_by_fin_abelian(m, t)?;
    let twisted = GroupFamily::twisted_infinite(profile.clone())?;
    let iso = TwistedInfIso {
        t,
        presentation,
        twisted,
        sums,
    };

    const BOX: i64 = 50;
    let ps = 0..(m as i64).min(BOX * 2 + 1);
    for p1 in ps.clone() {
        for q1 in -BOX..=BOX {
            let e1 = iso.presentation.element(p1, q1);
            for p2 in ps.clone() {
                for q2 in -BOX..=BOX {
                    let e2 = iso.presentation.element(p2, q2);
                    let lhs = iso.apply(iso.presentation.multiply(e1, e2));
                    let rhs = iso.twisted.multiply(iso.apply(e1), iso.apply(e2));
                    assert_eq!(lhs, rhs, "iso must be a homomorphism");
                }
            }
        }
    }
    let mut images = std::collections::HashSet::new();
    for p in ps.clone() {
        for q in -BOX..=BOX {
            assert!(
                images.insert(iso.apply(iso.presentation.element(p, q))),
                "iso must be injective"
            );
        }
    }
    for k in 0..m as i64 {
        for u in -BOX..=BOX {
            let target = FamilyElement::new(u, k);
            assert_eq!(
                iso.apply(iso.apply_inverse(target)),
                target,
                "iso must be surjective onto normal forms"
            );
        }
    }
    Ok(iso)
}

/// Input to [`decide_cyclic_main`]: either a validated crossed system over
/// finite cyclic groups, or one of the presentation families (which carry
/// the infinite cases).
#[derive(Debug, Clone, Copy)]
pub enum CyclicityInput<'a> {
    System(&'a CrossedSystem),
    Family(&'a GroupFamily),
}

/// Top-level cyclicity decision.
///
/// Dispatch: a non-trivial action can never give a cyclic product; the
/// finite twisted case is cyclic iff `gcd(S_m, m, n) = 1`; the infinite
/// twisted and infinite-by-finite abelian cases are cyclic iff
/// `gcd(S_m, m) = 1` resp. `gcd(n, t) = 1`; finite-by-infinite and flip
/// products are infinite with torsion; products of two infinite cyclic
/// groups have an infinite proper quotient. Witnesses come from the
/// specialized procedures.
pub fn decide_cyclic_main(input: CyclicityInput<'_>) -> Result<CyclicityVerdict, CyclicityError> {
    match input {
        CyclicityInput::Family(fam) => {
            fam.validate()?;
            match fam {
                GroupFamily::Holder { n, m, i, j } => decide_cyclic_holder(*n, *m, *i, *j),
                GroupFamily::FinByInf { .. } | GroupFamily::InfByFinFlip { .. } => {
                    Ok(CyclicityVerdict::no(Obstruction::TorsionObstruction))
                }
                GroupFamily::ZxZ | GroupFamily::KleinBottle => {
                    Ok(CyclicityVerdict::no(Obstruction::QuotientObstruction))
                }
                GroupFamily::InfByFinAbelian { n, t } => Ok(decide_cyclic_inf_by_fin(*n, *t)),
                GroupFamily::TwistedFinite(data) => decide_twisted_finite(data.profile()),
                GroupFamily::TwistedInfinite(data) => decide_twisted_infinite(data.profile()),
            }
        }
        CyclicityInput::System(sys) => decide_cyclic_system(sys),
    }
}

/// Cyclicity of `C_n x^f C_m`: cyclic iff `gcd(S_m, m, n) = 1`. The witness
/// is `(a,1)^u (1,x)^v` for the Bezout coefficients of `(m, n, S_m mod n)`,
/// the image of the Holder generator `a^u b^v` under the presentation
/// isomorphism.
pub fn decide_twisted_finite(profile: &CocycleProfile) -> Result<CyclicityVerdict, CyclicityError> {
    let n = match profile.target() {
        CocycleTarget::Finite(n) => n,
        CocycleTarget::InfiniteCyclic => return Err(CyclicityError::ExpectedFiniteTarget),
    };
    let m = profile.m();
    let sums = partial_sums(profile);
    let s_m = sums.s_m();
    let d = gcd3(s_m, m as i64, n as i64);
    if d != 1 {
        return Ok(CyclicityVerdict::no(Obstruction::GcdObstruction {
            d,
            kernel_generator: None,
        }));
    }
    let i = s_m.rem_euclid(n as i64);
    let bw = bezout_coprime(m, n, i)?;
    let fam = GroupFamily::twisted_finite(profile.clone())?;
    let gen_h = fam.element(1, 0);
    let gen_g = fam.element(0, 1);
    let element = fam.multiply(fam.power(gen_h, bw.u), fam.power(gen_g, bw.v));
    let order = n * m;
    assert_eq!(
        fam.element_order(element),
        ElementOrder::Finite(order),
        "twisted witness must generate"
    );
    Ok(CyclicityVerdict::yes(Witness::FiniteGenerator {
        element,
        order,
    }))
}

/// Cyclicity of `C_g x^f C_m`: cyclic iff `gcd(S_m, m) = 1`, decided through
/// the presentation `<g, h | gh = hg, h^m = g^(S_m)>` with witnesses mapped
/// back into twisted coordinates.
pub fn decide_twisted_infinite(
    profile: &CocycleProfile,
) -> Result<CyclicityVerdict, CyclicityError> {
    if profile.target().is_finite() {
        return Err(CyclicityError::ExpectedInfiniteTarget);
    }
    let m = profile.m();
    let sums = partial_sums(profile);
    let t = sums.s_m();
    let inner = decide_cyclic_inf_by_fin(m, t);
    let to_twisted = |e: FamilyElement| -> FamilyElement {
        // h^p g^q -> (S_p + q, p)
        FamilyElement::new(narrow(sums.at(e.p as u64) as i128 + e.q as i128), e.p)
    };
    Ok(match inner {
        CyclicityVerdict {
            cyclic: true,
            witness: Some(Witness::InfiniteEmbedding { theta, generator }),
            ..
        } => CyclicityVerdict::yes(Witness::InfiniteEmbedding {
            theta,
            generator: to_twisted(generator),
        }),
        CyclicityVerdict {
            cyclic: false,
            obstruction: Some(Obstruction::GcdObstruction { d, kernel_generator }),
            ..
        } => CyclicityVerdict::no(Obstruction::GcdObstruction {
            d,
            kernel_generator: kernel_generator.map(to_twisted),
        }),
        other => other,
    })
}

fn decide_cyclic_system(sys: &CrossedSystem) -> Result<CyclicityVerdict, CyclicityError> {
    if !sys.is_validated() {
        return Err(CyclicityError::NotValidated);
    }
    let (h_cyclic, h_gen) = oracle::brute_force_is_cyclic(sys.h());
    if !h_cyclic {
        return Err(CyclicityError::NotCyclicInputs { group: "H" });
    }
    let (g_cyclic, g_gen) = oracle::brute_force_is_cyclic(sys.g());
    if !g_cyclic {
        return Err(CyclicityError::NotCyclicInputs { group: "G" });
    }
    if !sys.alpha().is_trivial() {
        return Ok(CyclicityVerdict::no(Obstruction::NonTrivialAction));
    }
    let nh = sys.h().order();
    let ng = sys.g().order();
    if nh == 1 || ng == 1 {
        // degenerate: the product is isomorphic to the other factor
        let element = FamilyElement::new(
            if nh > 1 { 1 } else { 0 },
            if ng > 1 { 1 } else { 0 },
        );
        return Ok(CyclicityVerdict::yes(Witness::FiniteGenerator {
            element,
            order: (nh * ng) as u64,
        }));
    }
    // express f in exponent coordinates of the least-index generators
    let h_dlog = discrete_log_table(sys.h(), h_gen.expect("cyclic"));
    let g_pow = power_table(sys.g(), g_gen.expect("cyclic"));
    let mut values = Vec::with_capacity(ng * ng);
    for k in 0..ng {
        for l in 0..ng {
            values.push(h_dlog[sys.f().value(g_pow[k], g_pow[l])] as i64);
        }
    }
    let f = SymmetricCocycle::from_values(ng as u64, CocycleTarget::Finite(nh as u64), values)?;
    // a validated trivial-action system over cyclic groups is abelian, so f
    // is symmetric and the profile extraction cannot fail
    let profile = cocycle_to_profile(&f)?;
    decide_twisted_finite(&profile)
}

/// `dlog[x]` = the exponent of `x` with respect to `gen`.
fn discrete_log_table(t: &FiniteGroupTable, gen: usize) -> Vec<u64> {
    let mut dlog = vec![0u64; t.order()];
    let mut cur = t.identity();
    for e in 0..t.order() as u64 {
        dlog[cur] = e;
        cur = t.mul(cur, gen);
    }
    dlog
}

/// `pow[k]` = the index of `gen^k`.
fn power_table(t: &FiniteGroupTable, gen: usize) -> Vec<usize> {
    let mut pow = vec![0usize; t.order()];
    let mut cur = t.identity();
    for slot in pow.iter_mut() {
        *slot = cur;
        cur = t.mul(cur, gen);
    }
    pow
}
