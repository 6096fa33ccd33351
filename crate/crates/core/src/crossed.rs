//! Crossed systems `(H, G, alpha, f)` over finite groups: validation, the
//! crossed product construction, special-case classification, and extraction
//! of a crossed system from a group with a chosen normal subgroup.
//!
//! A quadruple is a crossed system when every `alpha(g)` is an automorphism
//! of `H` and the two compatibility conditions hold for all elements:
//!
//! ```text
//! (WA)  g1 |> (g2 |> h) = f(g1,g2) ((g1 g2) |> h) f(g1,g2)^-1
//! (CC)  f(g1,g2) f(g1 g2, g3) = (g1 |> f(g2,g3)) f(g1, g2 g3)
//! ```
//!
//! Normalization means `f(1,1) = 1`; it forces `f(1,g) = f(g,1) = 1` and
//! `1 |> h = h`, which are re-checked rather than assumed. The crossed
//! product lives on the pair set `H x G` with
//! `(h1,g1)(h2,g2) = (h1 (g1 |> h2) f(g1,g2), g1 g2)`.

use crate::cocycle::{CocycleProfile, CocycleTarget, SymmetricCocycle};
use crate::table::{FiniteGroupTable, TableError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrossedSystemError {
    #[error("alpha has {got} permutations for a group of order {expected}")]
    AlphaShape { got: usize, expected: usize },
    #[error("alpha({g}) has {got} entries for a subgroup of order {expected}")]
    AlphaRowShape { g: usize, got: usize, expected: usize },
    #[error("alpha({g}) contains entry {value} out of range {range}")]
    AlphaOutOfRange { g: usize, value: usize, range: usize },
    #[error("cocycle table has {got} entries, expected {expected}")]
    CocycleShape { got: usize, expected: usize },
    #[error("cocycle value {value} out of range {range}")]
    CocycleOutOfRange { value: usize, range: usize },
    #[error("alpha({g}) is not an automorphism of H")]
    NotAutomorphism { g: usize },
    #[error("weak action condition fails at (g1={g1}, g2={g2}, h={h})")]
    WeakActionViolated { g1: usize, g2: usize, h: usize },
    #[error("cocycle condition fails at (g1={g1}, g2={g2}, g3={g3})")]
    CocycleViolated { g1: usize, g2: usize, g3: usize },
    #[error("system is not normalized: f(1,1) != 1")]
    NotNormalized,
    #[error("operation requires a validated crossed system")]
    NotValidated,
    #[error(transparent)]
    Table(#[from] TableError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtractError {
    #[error("chosen indices do not form a normal subgroup: {reason}")]
    NotNormalSubgroup { reason: String },
    #[error("bad transversal: {reason}")]
    BadTransversal { reason: String },
}

/// One permutation of `H`'s indices per element of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakActionMap {
    perms: Vec<Vec<usize>>,
}

impl WeakActionMap {
    pub fn new(perms: Vec<Vec<usize>>) -> Self {
        WeakActionMap { perms }
    }

    /// The identity action of every element of a group of order `g_order`.
    pub fn trivial(g_order: usize, h_order: usize) -> Self {
        WeakActionMap {
            perms: vec![(0..h_order).collect(); g_order],
        }
    }

    #[inline]
    pub fn apply(&self, g: usize, h: usize) -> usize {
        self.perms[g][h]
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn is_trivial(&self) -> bool {
        self.perms
            .iter()
            .all(|p| p.iter().enumerate().all(|(i, &v)| i == v))
    }
}

/// A map `G x G -> H` stored as a row-major table of `H`-indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleMap {
    g_order: usize,
    values: Vec<usize>,
}

impl CocycleMap {
    pub fn new(g_order: usize, values: Vec<usize>) -> Result<Self, CrossedSystemError> {
        if values.len() != g_order * g_order {
            return Err(CrossedSystemError::CocycleShape {
                got: values.len(),
                expected: g_order * g_order,
            });
        }
        Ok(CocycleMap { g_order, values })
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, CrossedSystemError> {
        let g_order = rows.len();
        let values: Vec<usize> = rows.into_iter().flatten().collect();
        CocycleMap::new(g_order, values)
    }

    pub fn trivial(g_order: usize) -> Self {
        CocycleMap {
            g_order,
            values: vec![0; g_order * g_order],
        }
    }

    #[inline]
    pub fn value(&self, g1: usize, g2: usize) -> usize {
        self.values[g1 * self.g_order + g2]
    }

    pub fn g_order(&self) -> usize {
        self.g_order
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.g_order)
            .map(|g| self.values[g * self.g_order..(g + 1) * self.g_order].to_vec())
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.g_order)
            .all(|g1| (g1..self.g_order).all(|g2| self.value(g1, g2) == self.value(g2, g1)))
    }
}

/// The quadruple `(H, G, alpha, f)`, with a flag tracking validation.
#[derive(Debug, Clone)]
pub struct CrossedSystem {
    h: FiniteGroupTable,
    g: FiniteGroupTable,
    alpha: WeakActionMap,
    f: CocycleMap,
    validated: bool,
}

/// Equality of the underlying data; the validation flag is derived state.
impl PartialEq for CrossedSystem {
    fn eq(&self, other: &Self) -> bool {
        self.h == other.h && self.g == other.g && self.alpha == other.alpha && self.f == other.f
    }
}

impl Eq for CrossedSystem {}

impl CrossedSystem {
    /// Shape-checks the quadruple; the compatibility conditions are checked
    /// by [`validate_crossed_system`].
    pub fn new(
        h: FiniteGroupTable,
        g: FiniteGroupTable,
        alpha: WeakActionMap,
        f: CocycleMap,
    ) -> Result<Self, CrossedSystemError> {
        let (nh, ng) = (h.order(), g.order());
        if alpha.perms.len() != ng {
            return Err(CrossedSystemError::AlphaShape {
                got: alpha.perms.len(),
                expected: ng,
            });
        }
        for (gi, p) in alpha.perms.iter().enumerate() {
            if p.len() != nh {
                return Err(CrossedSystemError::AlphaRowShape {
                    g: gi,
                    got: p.len(),
                    expected: nh,
                });
            }
            if let Some(&v) = p.iter().find(|&&v| v >= nh) {
                return Err(CrossedSystemError::AlphaOutOfRange {
                    g: gi,
                    value: v,
                    range: nh,
                });
            }
        }
        if f.g_order != ng {
            return Err(CrossedSystemError::CocycleShape {
                got: f.values.len(),
                expected: ng * ng,
            });
        }
        if let Some(&v) = f.values.iter().find(|&&v| v >= nh) {
            return Err(CrossedSystemError::CocycleOutOfRange { value: v, range: nh });
        }
        Ok(CrossedSystem {
            h,
            g,
            alpha,
            f,
            validated: false,
        })
    }

    /// The trivial system on `(H, G)`: identity action, trivial cocycle.
    pub fn trivial(h: FiniteGroupTable, g: FiniteGroupTable) -> Self {
        let alpha = WeakActionMap::trivial(g.order(), h.order());
        let f = CocycleMap::trivial(g.order());
        CrossedSystem::new(h, g, alpha, f).expect("trivial system is well shaped")
    }

    /// Twisted system `C_n x^f C_m` from a finite-target profile.
    pub fn twisted_from_profile(profile: &CocycleProfile) -> Result<Self, CrossedSystemError> {
        let n = match profile.target() {
            CocycleTarget::Finite(n) => n,
            CocycleTarget::InfiniteCyclic => {
                panic!("twisted_from_profile requires a finite target")
            }
        };
        let f = crate::cocycle::profile_to_cocycle(profile);
        CrossedSystem::from_symmetric_cocycle(&f, n)
    }

    /// Twisted system over `H = C_n` with `f` given as an exponent table.
    pub fn from_symmetric_cocycle(
        f: &SymmetricCocycle,
        n: u64,
    ) -> Result<Self, CrossedSystemError> {
        let m = f.m() as usize;
        let h = FiniteGroupTable::cyclic(n as usize);
        let mut g_labels = Vec::with_capacity(m);
        for k in 0..m {
            g_labels.push(match k {
                0 => "1".to_owned(),
                1 => "x".to_owned(),
                _ => format!("x^{k}"),
            });
        }
        let g = FiniteGroupTable::cyclic(m).with_labels(g_labels)?;
        let values = (0..m)
            .flat_map(|k| {
                (0..m).map(move |l| {
                    (f.value(k as u64, l as u64) as i128).rem_euclid(n as i128) as usize
                })
            })
            .collect();
        let alpha = WeakActionMap::trivial(m, n as usize);
        CrossedSystem::new(h, g, alpha, CocycleMap::new(m, values)?)
    }

    pub fn h(&self) -> &FiniteGroupTable {
        &self.h
    }

    pub fn g(&self) -> &FiniteGroupTable {
        &self.g
    }

    pub fn alpha(&self) -> &WeakActionMap {
        &self.alpha
    }

    pub fn f(&self) -> &CocycleMap {
        &self.f
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn validate(self) -> Result<Self, CrossedSystemError> {
        validate_crossed_system(self)
    }
}

/// Checks that every `alpha(g)` is an automorphism, the weak-action and
/// cocycle conditions over all triples, and normalization `f(1,1) = 1`.
///
/// On success the derived identities `f(1,g) = f(g,1) = 1` and `1 |> h = h`
/// are asserted as well; they are consequences, so a failure is a bug.
pub fn validate_crossed_system(mut sys: CrossedSystem) -> Result<CrossedSystem, CrossedSystemError> {
    let h = &sys.h;
    let g = &sys.g;
    let (nh, ng) = (h.order(), g.order());

    for gi in 0..ng {
        let perm = &sys.alpha.perms[gi];
        let mut seen = vec![false; nh];
        for &image in perm {
            if seen[image] {
                return Err(CrossedSystemError::NotAutomorphism { g: gi });
            }
            seen[image] = true;
        }
        for h1 in 0..nh {
            for h2 in 0..nh {
                if perm[h.mul(h1, h2)] != h.mul(perm[h1], perm[h2]) {
                    return Err(CrossedSystemError::NotAutomorphism { g: gi });
                }
            }
        }
    }

    if sys.f.value(0, 0) != 0 {
        return Err(CrossedSystemError::NotNormalized);
    }

    // (WA) g1 |> (g2 |> h) = f(g1,g2) ((g1 g2) |> h) f(g1,g2)^-1
    for g1 in 0..ng {
        for g2 in 0..ng {
            let fv = sys.f.value(g1, g2);
            let fv_inv = h.inverse_of(fv);
            let g12 = g.mul(g1, g2);
            for hi in 0..nh {
                let lhs = sys.alpha.apply(g1, sys.alpha.apply(g2, hi));
                let rhs = h.mul(h.mul(fv, sys.alpha.apply(g12, hi)), fv_inv);
                if lhs != rhs {
                    return Err(CrossedSystemError::WeakActionViolated { g1, g2, h: hi });
                }
            }
        }
    }

    // (CC) f(g1,g2) f(g1 g2, g3) = (g1 |> f(g2,g3)) f(g1, g2 g3)
    for g1 in 0..ng {
        for g2 in 0..ng {
            let g12 = g.mul(g1, g2);
            for g3 in 0..ng {
                let lhs = h.mul(sys.f.value(g1, g2), sys.f.value(g12, g3));
                let rhs = h.mul(
                    sys.alpha.apply(g1, sys.f.value(g2, g3)),
                    sys.f.value(g1, g.mul(g2, g3)),
                );
                if lhs != rhs {
                    return Err(CrossedSystemError::CocycleViolated { g1, g2, g3 });
                }
            }
        }
    }

    // consequences of normalization; failures here would be bugs
    for gi in 0..ng {
        assert_eq!(sys.f.value(0, gi), 0, "f(1, g) = 1 must follow");
        assert_eq!(sys.f.value(gi, 0), 0, "f(g, 1) = 1 must follow");
    }
    for hi in 0..nh {
        assert_eq!(sys.alpha.apply(0, hi), hi, "1 |> h = h must follow");
    }

    sys.validated = true;
    Ok(sys)
}

/// The crossed product table on `H x G`, pair `(h, g)` at index
/// `h * |G| + g`, multiplied by `(h1,g1)(h2,g2) = (h1 (g1|>h2) f(g1,g2), g1 g2)`.
pub fn build_crossed_product(
    sys: &CrossedSystem,
) -> Result<FiniteGroupTable, CrossedSystemError> {
    if !sys.validated {
        return Err(CrossedSystemError::NotValidated);
    }
    let (nh, ng) = (sys.h.order(), sys.g.order());
    let order = nh * ng;
    let mut rows = vec![vec![0usize; order]; order];
    for h1 in 0..nh {
        for g1 in 0..ng {
            let row = &mut rows[h1 * ng + g1];
            for h2 in 0..nh {
                let acted = sys.alpha.apply(g1, h2);
                let left = sys.h.mul(h1, acted);
                for g2 in 0..ng {
                    let hp = sys.h.mul(left, sys.f.value(g1, g2));
                    let gp = sys.g.mul(g1, g2);
                    row[h2 * ng + g2] = hp * ng + gp;
                }
            }
        }
    }
    let labels = match (sys.h.labels(), sys.g.labels()) {
        (Some(lh), Some(lg)) => {
            let mut labels = Vec::with_capacity(order);
            for h_label in lh {
                for g_label in lg {
                    labels.push(format!("({h_label}, {g_label})"));
                }
            }
            Some(labels)
        }
        _ => None,
    };
    Ok(FiniteGroupTable::from_rows(rows, labels)
        .expect("crossed product of a validated system is a group"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialCase {
    /// Both maps trivial: the direct product.
    Trivial,
    /// Trivial cocycle: a semidirect product, `alpha` a genuine homomorphism.
    Semidirect,
    /// Trivial action: a twisted product, `f` central-valued.
    Twisted,
    General,
}

/// Classifies a validated system, asserting the side conditions that the
/// degenerate cases are known to satisfy.
pub fn classify_special_case(sys: &CrossedSystem) -> SpecialCase {
    assert!(sys.validated, "classification requires a validated system");
    let alpha_trivial = sys.alpha.is_trivial();
    let f_trivial = sys.f.is_trivial();
    match (alpha_trivial, f_trivial) {
        (true, true) => SpecialCase::Trivial,
        (false, true) => {
            // with f trivial, (WA) says alpha is a homomorphism
            let ng = sys.g.order();
            for g1 in 0..ng {
                for g2 in 0..ng {
                    let g12 = sys.g.mul(g1, g2);
                    for h in 0..sys.h.order() {
                        assert_eq!(
                            sys.alpha.apply(g12, h),
                            sys.alpha.apply(g1, sys.alpha.apply(g2, h)),
                            "semidirect action must be a homomorphism"
                        );
                    }
                }
            }
            SpecialCase::Semidirect
        }
        (true, false) => {
            // with alpha trivial, (WA) forces f into the center and (CC)
            // becomes the classical 2-cocycle identity
            let (nh, ng) = (sys.h.order(), sys.g.order());
            for g1 in 0..ng {
                for g2 in 0..ng {
                    let fv = sys.f.value(g1, g2);
                    for h in 0..nh {
                        assert_eq!(
                            sys.h.mul(fv, h),
                            sys.h.mul(h, fv),
                            "twisted cocycle must be central-valued"
                        );
                    }
                }
            }
            for g1 in 0..ng {
                for g2 in 0..ng {
                    for g3 in 0..ng {
                        let lhs = sys
                            .h
                            .mul(sys.f.value(g1, g2), sys.f.value(sys.g.mul(g1, g2), g3));
                        let rhs = sys
                            .h
                            .mul(sys.f.value(g2, g3), sys.f.value(g1, sys.g.mul(g2, g3)));
                        assert_eq!(lhs, rhs, "classical 2-cocycle identity must hold");
                    }
                }
            }
            SpecialCase::Twisted
        }
        (false, false) => SpecialCase::General,
    }
}

fn subgroup_of(e: &FiniteGroupTable, indices: &[usize]) -> Result<Vec<usize>, ExtractError> {
    let mut sorted: Vec<usize> = indices.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.iter().any(|&x| x >= e.order()) {
        return Err(ExtractError::NotNormalSubgroup {
            reason: "index out of range".to_owned(),
        });
    }
    if sorted.first() != Some(&0) {
        return Err(ExtractError::NotNormalSubgroup {
            reason: "identity not contained".to_owned(),
        });
    }
    let member: Vec<bool> = {
        let mut member = vec![false; e.order()];
        for &x in &sorted {
            member[x] = true;
        }
        member
    };
    for &x in &sorted {
        if !member[e.inverse_of(x)] {
            return Err(ExtractError::NotNormalSubgroup {
                reason: format!("inverse of {x} not contained"),
            });
        }
        for &y in &sorted {
            if !member[e.mul(x, y)] {
                return Err(ExtractError::NotNormalSubgroup {
                    reason: format!("product {x}*{y} escapes the subset"),
                });
            }
        }
    }
    // normality by conjugation sweep
    for x in 0..e.order() {
        let xi = e.inverse_of(x);
        for &h in &sorted {
            if !member[e.mul(e.mul(x, h), xi)] {
                return Err(ExtractError::NotNormalSubgroup {
                    reason: format!("conjugate of {h} by {x} escapes the subgroup"),
                });
            }
        }
    }
    Ok(sorted)
}

/// Coset key of `x`: the minimal element of `Hx`.
fn coset_key(e: &FiniteGroupTable, h_sorted: &[usize], x: usize) -> usize {
    h_sorted.iter().map(|&h| e.mul(h, x)).min().expect("nonempty")
}

/// The default transversal: the first element of each coset in index order,
/// cosets ordered by their minimal element. The identity coset comes first
/// and is represented by the identity.
pub fn default_transversal(
    e: &FiniteGroupTable,
    h_indices: &[usize],
) -> Result<Vec<usize>, ExtractError> {
    let h_sorted = subgroup_of(e, h_indices)?;
    let mut keys: Vec<usize> = (0..e.order())
        .map(|x| coset_key(e, &h_sorted, x))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    keys.sort_unstable();
    Ok(keys)
}

/// Rebuilds the crossed system of `E` relative to a normal subgroup and a
/// transversal: `G` is the quotient, `alpha(g)` is conjugation by the
/// representative `s(g)`, and `f(g1,g2) = s(g1) s(g2) s(g1 g2)^-1`.
///
/// The result is validated, and the pair map `(h, g) -> h * s(g)` is checked
/// to be an isomorphism from the rebuilt crossed product onto `E`.
pub fn extract_crossed_system(
    e: &FiniteGroupTable,
    h_indices: &[usize],
    transversal: &[usize],
) -> Result<CrossedSystem, ExtractError> {
    let h_sorted = subgroup_of(e, h_indices)?;
    let n = e.order();
    let nh = h_sorted.len();
    let ng = n / nh;

    let mut local_of = vec![usize::MAX; n];
    for (i, &x) in h_sorted.iter().enumerate() {
        local_of[x] = i;
    }

    if transversal.len() != ng {
        return Err(ExtractError::BadTransversal {
            reason: format!("{} representatives for {ng} cosets", transversal.len()),
        });
    }
    if transversal.iter().any(|&x| x >= n) {
        return Err(ExtractError::BadTransversal {
            reason: "representative out of range".to_owned(),
        });
    }
    if transversal[0] != 0 {
        return Err(ExtractError::BadTransversal {
            reason: "identity coset must be represented by the identity".to_owned(),
        });
    }
    // one representative per coset, each coset hit exactly once
    let keys: Vec<usize> = transversal
        .iter()
        .map(|&s| coset_key(e, &h_sorted, s))
        .collect();
    {
        let mut seen = std::collections::BTreeSet::new();
        for &k in &keys {
            if !seen.insert(k) {
                return Err(ExtractError::BadTransversal {
                    reason: "two representatives in one coset".to_owned(),
                });
            }
        }
    }
    let mut label_of_key = std::collections::BTreeMap::new();
    for (label, &k) in keys.iter().enumerate() {
        label_of_key.insert(k, label);
    }

    // quotient table on coset labels
    let mut g_rows = vec![vec![0usize; ng]; ng];
    for k1 in 0..ng {
        for k2 in 0..ng {
            let prod = e.mul(transversal[k1], transversal[k2]);
            g_rows[k1][k2] = label_of_key[&coset_key(e, &h_sorted, prod)];
        }
    }
    let g_labels = e
        .labels()
        .map(|l| transversal.iter().map(|&s| l[s].clone()).collect());
    let g_table = FiniteGroupTable::from_rows(g_rows, g_labels).map_err(|err| {
        ExtractError::BadTransversal {
            reason: format!("quotient is not a group table: {err}"),
        }
    })?;

    // subgroup table
    let h_rows: Vec<Vec<usize>> = h_sorted
        .iter()
        .map(|&x| h_sorted.iter().map(|&y| local_of[e.mul(x, y)]).collect())
        .collect();
    let h_labels = e
        .labels()
        .map(|l| h_sorted.iter().map(|&x| l[x].clone()).collect());
    let h_table = FiniteGroupTable::from_rows(h_rows, h_labels)
        .expect("subgroup rows form a group table");

    // alpha(g)(h) = s(g) h s(g)^-1, f(g1,g2) = s(g1) s(g2) s(g1 g2)^-1
    let perms: Vec<Vec<usize>> = (0..ng)
        .map(|k| {
            let s = transversal[k];
            let si = e.inverse_of(s);
            h_sorted
                .iter()
                .map(|&h| local_of[e.mul(e.mul(s, h), si)])
                .collect()
        })
        .collect();
    let mut f_values = Vec::with_capacity(ng * ng);
    for k1 in 0..ng {
        for k2 in 0..ng {
            let s12 = transversal[g_table.mul(k1, k2)];
            let v = e.mul(e.mul(transversal[k1], transversal[k2]), e.inverse_of(s12));
            f_values.push(local_of[v]);
        }
    }

    let sys = CrossedSystem::new(
        h_table,
        g_table,
        WeakActionMap::new(perms),
        CocycleMap::new(ng, f_values).expect("shape by construction"),
    )
    .expect("extracted quadruple is well shaped")
    .validate()
    .expect("extracted quadruple always validates");

    // the pair map (h, g) -> h * s(g) must be an isomorphism onto E
    let product = build_crossed_product(&sys).expect("validated");
    let mut image = vec![usize::MAX; n];
    let mut hit = vec![false; n];
    for (hi, &hx) in h_sorted.iter().enumerate() {
        for (gi, &s) in transversal.iter().enumerate() {
            let img = e.mul(hx, s);
            assert!(!hit[img], "pair map must be injective");
            hit[img] = true;
            image[hi * ng + gi] = img;
        }
    }
    for x in 0..n {
        for y in 0..n {
            assert_eq!(
                image[product.mul(x, y)],
                e.mul(image[x], image[y]),
                "pair map must preserve products"
            );
        }
    }

    Ok(sys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::verify_group_axioms;

    fn c(n: usize) -> FiniteGroupTable {
        FiniteGroupTable::cyclic(n)
    }

    #[test]
    fn trivial_system_validates_and_builds_direct_product() {
        let sys = CrossedSystem::trivial(c(2), c(3)).validate().unwrap();
        assert_eq!(classify_special_case(&sys), SpecialCase::Trivial);
        let t = build_crossed_product(&sys).unwrap();
        assert_eq!(t.order(), 6);
        assert!(verify_group_axioms(&t).passed());
        assert!(t.is_abelian());
        // direct product of coprime cyclic groups is cyclic of order 6
        assert!((0..6).any(|x| crate::oracle::element_order_in_table(&t, x) == 6));
    }

    #[test]
    fn twisted_c2_by_c2_gives_c4() {
        // alpha trivial, f(x,x) = a on H = G = C_2
        let f = CocycleMap::from_rows(vec![vec![0, 0], vec![0, 1]]).unwrap();
        let sys = CrossedSystem::new(c(2), c(2), WeakActionMap::trivial(2, 2), f)
            .unwrap()
            .validate()
            .unwrap();
        assert_eq!(classify_special_case(&sys), SpecialCase::Twisted);
        let t = build_crossed_product(&sys).unwrap();
        assert!(verify_group_axioms(&t).passed());
        // (1_H, x) sits at index 0*2 + 1 = 1 and squares to (a, 1) at index 2
        assert_eq!(t.mul(1, 1), 2);
        assert_eq!(crate::oracle::element_order_in_table(&t, 1), 4);
    }

    #[test]
    fn inversion_semidirect_is_s3() {
        // H = C_3, alpha(x) = inversion, f trivial
        let alpha = WeakActionMap::new(vec![vec![0, 1, 2], vec![0, 2, 1]]);
        let sys = CrossedSystem::new(c(3), c(2), alpha, CocycleMap::trivial(2))
            .unwrap()
            .validate()
            .unwrap();
        assert_eq!(classify_special_case(&sys), SpecialCase::Semidirect);
        let t = build_crossed_product(&sys).unwrap();
        assert!(verify_group_axioms(&t).passed());
        assert!(!t.is_abelian());
        let mut profile = crate::oracle::order_profile(&t);
        profile.sort_unstable();
        assert_eq!(profile, vec![1, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn non_normalized_system_is_rejected() {
        let f = CocycleMap::from_rows(vec![vec![1, 0], vec![0, 0]]).unwrap();
        let sys = CrossedSystem::new(c(2), c(2), WeakActionMap::trivial(2, 2), f).unwrap();
        assert_eq!(
            sys.validate().unwrap_err(),
            CrossedSystemError::NotNormalized
        );
    }

    #[test]
    fn broken_action_is_rejected() {
        // constant map is not a permutation
        let alpha = WeakActionMap::new(vec![vec![0, 1], vec![0, 0]]);
        let sys = CrossedSystem::new(c(2), c(2), alpha, CocycleMap::trivial(2)).unwrap();
        assert_eq!(
            sys.validate().unwrap_err(),
            CrossedSystemError::NotAutomorphism { g: 1 }
        );
    }

    #[test]
    fn cocycle_violation_carries_witness() {
        // f(x,1) = a breaks the cocycle condition on C_2 x C_2
        let f = CocycleMap::from_rows(vec![vec![0, 0], vec![1, 0]]).unwrap();
        let sys = CrossedSystem::new(c(2), c(2), WeakActionMap::trivial(2, 2), f).unwrap();
        assert!(matches!(
            sys.validate().unwrap_err(),
            CrossedSystemError::CocycleViolated { .. }
        ));
    }

    #[test]
    fn build_requires_validation() {
        let sys = CrossedSystem::trivial(c(2), c(2));
        assert_eq!(
            build_crossed_product(&sys).unwrap_err(),
            CrossedSystemError::NotValidated
        );
    }

    #[test]
    fn extract_from_c4_finds_the_twisted_cocycle() {
        let e = c(4);
        // H = {1, c^2}, transversal {1, c}
        let sys = extract_crossed_system(&e, &[0, 2], &[0, 1]).unwrap();
        assert!(sys.alpha().is_trivial());
        // f(x, x) = c^2, the nontrivial element of H
        assert_eq!(sys.f().value(1, 1), 1);
        assert_eq!(sys.f().value(0, 1), 0);
        let rebuilt = build_crossed_product(&sys).unwrap();
        assert!(
            crate::oracle::tables_isomorphic(&rebuilt, &e)
                .unwrap()
                .is_some()
        );
    }

    #[test]
    fn extract_from_direct_product_is_trivial() {
        // C_2 x C_2 as a crossed product, H = first factor
        let base = CrossedSystem::trivial(c(2), c(2)).validate().unwrap();
        let e = build_crossed_product(&base).unwrap();
        // first factor = pairs (h, 0) = indices {0, 2}; second factor reps (0, g)
        let sys = extract_crossed_system(&e, &[0, 2], &[0, 1]).unwrap();
        assert!(sys.alpha().is_trivial());
        assert!(sys.f().is_trivial());
    }

    #[test]
    fn extract_from_q8_roundtrips() {
        use crate::families::GroupFamily;
        let q8 = GroupFamily::holder(4, 2, 2, 3).unwrap().to_table().unwrap();
        // <a> = {a^p b^0} sits at indices {0, 2, 4, 6}; transversal {1, b}
        let sys = extract_crossed_system(&q8, &[0, 2, 4, 6], &[0, 1]).unwrap();
        assert_eq!(sys.h().order(), 4);
        assert_eq!(sys.g().order(), 2);
        let rebuilt = build_crossed_product(&sys).unwrap();
        assert!(
            crate::oracle::tables_isomorphic(&rebuilt, &q8)
                .unwrap()
                .is_some()
        );
    }

    #[test]
    fn extract_rejects_bad_inputs() {
        let e = c(4);
        assert!(matches!(
            extract_crossed_system(&e, &[0, 1], &[0, 1]),
            Err(ExtractError::NotNormalSubgroup { .. })
        ));
        assert!(matches!(
            extract_crossed_system(&e, &[0, 2], &[1, 0]),
            Err(ExtractError::BadTransversal { .. })
        ));
        assert!(matches!(
            extract_crossed_system(&e, &[0, 2], &[0, 2]),
            Err(ExtractError::BadTransversal { .. })
        ));
    }

    #[test]
    fn default_transversal_picks_minimal_representatives() {
        let e = c(6);
        let t = default_transversal(&e, &[0, 2, 4]).unwrap();
        assert_eq!(t, vec![0, 1]);
    }
}
