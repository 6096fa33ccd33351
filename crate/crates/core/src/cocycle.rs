//! Symmetric normalized 2-cocycles on a finite cyclic group, parametrized by
//! periodic profiles.
//!
//! A profile is a function `phi` on `0..m` with `phi(0) = 0`, extended
//! m-periodically over the integers, valued either in `Z_n` (finite cyclic
//! target of order `n`) or in `Z` (infinite cyclic target). With partial sums
//! `S[k] = phi(0) + ... + phi(k-1)`, the exponent table
//!
//! ```text
//! f(x^k, x^l) = a^(S[k+l] - S[k] - S[l])
//! ```
//!
//! is a symmetric normalized 2-cocycle on `C_m`, and this assignment is a
//! bijection between profiles and such cocycles. Only the `m` values
//! `phi(0..m)` are ever stored; the periodic extension is computed.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CocycleError {
    #[error("period must be at least 2, got {m}")]
    BadPeriod { m: u64 },
    #[error("finite target order must be at least 2, got {n}")]
    BadTarget { n: u64 },
    #[error("profile has {len} values for period {m}")]
    BadLength { len: usize, m: u64 },
    #[error("phi(0) must be 0, got {value}")]
    NonzeroAtOrigin { value: i64 },
    #[error("cocycle table has {len} values, expected {expected}")]
    BadTableShape { len: usize, expected: usize },
    #[error("not symmetric: f({k}, {l}) != f({l}, {k})")]
    NotSymmetric { k: u64, l: u64 },
    #[error("not normalized: f(0, {l}) != 0")]
    NotNormalized { l: u64 },
    #[error("cocycle identity fails at ({k}, {l}, {p})")]
    NotCocycle { k: u64, l: u64, p: u64 },
    #[error("enumerating {required} profiles exceeds budget {budget}")]
    TooLarge { required: u128, budget: u64 },
}

/// Coefficient group for cocycle values: `C_n` or the infinite cyclic group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CocycleTarget {
    Finite(u64),
    InfiniteCyclic,
}

impl CocycleTarget {
    pub fn is_finite(self) -> bool {
        matches!(self, CocycleTarget::Finite(_))
    }

    /// Reduces an exponent into the target's canonical range.
    fn reduce(self, value: i64) -> i64 {
        match self {
            CocycleTarget::Finite(n) => (value as i128).rem_euclid(n as i128) as i64,
            CocycleTarget::InfiniteCyclic => value,
        }
    }
}

/// A profile `phi(0..m)` with `phi(0) = 0`, understood m-periodically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CocycleProfile {
    m: u64,
    target: CocycleTarget,
    values: Vec<i64>,
}

impl CocycleProfile {
    /// Finite-target values are reduced into `[0, n)` before the
    /// `phi(0) = 0` requirement is checked.
    pub fn new(m: u64, target: CocycleTarget, values: Vec<i64>) -> Result<Self, CocycleError> {
        if m < 2 {
            return Err(CocycleError::BadPeriod { m });
        }
        if let CocycleTarget::Finite(n) = target {
            if n < 2 {
                return Err(CocycleError::BadTarget { n });
            }
        }
        if values.len() != m as usize {
            return Err(CocycleError::BadLength {
                len: values.len(),
                m,
            });
        }
        let values: Vec<i64> = values.into_iter().map(|v| target.reduce(v)).collect();
        if values[0] != 0 {
            return Err(CocycleError::NonzeroAtOrigin { value: values[0] });
        }
        Ok(CocycleProfile { m, target, values })
    }

    pub fn trivial(m: u64, target: CocycleTarget) -> Self {
        CocycleProfile::new(m, target, vec![0; m as usize]).expect("trivial profile is well formed")
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn target(&self) -> CocycleTarget {
        self.target
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `phi(k)` for any integer `k`, via the periodic extension.
    pub fn value_at(&self, k: i64) -> i64 {
        self.values[(k.rem_euclid(self.m as i64)) as usize]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }
}

/// Partial sums `S[0..=m]` of a profile, with `S[0] = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSums {
    m: u64,
    sums: Vec<i64>,
}

impl PartialSums {
    /// `S[k]` for arbitrary `k >= 0`: full periods contribute `S[m]` each,
    /// so `S[k] = (k / m) * S[m] + S[k mod m]`.
    pub fn at(&self, k: u64) -> i64 {
        let m = self.m;
        let whole = crate::arith::narrow((k / m) as i128 * self.sums[m as usize] as i128);
        whole
            .checked_add(self.sums[(k % m) as usize])
            .expect("partial sum overflow")
    }

    /// The representative integer `S[m]` (not reduced).
    pub fn s_m(&self) -> i64 {
        self.sums[self.m as usize]
    }

    /// `S[m]` reduced modulo `n`. Every gcd test downstream is invariant
    /// under the choice of representative, so either form may be used.
    pub fn s_m_reduced(&self, n: u64) -> u64 {
        (self.s_m() as i128).rem_euclid(n as i128) as u64
    }

    pub fn sums(&self) -> &[i64] {
        &self.sums
    }
}

/// Partial sums `S[k] = phi(0) + ... + phi(k-1)`, `S[0] = 0`.
pub fn partial_sums(p: &CocycleProfile) -> PartialSums {
    let mut sums = Vec::with_capacity(p.m as usize + 1);
    sums.push(0i64);
    for &v in &p.values {
        let last = *sums.last().expect("non-empty");
        sums.push(last.checked_add(v).expect("partial sum overflow"));
    }
    PartialSums { m: p.m, sums }
}

/// A symmetric normalized 2-cocycle on `C_m`, stored as the `m x m` table of
/// exponents of the target generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricCocycle {
    m: u64,
    target: CocycleTarget,
    values: Vec<i64>,
}

impl SymmetricCocycle {
    /// Wraps a raw exponent table; only shape is checked here, the cocycle
    /// laws are checked by [`SymmetricCocycle::validate`].
    pub fn from_values(
        m: u64,
        target: CocycleTarget,
        values: Vec<i64>,
    ) -> Result<Self, CocycleError> {
        if m < 2 {
            return Err(CocycleError::BadPeriod { m });
        }
        if let CocycleTarget::Finite(n) = target {
            if n < 2 {
                return Err(CocycleError::BadTarget { n });
            }
        }
        let expected = (m * m) as usize;
        if values.len() != expected {
            return Err(CocycleError::BadTableShape {
                len: values.len(),
                expected,
            });
        }
        let values = values.into_iter().map(|v| target.reduce(v)).collect();
        Ok(SymmetricCocycle { m, target, values })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn target(&self) -> CocycleTarget {
        self.target
    }

    /// Exponent of the target generator at `f(x^k, x^l)`.
    pub fn value(&self, k: u64, l: u64) -> i64 {
        let m = self.m;
        self.values[((k % m) * m + (l % m)) as usize]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Checks symmetry, normalization `f(0, l) = 0`, and the classical
    /// 2-cocycle identity, each exhaustively with the first witness reported.
    pub fn validate(&self) -> Result<(), CocycleError> {
        let m = self.m;
        for k in 0..m {
            for l in k + 1..m {
                if self.value(k, l) != self.value(l, k) {
                    return Err(CocycleError::NotSymmetric { k, l });
                }
            }
        }
        for l in 0..m {
            if self.value(0, l) != 0 || self.value(l, 0) != 0 {
                return Err(CocycleError::NotNormalized { l });
            }
        }
        for k in 0..m {
            for l in 0..m {
                for p in 0..m {
                    // f(x^k, x^l) f(x^(k+l), x^p) = f(x^l, x^p) f(x^k, x^(l+p))
                    let lhs = self.value(k, l) + self.value(k + l, p);
                    let rhs = self.value(l, p) + self.value(k, l + p);
                    if self.target.reduce(lhs) != self.target.reduce(rhs) {
                        return Err(CocycleError::NotCocycle { k, l, p });
                    }
                }
            }
        }
        Ok(())
    }
}

/// The cocycle `f(x^k, x^l) = a^(S[k+l] - S[k] - S[l])` of a profile.
///
/// The returned table is asserted to be symmetric, normalized, a 2-cocycle,
/// and to satisfy `f(x, x^k) = a^phi(k)`; cost is `O(m^3)`.
pub fn profile_to_cocycle(p: &CocycleProfile) -> SymmetricCocycle {
    let sums = partial_sums(p);
    let m = p.m;
    let mut values = Vec::with_capacity((m * m) as usize);
    for k in 0..m {
        for l in 0..m {
            values.push(p.target.reduce(sums.at(k + l) - sums.at(k) - sums.at(l)));
        }
    }
    let f = SymmetricCocycle {
        m,
        target: p.target,
        values,
    };
    f.validate()
        .expect("profile always induces a symmetric normalized 2-cocycle");
    for k in 0..m {
        assert_eq!(
            f.value(1, k),
            p.values[k as usize],
            "f(x, x^k) must equal a^phi(k)"
        );
    }
    f
}

/// Reads the profile back off a validated cocycle via `a^phi(k) = f(x, x^k)`.
///
/// Inverse of [`profile_to_cocycle`]: the reconstruction is asserted to
/// reproduce `f` exactly.
pub fn cocycle_to_profile(f: &SymmetricCocycle) -> Result<CocycleProfile, CocycleError> {
    f.validate()?;
    let values = (0..f.m).map(|k| f.value(1, k)).collect();
    let profile = CocycleProfile::new(f.m, f.target, values)?;
    let rebuilt = profile_to_cocycle(&profile);
    assert_eq!(&rebuilt, f, "profile reconstruction must reproduce the cocycle");
    Ok(profile)
}

/// Default cap on `n^(m-1)`, the number of profiles enumerated.
pub const DEFAULT_PROFILE_BUDGET: u64 = 1 << 16;

/// Number of profiles in `Sigma_{m,n}`, i.e. `n^(m-1)`, if it fits in `u128`.
pub fn profile_count(m: u64, n: u64) -> Option<u128> {
    (n as u128).checked_pow(u32::try_from(m - 1).ok()?)
}

/// All profiles of period `m` with finite target `C_n`, in lexicographic
/// order of `(phi(1), ..., phi(m-1))`, under [`DEFAULT_PROFILE_BUDGET`].
pub fn enumerate_profiles(m: u64, n: u64) -> Result<ProfileIterator, CocycleError> {
    enumerate_profiles_with_budget(m, n, DEFAULT_PROFILE_BUDGET)
}

/// As [`enumerate_profiles`] with an explicit budget.
pub fn enumerate_profiles_with_budget(
    m: u64,
    n: u64,
    budget: u64,
) -> Result<ProfileIterator, CocycleError> {
    if m < 2 {
        return Err(CocycleError::BadPeriod { m });
    }
    if n < 2 {
        return Err(CocycleError::BadTarget { n });
    }
    let required = profile_count(m, n).unwrap_or(u128::MAX);
    if required > budget as u128 {
        return Err(CocycleError::TooLarge { required, budget });
    }
    Ok(ProfileIterator {
        m,
        n,
        next: 0,
        count: required as u64,
    })
}

/// The profile at a lexicographic position, `phi(m-1)` least significant.
pub fn profile_from_lex_index(m: u64, n: u64, index: u64) -> CocycleProfile {
    let mut values = vec![0i64; m as usize];
    let mut rest = index;
    for k in (1..m as usize).rev() {
        values[k] = (rest % n) as i64;
        rest /= n;
    }
    assert_eq!(rest, 0, "lex index out of range");
    CocycleProfile {
        m,
        target: CocycleTarget::Finite(n),
        values,
    }
}

#[derive(Debug, Clone)]
pub struct ProfileIterator {
    m: u64,
    n: u64,
    next: u64,
    count: u64,
}

impl Iterator for ProfileIterator {
    type Item = CocycleProfile;

    fn next(&mut self) -> Option<CocycleProfile> {
        if self.next >= self.count {
            return None;
        }
        let p = profile_from_lex_index(self.m, self.n, self.next);
        self.next += 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.count - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for ProfileIterator {}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn infinite_profile(values: &[i64]) -> CocycleProfile {
        CocycleProfile::new(values.len() as u64, CocycleTarget::InfiniteCyclic, values.to_vec())
            .unwrap()
    }

    #[test]
    fn partial_sums_of_the_running_example() {
        // phi = (0, 1, 1) over the integers
        let p = infinite_profile(&[0, 1, 1]);
        let s = partial_sums(&p);
        assert_eq!(s.sums(), &[0, 0, 1, 2]);
        assert_eq!(s.s_m(), 2);
        assert_eq!(s.at(4), 2); // one full period plus S[1]
        assert_eq!(s.at(6), 4);
    }

    #[test]
    fn partial_sums_trivial_and_small() {
        let p = CocycleProfile::trivial(5, CocycleTarget::Finite(3));
        assert!(partial_sums(&p).sums().iter().all(|&s| s == 0));

        let p = CocycleProfile::new(2, CocycleTarget::Finite(2), vec![0, 1]).unwrap();
        assert_eq!(partial_sums(&p).s_m(), 1);
    }

    #[test]
    fn cocycle_of_the_running_example() {
        let p = infinite_profile(&[0, 1, 1]);
        let f = profile_to_cocycle(&p);
        for u in 0..3 {
            assert_eq!(f.value(0, u), 0);
            assert_eq!(f.value(u, 0), 0);
        }
        assert_eq!(f.value(2, 2), 0);
        assert_eq!(f.value(1, 1), 1);
        assert_eq!(f.value(1, 2), 1);
        assert_eq!(f.value(2, 1), 1);
    }

    #[test]
    fn trivial_profile_gives_trivial_cocycle() {
        let p = CocycleProfile::trivial(4, CocycleTarget::Finite(3));
        assert!(profile_to_cocycle(&p).is_trivial());
    }

    #[test]
    fn two_by_two_example() {
        let p = CocycleProfile::new(2, CocycleTarget::Finite(2), vec![0, 1]).unwrap();
        let f = profile_to_cocycle(&p);
        // f(x, x) = a^(S[2] - 2 S[1]) = a
        assert_eq!(f.value(1, 1), 1);
    }

    #[test]
    fn profile_roundtrips() {
        let p = infinite_profile(&[0, 1, 1]);
        assert_eq!(cocycle_to_profile(&profile_to_cocycle(&p)).unwrap(), p);

        let p = CocycleProfile::new(2, CocycleTarget::Finite(2), vec![0, 1]).unwrap();
        assert_eq!(cocycle_to_profile(&profile_to_cocycle(&p)).unwrap(), p);

        let f = profile_to_cocycle(&CocycleProfile::trivial(3, CocycleTarget::Finite(5)));
        assert!(cocycle_to_profile(&f).unwrap().is_trivial());
    }

    #[test]
    fn validation_reports_witnesses() {
        // asymmetric table
        let f = SymmetricCocycle::from_values(
            2,
            CocycleTarget::Finite(2),
            vec![0, 0, 1, 0],
        )
        .unwrap();
        assert_eq!(f.validate(), Err(CocycleError::NotSymmetric { k: 0, l: 1 }));

        // symmetric but not normalized
        let f = SymmetricCocycle::from_values(
            2,
            CocycleTarget::Finite(2),
            vec![0, 1, 1, 0],
        )
        .unwrap();
        assert_eq!(f.validate(), Err(CocycleError::NotNormalized { l: 1 }));

        // infinite target, normalized and symmetric but not a cocycle:
        // f(1,1)+f(2,2) = 1 while f(1,2)+f(1,... ) breaks the identity
        let f = SymmetricCocycle::from_values(
            3,
            CocycleTarget::InfiniteCyclic,
            vec![0, 0, 0, 0, 1, 0, 0, 0, 0],
        )
        .unwrap();
        assert!(matches!(f.validate(), Err(CocycleError::NotCocycle { .. })));
    }

    #[test]
    fn profile_constructor_rejections() {
        assert_eq!(
            CocycleProfile::new(1, CocycleTarget::Finite(2), vec![0]),
            Err(CocycleError::BadPeriod { m: 1 })
        );
        assert_eq!(
            CocycleProfile::new(2, CocycleTarget::Finite(1), vec![0, 0]),
            Err(CocycleError::BadTarget { n: 1 })
        );
        assert_eq!(
            CocycleProfile::new(2, CocycleTarget::Finite(2), vec![1, 0]),
            Err(CocycleError::NonzeroAtOrigin { value: 1 })
        );
        assert_eq!(
            CocycleProfile::new(3, CocycleTarget::InfiniteCyclic, vec![0, 1]),
            Err(CocycleError::BadLength { len: 2, m: 3 })
        );
    }

    #[test]
    fn enumeration_counts_and_order() {
        let all: Vec<_> = enumerate_profiles(2, 2).unwrap().collect();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].values(), &[0, 0]);
        assert_eq!(all[1].values(), &[0, 1]);

        assert_eq!(enumerate_profiles(3, 2).unwrap().count(), 4);
        assert_eq!(enumerate_profiles(2, 4).unwrap().count(), 4);

        assert!(matches!(
            enumerate_profiles_with_budget(12, 7, 1 << 16),
            Err(CocycleError::TooLarge { .. })
        ));
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        use std::collections::HashSet;
        let seen: HashSet<Vec<i64>> = enumerate_profiles(4, 3)
            .unwrap()
            .map(|p| p.values().to_vec())
            .collect();
        assert_eq!(seen.len(), 27);
    }

    proptest! {
        #[test]
        fn roundtrip_on_random_profiles(
            m in 2u64..6,
            n in 2u64..6,
            seed in 0u64..10_000,
        ) {
            let count = profile_count(m, n).unwrap() as u64;
            let p = profile_from_lex_index(m, n, seed % count);
            let f = profile_to_cocycle(&p);
            prop_assert_eq!(cocycle_to_profile(&f).unwrap(), p);
        }

        #[test]
        fn generated_cocycles_are_periodic(
            m in 2u64..6,
            s in 0u64..4,
            t in 0u64..4,
            vals in proptest::collection::vec(-10i64..10, 1..5),
        ) {
            let mut values = vec![0i64];
            values.extend(vals.iter().cycle().take(m as usize - 1));
            let p = CocycleProfile::new(m, CocycleTarget::InfiniteCyclic, values).unwrap();
            let sums = partial_sums(&p);
            // f(x^(k+sm), x^l) = f(x^k, x^(l+tm)) = f(x^k, x^l) on exponents
            for k in 0..m {
                for l in 0..m {
                    let base = sums.at(k + l) - sums.at(k) - sums.at(l);
                    let shift_k = sums.at(k + s * m + l) - sums.at(k + s * m) - sums.at(l);
                    let shift_l = sums.at(k + l + t * m) - sums.at(k) - sums.at(l + t * m);
                    prop_assert_eq!(base, shift_k);
                    prop_assert_eq!(base, shift_l);
                }
            }
        }
    }
}
