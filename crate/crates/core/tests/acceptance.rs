//! Acceptance suite: one test per criterion, each ending in a single PASS
//! line with the counts it covered (visible with `--nocapture`).
//!
//! Run with:
//!
//! ```text
//! cargo test -p crossed-forge-core --test acceptance -- --nocapture
//! ```

use std::collections::BTreeSet;

use crossed_forge_core::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Criterion 1: the worked infinite-target example, bit-exact. The profile
/// `phi = (0, 1, 1)` of period 3 valued in the integers yields the expected
/// cocycle table, `S_3 = 2`, a cyclic product generated by `(0, 2)`, and the
/// stated powers of the generator.
#[test]
fn criterion_1_worked_example_bit_exact() {
    let profile =
        CocycleProfile::new(3, CocycleTarget::InfiniteCyclic, vec![0, 1, 1]).unwrap();

    let f = profile_to_cocycle(&profile);
    for u in 0..3 {
        assert_eq!(f.value(0, u), 0, "f(0, {u})");
        assert_eq!(f.value(u, 0), 0, "f({u}, 0)");
    }
    assert_eq!(f.value(2, 2), 0);
    assert_eq!(f.value(1, 1), 1);
    assert_eq!(f.value(1, 2), 1);
    assert_eq!(f.value(2, 1), 1);

    assert_eq!(partial_sums(&profile).s_m(), 2);

    let fam = GroupFamily::twisted_infinite(profile).unwrap();
    let verdict = decide_cyclic_main(CyclicityInput::Family(&fam)).unwrap();
    assert!(verdict.cyclic);
    let generator = match verdict.witness {
        Some(Witness::InfiniteEmbedding { generator, theta }) => {
            assert_eq!(theta.d, 1);
            generator
        }
        other => panic!("expected an embedding witness, got {other:?}"),
    };
    assert_eq!(generator, FamilyElement::new(0, 2));
    assert_eq!(fam.power(generator, 2), FamilyElement::new(0, 1));
    assert_eq!(fam.power(generator, 3), FamilyElement::new(1, 0));

    println!("criterion 1 PASS: worked example reproduced bit-exactly");
}

/// Criterion 2: for every (n, m) with n*m <= 36 and every profile in
/// Sigma_{m,n}, the main cyclicity decision equals brute force on the built
/// table.
#[test]
fn criterion_2_main_theorem_matches_oracle_on_finite_twisted_products() {
    let report = sweep_twisted_profiles(36);
    assert!(report.passed(), "mismatches: {:?}", report.mismatches);

    // the sweep must have covered the whole space
    let mut expected = 0u64;
    for n in 2..=18u64 {
        for m in 2..=36 / n {
            expected += profile_count(m, n).unwrap() as u64;
        }
    }
    assert_eq!(report.twisted_profiles_checked, expected);

    println!(
        "criterion 2 PASS: {} twisted profiles agree with the oracle",
        report.twisted_profiles_checked
    );
}

/// Criterion 3: every valid Holder tuple with n*m <= 36 yields a table that
/// passes the group axioms with |E| = n*m, and the cyclicity decision with
/// its a^u b^v witness agrees with brute force.
#[test]
fn criterion_3_holder_sweep() {
    let report = sweep_holder_presentations(36);
    assert!(report.passed(), "mismatches: {:?}", report.mismatches);
    assert!(report.holder_presentations_checked > 0);

    println!(
        "criterion 3 PASS: {} Holder presentations verified",
        report.holder_presentations_checked
    );
}

/// Criterion 4: with the trivial cocycle, C_n x C_m is cyclic exactly when
/// gcd(n, m) = 1, for all n, m <= 12, agreeing with brute force.
#[test]
fn criterion_4_chinese_remainder_recovery() {
    let mut checked = 0u64;
    for n in 2..=12u64 {
        for m in 2..=12u64 {
            let profile = CocycleProfile::trivial(m, CocycleTarget::Finite(n));
            let fam = GroupFamily::twisted_finite(profile).unwrap();
            let verdict = decide_cyclic_main(CyclicityInput::Family(&fam)).unwrap();
            let expected = gcd(n as i64, m as i64) == 1;
            assert_eq!(verdict.cyclic, expected, "direct product C_{n} x C_{m}");
            let (oracle_cyclic, _) = brute_force_is_cyclic(&fam.to_table().unwrap());
            assert_eq!(oracle_cyclic, expected, "oracle on C_{n} x C_{m}");
            checked += 1;
        }
    }
    println!("criterion 4 PASS: {checked} direct products match the coprimality rule");
}

/// Criterion 5: for all 2 <= m <= 30, 1 <= n <= 30, -30 <= i <= 30 with
/// gcd(m, n, i) = 1, the constrained Bezout witness satisfies
/// u*m + v*i + w*n = 1 with gcd(m, v) = 1, re-verified independently here.
#[test]
fn criterion_5_constrained_bezout_sweep() {
    fn gcd_u128(a: u128, b: u128) -> u128 {
        if b == 0 {
            a
        } else {
            gcd_u128(b, a % b)
        }
    }
    let mut checked = 0u64;
    for m in 2..=30i64 {
        for n in 1..=30i64 {
            for i in -30..=30i64 {
                if gcd3(m, n, i) != 1 {
                    continue;
                }
                let w = bezout_coprime(m as u64, n as u64, i).unwrap();
                let lhs = w.u as i128 * m as i128 + w.v as i128 * i as i128
                    + w.w as i128 * n as i128;
                assert_eq!(lhs, 1, "identity fails at ({m}, {n}, {i})");
                assert_eq!(
                    gcd_u128(m as u128, w.v.unsigned_abs() as u128),
                    1,
                    "gcd(m, v) != 1 at ({m}, {n}, {i})"
                );
                checked += 1;
            }
        }
    }
    println!("criterion 5 PASS: {checked} coprime triples produce valid witnesses");
}

fn all_finite_family_tables(max_order: u64) -> Vec<(String, FiniteGroupTable)> {
    let mut tables = Vec::new();
    for n in 2..=max_order / 2 {
        for m in 2..=max_order / n {
            for i in 0..n {
                for j in 0..n {
                    if let Ok(fam) = GroupFamily::holder(n, m, i, j) {
                        tables.push((
                            format!("holder(n={n}, m={m}, i={i}, j={j})"),
                            fam.to_table().unwrap(),
                        ));
                    }
                }
            }
            for profile in enumerate_profiles_with_budget(m, n, 1 << 20).unwrap() {
                let desc = format!("twisted(n={n}, m={m}, phi={:?})", profile.values());
                let fam = GroupFamily::twisted_finite(profile).unwrap();
                tables.push((desc, fam.to_table().unwrap()));
            }
        }
    }
    tables
}

/// The subgroup generated by one element, as a sorted index set.
fn cyclic_subgroup(t: &FiniteGroupTable, x: usize) -> Vec<usize> {
    let mut elems = vec![t.identity()];
    let mut cur = x;
    while cur != t.identity() {
        elems.push(cur);
        cur = t.mul(cur, x);
    }
    elems.sort_unstable();
    elems
}

/// Criterion 6: for every finite table of order <= 16 built by the family
/// module and every cyclic normal subgroup with the default transversal,
/// extracting the crossed system and rebuilding the product is isomorphic
/// to the original.
#[test]
fn criterion_6_extraction_roundtrip() {
    let mut tables = 0u64;
    let mut roundtrips = 0u64;
    for (desc, e) in all_finite_family_tables(16) {
        tables += 1;
        let mut seen = BTreeSet::new();
        for x in 0..e.order() {
            let sub = cyclic_subgroup(&e, x);
            if !seen.insert(sub.clone()) {
                continue;
            }
            let transversal = match default_transversal(&e, &sub) {
                Ok(t) => t,
                Err(_) => continue, // not normal
            };
            let sys = extract_crossed_system(&e, &sub, &transversal)
                .unwrap_or_else(|err| panic!("{desc}: extraction failed: {err}"));
            let rebuilt = build_crossed_product(&sys).unwrap();
            assert!(
                tables_isomorphic(&rebuilt, &e).unwrap().is_some(),
                "{desc}: rebuild not isomorphic for H = {sub:?}"
            );
            roundtrips += 1;
        }
    }
    println!(
        "criterion 6 PASS: {roundtrips} extraction roundtrips across {tables} tables of order <= 16"
    );
}

/// Criterion 7: profile <-> cocycle roundtrips are identities for all
/// profiles with m, n <= 4 and for 100 random infinite-target profiles with
/// |phi| <= 10; every generated cocycle passes symmetry, normalization and
/// the cocycle identity exhaustively.
#[test]
fn criterion_7_cocycle_bijection() {
    let mut finite = 0u64;
    for m in 2..=4u64 {
        for n in 2..=4u64 {
            for profile in enumerate_profiles(m, n).unwrap() {
                let f = profile_to_cocycle(&profile);
                f.validate().unwrap();
                assert_eq!(cocycle_to_profile(&f).unwrap(), profile);
                finite += 1;
            }
        }
    }

    let mut rng = StdRng::seed_from_u64(0x5eed_c0de);
    for _ in 0..100 {
        let m = rng.random_range(2..=8u64);
        let mut values = vec![0i64];
        values.extend((1..m).map(|_| rng.random_range(-10..=10i64)));
        let profile = CocycleProfile::new(m, CocycleTarget::InfiniteCyclic, values).unwrap();
        let f = profile_to_cocycle(&profile);
        f.validate().unwrap();
        assert_eq!(cocycle_to_profile(&f).unwrap(), profile);
    }

    println!(
        "criterion 7 PASS: {finite} finite profiles and 100 random infinite profiles roundtrip"
    );
}

/// Criterion 8: randomized law checks for every infinite family with
/// exponents in [-100, 100], plus the theta homomorphism property and
/// kernel-generator nullity for all n <= 10, |t| <= 10.
#[test]
fn criterion_8_infinite_family_laws() {
    let families: Vec<(&str, GroupFamily)> = vec![
        ("fin_by_inf(4, 3)", GroupFamily::fin_by_inf(4, 3).unwrap()),
        ("fin_by_inf(7, 3)", GroupFamily::fin_by_inf(7, 3).unwrap()),
        (
            "inf_by_fin_abelian(3, 2)",
            GroupFamily::inf_by_fin_abelian(3, 2).unwrap(),
        ),
        (
            "inf_by_fin_abelian(6, -4)",
            GroupFamily::inf_by_fin_abelian(6, -4).unwrap(),
        ),
        ("inf_by_fin_flip(4)", GroupFamily::inf_by_fin_flip(4).unwrap()),
        ("inf_by_fin_flip(6)", GroupFamily::inf_by_fin_flip(6).unwrap()),
        ("zxz", GroupFamily::ZxZ),
        ("klein_bottle", GroupFamily::KleinBottle),
        (
            "twisted(inf, 3, (0,1,1))",
            GroupFamily::twisted_infinite(
                CocycleProfile::new(3, CocycleTarget::InfiniteCyclic, vec![0, 1, 1]).unwrap(),
            )
            .unwrap(),
        ),
        (
            "twisted(inf, 4, (0,-2,5,1))",
            GroupFamily::twisted_infinite(
                CocycleProfile::new(4, CocycleTarget::InfiniteCyclic, vec![0, -2, 5, 1])
                    .unwrap(),
            )
            .unwrap(),
        ),
    ];

    let mut rng = StdRng::seed_from_u64(0xfeed_5eed);
    let mut checks = 0u64;
    for (name, fam) in &families {
        // defining relations, once per family
        match fam {
            GroupFamily::FinByInf { n, t } => {
                let g = fam.element(1, 0);
                let a = fam.element(0, 1);
                assert_eq!(fam.power(a, *n as i64), fam.identity_element());
                let conj = fam.multiply(fam.multiply(fam.inverse(g), a), g);
                assert_eq!(conj, fam.element(0, *t), "{name}");
            }
            GroupFamily::InfByFinAbelian { n, t } => {
                let h = fam.element(1, 0);
                let g = fam.element(0, 1);
                assert_eq!(fam.multiply(h, g), fam.multiply(g, h), "{name}");
                assert_eq!(fam.power(h, *n as i64), fam.element(0, *t), "{name}");
            }
            GroupFamily::InfByFinFlip { n } => {
                let h = fam.element(1, 0);
                let g = fam.element(0, 1);
                assert_eq!(fam.power(h, *n as i64), fam.identity_element());
                assert_eq!(fam.multiply(fam.multiply(g, h), g), h, "{name}");
            }
            GroupFamily::ZxZ => {
                let g1 = fam.element(0, 1);
                let g2 = fam.element(1, 0);
                assert_eq!(fam.multiply(g1, g2), fam.multiply(g2, g1));
            }
            GroupFamily::KleinBottle => {
                let g1 = fam.element(0, 1);
                let g2 = fam.element(1, 0);
                assert_eq!(fam.multiply(fam.multiply(g1, g2), g1), g2);
            }
            GroupFamily::TwistedInfinite(data) => {
                // f(x, x^k) = g^phi(k) as pair arithmetic
                let x = fam.element(0, 1);
                for k in 0..data.profile().m() as i64 {
                    let xk = fam.element(0, k);
                    let prod = fam.multiply(x, xk);
                    let expect = fam.element(data.profile().value_at(k), 1 + k);
                    assert_eq!(prod, expect, "{name}");
                }
            }
            _ => unreachable!("infinite families only"),
        }

        for _ in 0..10_000 {
            let e1 = fam.element(rng.random_range(-100..=100), rng.random_range(-100..=100));
            let e2 = fam.element(rng.random_range(-100..=100), rng.random_range(-100..=100));
            let e3 = fam.element(rng.random_range(-100..=100), rng.random_range(-100..=100));
            let left = fam.multiply(fam.multiply(e1, e2), e3);
            let right = fam.multiply(e1, fam.multiply(e2, e3));
            assert_eq!(left, right, "{name}: associativity");
            assert_eq!(
                fam.multiply(e1, fam.inverse(e1)),
                fam.identity_element(),
                "{name}: right inverse"
            );
            if matches!(fam, GroupFamily::InfByFinAbelian { .. } | GroupFamily::ZxZ) {
                assert_eq!(fam.multiply(e1, e2), fam.multiply(e2, e1), "{name}");
            }
            checks += 1;
        }
    }

    // theta is a homomorphism and kills the kernel generator
    let mut theta_checks = 0u64;
    for n in 2..=10u64 {
        for t in -10..=10i64 {
            let fam = GroupFamily::inf_by_fin_abelian(n, t).unwrap();
            let theta = theta_witness(n, t);
            assert_eq!(theta.apply(theta.kernel_generator), 0, "(n={n}, t={t})");
            for _ in 0..50 {
                let e1 = fam.element(rng.random_range(-50..=50), rng.random_range(-50..=50));
                let e2 = fam.element(rng.random_range(-50..=50), rng.random_range(-50..=50));
                assert_eq!(
                    theta.apply(fam.multiply(e1, e2)),
                    theta.apply(e1) + theta.apply(e2),
                    "(n={n}, t={t})"
                );
                theta_checks += 1;
            }
        }
    }

    println!(
        "criterion 8 PASS: {checks} randomized law checks, {theta_checks} theta checks"
    );
}

/// Criterion 9: exhaustive crossed-system enumeration for |H|, |G| in
/// {2, 3}: each product passes the group axioms, abelian <=> (trivial
/// action and symmetric cocycle), and the symmetric systems coincide with
/// the profile image.
#[test]
fn criterion_9_exhaustive_system_enumeration() {
    let mut total = 0u64;
    for h_order in [2usize, 3] {
        for g_order in [2usize, 3] {
            let h = FiniteGroupTable::cyclic(h_order);
            let g = FiniteGroupTable::cyclic(g_order);
            let systems = enumerate_crossed_systems(&h, &g, DEFAULT_SYSTEM_BUDGET).unwrap();
            assert!(!systems.is_empty());
            total += systems.len() as u64;

            let mut symmetric_tables = BTreeSet::new();
            for sys in &systems {
                let product = build_crossed_product(sys).unwrap();
                assert!(
                    verify_group_axioms(&product).passed(),
                    "axioms fail at |H|={h_order}, |G|={g_order}"
                );
                let structurally_abelian = sys.alpha().is_trivial() && sys.f().is_symmetric();
                assert_eq!(
                    product.is_abelian(),
                    structurally_abelian,
                    "abelian criterion fails at |H|={h_order}, |G|={g_order}"
                );
                if structurally_abelian {
                    symmetric_tables.insert(sys.f().rows());
                }
            }

            let sigma_image: BTreeSet<Vec<Vec<usize>>> =
                enumerate_profiles(g_order as u64, h_order as u64)
                    .unwrap()
                    .map(|p| {
                        CrossedSystem::twisted_from_profile(&p)
                            .unwrap()
                            .f()
                            .rows()
                    })
                    .collect();
            assert_eq!(
                symmetric_tables, sigma_image,
                "Sigma image mismatch at |H|={h_order}, |G|={g_order}"
            );
        }
    }
    println!("criterion 9 PASS: {total} enumerated systems verified across 4 group pairs");
}
