//! Brute-force ground truth: cyclicity by element-order search, order
//! profiles, small-order isomorphism testing by generator-image
//! backtracking, exhaustive enumeration of normalized crossed systems, and
//! the consistency sweeps that pit the decision procedures against all of
//! the above.

use crate::crossed::{validate_crossed_system, CocycleMap, CrossedSystem, WeakActionMap};
use crate::cyclicity::{decide_cyclic_main, CyclicityInput};
use crate::families::GroupFamily;
use crate::table::{verify_group_axioms, FiniteGroupTable};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("search space of {required} candidates exceeds the budget {budget}")]
    TooLarge { required: u128, budget: u64 },
}

/// Default cap on `|H|^(|G|^2) * |Aut(H)|^|G|` for system enumeration.
pub const DEFAULT_SYSTEM_BUDGET: u64 = 1 << 24;

/// Isomorphism search is restricted to tables of at most this order.
pub const ISO_ORDER_LIMIT: usize = 64;

/// Order of one element by repeated multiplication.
pub fn element_order_in_table(t: &FiniteGroupTable, x: usize) -> u64 {
    let mut cur = x;
    let mut k = 1u64;
    while cur != t.identity() {
        cur = t.mul(cur, x);
        k += 1;
        debug_assert!(k <= t.order() as u64, "element order exceeds group order");
    }
    k
}

/// True iff some element has full order; returns the least-index generator.
pub fn brute_force_is_cyclic(t: &FiniteGroupTable) -> (bool, Option<usize>) {
    let n = t.order() as u64;
    for x in 0..t.order() {
        if element_order_in_table(t, x) == n {
            return (true, Some(x));
        }
    }
    (false, None)
}

/// Sorted multiset of all element orders; an isomorphism invariant.
pub fn order_profile(t: &FiniteGroupTable) -> Vec<u64> {
    let mut orders: Vec<u64> = (0..t.order()).map(|x| element_order_in_table(t, x)).collect();
    orders.sort_unstable();
    orders
}

/// A minimal generating sequence: greedily add the least element outside the
/// subgroup generated so far.
fn generating_sequence(t: &FiniteGroupTable) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut closed = closure(t, &gens);
    while let Some(next) = (0..t.order()).find(|&x| !closed[x]) {
        gens.push(next);
        closed = closure(t, &gens);
    }
    gens
}

fn closure(t: &FiniteGroupTable, gens: &[usize]) -> Vec<bool> {
    let mut member = vec![false; t.order()];
    member[t.identity()] = true;
    let mut queue = vec![t.identity()];
    while let Some(x) = queue.pop() {
        for &g in gens {
            let y = t.mul(x, g);
            if !member[y] {
                member[y] = true;
                queue.push(y);
            }
        }
    }
    member
}

struct IsoSearch<'a> {
    t1: &'a FiniteGroupTable,
    t2: &'a FiniteGroupTable,
    orders1: Vec<u64>,
    orders2: Vec<u64>,
    gens: Vec<usize>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    mapped: Vec<usize>,
    solutions: Vec<Vec<usize>>,
    find_all: bool,
}

impl IsoSearch<'_> {
    /// Extends the partial map with `x -> y` and closes under products.
    /// Returns false on any conflict; additions stay on `self.mapped` for
    /// the caller to roll back.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        if self.used[y] || self.orders1[x] != self.orders2[y] {
            return false;
        }
        self.map[x] = Some(y);
        self.used[y] = true;
        self.mapped.push(x);
        let mut idx = self.mapped.len() - 1;
        while idx < self.mapped.len() {
            let a = self.mapped[idx];
            let ia = self.map[a].expect("on mapped list");
            for pos in 0..=idx {
                let b = self.mapped[pos];
                let ib = self.map[b].expect("on mapped list");
                let pairs = [
                    (self.t1.mul(a, b), self.t2.mul(ia, ib)),
                    (self.t1.mul(b, a), self.t2.mul(ib, ia)),
                ];
                for (p, ip) in pairs {
                    match self.map[p] {
                        Some(cur) => {
                            if cur != ip {
                                return false;
                            }
                        }
                        None => {
                            if self.used[ip] || self.orders1[p] != self.orders2[ip] {
                                return false;
                            }
                            self.map[p] = Some(ip);
                            self.used[ip] = true;
                            self.mapped.push(p);
                        }
                    }
                }
            }
            idx += 1;
        }
        true
    }

    fn rollback(&mut self, checkpoint: usize) {
        while self.mapped.len() > checkpoint {
            let x = self.mapped.pop().expect("above checkpoint");
            let y = self.map[x].take().expect("was assigned");
            self.used[y] = false;
        }
    }

    /// Backtracks over images of the generators; `true` means stop early.
    fn search(&mut self, gi: usize) -> bool {
        if gi == self.gens.len() {
            debug_assert_eq!(self.mapped.len(), self.t1.order(), "generators must span");
            self.solutions
                .push(self.map.iter().map(|o| o.expect("total")).collect());
            return !self.find_all;
        }
        let x = self.gens[gi];
        for y in 0..self.t2.order() {
            let checkpoint = self.mapped.len();
            if self.assign(x, y) && self.search(gi + 1) {
                return true;
            }
            self.rollback(checkpoint);
        }
        false
    }
}

fn isomorphism_search(
    t1: &FiniteGroupTable,
    t2: &FiniteGroupTable,
    find_all: bool,
) -> Vec<Vec<usize>> {
    let mut state = IsoSearch {
        t1,
        t2,
        orders1: (0..t1.order()).map(|x| element_order_in_table(t1, x)).collect(),
        orders2: (0..t2.order()).map(|x| element_order_in_table(t2, x)).collect(),
        gens: generating_sequence(t1),
        map: vec![None; t1.order()],
        used: vec![false; t2.order()],
        mapped: Vec::new(),
        solutions: Vec::new(),
        find_all,
    };
    let seeded = state.assign(t1.identity(), t2.identity());
    debug_assert!(seeded, "identity must map to identity");
    state.search(0);
    state.solutions
}

/// A product-preserving bijection between the tables, or `None` when no
/// isomorphism exists. Backtracking over generator images, pruned by
/// element orders; restricted to order at most [`ISO_ORDER_LIMIT`].
pub fn tables_isomorphic(
    t1: &FiniteGroupTable,
    t2: &FiniteGroupTable,
) -> Result<Option<Vec<usize>>, OracleError> {
    if t1.order() != t2.order() {
        return Ok(None);
    }
    if t1.order() > ISO_ORDER_LIMIT {
        return Err(OracleError::TooLarge {
            required: t1.order() as u128,
            budget: ISO_ORDER_LIMIT as u64,
        });
    }
    if order_profile(t1) != order_profile(t2) {
        return Ok(None);
    }
    Ok(isomorphism_search(t1, t2, false).into_iter().next())
}

/// All automorphisms of a table (its full automorphism group, as index maps).
pub fn automorphisms(t: &FiniteGroupTable) -> Vec<Vec<usize>> {
    assert!(t.order() <= ISO_ORDER_LIMIT, "automorphism search bound");
    isomorphism_search(t, t, true)
}

/// Every normalized crossed system `(H, G, alpha, f)`: `alpha` ranges over
/// maps `G -> Aut(H)` (weak actions need not be homomorphisms) and `f` over
/// maps `G x G -> H` with `f(1,1) = 1`, both filtered by full validation.
///
/// Candidates with `alpha(1) != id` or `f(1,g) != 1 != f(g,1)` are skipped
/// up front: validation forces those identities, so no validated system is
/// missed. The budget is checked against the unpruned space
/// `|H|^(|G|^2) * |Aut(H)|^|G|`.
pub fn enumerate_crossed_systems(
    h: &FiniteGroupTable,
    g: &FiniteGroupTable,
    budget: u64,
) -> Result<Vec<CrossedSystem>, OracleError> {
    let nh = h.order();
    let ng = g.order();
    let too_large = |required: u128| OracleError::TooLarge { required, budget };
    if nh > ISO_ORDER_LIMIT {
        return Err(too_large(u128::MAX));
    }
    let auts = automorphisms(h);
    let required = (nh as u128)
        .checked_pow((ng * ng) as u32)
        .and_then(|f_space| {
            (auts.len() as u128)
                .checked_pow(ng as u32)
                .and_then(|a_space| f_space.checked_mul(a_space))
        })
        .unwrap_or(u128::MAX);
    if required > budget as u128 {
        return Err(too_large(required));
    }

    let free_g = ng - 1;
    let f_cells = free_g * free_g;
    let mut systems = Vec::new();

    let mut alpha_digits = vec![0usize; free_g];
    loop {
        let mut perms = Vec::with_capacity(ng);
        perms.push((0..nh).collect::<Vec<usize>>());
        for &d in &alpha_digits {
            perms.push(auts[d].clone());
        }
        let alpha = WeakActionMap::new(perms);

        let mut f_digits = vec![0usize; f_cells];
        loop {
            let mut values = vec![0usize; ng * ng];
            for (cell, &v) in f_digits.iter().enumerate() {
                let g1 = cell / free_g + 1;
                let g2 = cell % free_g + 1;
                values[g1 * ng + g2] = v;
            }
            let candidate = CrossedSystem::new(
                h.clone(),
                g.clone(),
                alpha.clone(),
                CocycleMap::new(ng, values).expect("shape by construction"),
            )
            .expect("shape by construction");
            if let Ok(valid) = validate_crossed_system(candidate) {
                systems.push(valid);
            }
            if !increment(&mut f_digits, nh) {
                break;
            }
        }
        if !increment(&mut alpha_digits, auts.len()) {
            break;
        }
    }
    Ok(systems)
}

/// Little-endian counter increment; false once the counter wraps to zero.
fn increment(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Outcome of a consistency sweep; `mismatches` holds one line per
/// disagreement between a decision procedure and the brute-force oracle.
#[derive(Debug, Clone, Default)]
pub struct SweepReport {
    pub max_order: u64,
    pub twisted_profiles_checked: u64,
    pub holder_presentations_checked: u64,
    pub mismatches: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn merge(mut self, other: SweepReport) -> SweepReport {
        self.max_order = self.max_order.max(other.max_order);
        self.twisted_profiles_checked += other.twisted_profiles_checked;
        self.holder_presentations_checked += other.holder_presentations_checked;
        self.mismatches.extend(other.mismatches);
        self
    }
}

/// For every `(n, m)` with `n m <= max_order` and every profile in
/// `Sigma_{m,n}`, compares the main cyclicity decision with brute force on
/// the built table.
pub fn sweep_twisted_profiles(max_order: u64) -> SweepReport {
    assert!(max_order <= 48, "sweep is meant for small exhaustive ranges");
    let mut report = SweepReport {
        max_order,
        ..SweepReport::default()
    };
    for n in 2..=max_order / 2 {
        for m in 2..=max_order / n {
            let count = crate::cocycle::profile_count(m, n).expect("small") as u64;
            let mismatches: Vec<String> = (0..count)
                .into_par_iter()
                .filter_map(|idx| {
                    let profile = crate::cocycle::profile_from_lex_index(m, n, idx);
                    let fam = GroupFamily::twisted_finite(profile).expect("finite target");
                    let verdict = decide_cyclic_main(CyclicityInput::Family(&fam))
                        .expect("valid family");
                    let table = fam.to_table().expect("finite family");
                    let (oracle_cyclic, _) = brute_force_is_cyclic(&table);
                    (verdict.cyclic != oracle_cyclic).then(|| {
                        format!(
                            "twisted n={n} m={m} lex={idx}: decision {} vs oracle {}",
                            verdict.cyclic, oracle_cyclic
                        )
                    })
                })
                .collect();
            report.twisted_profiles_checked += count;
            report.mismatches.extend(mismatches);
        }
    }
    report
}

/// For every valid Holder parameter tuple with `n m <= max_order`: the table
/// passes the group axioms, has order `n m`, and the cyclicity decision with
/// its witness agrees with brute force.
pub fn sweep_holder_presentations(max_order: u64) -> SweepReport {
    assert!(max_order <= 48, "sweep is meant for small exhaustive ranges");
    let mut report = SweepReport {
        max_order,
        ..SweepReport::default()
    };
    for n in 2..=max_order / 2 {
        for m in 2..=max_order / n {
            let tuples: Vec<(u64, u64)> = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| GroupFamily::holder(n, m, i, j).is_ok())
                .collect();
            report.holder_presentations_checked += tuples.len() as u64;
            let mismatches: Vec<String> = tuples
                .into_par_iter()
                .filter_map(|(i, j)| {
                    let fam = GroupFamily::holder(n, m, i, j).expect("filtered");
                    let table = fam.to_table().expect("finite family");
                    if table.order() as u64 != n * m {
                        return Some(format!("holder({n},{m},{i},{j}): wrong order"));
                    }
                    if !verify_group_axioms(&table).passed() {
                        return Some(format!("holder({n},{m},{i},{j}): axioms fail"));
                    }
                    let verdict =
                        crate::cyclicity::decide_cyclic_holder(n, m, i, j).expect("valid");
                    let (oracle_cyclic, _) = brute_force_is_cyclic(&table);
                    if verdict.cyclic != oracle_cyclic {
                        return Some(format!(
                            "holder({n},{m},{i},{j}): decision {} vs oracle {}",
                            verdict.cyclic, oracle_cyclic
                        ));
                    }
                    if let Some(crate::cyclicity::Witness::FiniteGenerator { element, order }) =
                        verdict.witness
                    {
                        let idx = element.p as usize * m as usize + element.q as usize;
                        let table_order = element_order_in_table(&table, idx);
                        if order != n * m || table_order != n * m {
                            return Some(format!(
                                "holder({n},{m},{i},{j}): witness order {table_order} != {}",
                                n * m
                            ));
                        }
                    }
                    None
                })
                .collect();
            report.mismatches.extend(mismatches);
        }
    }
    report
}

/// Both sweeps combined; the driver behind `oracle sweep`.
pub fn consistency_sweep(max_order: u64) -> SweepReport {
    sweep_twisted_profiles(max_order).merge(sweep_holder_presentations(max_order))
}
