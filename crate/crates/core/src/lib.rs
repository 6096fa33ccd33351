//! Crossed products of cyclic groups.
//!
//! This crate implements the algebra of crossed systems `(H, G, alpha, f)`
//! over finite multiplication tables: validation of the compatibility
//! conditions, the crossed product construction, extraction of a crossed
//! system from a group with a chosen normal subgroup, the calculus of
//! symmetric normalized 2-cocycles on cyclic groups (including infinite
//! cyclic coefficients), exact normal-form arithmetic for the presentation
//! families of cyclic-by-cyclic extensions, and decision procedures with
//! witnesses for when such a product is cyclic. A brute-force oracle backs
//! every decision at small scale.
//!
//! Modules:
//!
//! - [`arith`]: exact integer and modular arithmetic.
//! - [`table`]: finite groups as multiplication tables, axiom checking.
//! - [`crossed`]: crossed systems, validation, products, extraction.
//! - [`cocycle`]: profiles, partial sums, the cocycle bijection.
//! - [`families`]: normal-form arithmetic for the presentation families.
//! - [`cyclicity`]: cyclicity decisions with generator or embedding
//!   witnesses.
//! - [`oracle`]: brute-force ground truth and consistency sweeps.

pub mod arith;
pub mod cocycle;
pub mod crossed;
pub mod cyclicity;
pub mod families;
pub mod oracle;
pub mod table;

pub use arith::{ext_gcd, gcd, gcd3, mod_inverse, mod_pow, ArithError, BezoutWitness, Residue};
pub use cocycle::{
    cocycle_to_profile, enumerate_profiles, enumerate_profiles_with_budget, partial_sums,
    profile_count, profile_from_lex_index, profile_to_cocycle, CocycleError, CocycleProfile,
    CocycleTarget, PartialSums, ProfileIterator, SymmetricCocycle, DEFAULT_PROFILE_BUDGET,
};
pub use crossed::{
    build_crossed_product, classify_special_case, default_transversal, extract_crossed_system,
    validate_crossed_system, CocycleMap, CrossedSystem, CrossedSystemError, ExtractError,
    SpecialCase, WeakActionMap,
};
pub use cyclicity::{
    bezout_coprime, decide_cyclic_holder, decide_cyclic_inf_by_fin, decide_cyclic_main,
    decide_twisted_finite, decide_twisted_infinite, theta_witness,
    twisted_inf_to_presentation_iso, twisted_to_holder_iso, CyclicityError, CyclicityInput,
    CyclicityVerdict, Obstruction, ThetaWitness, TwistedHolderIso, TwistedInfIso, Witness,
};
pub use families::{ElementOrder, FamilyElement, FamilyError, GroupFamily, TwistedData};
pub use oracle::{
    automorphisms, brute_force_is_cyclic, consistency_sweep, element_order_in_table,
    enumerate_crossed_systems, order_profile, sweep_holder_presentations, sweep_twisted_profiles,
    tables_isomorphic, OracleError, SweepReport, DEFAULT_SYSTEM_BUDGET, ISO_ORDER_LIMIT,
};
pub use table::{verify_group_axioms, AxiomReport, FiniteGroupTable, TableError};
