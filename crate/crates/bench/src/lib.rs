//! Shared inputs for the criterion benchmarks.

use crossed_forge_core::{CocycleProfile, CocycleTarget, CrossedSystem, FiniteGroupTable, GroupFamily};

/// Q8 as a Holder presentation.
pub fn q8() -> GroupFamily {
    GroupFamily::holder(4, 2, 2, 3).expect("valid parameters")
}

/// A twisted product of order 24 with a non-trivial profile.
pub fn twisted_24() -> GroupFamily {
    let profile = CocycleProfile::new(4, CocycleTarget::Finite(6), vec![0, 1, 3, 2])
        .expect("well-formed profile");
    GroupFamily::twisted_finite(profile).expect("finite target")
}

/// The validated trivial crossed system on C_4 x C_6.
pub fn trivial_system() -> CrossedSystem {
    CrossedSystem::trivial(FiniteGroupTable::cyclic(4), FiniteGroupTable::cyclic(6))
        .validate()
        .expect("trivial system validates")
}
