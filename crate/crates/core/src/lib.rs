//! Exact integer group determinants for the non-abelian groups of order 18.
//!
//! The crate computes D_G(F) = det(a_{gh⁻¹}) for F ∈ ℤ[G] over the groups
//! Dih(ℤ₃×ℤ₃) (`g18-4`), ℤ₃×D₆ (`z3xd6`) and D₁₈ (`d18`), by three
//! independent exact routes; classifies integers against the determinant
//! spectra of these groups; constructs explicit group-ring witnesses for
//! every attainable value; and verifies the governing congruences by
//! enumeration. All arithmetic is exact — there is no floating point
//! anywhere in the crate.

pub mod det;
pub mod eisenstein;
pub mod error;
pub mod group;
pub mod ring;
pub mod search;
pub mod spectrum;

pub use det::{
    det_exact, det_oracle, det_via_reduction, eval_bivariate, factor_profile, h_reduce,
    regular_matrix, FactorProfile,
};
pub use eisenstein::EisensteinInt;
pub use error::{Error, Result};
pub use group::{build_group, AbelianGroup, GroupId, GroupSpec, GroupTable};
pub use ring::GroupRingElement;
pub use search::{
    run_search, verify_congruence_lemmas, SearchConfig, SearchMode, SearchReport,
};
pub use spectrum::{
    achieve, classify, classify_subgroup_spectra, families, family_element, family_value,
    ClassTag, MembershipForm, Sign, SubgroupSpectra,
};

/// Re-exported so downstream users share one BigInt type.
pub use num_bigint::BigInt;
