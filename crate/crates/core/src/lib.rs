//! Linearized Reed-Solomon codes over F_{p^m} and their higher (generalized
//! Hamming) weight distributions, computed two independent ways:
//!
//! * [`bruteforce`] enumerates every r-dimensional subspace of the message
//!   space in canonical RREF form and weighs each one exactly;
//! * [`closed_form`] evaluates the closed-form counts, which need no field
//!   realization at all and scale far beyond enumeration reach.
//!
//! Everything is exact: field arithmetic runs on log/antilog tables, counts
//! are arbitrary-precision integers. The two routes are cross-checked against
//! each other by the `acceptance` test suite and by the `verify` CLI command.

pub mod bruteforce;
pub mod closed_form;
pub mod code;
pub mod error;
pub mod field;
pub mod jsonnum;
pub mod linalg;
pub mod params;
pub mod qbinom;

pub use bruteforce::{
    brute_distribution, count_c_r_u, enumerate_subfield_subspaces, enumerate_subspaces,
    subspace_weight, subspace_weight_direct, zero_locus_dim, SubspaceBasis, WeightDistribution,
};
pub use closed_form::{
    full_distribution, higher_weight_count, weight_hierarchy, weight_value_set, DistRow,
    DistributionReport, ReportParams,
};
pub use code::{
    codeword_weight, encode, lin_vandermonde, linearized_eval, null_space_dim,
    vandermonde_full_rank, Codeword, MessageVector,
};
pub use error::{Error, Result};
pub use field::{
    build_field, build_field_with_cap, build_field_with_primitive_rank, FieldCtx, FieldElement,
    DEFAULT_TABLE_CAP,
};
pub use linalg::{endomorphism_matrix, FFMatrix, Rref, Scope};
pub use params::CodeParams;

/// Default cap on the number of subspaces an exhaustive enumeration may visit.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// The default parameter grid `(p, m, d, k)` over which `verify` runs the
/// brute-force enumeration against the closed form.
pub const DEFAULT_VERIFY_GRID: [(u64, u32, u32, u32); 12] = [
    (2, 2, 1, 2),
    (2, 3, 1, 2),
    (2, 3, 1, 3),
    (2, 4, 1, 2),
    (2, 4, 1, 3),
    (2, 4, 1, 4),
    (2, 4, 2, 2),
    (2, 6, 2, 2),
    (2, 6, 2, 3),
    (3, 2, 1, 2),
    (3, 3, 1, 3),
    (5, 2, 1, 2),
];
