//! Modular representations of symmetric groups restricted to elementary
//! abelian `p`-subgroups: partitions and tableaux, Specht and signed
//! permutation modules over finite fields, generic Jordan types, and the
//! closed-form counts that predict them.

pub mod closed_forms;
pub mod error;
pub mod field;
pub mod jordan;
pub mod matrix;
pub mod partition;
pub mod perm;
pub mod reps;
pub mod tableau;

pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElement};
pub use jordan::{dominance_max, jordan_from_ranks, JordanType, RankSequence};
pub use matrix::{MatrixF, SparseMat};
pub use partition::{hook_data, p_core_weight, specht_dimension, CoreWeight, HookData, Partition};
pub use perm::Perm;
pub use reps::{
    direct_sum, e_generators, generic_jordan_type, is_generically_free, jordan_at_point,
    rank_sequence_at_point, signed_perm_rep, specht_rep, u_alpha_matrix, Backend,
    GenericTypeReport, Limits, PointOnE, RepE, SamplingConfig,
};
