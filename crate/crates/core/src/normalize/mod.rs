//! Noether normalization of finitely many automorphic generators.

pub mod engine;
pub mod monic;
pub mod search;
pub mod tuples;

pub use engine::{
    exponent_box, normalize, verify_certificate, BoundedSearchOracle, CertReport, DependenceOracle, GenRecord,
    Independence, Mode, ModuleGen, NormalizationCert, OracleAnswer, TransformStep,
};
pub use monic::{monicize_dadic, monicize_linear, MonicizationResult, ShiftKind};
pub use search::{find_nonvanishing, find_projective_point, PointSearchSpec};
pub use tuples::{
    decide_tuple_normalizable_field_shifts, power_reduce, verify_power_reduction, FieldCriterion, PowerReduction,
};
