//! The two concrete division algebras, their automorphisms, and left
//! linear algebra over them.

pub mod auto;
pub mod elem;
pub mod linalg;
pub mod quat;
pub mod rat;
pub mod ratfun;

pub use auto::{auto_commute, auto_equal, inner_order, is_fixed, AutoDesc, Automorphism, InnerOrder, Mobius};
pub use elem::{delem_arith, AlgebraTag, ArithOp, DElem};
pub use linalg::{left_nullspace, left_solve, DMatrix, LeftEchelon, Solve, SparseRow};
pub use quat::Quat;
pub use rat::Rat;
pub use ratfun::{QPoly, RatFun};
