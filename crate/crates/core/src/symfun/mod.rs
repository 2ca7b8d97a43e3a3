//! Partitions, Schur polynomials and symmetric-function basis changes.

pub mod class_expr;
pub mod convert;
pub mod expansion;
pub mod parse;
pub mod partition;
pub mod schur;

pub use class_expr::{Basis, ClassExpr, Payload};
pub use convert::{chern_to_schur, schur_to_alpha, schur_to_chern, to_chern_basis, to_schur_basis};
pub use expansion::SchurExpansion;
pub use parse::{parse_poly, parse_schur};
pub use partition::Partition;
pub use schur::{chern_to_alpha, complete, elementary, schur_at_ones, schur_chern, schur_poly};
