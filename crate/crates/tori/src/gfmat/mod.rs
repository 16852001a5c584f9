//! Exact finite-field arithmetic, dense matrices over small fields, and
//! bounded group enumeration with normalizer computation.
//!
//! This is the engine behind the matrix-level oracle: fields GF(p^k) up to
//! 2^16 elements with deterministic moduli, matrices with exact arithmetic,
//! and breadth-first closure of generator sets into full element lists with
//! canonical hashable encodings.

mod field;
mod group;
mod matrix;

pub use field::{element_of_order, field, multiplicative_order, FieldElt, FieldSpec};
pub use group::{
    close_matrices, enumerate_group, enumerate_subgroup, omega_plus_group, sl_group, sp_group,
    subgroup_centralizer_order, subgroup_normalizer_order, subgroup_normalizer_order_set,
    symplectic_gram, GroupHandle, GroupSpec, Membership,
};
pub use matrix::{dickson_even, GFMatrix};
