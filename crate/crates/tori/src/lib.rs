//! Maximal tori of finite groups of Lie type: which ones have a normalizer
//! larger than the algebraic normalizer predicted by the ambient algebraic
//! group?
//!
//! The crate answers that question along two independent routes and checks
//! them against each other:
//!
//! * a closed-form classifier over torus class descriptors (signed cycle
//!   types for the classical families, admissible-diagram labels for the
//!   exceptional ones), and
//! * a matrix-level oracle that realizes each torus inside an explicit
//!   finite matrix group, evaluates root values on it, and — where the
//!   ambient group is small enough to enumerate — computes the normalizer
//!   by brute force.
//!
//! Modules follow the pipeline: [`rootsys`] builds root systems with exact
//! rational arithmetic, [`weylclass`] enumerates torus classes and Weyl
//! centralizer orders, [`torus`] computes the abstract structure of each
//! torus, [`classify`] renders the verdict, [`gfmat`] provides finite-field
//! linear algebra and group enumeration, and [`verify`] ties the two routes
//! together.

pub mod classify;
mod error;
pub mod gfmat;
pub mod rootsys;
pub mod torus;
pub mod verify;
pub mod weylclass;

pub use error::{Error, Result};

/// Default cap on the number of elements a group enumeration may produce.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 2_000_000;
