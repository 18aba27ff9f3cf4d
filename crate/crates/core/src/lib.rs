//! Exact verification of the twisted Jacquet module computations for
//! depth-zero Speh representations of GL_2(D), through their finite
//! models over F_Q.
//!
//! Everything is exact: values live in cyclotomic fields, finite fields
//! come from explicit log tables, and every check compares two exact
//! quantities.

pub mod characters;
pub mod cyclotomic;
pub mod depthzero;
pub mod error;
pub mod finite_field;
pub mod gl2;
pub mod linalg;
pub mod report;
pub mod speh;

pub use cyclotomic::{CycNum, Root};
pub use error::{Error, Result};
pub use finite_field::{FieldTower, TowerSpec};
pub use report::{CheckEntry, Status, VerificationReport};
pub use speh::{verify_suite, CheckSelection, SuiteParams, CHECK_GROUPS};
