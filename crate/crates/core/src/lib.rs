//! Exact verification of Hopf quasigroups, Hopf coquasigroups, their
//! (co)actions, Long dimodules and smash (co)product constructions over
//! finite-dimensional algebras with rational or prime-field coefficients.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod actions;
pub mod exactla;
pub mod formats;
pub mod longdimod;
pub mod loops;
pub mod report;
pub mod smash;
pub mod structures;

pub use error::{Error, Result};
