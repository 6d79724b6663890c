//! Conjugacy and centralisers of finite lists of elements in a fixed
//! word-hyperbolic group.
//!
//! The entry points are [`list_solver::solve_lists`] and
//! [`list_solver::centraliser_lists`]. Everything takes a
//! [`GroupContext`], which carries the shortlex reducer and the constants
//! derived from δ.

pub mod cli;
pub mod context;
pub mod error;
pub mod list_solver;
pub mod oracle;
pub mod power_conjugacy;
pub mod single_conjugacy;
pub mod straightness;
pub mod stringology;
pub mod words;

pub use context::{GroupContext, Profile};
pub use error::{Error, Result};
pub use words::{Alphabet, Letter, Word};
