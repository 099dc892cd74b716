//! Multiset cycles with parity-constrained drops, the d-cycles obtained from
//! them by bundle surgery, Dumont permutations, and weighted Motzkin paths
//! (Laguerre histories), together with the bijections connecting them and
//! the counting formulas they all share: the Genocchi numbers 1, 1, 3, 17,
//! 155, 2073, ...
//!
//! The object types live at the crate root. [`bijection`] holds the maps,
//! [`enumerate`] the streaming generators and their brute-force
//! counterparts, [`counting`] the closed-form counts, and [`verify`] the
//! self-check suites behind the command-line `verify` subcommand.

mod cycle;
mod error;
mod laguerre;
mod multiset;
mod perm;

pub mod bijection;
pub mod counting;
pub mod enumerate;
pub mod verify;

pub use cycle::{Bundle, CompactCycle, Cycle};
pub use error::{Error, Result};
pub use laguerre::{LaguerreHistory, Step};
pub use multiset::Multiset;
pub use perm::{LetterClass, Permutation};
