#![forbid(unsafe_code)]

//! Braid words, closure link invariants, satellite cabling, braid index
//! criteria, positive braid census searches and genus bookkeeping.
//!
//! The crate is organized around [`word::BraidWord`], an exact braid word
//! that every other module consumes: [`invariants`] computes the skein,
//! Jones and Alexander polynomials of its closure, [`cabling`] builds
//! satellite braids, [`criteria`] turns polynomial data into braid index
//! lower bounds, [`census`] enumerates and reduces positive words, and
//! [`genus`] handles Bennequin-style genus bounds and band surfaces.
//!
//! See the `examples/` directory for one runnable walk-through per
//! capability; the `braidix` binary exposes the same operations as thin
//! subcommands.

pub mod cabling;
pub mod census;
pub mod cli;
pub mod criteria;
pub mod error;
pub mod genus;
pub mod invariants;
pub mod poly;
pub mod tables;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use word::{BraidWord, Letter, Move, Permutation};
