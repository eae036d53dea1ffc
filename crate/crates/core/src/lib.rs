//! Combinatorics of the symmetric group around the Robinson–Schensted
//! correspondence: permutations and Young subgroups, standard tableaux and
//! evacuation, two-sided cells with their minimal and maximal elements, and a
//! small Kazhdan–Lusztig polynomial oracle.
//!
//! Conventions used throughout:
//!
//! * permutations are one-line words, `w = x_1 ... x_n` meaning `w(i) = x_i`;
//! * products act on the left, `(w v)(i) = w(v(i))`;
//! * tableaux are in English notation, stored row by row;
//! * Schensted row insertion reads `w(1)` first and bumps the leftmost
//!   strictly larger entry.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cells;
pub mod composition;
pub mod error;
pub mod kl;
pub mod perm;
pub mod rsk;
pub mod tableau;

pub use cells::{CellBuckets, CellReport, CellVerdicts};
pub use composition::{Composition, Partition};
pub use error::{Error, Result};
pub use kl::{DescentChoice, IntPolynomial, KlTable};
pub use perm::Permutation;
pub use tableau::StandardTableau;
