//! Braid monodromy factorizations and the groups they present.
//!
//! The crate is `no_std` and only needs `alloc`. It covers exact braid
//! arithmetic (Garside normal form, Artin action), band generators and their
//! composite notations, factorization bookkeeping, Zariski–van Kampen
//! presentations with Tietze simplification, Reidemeister–Schreier rewriting
//! for transposition monodromies, and lifting to the torus mapping class group.
#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]
extern crate alloc;

pub mod braid;
pub mod covers;
pub mod error;
pub mod factorization;
pub mod free;
pub mod halftwist;
pub mod matrix;
pub mod mcg;
pub mod vankampen;

pub use braid::{ArtinWord, GarsideNormalForm, Permutation};
pub use error::{Error, Result};
pub use factorization::Bmf;
pub use free::FreeWord;
pub use halftwist::{Conventions, Factor, Label, LabelMap, Side};
pub use vankampen::{AbelianGroup, Presentation};
