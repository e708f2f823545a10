//! Exact kernel for Coxeter groups and Artin groups: parabolic retractions,
//! Garside normal forms, double cosets, ribbons and reducible conjugacy.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod applications;
pub mod braid;
pub mod closure;
pub mod coxeter;
pub mod error;
pub mod field;
pub mod garside;
pub mod oracle;
pub mod rewrite;
pub mod spherical;
pub mod words;

pub use braid::{Certificate, Equality, EqualityOptions, Verdict};
pub use coxeter::{CoxeterSystem, Gen, GenSet, ReflectionBag, Root, WElement};
pub use error::{Error, Result};
pub use garside::{PositiveBraid, Simple};
pub use spherical::{ClassKey, MixedForm, OracleKind};
pub use words::{Letter, ProductCase, RootSeq, Word};
