#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod arith;
pub mod bands;
pub mod bounds;
pub mod catalogue;
pub mod complex;
pub mod error;
pub mod geometry;

pub use error::{Error, Result};
