//! Exact computations for the quaternionic geometric Satake correspondence
//! at the level of polynomials and matrices.

pub mod algebra;
pub mod bk;
pub mod centralizers;
pub mod error;

pub use error::{Error, Result};
pub mod gln;
pub mod kostka;
pub mod sample;
pub mod spectral;
pub mod stalks;
pub mod twistor;
pub mod verify;
pub mod weights;

mod serde_util;
