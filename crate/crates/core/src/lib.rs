//! Computational engine for finite rack and quandle (co)homology and
//! the cycle / cocycle invariants of colored oriented link diagrams.

pub mod algebra;
pub mod chains;
pub mod coloring;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod homology;
pub mod invariants;
pub mod json;
pub mod linalg;
pub mod ring;

pub use error::{Error, Result};
