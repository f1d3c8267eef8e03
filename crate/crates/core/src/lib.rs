//! Exact spectral and differential-form computations on the homogeneous
//! nearly Kähler 6-manifolds `S3xS3`, `CP3` and the flag manifold `F(1,2)`.

#![allow(clippy::needless_range_loop)]

pub mod branching;
pub mod dga;
pub mod matrix;
pub mod nkcheck;
pub mod rational;
pub mod rootrep;
pub mod spectrum;
