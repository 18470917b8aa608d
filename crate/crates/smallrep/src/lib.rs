//! Exact-rational computational algebra for root systems, rational Dunkl
//! operators, degenerate affine Hecke algebras, and Harish-Chandra
//! projections on enveloping algebras of low-rank semisimple Lie algebras.
//!
//! Everything is computed over `num_rational::BigRational` (or rational
//! functions in a formal parameter `k`); there is no floating point in the
//! crate. Supported root systems: A1–A4, B2–B4, C2–C4, D3–D4, F4, G2.

pub mod cli;
pub mod dunkl;
pub mod envelop;
pub mod error;
pub mod hecke;
pub mod linalg;
pub mod polyalg;
pub mod report;
pub mod repth;
pub mod rootsys;
pub mod scalar;
