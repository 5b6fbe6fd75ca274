//! Unlimited parity alternating partitions.
//!
//! A partition is *unlimited parity alternating* (PA) when its distinct part
//! values, read from largest to smallest, alternate between odd and even,
//! e.g. `3+2+2+1+1`. This crate counts and enumerates them, evaluates their
//! generating functions exactly (including a closed form over `Q(sqrt 5)`
//! obtained from Heine's second transformation), audits the injection
//! `PA(n) -> PA(n+1)` that proves `pa(n)` is strictly increasing, and checks
//! the asymptotic formula `pa(n) ~ sqrt(A)/(2 pi n) exp(2 sqrt(A n))`
//! numerically.
//!
//! - [`partitions`]: partition type, predicates, conjugation, enumeration,
//!   and a dynamic-programming count that uses no generating functions.
//! - [`exactarith`]: [`Quad5`](exactarith::Quad5) and truncated power series
//!   over integers, rationals and `Q(sqrt 5)`.
//! - [`genfunc`]: the three generating-function pipelines and the Heine
//!   identity checker.
//! - [`monotone`]: the case-defined injection and its exhaustive verifier.
//! - [`asympt`]: constants, Ingham estimate and limit diagnostics.
//! - [`cli`]: report types and the subcommand drivers behind the `pa` binary.

pub mod asympt;
pub mod cli;
pub mod error;
pub mod exactarith;
pub mod genfunc;
pub mod monotone;
pub mod partitions;

pub use error::{Error, Result};
