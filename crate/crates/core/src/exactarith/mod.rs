//! Exact coefficient rings and truncated formal power series.
//!
//! Everything in here is exact; there is no floating point outside of the
//! explicit `to_f64` conversions.

mod quad5;
mod ring;
mod series;

pub use quad5::{quad5_arith, Quad5, Quad5Op};
pub use ring::{pow, Coefficient, Rational};
pub use series::{
    geom_factor, geometric_tail, pochhammer, pochhammer_shifted, GeomMode, PochhammerLength, Series,
};
