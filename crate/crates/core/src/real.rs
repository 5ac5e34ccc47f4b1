//! Scalar abstraction for the learned components.
//!
//! Production state is single precision; gradient verification
//! instantiates the same code at f64. Reductions always accumulate in
//! f64 regardless of the parameter type.

use num_traits::Float;

pub trait Real:
    Float + Copy + Send + Sync + std::fmt::Debug + std::fmt::Display + 'static
{
    fn from_f64(v: f64) -> Self;
    fn to_f64(self) -> f64;
}

impl Real for f32 {
    fn from_f64(v: f64) -> Self {
        v as f32
    }
    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl Real for f64 {
    fn from_f64(v: f64) -> Self {
        v
    }
    fn to_f64(self) -> f64 {
        self
    }
}
