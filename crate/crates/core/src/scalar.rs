//! Scalar abstractions.
//!
//! Geometry is written against [`Real`] so the same code runs in `f32` or
//! `f64`. Homology is computed over an [`ExactField`]; the crate uses
//! arbitrary-precision rationals there so rank decisions never depend on
//! floating-point thresholds.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{Float, FloatConst, FromPrimitive, Num, NumAssign, ToPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
    /// Lossy conversion from an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + ToPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
}

/// A field with exact arithmetic (rationals of some integer type).
pub trait ExactField: Clone + PartialEq + Num + Neg<Output = Self> + Debug {}

impl<T> ExactField for T where T: Clone + PartialEq + Num + Neg<Output = T> + Debug {}
