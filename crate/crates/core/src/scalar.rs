//! Scalar abstraction for the numeric core.
//!
//! All floating-point math in this workspace is generic over [`Real`], a
//! thin bundle of `num-traits` bounds satisfied by `f32` and `f64`. The
//! shipped binaries and file formats instantiate everything at `f64`; the
//! `f32` instantiation exists for experiments where reduced precision is
//! acceptable.

use num_traits::{Float, FromPrimitive, NumAssignOps, ToPrimitive};
use std::fmt::{Debug, Display};

/// Floating-point scalar usable throughout the precoding core.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + NumAssignOps + Debug + Display + Default + Send + Sync + 'static
{
    /// Lossy conversion from `f64`, for literals inside generic code.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    /// Lossy conversion to `f64`, for reporting and persistence.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar convertible to f64")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Relative error |a - b| / max(1, |b|), the comparison used by most
/// numeric tests in this workspace.
pub fn rel_err<T: Real>(a: T, b: T) -> T {
    (a - b).abs() / b.abs().max(T::one())
}
