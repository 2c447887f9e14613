use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, NumAssignOps, ToPrimitive};

/// Floating-point scalar the whole pipeline is generic over: `f32` or `f64`.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + NumAssignOps + Debug + Display + Default + Send + Sync + 'static
{
    /// Shorthand for lossy conversion from `f64` literals.
    #[inline]
    fn from_f64_c(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 converts to any Scalar")
    }

    /// Zero-filled buffer.
    ///
    /// Implemented per concrete type so the allocation goes through
    /// `alloc_zeroed`: large gradient buffers then come from fresh zero
    /// pages and only the entries actually written get faulted in.
    fn zeroed_vec(len: usize) -> Vec<Self>;

    #[inline]
    fn half() -> Self {
        Self::from_f64_c(0.5)
    }

    #[inline]
    fn two() -> Self {
        Self::from_f64_c(2.0)
    }

    /// Logistic function 1/(1+e^-z).
    #[inline]
    fn logistic(self) -> Self {
        Self::one() / (Self::one() + (-self).exp())
    }

    #[inline]
    fn clamp01(self) -> Self {
        if self < Self::zero() {
            Self::zero()
        } else if self > Self::one() {
            Self::one()
        } else {
            self
        }
    }
}

impl Scalar for f32 {
    #[inline]
    fn zeroed_vec(len: usize) -> Vec<Self> {
        vec![0.0f32; len]
    }
}

impl Scalar for f64 {
    #[inline]
    fn zeroed_vec(len: usize) -> Vec<Self> {
        vec![0.0f64; len]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn logistic_midpoint_and_tails() {
        assert_eq!(0.0f64.logistic(), 0.5);
        assert!((10.0f64.logistic() - 1.0).abs() < 1e-4);
        assert!((-10.0f64).logistic() < 1e-4);
        // extreme arguments saturate instead of producing NaN
        assert_eq!((-1.0e6f64).logistic(), 0.0);
        assert_eq!((1.0e6f32).logistic(), 1.0);
    }

    #[test]
    fn clamp01_bounds() {
        assert_eq!(1.5f32.clamp01(), 1.0);
        assert_eq!((-0.5f64).clamp01(), 0.0);
        assert_eq!(0.25f64.clamp01(), 0.25);
    }
}
