//! Stroke-based rendering toolkit.
//!
//! Decomposes a target image into an ordered sequence of parameterized brush
//! strokes via gradient descent. The pieces:
//!
//! * [`stroke`] — stroke parameterizations and the stroke-sequence file format
//! * [`raster`] — differentiable soft rasterizer and exact hard rasterizer
//! * [`compose`] — sequential stacking, its closed-form expansion, and fast
//!   stroke stacking (per-pixel top-k compositing)
//! * [`grad`] — reverse-mode gradients through both compositing paths
//! * [`loss`] — pixel loss, density map, and the stroke-density loss
//! * [`paint`] — joint optimization of all stroke parameters, with tiling
//! * [`metrics`] — L2 and SSIM
//! * [`bench`] — forward/backward timing harness
//!
//! All numeric code is generic over [`Scalar`] (`f32` or `f64`); the aliases
//! below pin the common instantiations.

pub mod bench;
pub mod compose;
mod error;
pub mod grad;
mod grid;
pub mod imageops;
pub mod loss;
pub mod metrics;
pub mod paint;
pub mod raster;
mod scalar;
pub mod stroke;

pub use error::Error;
pub use grid::{Canvas, Grid, Rect};
pub use scalar::Scalar;

pub type Result<T> = std::result::Result<T, Error>;

/// `f64` instantiations — the default for optimization and verification.
pub type Canvas64 = Canvas<f64>;
pub type Grid64 = Grid<f64>;
pub type StrokeParams64 = stroke::StrokeParams<f64>;
pub type StrokeSequence64 = stroke::StrokeSequence<f64>;
pub type StrokeFrame64 = raster::StrokeFrame<f64>;

/// `f32` instantiations — half the memory traffic, useful for large batches.
pub type Canvas32 = Canvas<f32>;
pub type Grid32 = Grid<f32>;
pub type StrokeParams32 = stroke::StrokeParams<f32>;
pub type StrokeSequence32 = stroke::StrokeSequence<f32>;
pub type StrokeFrame32 = raster::StrokeFrame<f32>;
