//! Numerical core for a massive-MIMO precoding laboratory: complex linear
//! algebra, classical precoders (zero-forcing, MRT, iterative WMMSE),
//! a parametric multi-site channel generator with dataset persistence, and
//! closed-form arithmetic-cost models.
//!
//! All numerics are generic over the scalar type through [`scalar::Real`]
//! (`f32`/`f64`); arithmetic-cost accounting additionally offers exact
//! rational counts. The crate root re-exports the main types and pins
//! `f64` aliases for everyday use.

pub mod channel;
pub mod complexity;
pub mod error;
pub mod ioutil;
pub mod linalg;
pub mod precoding;
pub mod rng;
pub mod scalar;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
pub use scalar::Real;

pub use linalg::{CMat, Cholesky};
pub use precoding::{
    max_normalized_interference, mrt_precoder, normalize_power, project_power, sinr_per_user,
    sum_rate, zf_precoder, ChannelMatrix, PrecodingMatrix, SystemConfig,
};
pub use precoding::wmmse::{
    wmmse_solve, wmmse_solve_from, wmmse_update_uv, wmmse_w_step, WmmseOptions, WmmseSolution,
    WmmseState,
};

pub use channel::{
    default_heldout_profiles, default_profile, default_training_profiles, draw_channel,
    generate_site_dataset, noise_for_snr, snr_db_for_noise, steering_vector, ArrayGeometry,
    Dataset, RateTable, SiteProfile, UserRing,
};
pub use complexity::{
    complexity_report, maml_cnn_inversion_mult_count, maml_cnn_mult_count, papp_mult_count,
    wmmse_mult_count, zf_mult_count, ComplexityParams, ComplexityReport, ExactCount, FcSizes,
};

/// Concrete `f64` aliases for the generic core types.
pub type ChannelMatrix64 = precoding::ChannelMatrix<f64>;
pub type PrecodingMatrix64 = precoding::PrecodingMatrix<f64>;
pub type CMat64 = linalg::CMat<f64>;
pub type WmmseSolution64 = precoding::wmmse::WmmseSolution<f64>;
pub type Dataset64 = channel::Dataset<f64>;

/// `f32` variants for reduced-precision experiments.
pub type ChannelMatrix32 = precoding::ChannelMatrix<f32>;
pub type PrecodingMatrix32 = precoding::PrecodingMatrix<f32>;
pub type CMat32 = linalg::CMat<f32>;
