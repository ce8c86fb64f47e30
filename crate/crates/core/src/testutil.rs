//! Seeded random fixtures shared across test modules. Not part of the
//! public API surface.

use crate::linalg::CMat;
use crate::precoding::{normalize_power, ChannelMatrix, PrecodingMatrix};
use crate::rng::rng_from;
use num_complex::Complex;
use rand::Rng;
use rand_distr::StandardNormal;

/// i.i.d. circularly-symmetric complex Gaussian channel, unit per-entry
/// variance.
pub fn rand_channel(n_tx: usize, n_users: usize, seed: u64) -> ChannelMatrix<f64> {
    let mut rng = rng_from(seed, 0xC4A7);
    let m = CMat::from_fn(n_tx, n_users, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
    });
    ChannelMatrix::new(m).unwrap()
}

/// Random complex Gaussian precoder scaled to total power exactly `power`.
pub fn rand_precoder(n_tx: usize, n_users: usize, seed: u64, power: f64) -> PrecodingMatrix<f64> {
    let mut rng = rng_from(seed, 0xBEA3);
    let m = CMat::from_fn(n_tx, n_users, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex::new(re, im)
    });
    normalize_power(&PrecodingMatrix::new(m).unwrap(), power).unwrap()
}
