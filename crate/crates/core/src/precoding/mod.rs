//! Multi-user downlink precoding: system types, rate evaluation, the
//! zero-forcing baseline, and the iterative WMMSE solver (in [`wmmse`]).
//!
//! Conventions: the channel matrix `H` is `n_tx x n_users` with user `k`'s
//! channel as column `h_k`; a precoding matrix `W` has the same shape with
//! beamforming vector `w_k` as column `k`. Rates are in bits/s/Hz.

pub mod wmmse;

use crate::error::{Error, Result};
use crate::linalg::{dot_conj, norm_sq, CMat, Cholesky};
use crate::scalar::Real;
use num_complex::Complex;
use serde::{Deserialize, Serialize};

/// Condition-number threshold above which a channel Gram matrix is treated
/// as rank deficient.
const SINGULAR_CONDITION_LIMIT: f64 = 1e12;

/// Antenna count, user count, and the total transmit power budget.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SystemConfig {
    /// Base-station antenna count.
    pub n_tx: usize,
    /// Number of single-antenna users served simultaneously.
    pub n_users: usize,
    /// Total transmit power budget, linear watts.
    pub p_max: f64,
}

impl SystemConfig {
    pub fn new(n_tx: usize, n_users: usize, p_max: f64) -> Result<Self> {
        let cfg = SystemConfig { n_tx, n_users, p_max };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_tx == 0 || self.n_users == 0 {
            return Err(Error::config("n_tx and n_users must be positive"));
        }
        if self.n_users > self.n_tx {
            return Err(Error::config(format!(
                "n_users ({}) must not exceed n_tx ({})",
                self.n_users, self.n_tx
            )));
        }
        if !(self.p_max > 0.0) {
            return Err(Error::config("p_max must be positive"));
        }
        Ok(())
    }
}

/// Channel matrix `H`; column `k` is user `k`'s channel vector.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelMatrix<T>(CMat<T>);

/// Precoding matrix `W`; column `k` is user `k`'s beamforming vector.
#[derive(Debug, Clone, PartialEq)]
pub struct PrecodingMatrix<T>(CMat<T>);

impl<T: Real> ChannelMatrix<T> {
    pub fn new(m: CMat<T>) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::config("channel matrix has non-finite entries"));
        }
        Ok(ChannelMatrix(m))
    }

    pub fn mat(&self) -> &CMat<T> {
        &self.0
    }

    pub fn n_tx(&self) -> usize {
        self.0.rows()
    }

    pub fn n_users(&self) -> usize {
        self.0.cols()
    }

    /// User `k`'s channel vector.
    pub fn user(&self, k: usize) -> &[Complex<T>] {
        self.0.col(k)
    }

    /// Reorder users (columns) by `perm`: output column `k` is input column
    /// `perm[k]`. `perm` must be a bijection on `0..n_users`.
    pub fn permute_users(&self, perm: &[usize]) -> Result<Self> {
        Ok(ChannelMatrix(permute_cols(&self.0, perm)?))
    }
}

impl<T: Real> PrecodingMatrix<T> {
    pub fn new(m: CMat<T>) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::config("precoding matrix has non-finite entries"));
        }
        Ok(PrecodingMatrix(m))
    }

    pub fn zeros(n_tx: usize, n_users: usize) -> Self {
        PrecodingMatrix(CMat::zeros(n_tx, n_users))
    }

    pub fn mat(&self) -> &CMat<T> {
        &self.0
    }

    pub fn into_mat(self) -> CMat<T> {
        self.0
    }

    pub fn beam(&self, k: usize) -> &[Complex<T>] {
        self.0.col(k)
    }

    /// Total transmit power `sum_k ||w_k||^2`.
    pub fn total_power(&self) -> T {
        self.0.frobenius_sq()
    }

    pub fn permute_users(&self, perm: &[usize]) -> Result<Self> {
        Ok(PrecodingMatrix(permute_cols(&self.0, perm)?))
    }
}

fn permute_cols<T: Real>(m: &CMat<T>, perm: &[usize]) -> Result<CMat<T>> {
    let n = m.cols();
    if perm.len() != n {
        return Err(Error::config(format!(
            "permutation length {} != column count {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::config("permutation is not a bijection"));
        }
        seen[p] = true;
    }
    let mut out = CMat::zeros(m.rows(), n);
    for (k, &p) in perm.iter().enumerate() {
        out.col_mut(k).copy_from_slice(m.col(p));
    }
    Ok(out)
}

fn check_dims<T: Real>(h: &ChannelMatrix<T>, w: &PrecodingMatrix<T>) -> Result<()> {
    if h.n_tx() != w.mat().rows() || h.n_users() != w.mat().cols() {
        return Err(Error::config(format!(
            "channel {}x{} and precoder {}x{} dimensions differ",
            h.n_tx(),
            h.n_users(),
            w.mat().rows(),
            w.mat().cols()
        )));
    }
    Ok(())
}

fn check_sigma2<T: Real>(sigma2: T) -> Result<()> {
    if !(sigma2 > T::zero()) {
        return Err(Error::config("noise variance must be positive"));
    }
    Ok(())
}

/// Per-user SINR under precoder `W`:
/// `|h_k† w_k|^2 / (sum_{j != k} |h_k† w_j|^2 + sigma2)`.
pub fn sinr_per_user<T: Real>(
    h: &ChannelMatrix<T>,
    w: &PrecodingMatrix<T>,
    sigma2: T,
) -> Result<Vec<T>> {
    check_dims(h, w)?;
    check_sigma2(sigma2)?;
    let n = h.n_users();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let hk = h.user(k);
        let mut signal = T::zero();
        let mut interference = T::zero();
        for j in 0..n {
            let g = dot_conj(hk, w.beam(j)).norm_sqr();
            if j == k {
                signal = g;
            } else {
                interference += g;
            }
        }
        out.push(signal / (interference + sigma2));
    }
    Ok(out)
}

/// Sum rate `sum_k log2(1 + SINR_k)` in bits/s/Hz.
pub fn sum_rate<T: Real>(h: &ChannelMatrix<T>, w: &PrecodingMatrix<T>, sigma2: T) -> Result<T> {
    let sinr = sinr_per_user(h, w, sigma2)?;
    Ok(sinr
        .into_iter()
        .fold(T::zero(), |acc, s| acc + (T::one() + s).log2()))
}

/// Scale `W` down onto the power ball of radius `sqrt(p_max)` if it exceeds
/// the budget; feasible inputs pass through unchanged.
pub fn project_power<T: Real>(w: &PrecodingMatrix<T>, p_max: T) -> Result<PrecodingMatrix<T>> {
    if !(p_max > T::zero()) {
        return Err(Error::config("p_max must be positive"));
    }
    let p = w.total_power();
    if p <= p_max {
        return Ok(w.clone());
    }
    let s = (p_max / p).sqrt();
    Ok(PrecodingMatrix(w.mat().scale(s)))
}

/// Scale `W` so its total power is exactly `p_max`. Errors on an all-zero
/// precoder, which has no such scaling.
pub fn normalize_power<T: Real>(w: &PrecodingMatrix<T>, p_max: T) -> Result<PrecodingMatrix<T>> {
    if !(p_max > T::zero()) {
        return Err(Error::config("p_max must be positive"));
    }
    let p = w.total_power();
    if !(p > T::zero()) {
        return Err(Error::Degenerate(
            "cannot normalize an all-zero precoder to positive power".into(),
        ));
    }
    let s = (p_max / p).sqrt();
    Ok(PrecodingMatrix(w.mat().scale(s)))
}

/// Zero-forcing precoder `W ∝ H (H†H)^{-1}`, scaled to total power `p_max`.
///
/// Nulls inter-user interference exactly (up to conditioning); fails with a
/// singular-channel error when `H†H` is rank deficient or too ill
/// conditioned to invert reliably.
pub fn zf_precoder<T: Real>(h: &ChannelMatrix<T>, p_max: T) -> Result<PrecodingMatrix<T>> {
    if !(p_max > T::zero()) {
        return Err(Error::config("p_max must be positive"));
    }
    let gram = h.mat().gram();
    let ch = Cholesky::new(&gram).map_err(|e| {
        Error::SingularChannel(format!("channel Gram matrix not positive definite: {e}"))
    })?;
    if ch.diag_condition() > T::of(SINGULAR_CONDITION_LIMIT) {
        return Err(Error::SingularChannel(format!(
            "channel Gram matrix condition estimate exceeds {SINGULAR_CONDITION_LIMIT:.0e}"
        )));
    }
    let n = h.n_users();
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        // Column k of H (H†H)^{-1} is H applied to the k-th inverse column.
        let mut e_k = vec![Complex::new(T::zero(), T::zero()); n];
        e_k[k] = Complex::new(T::one(), T::zero());
        let inv_col = ch.solve(&e_k);
        let mut col = vec![Complex::new(T::zero(), T::zero()); h.n_tx()];
        for j in 0..n {
            let c = inv_col[j];
            for (x, &hj) in col.iter_mut().zip(h.user(j).iter()) {
                *x += hj * c;
            }
        }
        cols.push(col);
    }
    let raw = PrecodingMatrix(CMat::from_cols(&cols)?);
    normalize_power(&raw, p_max)
}

/// Matched-filter (MRT) precoder: columns proportional to the user
/// channels, scaled to total power exactly `p_max`. Zero-channel users get
/// zero beams; an all-zero channel yields the all-zero precoder.
pub fn mrt_precoder<T: Real>(h: &ChannelMatrix<T>, p_max: T) -> Result<PrecodingMatrix<T>> {
    if !(p_max > T::zero()) {
        return Err(Error::config("p_max must be positive"));
    }
    let raw = PrecodingMatrix(h.mat().clone());
    if !(raw.total_power() > T::zero()) {
        return Ok(PrecodingMatrix::zeros(h.n_tx(), h.n_users()));
    }
    normalize_power(&raw, p_max)
}

/// Largest normalized cross term `|h_k† w_j| / (‖h_k‖ ‖w_j‖)` over `j != k`;
/// zero-forcing quality metric. Pairs with a zero channel or beam count as 0.
pub fn max_normalized_interference<T: Real>(
    h: &ChannelMatrix<T>,
    w: &PrecodingMatrix<T>,
) -> Result<T> {
    check_dims(h, w)?;
    let n = h.n_users();
    let mut worst = T::zero();
    for k in 0..n {
        let hk = h.user(k);
        let hn = norm_sq(hk).sqrt();
        for j in 0..n {
            if j == k {
                continue;
            }
            let wj = w.beam(j);
            let wn = norm_sq(wj).sqrt();
            if hn > T::zero() && wn > T::zero() {
                let c = dot_conj(hk, wj).norm() / (hn * wn);
                worst = worst.max(c);
            }
        }
    }
    Ok(worst)
}
