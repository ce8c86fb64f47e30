//! Parametric geometric multipath channel generator with per-site
//! LOS/NLOS statistics, dataset persistence, and cached reference-rate
//! tables.
//!
//! Each site is described by a [`SiteProfile`]: users sit on a polar grid
//! of (distance, azimuth) cells inside a sector and are jittered uniformly
//! within their cell; a user is line-of-sight with the site's LOS
//! probability. A LOS user sees a Rician mixture of a direct steering
//! vector and scattered paths; an NLOS user sees scattered paths only.
//! Datasets are normalized to unit mean per-entry power so SNR is simply
//! `p_max / sigma2`.

use crate::error::{Error, Result};
use crate::ioutil;
use crate::linalg::CMat;
use crate::precoding::{ChannelMatrix, SystemConfig};
use crate::rng::rng_from;
use crate::scalar::Real;
use num_complex::Complex;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use std::io::{BufReader, BufWriter};
use std::path::Path;

/// Reference distance (meters) at which the path-gain model is unity.
pub const REFERENCE_DISTANCE_M: f64 = 50.0;

/// Radial cell depth of the user-placement grid, meters.
pub const DISTANCE_STEP_M: f64 = 10.0;

/// Served sector half-angle, degrees (users fall in ±60° of boresight).
pub const SECTOR_HALF_ANGLE_DEG: f64 = 60.0;

const DATASET_MAGIC: &[u8; 8] = b"PAPPDSET";
const DATASET_VERSION: u32 = 1;
const RATE_MAGIC: &[u8; 8] = b"PAPPRATE";
const RATE_VERSION: u32 = 1;

/// Uniform planar array on a rectangular grid in the x–y plane, boresight
/// along +z.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrayGeometry {
    pub rows: usize,
    pub cols: usize,
    /// Element spacing in wavelengths.
    pub spacing: f64,
}

impl Default for ArrayGeometry {
    fn default() -> Self {
        ArrayGeometry { rows: 8, cols: 8, spacing: 0.5 }
    }
}

impl ArrayGeometry {
    pub fn n_antennas(&self) -> usize {
        self.rows * self.cols
    }

    pub fn validate(&self) -> Result<()> {
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::config("array grid dimensions must be positive"));
        }
        if !(self.spacing > 0.0) {
            return Err(Error::config("element spacing must be positive"));
        }
        Ok(())
    }

    /// Squarest grid for a given antenna count: a perfect square becomes a
    /// square array (64 → 8×8), anything else a uniform linear array.
    pub fn for_antennas(n_tx: usize) -> Self {
        let side = (n_tx as f64).sqrt().round() as usize;
        if side * side == n_tx {
            ArrayGeometry { rows: side, cols: side, spacing: 0.5 }
        } else {
            ArrayGeometry { rows: 1, cols: n_tx, spacing: 0.5 }
        }
    }
}

/// Annular user-placement region: distances and the azimuth grid pitch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UserRing {
    pub min_distance_m: f64,
    pub max_distance_m: f64,
    pub angular_step_deg: f64,
}

impl Default for UserRing {
    fn default() -> Self {
        UserRing { min_distance_m: 50.0, max_distance_m: 350.0, angular_step_deg: 10.0 }
    }
}

/// Channel-statistics description of one deployment site.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SiteProfile {
    pub site_id: String,
    /// Probability that a user has a line-of-sight component, in [0, 1].
    pub los_probability: f64,
    /// Inclusive bounds on the scattered-path count per user.
    pub path_count_range: (usize, usize),
    /// Std. deviation of scattered-path angle offsets, degrees.
    pub angle_spread_deg: f64,
    /// Rician K-factor (LOS-to-scattered power ratio), dB.
    pub rician_k_db: f64,
    /// Distance–power falloff exponent of the path-gain model.
    pub pathloss_exponent: f64,
    #[serde(default)]
    pub user_ring: UserRing,
    pub seed: u64,
}

impl SiteProfile {
    pub fn validate(&self) -> Result<()> {
        if self.site_id.is_empty() {
            return Err(Error::config("site_id must be non-empty"));
        }
        if !(0.0..=1.0).contains(&self.los_probability) {
            return Err(Error::config("los_probability must lie in [0, 1]"));
        }
        let (lo, hi) = self.path_count_range;
        if lo == 0 || lo > hi {
            return Err(Error::config("path_count_range must satisfy 1 <= lo <= hi"));
        }
        if !(self.angle_spread_deg >= 0.0) {
            return Err(Error::config("angle_spread_deg must be non-negative"));
        }
        if !(self.pathloss_exponent > 0.0) {
            return Err(Error::config("pathloss_exponent must be positive"));
        }
        let ring = &self.user_ring;
        if !(ring.min_distance_m > 0.0 && ring.min_distance_m < ring.max_distance_m) {
            return Err(Error::config("user ring must satisfy 0 < min_distance < max_distance"));
        }
        if !(ring.angular_step_deg > 0.0) {
            return Err(Error::config("angular_step_deg must be positive"));
        }
        Ok(())
    }

    /// Distance-dependent power gain `(d_ref / d)^alpha` relative to the
    /// reference distance.
    pub fn path_gain(&self, distance_m: f64) -> f64 {
        (REFERENCE_DISTANCE_M / distance_m).powf(self.pathloss_exponent)
    }
}

/// One channel realization tagged with its origin site.
#[derive(Debug, Clone, Copy)]
pub struct Sample<'a, T> {
    pub h: &'a ChannelMatrix<T>,
    pub site_id: &'a str,
}

/// Ordered collection of channel realizations from one site, normalized to
/// unit mean per-entry power.
#[derive(Debug, Clone)]
pub struct Dataset<T> {
    config: SystemConfig,
    site_id: String,
    seed: u64,
    /// Scale factor that was applied to every entry during normalization.
    normalization: f64,
    channels: Vec<ChannelMatrix<T>>,
}

/// UPA steering vector for a planar wavefront from (azimuth, elevation):
/// element (r, c) sits at `(x, y) = spacing * (c, r)` wavelengths and
/// contributes phase `2π spacing (c·cos(el)sin(az) + r·sin(el))`; entries
/// are scaled to constant modulus `1/sqrt(N_T)`. Flattening is row-major.
pub fn steering_vector<T: Real>(
    geom: &ArrayGeometry,
    azimuth_rad: f64,
    elevation_rad: f64,
) -> Vec<Complex<T>> {
    let n = geom.n_antennas();
    let norm = 1.0 / (n as f64).sqrt();
    let two_pi_d = 2.0 * std::f64::consts::PI * geom.spacing;
    let ux = elevation_rad.cos() * azimuth_rad.sin();
    let uy = elevation_rad.sin();
    let mut out = Vec::with_capacity(n);
    for r in 0..geom.rows {
        for c in 0..geom.cols {
            let phase = two_pi_d * (c as f64 * ux + r as f64 * uy);
            out.push(Complex::new(
                T::of(norm * phase.cos()),
                T::of(norm * phase.sin()),
            ));
        }
    }
    out
}

/// Per-user generation record, exposed for statistical tests.
#[derive(Debug, Clone, Copy)]
pub struct UserMeta {
    pub distance_m: f64,
    pub azimuth_rad: f64,
    pub los: bool,
    pub path_count: usize,
}

fn add_scaled<T: Real>(col: &mut [Complex<T>], v: &[Complex<T>], s: Complex<f64>) {
    let s = Complex::new(T::of(s.re), T::of(s.im));
    for (x, &a) in col.iter_mut().zip(v.iter()) {
        *x += a * s;
    }
}

/// Draw one channel matrix and the per-user placement metadata.
///
/// All randomness is consumed in a fixed per-user order (cell indices,
/// jitters, LOS coin, path count, per-path angles and gains, LOS phase),
/// always as `f64`, so the stream is identical for every scalar type.
pub fn draw_channel_with_meta<T: Real, R: Rng>(
    profile: &SiteProfile,
    config: &SystemConfig,
    rng: &mut R,
) -> Result<(ChannelMatrix<T>, Vec<UserMeta>)> {
    profile.validate()?;
    config.validate()?;
    let geom = ArrayGeometry::for_antennas(config.n_tx);
    let ring = &profile.user_ring;
    let n_dist_cells =
        ((ring.max_distance_m - ring.min_distance_m) / DISTANCE_STEP_M).ceil() as usize;
    let n_ang_cells = (2.0 * SECTOR_HALF_ANGLE_DEG / ring.angular_step_deg).ceil() as usize;
    let spread_rad = profile.angle_spread_deg.to_radians();
    let k_lin = 10f64.powf(profile.rician_k_db / 10.0);
    let (path_lo, path_hi) = profile.path_count_range;

    let mut m = CMat::<T>::zeros(config.n_tx, config.n_users);
    let mut meta = Vec::with_capacity(config.n_users);
    for k in 0..config.n_users {
        let dist_cell = rng.gen_range(0..n_dist_cells);
        let ang_cell = rng.gen_range(0..n_ang_cells);
        let d = (ring.min_distance_m + (dist_cell as f64 + rng.gen::<f64>()) * DISTANCE_STEP_M)
            .min(ring.max_distance_m);
        let az_deg = -SECTOR_HALF_ANGLE_DEG
            + (ang_cell as f64 + rng.gen::<f64>()) * ring.angular_step_deg;
        let az = az_deg.to_radians();
        let los = rng.gen::<f64>() < profile.los_probability;
        let path_count = rng.gen_range(path_lo..=path_hi);

        // Scattered component: sum of steering vectors with CN(0,1) gains,
        // normalized to unit average power.
        let col = m.col_mut(k);
        let path_scale = 1.0 / (path_count as f64).sqrt();
        for _ in 0..path_count {
            let daz: f64 = rng.sample::<f64, _>(StandardNormal) * spread_rad;
            let del: f64 = rng.sample::<f64, _>(StandardNormal) * spread_rad;
            let g_re: f64 = rng.sample(StandardNormal);
            let g_im: f64 = rng.sample(StandardNormal);
            let gain = Complex::new(g_re, g_im) * std::f64::consts::FRAC_1_SQRT_2 * path_scale;
            let a = steering_vector::<T>(&geom, az + daz, del);
            add_scaled(col, &a, gain);
        }
        if los {
            // Rician mixture: direct path at power K/(K+1), scattered part
            // scaled down to 1/(K+1); users sit at ground level, so the
            // direct-path elevation is taken as broadside.
            let scatter_scale = T::of((1.0 / (k_lin + 1.0)).sqrt());
            for x in col.iter_mut() {
                *x = *x * scatter_scale;
            }
            let phi0 = rng.gen::<f64>() * 2.0 * std::f64::consts::PI;
            let los_gain =
                Complex::from_polar(1.0, phi0) * (k_lin / (k_lin + 1.0)).sqrt();
            let a = steering_vector::<T>(&geom, az, 0.0);
            add_scaled(col, &a, los_gain);
        }
        // Large-scale amplitude: ||h||^2 averages N_T * path_gain(d), i.e.
        // unit per-entry power at the reference distance.
        let amp = T::of((config.n_tx as f64 * profile.path_gain(d)).sqrt());
        for x in col.iter_mut() {
            *x = *x * amp;
        }
        meta.push(UserMeta { distance_m: d, azimuth_rad: az, los, path_count });
    }
    Ok((ChannelMatrix::new(m)?, meta))
}

/// Draw one channel matrix from a site's distribution.
pub fn draw_channel<T: Real, R: Rng>(
    profile: &SiteProfile,
    config: &SystemConfig,
    rng: &mut R,
) -> Result<ChannelMatrix<T>> {
    Ok(draw_channel_with_meta(profile, config, rng)?.0)
}

/// Generate `n` samples from a site and normalize the collection to unit
/// mean per-entry power. Sample `i` draws from an RNG seeded by
/// `(profile.seed, i)`, so the result is independent of evaluation order.
pub fn generate_site_dataset<T: Real>(
    profile: &SiteProfile,
    n: usize,
    config: &SystemConfig,
) -> Result<Dataset<T>> {
    if n == 0 {
        return Err(Error::config("dataset size must be at least 1"));
    }
    let mut channels = Vec::with_capacity(n);
    let mut power_sum = 0.0f64;
    for i in 0..n {
        let mut rng = rng_from(profile.seed, i as u64);
        let h = draw_channel::<T, _>(profile, config, &mut rng)?;
        power_sum += h.mat().frobenius_sq().as_f64();
        channels.push(h);
    }
    let entries = (n * config.n_tx * config.n_users) as f64;
    let mean_power = power_sum / entries;
    if !(mean_power > 0.0) {
        return Err(Error::Degenerate("dataset has zero mean power".into()));
    }
    let scale = 1.0 / mean_power.sqrt();
    let scale_t = T::of(scale);
    let channels = channels
        .into_iter()
        .map(|h| ChannelMatrix::new(h.mat().scale(scale_t)).expect("finite after scaling"))
        .collect::<Vec<_>>();
    Ok(Dataset {
        config: *config,
        site_id: profile.site_id.clone(),
        seed: profile.seed,
        normalization: scale,
        channels,
    })
}

impl<T: Real> Dataset<T> {
    /// Assemble a dataset from parts; used by loaders and tests.
    pub fn from_parts(
        config: SystemConfig,
        site_id: String,
        seed: u64,
        normalization: f64,
        channels: Vec<ChannelMatrix<T>>,
    ) -> Result<Self> {
        for h in &channels {
            if h.n_tx() != config.n_tx || h.n_users() != config.n_users {
                return Err(Error::config("sample dimensions do not match the config"));
            }
        }
        Ok(Dataset { config, site_id, seed, normalization, channels })
    }

    pub fn len(&self) -> usize {
        self.channels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.channels.is_empty()
    }

    pub fn config(&self) -> &SystemConfig {
        &self.config
    }

    pub fn site_id(&self) -> &str {
        &self.site_id
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn normalization(&self) -> f64 {
        self.normalization
    }

    pub fn channel(&self, i: usize) -> &ChannelMatrix<T> {
        &self.channels[i]
    }

    pub fn channels(&self) -> &[ChannelMatrix<T>] {
        &self.channels
    }

    pub fn sample(&self, i: usize) -> Sample<'_, T> {
        Sample { h: &self.channels[i], site_id: &self.site_id }
    }

    /// Mean per-entry power over the whole dataset; ~1 after normalization.
    pub fn mean_entry_power(&self) -> f64 {
        let entries = (self.len() * self.config.n_tx * self.config.n_users) as f64;
        let sum: f64 = self
            .channels
            .iter()
            .map(|h| h.mat().frobenius_sq().as_f64())
            .sum();
        sum / entries
    }

    /// Write the dataset in the self-describing binary format (all values
    /// stored as little-endian `f64`, entries interleaved re/im, columns
    /// in user order).
    pub fn save(&self, path: &Path) -> Result<()> {
        let f = std::fs::File::create(path)?;
        let mut w = BufWriter::new(f);
        use std::io::Write;
        w.write_all(DATASET_MAGIC)?;
        ioutil::write_u32(&mut w, DATASET_VERSION)?;
        ioutil::write_u32(&mut w, self.config.n_tx as u32)?;
        ioutil::write_u32(&mut w, self.config.n_users as u32)?;
        ioutil::write_u64(&mut w, self.len() as u64)?;
        ioutil::write_str(&mut w, &self.site_id)?;
        ioutil::write_u64(&mut w, self.seed)?;
        ioutil::write_f64(&mut w, self.config.p_max)?;
        ioutil::write_f64(&mut w, self.normalization)?;
        for h in &self.channels {
            for row in 0..self.config.n_tx {
                for col in 0..self.config.n_users {
                    let z = h.mat().get(row, col);
                    ioutil::write_f64(&mut w, z.re.as_f64())?;
                    ioutil::write_f64(&mut w, z.im.as_f64())?;
                }
            }
        }
        w.flush()?;
        Ok(())
    }

    /// Load a dataset saved by [`Dataset::save`], converting entries to the
    /// target scalar type.
    pub fn load(path: &Path) -> Result<Self> {
        let f = std::fs::File::open(path)?;
        let mut r = BufReader::new(f);
        ioutil::expect_magic(&mut r, DATASET_MAGIC, "dataset file")?;
        let version = ioutil::read_u32(&mut r)?;
        if version != DATASET_VERSION {
            return Err(Error::Format(format!("unsupported dataset version {version}")));
        }
        let n_tx = ioutil::read_u32(&mut r)? as usize;
        let n_users = ioutil::read_u32(&mut r)? as usize;
        let count = ioutil::read_u64(&mut r)? as usize;
        let site_id = ioutil::read_str(&mut r, 4096)?;
        let seed = ioutil::read_u64(&mut r)?;
        let p_max = ioutil::read_f64(&mut r)?;
        let normalization = ioutil::read_f64(&mut r)?;
        let config = SystemConfig::new(n_tx, n_users, p_max)?;
        let mut channels = Vec::with_capacity(count);
        for _ in 0..count {
            let mut m = CMat::<T>::zeros(n_tx, n_users);
            // Entries are stored row-major within each sample.
            for row in 0..n_tx {
                for col in 0..n_users {
                    let re = ioutil::read_f64(&mut r)?;
                    let im = ioutil::read_f64(&mut r)?;
                    m.set(row, col, Complex::new(T::of(re), T::of(im)));
                }
            }
            channels.push(ChannelMatrix::new(m)?);
        }
        Dataset::from_parts(config, site_id, seed, normalization, channels)
    }
}

/// Noise variance that realizes a target average SNR under unit-mean-power
/// channel normalization: `sigma2 = p_max / 10^(snr_db/10)`.
pub fn noise_for_snr(snr_db: f64, p_max: f64) -> Result<f64> {
    if !(p_max > 0.0) {
        return Err(Error::config("p_max must be positive"));
    }
    Ok(p_max / 10f64.powf(snr_db / 10.0))
}

/// Inverse of [`noise_for_snr`].
pub fn snr_db_for_noise(sigma2: f64, p_max: f64) -> Result<f64> {
    if !(p_max > 0.0 && sigma2 > 0.0) {
        return Err(Error::config("p_max and sigma2 must be positive"));
    }
    Ok(10.0 * (p_max / sigma2).log10())
}

/// Reorder a channel matrix's users; free-function form of
/// [`ChannelMatrix::permute_users`].
pub fn permute_users<T: Real>(h: &ChannelMatrix<T>, perm: &[usize]) -> Result<ChannelMatrix<T>> {
    h.permute_users(perm)
}

/// Cached per-sample reference sum rates for a dataset at a list of SNR
/// points, guarded by the dataset file's digest.
#[derive(Debug, Clone, PartialEq)]
pub struct RateTable {
    snr_db: Vec<f64>,
    /// `rates[sample * n_snr + snr_index]`.
    rates: Vec<f64>,
    dataset_digest: [u8; 32],
}

impl RateTable {
    pub fn new(snr_db: Vec<f64>, rates: Vec<f64>, dataset_digest: [u8; 32]) -> Result<Self> {
        if snr_db.is_empty() {
            return Err(Error::config("rate table needs at least one SNR point"));
        }
        if rates.len() % snr_db.len() != 0 {
            return Err(Error::config("rate count is not a multiple of the SNR count"));
        }
        Ok(RateTable { snr_db, rates, dataset_digest })
    }

    pub fn n_samples(&self) -> usize {
        self.rates.len() / self.snr_db.len()
    }

    pub fn snr_db(&self) -> &[f64] {
        &self.snr_db
    }

    pub fn dataset_digest(&self) -> &[u8; 32] {
        &self.dataset_digest
    }

    /// Index of an SNR point, matched exactly.
    pub fn snr_index(&self, snr_db: f64) -> Option<usize> {
        self.snr_db.iter().position(|&s| s == snr_db)
    }

    pub fn rate(&self, sample: usize, snr_index: usize) -> f64 {
        assert!(snr_index < self.snr_db.len(), "SNR index out of range");
        self.rates[sample * self.snr_db.len() + snr_index]
    }

    /// All per-sample rates at one SNR point.
    pub fn rates_at(&self, snr_index: usize) -> Vec<f64> {
        (0..self.n_samples()).map(|i| self.rate(i, snr_index)).collect()
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let f = std::fs::File::create(path)?;
        let mut w = BufWriter::new(f);
        use std::io::Write;
        w.write_all(RATE_MAGIC)?;
        ioutil::write_u32(&mut w, RATE_VERSION)?;
        ioutil::write_u64(&mut w, self.n_samples() as u64)?;
        ioutil::write_u32(&mut w, self.snr_db.len() as u32)?;
        for &s in &self.snr_db {
            ioutil::write_f64(&mut w, s)?;
        }
        w.write_all(&self.dataset_digest)?;
        for &r in &self.rates {
            ioutil::write_f64(&mut w, r)?;
        }
        w.flush()?;
        Ok(())
    }

    /// Load a rate table; when `expected_digest` is given, refuse a table
    /// that was computed for a different dataset file.
    pub fn load(path: &Path, expected_digest: Option<&[u8; 32]>) -> Result<Self> {
        let f = std::fs::File::open(path)?;
        let mut r = BufReader::new(f);
        ioutil::expect_magic(&mut r, RATE_MAGIC, "rate table file")?;
        let version = ioutil::read_u32(&mut r)?;
        if version != RATE_VERSION {
            return Err(Error::Format(format!("unsupported rate table version {version}")));
        }
        let count = ioutil::read_u64(&mut r)? as usize;
        let n_snr = ioutil::read_u32(&mut r)? as usize;
        if n_snr == 0 {
            return Err(Error::Format("rate table has no SNR points".into()));
        }
        let mut snr_db = Vec::with_capacity(n_snr);
        for _ in 0..n_snr {
            snr_db.push(ioutil::read_f64(&mut r)?);
        }
        let mut digest = [0u8; 32];
        use std::io::Read;
        r.read_exact(&mut digest)?;
        if let Some(want) = expected_digest {
            if &digest != want {
                return Err(Error::Format(
                    "rate table was computed for a different dataset file".into(),
                ));
            }
        }
        let mut rates = Vec::with_capacity(count * n_snr);
        for _ in 0..count * n_snr {
            rates.push(ioutil::read_f64(&mut r)?);
        }
        RateTable::new(snr_db, rates, digest)
    }
}

/// The seven training-site profiles shipped by default.
pub fn default_training_profiles() -> Vec<SiteProfile> {
    let mk = |site_id: &str,
              los_probability: f64,
              path_count_range: (usize, usize),
              angle_spread_deg: f64,
              rician_k_db: f64,
              pathloss_exponent: f64,
              seed: u64| SiteProfile {
        site_id: site_id.to_string(),
        los_probability,
        path_count_range,
        angle_spread_deg,
        rician_k_db,
        pathloss_exponent,
        user_ring: UserRing::default(),
        seed,
    };
    vec![
        mk("umontreal", 0.35, (6, 12), 8.0, 8.0, 3.2, 7001),
        mk("parc", 0.55, (4, 10), 10.0, 9.0, 2.9, 7002),
        mk("rachel", 0.30, (8, 14), 12.0, 7.0, 3.4, 7003),
        mk("cathcart", 0.20, (10, 16), 14.0, 6.0, 3.6, 7004),
        mk("old-port", 0.45, (6, 12), 9.0, 8.0, 3.0, 7005),
        mk("sherbrooke", 0.40, (6, 12), 11.0, 7.0, 3.3, 7006),
        mk("okapark", 0.65, (3, 8), 7.0, 10.0, 2.7, 7007),
    ]
}

/// The three held-out deployment-site profiles: an open industrial site
/// (75% LOS), a balanced residential site, and a dense downtown site
/// (75% NLOS).
pub fn default_heldout_profiles() -> Vec<SiteProfile> {
    let ring = UserRing::default();
    vec![
        SiteProfile {
            site_id: "ericsson".into(),
            los_probability: 0.75,
            path_count_range: (3, 8),
            angle_spread_deg: 6.0,
            rician_k_db: 10.0,
            pathloss_exponent: 2.6,
            user_ring: ring,
            seed: 9001,
        },
        SiteProfile {
            site_id: "decarie".into(),
            los_probability: 0.50,
            path_count_range: (5, 10),
            angle_spread_deg: 9.0,
            rician_k_db: 8.0,
            pathloss_exponent: 3.0,
            user_ring: ring,
            seed: 9002,
        },
        SiteProfile {
            site_id: "sainte-catherine".into(),
            los_probability: 0.25,
            path_count_range: (10, 16),
            angle_spread_deg: 13.0,
            rician_k_db: 6.0,
            pathloss_exponent: 3.5,
            user_ring: ring,
            seed: 9003,
        },
    ]
}

/// Look up a default profile (training or held-out) by site id.
pub fn default_profile(site_id: &str) -> Option<SiteProfile> {
    default_training_profiles()
        .into_iter()
        .chain(default_heldout_profiles())
        .find(|p| p.site_id == site_id)
}
