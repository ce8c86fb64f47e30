//! Closed-form real-multiplication counts for the four precoding methods
//! and a comparison report.
//!
//! The formulas contain thirds (from matrix factorizations), so counts are
//! computed as exact rationals ([`ExactCount`]) and rendered as reals; the
//! count functions are generic so `f64` evaluation is also available.

use crate::error::{Error, Result};
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, ToPrimitive};
use serde::{Deserialize, Serialize};

/// Exact rational multiplication count.
pub type ExactCount = Ratio<i128>;

/// Numeric domain for the count formulas: enough arithmetic to evaluate
/// polynomials with fractional coefficients.
pub trait CountScalar: Clone + Num + FromPrimitive {}
impl<T: Clone + Num + FromPrimitive> CountScalar for T {}

fn n<T: CountScalar>(x: usize) -> T {
    T::from_usize(x).expect("size fits in the count scalar")
}

fn frac<T: CountScalar>(num: u64, den: u64) -> T {
    T::from_u64(num).expect("numerator fits") / T::from_u64(den).expect("denominator fits")
}

/// Real multiplications of the iterative WMMSE solver:
/// `4I (2/3 N_T^3 N_U + N_T^2 N_U + 2 N_T (2 N_U^2 + N_U) + N_U^2 + 14/3 N_U)`.
///
/// `iterations` may be fractional (an average over channel realizations).
pub fn wmmse_mult_count<T: CountScalar>(n_tx: usize, n_users: usize, iterations: T) -> T {
    let nt: T = n(n_tx);
    let nu: T = n(n_users);
    let nt2 = nt.clone() * nt.clone();
    let nt3 = nt2.clone() * nt.clone();
    let nu2 = nu.clone() * nu.clone();
    let inner = frac::<T>(2, 3) * nt3 * nu.clone()
        + nt2 * nu.clone()
        + frac::<T>(2, 1) * nt * (frac::<T>(2, 1) * nu2.clone() + nu.clone())
        + nu2
        + frac::<T>(14, 3) * nu;
    frac::<T>(4, 1) * iterations * inner
}

/// Real multiplications of zero-forcing: `8 N_U^2 N_T + 8/3 N_U^3`.
pub fn zf_mult_count<T: CountScalar>(n_tx: usize, n_users: usize) -> T {
    let nt: T = n(n_tx);
    let nu: T = n(n_users);
    let nu2 = nu.clone() * nu.clone();
    frac::<T>(8, 1) * nu2.clone() * nt + frac::<T>(8, 3) * nu2 * nu
}

/// Fully-connected layer widths entering the deep-precoder count;
/// `fc4r`/`fc4i` are the real and imaginary output heads (normally both
/// `N_T * N_U`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FcSizes {
    pub fc1: usize,
    pub fc2: usize,
    pub fc3: usize,
    pub fc4r: usize,
    pub fc4i: usize,
}

impl FcSizes {
    /// Standard output heads sized to the precoder entries.
    pub fn for_system(fc1: usize, fc2: usize, fc3: usize, n_tx: usize, n_users: usize) -> Self {
        FcSizes { fc1, fc2, fc3, fc4r: n_tx * n_users, fc4i: n_tx * n_users }
    }
}

/// Real multiplications of the deep precoder's inference path:
/// `C_out N_T N_U C_in k^2 + C_out N_T N_U D_FC1 + D_FC1 D_FC2
///  + D_FC2 D_FC3 + D_FC3 D_FC4r + D_FC3 D_FC4i`.
pub fn papp_mult_count<T: CountScalar>(
    n_tx: usize,
    n_users: usize,
    c_in: usize,
    c_out: usize,
    kernel: usize,
    fc: &FcSizes,
) -> T {
    let conv: T = n::<T>(c_out) * n(n_tx) * n(n_users) * n(c_in) * n(kernel * kernel);
    let into_fc1: T = n::<T>(c_out) * n(n_tx) * n(n_users) * n(fc.fc1);
    conv + into_fc1
        + n::<T>(fc.fc1) * n(fc.fc2)
        + n::<T>(fc.fc2) * n(fc.fc3)
        + n::<T>(fc.fc3) * n(fc.fc4r)
        + n::<T>(fc.fc3) * n(fc.fc4i)
}

/// The matrix-inversion contribution of the meta-learned CNN baseline:
/// `8 (4/3 N_T^3 + N_T^2 (3 N_U + 2) + N_T (2 N_U + 3))`.
pub fn maml_cnn_inversion_mult_count<T: CountScalar>(n_tx: usize, n_users: usize) -> T {
    let nt: T = n(n_tx);
    let nu: T = n(n_users);
    let nt2 = nt.clone() * nt.clone();
    let nt3 = nt2.clone() * nt.clone();
    frac::<T>(8, 1)
        * (frac::<T>(4, 3) * nt3
            + nt2 * (frac::<T>(3, 1) * nu.clone() + frac::<T>(2, 1))
            + nt * (frac::<T>(2, 1) * nu + frac::<T>(3, 1)))
}

/// Real multiplications of the meta-learned CNN baseline:
/// `C_out N_T N_U C_in k^2 + C_out N_T N_U (3 N_U + 1)` plus the
/// inversion term of [`maml_cnn_inversion_mult_count`].
pub fn maml_cnn_mult_count<T: CountScalar>(
    n_tx: usize,
    n_users: usize,
    c_in: usize,
    c_out: usize,
    kernel: usize,
) -> T {
    let conv: T = n::<T>(c_out) * n(n_tx) * n(n_users) * n(c_in) * n(kernel * kernel);
    let head: T =
        n::<T>(c_out) * n(n_tx) * n(n_users) * (frac::<T>(3, 1) * n::<T>(n_users) + T::one());
    conv + head + maml_cnn_inversion_mult_count(n_tx, n_users)
}

/// Parameters entering the comparison report. `wmmse_iters` is the average
/// WMMSE iteration count, possibly fractional.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexityParams {
    pub n_tx: usize,
    pub n_users: usize,
    pub wmmse_iters: f64,
    pub c_in: usize,
    pub c_out: usize,
    pub kernel: usize,
    pub fc_sizes: FcSizes,
}

impl Default for ComplexityParams {
    /// The reference comparison point: a 64-antenna, 4-user system with
    /// the default deep-precoder architecture and the WMMSE solver's
    /// empirical average of 12.5 iterations.
    fn default() -> Self {
        ComplexityParams {
            n_tx: 64,
            n_users: 4,
            wmmse_iters: 12.5,
            c_in: 2,
            c_out: 32,
            kernel: 3,
            fc_sizes: FcSizes::for_system(64, 64, 512, 64, 4),
        }
    }
}

impl ComplexityParams {
    pub fn validate(&self) -> Result<()> {
        let sizes = [
            self.n_tx,
            self.n_users,
            self.c_in,
            self.c_out,
            self.kernel,
            self.fc_sizes.fc1,
            self.fc_sizes.fc2,
            self.fc_sizes.fc3,
            self.fc_sizes.fc4r,
            self.fc_sizes.fc4i,
        ];
        if sizes.iter().any(|&s| s == 0) {
            return Err(Error::config("all complexity sizes must be positive"));
        }
        if !(self.wmmse_iters > 0.0) {
            return Err(Error::config("wmmse_iters must be positive"));
        }
        Ok(())
    }

    /// Exact rational form of the (possibly fractional) iteration count.
    fn iters_exact(&self) -> Result<ExactCount> {
        ExactCount::from_f64(self.wmmse_iters)
            .ok_or_else(|| Error::config("wmmse_iters is not a finite rational"))
    }
}

/// Method identifiers in report order.
pub const METHODS: [&str; 4] = ["wmmse", "maml-cnn", "papp", "zf"];

/// Per-method multiplication counts for one parameter set, with the
/// parameters echoed verbatim.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexityReport {
    pub params: ComplexityParams,
    pub wmmse: ExactCount,
    pub maml_cnn: ExactCount,
    pub papp: ExactCount,
    pub zf: ExactCount,
}

impl ComplexityReport {
    pub fn new(params: ComplexityParams) -> Result<Self> {
        params.validate()?;
        let iters = params.iters_exact()?;
        Ok(ComplexityReport {
            wmmse: wmmse_mult_count(params.n_tx, params.n_users, iters),
            maml_cnn: maml_cnn_mult_count(
                params.n_tx,
                params.n_users,
                params.c_in,
                params.c_out,
                params.kernel,
            ),
            papp: papp_mult_count(
                params.n_tx,
                params.n_users,
                params.c_in,
                params.c_out,
                params.kernel,
                &params.fc_sizes,
            ),
            zf: zf_mult_count(params.n_tx, params.n_users),
            params,
        })
    }

    pub fn count(&self, method: &str) -> Option<ExactCount> {
        match method {
            "wmmse" => Some(self.wmmse),
            "maml-cnn" => Some(self.maml_cnn),
            "papp" => Some(self.papp),
            "zf" => Some(self.zf),
            _ => None,
        }
    }

    /// `wmmse / method` cost ratio as a real.
    pub fn wmmse_ratio(&self, method: &str) -> Option<f64> {
        let c = self.count(method)?;
        Some((self.wmmse / c).to_f64().expect("ratio fits in f64"))
    }

    /// CSV rendering: `method,n_tx,n_users,params,mult_count,ratio_vs_wmmse`.
    pub fn to_csv(&self) -> String {
        let p = &self.params;
        let mut out = String::from("method,n_tx,n_users,params,mult_count,ratio_vs_wmmse\n");
        for m in METHODS {
            let params_note = match m {
                "wmmse" => format!("I={}", p.wmmse_iters),
                "maml-cnn" => format!(
                    "c_in={} c_out={} k={}",
                    p.c_in, p.c_out, p.kernel
                ),
                "papp" => format!(
                    "c_in={} c_out={} k={} fc={}/{}/{}/{}/{}",
                    p.c_in,
                    p.c_out,
                    p.kernel,
                    p.fc_sizes.fc1,
                    p.fc_sizes.fc2,
                    p.fc_sizes.fc3,
                    p.fc_sizes.fc4r,
                    p.fc_sizes.fc4i
                ),
                _ => String::from("-"),
            };
            let count = self.count(m).expect("known method");
            let ratio = self.wmmse_ratio(m).expect("known method");
            out.push_str(&format!(
                "{m},{},{},{params_note},{:.2},{:.4}\n",
                p.n_tx,
                p.n_users,
                count.to_f64().expect("count fits in f64"),
                ratio
            ));
        }
        out
    }
}

impl std::fmt::Display for ComplexityReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let p = &self.params;
        writeln!(
            f,
            "real-multiplication counts (n_tx={}, n_users={}, I={}, c_in={}, c_out={}, k={})",
            p.n_tx, p.n_users, p.wmmse_iters, p.c_in, p.c_out, p.kernel
        )?;
        for m in METHODS {
            let count = self.count(m).expect("known method").to_f64().unwrap();
            let ratio = self.wmmse_ratio(m).expect("known method");
            writeln!(f, "  {m:>8}: {count:>16.2}  (wmmse/{m} = {ratio:.2})")?;
        }
        Ok(())
    }
}

/// Convenience wrapper building a report from parameters.
pub fn complexity_report(params: ComplexityParams) -> Result<ComplexityReport> {
    ComplexityReport::new(params)
}
