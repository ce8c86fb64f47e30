//! Iterative WMMSE solver for weighted sum-rate maximization under a total
//! power constraint.
//!
//! Each iteration performs three closed-form block updates:
//!
//! 1. **Receivers** `u_k` — MMSE receive scalars for the current precoder.
//! 2. **Weights** `v_k` — MSE weights `1/e_k >= 1`.
//! 3. **Precoder** `w_k = u_k^* v_k A(mu)^{-1} h_k` with
//!    `A(mu) = sum_j v_j |u_j|^2 h_j h_j^† + mu I`, where the Lagrange
//!    multiplier `mu >= 0` is found by bisection so the power constraint
//!    holds (complementary slackness: `mu = 0` when the unconstrained
//!    solution is feasible).
//!
//! The iteration is a block-coordinate ascent on the WMMSE surrogate, so
//! the sum rate is non-decreasing up to floating-point noise.

use crate::error::{Error, Result};
use crate::linalg::{dot_conj, CMat, Cholesky};
use crate::precoding::{mrt_precoder, sum_rate, ChannelMatrix, PrecodingMatrix, SystemConfig};
use crate::scalar::Real;
use num_complex::Complex;

/// Relative slack allowed above `p_max` by the returned precoder; the
/// bisection terminates on the feasible side so overshoot stays within
/// rounding error of the power computation itself.
pub const POWER_SLACK_REL: f64 = 1e-9;

/// Bisection on `mu` stops once the bracket's feasible side reaches
/// `power >= p_max * (1 - MU_POWER_TOL_REL)`.
const MU_POWER_TOL_REL: f64 = 1e-6;

/// Cap on bracket-doubling steps when searching for an upper `mu`.
const MU_MAX_DOUBLINGS: u32 = 200;

/// Stopping rule and iteration cap for [`wmmse_solve`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WmmseOptions {
    /// Maximum number of full (u, v, W) iterations.
    pub max_iters: usize,
    /// Terminate once `|r_new - r_old| / max(|r_old|, 1e-300) < rel_tol`.
    pub rel_tol: f64,
}

impl Default for WmmseOptions {
    fn default() -> Self {
        WmmseOptions { max_iters: 100, rel_tol: 1e-6 }
    }
}

/// Solver state for one channel realization: the current precoder with its
/// matched receive scalars and MSE weights.
#[derive(Debug, Clone)]
pub struct WmmseState<T> {
    pub w: PrecodingMatrix<T>,
    /// MMSE receive scalars, one per user.
    pub u: Vec<Complex<T>>,
    /// MSE weights `v_k = 1/e_k`, one per user; always `>= 1` after an
    /// update.
    pub v: Vec<T>,
}

/// Result of a full solve: final state plus the sum-rate trajectory.
#[derive(Debug, Clone)]
pub struct WmmseSolution<T> {
    pub state: WmmseState<T>,
    /// Sum rate before each update plus after the last one:
    /// `rate_trace[0]` is the initialization's rate, `rate_trace[i]` the
    /// rate after iteration `i`.
    pub rate_trace: Vec<T>,
    /// Number of full iterations performed.
    pub iters: usize,
    /// Lagrange multiplier from the final precoder update.
    pub mu: T,
}

/// Compute the MMSE receive scalars and weights for a fixed precoder:
/// `u_k = (h_k† w_k) / (sum_j |h_k† w_j|^2 + sigma2)` and
/// `v_k = (sum_j |h_k† w_j|^2 + sigma2) / (sum_{j != k} |h_k† w_j|^2 + sigma2)`.
pub fn wmmse_update_uv<T: Real>(
    h: &ChannelMatrix<T>,
    w: &PrecodingMatrix<T>,
    sigma2: T,
) -> Result<(Vec<Complex<T>>, Vec<T>)> {
    super::check_dims(h, w)?;
    super::check_sigma2(sigma2)?;
    let n = h.n_users();
    let mut u = Vec::with_capacity(n);
    let mut v = Vec::with_capacity(n);
    for k in 0..n {
        let hk = h.user(k);
        let mut total = sigma2;
        let mut signal = Complex::new(T::zero(), T::zero());
        let mut signal_pow = T::zero();
        for j in 0..n {
            let g = dot_conj(hk, w.beam(j));
            total += g.norm_sqr();
            if j == k {
                signal = g;
                signal_pow = g.norm_sqr();
            }
        }
        u.push(signal / total);
        v.push(total / (total - signal_pow));
    }
    Ok((u, v))
}

/// Transmit power of the precoder `W(mu) = A(mu)^{-1} B` where column `k`
/// of `B` is `u_k^* v_k h_k`. Returns the precoder columns and the power.
fn precoder_for_mu<T: Real>(
    s: &CMat<T>,
    b: &CMat<T>,
    mu: T,
) -> Result<(CMat<T>, T)> {
    let mut a = s.clone();
    a.add_diag(mu);
    let ch = Cholesky::new(&a)
        .map_err(|e| Error::numeric(format!("WMMSE system matrix not positive definite: {e}")))?;
    let n_users = b.cols();
    let mut w = CMat::zeros(b.rows(), n_users);
    let mut power = T::zero();
    for k in 0..n_users {
        let col = ch.solve(b.col(k));
        for x in &col {
            power += x.norm_sqr();
        }
        w.col_mut(k).copy_from_slice(&col);
    }
    Ok((w, power))
}

/// Precoder update for fixed `(u, v)`: find `mu >= 0` by bisection so that
/// `W(mu) = A(mu)^{-1} B` meets the power budget, preferring `mu = 0` when
/// the unconstrained precoder is already feasible.
pub fn wmmse_w_step<T: Real>(
    h: &ChannelMatrix<T>,
    u: &[Complex<T>],
    v: &[T],
    cfg: &SystemConfig,
) -> Result<(PrecodingMatrix<T>, T)> {
    let (n_tx, n_users) = (h.n_tx(), h.n_users());
    if u.len() != n_users || v.len() != n_users {
        return Err(Error::config("u/v length must match the user count"));
    }
    let p_max = T::of(cfg.p_max);

    // S = sum_j v_j |u_j|^2 h_j h_j†, B column k = u_k^* v_k h_k.
    let mut s = CMat::zeros(n_tx, n_tx);
    let mut b = CMat::zeros(n_tx, n_users);
    let mut any_rhs = false;
    for k in 0..n_users {
        s.rank1_update(h.user(k), v[k] * u[k].norm_sqr());
        let c = u[k].conj() * v[k];
        if c.norm_sqr() > T::zero() {
            any_rhs = true;
        }
        for (x, &hk) in b.col_mut(k).iter_mut().zip(h.user(k).iter()) {
            *x = hk * c;
        }
    }
    if !any_rhs {
        // All receivers are switched off; the optimal precoder is zero and
        // the power constraint is slack.
        return Ok((PrecodingMatrix::zeros(n_tx, n_users), T::zero()));
    }

    // mu = 0 candidate. S may be rank deficient (fewer users than
    // antennas), in which case A(0) is singular even though the limit
    // power as mu -> 0+ is finite; probe with a tiny scale-aware ridge
    // instead. If even the probe fails, fall through to the bisection,
    // which works at strictly positive mu.
    let zero_candidate = match precoder_for_mu(&s, &b, T::zero()) {
        Ok(pair) => Some(pair),
        Err(_) => {
            let trace = (0..n_tx).fold(T::zero(), |acc, i| acc + s.get(i, i).re);
            let mu_eps = T::of(1e-9).max(T::epsilon().sqrt())
                * (trace / T::of(n_tx as f64) + T::one());
            precoder_for_mu(&s, &b, mu_eps).ok()
        }
    };
    if let Some((w, p)) = zero_candidate {
        if p <= p_max {
            return Ok((PrecodingMatrix::new(w)?, T::zero()));
        }
    }

    // power(mu) is strictly decreasing; bracket then bisect. `hi` is kept
    // feasible (power <= p_max), `lo` infeasible.
    let mut lo = T::zero();
    let mut hi = T::one();
    let mut hi_pair = precoder_for_mu(&s, &b, hi)?;
    let mut doublings = 0;
    while hi_pair.1 > p_max {
        lo = hi;
        hi = hi * T::of(2.0);
        doublings += 1;
        if doublings > MU_MAX_DOUBLINGS {
            return Err(Error::numeric(
                "power bisection failed to bracket the Lagrange multiplier",
            ));
        }
        hi_pair = precoder_for_mu(&s, &b, hi)?;
    }
    let target_lo = p_max * (T::one() - T::of(MU_POWER_TOL_REL));
    while hi_pair.1 < target_lo {
        let mid = (lo + hi) * T::of(0.5);
        if mid <= lo || mid >= hi {
            break; // bracket exhausted at floating-point resolution
        }
        let mid_pair = precoder_for_mu(&s, &b, mid)?;
        if mid_pair.1 > p_max {
            lo = mid;
        } else {
            hi = mid;
            hi_pair = mid_pair;
        }
    }
    Ok((PrecodingMatrix::new(hi_pair.0)?, hi))
}

/// Run WMMSE from an MRT initialization scaled to full power.
pub fn wmmse_solve<T: Real>(
    h: &ChannelMatrix<T>,
    cfg: &SystemConfig,
    sigma2: T,
    opts: &WmmseOptions,
) -> Result<WmmseSolution<T>> {
    cfg.validate()?;
    if h.n_tx() != cfg.n_tx || h.n_users() != cfg.n_users {
        return Err(Error::config(format!(
            "channel {}x{} does not match config {}x{}",
            h.n_tx(),
            h.n_users(),
            cfg.n_tx,
            cfg.n_users
        )));
    }
    let w0 = mrt_precoder(h, T::of(cfg.p_max))?;
    wmmse_solve_from(h, w0, cfg, sigma2, opts)
}

/// Run WMMSE from a caller-supplied starting precoder.
pub fn wmmse_solve_from<T: Real>(
    h: &ChannelMatrix<T>,
    w0: PrecodingMatrix<T>,
    cfg: &SystemConfig,
    sigma2: T,
    opts: &WmmseOptions,
) -> Result<WmmseSolution<T>> {
    super::check_sigma2(sigma2)?;
    if opts.max_iters == 0 {
        return Err(Error::config("max_iters must be positive"));
    }
    if !(opts.rel_tol > 0.0) {
        return Err(Error::config("rel_tol must be positive"));
    }
    let mut w = w0;
    let mut rate = sum_rate(h, &w, sigma2)?;
    let mut trace = vec![rate];
    let mut state = None;
    let mut mu = T::zero();
    let mut iters = 0;
    for _ in 0..opts.max_iters {
        let (u, v) = wmmse_update_uv(h, &w, sigma2)?;
        let (w_new, mu_new) = wmmse_w_step(h, &u, &v, cfg)?;
        w = w_new;
        mu = mu_new;
        state = Some((u, v));
        iters += 1;
        let rate_new = sum_rate(h, &w, sigma2)?;
        trace.push(rate_new);
        let denom = rate.abs().max(T::of(1e-300));
        let rel_change = (rate_new - rate).abs() / denom;
        rate = rate_new;
        if rel_change < T::of(opts.rel_tol) {
            break;
        }
    }
    let (u, v) = state.expect("at least one iteration ran");
    Ok(WmmseSolution {
        state: WmmseState { w, u, v },
        rate_trace: trace,
        iters,
        mu,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{rand_channel, rand_precoder};
    use num_complex::Complex;

    fn cfg(n_tx: usize, n_users: usize, p_max: f64) -> SystemConfig {
        SystemConfig::new(n_tx, n_users, p_max).unwrap()
    }

    /// Single-user closed form: the optimum is MRT at full power with rate
    /// log2(1 + p_max ||h||^2 / sigma2).
    #[test]
    fn single_user_matches_closed_form() {
        for seed in 0..5 {
            let h = rand_channel(8, 1, seed);
            let p_max = 1.0 + seed as f64;
            let sigma2 = 0.5;
            let sol = wmmse_solve(&h, &cfg(8, 1, p_max), sigma2, &WmmseOptions::default()).unwrap();
            let hn = crate::linalg::norm_sq(h.user(0));
            let want = (1.0 + p_max * hn / sigma2).log2();
            let got = *sol.rate_trace.last().unwrap();
            assert!(
                (got - want).abs() / want < 1e-6,
                "seed {seed}: got {got}, closed form {want}"
            );
        }
    }

    #[test]
    fn rate_trace_is_monotone_nondecreasing() {
        for seed in 0..20 {
            let h = rand_channel(16, 4, 100 + seed);
            let sol = wmmse_solve(&h, &cfg(16, 4, 1.0), 0.1, &WmmseOptions::default()).unwrap();
            for pair in sol.rate_trace.windows(2) {
                let floor = pair[0] - 1e-6 * pair[0].abs().max(1.0);
                assert!(
                    pair[1] >= floor,
                    "seed {seed}: rate dropped {} -> {}",
                    pair[0],
                    pair[1]
                );
            }
        }
    }

    #[test]
    fn weights_are_at_least_one_and_power_feasible() {
        for seed in 0..10 {
            let h = rand_channel(8, 3, 200 + seed);
            let p_max = 2.0;
            let sol = wmmse_solve(&h, &cfg(8, 3, p_max), 0.2, &WmmseOptions::default()).unwrap();
            for &v in &sol.state.v {
                assert!(v >= 1.0, "weight {v} < 1");
            }
            let p = sol.state.w.total_power();
            assert!(
                p <= p_max * (1.0 + POWER_SLACK_REL),
                "power {p} exceeds budget {p_max}"
            );
        }
    }

    #[test]
    fn converged_state_is_a_fixed_point() {
        // After convergence, one more full update moves the rate by at
        // most 10x the stopping tolerance. The precoder itself moves by
        // O(sqrt(tol)): the rate is quadratically flat around a local
        // optimum, so a rate-based stopping rule cannot pin W tighter.
        let opts = WmmseOptions::default();
        for seed in 0..5 {
            let h = rand_channel(8, 2, 300 + seed);
            let c = cfg(8, 2, 1.0);
            let sol = wmmse_solve(&h, &c, 0.1, &opts).unwrap();
            assert!(sol.iters < opts.max_iters, "seed {seed}: did not converge");
            let r0 = *sol.rate_trace.last().unwrap();
            let (u, v) = wmmse_update_uv(&h, &sol.state.w, 0.1).unwrap();
            let (w1, _) = wmmse_w_step(&h, &u, &v, &c).unwrap();
            let r1 = sum_rate(&h, &w1, 0.1).unwrap();
            assert!(
                (r1 - r0).abs() / r0.abs().max(1.0) < 10.0 * opts.rel_tol,
                "seed {seed}: fixed-point rate drift {r0} -> {r1}"
            );
            let mut dw = 0.0f64;
            for (a, b) in w1.mat().data().iter().zip(sol.state.w.mat().data().iter()) {
                dw += (a - b).norm_sqr();
            }
            let rel_dw = (dw / sol.state.w.mat().frobenius_sq()).sqrt();
            assert!(
                rel_dw < opts.rel_tol.sqrt(),
                "seed {seed}: precoder moved by {rel_dw} after convergence"
            );
        }
    }

    #[test]
    fn uv_matches_direct_formulas() {
        let h = rand_channel(4, 2, 7);
        let w = rand_precoder(4, 2, 8, 1.0);
        let sigma2 = 0.3;
        let (u, v) = wmmse_update_uv(&h, &w, sigma2).unwrap();
        for k in 0..2 {
            let hk = h.user(k);
            let mut total = sigma2;
            for j in 0..2 {
                total += dot_conj(hk, w.beam(j)).norm_sqr();
            }
            let sig = dot_conj(hk, w.beam(k));
            let want_u = sig / total;
            let want_v = total / (total - sig.norm_sqr());
            assert!((u[k] - want_u).norm() < 1e-14);
            assert!((v[k] - want_v).abs() < 1e-12);
            assert!(v[k] >= 1.0);
        }
    }

    #[test]
    fn w_step_zero_receivers_give_zero_precoder() {
        let h = rand_channel(4, 2, 9);
        let u = vec![Complex::new(0.0, 0.0); 2];
        let v = vec![1.0; 2];
        let (w, mu) = wmmse_w_step(&h, &u, &v, &cfg(4, 2, 1.0)).unwrap();
        assert_eq!(mu, 0.0);
        assert_eq!(w.total_power(), 0.0);
    }

    #[test]
    fn w_step_feasible_unconstrained_solution_keeps_mu_zero() {
        // With N_U = N_T the matrix S is full rank; tiny u magnitudes make
        // the unconstrained precoder's power far below a loose budget, so
        // complementary slackness forces mu = 0.
        let h = rand_channel(3, 3, 10);
        let u: Vec<Complex<f64>> = (0..3)
            .map(|k| Complex::new(1e-3 * (k as f64 + 1.0), 1e-3))
            .collect();
        let v = vec![1.5; 3];
        let (w, mu) = wmmse_w_step(&h, &u, &v, &cfg(3, 3, 1e9)).unwrap();
        assert_eq!(mu, 0.0);
        assert!(w.total_power() > 0.0);
        assert!(w.total_power() < 1e9);
    }

    #[test]
    fn w_step_active_constraint_lands_on_budget() {
        // Small receive scalars with a full-rank S: the unconstrained
        // precoder W(0) = S^{-1}B scales like 1/|u|, so its power blows up
        // and the constraint must bind; the bisection lands on the budget.
        let h = rand_channel(2, 2, 11);
        let u = vec![Complex::new(0.05, 0.02), Complex::new(-0.03, 0.04)];
        let v = vec![2.0, 5.0];
        let p_max = 1.0;
        let (w, mu) = wmmse_w_step(&h, &u, &v, &cfg(2, 2, p_max)).unwrap();
        assert!(mu > 0.0);
        let p = w.total_power();
        assert!(p <= p_max * (1.0 + POWER_SLACK_REL));
        assert!(p >= p_max * (1.0 - 1e-5), "power {p} fell short of the budget");
    }

    #[test]
    fn w_step_rank_deficient_s_with_slack_budget() {
        // One active user among four antennas: S is rank 1, A(0) singular,
        // yet the limiting precoder is finite and feasible under a large
        // budget; the step must return mu = 0 rather than fail.
        let h = rand_channel(4, 2, 12);
        let u = vec![Complex::new(1e-3, 0.0), Complex::new(0.0, 0.0)];
        let v = vec![1.0, 1.0];
        let (w, mu) = wmmse_w_step(&h, &u, &v, &cfg(4, 2, 1e6)).unwrap();
        assert_eq!(mu, 0.0);
        assert!(w.total_power() > 0.0);
        assert!(w.total_power() <= 1e6);
    }

    #[test]
    fn beats_zf_and_mrt_at_moderate_snr() {
        let mut wins_zf = 0;
        let mut wins_mrt = 0;
        let n = 50;
        for seed in 0..n {
            let h = rand_channel(16, 4, 400 + seed);
            let p_max = 1.0;
            let sigma2 = p_max / 10f64.powf(1.0); // 10 dB SNR
            let c = cfg(16, 4, p_max);
            let r_wmmse = *wmmse_solve(&h, &c, sigma2, &WmmseOptions::default())
                .unwrap()
                .rate_trace
                .last()
                .unwrap();
            let r_zf = sum_rate(&h, &crate::precoding::zf_precoder(&h, p_max).unwrap(), sigma2)
                .unwrap();
            let r_mrt = sum_rate(&h, &mrt_precoder(&h, p_max).unwrap(), sigma2).unwrap();
            if r_wmmse >= r_zf - 1e-9 {
                wins_zf += 1;
            }
            if r_wmmse >= r_mrt - 1e-9 {
                wins_mrt += 1;
            }
        }
        assert_eq!(wins_zf, n, "WMMSE fell below ZF on some channels");
        assert_eq!(wins_mrt, n, "WMMSE fell below MRT on some channels");
    }

    #[test]
    fn two_user_solution_dominates_random_feasible_precoders() {
        let h = rand_channel(2, 2, 500);
        let p_max = 1.0;
        let sigma2 = 0.1;
        let c = cfg(2, 2, p_max);
        let opts = WmmseOptions { max_iters: 500, rel_tol: 1e-10 };
        let r_star = *wmmse_solve(&h, &c, sigma2, &opts).unwrap().rate_trace.last().unwrap();
        for seed in 0..2000 {
            let w = rand_precoder(2, 2, 1000 + seed, p_max);
            let r = sum_rate(&h, &w, sigma2).unwrap();
            assert!(
                r <= r_star * (1.0 + 1e-6),
                "random precoder (seed {seed}) beat WMMSE: {r} > {r_star}"
            );
        }
    }

    #[test]
    fn f32_solver_tracks_f64_coarsely() {
        let h64 = rand_channel(8, 2, 600);
        let m32 = crate::linalg::CMat::<f32>::from_fn(8, 2, |r, c| {
            let z = h64.mat().get(r, c);
            Complex::new(z.re as f32, z.im as f32)
        });
        let h32 = ChannelMatrix::new(m32).unwrap();
        let c = cfg(8, 2, 1.0);
        // Fixed iteration count so both precisions follow the same path.
        let opts = WmmseOptions { max_iters: 60, rel_tol: 1e-12 };
        let r64 = *wmmse_solve(&h64, &c, 0.1, &opts).unwrap().rate_trace.last().unwrap();
        let r32 = *wmmse_solve(&h32, &c, 0.1f32, &opts).unwrap().rate_trace.last().unwrap();
        assert!(
            (r64 - r32 as f64).abs() / r64 < 1e-5,
            "f32 rate {r32} vs f64 rate {r64}"
        );
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let h = rand_channel(8, 2, 1);
        let err = wmmse_solve(&h, &cfg(4, 2, 1.0), 0.1, &WmmseOptions::default());
        assert!(matches!(err, Err(Error::Config(_))));
    }
}
