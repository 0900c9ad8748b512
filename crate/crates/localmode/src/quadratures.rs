//! Single-mode and two-mode quadrature variances (hbar = 1).
//!
//! Single-mode quadratures Q = (a + a^dag)/sqrt(2), P = (a - a^dag)/(i sqrt 2)
//! obey [Q, P] = i, so Var(Q) Var(P) >= 1/4 and the vacuum level is 1/2; a
//! variance below 1/2 is squeezed. The two-mode quadratures
//!
//! ```text
//! d1 = (a + b + a^dag + b^dag) / 2^(3/2) = (Q_a + Q_b)/2
//! d2 = (a + b - a^dag - b^dag) / (i 2^(3/2)) = (P_a + P_b)/2
//! ```
//!
//! obey [d1, d2] = i/2, so Var(d1) Var(d2) >= 1/16 and their vacuum level is
//! 1/4: a two-mode variance is squeezed below 1/4 (equivalently, an
//! uncertainty Delta d below 1/2), not below 1/2.
//!
//! On a fixed-total block the closed forms are Var(Q_a) = Var(P_a)
//! = (1 + 2<n_a>)/2 and Var(d1) = Var(d2) = [1 + N + 2 Re<a^dag b>]/4, which
//! is at least 1/4 since 1 + N + 2 Re<a^dag b> = 1 + <(a^dag+b^dag)(a+b)> is
//! at least 1. So no block state is squeezed in either sense; both
//! thresholds can only be saturated (vacuum, and states annihilated by a + b).

use crate::fock::{NormalMonomial, SubspaceState};

/// A single-mode quadrature variance below this value means squeezing.
pub const SINGLE_MODE_SQUEEZING_THRESHOLD: f64 = 0.5;

/// A two-mode quadrature variance below this value means squeezing
/// (vacuum level of d1, d2 under [d1, d2] = i/2).
pub const TWO_MODE_SQUEEZING_THRESHOLD: f64 = 0.25;

const TOLERANCE: f64 = 1e-12;

/// All four single-mode variances, both two-mode variances, and the
/// squeezing verdicts for one state.
#[derive(Clone, Copy, Debug)]
pub struct QuadratureReport {
    pub var_qa: f64,
    pub var_pa: f64,
    pub var_qb: f64,
    pub var_pb: f64,
    pub var_d1: f64,
    pub var_d2: f64,
    /// True when any single-mode variance is below 1/2 - 1e-12.
    pub squeezing_single: bool,
    /// True when any two-mode variance is below 1/4 - 1e-12.
    pub squeezing_two_mode: bool,
}

fn moment(state: &SubspaceState, p: u32, q: u32, r: u32, s: u32) -> num_complex::Complex64 {
    state.expectation(NormalMonomial::new(p, q, r, s))
}

/// Compute every quadrature variance from first/second moments; the
/// expansion keeps the first-moment and anomalous (<a^2>, <ab>) terms, so it
/// is exact for any state the moment engine can address, not only for states
/// where those terms vanish.
pub fn quadrature_report(state: &SubspaceState) -> QuadratureReport {
    let a1 = moment(state, 0, 1, 0, 0); // <a>
    let b1 = moment(state, 0, 0, 0, 1); // <b>
    let a2 = moment(state, 0, 2, 0, 0).re; // Re<a^2>
    let b2 = moment(state, 0, 0, 0, 2).re; // Re<b^2>
    let na = moment(state, 1, 1, 0, 0).re;
    let nb = moment(state, 0, 0, 1, 1).re;
    let ab = moment(state, 0, 1, 0, 1).re; // Re<a b>
    let hop = moment(state, 1, 0, 0, 1).re; // Re<a^dag b>

    // <Q^2> = Re<a^2> + n + 1/2, <P^2> = -Re<a^2> + n + 1/2,
    // <Q> = sqrt(2) Re<a>, <P> = sqrt(2) Im<a>.
    let mean_qa = 2f64.sqrt() * a1.re;
    let mean_pa = 2f64.sqrt() * a1.im;
    let mean_qb = 2f64.sqrt() * b1.re;
    let mean_pb = 2f64.sqrt() * b1.im;
    let var_qa = a2 + na + 0.5 - mean_qa * mean_qa;
    let var_pa = -a2 + na + 0.5 - mean_pa * mean_pa;
    let var_qb = b2 + nb + 0.5 - mean_qb * mean_qb;
    let var_pb = -b2 + nb + 0.5 - mean_pb * mean_pb;

    // <Q_a Q_b> = Re<ab> + Re<a^dag b>, <P_a P_b> = Re<a^dag b> - Re<ab>;
    // d1 = (Q_a + Q_b)/2, d2 = (P_a + P_b)/2.
    let qa_sq = a2 + na + 0.5;
    let qb_sq = b2 + nb + 0.5;
    let pa_sq = -a2 + na + 0.5;
    let pb_sq = -b2 + nb + 0.5;
    let mean_d1 = 0.5 * (mean_qa + mean_qb);
    let mean_d2 = 0.5 * (mean_pa + mean_pb);
    let var_d1 = 0.25 * (qa_sq + qb_sq + 2.0 * (ab + hop)) - mean_d1 * mean_d1;
    let var_d2 = 0.25 * (pa_sq + pb_sq + 2.0 * (hop - ab)) - mean_d2 * mean_d2;

    let squeezing_single = [var_qa, var_pa, var_qb, var_pb]
        .iter()
        .any(|&v| v < SINGLE_MODE_SQUEEZING_THRESHOLD - TOLERANCE);
    let squeezing_two_mode = [var_d1, var_d2]
        .iter()
        .any(|&v| v < TWO_MODE_SQUEEZING_THRESHOLD - TOLERANCE);

    QuadratureReport {
        var_qa,
        var_pa,
        var_qb,
        var_pb,
        var_d1,
        var_d2,
        squeezing_single,
        squeezing_two_mode,
    }
}
