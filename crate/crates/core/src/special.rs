//! Airy functions and the elementary transition kernels.
//!
//! `Ai` and `Ai'` are evaluated without external special-function crates:
//! a Maclaurin series covers `|x| <= 4.5`, asymptotic expansions truncated at
//! their smallest term cover `|x| >= 12`, and the band in between is bridged
//! by Taylor stepping of the Airy ODE `y'' = x y` from the nearest seeded
//! anchor. On the positive side the stepping runs toward decreasing `x`,
//! where `Ai` grows, so the recessive solution is not contaminated.
//!
//! The extended Airy function is always assembled in log-space so that the
//! `exp((2/3)s^3 + xs)` prefactor and the decay of `Ai(s^2 + x)` cancel
//! before anything is exponentiated.

use crate::error::{Error, Result};

const SERIES_EDGE: f64 = 4.5;
const ASYMPTOTIC_EDGE: f64 = 12.0;
const TAYLOR_TERMS: usize = 36;
const MAX_ASYMPTOTIC_TERMS: usize = 40;

/// Airy function of the first kind.
pub fn airy(x: f64) -> Result<f64> {
    Ok(airy_pair(x)?.0)
}

/// Derivative of the Airy function.
pub fn airy_prime(x: f64) -> Result<f64> {
    Ok(airy_pair(x)?.1)
}

/// `(Ai(x), Ai'(x))` in one evaluation.
pub fn airy_pair(x: f64) -> Result<(f64, f64)> {
    if !x.is_finite() {
        return Err(Error::domain("special_functions", format!("airy argument {x} not finite")));
    }
    Ok(airy_pair_raw(x))
}

pub(crate) fn airy_pair_raw(x: f64) -> (f64, f64) {
    if x.abs() <= SERIES_EDGE {
        maclaurin(x)
    } else if x >= ASYMPTOTIC_EDGE {
        asymptotic_pos(x)
    } else if x > SERIES_EDGE {
        // seed at the asymptotic edge and step down; Ai grows this way
        step_from(ASYMPTOTIC_EDGE, asymptotic_pos(ASYMPTOTIC_EDGE), x)
    } else if x <= -ASYMPTOTIC_EDGE {
        asymptotic_neg(x)
    } else {
        step_from(-SERIES_EDGE, maclaurin(-SERIES_EDGE), x)
    }
}

pub(crate) fn ai(x: f64) -> f64 {
    airy_pair_raw(x).0
}

/// `sign(Ai(x))` and `ln |Ai(x)|`, usable far past the underflow point of
/// `Ai` itself.
pub(crate) fn airy_ln_abs(x: f64) -> (f64, f64) {
    if x >= ASYMPTOTIC_EDGE {
        let (zeta, series, _) = asymptotic_pos_series(x);
        let ln = -zeta - (2.0 * std::f64::consts::PI.sqrt()).ln() - 0.25 * x.ln() + series.ln();
        (1.0, ln)
    } else {
        let v = ai(x);
        (if v < 0.0 { -1.0 } else { 1.0 }, v.abs().ln())
    }
}

/// Extended Airy function `Ai^(s)(x) = exp((2/3)s^3 + xs) Ai(s^2 + x)`.
pub fn airy_ext(s: f64, x: f64) -> Result<f64> {
    if !s.is_finite() || !x.is_finite() {
        return Err(Error::domain(
            "special_functions",
            format!("airy_ext arguments ({s}, {x}) not finite"),
        ));
    }
    let exponent = (2.0 / 3.0) * s * s * s + x * s;
    if !exponent.is_finite() {
        return Err(Error::Range { context: "special_functions", exponent });
    }
    let (sign, ln_ai) = airy_ln_abs(s * s + x);
    let total = exponent + ln_ai;
    if total > 709.0 {
        return Err(Error::Range { context: "special_functions", exponent: total });
    }
    Ok(sign * total.exp())
}

/// Gaussian kernel `p(t; x, y) = (4 pi t)^(-1/2) exp(-(y-x)^2 / (4t))`.
pub fn gauss_kernel(t: f64, x: f64, y: f64) -> Result<f64> {
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::domain("special_functions", format!("gauss_kernel needs t > 0, got {t}")));
    }
    Ok((-((y - x) * (y - x)) / (4.0 * t)).exp() / (4.0 * std::f64::consts::PI * t).sqrt())
}

/// Conjugated Brownian kernel
/// `q(s,u,t,v) = (2 pi (t-s))^(-1/2) exp(-(u-v)^2/(2(t-s)) + u^2/(2(1-s)) - v^2/(2(1-t)))`
/// for `s < t`, and zero otherwise.
pub fn brownian_q(s: f64, u: f64, t: f64, v: f64) -> Result<f64> {
    for (name, val) in [("s", s), ("t", t)] {
        if !(val > 0.0 && val < 1.0) {
            return Err(Error::domain(
                "special_functions",
                format!("brownian_q needs {name} in (0,1), got {val}"),
            ));
        }
    }
    if s >= t {
        return Ok(0.0);
    }
    let e = -(u - v) * (u - v) / (2.0 * (t - s)) + u * u / (2.0 * (1.0 - s)) - v * v / (2.0 * (1.0 - t));
    Ok(e.exp() / (2.0 * std::f64::consts::PI * (t - s)).sqrt())
}

// --- Maclaurin branch ---

const AI_ZERO: f64 = 0.355_028_053_887_817_2; // Ai(0)
const AIP_ZERO: f64 = -0.258_819_403_792_806_8; // Ai'(0)

fn maclaurin(x: f64) -> (f64, f64) {
    if x == 0.0 {
        return (AI_ZERO, AIP_ZERO);
    }
    let x3 = x * x * x;
    // f = sum a_k x^{3k},        a_k = a_{k-1} / ((3k-1)(3k))
    // g = sum b_k x^{3k+1},      b_k = b_{k-1} / ((3k)(3k+1))
    let mut f_term = 1.0;
    let mut g_term = x;
    let mut f = f_term;
    let mut g = g_term;
    let mut fp = 0.0; // f' = sum 3k a_k x^{3k-1}
    let mut gp = 1.0; // g' = sum (3k+1) b_k x^{3k}
    for k in 1..80 {
        let kf = k as f64;
        f_term *= x3 / ((3.0 * kf - 1.0) * (3.0 * kf));
        g_term *= x3 / ((3.0 * kf) * (3.0 * kf + 1.0));
        f += f_term;
        g += g_term;
        fp += 3.0 * kf * f_term / x;
        gp += (3.0 * kf + 1.0) * g_term / x;
        if f_term.abs() < 1e-20 && g_term.abs() < 1e-20 {
            break;
        }
    }
    (AI_ZERO * f - AIP_ZERO.abs() * g, AI_ZERO * fp - AIP_ZERO.abs() * gp)
}

// --- asymptotic branches ---

/// Poincaré coefficients `u_k` and `v_k` of the Airy expansions, with the
/// two alternating sums truncated at their smallest term.
fn asymptotic_sums(zeta: f64) -> (f64, f64) {
    let mut u = 1.0;
    let mut su = 1.0;
    let mut sv = 1.0;
    let mut prev = f64::INFINITY;
    let mut sign = 1.0;
    for k in 1..=MAX_ASYMPTOTIC_TERMS {
        let kf = k as f64;
        u *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / (216.0 * kf * (2.0 * kf - 1.0));
        let t = u / zeta.powi(k as i32);
        if t.abs() >= prev {
            break; // smallest term reached
        }
        prev = t.abs();
        sign = -sign;
        su += sign * t;
        sv += sign * t * (6.0 * kf + 1.0) / (1.0 - 6.0 * kf);
        if t.abs() < 1e-18 {
            break;
        }
    }
    (su, sv)
}

fn asymptotic_pos_series(x: f64) -> (f64, f64, f64) {
    let zeta = 2.0 / 3.0 * x * x.sqrt();
    let (su, sv) = asymptotic_sums(zeta);
    (zeta, su, sv)
}

fn asymptotic_pos(x: f64) -> (f64, f64) {
    let (zeta, su, sv) = asymptotic_pos_series(x);
    let pref = (-zeta).exp() / (2.0 * std::f64::consts::PI.sqrt());
    let ai = pref * su / x.powf(0.25);
    let aip = -pref * sv * x.powf(0.25);
    (ai, aip)
}

fn asymptotic_neg(x: f64) -> (f64, f64) {
    let z = -x;
    let zeta = 2.0 / 3.0 * z * z.sqrt();
    // even/odd splits of the u_k and v_k sums
    let mut u = 1.0;
    let mut ue = 1.0; // sum (-1)^k u_{2k} zeta^{-2k}
    let mut uo = 0.0; // sum (-1)^k u_{2k+1} zeta^{-2k-1}
    let mut ve = 1.0;
    let mut vo = 0.0;
    let mut prev = f64::INFINITY;
    for k in 1..=MAX_ASYMPTOTIC_TERMS {
        let kf = k as f64;
        u *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / (216.0 * kf * (2.0 * kf - 1.0));
        let t = u / zeta.powi(k as i32);
        if t.abs() >= prev {
            break;
        }
        prev = t.abs();
        let v = t * (6.0 * kf + 1.0) / (1.0 - 6.0 * kf);
        // k odd contributes to the odd sums, k even to the even sums,
        // with sign (-1)^(k/2 rounded down) ... expanded explicitly:
        let half = k / 2;
        let sgn = if half % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 1 {
            uo += sgn * t;
            vo += sgn * v;
        } else {
            ue += sgn * t;
            ve += sgn * v;
        }
        if t.abs() < 1e-18 {
            break;
        }
    }
    let phase = zeta - std::f64::consts::FRAC_PI_4;
    let (sp, cp) = phase.sin_cos();
    let rt_pi = std::f64::consts::PI.sqrt();
    let ai = (cp * ue + sp * uo) / (rt_pi * z.powf(0.25));
    let aip = (sp * ve - cp * vo) * z.powf(0.25) / rt_pi;
    (ai, aip)
}

// --- Taylor stepping of y'' = x y ---

/// One Taylor step of the Airy ODE from center `c` with step `h`.
fn taylor_step(c: f64, y: f64, yp: f64, h: f64) -> (f64, f64) {
    // coefficients of y(c + t): a_{k+2} = (c a_k + a_{k-1}) / ((k+1)(k+2))
    let mut a = [0.0_f64; TAYLOR_TERMS];
    a[0] = y;
    a[1] = yp;
    for k in 0..TAYLOR_TERMS - 2 {
        let lower = if k == 0 { 0.0 } else { a[k - 1] };
        a[k + 2] = (c * a[k] + lower) / (((k + 1) * (k + 2)) as f64);
    }
    let mut v = a[TAYLOR_TERMS - 1];
    let mut d = a[TAYLOR_TERMS - 1] * (TAYLOR_TERMS - 1) as f64;
    for k in (1..TAYLOR_TERMS - 1).rev() {
        v = v * h + a[k];
        d = d * h + a[k] * k as f64;
    }
    (v * h + a[0], d)
}

fn step_from(anchor: f64, seed: (f64, f64), target: f64) -> (f64, f64) {
    let dist = target - anchor;
    let steps = (dist.abs().ceil() as usize).max(1);
    let h = dist / steps as f64;
    let mut c = anchor;
    let (mut y, mut yp) = seed;
    for _ in 0..steps {
        let (ny, nyp) = taylor_step(c, y, yp, h);
        y = ny;
        yp = nyp;
        c += h;
    }
    (y, yp)
}
