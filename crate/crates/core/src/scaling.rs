//! Parameters of the tacnode process and the scaling maps connecting the
//! finite bridge system to tacnode coordinates.
//!
//! The maps here are pure functions; every value is immutable after
//! construction and safe to share across threads.

use crate::error::{Error, Result};

/// The two parameters of the limiting tacnode process: the curvature ratio
/// `lambda` of the two limit shapes and the interaction strength `sigma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TacnodeParams {
    pub lambda: f64,
    pub sigma: f64,
}

impl TacnodeParams {
    pub fn new(lambda: f64, sigma: f64) -> Result<Self> {
        if !lambda.is_finite() || !sigma.is_finite() {
            return Err(Error::domain("params_scaling", "lambda and sigma must be finite"));
        }
        if lambda <= 0.0 {
            return Err(Error::domain(
                "params_scaling",
                format!("lambda must be positive, got {lambda}"),
            ));
        }
        Ok(TacnodeParams { lambda, sigma })
    }
}

/// A space-time point in tacnode coordinates: rescaled time `tau` and
/// rescaled space `xi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledPoint {
    pub tau: f64,
    pub xi: f64,
}

impl ScaledPoint {
    pub fn new(tau: f64, xi: f64) -> Result<Self> {
        if !tau.is_finite() || !xi.is_finite() {
            return Err(Error::domain("params_scaling", "tau and xi must be finite"));
        }
        Ok(ScaledPoint { tau, xi })
    }
}

/// The pre-limit system: `n` bridges pinned at `a1`, `m` bridges pinned at
/// `a2` (both ends), plus the free parameter `d` of the finite kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteSystemConfig {
    pub n: usize,
    pub m: usize,
    pub a1: f64,
    pub a2: f64,
    pub d: f64,
}

impl FiniteSystemConfig {
    pub fn new(n: usize, m: usize, a1: f64, a2: f64, d: f64) -> Result<Self> {
        if n < 1 || m < 1 {
            return Err(Error::domain("params_scaling", "n and m must be at least 1"));
        }
        if !(a1.is_finite() && a2.is_finite() && a1 < a2) {
            return Err(Error::domain(
                "params_scaling",
                format!("need a1 < a2, got a1={a1}, a2={a2}"),
            ));
        }
        if !(d.is_finite() && d > 0.0) {
            return Err(Error::domain("params_scaling", format!("d must be positive, got {d}")));
        }
        Ok(FiniteSystemConfig { n, m, a1, a2, d })
    }

    /// Builds the tacnode-scaled system of `n` and `lambda * n` bridges.
    ///
    /// `lambda * n` must be an integer (up to 1e-9 slack for binary-float
    /// parameter values); fractional group sizes are rejected rather than
    /// truncated.
    pub fn from_tacnode_scaling(n: usize, params: TacnodeParams) -> Result<Self> {
        let mf = params.lambda * n as f64;
        let m = mf.round();
        if (mf - m).abs() > 1e-9 || m < 1.0 {
            return Err(Error::domain(
                "params_scaling",
                format!("lambda * n = {mf} is not a positive integer"),
            ));
        }
        let (a1, a2, _) = scaled_endpoints(n, params)?;
        FiniteSystemConfig::new(n, m as usize, a1, a2, d_param(n)?)
    }

    /// Distance between the two pinning positions.
    pub fn span(&self) -> f64 {
        self.a2 - self.a1
    }
}

/// Endpoint positions of the two bridge families at system size `n`:
/// `a1 = -(sqrt(n) + sigma/2 * n^(-1/6))`, `a2 = -sqrt(lambda) * a1`,
/// and their distance `a = a2 - a1`.
pub fn scaled_endpoints(n: usize, params: TacnodeParams) -> Result<(f64, f64, f64)> {
    if n < 1 {
        return Err(Error::domain("params_scaling", "n must be at least 1"));
    }
    if params.lambda <= 0.0 || !params.lambda.is_finite() || !params.sigma.is_finite() {
        return Err(Error::domain("params_scaling", "invalid params"));
    }
    let nf = n as f64;
    let root = nf.sqrt() + 0.5 * params.sigma * nf.powf(-1.0 / 6.0);
    let a1 = -root;
    let a2 = params.lambda.sqrt() * root;
    Ok((a1, a2, a2 - a1))
}

/// Maps a tacnode-coordinate point to the original space-time of the bridge
/// system: `time = (1 + tau * n^(-1/3)) / 2`, `space = xi/2 * n^(-1/6)`.
pub fn scaled_spacetime(n: usize, pt: ScaledPoint) -> Result<(f64, f64)> {
    if n < 1 {
        return Err(Error::domain("params_scaling", "n must be at least 1"));
    }
    let nf = n as f64;
    let time = 0.5 * (1.0 + pt.tau * nf.powf(-1.0 / 3.0));
    let space = 0.5 * pt.xi * nf.powf(-1.0 / 6.0);
    if !(time > 0.0 && time < 1.0) {
        return Err(Error::domain(
            "params_scaling",
            format!("scaled time {time} falls outside (0,1); tau={} too large for n={n}", pt.tau),
        ));
    }
    Ok((time, space))
}

/// The free parameter of the finite kernel at its convergent order,
/// `d = n^(-1/12) / sqrt(2)`, so that `d^2` is the spatial scale.
pub fn d_param(n: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::domain("params_scaling", "n must be at least 1"));
    }
    Ok((n as f64).powf(-1.0 / 12.0) / std::f64::consts::SQRT_2)
}

/// The reflection-invariant interaction strength
/// `sigma_tilde = lambda^(1/6) (1 + sqrt(lambda))^(2/3) sigma`.
pub fn sigma_tilde(params: TacnodeParams) -> f64 {
    params.lambda.powf(1.0 / 6.0) * (1.0 + params.lambda.sqrt()).powf(2.0 / 3.0) * params.sigma
}

/// Reflection of the process across the horizontal axis:
/// `(lambda, sigma) -> (1/lambda, lambda^(2/3) sigma)` and
/// `(tau, xi) -> (lambda^(1/3) tau, -lambda^(1/6) xi)`.
pub fn reflect_params(params: TacnodeParams, pt: ScaledPoint) -> (TacnodeParams, ScaledPoint) {
    let l = params.lambda;
    (
        TacnodeParams {
            lambda: 1.0 / l,
            sigma: l.powf(2.0 / 3.0) * params.sigma,
        },
        ScaledPoint {
            tau: l.powf(1.0 / 3.0) * pt.tau,
            xi: -l.powf(1.0 / 6.0) * pt.xi,
        },
    )
}
