//! Quadrature rules: Gauss–Legendre on finite intervals, truncated rules for
//! semi-infinite integrands with exponential decay, and discretized complex
//! contours.
//!
//! Circles use the periodic trapezoid rule, which is spectrally accurate for
//! integrands analytic in an annulus around the contour; lines and wedges use
//! Gauss–Legendre per segment. Contour weights contain the local `dz` line
//! element; the `1/(2 pi i)` prefactor is left to the caller.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Cutoff multiple at which the neglected tail of `exp(-x/scale)` drops
/// below 1e-14 (it is `exp(-40) ~ 4e-18`, leaving margin for prefactors).
pub const DEFAULT_CUTOFF_MULTIPLE: f64 = 40.0;

/// Nodes and positive weights on a real interval, strictly increasing.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Applies the rule to `f`.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Discretized complex contour; weights include the line element `dz`.
#[derive(Debug, Clone)]
pub struct ContourRule {
    pub nodes: Vec<Complex64>,
    pub weights: Vec<Complex64>,
}

impl ContourRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn integrate(&self, mut f: impl FnMut(Complex64) -> Complex64) -> Complex64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&z, &w)| w * f(z))
            .sum()
    }

    /// Smallest node-to-node distance between two contours.
    pub fn separation(&self, other: &ContourRule) -> f64 {
        let mut min = f64::INFINITY;
        for &a in &self.nodes {
            for &b in &other.nodes {
                min = min.min((a - b).norm());
            }
        }
        min
    }
}

/// Gauss–Legendre nodes and weights on `[lo, hi]`, exact for polynomials of
/// degree `2 * order - 1`.
pub fn gauss_legendre(order: usize, lo: f64, hi: f64) -> Result<QuadratureRule> {
    if order < 2 {
        return Err(Error::domain("quadrature", format!("order {order} < 2")));
    }
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::domain("quadrature", format!("bad interval [{lo}, {hi}]")));
    }
    let (x, w) = legendre_nodes(order);
    let mid = 0.5 * (hi + lo);
    let half = 0.5 * (hi - lo);
    Ok(QuadratureRule {
        nodes: x.iter().map(|&t| mid + half * t).collect(),
        weights: w.iter().map(|&v| half * v).collect(),
    })
}

/// Gauss–Legendre on `[origin, origin + cutoff_multiple * decay_scale]`,
/// sized for integrands decaying like `exp(-(x - origin)/decay_scale)`.
pub fn semi_infinite_rule(
    origin: f64,
    decay_scale: f64,
    order: usize,
    cutoff_multiple: f64,
) -> Result<QuadratureRule> {
    if !(decay_scale > 0.0 && decay_scale.is_finite()) {
        return Err(Error::domain("quadrature", format!("decay_scale {decay_scale} must be positive")));
    }
    if !(cutoff_multiple > 0.0 && cutoff_multiple.is_finite()) {
        return Err(Error::domain("quadrature", format!("cutoff_multiple {cutoff_multiple} must be positive")));
    }
    gauss_legendre(order, origin, origin + cutoff_multiple * decay_scale)
}

/// Counterclockwise circle of radius `radius` around `center`, discretized
/// by the periodic trapezoid rule.
pub fn circle_contour(center: Complex64, radius: f64, order: usize) -> Result<ContourRule> {
    if order < 8 {
        return Err(Error::domain("quadrature", format!("circle order {order} < 8")));
    }
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::domain("quadrature", format!("radius {radius} must be positive")));
    }
    let mut nodes = Vec::with_capacity(order);
    let mut weights = Vec::with_capacity(order);
    let step = 2.0 * std::f64::consts::PI / order as f64;
    for k in 0..order {
        let phase = Complex64::from_polar(1.0, step * k as f64);
        nodes.push(center + radius * phase);
        weights.push(Complex64::new(0.0, step * radius) * phase);
    }
    Ok(ContourRule { nodes, weights })
}

/// Shape of a line-type contour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineShape {
    /// `anchor + i t`, `t` increasing over `[-half_height, half_height]`.
    Vertical,
    /// The steepest-descent wedge `anchor + t e^{-i pi/3}` joined to
    /// `anchor + t e^{i pi/3}`, oriented upward, `t` in `[0, half_height]`.
    Wedge,
}

/// Vertical line or wedge through `anchor` on the real axis.
pub fn line_contour(
    anchor: f64,
    half_height: f64,
    order: usize,
    shape: LineShape,
) -> Result<ContourRule> {
    if order < 8 {
        return Err(Error::domain("quadrature", format!("line order {order} < 8")));
    }
    if !(half_height > 0.0 && half_height.is_finite()) {
        return Err(Error::domain("quadrature", format!("half_height {half_height} must be positive")));
    }
    match shape {
        LineShape::Vertical => {
            let base = gauss_legendre(order, -half_height, half_height)?;
            let nodes = base.nodes.iter().map(|&t| Complex64::new(anchor, t)).collect();
            let weights = base.weights.iter().map(|&w| Complex64::new(0.0, w)).collect();
            Ok(ContourRule { nodes, weights })
        }
        LineShape::Wedge => {
            let base = gauss_legendre(order, 0.0, half_height)?;
            let down = Complex64::from_polar(1.0, -std::f64::consts::FRAC_PI_3);
            let up = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_3);
            let mut nodes: Vec<Complex64> = base
                .nodes
                .iter()
                .rev()
                .map(|&t| Complex64::from(anchor) + t * down)
                .collect();
            let mut weights: Vec<Complex64> =
                base.weights.iter().rev().map(|&w| -w * down).collect();
            nodes.extend(base.nodes.iter().map(|&t| Complex64::from(anchor) + t * up));
            weights.extend(base.weights.iter().map(|&w| w * up));
            Ok(ContourRule { nodes, weights })
        }
    }
}

/// Default truncation half-height for the vertical contours of the finite
/// kernel: the integrands carry `exp(t w^2 / (2(1-t)))`, which decays like a
/// Gaussian on vertical lines.
pub fn default_half_height(s: f64, t: f64) -> f64 {
    let m = s.min(t);
    (10.0 / (m / (2.0 * (1.0 - m))).sqrt()).max(20.0)
}

/// Legendre nodes/weights on [-1, 1] by Newton iteration on the three-term
/// recurrence.
fn legendre_nodes(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, d) = legendre_eval(n, z);
            let delta = p / d;
            z -= delta;
            if delta.abs() < 1e-15 {
                break;
            }
        }
        // one polishing step
        let (p, dp) = legendre_eval(n, z);
        z -= p / dp;
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        let (_, d) = legendre_eval(n, 0.0);
        nodes[n / 2] = 0.0;
        weights[n / 2] = 2.0 / (d * d);
    }
    (nodes, weights)
}

fn legendre_eval(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}
