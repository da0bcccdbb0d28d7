//! Airy-type kernels of the limit process and its auxiliary functions.
//!
//! Everything here is expressed through the (extended) Airy function and
//! semi-infinite quadrature: the Airy kernel, its two-parameter extension,
//! the functions `B`, `b`, `C = b - B`, `S`, and the square-root kernel `T`
//! of the restricted Airy operator.

use crate::error::{Error, Result};
use crate::quad::{semi_infinite_rule, QuadratureRule};
use crate::special::{ai, airy_ext};

/// Supported parameter envelope for auxiliary-function evaluation. These are
/// bounds on the *direct arguments* of the functions below; user-facing
/// parameter bounds live in the kernel assembly layer. The extension
/// parameter limit keeps the log-space exponents of `airy_ext`
/// representable with margin, the spatial limit keeps the default
/// semi-infinite rules accurate.
pub const MAX_EXTENSION_PARAM: f64 = 16.0;
pub const MAX_XI: f64 = 60.0;

/// Default rule for the mu-integrals: the integrands contain a plain
/// `Ai(x + mu)` factor decaying like `exp(-(2/3) mu^(3/2))`, so a cutoff of
/// 40 leaves a tail below 1e-16; order 120 passes the doubling test at
/// 1e-10. For strongly negative spatial arguments the cutoff is raised to
/// 60 to cover the oscillatory region.
pub fn default_mu_rule(min_shift: f64) -> Result<QuadratureRule> {
    default_mu_rule_scaled(min_shift, 1.0)
}

/// `default_mu_rule` with order and cutoff scaled by `refine` (used by the
/// order-doubling self-checks and the CLI overrides).
pub fn default_mu_rule_scaled(min_shift: f64, refine: f64) -> Result<QuadratureRule> {
    let cutoff = if min_shift < -10.0 { 60.0 } else { 40.0 };
    let order = (120.0 * refine).ceil() as usize;
    semi_infinite_rule(0.0, 1.0, order.max(2), cutoff * refine)
}

/// Airy kernel `K_Ai(x, y) = int_0^inf Ai(x+u) Ai(y+u) du` on the given
/// semi-infinite rule.
pub fn airy_kernel(x: f64, y: f64, rule: &QuadratureRule) -> Result<f64> {
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::domain("airy_operators", "airy_kernel arguments must be finite"));
    }
    Ok(rule
        .nodes
        .iter()
        .zip(&rule.weights)
        .map(|(&u, &w)| w * ai(x + u) * ai(y + u))
        .sum())
}

/// Extended Airy kernel
/// `K^(alpha,beta)(x, y) = int_0^inf Ai^(alpha)(x+u) Ai^(beta)(y+u) du`.
pub fn airy_kernel_ext(
    alpha: f64,
    beta: f64,
    x: f64,
    y: f64,
    rule: &QuadratureRule,
) -> Result<f64> {
    check_extension("airy_kernel_ext", alpha)?;
    check_extension("airy_kernel_ext", beta)?;
    let mut total = 0.0;
    for (&u, &w) in rule.nodes.iter().zip(&rule.weights) {
        total += w * airy_ext(alpha, x + u)? * airy_ext(beta, y + u)?;
    }
    Ok(total)
}

/// Which auxiliary function to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuxKind {
    /// `B_{tau,xi}(x) = int_0^inf Ai^(tau)(xi + (1+lambda^{-1/2})^{1/3} mu) Ai(x+mu) dmu`
    B,
    /// `b_{tau,xi}(x) = lambda^{1/6} Ai^(lambda^{1/3} tau)(-lambda^{1/6} xi + (1+sqrt(lambda))^{1/3} x)`
    LittleB,
    /// `C = b - B`
    C,
    /// `S_{tau,xi}(x) = Ai^(tau)(lambda^{-1/6}(lambda^{1/6} xi - lambda^{2/3} sigma) + (1+lambda^{-1/2})^{1/3} x)`
    S,
}

/// Parameter bundle for the auxiliary functions. `sigma` is used by the `S`
/// kind only and is zero otherwise.
#[derive(Debug, Clone, Copy)]
pub struct AiryFunctionSpec {
    pub kind: AuxKind,
    pub lambda: f64,
    pub tau: f64,
    pub xi: f64,
    pub sigma: f64,
}

impl AiryFunctionSpec {
    pub fn new(kind: AuxKind, lambda: f64, tau: f64, xi: f64, sigma: f64) -> Result<Self> {
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::domain("airy_operators", format!("lambda must be positive, got {lambda}")));
        }
        if !tau.is_finite() || !xi.is_finite() || !sigma.is_finite() {
            return Err(Error::domain("airy_operators", "spec fields must be finite"));
        }
        if xi.abs() > MAX_XI {
            return Err(Error::envelope(
                "airy_operators",
                format!("|xi| = {} exceeds the supported envelope {MAX_XI}", xi.abs()),
            ));
        }
        Ok(AiryFunctionSpec { kind, lambda, tau, xi, sigma })
    }
}

/// Evaluates the auxiliary function described by `spec` at `x`. The rule is
/// used by the `B` (and hence `C`) kinds for the mu-integral.
pub fn eval_aux(spec: &AiryFunctionSpec, x: f64, rule: &QuadratureRule) -> Result<f64> {
    match spec.kind {
        AuxKind::B => eval_big_b(spec, x, rule),
        AuxKind::LittleB => eval_little_b(spec, x),
        AuxKind::C => Ok(eval_little_b(spec, x)? - eval_big_b(spec, x, rule)?),
        AuxKind::S => {
            let l = spec.lambda;
            check_extension("eval_aux(S)", spec.tau)?;
            let shift = l.powf(-1.0 / 6.0) * (l.powf(1.0 / 6.0) * spec.xi - l.powf(2.0 / 3.0) * spec.sigma);
            let stretch = (1.0 + (1.0 / l).sqrt()).powf(1.0 / 3.0);
            airy_ext(spec.tau, shift + stretch * x)
        }
    }
}

fn eval_big_b(spec: &AiryFunctionSpec, x: f64, rule: &QuadratureRule) -> Result<f64> {
    check_extension("eval_aux(B)", spec.tau)?;
    let stretch = (1.0 + (1.0 / spec.lambda).sqrt()).powf(1.0 / 3.0);
    let mut total = 0.0;
    for (&mu, &w) in rule.nodes.iter().zip(&rule.weights) {
        total += w * airy_ext(spec.tau, spec.xi + stretch * mu)? * ai(x + mu);
    }
    Ok(total)
}

fn eval_little_b(spec: &AiryFunctionSpec, x: f64) -> Result<f64> {
    let l = spec.lambda;
    let ext = l.powf(1.0 / 3.0) * spec.tau;
    check_extension("eval_aux(b)", ext)?;
    Ok(l.powf(1.0 / 6.0) * airy_ext(ext, -l.powf(1.0 / 6.0) * spec.xi + (1.0 + l.sqrt()).powf(1.0 / 3.0) * x)?)
}

/// Kernel of the operator `T` on `L^2((sigma_tilde, inf))`:
/// `T(x, y) = Ai(x + y - sigma_tilde)`. Squares to the restricted Airy
/// operator.
pub fn t_kernel(sigma_tilde: f64, x: f64, y: f64) -> Result<f64> {
    if x < sigma_tilde || y < sigma_tilde {
        return Err(Error::domain(
            "airy_operators",
            format!("t_kernel arguments ({x}, {y}) must lie in [{sigma_tilde}, inf)"),
        ));
    }
    Ok(ai(x + y - sigma_tilde))
}

fn check_extension(context: &'static str, s: f64) -> Result<()> {
    if !s.is_finite() {
        return Err(Error::domain("airy_operators", format!("{context}: extension parameter {s} not finite")));
    }
    if s.abs() > MAX_EXTENSION_PARAM {
        return Err(Error::envelope(
            "airy_operators",
            format!("{context}: extension parameter |{s}| exceeds {MAX_EXTENSION_PARAM}"),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::gauss_legendre;
    use crate::scaling::{sigma_tilde, TacnodeParams};
    use crate::special::{airy, airy_prime};

    fn mu_rule() -> QuadratureRule {
        default_mu_rule(0.0).unwrap()
    }

    #[test]
    fn kernel_symmetry_and_diagonal() {
        let r = mu_rule();
        let a = airy_kernel(0.0, 1.0, &r).unwrap();
        let b = airy_kernel(1.0, 0.0, &r).unwrap();
        assert_eq!(a, b);

        // diagonal identity K(x,x) = Ai'(x)^2 - x Ai(x)^2
        for &x in &[0.0, 1.0, -1.0] {
            let k = airy_kernel(x, x, &r).unwrap();
            let expect = airy_prime(x).unwrap().powi(2) - x * airy(x).unwrap().powi(2);
            assert!((k - expect).abs() < 1e-10, "x={x}: {k} vs {expect}");
        }
        // edge decay
        assert!(airy_kernel(5.0, 5.0, &r).unwrap() < 1e-8);
    }

    #[test]
    fn kernel_decay_envelope() {
        let r = mu_rule();
        for &x in &[4.0, 6.0, 8.0] {
            let k = airy_kernel(x, x, &r).unwrap().abs();
            assert!(k <= (-x).exp(), "K({x},{x}) = {k:e}");
        }
    }

    #[test]
    fn extended_kernel_reduces_and_exchanges() {
        let r = mu_rule();
        let plain = airy_kernel(0.3, -0.2, &r).unwrap();
        let ext = airy_kernel_ext(0.0, 0.0, 0.3, -0.2, &r).unwrap();
        assert!((plain - ext).abs() < 1e-12);

        let a = airy_kernel_ext(0.5, -0.3, 0.0, 1.0, &r).unwrap();
        let b = airy_kernel_ext(-0.3, 0.5, 1.0, 0.0, &r).unwrap();
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn extended_kernel_against_riemann_sum() {
        // brute-force Riemann sum with 10^4 panels on [0, 30]
        let r = mu_rule();
        let v = airy_kernel_ext(-1.0, 1.0, 0.0, 0.0, &r).unwrap();
        let n = 10_000;
        let h = 30.0 / n as f64;
        let mut s = 0.0;
        for i in 0..n {
            let u = (i as f64 + 0.5) * h;
            s += h * airy_ext(-1.0, u).unwrap() * airy_ext(1.0, u).unwrap();
        }
        assert!(v.is_finite());
        assert!((v - s).abs() < 1e-6, "{v} vs Riemann {s}");
    }

    #[test]
    fn aux_definitions_are_consistent() {
        let r = mu_rule();
        // C = b - B by definition
        let spec_c = AiryFunctionSpec::new(AuxKind::C, 2.0, 0.5, 0.1, 0.0).unwrap();
        let spec_b = AiryFunctionSpec::new(AuxKind::B, 2.0, 0.5, 0.1, 0.0).unwrap();
        let spec_lb = AiryFunctionSpec::new(AuxKind::LittleB, 2.0, 0.5, 0.1, 0.0).unwrap();
        let c = eval_aux(&spec_c, 1.0, &r).unwrap();
        let b = eval_aux(&spec_lb, 1.0, &r).unwrap();
        let bb = eval_aux(&spec_b, 1.0, &r).unwrap();
        assert!((c - (b - bb)).abs() < 1e-12);

        // S equals lambda^{1/6} b with mirrored parameters
        let (l, sg, tau, xi, x) = (2.0, 0.3, 0.4, -0.2, 1.0);
        let s_spec = AiryFunctionSpec::new(AuxKind::S, l, tau, xi, sg).unwrap();
        let s = eval_aux(&s_spec, x, &r).unwrap();
        let mirror = AiryFunctionSpec::new(
            AuxKind::LittleB,
            1.0 / l,
            l.powf(1.0 / 3.0) * tau,
            l.powf(2.0 / 3.0) * sg - l.powf(1.0 / 6.0) * xi,
            0.0,
        )
        .unwrap();
        let rhs = l.powf(1.0 / 6.0) * eval_aux(&mirror, x, &r).unwrap();
        assert!((s - rhs).abs() < 1e-12, "{s} vs {rhs}");

        // b at lambda=1, tau=xi=0, x=0 is Ai(0)
        let spec = AiryFunctionSpec::new(AuxKind::LittleB, 1.0, 0.0, 0.0, 0.0).unwrap();
        let v = eval_aux(&spec, 0.0, &r).unwrap();
        assert!((v - 0.3550280538878172).abs() < 1e-13);
    }

    #[test]
    fn t_kernel_contract() {
        assert!((t_kernel(0.0, 0.0, 0.0).unwrap() - 0.3550280538878172).abs() < 1e-13);
        let a = t_kernel(0.5, 1.0, 2.0).unwrap();
        let b = t_kernel(0.5, 2.0, 1.0).unwrap();
        assert_eq!(a, b);
        assert!(t_kernel(0.5, 0.4, 1.0).is_err());
    }

    #[test]
    fn t_squares_to_airy_operator() {
        // discretized T * T vs the restricted Airy kernel, max-entry norm
        let mu = mu_rule();
        for &st in &[-1.0, 0.0, 2.0] {
            let rule = gauss_legendre(100, st, st + 40.0).unwrap();
            let n = rule.len();
            let mut t = vec![0.0; n * n];
            for i in 0..n {
                for j in 0..n {
                    t[i * n + j] = t_kernel(st, rule.nodes[i], rule.nodes[j]).unwrap();
                }
            }
            let mut worst = 0.0f64;
            for i in 0..n {
                for j in 0..n {
                    let mut t2 = 0.0;
                    for k in 0..n {
                        t2 += t[i * n + k] * rule.weights[k] * t[k * n + j];
                    }
                    let k_ai = airy_kernel(rule.nodes[i], rule.nodes[j], &mu).unwrap();
                    worst = worst.max((t2 - k_ai).abs());
                }
            }
            assert!(worst < 1e-8, "sigma_tilde={st}: max entry diff {worst:e}");
        }
    }

    #[test]
    fn scalar_product_identities() {
        // K^(-t1,t2)(sigma+xi1, sigma+xi2)
        //   = (1+lambda^{-1/2})^{1/3} <S_{-t1,xi1}, S_{t2,xi2}>_{L2((st,inf))}
        // and its mirror, on a small parameter grid
        let mu = mu_rule();
        let mut checked = 0;
        for &l in &[0.5, 2.0] {
            for &sg in &[-0.5, 0.5] {
                for &tau in &[-0.5, 0.5] {
                    for &xi in &[-1.0, 1.0] {
                        let params = TacnodeParams::new(l, sg).unwrap();
                        let st = sigma_tilde(params);
                        let rule = gauss_legendre(160, st, st + 40.0).unwrap();
                        let (t1, x1, t2, x2) = (tau, xi, -0.3 * tau, 0.4 * xi);

                        let lhs = airy_kernel_ext(-t1, t2, sg + x1, sg + x2, &mu).unwrap();
                        let s1 = AiryFunctionSpec::new(AuxKind::S, l, -t1, x1, sg).unwrap();
                        let s2 = AiryFunctionSpec::new(AuxKind::S, l, t2, x2, sg).unwrap();
                        let inner: f64 = rule
                            .nodes
                            .iter()
                            .zip(&rule.weights)
                            .map(|(&x, &w)| {
                                w * eval_aux(&s1, x, &mu).unwrap() * eval_aux(&s2, x, &mu).unwrap()
                            })
                            .sum();
                        let rhs = (1.0 + (1.0 / l).sqrt()).powf(1.0 / 3.0) * inner;
                        assert!((lhs - rhs).abs() < 1e-7, "Kscalarprod at l={l} sg={sg}: {lhs} vs {rhs}");

                        // mirror identity
                        let lm = 1.0 / l;
                        let sgm = l.powf(2.0 / 3.0) * sg;
                        let t1m = l.powf(1.0 / 3.0) * t1;
                        let t2m = l.powf(1.0 / 3.0) * t2;
                        let x1m = -l.powf(1.0 / 6.0) * x1;
                        let x2m = -l.powf(1.0 / 6.0) * x2;
                        let lhs2 = airy_kernel_ext(-t1m, t2m, sgm + x1m, sgm + x2m, &mu).unwrap();
                        let s1m = AiryFunctionSpec::new(AuxKind::S, lm, -t1m, x1m, sgm).unwrap();
                        let s2m = AiryFunctionSpec::new(AuxKind::S, lm, t2m, x2m, sgm).unwrap();
                        let inner2: f64 = rule
                            .nodes
                            .iter()
                            .zip(&rule.weights)
                            .map(|(&x, &w)| {
                                w * eval_aux(&s1m, x, &mu).unwrap() * eval_aux(&s2m, x, &mu).unwrap()
                            })
                            .sum();
                        let rhs2 = (1.0 + l.sqrt()).powf(1.0 / 3.0) * inner2;
                        assert!((lhs2 - rhs2).abs() < 1e-7, "Kscalarprod2 at l={l} sg={sg}");
                        checked += 1;
                    }
                }
            }
        }
        assert_eq!(checked, 16);
    }

    #[test]
    fn envelope_rejection() {
        assert!(AiryFunctionSpec::new(AuxKind::B, 1.0, 0.0, 61.0, 0.0).is_err());
        let r = mu_rule();
        let spec = AiryFunctionSpec::new(AuxKind::LittleB, 1.0, 17.0, 0.0, 0.0).unwrap();
        assert!(eval_aux(&spec, 0.0, &r).is_err());
    }
}
