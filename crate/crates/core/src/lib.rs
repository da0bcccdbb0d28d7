//! Numerical toolkit for the asymmetric tacnode process of non-colliding
//! Brownian bridges.
//!
//! The crate evaluates the two-parameter limiting kernel of the process in
//! both of its analytic formulations, computes gap probabilities as Fredholm
//! determinants, evaluates the pre-limit kernel of the finite bridge system
//! by contour quadrature, and cross-validates everything against an exact
//! Monte Carlo sampler of non-colliding bridges.
//!
//! Module map:
//! * [`scaling`] — parameters and the scaling maps tying the finite system
//!   to tacnode coordinates.
//! * [`special`] — Airy functions, the extended Airy function, Gaussian and
//!   conjugated Brownian transition kernels.
//! * [`quad`] — Gauss–Legendre rules, semi-infinite rules, and discretized
//!   complex contours (circles, vertical lines, wedges).
//! * [`airy_ops`] — Airy kernels and the auxiliary B, b, C, S functions and
//!   the T operator kernel.
//! * [`fredholm`] — Nyström discretization, determinants, resolvents, and
//!   the Tracy–Widom F2 distribution.
//! * [`tacnode`] — the limiting kernel in both formulations and multi-time
//!   gap probabilities.
//! * [`finite`] — the finite-system kernel by double contour integrals and
//!   its convergence to the limit.
//! * [`bridges`] — exact rejection sampling of non-colliding Brownian
//!   bridges and empirical gap statistics.

pub mod airy_ops;
pub mod bridges;
pub mod error;
pub mod finite;
pub mod fredholm;
pub mod quad;
pub mod scaling;
pub mod special;
pub mod tacnode;

pub use error::{Error, Result};
pub use scaling::{FiniteSystemConfig, ScaledPoint, TacnodeParams};

#[cfg(test)]
pub(crate) mod test_oracles;
