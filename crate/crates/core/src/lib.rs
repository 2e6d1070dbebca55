//! Predator-prey dynamics with human harvesting, periodic forcing, optional
//! stochastic noise, and 2D diffusion.
//!
//! The model family starts from the classic Lotka-Volterra pair, adds a
//! harvest term and a Holling type-III functional response, and is usually
//! worked with in nondimensional form:
//!
//! ```text
//! dr/dt = r(beta - r) - alpha r^2 c / (1 + r^2) - delta q E r + A sin(omega t)
//! dc/dt = c(sigma - c) + rho  r^2 c / (1 + r^2) - mu c       + Abar sin(omega t + phi)
//! ```
//!
//! plus optional `D1 lap(r)` / `D2 lap(c)` diffusion terms on a 2D grid.
//!
//! Module map:
//! - [`model`]: parameter/state types and right-hand sides of every variant
//! - [`nondim`]: dimensional -> dimensionless parameter mapping and back
//! - [`equilibria`]: closed-form and numerically found balance points
//! - [`stability`]: analytic Jacobian, 2x2 eigenvalues, classification
//! - [`integrate`]: RK4, embedded adaptive pair, Euler-Maruyama with noise
//! - [`spatial`]: explicit reaction-diffusion stepping, zero-flux boundaries
//! - [`analysis`]: dominant period, phase lag, windowed statistics
//! - [`io`]: TOML config, CSV trajectories, SVG plots, PGM snapshots

pub mod analysis;
pub mod equilibria;
mod error;
pub mod integrate;
pub mod io;
pub mod model;
pub mod nondim;
pub mod spatial;
pub mod stability;

pub use error::{Error, Result};
