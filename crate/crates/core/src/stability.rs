//! Linearization of the autonomous nondimensional system: analytic Jacobian,
//! 2x2 eigenvalues via the trace-determinant closed form, and classification
//! of the local phase portrait.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::equilibria::EquilibriumPoint;
use crate::model::{NondimParams, State};
use crate::{Error, Result};

/// Jacobian of the autonomous field at a state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jacobian2 {
    pub j11: f64,
    pub j12: f64,
    pub j21: f64,
    pub j22: f64,
}

impl Jacobian2 {
    pub fn trace(&self) -> f64 {
        self.j11 + self.j22
    }

    pub fn det(&self) -> f64 {
        self.j11 * self.j22 - self.j12 * self.j21
    }

    fn max_abs(&self) -> f64 {
        self.j11.abs().max(self.j12.abs()).max(self.j21.abs()).max(self.j22.abs())
    }
}

/// Local phase-portrait class of a 2D linearization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StabilityClass {
    StableNode,
    UnstableNode,
    Saddle,
    StableFocus,
    UnstableFocus,
    Center,
    Degenerate,
}

impl std::fmt::Display for StabilityClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            StabilityClass::StableNode => "stable-node",
            StabilityClass::UnstableNode => "unstable-node",
            StabilityClass::Saddle => "saddle",
            StabilityClass::StableFocus => "stable-focus",
            StabilityClass::UnstableFocus => "unstable-focus",
            StabilityClass::Center => "center",
            StabilityClass::Degenerate => "degenerate",
        };
        f.write_str(s)
    }
}

/// Eigenvalues and classification of a [`Jacobian2`].
#[derive(Clone, Copy, Debug)]
pub struct StabilityReport {
    pub eigenvalues: (Complex64, Complex64),
    pub trace: f64,
    pub determinant: f64,
    pub discriminant: f64,
    pub class: StabilityClass,
}

/// Analytic Jacobian of the autonomous nondimensional field:
///
/// ```text
/// j11 = beta - 2r - 2 alpha r c / (1 + r^2)^2 - delta q E
/// j12 = -alpha r^2 / (1 + r^2)
/// j21 = 2 rho r c / (1 + r^2)^2
/// j22 = sigma - 2c + rho r^2 / (1 + r^2) - mu
/// ```
///
/// At the origin the off-diagonal entries vanish exactly, leaving
/// `diag(beta - delta q E, sigma - mu)`.
pub fn jacobian(params: &NondimParams, s: State) -> Result<Jacobian2> {
    params.validate()?;
    if !s.is_finite() {
        return Err(Error::NonFiniteInput("state"));
    }
    let (r, c) = (s.r, s.c);
    let denom = 1.0 + r * r;
    let denom2 = denom * denom;
    Ok(Jacobian2 {
        j11: params.beta - 2.0 * r - 2.0 * params.alpha * r * c / denom2 - params.harvest(),
        j12: -params.alpha * r * r / denom,
        j21: 2.0 * params.rho * r * c / denom2,
        j22: params.sigma - 2.0 * c + params.rho * r * r / denom - params.mu,
    })
}

/// Eigenvalues of a 2x2 matrix from trace and determinant, plus the phase
/// portrait class. The larger-magnitude real root is computed first and the
/// second recovered as `det / lambda1` to avoid cancellation.
pub fn eigen2(j: &Jacobian2) -> StabilityReport {
    let t = j.trace();
    let det = j.det();
    let disc = t * t - 4.0 * det;

    let eigenvalues = if disc >= 0.0 {
        let root = disc.sqrt();
        let l1 = if t >= 0.0 { (t + root) / 2.0 } else { (t - root) / 2.0 };
        let l2 = if l1 != 0.0 { det / l1 } else { 0.0 };
        (Complex64::new(l1, 0.0), Complex64::new(l2, 0.0))
    } else {
        let im = (-disc).sqrt() / 2.0;
        (Complex64::new(t / 2.0, im), Complex64::new(t / 2.0, -im))
    };

    // tolerance scaled by matrix magnitude: first order in entries for the
    // trace, second order for determinant and discriminant
    let scale = j.max_abs().max(1.0);
    let tol_t = 1e-9 * scale;
    let tol_q = 1e-9 * scale * scale;

    let class = if det < -tol_q {
        StabilityClass::Saddle
    } else if det <= tol_q {
        StabilityClass::Degenerate
    } else if disc < -tol_q {
        if t.abs() <= tol_t {
            StabilityClass::Center
        } else if t < 0.0 {
            StabilityClass::StableFocus
        } else {
            StabilityClass::UnstableFocus
        }
    } else if t < 0.0 {
        StabilityClass::StableNode
    } else {
        StabilityClass::UnstableNode
    };

    StabilityReport { eigenvalues, trace: t, determinant: det, discriminant: disc, class }
}

/// Linearize the autonomous field at an equilibrium point and classify it.
/// Forced quasi-equilibria are treated the same way: the autonomous Jacobian
/// is evaluated at their coordinates.
pub fn classify_equilibrium(
    params: &NondimParams,
    point: &EquilibriumPoint,
) -> Result<StabilityReport> {
    let j = jacobian(params, State::new(point.r_e, point.c_e))?;
    Ok(eigen2(&j))
}

/// Product-form diagnostics reported alongside the true eigenvalues at a
/// forced equilibrium: the product of the published linearization's diagonal
/// entries and its off-diagonal cross product, with
/// `A = R/(1+R^2)`, `B = R^2/(1+R^2)`, `P = -R`, `K = -C`:
///
/// ```text
/// lambda_prod_1 = (beta + 2P + 2 alpha K (A - B P)) (sigma + 2K + rho B - mu)
/// lambda_prod_2 = -2 alpha B K (A + B P)
/// ```
///
/// These are not the spectrum of a 2x2 matrix in general; they are emitted
/// for comparison with the published quantities only.
pub fn lambda_products(params: &NondimParams, r: f64, c: f64) -> (f64, f64) {
    let denom = 1.0 + r * r;
    let a = r / denom;
    let b = r * r / denom;
    let p = -r;
    let k = -c;
    let l1 = (params.beta + 2.0 * p + 2.0 * params.alpha * k * (a - b * p))
        * (params.sigma + 2.0 * k + params.rho * b - params.mu);
    let l2 = -2.0 * params.alpha * b * k * (a + b * p);
    (l1, l2)
}
