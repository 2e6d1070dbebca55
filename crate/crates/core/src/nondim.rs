//! Mapping between dimensional and dimensionless parameter sets.
//!
//! The forward map uses the stated definitions
//! `beta = m/sqrt(p)`, `alpha = k m/(u sqrt(p))`, `delta = m/(u sqrt(p))`,
//! `sigma = n/sqrt(p)`, `rho = e n k/(v sqrt(p))`, `mu = d n/(v sqrt(p))`,
//! with `q` and `effort_e` passing through unchanged. Note that the prey and
//! predator equations are rescaled with *different* time scales
//! (`m/(u sqrt p)` vs `n/(v sqrt p)`), which cannot both hold for one coupled
//! system; [`NondimParams`] is therefore the primitive parameterization of
//! the model and this module is a convenience mapping that follows the
//! stated definitions rather than a re-derivation.

use crate::model::{NondimParams, RawParams};
use crate::{Error, Result};

/// Scale factors fixed by a nondimensionalization.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaleRecord {
    /// Population scale `sqrt(p)` applied to both densities.
    pub sqrt_p: f64,
    /// Prey time scale `m_cap / (u sqrt(p))`.
    pub time_scale_prey: f64,
    /// Predator time scale `n_cap / (v sqrt(p))`.
    pub time_scale_pred: f64,
}

/// Anchor values the inverse mapping cannot recover on its own.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Anchors {
    pub u: f64,
    pub v: f64,
    pub p: f64,
}

/// Map dimensional parameters to the dimensionless set.
pub fn to_nondim(raw: &RawParams) -> Result<(NondimParams, ScaleRecord)> {
    raw.validate()?;
    if raw.u <= 0.0 {
        return Err(Error::SingularScaling("u"));
    }
    if raw.v <= 0.0 {
        return Err(Error::SingularScaling("v"));
    }
    // raw.validate() already enforces p > 0
    let sqrt_p = raw.p.sqrt();
    let nd = NondimParams {
        beta: raw.m_cap / sqrt_p,
        alpha: raw.k * raw.m_cap / (raw.u * sqrt_p),
        delta: raw.m_cap / (raw.u * sqrt_p),
        q: raw.q,
        effort_e: raw.effort_e,
        sigma: raw.n_cap / sqrt_p,
        rho: raw.e_conv * raw.n_cap * raw.k / (raw.v * sqrt_p),
        mu: raw.d * raw.n_cap / (raw.v * sqrt_p),
    };
    let scales = ScaleRecord {
        sqrt_p,
        time_scale_prey: raw.m_cap / (raw.u * sqrt_p),
        time_scale_pred: raw.n_cap / (raw.v * sqrt_p),
    };
    Ok((nd, scales))
}

/// Invert [`to_nondim`] given the three anchors the forward map does not
/// determine. `scales.sqrt_p` supplies the population scale; it must be the
/// square root of `anchors.p` for the round trip to close.
pub fn from_nondim(nd: &NondimParams, scales: &ScaleRecord, anchors: &Anchors) -> Result<RawParams> {
    nd.validate()?;
    if !(anchors.u > 0.0) {
        return Err(Error::SingularScaling("u"));
    }
    if !(anchors.v > 0.0) {
        return Err(Error::SingularScaling("v"));
    }
    if !(anchors.p > 0.0) {
        return Err(Error::SingularScaling("p"));
    }
    let sqrt_p = scales.sqrt_p;
    if !(sqrt_p > 0.0) {
        return Err(Error::SingularScaling("sqrt_p"));
    }
    let m_cap = nd.beta * sqrt_p;
    let n_cap = nd.sigma * sqrt_p;
    // alpha = k m / (u sqrt p) and beta = m / sqrt p  =>  k = alpha u / beta
    let k = if nd.alpha == 0.0 { 0.0 } else { nd.alpha * anchors.u / nd.beta };
    // rho = e n k / (v sqrt p)  =>  e = rho v / (sigma k)
    let e_conv = if nd.rho == 0.0 { 0.0 } else { nd.rho * anchors.v / (nd.sigma * k) };
    // mu = d n / (v sqrt p)  =>  d = mu v / sigma
    let d = if nd.mu == 0.0 { 0.0 } else { nd.mu * anchors.v / nd.sigma };
    let raw = RawParams {
        u: anchors.u,
        m_cap,
        k,
        p: anchors.p,
        q: nd.q,
        effort_e: nd.effort_e,
        v: anchors.v,
        n_cap,
        e_conv,
        d,
    };
    raw.validate()?;
    Ok(raw)
}
