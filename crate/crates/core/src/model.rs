//! Parameter and state types plus the right-hand sides of every model
//! variant: the classic harvested Lotka-Volterra pair, the dimensional
//! logistic/Holling system, and the nondimensional forced system.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Coefficients of the classic Lotka-Volterra pair with a human-harvest term.
///
/// The harvest enters both equations as `n_total - m_harvested` (prey left
/// after human predation), subtracted as a linear loss.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassicParams {
    /// Prey natural growth rate.
    pub a1: f64,
    /// Predation interaction coefficient.
    pub a2: f64,
    /// Predator decline rate.
    pub b1: f64,
    /// Conversion interaction coefficient.
    pub b2: f64,
    /// Total prey count.
    pub n_total: f64,
    /// Prey taken by humans.
    pub m_harvested: f64,
}

impl ClassicParams {
    /// Linear loss coefficient `a3 = b3 = n_total - m_harvested`.
    pub fn harvest_term(&self) -> f64 {
        self.n_total - self.m_harvested
    }

    pub fn validate(&self) -> Result<()> {
        let nonneg = [
            ("a1", self.a1),
            ("a2", self.a2),
            ("b1", self.b1),
            ("b2", self.b2),
            ("n_total", self.n_total),
        ];
        for (name, v) in nonneg {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be finite and >= 0, got {v}"
                )));
            }
        }
        if !self.m_harvested.is_finite()
            || self.m_harvested < 0.0
            || self.m_harvested > self.n_total
        {
            return Err(Error::InvalidParameter(format!(
                "m_harvested must lie in [0, n_total], got {}",
                self.m_harvested
            )));
        }
        Ok(())
    }
}

/// Dimensional coefficients of the logistic/Holling system.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawParams {
    /// Prey growth rate.
    pub u: f64,
    /// Prey carrying capacity.
    pub m_cap: f64,
    /// Maximum predation rate.
    pub k: f64,
    /// Saturation constant (prey units squared).
    pub p: f64,
    /// Catchability.
    pub q: f64,
    /// Harvest effort.
    pub effort_e: f64,
    /// Predator growth rate.
    pub v: f64,
    /// Predator carrying capacity.
    pub n_cap: f64,
    /// Conversion rate.
    pub e_conv: f64,
    /// Predator death rate.
    pub d: f64,
}

impl RawParams {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("u", self.u),
            ("m_cap", self.m_cap),
            ("k", self.k),
            ("p", self.p),
            ("q", self.q),
            ("effort_e", self.effort_e),
            ("v", self.v),
            ("n_cap", self.n_cap),
            ("e_conv", self.e_conv),
            ("d", self.d),
        ];
        for (name, v) in fields {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be finite and >= 0, got {v}"
                )));
            }
        }
        for (name, v) in [("m_cap", self.m_cap), ("n_cap", self.n_cap), ("p", self.p)] {
            if v <= 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be > 0, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// Dimensionless coefficients of the final model.
///
/// `delta`, `q`, and `effort_e` are kept separate (the harvest term is their
/// product) so effort sweeps can vary `effort_e` alone.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NondimParams {
    /// Scaled prey capacity.
    pub beta: f64,
    /// Scaled predation strength.
    pub alpha: f64,
    /// Scaled harvest factor.
    pub delta: f64,
    /// Catchability.
    pub q: f64,
    /// Harvest effort.
    pub effort_e: f64,
    /// Scaled predator capacity.
    pub sigma: f64,
    /// Scaled conversion strength.
    pub rho: f64,
    /// Scaled predator death.
    pub mu: f64,
}

impl NondimParams {
    /// Effective harvest rate `delta * q * effort_e`.
    pub fn harvest(&self) -> f64 {
        self.delta * self.q * self.effort_e
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("beta", self.beta),
            ("alpha", self.alpha),
            ("delta", self.delta),
            ("q", self.q),
            ("effort_e", self.effort_e),
            ("sigma", self.sigma),
            ("rho", self.rho),
            ("mu", self.mu),
        ];
        for (name, v) in fields {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be finite and >= 0, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// Kind of stochastic noise added by the Euler-Maruyama integrator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NoiseKind {
    #[default]
    None,
    /// Independent Gaussian increments, flat spectrum.
    White,
    /// Ornstein-Uhlenbeck process with correlation time `tau`.
    Colored,
}

/// Stochastic noise specification. `intensity` is ignored when `kind` is
/// `None`; `tau` is only meaningful for colored noise.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct NoiseSpec {
    pub kind: NoiseKind,
    pub intensity: f64,
    pub tau: f64,
    pub seed: u64,
}

impl Default for NoiseSpec {
    fn default() -> Self {
        Self { kind: NoiseKind::None, intensity: 0.0, tau: 1.0, seed: 0 }
    }
}

impl NoiseSpec {
    pub fn validate(&self) -> Result<()> {
        if !self.intensity.is_finite() || self.intensity < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "noise intensity must be finite and >= 0, got {}",
                self.intensity
            )));
        }
        if self.kind == NoiseKind::Colored && !(self.tau > 0.0 && self.tau.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "noise tau must be > 0 for colored noise, got {}",
                self.tau
            )));
        }
        Ok(())
    }
}

/// Sinusoidal forcing on both equations plus an optional noise spec.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Disturbance {
    /// Forcing amplitude on the prey equation.
    pub amp_prey: f64,
    /// Forcing amplitude on the predator equation.
    pub amp_pred: f64,
    /// Angular frequency of both forcing terms.
    pub omega: f64,
    /// Phase shift of the predator forcing, in (-pi, pi].
    pub phi: f64,
    #[serde(default)]
    pub noise: NoiseSpec,
}

impl Disturbance {
    /// No forcing, no noise.
    pub fn none() -> Self {
        Self { amp_prey: 0.0, amp_pred: 0.0, omega: 0.0, phi: 0.0, noise: NoiseSpec::default() }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("amp_prey", self.amp_prey),
            ("amp_pred", self.amp_pred),
            ("omega", self.omega),
        ] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be finite and >= 0, got {v}"
                )));
            }
        }
        if !self.phi.is_finite()
            || self.phi <= -std::f64::consts::PI
            || self.phi > std::f64::consts::PI
        {
            return Err(Error::InvalidParameter(format!(
                "phi must lie in (-pi, pi], got {}",
                self.phi
            )));
        }
        self.noise.validate()
    }
}

/// Instantaneous (prey, predator) densities.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct State {
    pub r: f64,
    pub c: f64,
}

impl State {
    pub fn new(r: f64, c: f64) -> Self {
        Self { r, c }
    }

    pub fn is_finite(&self) -> bool {
        self.r.is_finite() && self.c.is_finite()
    }
}

/// Time derivative of a [`State`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Deriv {
    pub dr: f64,
    pub dc: f64,
}

/// Holling functional-response families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HollingKind {
    I,
    II,
    III,
}

/// Consumption rate of a predator at prey density `r`.
///
/// All three kinds vanish at `r = 0` and saturate toward `k`. Only type III
/// (sigmoidal, `k r^2 / (p + r^2)`) appears in the full model.
pub fn holling(kind: HollingKind, k: f64, p: f64, r: f64) -> Result<f64> {
    if !(k.is_finite() && p.is_finite() && r.is_finite()) {
        return Err(Error::NonFiniteInput("holling arguments"));
    }
    if p <= 0.0 {
        return Err(Error::InvalidParameter(format!("saturation p must be > 0, got {p}")));
    }
    if k < 0.0 || r < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "holling needs k >= 0 and r >= 0, got k={k}, r={r}"
        )));
    }
    Ok(match kind {
        HollingKind::I => (k * r / p).min(k),
        HollingKind::II => k * r / (p + r),
        HollingKind::III => k * r * r / (p + r * r),
    })
}

/// Classic harvested Lotka-Volterra field:
/// `dR/dt = a1 R - a2 R C - a3 R`, `dC/dt = -b1 C + b2 R C - b3 C`
/// with `a3 = b3 = n_total - m_harvested`.
pub fn lv_classic_rhs(params: &ClassicParams, s: State) -> Result<Deriv> {
    params.validate()?;
    if !s.is_finite() {
        return Err(Error::NonFiniteInput("state"));
    }
    let h = params.harvest_term();
    Ok(Deriv {
        dr: params.a1 * s.r - params.a2 * s.r * s.c - h * s.r,
        dc: -params.b1 * s.c + params.b2 * s.r * s.c - h * s.c,
    })
}

/// Dimensional field: logistic growth, type-III predation, linear harvest.
pub fn dimensional_rhs(params: &RawParams, s: State) -> Result<Deriv> {
    params.validate()?;
    if !s.is_finite() {
        return Err(Error::NonFiniteInput("state"));
    }
    let response = params.k * s.r * s.r / (params.p + s.r * s.r);
    Ok(Deriv {
        dr: params.u * s.r * (1.0 - s.r / params.m_cap)
            - response * s.c
            - params.q * params.effort_e * s.r,
        dc: params.v * s.c * (1.0 - s.c / params.n_cap) + params.e_conv * response * s.c
            - params.d * s.c,
    })
}

/// Autonomous part of the nondimensional field (no forcing, no noise).
pub(crate) fn autonomous_rates(p: &NondimParams, r: f64, c: f64) -> (f64, f64) {
    let response = r * r / (1.0 + r * r);
    (
        r * (p.beta - r) - p.alpha * response * c - p.harvest() * r,
        c * (p.sigma - c) + p.rho * response * c - p.mu * c,
    )
}

/// Nondimensional forced field. Stochastic noise is *not* part of the
/// deterministic right-hand side; the Euler-Maruyama integrator adds it.
pub fn nondim_rhs(params: &NondimParams, dist: &Disturbance, t: f64, s: State) -> Result<Deriv> {
    params.validate()?;
    dist.validate()?;
    if !t.is_finite() {
        return Err(Error::NonFiniteInput("time"));
    }
    if !s.is_finite() {
        return Err(Error::NonFiniteInput("state"));
    }
    let (ar, ac) = autonomous_rates(params, s.r, s.c);
    Ok(Deriv {
        dr: ar + dist.amp_prey * (dist.omega * t).sin(),
        dc: ac + dist.amp_pred * (dist.omega * t + dist.phi).sin(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn classic(a1: f64, a2: f64, b1: f64, b2: f64, n: f64, m: f64) -> ClassicParams {
        ClassicParams { a1, a2, b1, b2, n_total: n, m_harvested: m }
    }

    #[test]
    fn classic_origin_is_fixed() {
        let p = classic(1.0, 1.0, 1.0, 1.0, 1.0, 1.0);
        let d = lv_classic_rhs(&p, State::new(0.0, 0.0)).unwrap();
        assert_eq!(d, Deriv { dr: 0.0, dc: 0.0 });
    }

    #[test]
    fn classic_coexistence_fixed_point() {
        // unharvested unit system has a fixed point at (1, 1)
        let p = classic(1.0, 1.0, 1.0, 1.0, 1.0, 1.0);
        let d = lv_classic_rhs(&p, State::new(1.0, 1.0)).unwrap();
        assert_eq!(d, Deriv { dr: 0.0, dc: 0.0 });
    }

    #[test]
    fn classic_hand_substitution() {
        // a3 = b3 = 0.25
        let p = classic(2.0, 1.0, 1.0, 0.5, 0.5, 0.25);
        assert_eq!(p.harvest_term(), 0.25);
        let d = lv_classic_rhs(&p, State::new(2.0, 1.0)).unwrap();
        assert_relative_eq!(d.dr, 1.5, max_relative = 1e-15);
        assert_relative_eq!(d.dc, -0.25, max_relative = 1e-15);
    }

    #[test]
    fn classic_full_harvest_reduces_to_unharvested_lv() {
        let harvested = classic(1.3, 0.7, 0.9, 0.4, 5.0, 5.0);
        for &(r, c) in &[(0.0, 0.0), (1.0, 2.0), (3.5, 0.25), (10.0, 10.0)] {
            let d = lv_classic_rhs(&harvested, State::new(r, c)).unwrap();
            assert_eq!(d.dr, 1.3 * r - 0.7 * r * c);
            assert_eq!(d.dc, -0.9 * c + 0.4 * r * c);
        }
    }

    #[test]
    fn classic_rejects_nonfinite_state() {
        let p = classic(1.0, 1.0, 1.0, 1.0, 1.0, 0.0);
        assert!(matches!(
            lv_classic_rhs(&p, State::new(f64::NAN, 0.0)),
            Err(Error::NonFiniteInput(_))
        ));
    }

    #[test]
    fn classic_rejects_overharvest() {
        let p = classic(1.0, 1.0, 1.0, 1.0, 1.0, 2.0);
        assert!(matches!(lv_classic_rhs(&p, State::default()), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn holling_vanishes_at_zero() {
        for kind in [HollingKind::I, HollingKind::II, HollingKind::III] {
            assert_eq!(holling(kind, 1.0, 1.0, 0.0).unwrap(), 0.0);
        }
    }

    #[test]
    fn holling_iii_midpoint() {
        assert_relative_eq!(holling(HollingKind::III, 1.0, 1.0, 1.0).unwrap(), 0.5);
    }

    #[test]
    fn holling_saturates_toward_k() {
        let c = holling(HollingKind::III, 2.0, 4.0, 1e6).unwrap();
        assert!((c - 2.0).abs() <= 1e-10 * 2.0, "got {c}");
        // type I caps exactly at k
        assert_eq!(holling(HollingKind::I, 2.0, 4.0, 1e6).unwrap(), 2.0);
        let c2 = holling(HollingKind::II, 2.0, 4.0, 1e9).unwrap();
        assert!((c2 - 2.0).abs() <= 1e-8);
    }

    #[test]
    fn holling_iii_strictly_increasing() {
        // sampled monotonicity over 1e3 points
        let n = 1000;
        let mut prev = -1.0;
        for i in 0..=n {
            let r = 20.0 * i as f64 / n as f64;
            let v = holling(HollingKind::III, 3.0, 2.0, r).unwrap();
            assert!(v > prev || (i == 0 && v == 0.0), "not increasing at r={r}");
            prev = v;
        }
    }

    #[test]
    fn holling_rejects_bad_saturation() {
        assert!(matches!(
            holling(HollingKind::III, 1.0, 0.0, 1.0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            holling(HollingKind::III, 1.0, -2.0, 1.0),
            Err(Error::InvalidParameter(_))
        ));
    }

    fn raw_unit() -> RawParams {
        RawParams {
            u: 1.0,
            m_cap: 1.0,
            k: 0.0,
            p: 1.0,
            q: 0.0,
            effort_e: 0.0,
            v: 0.0,
            n_cap: 1.0,
            e_conv: 0.0,
            d: 0.0,
        }
    }

    #[test]
    fn dimensional_extinction_fixed_point() {
        let mut p = raw_unit();
        p.k = 1.0;
        p.v = 1.0;
        p.d = 0.5;
        let d = dimensional_rhs(&p, State::new(0.0, 0.0)).unwrap();
        assert_eq!(d, Deriv { dr: 0.0, dc: 0.0 });
    }

    #[test]
    fn dimensional_reduces_to_logistic() {
        // k = 0, qE = 0: prey equation is pure logistic
        let p = raw_unit();
        let d = dimensional_rhs(&p, State::new(0.5, 0.7)).unwrap();
        assert_relative_eq!(d.dr, 0.25, max_relative = 1e-15);
        assert_eq!(d.dc, 0.0);
    }

    #[test]
    fn dimensional_hand_substitution() {
        let p = RawParams {
            u: 1.0,
            m_cap: 2.0,
            k: 1.0,
            p: 1.0,
            q: 1.0,
            effort_e: 0.5,
            v: 1.0,
            n_cap: 2.0,
            e_conv: 1.0,
            d: 0.5,
        };
        let d = dimensional_rhs(&p, State::new(1.0, 1.0)).unwrap();
        assert_relative_eq!(d.dr, -0.5, max_relative = 1e-15);
        assert_relative_eq!(d.dc, 0.5, max_relative = 1e-15);
    }

    fn nd(beta: f64, alpha: f64, sigma: f64, rho: f64, mu: f64) -> NondimParams {
        NondimParams { beta, alpha, delta: 0.0, q: 0.0, effort_e: 0.0, sigma, rho, mu }
    }

    #[test]
    fn nondim_autonomous_origin() {
        let p = nd(0.2, 1.0, 0.1, 0.05, 0.05);
        let d = nondim_rhs(&p, &Disturbance::none(), 3.7, State::new(0.0, 0.0)).unwrap();
        assert_eq!(d, Deriv { dr: 0.0, dc: 0.0 });
    }

    #[test]
    fn nondim_zero_phase_forcing_at_t0() {
        let p = nd(0.2, 1.0, 0.1, 0.05, 0.05);
        let dist = Disturbance { amp_prey: 1.0, amp_pred: 0.0, omega: 2.0, phi: 0.0, ..Disturbance::none() };
        let d = nondim_rhs(&p, &dist, 0.0, State::new(0.0, 0.0)).unwrap();
        assert_eq!(d, Deriv { dr: 0.0, dc: 0.0 });
    }

    #[test]
    fn nondim_hand_substitution() {
        let p = nd(2.0, 1.0, 1.0, 1.0, 0.0);
        let d = nondim_rhs(&p, &Disturbance::none(), 0.0, State::new(1.0, 1.0)).unwrap();
        assert_relative_eq!(d.dr, 0.5, max_relative = 1e-15);
        assert_relative_eq!(d.dc, 0.5, max_relative = 1e-15);
    }

    #[test]
    fn nondim_prey_is_logistic_without_coupling() {
        // alpha = delta = 0 leaves r(beta - r)
        let p = nd(1.4, 0.0, 0.3, 0.2, 0.1);
        for &r in &[0.0, 0.3, 1.0, 2.5] {
            let d = nondim_rhs(&p, &Disturbance::none(), 1.0, State::new(r, 0.8)).unwrap();
            assert_eq!(d.dr, r * (1.4 - r));
        }
    }

    #[test]
    fn nondim_rhs_is_deterministic() {
        let p = nd(0.2, 1.0, 0.1, 0.05, 0.05);
        let dist = Disturbance {
            amp_prey: 1.0,
            amp_pred: 1.0,
            omega: 0.5235987755982988,
            phi: 0.7853981633974483,
            ..Disturbance::none()
        };
        let a = nondim_rhs(&p, &dist, 9.0, State::new(1.25, 0.5)).unwrap();
        let b = nondim_rhs(&p, &dist, 9.0, State::new(1.25, 0.5)).unwrap();
        assert_eq!(a.dr.to_bits(), b.dr.to_bits());
        assert_eq!(a.dc.to_bits(), b.dc.to_bits());
    }

    #[test]
    fn nondim_rejects_nonfinite() {
        let p = nd(0.2, 1.0, 0.1, 0.05, 0.05);
        assert!(matches!(
            nondim_rhs(&p, &Disturbance::none(), f64::INFINITY, State::default()),
            Err(Error::NonFiniteInput(_))
        ));
        assert!(matches!(
            nondim_rhs(&p, &Disturbance::none(), 0.0, State::new(0.0, f64::NAN)),
            Err(Error::NonFiniteInput(_))
        ));
    }

    #[test]
    fn disturbance_phase_bounds() {
        let mut d = Disturbance::none();
        d.phi = std::f64::consts::PI;
        assert!(d.validate().is_ok());
        d.phi = -std::f64::consts::PI;
        assert!(d.validate().is_err());
        d.phi = 4.0;
        assert!(d.validate().is_err());
    }
}
