//! Lorentz factors, rapidities and the Wigner rotation angle for a particle
//! moving along y seen by an observer boosted along x.
//!
//! Speeds are dimensionless fractions of c. The speed of light itself is an
//! admissible input: it selects the analytic limits of the angle formulas
//! instead of overflowing the Lorentz factor.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};

/// A speed as a fraction of c, `0 <= beta <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Velocity(f64);

impl Velocity {
    pub const REST: Velocity = Velocity(0.0);
    pub const LIGHT: Velocity = Velocity(1.0);

    pub fn new(beta: f64) -> Result<Self> {
        if !beta.is_finite() {
            return Err(Error::NonFiniteSpeed);
        }
        if !(0.0..=1.0).contains(&beta) {
            return Err(Error::SpeedOutOfRange(beta));
        }
        // normalise -0.0 so equality and formatting behave
        Ok(Velocity(beta + 0.0))
    }

    pub fn beta(self) -> f64 {
        self.0
    }

    pub fn is_light_speed(self) -> bool {
        self.0 == 1.0
    }
}

impl TryFrom<f64> for Velocity {
    type Error = Error;

    fn try_from(beta: f64) -> Result<Self> {
        Velocity::new(beta)
    }
}

/// Lorentz factor, with the light-speed value kept symbolic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gamma {
    Finite(f64),
    Infinite,
}

impl Gamma {
    /// Numeric value; `f64::INFINITY` for the light-speed limit.
    pub fn value(self) -> f64 {
        match self {
            Gamma::Finite(g) => g,
            Gamma::Infinite => f64::INFINITY,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Gamma::Infinite)
    }
}

pub fn gamma(v: Velocity) -> Gamma {
    if v.is_light_speed() {
        return Gamma::Infinite;
    }
    let b = v.beta();
    // (1 - b)(1 + b) keeps its relative accuracy as b -> 1
    Gamma::Finite(1.0 / ((1.0 - b) * (1.0 + b)).sqrt())
}

/// `gamma - 1`, evaluated as `beta^2 gamma^2 / (gamma + 1)` so that it does
/// not cancel at small speeds.
fn gamma_minus_one(v: Velocity, g: f64) -> f64 {
    let b = v.beta();
    b * b * g * g / (g + 1.0)
}

/// `atanh(beta)`. Undefined at the speed of light.
pub fn rapidity(v: Velocity) -> Result<f64> {
    if v.is_light_speed() {
        return Err(Error::InfiniteRapidity);
    }
    Ok(v.beta().atanh())
}

/// Wigner rotation angle for the perpendicular-boost geometry.
///
/// `sin_sq_omega` is the primary quantity; the other fields are derived from
/// it or from the Lorentz factors directly. At the double light-speed limit
/// `sin_sq_omega` is exactly `1/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WignerAngle {
    pub gamma1: Gamma,
    pub gamma2: Gamma,
    pub sin_sq_omega: f64,
    pub sin_omega: f64,
    pub cos_two_omega: f64,
}

impl WignerAngle {
    pub fn cos_sq_omega(&self) -> f64 {
        1.0 - self.sin_sq_omega
    }

    pub fn cos_omega(&self) -> f64 {
        self.cos_sq_omega().sqrt()
    }

    /// Rotation angle in radians, in `[0, pi/4]`.
    pub fn omega(&self) -> f64 {
        self.sin_omega.atan2(self.cos_omega())
    }

    /// `sin(2 omega) = 2 sin(omega) cos(omega)`.
    pub fn sin_two_omega(&self) -> f64 {
        2.0 * self.sin_omega * self.cos_omega()
    }

    pub fn is_light_speed_limit(&self) -> bool {
        self.gamma1.is_infinite() && self.gamma2.is_infinite()
    }
}

pub fn wigner_angle(v1: Velocity, v2: Velocity) -> WignerAngle {
    let gamma1 = gamma(v1);
    let gamma2 = gamma(v2);
    let (sin_sq_omega, cos_two_omega) = match (gamma1, gamma2) {
        (Gamma::Finite(g1), Gamma::Finite(g2)) => {
            let num = gamma_minus_one(v1, g1) * gamma_minus_one(v2, g2);
            let den = 1.0 + g1 * g2;
            // rounding can push the ratio a hair above 1 when both factors are ~1
            (num / (2.0 * den), ((g1 + g2) / den).min(1.0))
        }
        (Gamma::Infinite, Gamma::Finite(g)) | (Gamma::Finite(g), Gamma::Infinite) => {
            let v = if gamma1.is_infinite() { v2 } else { v1 };
            (gamma_minus_one(v, g) / (2.0 * g), 1.0 / g)
        }
        (Gamma::Infinite, Gamma::Infinite) => (0.5, 0.0),
    };
    let sin_omega = if sin_sq_omega == 0.5 {
        FRAC_1_SQRT_2
    } else {
        sin_sq_omega.sqrt()
    };
    WignerAngle {
        gamma1,
        gamma2,
        sin_sq_omega,
        sin_omega,
        cos_two_omega,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn v(beta: f64) -> Velocity {
        Velocity::new(beta).unwrap()
    }

    fn angle_part(w: &WignerAngle) -> [u64; 3] {
        [
            w.sin_sq_omega.to_bits(),
            w.sin_omega.to_bits(),
            w.cos_two_omega.to_bits(),
        ]
    }

    #[test]
    fn velocity_domain() {
        assert!(matches!(
            Velocity::new(-0.1),
            Err(Error::SpeedOutOfRange(_))
        ));
        assert!(matches!(
            Velocity::new(1.0001),
            Err(Error::SpeedOutOfRange(_))
        ));
        assert_eq!(Velocity::new(f64::NAN), Err(Error::NonFiniteSpeed));
        assert_eq!(Velocity::new(f64::INFINITY), Err(Error::NonFiniteSpeed));
        assert!(Velocity::new(1.0).unwrap().is_light_speed());
        assert_eq!(
            Velocity::new(-0.0).unwrap().beta().to_bits(),
            0.0f64.to_bits()
        );
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma(v(0.0)), Gamma::Finite(1.0));
        assert_abs_diff_eq!(gamma(v(3f64.sqrt() / 2.0)).value(), 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(gamma(v(0.6)).value(), 1.25, epsilon = 1e-14);
        assert_eq!(gamma(Velocity::LIGHT), Gamma::Infinite);
        assert_eq!(gamma(Velocity::LIGHT).value(), f64::INFINITY);
    }

    #[test]
    fn rapidity_values() {
        assert_eq!(rapidity(v(0.0)).unwrap(), 0.0);
        assert_abs_diff_eq!(rapidity(v(1f64.tanh())).unwrap(), 1.0, epsilon = 1e-14);
        // ln(4)/2 via 0.5 ln((1 + b)/(1 - b))
        assert_abs_diff_eq!(rapidity(v(0.6)).unwrap(), 0.5 * 4f64.ln(), epsilon = 1e-15);
        assert_eq!(rapidity(Velocity::LIGHT), Err(Error::InfiniteRapidity));
    }

    #[test]
    fn rapidity_matches_gamma() {
        for i in 0..=99 {
            let b = 0.01 * i as f64;
            let eta = rapidity(v(b)).unwrap();
            assert_abs_diff_eq!(gamma(v(b)).value(), eta.cosh(), epsilon = 1e-12);
        }
    }

    #[test]
    fn angle_spot_values() {
        let rest = wigner_angle(Velocity::REST, Velocity::REST);
        assert_eq!(rest.sin_omega, 0.0);
        assert_eq!(rest.cos_two_omega, 1.0);

        let light = wigner_angle(Velocity::LIGHT, Velocity::LIGHT);
        assert_eq!(light.sin_omega, FRAC_1_SQRT_2);
        assert_eq!(light.cos_two_omega, 0.0);
        assert_eq!(light.sin_sq_omega, 0.5);
        assert_abs_diff_eq!(light.omega(), std::f64::consts::FRAC_PI_4, epsilon = 1e-15);

        let b = 3f64.sqrt() / 2.0;
        let w = wigner_angle(v(b), v(b));
        assert_abs_diff_eq!(w.sin_sq_omega, 0.1, epsilon = 1e-12);
        assert_abs_diff_eq!(w.cos_two_omega, 0.8, epsilon = 1e-12);

        let w = wigner_angle(v(0.6), v(0.8));
        assert_abs_diff_eq!(w.cos_two_omega, 35.0 / 37.0, epsilon = 1e-14);
    }

    #[test]
    fn single_light_speed_limit() {
        let w = wigner_angle(Velocity::LIGHT, v(0.6));
        assert_abs_diff_eq!(w.cos_two_omega, 0.8, epsilon = 1e-15);
        assert_abs_diff_eq!(1.0 - 2.0 * w.sin_sq_omega, w.cos_two_omega, epsilon = 1e-15);
        assert_eq!(
            angle_part(&w),
            angle_part(&wigner_angle(v(0.6), Velocity::LIGHT))
        );
        let w = wigner_angle(Velocity::LIGHT, Velocity::REST);
        assert_eq!(w.cos_two_omega, 1.0);
        assert_eq!(w.sin_omega, 0.0);
        // the limit is approached continuously
        let near = wigner_angle(v(1.0 - 1e-12), v(0.6));
        assert_abs_diff_eq!(near.cos_two_omega, 0.8, epsilon = 1e-5);
    }

    #[test]
    fn trig_identity_grid() {
        for i in 0..100 {
            for j in 0..100 {
                let w = wigner_angle(v(0.999 * i as f64 / 99.0), v(0.999 * j as f64 / 99.0));
                assert_abs_diff_eq!(1.0 - 2.0 * w.sin_sq_omega, w.cos_two_omega, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn cos_two_omega_non_increasing() {
        let n = 200;
        for i in 0..=n {
            let mut prev = f64::INFINITY;
            for j in 0..=n {
                let w = wigner_angle(v(i as f64 / n as f64), v(j as f64 / n as f64));
                assert!(w.cos_two_omega <= prev, "i={i} j={j}");
                prev = w.cos_two_omega;
            }
        }
    }

    proptest! {
        #[test]
        fn symmetric_in_speeds(a in 0.0..=1.0f64, b in 0.0..=1.0f64) {
            let (x, y) = (wigner_angle(v(a), v(b)), wigner_angle(v(b), v(a)));
            prop_assert_eq!(angle_part(&x), angle_part(&y));
            prop_assert_eq!((x.gamma1, x.gamma2), (y.gamma2, y.gamma1));
        }

        #[test]
        fn bounded(a in 0.0..=1.0f64, b in 0.0..=1.0f64) {
            let w = wigner_angle(v(a), v(b));
            prop_assert!((0.0..=1.0).contains(&w.cos_two_omega));
            prop_assert!(w.sin_omega >= 0.0 && w.sin_omega <= FRAC_1_SQRT_2);
        }

        #[test]
        fn rest_frame_has_no_rotation(b in 0.0..=1.0f64) {
            prop_assert_eq!(wigner_angle(Velocity::REST, v(b)).sin_omega, 0.0);
            prop_assert_eq!(wigner_angle(v(b), Velocity::REST).sin_omega, 0.0);
        }

        #[test]
        fn gamma_monotone(a in 0.0..0.9999f64, d in 0.0..1e-4f64) {
            prop_assert!(gamma(v(a)).value() <= gamma(v(a + d)).value());
        }
    }
}
