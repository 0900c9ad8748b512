//! Model parameters of the coupled anharmonic pair, in wavenumber units.

use crate::error::{Error, Result};

/// Harmonic frequency, anharmonicity, and bilinear coupling strength of the
/// oscillator pair, all in cm^-1.
///
/// The governing Hamiltonian is
///
/// ```text
/// H = (omega - gamma/2) (n_a + n_b) - (gamma/2) (n_a^2 + n_b^2)
///     - epsilon (a^dag b + a b^dag)
/// ```
///
/// with `n_a = a^dag a`, `n_b = b^dag b`. The coupling conserves the total
/// quantum number, which is what makes the fixed-total blocks exact.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelParams {
    /// Harmonic frequency omega (cm^-1), > 0.
    pub omega: f64,
    /// Anharmonicity gamma (cm^-1), >= 0.
    pub gamma: f64,
    /// Bilinear coupling epsilon (cm^-1), >= 0.
    pub epsilon: f64,
}

impl ModelParams {
    /// Validated constructor: omega > 0, gamma >= 0, epsilon >= 0, all finite.
    pub fn new(omega: f64, gamma: f64, epsilon: f64) -> Result<Self> {
        if !omega.is_finite() || !gamma.is_finite() || !epsilon.is_finite() {
            return Err(Error::BadParams(format!(
                "omega={omega}, gamma={gamma}, epsilon={epsilon} must all be finite"
            )));
        }
        if omega <= 0.0 {
            return Err(Error::BadParams(format!("omega={omega} must be > 0")));
        }
        if gamma < 0.0 {
            return Err(Error::BadParams(format!("gamma={gamma} must be >= 0")));
        }
        if epsilon < 0.0 {
            return Err(Error::BadParams(format!("epsilon={epsilon} must be >= 0")));
        }
        Ok(Self {
            omega,
            gamma,
            epsilon,
        })
    }

    /// Representative C-H stretch values used throughout the examples and
    /// defaults: omega = 3050, gamma = 125, epsilon = 30 cm^-1.
    pub fn representative() -> Self {
        Self {
            omega: 3050.0,
            gamma: 125.0,
            epsilon: 30.0,
        }
    }

    /// C-H local-mode constants of dichloromethane (CCl2H2).
    pub fn dichloromethane() -> Self {
        Self {
            omega: 3020.1,
            gamma: 127.44,
            epsilon: 29.54,
        }
    }

    /// C-H local-mode constants of dibromomethane (CBr2H2).
    pub fn dibromomethane() -> Self {
        Self {
            omega: 3026.8,
            gamma: 125.45,
            epsilon: 32.80,
        }
    }

    /// C-H local-mode constants of diiodomethane (CI2H2).
    pub fn diiodomethane() -> Self {
        Self {
            omega: 3068.7,
            gamma: 124.25,
            epsilon: 33.69,
        }
    }
}

impl Default for ModelParams {
    fn default() -> Self {
        Self::representative()
    }
}
