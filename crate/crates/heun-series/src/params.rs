//! Heun equation parameters and indicial roots.

use num_complex::Complex64;

use crate::error::Error;
use crate::Result;

/// The six free parameters of the Heun equation.
///
/// `a` is the singularity parameter (never zero), `q` the accessory
/// parameter, and `alpha`, `beta`, `gamma`, `delta` the exponent parameters.
/// The fifth exponent parameter `epsilon` is fixed by the identity
/// `epsilon = alpha + beta - gamma - delta + 1` and is always derived,
/// never stored independently.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeunParameters {
    a: Complex64,
    q: Complex64,
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
    delta: Complex64,
}

impl HeunParameters {
    /// Build a parameter set; rejects `a = 0`, where the series has no solution.
    pub fn new(
        a: impl Into<Complex64>,
        q: impl Into<Complex64>,
        alpha: impl Into<Complex64>,
        beta: impl Into<Complex64>,
        gamma: impl Into<Complex64>,
        delta: impl Into<Complex64>,
    ) -> Result<HeunParameters> {
        let a = a.into();
        if a == Complex64::new(0.0, 0.0) {
            return Err(Error::NoSolutionAtAZero);
        }
        Ok(HeunParameters {
            a,
            q: q.into(),
            alpha: alpha.into(),
            beta: beta.into(),
            gamma: gamma.into(),
            delta: delta.into(),
        })
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn q(&self) -> Complex64 {
        self.q
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    pub fn gamma(&self) -> Complex64 {
        self.gamma
    }

    pub fn delta(&self) -> Complex64 {
        self.delta
    }

    /// Derived exponent parameter `epsilon = alpha + beta - gamma - delta + 1`.
    pub fn epsilon(&self) -> Complex64 {
        self.alpha + self.beta - self.gamma - self.delta + 1.0
    }

    /// The two indicial roots of the series ansatz at `x = 0`: `0` and `1 - gamma`.
    pub fn indicial_roots(&self) -> (IndicialRoot, IndicialRoot) {
        (
            IndicialRoot {
                lambda: Complex64::new(0.0, 0.0),
            },
            IndicialRoot {
                lambda: Complex64::new(1.0, 0.0) - self.gamma,
            },
        )
    }
}

/// Exponent of the leading power in the series ansatz.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndicialRoot {
    lambda: Complex64,
}

impl IndicialRoot {
    pub fn value(&self) -> Complex64 {
        self.lambda
    }
}
