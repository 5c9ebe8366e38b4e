//! Three-term recurrences for series coefficients.
//!
//! The Heun series ansatz `y(x) = Σ d_n x^{n+λ}` turns the differential
//! equation into `d_{n+1} = A_n d_n + B_n d_{n-1}` with `d_1 = A_0 d_0`.
//! The coefficient functions factor as `A_n = A·Ā_n`, `B_n = B·B̄_n` with
//! constants `A = (1+a)/a`, `B = -1/a` and rational functions `Ā_n, B̄_n → 1`.
//! Constant-coefficient rules cover the asymptotic recurrence and the
//! generating-function sequence `c_{n+1} = A c_n + B c_{n-1}`.

use num_complex::Complex64;

use crate::error::Error;
use crate::params::HeunParameters;
use crate::Result;

/// A three-term recurrence rule `d_{n+1} = A_n d_n + B_n d_{n-1}`.
#[derive(Debug, Clone, PartialEq)]
pub enum RecurrenceRule {
    /// Constant coefficients: `A_n = A`, `B_n = B` for every `n`.
    Constant { a: Complex64, b: Complex64 },
    /// The full Heun rule for a parameter set and indicial exponent.
    Heun {
        params: HeunParameters,
        lambda: Complex64,
    },
}

/// `z` as a nonnegative integer index, if it is exactly one.
fn as_index(z: Complex64) -> Option<u32> {
    if z.im == 0.0 && z.re >= 0.0 && z.re.fract() == 0.0 && z.re <= u32::MAX as f64 {
        Some(z.re as u32)
    } else {
        None
    }
}

impl RecurrenceRule {
    /// Constant-coefficient rule with `A_n = a`, `B_n = b`.
    pub fn constant(a: impl Into<Complex64>, b: impl Into<Complex64>) -> RecurrenceRule {
        RecurrenceRule::Constant {
            a: a.into(),
            b: b.into(),
        }
    }

    /// The Heun recurrence for `params` at indicial exponent `lambda`.
    ///
    /// Any `lambda` is accepted, but non-generic `(gamma, lambda)` can put a
    /// zero of the shared denominator `(n+1+λ)(γ+n+λ)` at a nonnegative
    /// integer; that is rejected here with the offending index.
    pub fn heun(params: &HeunParameters, lambda: impl Into<Complex64>) -> Result<RecurrenceRule> {
        let lambda = lambda.into();
        let one = Complex64::new(1.0, 0.0);
        let pole = [-(one + lambda), -(params.gamma() + lambda)]
            .into_iter()
            .filter_map(as_index)
            .min();
        if let Some(n) = pole {
            return Err(Error::PoleInRecurrence { n });
        }
        Ok(RecurrenceRule::Heun {
            params: *params,
            lambda,
        })
    }

    /// Limit `A` of `A_n`: the constant itself, or `(1+a)/a` for the Heun rule.
    pub fn asymptotic_a(&self) -> Complex64 {
        match self {
            RecurrenceRule::Constant { a, .. } => *a,
            RecurrenceRule::Heun { params, .. } => {
                (Complex64::new(1.0, 0.0) + params.a()) / params.a()
            }
        }
    }

    /// Limit `B` of `B_n`: the constant itself, or `-1/a` for the Heun rule.
    pub fn asymptotic_b(&self) -> Complex64 {
        match self {
            RecurrenceRule::Constant { b, .. } => *b,
            RecurrenceRule::Heun { params, .. } => -params.a().finv(),
        }
    }

    /// Shared denominator `(n+1+λ)(γ+n+λ)` of the Heun coefficient functions.
    fn heun_denominator(params: &HeunParameters, lambda: Complex64, n: f64) -> Complex64 {
        (n + 1.0 + lambda) * (params.gamma() + n + lambda)
    }

    /// Coefficient `A_n`.
    pub fn a_n(&self, n: u32) -> Complex64 {
        match self {
            RecurrenceRule::Constant { a, .. } => *a,
            RecurrenceRule::Heun { params, lambda } => {
                // (1+a)·Ā_n folded into one ratio so a = -1 stays finite
                let nf = n as f64;
                let a = params.a();
                let l = *lambda;
                let exp_sum = params.alpha() + params.beta() - params.delta();
                let gd = params.gamma() + params.delta() - 1.0;
                let num = (1.0 + a) * nf * nf
                    + (exp_sum + 2.0 * l + a * (gd + 2.0 * l)) * nf
                    + l * (exp_sum + l + a * (gd + l))
                    + params.q();
                num / (a * Self::heun_denominator(params, l, nf))
            }
        }
    }

    /// Coefficient `B_n`.
    pub fn b_n(&self, n: u32) -> Complex64 {
        match self {
            RecurrenceRule::Constant { b, .. } => *b,
            RecurrenceRule::Heun { .. } => self.asymptotic_b() * self.b_bar(n),
        }
    }

    /// Normalized coefficient `Ā_n = A_n / A`; tends to 1.
    ///
    /// Undefined when the limit `A` vanishes (Heun rule at `a = -1`).
    pub fn a_bar(&self, n: u32) -> Complex64 {
        match self {
            RecurrenceRule::Constant { .. } => Complex64::new(1.0, 0.0),
            RecurrenceRule::Heun { .. } => self.a_n(n) / self.asymptotic_a(),
        }
    }

    /// Normalized coefficient `B̄_n = B_n / B`; tends to 1.
    pub fn b_bar(&self, n: u32) -> Complex64 {
        match self {
            RecurrenceRule::Constant { .. } => Complex64::new(1.0, 0.0),
            RecurrenceRule::Heun { params, lambda } => {
                let nf = n as f64;
                let l = *lambda;
                let num = nf * nf
                    + (params.alpha() + params.beta() - 2.0 + 2.0 * l) * nf
                    + (params.alpha() - 1.0 + l) * (params.beta() - 1.0 + l);
                num / Self::heun_denominator(params, l, nf)
            }
        }
    }

    /// Generate `d_0 … d_{n_max}` with the default seed `d_0 = 1`.
    pub fn coefficients(&self, n_max: usize) -> CoefficientSequence {
        self.coefficients_seeded(n_max, Complex64::new(1.0, 0.0))
    }

    /// Generate `d_0 … d_{n_max}` from a caller-supplied nonzero `d_0`.
    pub fn coefficients_seeded(&self, n_max: usize, d0: Complex64) -> CoefficientSequence {
        assert!(d0 != Complex64::new(0.0, 0.0), "seed d_0 must be nonzero");
        let mut terms = Vec::with_capacity(n_max + 1);
        terms.push(d0);
        if n_max >= 1 {
            terms.push(self.a_n(0) * d0);
        }
        for n in 1..n_max {
            let next = self.a_n(n as u32) * terms[n] + self.b_n(n as u32) * terms[n - 1];
            terms.push(next);
        }
        CoefficientSequence {
            terms,
            rule: self.clone(),
        }
    }
}

/// A generated coefficient stream `d_0 … d_N` together with its rule.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSequence {
    terms: Vec<Complex64>,
    rule: RecurrenceRule,
}

impl CoefficientSequence {
    pub fn terms(&self) -> &[Complex64] {
        &self.terms
    }

    pub fn rule(&self) -> &RecurrenceRule {
        &self.rule
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Closed-form term of the constant recurrence seeded `c_0 = 1`, `c_1 = A`:
///
/// `c_n = [(A+s)^{n+1} - (A-s)^{n+1}] / (2^{n+1} s)` with `s = sqrt(A^2+4B)`.
///
/// When `A^2 + 4B = 0` the expression is 0/0 and the analytic limit
/// `(n+1)(A/2)^n` is returned instead.
pub fn closed_form_term(
    a: impl Into<Complex64>,
    b: impl Into<Complex64>,
    n: u32,
) -> Complex64 {
    let a = a.into();
    let b = b.into();
    let disc = a * a + 4.0 * b;
    let half_a = a / 2.0;
    if disc == Complex64::new(0.0, 0.0) {
        return (n as f64 + 1.0) * half_a.powu(n);
    }
    let s = disc.sqrt();
    let root_hi = (a + s) / 2.0;
    let root_lo = (a - s) / 2.0;
    (root_hi.powu(n + 1) - root_lo.powu(n + 1)) / s
}

/// Generating function of the constant recurrence: `1 / (1 - Ax - Bx^2)`.
///
/// Errors when `1 - Ax - Bx^2 = 0`.
pub fn generating_value(
    a: impl Into<Complex64>,
    b: impl Into<Complex64>,
    x: impl Into<Complex64>,
) -> Result<Complex64> {
    let x = x.into();
    let denom = Complex64::new(1.0, 0.0) - a.into() * x - b.into() * x * x;
    if denom == Complex64::new(0.0, 0.0) {
        return Err(Error::GeneratingFunctionPole);
    }
    Ok(denom.finv())
}
