//! Partial-sum experiments for the asymptotic and full Heun recurrences.
//!
//! Three summation routes exist for the same generating-function value
//! `1/(1 - Ax - Bx²)` with `A = (1+a)/a`, `B = -1/a`:
//!
//! - [`direct_sum`]: the single power series `Σ d̄_n xⁿ` over the
//!   constant-coefficient recurrence,
//! - [`rect_double_sum`]: the rectangular truncation
//!   `Σ_{n,m<=N} C(n+m,n) x̃ⁿ ỹᵐ` of the double series in `x̃ = Ax`,
//!   `ỹ = Bx²`,
//! - [`diagonal_sum`]: the diagonal regrouping `Σ_r (x̃+ỹ)^r`.
//!
//! Inside the absolute region `|x̃| + |ỹ| < 1` all three agree. Outside it
//! the single series can still converge while the rectangular truncation
//! blows up like `(4|x̃ỹ|)^N`, which is why everything accumulates in
//! [`ScaledReal`] arithmetic.

use num_complex::Complex64;

use crate::error::Error;
use crate::params::HeunParameters;
use crate::recurrence::RecurrenceRule;
use crate::scaled::ScaledReal;
use crate::Result;

/// Rescaled arguments of the double series: `x̃ = A·x`, `ỹ = B·x²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubleSeriesArgs {
    x_tilde: Complex64,
    y_tilde: Complex64,
}

impl DoubleSeriesArgs {
    pub fn new(
        a: impl Into<Complex64>,
        b: impl Into<Complex64>,
        x: impl Into<Complex64>,
    ) -> DoubleSeriesArgs {
        let x = x.into();
        DoubleSeriesArgs {
            x_tilde: a.into() * x,
            y_tilde: b.into() * x * x,
        }
    }

    /// Arguments for the Heun constants `A = (1+a)/a`, `B = -1/a`.
    pub fn from_singularity(a: f64, x: f64) -> Result<DoubleSeriesArgs> {
        if a == 0.0 {
            return Err(Error::NoSolutionAtAZero);
        }
        Ok(DoubleSeriesArgs::new((1.0 + a) / a, -1.0 / a, x))
    }

    pub fn x_tilde(&self) -> Complex64 {
        self.x_tilde
    }

    pub fn y_tilde(&self) -> Complex64 {
        self.y_tilde
    }

    /// `|x̃| + |ỹ|`; below 1 exactly on the absolute-convergence region.
    pub fn abs_sum(&self) -> f64 {
        self.x_tilde.norm() + self.y_tilde.norm()
    }
}

fn heun_constants(a: f64) -> Result<(f64, f64)> {
    if a == 0.0 {
        return Err(Error::NoSolutionAtAZero);
    }
    Ok(((1.0 + a) / a, -1.0 / a))
}

/// `Σ_{n=0}^{N} d̄_n xⁿ` for the asymptotic recurrence
/// `d̄_{n+1} = ((1+a)/a)·d̄_n - (1/a)·d̄_{n-1}`, `d̄_0 = 1`.
///
/// `n_max` is the inclusive upper index: `n_max = 10` sums eleven terms.
pub fn direct_sum(a: f64, x: f64, n_max: u32) -> Result<ScaledReal> {
    let (coeff_a, coeff_b) = heun_constants(a)?;
    let xs = ScaledReal::from(x);
    let mut sum = ScaledReal::ONE; // d̄_0 x⁰
    if n_max == 0 {
        return Ok(sum);
    }
    let mut d_prev = ScaledReal::ONE;
    let mut d_cur = ScaledReal::from(coeff_a); // d̄_1
    let mut x_pow = xs;
    sum = sum + d_cur * x_pow;
    for _ in 1..n_max {
        let d_next = d_cur * coeff_a + d_prev * coeff_b;
        x_pow = x_pow * xs;
        sum = sum + d_next * x_pow;
        d_prev = d_cur;
        d_cur = d_next;
    }
    Ok(sum)
}

/// Rectangular truncation `Σ_{n=0}^{N} Σ_{m=0}^{N} C(n+m,n) x̃ⁿ ỹᵐ` of the
/// double series, in scaled arithmetic.
///
/// Summation order is fixed: outer `n`, inner `m`, each term derived from its
/// left neighbor by `·ỹ·(n+m)/m`. `n_max` is inclusive in both indices.
pub fn rect_double_sum(a: f64, x: f64, n_max: u32) -> Result<ScaledReal> {
    let (coeff_a, coeff_b) = heun_constants(a)?;
    let x_tilde = ScaledReal::from(coeff_a * x);
    let y_tilde = ScaledReal::from(coeff_b * (x * x));
    let mut sum = ScaledReal::ZERO;
    let mut row_start = ScaledReal::ONE; // x̃ⁿ
    for n in 0..=n_max {
        let mut term = row_start;
        sum = sum + term;
        for m in 1..=n_max {
            term = term * y_tilde;
            term = term * ((n + m) as f64);
            term = term / (m as f64);
            sum = sum + term;
        }
        row_start = row_start * x_tilde;
    }
    Ok(sum)
}

/// Diagonal regrouping `Σ_{r=0}^{R} (x̃ + ỹ)^r`.
pub fn diagonal_sum(a: f64, x: f64, r_max: u32) -> Result<ScaledReal> {
    let (coeff_a, coeff_b) = heun_constants(a)?;
    Ok(geometric_partial(coeff_a * x + coeff_b * (x * x), r_max))
}

/// Moduli version of the diagonal regrouping: `Σ_{r=0}^{R} (|x̃| + |ỹ|)^r`.
pub fn abs_diagonal_sum(a: f64, x: f64, r_max: u32) -> Result<ScaledReal> {
    let (coeff_a, coeff_b) = heun_constants(a)?;
    Ok(geometric_partial(
        (coeff_a * x).abs() + (coeff_b * (x * x)).abs(),
        r_max,
    ))
}

fn geometric_partial(base: f64, r_max: u32) -> ScaledReal {
    let base = ScaledReal::from(base);
    let mut sum = ScaledReal::ONE;
    let mut power = ScaledReal::ONE;
    for _ in 1..=r_max {
        power = power * base;
        sum = sum + power;
    }
    sum
}

/// `Σ_{n=0}^{N} d_n x^{n+λ}` for the full Heun recurrence.
pub fn heun_series_sum(
    params: &HeunParameters,
    lambda: impl Into<Complex64>,
    x: impl Into<Complex64>,
    n_max: u32,
) -> Result<Complex64> {
    let lambda = lambda.into();
    let rule = RecurrenceRule::heun(params, lambda)?;
    Ok(series_sum_with_rule(&rule, lambda, x.into(), n_max))
}

/// `x^λ · Σ_{n=0}^{N} d_n xⁿ` for an arbitrary rule (the constant-rule hook
/// reproduces [`direct_sum`] operation for operation).
///
/// `x = 0` needs `λ` to be a nonnegative real integer.
pub fn series_sum_with_rule(
    rule: &RecurrenceRule,
    lambda: Complex64,
    x: Complex64,
    n_max: u32,
) -> Complex64 {
    let zero = Complex64::new(0.0, 0.0);
    if x == zero {
        let integer_lambda = lambda.im == 0.0 && lambda.re >= 0.0 && lambda.re.fract() == 0.0;
        assert!(integer_lambda, "x = 0 requires a nonnegative integer λ");
        // 0^λ kills every term except n = 0 at λ = 0
        return if lambda == zero { Complex64::new(1.0, 0.0) } else { zero };
    }
    let d0 = Complex64::new(1.0, 0.0);
    let mut sum = d0;
    if n_max >= 1 {
        let mut d_prev = d0;
        let mut d_cur = rule.a_n(0) * d0;
        let mut x_pow = x;
        sum += d_cur * x_pow;
        for n in 1..n_max {
            let d_next = rule.a_n(n) * d_cur + rule.b_n(n) * d_prev;
            x_pow *= x;
            sum += d_next * x_pow;
            d_prev = d_cur;
            d_cur = d_next;
        }
    }
    if lambda == zero {
        sum
    } else {
        sum * x.powc(lambda)
    }
}

/// Verdict of [`probe`] over a run of recorded partial sums.
#[derive(Debug, Clone, PartialEq)]
pub enum ProbeVerdict {
    /// The last five partials agree pairwise to relative 1e-12.
    Converged { value: ScaledReal, at_n: u64 },
    /// Magnitudes grow monotonically; `per_step_ratio` estimates `|S_{N+1}|/|S_N|`.
    Diverging { per_step_ratio: f64 },
    Indeterminate,
}

/// Classify a run of partial sums `(N, S_N)` recorded at increasing `N`.
///
/// Converged: the last five values agree pairwise to relative 1e-12 (the last
/// one is reported). Diverging: the last five magnitudes strictly increase
/// and the geometric mean of the successive per-unit-`N` growth rates
/// exceeds 1.01. Anything else is indeterminate. Needs at least eight
/// partials.
pub fn probe(partials: &[(u64, ScaledReal)]) -> Result<ProbeVerdict> {
    if partials.len() < 8 {
        return Err(Error::TooFewPartials {
            got: partials.len(),
        });
    }
    if partials.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err(Error::PartialsNotIncreasing);
    }
    let window = &partials[partials.len() - 5..];

    let agree = |p: ScaledReal, q: ScaledReal| {
        let diff = (p - q).abs();
        let bound = p.abs().max(q.abs()) * 1e-12;
        diff <= bound
    };
    let converged = window
        .iter()
        .flat_map(|p| window.iter().map(move |q| (p.1, q.1)))
        .all(|(p, q)| agree(p, q));
    if converged {
        let (at_n, value) = *window.last().unwrap();
        return Ok(ProbeVerdict::Converged { value, at_n });
    }

    let increasing = window.windows(2).all(|w| w[0].1.abs() < w[1].1.abs());
    if increasing {
        let mean_slope = window
            .windows(2)
            .map(|w| {
                (w[1].1.log2_abs() - w[0].1.log2_abs()) / (w[1].0 - w[0].0) as f64
            })
            .sum::<f64>()
            / (window.len() - 1) as f64;
        let per_step_ratio = mean_slope.exp2();
        if per_step_ratio > 1.01 {
            return Ok(ProbeVerdict::Diverging { per_step_ratio });
        }
    }
    Ok(ProbeVerdict::Indeterminate)
}

/// Partial sums at increasing `N` plus their probe verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct SumReport {
    partials: Vec<(u64, ScaledReal)>,
    verdict: ProbeVerdict,
}

impl SumReport {
    pub fn new(partials: Vec<(u64, ScaledReal)>) -> Result<SumReport> {
        let verdict = probe(&partials)?;
        Ok(SumReport { partials, verdict })
    }

    pub fn partials(&self) -> &[(u64, ScaledReal)] {
        &self.partials
    }

    pub fn verdict(&self) -> &ProbeVerdict {
        &self.verdict
    }

    /// CSV with header `N,value`, values in scientific notation.
    pub fn to_csv(&self, digits: usize) -> String {
        let mut out = String::from("N,value\n");
        for (n, v) in &self.partials {
            out.push_str(&format!("{},{}\n", n, v.to_sci(digits)));
        }
        out
    }
}
