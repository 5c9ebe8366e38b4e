//! Convergence domains for the series coefficients' recurrence.
//!
//! Two different domains are computed for a point `(a, x)`:
//!
//! - the characteristic-root domain from the Poincaré–Perron asymptotics of
//!   `d_{n+1} = A_n d_n + B_n d_{n-1}`: the roots of `ρ² - Aρ - B` give the
//!   coefficient growth rate, so the series radius is `1/max|ρ|`, which for
//!   the Heun constants `A = (1+a)/a`, `B = -1/a` (roots `{1, 1/a}`) becomes
//!   `min(1, |a|)`;
//! - the absolute-convergence domain `|Ax| + |Bx²| < 1` from the dominating
//!   geometric series of the generating function, strictly smaller for
//!   `a > 0`.
//!
//! The ratio-test helpers reproduce the discrepancy: applied directly to the
//! closed-form coefficients the test recovers the characteristic-root radii,
//! while replacing `A, B` by their moduli recovers the absolute domain
//! everywhere except `a = -1`, where the moduli'd ratio oscillates and no
//! verdict exists.

use num_complex::Complex64;

use crate::error::Error;
use crate::recurrence::{CoefficientSequence, RecurrenceRule};
use crate::Result;

/// Outcome of a ratio-test style convergence check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvergenceVerdict {
    Converges,
    Diverges,
    /// The test limit sits on the unit threshold.
    Boundary,
    /// The ratio has no limit (equimodular roots); the test cannot decide.
    Indeterminate,
}

/// Roots of the characteristic polynomial `ρ² - Aρ - B`, ordered `|rho1| <= |rho2|`.
///
/// Ties are broken by real part, then imaginary part, so equimodular pairs
/// come out in a deterministic order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacteristicRoots {
    pub rho1: Complex64,
    pub rho2: Complex64,
    /// `rho1 = rho2` (within 1e-12 relative).
    pub degenerate: bool,
    /// `|rho1| = |rho2|` but `rho1 != rho2`.
    pub equimodular: bool,
}

fn root_order(p: &Complex64, q: &Complex64) -> std::cmp::Ordering {
    p.norm()
        .partial_cmp(&q.norm())
        .unwrap()
        .then(p.re.partial_cmp(&q.re).unwrap())
        .then(p.im.partial_cmp(&q.im).unwrap())
}

/// Solve `ρ² - Aρ - B = 0`.
pub fn characteristic_roots(
    a: impl Into<Complex64>,
    b: impl Into<Complex64>,
) -> CharacteristicRoots {
    let a = a.into();
    let b = b.into();
    let s = (a * a + 4.0 * b).sqrt();
    let mut rho1 = (a - s) / 2.0;
    let mut rho2 = (a + s) / 2.0;
    if root_order(&rho1, &rho2) == std::cmp::Ordering::Greater {
        std::mem::swap(&mut rho1, &mut rho2);
    }
    let scale = (rho1.norm() + rho2.norm()).max(1.0);
    let degenerate = (rho1 - rho2).norm() <= 1e-12 * scale;
    let equimodular = !degenerate && (rho1.norm() - rho2.norm()).abs() <= 1e-12 * scale;
    CharacteristicRoots {
        rho1,
        rho2,
        degenerate,
        equimodular,
    }
}

/// Special-case markers for a probed singularity parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainStatus {
    Ok,
    /// `a = 0`: the equation degenerates, no series solution exists.
    NoSolutionAZero,
    /// `a = -1`: the moduli'd ratio test oscillates and cannot classify.
    PpIndeterminateAMinusOne,
}

/// Characteristic-root domain for a real `a`: a radius around `x = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PpDomain {
    pub status: DomainStatus,
    /// `min(1, |a|)`; `None` at `a = 0`.
    pub radius: Option<f64>,
}

/// Radius of the characteristic-root (Poincaré–Perron) domain.
///
/// `|a| >= 1` gives radius 1, `0 < |a| < 1` gives radius `|a|`, and `a = 0`
/// has no solution. The `a = -1` entry keeps its radius but is flagged: the
/// moduli'd ratio route cannot certify it.
pub fn pp_domain(a: f64) -> PpDomain {
    if a == 0.0 {
        return PpDomain {
            status: DomainStatus::NoSolutionAZero,
            radius: None,
        };
    }
    let status = if a == -1.0 {
        DomainStatus::PpIndeterminateAMinusOne
    } else {
        DomainStatus::Ok
    };
    PpDomain {
        status,
        radius: Some(a.abs().min(1.0)),
    }
}

/// Absolute-convergence test `|((1+a)/a)·x| + |x²/a| < 1`.
///
/// Errors at `a = 0`. Complex `a` and `x` are accepted.
pub fn abs_test(a: impl Into<Complex64>, x: impl Into<Complex64>) -> Result<bool> {
    let a = a.into();
    if a == Complex64::new(0.0, 0.0) {
        return Err(Error::NoSolutionAtAZero);
    }
    let x = x.into();
    let coeff_a = (Complex64::new(1.0, 0.0) + a) / a;
    Ok((coeff_a * x).norm() + (x * x / a).norm() < 1.0)
}

/// The absolute region of `x` for a real `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AbsRegion {
    /// `a = 0`.
    NoSolution,
    /// `|x| < r`.
    Radius(f64),
    /// `lo < x < hi`; arises for `-1 < a < 0` as `(a, -a)`, so `lo = -hi`.
    Interval { lo: f64, hi: f64 },
}

impl AbsRegion {
    /// Half-width of the region (the interval rows are symmetric).
    pub fn radius(&self) -> Option<f64> {
        match self {
            AbsRegion::NoSolution => None,
            AbsRegion::Radius(r) => Some(*r),
            AbsRegion::Interval { hi, .. } => Some(*hi),
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        match self {
            AbsRegion::NoSolution => false,
            AbsRegion::Radius(r) => x.abs() < *r,
            AbsRegion::Interval { lo, hi } => *lo < x && x < *hi,
        }
    }
}

/// Boundary of the absolute-convergence region for real `a`.
///
/// Solving `|((1+a)/a)|·r + r²/|a| = 1` for the positive root gives
/// `r = (-1-a+sqrt(a²+6a+1))/2` for `a > 0`, the interval `(a, -a)` for
/// `-1 < a < 0`, and radius 1 for `a <= -1`.
pub fn abs_boundary(a: f64) -> AbsRegion {
    if a == 0.0 {
        AbsRegion::NoSolution
    } else if a > 0.0 {
        AbsRegion::Radius((-1.0 - a + (a * a + 6.0 * a + 1.0).sqrt()) / 2.0)
    } else if a > -1.0 {
        AbsRegion::Interval { lo: a, hi: -a }
    } else {
        AbsRegion::Radius(1.0)
    }
}

/// Classification of a probed real point `(a, x)` against both domains.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainVerdict {
    pub a: f64,
    pub x: f64,
    pub status: DomainStatus,
    /// Inside the characteristic-root domain.
    pub in_pp: bool,
    /// Inside the absolute-convergence domain.
    pub in_abs: bool,
    pub pp_radius: Option<f64>,
    pub abs_bound: AbsRegion,
}

impl DomainVerdict {
    pub fn classify(a: f64, x: f64) -> DomainVerdict {
        let pp = pp_domain(a);
        let abs_bound = abs_boundary(a);
        DomainVerdict {
            a,
            x,
            status: pp.status,
            in_pp: pp.radius.is_some_and(|r| x.abs() < r),
            in_abs: abs_bound.contains(x),
            pp_radius: pp.radius,
            abs_bound,
        }
    }
}

/// Ratio-test limit `L = lim |d_{n+1}/d_n|·|x|` for the constant recurrence.
///
/// The closed-form coefficients make the limit `max(|ρ₁|,|ρ₂|)·|x|` whenever
/// the root moduli differ, `|A/2|·|x|` for a double root, and nonexistent for
/// distinct equimodular roots (`Indeterminate`). With `use_moduli` the
/// coefficients are first replaced by their absolute values `|A|, |B|`, the
/// revision that recovers the absolute-convergence radii; the `a = -1`
/// constants `|A| = 0, |B| = 1` then hit the oscillating case.
pub fn ratio_test_limit(
    a: impl Into<Complex64>,
    b: impl Into<Complex64>,
    x: impl Into<Complex64>,
    use_moduli: bool,
) -> ConvergenceVerdict {
    let mut a = a.into();
    let mut b = b.into();
    if use_moduli {
        a = Complex64::new(a.norm(), 0.0);
        b = Complex64::new(b.norm(), 0.0);
    }
    let x_mod = x.into().norm();
    let disc = a * a + 4.0 * b;
    let disc_scale = (a.norm() * a.norm() + 4.0 * b.norm()).max(1.0);
    let limit = if disc.norm() <= 1e-12 * disc_scale {
        // coincident roots: the ratio tends to |A/2|
        a.norm() / 2.0 * x_mod
    } else {
        let s = disc.sqrt();
        let hi = (a + s).norm() / 2.0;
        let lo = (a - s).norm() / 2.0;
        let scale = (hi + lo).max(1.0);
        if (hi - lo).abs() <= 1e-12 * scale {
            // equimodular distinct roots: |d_{n+1}/d_n| oscillates forever
            return ConvergenceVerdict::Indeterminate;
        }
        hi.max(lo) * x_mod
    };
    if (limit - 1.0).abs() <= 1e-12 {
        ConvergenceVerdict::Boundary
    } else if limit < 1.0 {
        ConvergenceVerdict::Converges
    } else {
        ConvergenceVerdict::Diverges
    }
}

/// Horner evaluation of the monic polynomial `ρ^k + m₁ρ^{k-1} + … + m_k`.
fn eval_monic(moduli: &[f64], z: Complex64) -> Complex64 {
    let mut p = Complex64::new(1.0, 0.0);
    for m in moduli {
        p = p * z + m;
    }
    p
}

/// Roots of the revised characteristic polynomial
/// `ρ^k + |α₁|ρ^{k-1} + … + |α_k| = 0`.
///
/// Takes the coefficient list `(α₁, …, α_k)`, replaces each by its modulus,
/// and returns all `k` roots sorted by modulus (ties by real, then imaginary
/// part). Durand–Kerner iteration; every returned root has residual below
/// `1e-10 · max|coefficient|`.
pub fn revised_characteristic(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    if coeffs.is_empty() {
        return Err(Error::DegreeZero);
    }
    let moduli: Vec<f64> = coeffs.iter().map(|c| c.abs()).collect();
    let k = moduli.len();
    if k == 1 {
        return Ok(vec![Complex64::new(-moduli[0], 0.0)]);
    }
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..k).map(|i| seed.powu(i as u32 + 1)).collect();
    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for i in 0..k {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..k {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval_monic(&moduli, roots[i]) / denom;
            roots[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-15 {
            break;
        }
    }
    let tol = 1e-10 * moduli.iter().cloned().fold(1.0f64, f64::max);
    if roots.iter().any(|r| eval_monic(&moduli, *r).norm() > tol) {
        return Err(Error::RootFindingFailed);
    }
    roots.sort_by(root_order);
    Ok(roots)
}

/// Ratio-test verdict for the hypergeometric series with parameters `(a, b; c)`.
///
/// The term ratio `|(n+a)(n+b)/((n+c)(n+1))| → 1`, so the verdict depends on
/// `|x|` alone. Errors when `c` is zero or a negative integer (coefficient
/// poles).
pub fn hypergeom_ratio_limit(
    a: f64,
    b: f64,
    c: f64,
    x: impl Into<Complex64>,
) -> Result<ConvergenceVerdict> {
    debug_assert!(a.is_finite() && b.is_finite());
    if c <= 0.0 && c.fract() == 0.0 {
        return Err(Error::PoleOfCoefficients { c });
    }
    let limit = x.into().norm();
    Ok(if (limit - 1.0).abs() <= 1e-12 {
        ConvergenceVerdict::Boundary
    } else if limit < 1.0 {
        ConvergenceVerdict::Converges
    } else {
        ConvergenceVerdict::Diverges
    })
}

/// Default slack for [`dominating_bound`].
pub const DEFAULT_DOMINATING_EPS: f64 = 0.5;

/// Verify the dominating-series inequality on a generated sequence.
///
/// Premise: `|Ā_n|, |B̄_n| < 1+eps` for every `n` from `start` to the end of
/// the sequence (violations are an error naming the first bad index). With
/// `Ã = (1+eps)A`, `B̃ = (1+eps)B` and `c_j` the constant-recurrence sequence
/// on `(|Ã|, |B̃|)` seeded `c₀ = 1`, `c₁ = |Ã|`, checks
///
/// `|d_{start+j}| <= c_j·|d_start| + c_{j-1}·|B̃|·|d_{start-1}|`
///
/// for every `j` the sequence covers; true iff all hold.
pub fn dominating_bound(
    rule: &RecurrenceRule,
    seq: &CoefficientSequence,
    start: usize,
    eps: f64,
) -> Result<bool> {
    let len = seq.len();
    if start < 1 || start >= len {
        return Err(Error::IndexOutOfRange { n: start, len });
    }
    let bound = 1.0 + eps;
    for n in start..len {
        let n32 = n as u32;
        if rule.a_bar(n32).norm() >= bound || rule.b_bar(n32).norm() >= bound {
            return Err(Error::PremiseViolation { n: n32 });
        }
    }
    let a_tilde = bound * rule.asymptotic_a().norm();
    let b_tilde = bound * rule.asymptotic_b().norm();
    let d_start = seq.terms()[start].norm();
    let d_before = seq.terms()[start - 1].norm();
    let (mut c_prev, mut c_cur) = (1.0f64, a_tilde);
    for j in 1..(len - start) {
        let lhs = seq.terms()[start + j].norm();
        let rhs = c_cur * d_start + c_prev * b_tilde * d_before;
        if lhs > rhs {
            return Ok(false);
        }
        let next = a_tilde * c_cur + b_tilde * c_prev;
        c_prev = c_cur;
        c_cur = next;
    }
    Ok(true)
}

/// Per-cell classification of a region scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellClass {
    /// Outside both domains.
    Outside,
    /// Inside the characteristic-root domain only.
    PpOnly,
    /// Inside both domains.
    Both,
    /// `a = 0` (no solution) or `a = -1` (ratio-route indeterminate) touches the cell.
    Undefined,
}

impl CellClass {
    /// Stable serialization code: outside=0, pp_only=1, both=2, undefined=3.
    pub fn code(&self) -> u8 {
        match self {
            CellClass::Outside => 0,
            CellClass::PpOnly => 1,
            CellClass::Both => 2,
            CellClass::Undefined => 3,
        }
    }
}

/// Rectangular raster of cell classifications over the `(a, x)` plane.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionGrid {
    a_min: f64,
    x_min: f64,
    step_a: f64,
    step_x: f64,
    a_centers: Vec<f64>,
    x_centers: Vec<f64>,
    /// Row-major over `a` then `x`: `cells[ia * x_centers.len() + ix]`.
    cells: Vec<CellClass>,
}

impl RegionGrid {
    pub fn a_centers(&self) -> &[f64] {
        &self.a_centers
    }

    pub fn x_centers(&self) -> &[f64] {
        &self.x_centers
    }

    pub fn cells(&self) -> &[CellClass] {
        &self.cells
    }

    pub fn class_at(&self, ia: usize, ix: usize) -> CellClass {
        self.cells[ia * self.x_centers.len() + ix]
    }

    /// Class of the cell containing `(a, x)`, if inside the scanned rectangle.
    pub fn class_at_point(&self, a: f64, x: f64) -> Option<CellClass> {
        let ia = ((a - self.a_min) / self.step_a).floor();
        let ix = ((x - self.x_min) / self.step_x).floor();
        if ia < 0.0 || ix < 0.0 {
            return None;
        }
        let (ia, ix) = (ia as usize, ix as usize);
        if ia >= self.a_centers.len() || ix >= self.x_centers.len() {
            return None;
        }
        Some(self.class_at(ia, ix))
    }

    /// CSV with header `a,x,class`, one row per cell, `a`-major.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("a,x,class\n");
        for (ia, a) in self.a_centers.iter().enumerate() {
            for (ix, x) in self.x_centers.iter().enumerate() {
                out.push_str(&format!("{},{},{}\n", a, x, self.class_at(ia, ix).code()));
            }
        }
        out
    }

    /// JSON object `{"a": […], "x": […], "class": […]}` with row-major codes.
    pub fn to_json(&self) -> String {
        let join = |vals: &[f64]| {
            vals.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let classes = self
            .cells
            .iter()
            .map(|c| c.code().to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!(
            "{{\"a\":[{}],\"x\":[{}],\"class\":[{}]}}",
            join(&self.a_centers),
            join(&self.x_centers),
            classes
        )
    }
}

/// Classify a rectangle of `(a, x)` cells by center-of-cell sampling.
///
/// A cell straddling (or touching) `a = 0` or `a = -1` is `Undefined`; other
/// cells classify their center point: absolute domain implies `Both`,
/// characteristic-root domain alone `PpOnly`, otherwise `Outside`.
pub fn region_scan(
    a_min: f64,
    a_max: f64,
    x_min: f64,
    x_max: f64,
    res_a: usize,
    res_x: usize,
) -> RegionGrid {
    assert!(res_a > 0 && res_x > 0, "resolutions must be positive");
    assert!(a_min < a_max && x_min < x_max, "bounds must be ordered");
    let step_a = (a_max - a_min) / res_a as f64;
    let step_x = (x_max - x_min) / res_x as f64;
    let a_centers: Vec<f64> = (0..res_a)
        .map(|i| a_min + (i as f64 + 0.5) * step_a)
        .collect();
    let x_centers: Vec<f64> = (0..res_x)
        .map(|j| x_min + (j as f64 + 0.5) * step_x)
        .collect();
    let mut cells = Vec::with_capacity(res_a * res_x);
    for (i, &a) in a_centers.iter().enumerate() {
        let a_lo = a_min + i as f64 * step_a;
        let a_hi = a_min + (i + 1) as f64 * step_a;
        let undefined = (a_lo <= 0.0 && 0.0 <= a_hi) || (a_lo <= -1.0 && -1.0 <= a_hi);
        for &x in &x_centers {
            if undefined {
                cells.push(CellClass::Undefined);
                continue;
            }
            let verdict = DomainVerdict::classify(a, x);
            cells.push(match (verdict.in_abs, verdict.in_pp) {
                (true, _) => CellClass::Both,
                (false, true) => CellClass::PpOnly,
                (false, false) => CellClass::Outside,
            });
        }
    }
    RegionGrid {
        a_min,
        x_min,
        step_a,
        step_x,
        a_centers,
        x_centers,
        cells,
    }
}
