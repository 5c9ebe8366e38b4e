//! Nine symmetry-transformed local solutions from Maier's catalog.
//!
//! Each variant substitutes a transformed singularity parameter `a'` and a
//! Möbius-mapped argument `t(x)` into the absolute-convergence test
//! `|((1+a')/a')·t| + |t²/a'| < 1`, giving a convergence condition in the
//! original `(a, x)`. The transformed Heun parameter sets come from the
//! catalog headers; prefactors such as `(1-x)^{1-δ}` are recorded as
//! descriptions only and never evaluated.
//!
//! Domain restrictions (`a ≠ 1`, `x ≠ a`, `x ≠ 0`) are enforced as errors,
//! not `false` verdicts. For A4 and A5 the printed `a ≠ 1` doubles as the
//! requirement that the transformed `a' = 1-a` (resp. `(a-1)/a`) stays
//! nonzero; for A6 the transformed parameter is `a` itself, so only the
//! argument pole `x = a` is excluded.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::Error;
use crate::params::HeunParameters;
use crate::Result;

/// Identifier of one of the nine encoded local solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MaierVariant {
    A1a,
    A1b,
    A2a,
    A2b,
    A3,
    A4a,
    A4b,
    A5,
    A6,
}

impl MaierVariant {
    pub const ALL: [MaierVariant; 9] = [
        MaierVariant::A1a,
        MaierVariant::A1b,
        MaierVariant::A2a,
        MaierVariant::A2b,
        MaierVariant::A3,
        MaierVariant::A4a,
        MaierVariant::A4b,
        MaierVariant::A5,
        MaierVariant::A6,
    ];

    /// Stable lowercase id used on the command line.
    pub fn id(&self) -> &'static str {
        match self {
            MaierVariant::A1a => "a1a",
            MaierVariant::A1b => "a1b",
            MaierVariant::A2a => "a2a",
            MaierVariant::A2b => "a2b",
            MaierVariant::A3 => "a3",
            MaierVariant::A4a => "a4a",
            MaierVariant::A4b => "a4b",
            MaierVariant::A5 => "a5",
            MaierVariant::A6 => "a6",
        }
    }

    /// Symbolic prefactor multiplying the transformed series (not evaluated).
    pub fn prefactor(&self) -> &'static str {
        match self {
            MaierVariant::A1a => "(1-x)^(1-delta)",
            MaierVariant::A1b => "x^(1-gamma) (1-x)^(1-delta)",
            MaierVariant::A2a => "1",
            MaierVariant::A2b => "(1-x)^(1-delta)",
            MaierVariant::A3 => "x^(-alpha)",
            MaierVariant::A4a => "(1-x/a)^(-beta)",
            MaierVariant::A4b => "(1-x)^(1-delta) (1-x/a)^(-beta+delta-1)",
            MaierVariant::A5 => "x^(-alpha)",
            MaierVariant::A6 => "((x-a)/(1-a))^(-alpha)",
        }
    }

    /// Domain restrictions beyond the global `a ≠ 0`.
    pub fn excluded_points(&self) -> &'static [&'static str] {
        match self {
            MaierVariant::A1a | MaierVariant::A1b | MaierVariant::A3 => &[],
            MaierVariant::A2a | MaierVariant::A2b => &["a ≠ 1"],
            MaierVariant::A4a | MaierVariant::A4b => &["x ≠ a", "a ≠ 1"],
            MaierVariant::A5 => &["a ≠ 1", "x ≠ 0"],
            MaierVariant::A6 => &["x ≠ a"],
        }
    }
}

impl fmt::Display for MaierVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for MaierVariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        MaierVariant::ALL
            .into_iter()
            .find(|v| v.id() == lower)
            .ok_or_else(|| format!("unknown variant id {s:?}"))
    }
}

/// Möbius substitution `t(x) = (p·x + r)/(s·x + u)` feeding the transformed series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArgumentMap {
    description: &'static str,
    num: (Complex64, Complex64),
    den: (Complex64, Complex64),
}

impl ArgumentMap {
    fn new(
        description: &'static str,
        num: (Complex64, Complex64),
        den: (Complex64, Complex64),
    ) -> ArgumentMap {
        ArgumentMap {
            description,
            num,
            den,
        }
    }

    /// Formula of `t` in terms of the original `(a, x)`.
    pub fn description(&self) -> &'static str {
        self.description
    }

    pub fn apply(&self, x: impl Into<Complex64>) -> Complex64 {
        let x = x.into();
        (self.num.0 * x + self.num.1) / (self.den.0 * x + self.den.1)
    }
}

fn check_excluded(
    variant: MaierVariant,
    a: Complex64,
    x: Complex64,
) -> Result<()> {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    for &constraint in variant.excluded_points() {
        let violated = match constraint {
            "a ≠ 1" => a == one,
            "x ≠ a" => x == a,
            "x ≠ 0" => x == zero,
            _ => unreachable!("unknown constraint"),
        };
        if violated {
            return Err(Error::ExcludedPoint {
                variant,
                constraint,
            });
        }
    }
    Ok(())
}

/// Evaluate the variant's convergence condition at `(a, x)`.
///
/// The inequalities are evaluated in their cataloged form (rational functions
/// of the original variables), not by substituting into the base test; the
/// two routes agreeing is a tested invariant.
pub fn maier_condition(
    variant: MaierVariant,
    a: impl Into<Complex64>,
    x: impl Into<Complex64>,
) -> Result<bool> {
    let a = a.into();
    let x = x.into();
    let one = Complex64::new(1.0, 0.0);
    if a == Complex64::new(0.0, 0.0) {
        return Err(Error::NoSolutionAtAZero);
    }
    check_excluded(variant, a, x)?;
    let lhs = match variant {
        MaierVariant::A1a | MaierVariant::A1b => {
            ((one + a) / a * x).norm() + (x * x / a).norm()
        }
        MaierVariant::A2a | MaierVariant::A2b => {
            let t = one - x;
            (t * t / (one - a)).norm() + ((2.0 - a) / (one - a) * t).norm()
        }
        MaierVariant::A3 => (a / (x * x)).norm() + ((one + a) / x).norm(),
        MaierVariant::A4a | MaierVariant::A4b => {
            let d = x - a;
            ((one - a) * x * x / (d * d)).norm() + ((2.0 - a) * x / d).norm()
        }
        MaierVariant::A5 => {
            let t = x - one;
            (a / (one - a) * t * t / (x * x)).norm()
                + ((one - 2.0 * a) / (one - a) * t / x).norm()
        }
        MaierVariant::A6 => {
            let t = x - one;
            let d = x - a;
            (a * t * t / (d * d)).norm() + ((one + a) * t / d).norm()
        }
    };
    Ok(lhs < 1.0)
}

/// Transformed Heun parameters and argument substitution for a variant.
///
/// Returns the `(a', q', α', β', γ', δ')` set read off the catalog header
/// (with its `ε'` re-derived, as always) plus the map `t(x)`. Errors when the
/// transformed `a'` degenerates to zero.
pub fn maier_transformed_params(
    variant: MaierVariant,
    params: &HeunParameters,
) -> Result<(HeunParameters, ArgumentMap)> {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let (a, q) = (params.a(), params.q());
    let (al, be, ga, de) = (
        params.alpha(),
        params.beta(),
        params.gamma(),
        params.delta(),
    );
    let identity = ArgumentMap::new("x", (one, zero), (zero, one));
    let one_minus = ArgumentMap::new("1-x", (-one, one), (zero, one));
    let (a2, q2, al2, be2, ga2, de2, map) = match variant {
        MaierVariant::A1a => (
            a,
            q - (de - one) * ga * a,
            al - de + one,
            be - de + one,
            ga,
            2.0 - de,
            identity,
        ),
        MaierVariant::A1b => (
            a,
            q - (ga + de - 2.0) * a - (ga - one) * params.epsilon(),
            al - ga - de + 2.0,
            be - ga - de + 2.0,
            2.0 - ga,
            2.0 - de,
            identity,
        ),
        MaierVariant::A2a => (one - a, -q + al * be, al, be, de, ga, one_minus),
        MaierVariant::A2b => (
            one - a,
            -q + (de - one) * ga * a + (al - de + one) * (be - de + one),
            al - de + one,
            be - de + one,
            2.0 - de,
            ga,
            one_minus,
        ),
        MaierVariant::A3 => (
            a.finv(),
            (q + al * ((al - ga - de + one) * a - be + de)) / a,
            al,
            al - ga + one,
            al - be + one,
            de,
            ArgumentMap::new("1/x", (zero, one), (one, zero)),
        ),
        MaierVariant::A4a => (
            one - a,
            -q + ga * be,
            -al + ga + de,
            be,
            ga,
            de,
            ArgumentMap::new("(1-a)x/(x-a)", (one - a, zero), (one, -a)),
        ),
        MaierVariant::A4b => (
            one - a,
            -q + ga * ((de - one) * a + be - de + one),
            -al + ga + one,
            be - de + one,
            ga,
            2.0 - de,
            ArgumentMap::new("(1-a)x/(x-a)", (one - a, zero), (one, -a)),
        ),
        MaierVariant::A5 => (
            (a - one) / a,
            (-q + al * (de * a + be - de)) / a,
            al,
            al - ga + one,
            de,
            al - be + one,
            ArgumentMap::new("(x-1)/x", (one, -one), (one, zero)),
        ),
        MaierVariant::A6 => (
            a,
            q - (be - de) * al,
            al,
            -be + ga + de,
            de,
            ga,
            ArgumentMap::new("a(x-1)/(x-a)", (a, -a), (one, -a)),
        ),
    };
    if a2 == zero {
        return Err(Error::TransformedSingularityZero { variant });
    }
    let transformed = HeunParameters::new(a2, q2, al2, be2, ga2, de2)?;
    Ok((transformed, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::abs_test;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn sample_params(a: f64) -> HeunParameters {
        HeunParameters::new(a, 0.4, 1.5, -0.7, 0.9, 1.2).unwrap()
    }

    #[test]
    fn a1_matches_base_test() {
        assert!(maier_condition(MaierVariant::A1a, 0.8, 0.3).unwrap());
        assert!(!maier_condition(MaierVariant::A1a, 0.8, 0.7).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        for _ in 0..10_000 {
            let a = rng.gen_range(-3.0..3.0);
            if a == 0.0 {
                continue;
            }
            let x = rng.gen_range(-2.0..2.0);
            assert_eq!(
                maier_condition(MaierVariant::A1a, a, x).unwrap(),
                abs_test(a, x).unwrap()
            );
            assert_eq!(
                maier_condition(MaierVariant::A1b, a, x).unwrap(),
                abs_test(a, x).unwrap()
            );
        }
    }

    #[test]
    fn vanishing_numerators_give_trivially_true_conditions() {
        // t = 1-x = 0 for A2; both A6 numerators vanish at x = 1
        for a in [0.5, -2.0, 3.0] {
            assert!(maier_condition(MaierVariant::A2a, a, 1.0).unwrap());
        }
        assert!(maier_condition(MaierVariant::A6, 0.8, 1.0).unwrap());
    }

    #[test]
    fn excluded_points_error() {
        let err = maier_condition(MaierVariant::A2a, 1.0, 0.5).unwrap_err();
        assert_eq!(
            err,
            Error::ExcludedPoint {
                variant: MaierVariant::A2a,
                constraint: "a ≠ 1"
            }
        );
        assert!(matches!(
            maier_condition(MaierVariant::A4a, 0.8, 0.8).unwrap_err(),
            Error::ExcludedPoint {
                constraint: "x ≠ a",
                ..
            }
        ));
        assert!(matches!(
            maier_condition(MaierVariant::A4a, 1.0, 0.5).unwrap_err(),
            Error::ExcludedPoint {
                constraint: "a ≠ 1",
                ..
            }
        ));
        assert!(matches!(
            maier_condition(MaierVariant::A5, 0.8, 0.0).unwrap_err(),
            Error::ExcludedPoint {
                constraint: "x ≠ 0",
                ..
            }
        ));
        assert_eq!(
            maier_condition(MaierVariant::A6, 0.0, 0.5).unwrap_err(),
            Error::NoSolutionAtAZero
        );
    }

    #[test]
    fn a3_is_false_near_the_origin_without_exclusion() {
        assert!(!maier_condition(MaierVariant::A3, 0.8, 0.0).unwrap());
        assert!(!maier_condition(MaierVariant::A3, 0.8, 0.5).unwrap());
        // far out the reciprocal argument is small
        assert!(maier_condition(MaierVariant::A3, 0.8, 100.0).unwrap());
    }

    #[test]
    fn transformed_headers_read_off_correctly() {
        let p = sample_params(0.8);
        let (t, map) = maier_transformed_params(MaierVariant::A1a, &p).unwrap();
        assert_eq!(t.a(), c(0.8));
        assert_eq!(t.q(), p.q() - (p.delta() - 1.0) * p.gamma() * p.a());
        assert_eq!(t.alpha(), p.alpha() - p.delta() + 1.0);
        assert_eq!(t.beta(), p.beta() - p.delta() + 1.0);
        assert_eq!(t.gamma(), p.gamma());
        assert_eq!(t.delta(), 2.0 - p.delta());
        assert_eq!(map.apply(0.3), c(0.3));
        assert_eq!(map.description(), "x");

        let (t, map) = maier_transformed_params(MaierVariant::A2a, &p).unwrap();
        assert_eq!(t.a(), 1.0 - p.a());
        assert_eq!(t.q(), -p.q() + p.alpha() * p.beta());
        assert_eq!(
            (t.alpha(), t.beta(), t.gamma(), t.delta()),
            (p.alpha(), p.beta(), p.delta(), p.gamma())
        );
        assert_eq!(map.apply(0.3), c(0.7));

        let (t, map) = maier_transformed_params(MaierVariant::A3, &p).unwrap();
        assert!((t.a() - c(1.25)).norm() < 1e-15);
        assert_eq!(map.apply(0.5), c(2.0));
        assert_eq!(map.description(), "1/x");
    }

    #[test]
    fn transformed_singularity_zero_is_an_error() {
        let p = sample_params(1.0);
        assert_eq!(
            maier_transformed_params(MaierVariant::A2a, &p).unwrap_err(),
            Error::TransformedSingularityZero {
                variant: MaierVariant::A2a
            }
        );
        assert_eq!(
            maier_transformed_params(MaierVariant::A5, &p).unwrap_err(),
            Error::TransformedSingularityZero {
                variant: MaierVariant::A5
            }
        );
        // A6 keeps a' = a, fine at a = 1
        assert!(maier_transformed_params(MaierVariant::A6, &p).is_ok());
    }

    #[test]
    fn conditions_equal_base_test_on_transformed_arguments() {
        let mut rng = ChaCha8Rng::seed_from_u64(67);
        for variant in MaierVariant::ALL {
            let mut checked = 0;
            while checked < 300 {
                let a: f64 = rng.gen_range(-3.0..3.0);
                let x: f64 = rng.gen_range(-2.0..2.0);
                if a == 0.0 || a == 1.0 || x == a || x == 0.0 {
                    continue;
                }
                let params = sample_params(a);
                let (transformed, map) = maier_transformed_params(variant, &params).unwrap();
                let direct = maier_condition(variant, a, x).unwrap();
                let via_base = abs_test(transformed.a(), map.apply(x)).unwrap();
                assert_eq!(direct, via_base, "{variant} at (a={a}, x={x})");
                checked += 1;
            }
        }
    }

    #[test]
    fn a1_region_is_radially_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for _ in 0..200 {
            let a = rng.gen_range(0.2..2.0);
            let r = rng.gen_range(0.0..1.5);
            let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let x = Complex64::from_polar(r, theta);
            assert_eq!(
                maier_condition(MaierVariant::A1a, a, x).unwrap(),
                maier_condition(MaierVariant::A1a, a, r).unwrap()
            );
        }
    }

    #[test]
    fn ids_round_trip() {
        for v in MaierVariant::ALL {
            assert_eq!(v.id().parse::<MaierVariant>().unwrap(), v);
        }
        assert_eq!("A4B".parse::<MaierVariant>().unwrap(), MaierVariant::A4b);
        assert!("a7".parse::<MaierVariant>().is_err());
    }
}
