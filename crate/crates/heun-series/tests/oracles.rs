//! Exact-rational reference path for the summation routines.
//!
//! Everything here recomputes the partial sums in `BigRational` arithmetic,
//! fully independent of the scaled-float implementation, and pins both the
//! frozen decimal values and the float path against it. A twelve-digit
//! decimal string like `2.285559427400` is treated as the exact rational
//! `2285559427400 / 10^12` and the oracle must sit within half an ulp of it.

use heun_series::{abs_diagonal_sum, diagonal_sum, direct_sum, rect_double_sum, ScaledReal};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse `d+.d+` into an exact rational.
fn decimal(s: &str) -> BigRational {
    let (int_part, frac_part) = s.split_once('.').unwrap();
    let scale = BigInt::from(10).pow(frac_part.len() as u32);
    let digits: BigInt = format!("{int_part}{frac_part}").parse().unwrap();
    BigRational::new(digits, scale)
}

/// Half an ulp at the last printed decimal digit.
fn half_ulp(printed: &str) -> BigRational {
    let frac_len = printed.split_once('.').unwrap().1.len() as u32;
    BigRational::new(BigInt::one(), BigInt::from(2) * BigInt::from(10).pow(frac_len))
}

/// `Σ_{n=0}^{N} d̄_n xⁿ` with `d̄_{n+1} = A d̄_n + B d̄_{n-1}` in exact arithmetic.
fn direct_sum_rational(a: &BigRational, x: &BigRational, n_max: u32) -> BigRational {
    let one = BigRational::one();
    let coeff_a = (&one + a) / a;
    let coeff_b = -a.recip();
    let mut sum = one.clone();
    if n_max == 0 {
        return sum;
    }
    let mut d_prev = one;
    let mut d_cur = coeff_a.clone();
    let mut x_pow = x.clone();
    sum += &d_cur * &x_pow;
    for _ in 1..n_max {
        let d_next = &coeff_a * &d_cur + &coeff_b * &d_prev;
        x_pow *= x;
        sum += &d_next * &x_pow;
        d_prev = d_cur;
        d_cur = d_next;
    }
    sum
}

/// Rectangular double sum with exact binomials via the row recurrence.
fn rect_double_sum_rational(a: &BigRational, x: &BigRational, n_max: u32) -> BigRational {
    let one = BigRational::one();
    let coeff_a = (&one + a) / a;
    let coeff_b = -a.recip();
    let x_tilde = &coeff_a * x;
    let y_tilde = &coeff_b * x * x;
    let mut sum = BigRational::zero();
    let mut row_start = one;
    for n in 0..=n_max {
        let mut term = row_start.clone();
        sum += &term;
        for m in 1..=n_max {
            term *= &y_tilde;
            term *= rat((n + m) as i64, m as i64);
            sum += &term;
        }
        row_start *= &x_tilde;
    }
    sum
}

fn rel_err_vs_rational(got: ScaledReal, want: &BigRational) -> f64 {
    let got_rat = {
        // mantissa * 2^exp2 exactly
        let m = BigRational::from_float(got.mantissa()).unwrap()
            * BigInt::from(got.sign() as i64);
        let two = BigRational::from_integer(BigInt::from(2));
        let e = got.exp2();
        if e >= 0 {
            m * two.pow(e as i32)
        } else {
            m / two.pow((-e) as i32)
        }
    };
    ((got_rat - want) / want).abs().to_f64().unwrap()
}

#[test]
fn direct_sum_oracle_pins_frozen_decimals() {
    let a = rat(4, 5);
    for (x, n, printed) in [
        (rat(3, 10), 10, "2.285559427400"),
        (rat(7, 10), 10, "17.722665066666"),
    ] {
        let oracle = direct_sum_rational(&a, &x, n);
        let err = (&oracle - decimal(printed)).abs();
        assert!(
            err <= half_ulp(printed),
            "oracle {} disagrees with printed {printed}",
            oracle.to_f64().unwrap()
        );
    }
}

#[test]
fn direct_sum_matches_rational_oracle() {
    let a = rat(4, 5);
    for (x_num, x_f) in [(3i64, 0.3f64), (7, 0.7)] {
        let x = rat(x_num, 10);
        for n in [0u32, 1, 5, 10, 50, 100] {
            let got = direct_sum(0.8, x_f, n).unwrap();
            let want = direct_sum_rational(&a, &x, n);
            let rel = rel_err_vs_rational(got, &want);
            assert!(rel < 1e-13, "x={x_f}, N={n}: rel={rel}");
        }
    }
}

#[test]
fn direct_sum_closed_form_is_exact_in_rational_arithmetic() {
    // rational characteristic roots: a = 4/5 → {1, 5/4}, a = 1/2 → {1, 2}
    for (a, rho2, c1, c2) in [
        (rat(4, 5), rat(5, 4), rat(-4, 1), rat(5, 1)),
        (rat(1, 2), rat(2, 1), rat(-1, 1), rat(2, 1)),
    ] {
        let one = BigRational::one();
        let coeff_a = (&one + &a) / &a;
        let coeff_b = -a.recip();
        let (mut d_prev, mut d_cur) = (one.clone(), coeff_a.clone());
        let mut rho_pow = rho2.clone();
        assert_eq!(&c1 + &c2, one, "c1 + c2 = d̄_0");
        for _n in 1..=100 {
            // d̄_n = c1·1ⁿ + c2·ρ₂ⁿ, exactly
            assert_eq!(d_cur, &c1 + &c2 * &rho_pow);
            let d_next = &coeff_a * &d_cur + &coeff_b * &d_prev;
            d_prev = d_cur;
            d_cur = d_next;
            rho_pow *= &rho2;
        }
    }
}

#[test]
fn direct_sum_tail_reaches_eighty_thirds() {
    let s300 = direct_sum_rational(&rat(4, 5), &rat(7, 10), 300);
    let err = (&s300 - rat(80, 3)).abs();
    assert!(err < rat(1, 1_000_000_000_000), "|S_300 - 80/3| = {err}");
}

#[test]
fn rect_double_sum_oracle_pins_frozen_decimals() {
    let a = rat(4, 5);
    let x = rat(3, 10);
    for (n, printed) in [(10, "2.276337892064"), (50, "2.285714285695")] {
        let oracle = rect_double_sum_rational(&a, &x, n);
        let err = (&oracle - decimal(printed)).abs();
        assert!(
            err <= half_ulp(printed),
            "N={n}: oracle {} disagrees with printed {printed}",
            oracle.to_f64().unwrap()
        );
    }
}

#[test]
fn rect_double_sum_matches_rational_oracle() {
    let a = rat(4, 5);
    for (x_num, x_f) in [(3i64, 0.3f64), (7, 0.7)] {
        let x = rat(x_num, 10);
        for n in [0u32, 1, 2, 10, 50, 100] {
            let got = rect_double_sum(0.8, x_f, n).unwrap();
            let want = rect_double_sum_rational(&a, &x, n);
            let rel = rel_err_vs_rational(got, &want);
            assert!(rel < 1e-12, "x={x_f}, N={n}: rel={rel}");
        }
    }
}

#[test]
fn rect_double_sum_divergent_magnitude_at_n_ten() {
    // the (0.8, 0.7) double sum is already ~10^5 at N = 10
    let oracle = rect_double_sum_rational(&rat(4, 5), &rat(7, 10), 10);
    let as_sci = ScaledReal::from(oracle.to_f64().unwrap()).to_sci(6);
    assert_eq!(as_sci, "1.00791e+5");
}

#[test]
fn diagonal_sums_match_geometric_closed_form() {
    // Σ_{r<=R} t^r = (1 - t^{R+1})/(1 - t) exactly
    let geom = |t: &BigRational, r_max: u32| {
        let one = BigRational::one();
        (&one - t.pow(r_max as i32 + 1)) / (&one - t)
    };
    let signed_t = rat(9, 16); // x̃ + ỹ at (a, x) = (4/5, 3/10)
    let abs_t = rat(63, 80); // |x̃| + |ỹ| = 0.675 + 0.1125
    for r in [0u32, 1, 7, 30] {
        let got = diagonal_sum(0.8, 0.3, r).unwrap();
        let rel = rel_err_vs_rational(got, &geom(&signed_t, r));
        assert!(rel < 1e-13, "signed R={r}: rel={rel}");
        let got = abs_diagonal_sum(0.8, 0.3, r).unwrap();
        let rel = rel_err_vs_rational(got, &geom(&abs_t, r));
        assert!(rel < 1e-13, "abs R={r}: rel={rel}");
    }
}
