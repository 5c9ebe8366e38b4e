//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `cargo test --test acceptance -- --nocapture`).

use std::time::{Duration, Instant};

use heun_series::{
    abs_boundary, abs_test, characteristic_roots, closed_form_term, direct_sum,
    dominating_bound, maier_condition, maier_transformed_params, pp_domain, ratio_test_limit,
    rect_double_sum, region_scan, CellClass, ConvergenceVerdict, HeunParameters, MaierVariant,
    RecurrenceRule, ScaledReal,
};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: u32, label: &str, ok: bool) {
    println!(
        "criterion {id} [{}]: {label}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {id} failed: {label}");
}

fn within_abs(got: ScaledReal, want: f64, tol: f64) -> bool {
    (got.to_f64() - want).abs() <= tol
}

fn within_rel(got: ScaledReal, want: ScaledReal, tol: f64) -> bool {
    let rel = ((got - want).abs() / want.abs()).to_f64();
    rel <= tol
}

#[test]
fn criterion_1_direct_sum_convergent_table() {
    let start = Instant::now();
    let mut ok = within_abs(direct_sum(0.8, 0.3, 10).unwrap(), 2.285559427400, 1e-11);
    for n in [50, 100, 300, 500, 1000] {
        ok &= within_abs(direct_sum(0.8, 0.3, n).unwrap(), 2.285714285714, 1e-11);
    }
    ok &= start.elapsed() < Duration::from_secs(1);
    report(1, "direct sum at (a,x)=(0.8,0.3): N=10 and N>=50 values", ok);
}

#[test]
fn criterion_2_rect_double_sum_convergent_table() {
    let start = Instant::now();
    let mut ok = within_abs(
        rect_double_sum(0.8, 0.3, 10).unwrap(),
        2.276337892064,
        1e-11,
    );
    ok &= within_abs(
        rect_double_sum(0.8, 0.3, 100).unwrap(),
        2.285714285714,
        1e-10,
    );
    ok &= start.elapsed() < Duration::from_secs(5);
    report(2, "double sum at (a,x)=(0.8,0.3): N=10 and N=100 values", ok);
}

#[test]
fn criterion_3_rect_double_sum_divergent_magnitudes() {
    let start = Instant::now();
    let mut ok = true;
    for (n, printed) in [
        (10u32, "1.00791e+5"),
        (100, "1.99922e+57"),
        (1000, "4.02305e+584"),
    ] {
        let got = rect_double_sum(0.8, 0.7, n).unwrap();
        let want = ScaledReal::from_sci(printed).unwrap();
        let good = within_rel(got, want, 1e-4);
        if !good {
            println!("  N={n}: got {}, want {printed}", got.to_sci(6));
        }
        ok &= good;
    }
    ok &= start.elapsed() < Duration::from_secs(30);
    report(3, "double sum at (a,x)=(0.8,0.7) reaches 4.02305e+584", ok);
}

#[test]
fn criterion_4_direct_sum_at_larger_x_with_rational_oracle() {
    let mut ok = within_abs(direct_sum(0.8, 0.7, 10).unwrap(), 17.722665066666, 1e-11);
    for n in [300, 500, 700, 1000] {
        ok &= within_abs(direct_sum(0.8, 0.7, n).unwrap(), 26.666666666667, 1e-10);
    }
    // independent exact-rational tail check: Σ → 80/3
    let rat = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    let (a, x) = (rat(4, 5), rat(7, 10));
    let one = BigRational::one();
    let coeff_a = (&one + &a) / &a;
    let coeff_b = -a.recip();
    let mut sum = one.clone();
    let (mut d_prev, mut d_cur) = (one, coeff_a.clone());
    let mut x_pow = x.clone();
    sum += &d_cur * &x_pow;
    for _ in 1..300 {
        let d_next = &coeff_a * &d_cur + &coeff_b * &d_prev;
        x_pow *= &x;
        sum += &d_next * &x_pow;
        d_prev = d_cur;
        d_cur = d_next;
    }
    ok &= (&sum - rat(80, 3)).abs() < rat(1, 1_000_000_000_000);
    report(4, "direct sum at (a,x)=(0.8,0.7) settles on 80/3", ok);
}

#[test]
fn criterion_5_absolute_boundary_formula() {
    let mut ok = true;
    for (a, want) in [(1.0, 0.414214), (10.0, 0.84429), (100.0, 0.98058), (0.8, 0.368858)] {
        let r = abs_boundary(a).radius().unwrap();
        ok &= (r - want).abs() < 1e-5;
    }
    report(5, "absolute-convergence radii at a=1, 10, 100, 0.8", ok);
}

#[test]
fn criterion_6_characteristic_root_domain_case_table() {
    let mut ok = pp_domain(0.0).radius.is_none();
    for a in [-3.0, -1.0, 1.0, 3.0] {
        ok &= pp_domain(a).radius == Some(1.0);
    }
    for a in [-0.5, 0.5] {
        ok &= pp_domain(a).radius == Some(0.5);
    }
    report(6, "characteristic-root radii on the seven-point a grid", ok);
}

#[test]
fn criterion_7_property_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut ok = true;

    // closed form ≡ iterated recurrence, 500 random (A, B), n ≤ 60
    for _ in 0..500 {
        let a: f64 = rng.gen_range(-2.0..2.0);
        let b: f64 = rng.gen_range(-2.0..2.0);
        let seq = RecurrenceRule::constant(a, b).coefficients(60);
        for n in 0..=60u32 {
            let closed = closed_form_term(a, b, n);
            let iterated = seq.terms()[n as usize];
            if (closed - iterated).norm() > 1e-12 * (1.0 + iterated.norm()) {
                println!("  closed form mismatch at A={a}, B={b}, n={n}");
                ok = false;
            }
        }
    }

    // Fibonacci identity exact to n = 30
    let seq = RecurrenceRule::constant(1.0, 1.0).coefficients(30);
    let mut fib = (1.0f64, 1.0f64);
    for n in 1..=30 {
        if seq.terms()[n].re != fib.1 || seq.terms()[n].im != 0.0 {
            ok = false;
        }
        fib = (fib.1, fib.0 + fib.1);
    }

    // characteristic roots of the Heun constants are {1, 1/a}
    for _ in 0..1000 {
        let a: f64 = rng.gen_range(-4.0..4.0);
        if a.abs() < 1e-3 {
            continue;
        }
        let roots = characteristic_roots((1.0 + a) / a, -1.0 / a);
        let found = [roots.rho1, roots.rho2];
        let hit = |target: f64| {
            found
                .iter()
                .any(|r| (r - num_complex::Complex64::new(target, 0.0)).norm() < 1e-10)
        };
        if !(hit(1.0) && hit(1.0 / a)) {
            println!("  root mismatch at a={a}");
            ok = false;
        }
    }

    // dominating-series inequality on 100 random Heun parameter sets
    let mut accepted = 0;
    while accepted < 100 {
        let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let a = sign * rng.gen_range(0.3..2.5);
        if (a + 1.0).abs() < 0.05 {
            continue; // Ā_n needs a nonzero limit A
        }
        let params = HeunParameters::new(
            a,
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(0.2..2.8),
            rng.gen_range(-2.0..2.0),
        )
        .unwrap();
        let rule = RecurrenceRule::heun(&params, 0.0).unwrap();
        let seq = rule.coefficients(250);
        let eps = 0.5;
        let premise_from = (1..seq.len()).find(|&n0| {
            (n0..seq.len()).all(|n| {
                rule.a_bar(n as u32).norm() < 1.0 + eps && rule.b_bar(n as u32).norm() < 1.0 + eps
            })
        });
        let Some(start) = premise_from else {
            continue;
        };
        if !dominating_bound(&rule, &seq, start, eps).unwrap() {
            println!("  dominating bound failed for a={a}");
            ok = false;
        }
        accepted += 1;
    }

    // absolute region ⊆ characteristic-root region on 10^4 samples
    for _ in 0..10_000 {
        let a: f64 = rng.gen_range(-4.0..4.0);
        if a == 0.0 {
            continue;
        }
        let x: f64 = rng.gen_range(-2.0..2.0);
        if abs_test(a, x).unwrap() && x.abs() >= pp_domain(a).radius.unwrap() {
            println!("  subset violation at a={a}, x={x}");
            ok = false;
        }
    }

    // every variant's condition equals the base test on transformed arguments
    for variant in MaierVariant::ALL {
        let mut checked = 0;
        while checked < 1000 {
            let a: f64 = rng.gen_range(-3.0..3.0);
            let x: f64 = rng.gen_range(-2.0..2.0);
            if a == 0.0 || a == 1.0 || x == a || x == 0.0 {
                continue;
            }
            let params = HeunParameters::new(a, 0.4, 1.5, -0.7, 0.9, 1.2).unwrap();
            let (transformed, map) = maier_transformed_params(variant, &params).unwrap();
            let direct = maier_condition(variant, a, x).unwrap();
            let via_base = abs_test(transformed.a(), map.apply(x)).unwrap();
            if direct != via_base {
                println!("  {variant} mismatch at (a={a}, x={x})");
                ok = false;
            }
            checked += 1;
        }
    }

    report(7, "randomized property suite", ok);
}

#[test]
fn criterion_8_a_minus_one_indeterminacy() {
    let a = -1.0;
    let coeff_a = (1.0 + a) / a; // 0
    let coeff_b = -1.0 / a; // 1
    let mut ok = true;
    for x in [0.1, 0.5, 0.99, 1.0, 1.7] {
        ok &= ratio_test_limit(coeff_a, coeff_b, x, true) == ConvergenceVerdict::Indeterminate;
    }
    for x in [-1.3, -0.99, 0.0, 0.3, 0.999, 1.0, 1.001, 2.0] {
        ok &= abs_test(a, x).unwrap() == (x.abs() < 1.0);
    }
    report(8, "a=-1: moduli'd ratio test indeterminate, direct test |x|<1", ok);
}

#[test]
fn criterion_9_region_scan_classification() {
    let grid = region_scan(-3.0, 3.0, -1.5, 1.5, 300, 300);
    let mut ok = grid.class_at_point(-2.0, 0.5) == Some(CellClass::Both);
    ok &= grid.class_at_point(0.8, 0.7) == Some(CellClass::PpOnly);
    ok &= grid.class_at_point(0.8, 0.3) == Some(CellClass::Both);
    // every column whose a-extent touches zero is fully undefined
    let step_a = 6.0 / 300.0;
    let mut zero_columns = 0;
    for ia in 0..300 {
        let lo = -3.0 + ia as f64 * step_a;
        let hi = -3.0 + (ia + 1) as f64 * step_a;
        if lo <= 0.0 && 0.0 <= hi {
            zero_columns += 1;
            for ix in 0..300 {
                ok &= grid.class_at(ia, ix) == CellClass::Undefined;
            }
        }
    }
    ok &= zero_columns >= 1;
    // the grid is not trivially undefined
    ok &= grid
        .cells()
        .iter()
        .filter(|c| **c != CellClass::Undefined)
        .count()
        > 200 * 300;
    report(9, "region grid probe points and the a=0 column", ok);
}
