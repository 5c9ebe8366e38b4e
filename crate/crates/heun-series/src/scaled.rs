//! A real number kept as `sign * mantissa * 2^exp2` with an `i64` exponent.
//!
//! Partial sums of the divergent double series reach magnitudes around
//! 10^584, far past `f64` range. `ScaledReal` keeps a plain `f64` mantissa
//! normalized to `[1, 2)` and moves all range into the explicit exponent, so
//! every operation rounds exactly like the corresponding `f64` operation
//! while the exponent stays exact.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::Error;
use crate::Result;

/// Sign/mantissa/exponent real value; `value = sign * mantissa * 2^exp2`.
///
/// Nonzero values keep `mantissa` in `[1, 2)`. Zero is canonical:
/// `sign = 0`, `mantissa = 0.0`, `exp2 = 0`. All values are finite by
/// construction, which is what makes `Eq`/`Ord` total.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledReal {
    sign: i8,
    mantissa: f64,
    exp2: i64,
}

impl Eq for ScaledReal {}

/// Exact `2^e` for `e` in the normal `f64` exponent range.
fn two_pow(e: i32) -> f64 {
    debug_assert!((-1022..=1023).contains(&e));
    f64::from_bits(((1023 + e as i64) as u64) << 52)
}

/// Split a positive finite `f64` into `(m, e)` with `v = m * 2^e`, `m` in `[1, 2)`.
fn split_f64(v: f64) -> (f64, i64) {
    debug_assert!(v > 0.0 && v.is_finite());
    let bits = v.to_bits();
    let raw = ((bits >> 52) & 0x7ff) as i64;
    if raw == 0 {
        // subnormal: exact upscale, then split
        let (m, e) = split_f64(v * two_pow(120));
        (m, e - 120)
    } else {
        let m = f64::from_bits((bits & 0x000f_ffff_ffff_ffff) | (1023u64 << 52));
        (m, raw - 1023)
    }
}

impl ScaledReal {
    pub const ZERO: ScaledReal = ScaledReal {
        sign: 0,
        mantissa: 0.0,
        exp2: 0,
    };

    pub const ONE: ScaledReal = ScaledReal {
        sign: 1,
        mantissa: 1.0,
        exp2: 0,
    };

    /// Canonical value from a signed mantissa (any positive magnitude) and exponent.
    fn normalized(m: f64, exp2: i64) -> ScaledReal {
        if m == 0.0 {
            return ScaledReal::ZERO;
        }
        debug_assert!(m.is_finite());
        let sign = if m < 0.0 { -1 } else { 1 };
        let (mantissa, de) = split_f64(m.abs());
        ScaledReal {
            sign,
            mantissa,
            exp2: exp2 + de,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn mantissa(&self) -> f64 {
        self.mantissa
    }

    pub fn exp2(&self) -> i64 {
        self.exp2
    }

    pub fn abs(self) -> ScaledReal {
        ScaledReal {
            sign: self.sign.abs(),
            ..self
        }
    }

    /// Exact multiplication by `2^k`.
    pub fn mul_pow2(self, k: i64) -> ScaledReal {
        if self.sign == 0 {
            return self;
        }
        ScaledReal {
            exp2: self.exp2 + k,
            ..self
        }
    }

    /// `log2(|self|)`; `-inf` for zero. Approximate, for growth-rate estimates.
    pub fn log2_abs(&self) -> f64 {
        if self.sign == 0 {
            f64::NEG_INFINITY
        } else {
            self.exp2 as f64 + self.mantissa.log2()
        }
    }

    /// Back to `f64`, saturating to `±inf` / `0` outside its range.
    pub fn to_f64(&self) -> f64 {
        if self.sign == 0 {
            return 0.0;
        }
        let s = self.sign as f64;
        if self.exp2 > 1023 {
            return s * f64::INFINITY;
        }
        if self.exp2 < -1075 {
            return s * 0.0;
        }
        if self.exp2 >= -1022 {
            s * self.mantissa * two_pow(self.exp2 as i32)
        } else {
            // lands in the subnormal range: scale in two exact-ish steps
            s * (self.mantissa * two_pow(-1022)) * two_pow((self.exp2 + 1022) as i32)
        }
    }

    /// Decimal scientific string `d.ddd…e±DDD` with `digits` significant digits.
    ///
    /// The conversion walks the value into `[1, 10^22)` by exact-exponent
    /// scaled divisions (never a floating `log10`), so the printed decimal
    /// exponent is exact. Zero prints as `"0"`.
    pub fn to_sci(&self, digits: usize) -> String {
        assert!(digits >= 1, "need at least one significant digit");
        if self.sign == 0 {
            return "0".to_string();
        }
        let p22 = pow10_22();
        let mut v = self.abs();
        let mut dec: i64 = 0;
        while v >= p22 {
            v = v / p22;
            dec += 22;
        }
        while v < ScaledReal::ONE {
            v = v * p22;
            dec -= 22;
        }
        // v in [1, 10^22) is exactly representable as f64
        let formatted = format!("{:.*e}", digits - 1, v.to_f64());
        let (mant, e_loc) = formatted
            .split_once('e')
            .expect("LowerExp always emits an exponent");
        let e_total = e_loc.parse::<i64>().expect("exponent is an integer") + dec;
        let sign_str = if self.sign < 0 { "-" } else { "" };
        if e_total < 0 {
            format!("{sign_str}{mant}e-{}", -e_total)
        } else {
            format!("{sign_str}{mant}e+{e_total}")
        }
    }

    /// Parse the `to_sci` format (also plain decimals); `None` on malformed input.
    pub fn from_sci(s: &str) -> Option<ScaledReal> {
        let s = s.trim();
        if s == "0" {
            return Some(ScaledReal::ZERO);
        }
        let (mant_str, exp) = match s.split_once(['e', 'E']) {
            Some((m, e)) => (m, e.parse::<i64>().ok()?),
            None => (s, 0),
        };
        let mant: f64 = mant_str.parse().ok()?;
        if !mant.is_finite() {
            return None;
        }
        Some(ScaledReal::from(mant) * pow10(exp))
    }

    /// Binomial coefficient `C(n, k)` by the multiplicative recurrence.
    ///
    /// Stays accurate to about `k` ulps; relative error is below 1e-12 for
    /// `n <= 4000`. Rejects `k > n` and `n > 10^6`.
    pub fn binomial(n: u64, k: u64) -> Result<ScaledReal> {
        if k > n || n > 1_000_000 {
            return Err(Error::BinomialDomain { n, k });
        }
        let k = k.min(n - k);
        let mut v = ScaledReal::ONE;
        for j in 1..=k {
            v = v * ((n - k + j) as f64);
            v = v / (j as f64);
        }
        Ok(v)
    }
}

/// `10^22` as an exact scaled value (`5^22` fits in 53 bits).
fn pow10_22() -> ScaledReal {
    ScaledReal::from(2_384_185_791_015_625.0f64).mul_pow2(22)
}

/// `10^e` by binary exponentiation in scaled arithmetic.
fn pow10(e: i64) -> ScaledReal {
    if e < 0 {
        return ScaledReal::ONE / pow10(-e);
    }
    let mut result = ScaledReal::ONE;
    let mut base = ScaledReal::from(10.0);
    let mut e = e as u64;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base;
        }
        base = base * base;
        e >>= 1;
    }
    result
}

impl From<f64> for ScaledReal {
    fn from(v: f64) -> Self {
        assert!(v.is_finite(), "ScaledReal requires finite input, got {v}");
        ScaledReal::normalized(v, 0)
    }
}

impl Add for ScaledReal {
    type Output = ScaledReal;

    fn add(self, rhs: ScaledReal) -> ScaledReal {
        if self.sign == 0 {
            return rhs;
        }
        if rhs.sign == 0 {
            return self;
        }
        let (big, small) = if self.exp2 >= rhs.exp2 {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let d = big.exp2 - small.exp2;
        // beyond 60 bits the small operand cannot move the rounded mantissa
        if d > 60 {
            return big;
        }
        let m = (big.sign as f64) * big.mantissa
            + (small.sign as f64) * (small.mantissa * two_pow(-(d as i32)));
        ScaledReal::normalized(m, big.exp2)
    }
}

impl Sub for ScaledReal {
    type Output = ScaledReal;

    fn sub(self, rhs: ScaledReal) -> ScaledReal {
        self + (-rhs)
    }
}

impl Neg for ScaledReal {
    type Output = ScaledReal;

    fn neg(self) -> ScaledReal {
        ScaledReal {
            sign: -self.sign,
            ..self
        }
    }
}

impl Mul for ScaledReal {
    type Output = ScaledReal;

    fn mul(self, rhs: ScaledReal) -> ScaledReal {
        if self.sign == 0 || rhs.sign == 0 {
            return ScaledReal::ZERO;
        }
        let m = (self.sign * rhs.sign) as f64 * (self.mantissa * rhs.mantissa);
        ScaledReal::normalized(m, self.exp2 + rhs.exp2)
    }
}

impl Div for ScaledReal {
    type Output = ScaledReal;

    fn div(self, rhs: ScaledReal) -> ScaledReal {
        assert!(rhs.sign != 0, "division by scaled zero");
        if self.sign == 0 {
            return ScaledReal::ZERO;
        }
        let m = (self.sign * rhs.sign) as f64 * (self.mantissa / rhs.mantissa);
        ScaledReal::normalized(m, self.exp2 - rhs.exp2)
    }
}

impl Mul<f64> for ScaledReal {
    type Output = ScaledReal;

    fn mul(self, rhs: f64) -> ScaledReal {
        self * ScaledReal::from(rhs)
    }
}

impl Div<f64> for ScaledReal {
    type Output = ScaledReal;

    fn div(self, rhs: f64) -> ScaledReal {
        self / ScaledReal::from(rhs)
    }
}

impl Ord for ScaledReal {
    fn cmp(&self, other: &ScaledReal) -> Ordering {
        match self.sign.cmp(&other.sign) {
            Ordering::Equal => {}
            ord => return ord,
        }
        if self.sign == 0 {
            return Ordering::Equal;
        }
        let magnitude = match self.exp2.cmp(&other.exp2) {
            Ordering::Equal => self
                .mantissa
                .partial_cmp(&other.mantissa)
                .expect("mantissa is never NaN"),
            ord => ord,
        };
        if self.sign > 0 {
            magnitude
        } else {
            magnitude.reverse()
        }
    }
}

impl PartialOrd for ScaledReal {
    fn partial_cmp(&self, other: &ScaledReal) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ScaledReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sci(6))
    }
}
