use std::fmt;

use crate::maier::MaierVariant;

/// Errors from recurrence construction, domain classification, and summation.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The singularity parameter is zero; the series has no solution there.
    NoSolutionAtAZero,
    /// The recurrence denominator `(n+1+λ)(γ+n+λ)` vanishes at this index.
    PoleInRecurrence { n: u32 },
    /// `1 - Ax - Bx^2 = 0`: the generating function has a pole at `x`.
    GeneratingFunctionPole,
    /// Dominating-bound premise `|Ā_n|, |B̄_n| < 1+ε` fails first at this index.
    PremiseViolation { n: u32 },
    /// Index arguments fall outside the supplied coefficient sequence.
    IndexOutOfRange { n: usize, len: usize },
    /// The probed point violates one of the variant's domain restrictions.
    ExcludedPoint {
        variant: MaierVariant,
        constraint: &'static str,
    },
    /// The variant's transformed singularity parameter `a'` is zero.
    TransformedSingularityZero { variant: MaierVariant },
    /// Hypergeometric coefficient pole: `c` is zero or a negative integer.
    PoleOfCoefficients { c: f64 },
    /// `revised_characteristic` needs at least one coefficient.
    DegreeZero,
    /// Root refinement left a residual above tolerance.
    RootFindingFailed,
    /// `probe` needs at least eight recorded partial sums.
    TooFewPartials { got: usize },
    /// Recorded partial sums must be strictly increasing in `N`.
    PartialsNotIncreasing,
    /// Binomial arguments outside `0 <= k <= n <= 10^6`.
    BinomialDomain { n: u64, k: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NoSolutionAtAZero => write!(f, "no solution at a=0"),
            Error::PoleInRecurrence { n } => {
                write!(f, "recurrence denominator vanishes at n={n}")
            }
            Error::GeneratingFunctionPole => {
                write!(f, "generating function pole: 1 - Ax - Bx^2 = 0")
            }
            Error::PremiseViolation { n } => write!(
                f,
                "dominating-bound premise |A_n|,|B_n| < 1+eps fails at n={n}"
            ),
            Error::IndexOutOfRange { n, len } => {
                write!(f, "index {n} out of range for sequence of length {len}")
            }
            Error::ExcludedPoint {
                variant,
                constraint,
            } => write!(f, "excluded point for {variant}: requires {constraint}"),
            Error::TransformedSingularityZero { variant } => {
                write!(f, "transformed singularity parameter is zero for {variant}")
            }
            Error::PoleOfCoefficients { c } => {
                write!(f, "coefficient pole: c={c} is zero or a negative integer")
            }
            Error::DegreeZero => write!(f, "characteristic polynomial needs degree >= 1"),
            Error::RootFindingFailed => write!(f, "root refinement did not reach tolerance"),
            Error::TooFewPartials { got } => {
                write!(f, "need at least 8 partial sums, got {got}")
            }
            Error::PartialsNotIncreasing => {
                write!(f, "partial sums must be strictly increasing in N")
            }
            Error::BinomialDomain { n, k } => {
                write!(f, "binomial arguments out of range: n={n}, k={k}")
            }
        }
    }
}

impl std::error::Error for Error {}
