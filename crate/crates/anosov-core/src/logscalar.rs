//! Signed log-domain scalars with a base-10 exponent.
//!
//! Quantities in the perturbation pipeline routinely have magnitudes like
//! 10^(−15,307) or A^(2k−1) with k ≈ 1.1×10⁶ — far outside the f64 range
//! (≈ 10^±308). A [`LogScalar`] stores a sign in {−1, 0, +1} together with
//! the base-10 exponent of the magnitude as an `f64`.
//!
//! Exponent magnitudes up to ~10⁷ need fewer than 17 significant digits, so a
//! double-precision exponent loses nothing; no arbitrary-precision dependency
//! is required.
//!
//! Arithmetic:
//! - multiplication/division add/subtract exponents;
//! - addition of same-sign values uses the log-sum-exp identity with the
//!   larger exponent factored out, so it never overflows;
//! - subtraction of nearly equal magnitudes (relative difference below 1e-12)
//!   is reported as catastrophic cancellation instead of returning a garbage
//!   exponent.

use std::cmp::Ordering;
use thiserror::Error;

/// Relative-magnitude threshold below which subtraction is refused: if
/// |a/b − 1| < 1e-12 the difference has no significant digits left in the
/// exponent representation.
const CANCELLATION_REL: f64 = 1e-12;

/// log10(e), used to convert natural-log exponents.
const LOG10_E: f64 = std::f64::consts::LOG10_E;

/// Errors from log-domain arithmetic.
#[derive(Debug, Error, PartialEq)]
pub enum LogScalarError {
    /// Subtraction of two values equal to within 1e-12 relative: the result
    /// would carry no significant information.
    #[error("catastrophic cancellation: operands agree to within 1e-12 relative")]
    CatastrophicCancellation,
    /// A constructor received a NaN.
    #[error("non-finite input to LogScalar")]
    NonFinite,
}

/// A signed magnitude stored as a base-10 exponent.
///
/// Invariant: `sign == 0` if and only if `log10_mag == f64::NEG_INFINITY`
/// (the designated null marker for zero).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogScalar {
    sign: i8,
    log10_mag: f64,
}

impl LogScalar {
    /// Exact zero.
    pub const ZERO: LogScalar = LogScalar {
        sign: 0,
        log10_mag: f64::NEG_INFINITY,
    };

    /// Exact one (10⁰).
    pub const ONE: LogScalar = LogScalar {
        sign: 1,
        log10_mag: 0.0,
    };

    /// Build from an ordinary double. NaN is rejected; ±0.0 maps to zero.
    pub fn from_f64(x: f64) -> Result<LogScalar, LogScalarError> {
        if x.is_nan() {
            return Err(LogScalarError::NonFinite);
        }
        if x == 0.0 {
            return Ok(LogScalar::ZERO);
        }
        Ok(LogScalar {
            sign: if x > 0.0 { 1 } else { -1 },
            log10_mag: x.abs().log10(),
        })
    }

    /// A positive value 10^`exponent`.
    pub fn from_log10(exponent: f64) -> LogScalar {
        if exponent == f64::NEG_INFINITY {
            return LogScalar::ZERO;
        }
        LogScalar {
            sign: 1,
            log10_mag: exponent,
        }
    }

    /// A signed value `sign`·10^`exponent`; `sign == 0` yields zero.
    pub fn from_signed_log10(sign: i8, exponent: f64) -> LogScalar {
        if sign == 0 || exponent == f64::NEG_INFINITY {
            return LogScalar::ZERO;
        }
        LogScalar {
            sign: sign.signum(),
            log10_mag: exponent,
        }
    }

    /// e^`x` as a LogScalar (natural-exponent constructor; `x` may be far
    /// outside the f64 exponentiation range).
    pub fn exp(x: f64) -> LogScalar {
        LogScalar::from_log10(x * LOG10_E)
    }

    /// Sign in {−1, 0, +1}.
    pub fn sign(self) -> i8 {
        self.sign
    }

    /// True iff the value is exactly zero.
    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    /// Base-10 exponent of the magnitude (−∞ for zero).
    pub fn log10_mag(self) -> f64 {
        self.log10_mag
    }

    /// Signed base-10 "log value": the exponent for positive values, −∞ for
    /// zero; panics on negative values (their log10 is undefined).
    pub fn log10(self) -> f64 {
        assert!(self.sign >= 0, "log10 of a negative LogScalar");
        self.log10_mag
    }

    /// Convert back to f64, saturating to ±∞ outside the representable range.
    pub fn to_f64(self) -> f64 {
        if self.sign == 0 {
            return 0.0;
        }
        let mag = 10f64.powf(self.log10_mag);
        f64::from(self.sign) * mag
    }

    /// Absolute value.
    pub fn abs(self) -> LogScalar {
        LogScalar {
            sign: self.sign.abs(),
            log10_mag: self.log10_mag,
        }
    }

    /// Negation.
    pub fn neg(self) -> LogScalar {
        LogScalar {
            sign: -self.sign,
            log10_mag: self.log10_mag,
        }
    }

    /// Product.
    pub fn mul(self, other: LogScalar) -> LogScalar {
        if self.sign == 0 || other.sign == 0 {
            return LogScalar::ZERO;
        }
        LogScalar {
            sign: self.sign * other.sign,
            log10_mag: self.log10_mag + other.log10_mag,
        }
    }

    /// Quotient; panics on division by zero.
    pub fn div(self, other: LogScalar) -> LogScalar {
        assert!(other.sign != 0, "LogScalar division by zero");
        if self.sign == 0 {
            return LogScalar::ZERO;
        }
        LogScalar {
            sign: self.sign * other.sign,
            log10_mag: self.log10_mag - other.log10_mag,
        }
    }

    /// Integer power with exponent arithmetic done in f64 (exact for |n| up
    /// to 2⁵³).
    pub fn powi(self, n: i64) -> LogScalar {
        if n == 0 {
            return LogScalar::ONE;
        }
        if self.sign == 0 {
            return LogScalar::ZERO;
        }
        let sign = if self.sign < 0 && n % 2 != 0 { -1 } else { 1 };
        LogScalar {
            sign,
            log10_mag: self.log10_mag * n as f64,
        }
    }

    /// Sum. Same-sign addition is exact in log-domain (log-sum-exp with the
    /// larger exponent factored out); opposite signs delegate to subtraction
    /// and may report cancellation.
    pub fn add(self, other: LogScalar) -> Result<LogScalar, LogScalarError> {
        if self.sign == 0 {
            return Ok(other);
        }
        if other.sign == 0 {
            return Ok(self);
        }
        if self.sign == other.sign {
            let (hi, lo) = if self.log10_mag >= other.log10_mag {
                (self.log10_mag, other.log10_mag)
            } else {
                (other.log10_mag, self.log10_mag)
            };
            // log10(10^hi + 10^lo) = hi + log10(1 + 10^(lo-hi)); lo-hi ≤ 0 so
            // the inner power never overflows.
            let mag = hi + (1.0 + 10f64.powf(lo - hi)).log10();
            return Ok(LogScalar {
                sign: self.sign,
                log10_mag: mag,
            });
        }
        // Opposite signs: |a| - |b| with the sign of the larger magnitude.
        let (big, small, sign) = if self.log10_mag >= other.log10_mag {
            (self.log10_mag, other.log10_mag, self.sign)
        } else {
            (other.log10_mag, self.log10_mag, other.sign)
        };
        let ratio = 10f64.powf(small - big); // in (0, 1]
        if 1.0 - ratio < CANCELLATION_REL {
            return Err(LogScalarError::CatastrophicCancellation);
        }
        Ok(LogScalar {
            sign,
            log10_mag: big + (1.0 - ratio).log10(),
        })
    }

    /// Difference (`self` − `other`), reporting catastrophic cancellation
    /// when the operands agree to within 1e-12 relative.
    pub fn sub(self, other: LogScalar) -> Result<LogScalar, LogScalarError> {
        self.add(other.neg())
    }

    /// Total order consistent with the real-number order.
    pub fn total_cmp(self, other: LogScalar) -> Ordering {
        match (self.sign, other.sign) {
            (a, b) if a < b => Ordering::Less,
            (a, b) if a > b => Ordering::Greater,
            (0, 0) => Ordering::Equal,
            (1, 1) => self.log10_mag.total_cmp(&other.log10_mag),
            _ => other.log10_mag.total_cmp(&self.log10_mag), // both negative
        }
    }

    /// `self` ≤ `other` in real-number order.
    pub fn le(self, other: LogScalar) -> bool {
        self.total_cmp(other) != Ordering::Greater
    }
}

impl PartialOrd for LogScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.total_cmp(*other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ls(x: f64) -> LogScalar {
        LogScalar::from_f64(x).unwrap()
    }

    #[test]
    fn zero_invariant_holds() {
        assert_eq!(ls(0.0), LogScalar::ZERO);
        assert_eq!(LogScalar::ZERO.sign(), 0);
        assert_eq!(LogScalar::ZERO.log10_mag(), f64::NEG_INFINITY);
    }

    #[test]
    fn roundtrip_matches_f64() {
        for &x in &[1.0, -2.5, 3.7e-200, -8.1e250, 0.0, 1e-300] {
            let back = ls(x).to_f64();
            assert!((back - x).abs() <= 1e-12 * x.abs(), "{x} -> {back}");
        }
    }

    #[test]
    fn add_mul_agree_with_f64_in_range() {
        // Deterministic pseudo-random pairs; exponents kept inside ±150 so
        // direct f64 arithmetic is exact enough to serve as an oracle.
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..10_000 {
            let a = (next() - 0.5) * 10f64.powf((next() - 0.5) * 300.0);
            let b = (next() - 0.5) * 10f64.powf((next() - 0.5) * 300.0);
            let (la, lb) = (ls(a), ls(b));
            let prod = la.mul(lb).to_f64();
            assert!(
                (prod - a * b).abs() <= 1e-12 * (a * b).abs() + f64::MIN_POSITIVE,
                "mul {a} {b}"
            );
            if let Ok(sum) = la.add(lb) {
                let direct = a + b;
                assert!(
                    (sum.to_f64() - direct).abs() <= 1e-12 * direct.abs() + 1e-280,
                    "add {a} {b}: {} vs {direct}",
                    sum.to_f64()
                );
            } else {
                // Cancellation report only fires for near-equal magnitudes.
                assert!((a + b).abs() < 1e-11 * a.abs().max(b.abs()));
            }
            assert_eq!(la.le(lb), a <= b, "cmp {a} {b}");
        }
    }

    #[test]
    fn powi_handles_huge_exponents() {
        let a = ls(2.8535691936340255);
        let p = a.powi(33_601);
        // 33,601 · log10(A) computed independently.
        let expected = 33_601.0 * 2.8535691936340255f64.log10();
        assert!((p.log10_mag() - expected).abs() < 1e-9);
        assert_eq!(p.sign(), 1);
    }

    #[test]
    fn subtraction_of_near_equal_values_is_reported() {
        let a = LogScalar::from_log10(100.0);
        let b = LogScalar::from_log10(100.0 + 1e-16);
        assert_eq!(a.sub(b), Err(LogScalarError::CatastrophicCancellation));
        // Distinguishable values subtract fine.
        let c = LogScalar::from_log10(99.0);
        assert!(a.sub(c).unwrap().sign() == 1);
    }

    #[test]
    fn exp_constructor_matches_natural_exponent() {
        let v = LogScalar::exp(-1000.0);
        assert!((v.log10_mag() - (-1000.0 * std::f64::consts::LOG10_E)).abs() < 1e-12);
    }
}
