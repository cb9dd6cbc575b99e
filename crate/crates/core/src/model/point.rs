use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

const FRAC_BITS: u32 = 127;
const SCALE: f64 = 1.7014118346046923e38; // 2^127

/// A point of `[0, 1]` in fixed point with 127 fractional bits.
///
/// Fragments of the homogeneous process shrink far below `f64` resolution
/// (masses around `1e-30` after `10^6` splits), so positions on the circle
/// are kept exactly in this form and converted to `f64` only for output.
/// Every `f64` in `[2^-75, 1]` converts without loss.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Point(u128);

impl Point {
    pub const ZERO: Point = Point(0);
    pub const ONE: Point = Point(1 << FRAC_BITS);

    /// Converts `x ∈ [0, 1]`; bits below `2^-127` are dropped.
    pub fn from_f64(x: f64) -> Result<Point> {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::OutOfRange(x));
        }
        Ok(Point((x * SCALE) as u128))
    }

    /// Like [`Point::from_f64`] for values already known to be in range.
    pub(crate) fn clamped(x: f64) -> Point {
        Point((x.clamp(0.0, 1.0) * SCALE) as u128)
    }

    pub fn from_raw(raw: u128) -> Result<Point> {
        if raw > Self::ONE.0 {
            return Err(Error::InvalidArgument(format!("raw point {raw} exceeds 1")));
        }
        Ok(Point(raw))
    }

    pub fn raw(self) -> u128 {
        self.0
    }

    /// Nearest `f64`.
    pub fn to_f64(self) -> f64 {
        self.0 as f64 / SCALE
    }

    /// Whether the point is exactly an `f64` value.
    pub fn is_f64(self) -> bool {
        Point::clamped(self.to_f64()) == self
    }

    pub(crate) fn add(self, width: u128) -> Point {
        Point(self.0 + width)
    }

    pub(crate) fn width_to(self, end: Point) -> u128 {
        end.0 - self.0
    }

    pub(crate) fn width_to_f64(width: u128) -> f64 {
        width as f64 / SCALE
    }
}

impl fmt::Display for Point {
    /// The shortest `f64` literal when the point is an `f64`, otherwise 40
    /// significant decimal digits, which parse back to the same point.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_f64() {
            return write!(f, "{}", self.to_f64());
        }
        const DIGITS: i32 = 40;
        let num = BigUint::from(self.0);
        let den = BigUint::one() << FRAC_BITS;
        // 10^e <= x < 10^(e+1) with e < 0, since 0 < x < 1 here
        let mut e = self.to_f64().log10().floor() as i32;
        let round = |e: i32| {
            let shift = (DIGITS - 1 - e) as u32;
            (num.clone() * BigUint::from(10u32).pow(shift) + &den / 2u32) / &den
        };
        let mut digits = round(e);
        if digits >= BigUint::from(10u32).pow(DIGITS as u32) {
            e += 1;
            digits = round(e);
        } else if digits < BigUint::from(10u32).pow(DIGITS as u32 - 1) {
            e -= 1;
            digits = round(e);
        }
        let s = digits.to_string();
        let s = s.trim_end_matches('0');
        write!(f, "0.{}{}", "0".repeat((-e - 1) as usize), s)
    }
}

impl FromStr for Point {
    type Err = Error;

    /// Literals with at most 17 significant digits are read as `f64`;
    /// longer decimals of the form `0.ddd` are rounded to the nearest point.
    fn from_str(s: &str) -> Result<Point> {
        let bad = || Error::InvalidArgument(format!("not a point: {s:?}"));
        let s = s.trim();
        let significant = s
            .trim_start_matches(['0', '.'])
            .chars()
            .take_while(|c| c.is_ascii_digit() || *c == '.')
            .filter(char::is_ascii_digit)
            .count();
        let exact = significant > 17 && s.starts_with("0.") && s[2..].bytes().all(|b| b.is_ascii_digit());
        if !exact {
            return Point::from_f64(s.parse::<f64>().map_err(|_| bad())?);
        }
        let frac = &s[2..];
        let num: BigUint = frac.parse().map_err(|_| bad())?;
        let den = BigUint::from(10u32).pow(frac.len() as u32);
        let raw = ((num << FRAC_BITS) + &den / 2u32) / den;
        let raw = if raw.is_zero() {
            0
        } else {
            u128::try_from(raw).map_err(|_| bad())?
        };
        Point::from_raw(raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_values_convert_exactly() {
        for x in [0.0, 0.1, 0.5, 1.0 - f64::EPSILON, 1.0, 1e-20, 2f64.powi(-75)] {
            let p = Point::from_f64(x).unwrap();
            assert_eq!(p.to_f64(), x);
            assert!(p.is_f64());
            assert_eq!(p.to_string().parse::<Point>().unwrap(), p);
        }
        assert!(Point::from_f64(1.5).is_err());
        assert!(Point::from_f64(-0.0).is_ok());
        assert_eq!(Point::ONE.to_f64(), 1.0);
    }

    #[test]
    fn order_matches_f64_order() {
        let xs = [0.0, 1e-30, 0.2, 0.2 + 1e-17, 0.7, 1.0];
        for w in xs.windows(2) {
            assert!(Point::from_f64(w[0]).unwrap() <= Point::from_f64(w[1]).unwrap());
        }
    }

    #[test]
    fn sub_f64_points_print_and_parse_back() {
        let base = Point::from_f64(0.5).unwrap();
        for width in [1u128, 3, 1 << 20, 12345678901234567890] {
            let p = base.add(width);
            assert!(!p.is_f64());
            let text = p.to_string();
            assert!(text.starts_with("0.5000"), "{text}");
            assert_eq!(text.parse::<Point>().unwrap(), p, "{text}");
        }
        let tiny = Point::from_raw(7).unwrap();
        assert_eq!(tiny.to_string().parse::<Point>().unwrap(), tiny);
        assert!("0.5x".parse::<Point>().is_err());
        assert!("2".parse::<Point>().is_err());
    }
}
