//! Base-2 scaled floats for recurrences whose values sweep through the
//! whole exponent range (and beyond) before returning to representable size.
//!
//! A `Scaled` is `mantissa * 2^exp2` with the mantissa kept in a wide band
//! around 1. Three-term recurrences run on mantissa pairs sharing one
//! exponent, renormalizing when the band is left, so the classically
//! forbidden region (where values drop under 1e-308 long before the degree
//! of interest) costs no precision.

use num_traits::Float;

const LN_2: f64 = core::f64::consts::LN_2;
/// Renormalization band half-width in bits.
const BAND: i64 = 600;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scaled {
    pub mantissa: f64,
    pub exp2: i64,
}

impl Scaled {
    pub const ZERO: Scaled = Scaled { mantissa: 0.0, exp2: 0 };

    /// Value `sign * exp(ln_abs)` without ever forming the exponential.
    pub fn from_ln(ln_abs: f64, negative: bool) -> Self {
        let e = (ln_abs / LN_2).floor();
        let m = (ln_abs - e * LN_2).exp();
        Scaled {
            mantissa: if negative { -m } else { m },
            exp2: e as i64,
        }
    }

    /// Nearest f64; overflows saturate to ±∞ and deep underflow flushes to 0.
    pub fn to_f64(self) -> f64 {
        if self.mantissa == 0.0 {
            return 0.0;
        }
        if self.exp2 > 2_000 {
            return if self.mantissa > 0.0 { f64::infinity() } else { f64::neg_infinity() };
        }
        if self.exp2 < -2_000 {
            return 0.0;
        }
        libm::ldexp(self.mantissa, self.exp2 as i32)
    }

    /// `(sign, ln|value|)`; sign is 0 for an exact zero.
    pub fn sign_ln(self) -> (i8, f64) {
        if self.mantissa == 0.0 {
            return (0, f64::neg_infinity());
        }
        let s = if self.mantissa > 0.0 { 1 } else { -1 };
        (s, self.mantissa.abs().ln() + self.exp2 as f64 * LN_2)
    }
}

/// A consecutive pair of recurrence values sharing one exponent.
#[derive(Debug, Clone, Copy)]
pub struct ScaledPair {
    pub prev: f64,
    pub cur: f64,
    pub exp2: i64,
}

impl ScaledPair {
    pub fn new(prev: Scaled, cur_mantissa: f64) -> Self {
        ScaledPair { prev: prev.mantissa, cur: cur_mantissa, exp2: prev.exp2 }
    }

    /// Advance `next = a*cur + b*prev` and renormalize into the band.
    #[inline]
    pub fn step(&mut self, a: f64, b: f64) {
        let next = a * self.cur + b * self.prev;
        self.prev = self.cur;
        self.cur = next;
        let mag = self.cur.abs().max(self.prev.abs());
        if mag > exp2_const(BAND) {
            self.prev = libm::ldexp(self.prev, -BAND as i32);
            self.cur = libm::ldexp(self.cur, -BAND as i32);
            self.exp2 += BAND;
        } else if mag != 0.0 && mag < exp2_const(-BAND) {
            self.prev = libm::ldexp(self.prev, BAND as i32);
            self.cur = libm::ldexp(self.cur, BAND as i32);
            self.exp2 -= BAND;
        }
    }

    pub fn current(&self) -> Scaled {
        Scaled { mantissa: self.cur, exp2: self.exp2 }
    }
}

#[inline]
fn exp2_const(e: i64) -> f64 {
    libm::ldexp(1.0, e as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_ln_round_trips() {
        for &v in &[1.0, 1e-300, 3.7e250, 0.5] {
            let s = Scaled::from_ln(f64::ln(v), false);
            assert!((s.to_f64() - v).abs() <= 1e-15 * v);
        }
        let s = Scaled::from_ln(-40_000.0, true);
        assert_eq!(s.to_f64(), 0.0); // far below the subnormal range
        let (sign, ln) = s.sign_ln();
        assert_eq!(sign, -1);
        assert!((ln + 40_000.0).abs() < 1e-9);
    }
}
