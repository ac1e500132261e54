//! Eisenstein integers `Z[w]`, `w = e^{2 pi i / 3}`, with `w^2 = -1 - w`.
//!
//! Every Walsh value in this crate is an `EisensteinInt`. All arithmetic is
//! checked: an `i64` overflow aborts instead of wrapping, so a result that
//! comes back is exact. Within the supported caps (`n <= 16`, sums of at
//! most a few values bounded by `3^n`) overflow cannot occur in practice.

use super::Trit;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[inline]
fn chk(v: Option<i64>) -> i64 {
    v.expect("EisensteinInt arithmetic overflow: value exceeds i64")
}

/// `re_unit + om_unit * w` with `w` a primitive cube root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EisensteinInt {
    pub re_unit: i64,
    pub om_unit: i64,
}

impl EisensteinInt {
    pub const ZERO: EisensteinInt = EisensteinInt { re_unit: 0, om_unit: 0 };
    pub const ONE: EisensteinInt = EisensteinInt { re_unit: 1, om_unit: 0 };
    pub const OMEGA: EisensteinInt = EisensteinInt { re_unit: 0, om_unit: 1 };

    #[inline]
    pub fn new(re_unit: i64, om_unit: i64) -> EisensteinInt {
        EisensteinInt { re_unit, om_unit }
    }

    /// `w^j` for `j in F_3`: `w^0 = 1`, `w^1 = w`, `w^2 = -1 - w`.
    #[inline]
    pub fn zeta_pow(j: Trit) -> EisensteinInt {
        match j.value() {
            0 => EisensteinInt::ONE,
            1 => EisensteinInt::OMEGA,
            _ => EisensteinInt::new(-1, -1),
        }
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.re_unit == 0 && self.om_unit == 0
    }

    /// Complex conjugate: `conj(a + b w) = (a - b) - b w`.
    #[inline]
    pub fn conj(self) -> EisensteinInt {
        EisensteinInt::new(chk(self.re_unit.checked_sub(self.om_unit)), chk(self.om_unit.checked_neg()))
    }

    /// `z * conj(z) = a^2 - a b + b^2 >= 0`, the squared magnitude.
    #[inline]
    pub fn norm(self) -> i64 {
        let (a, b) = (self.re_unit, self.om_unit);
        chk(chk(chk(a.checked_mul(a)).checked_sub(chk(a.checked_mul(b)))).checked_add(chk(b.checked_mul(b))))
    }

    /// `2 * Re(a + b w) = 2a - b`, always an exact integer.
    #[inline]
    pub fn two_re(self) -> i64 {
        chk(chk(self.re_unit.checked_mul(2)).checked_sub(self.om_unit))
    }

    /// Multiplication by `w`: `(a + b w) w = -b + (a - b) w`.
    #[inline]
    pub fn mul_omega(self) -> EisensteinInt {
        EisensteinInt::new(chk(self.om_unit.checked_neg()), chk(self.re_unit.checked_sub(self.om_unit)))
    }

    /// Multiplication by `w^2`: `(a + b w) w^2 = (b - a) - a w`.
    #[inline]
    pub fn mul_omega2(self) -> EisensteinInt {
        EisensteinInt::new(chk(self.om_unit.checked_sub(self.re_unit)), chk(self.re_unit.checked_neg()))
    }

    /// Scales by an ordinary integer.
    #[inline]
    pub fn scale(self, k: i64) -> EisensteinInt {
        EisensteinInt::new(chk(self.re_unit.checked_mul(k)), chk(self.om_unit.checked_mul(k)))
    }

    /// Exact division by an integer; `None` unless both components divide.
    #[inline]
    pub fn div_exact(self, k: i64) -> Option<EisensteinInt> {
        if k == 0 || self.re_unit % k != 0 || self.om_unit % k != 0 {
            return None;
        }
        Some(EisensteinInt::new(self.re_unit / k, self.om_unit / k))
    }
}

impl Add for EisensteinInt {
    type Output = EisensteinInt;
    #[inline]
    fn add(self, rhs: EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(
            chk(self.re_unit.checked_add(rhs.re_unit)),
            chk(self.om_unit.checked_add(rhs.om_unit)),
        )
    }
}

impl Sub for EisensteinInt {
    type Output = EisensteinInt;
    #[inline]
    fn sub(self, rhs: EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(
            chk(self.re_unit.checked_sub(rhs.re_unit)),
            chk(self.om_unit.checked_sub(rhs.om_unit)),
        )
    }
}

impl Neg for EisensteinInt {
    type Output = EisensteinInt;
    #[inline]
    fn neg(self) -> EisensteinInt {
        EisensteinInt::new(chk(self.re_unit.checked_neg()), chk(self.om_unit.checked_neg()))
    }
}

impl Mul for EisensteinInt {
    type Output = EisensteinInt;
    /// `(a + b w)(c + d w) = (ac - bd) + (ad + bc - bd) w`.
    #[inline]
    fn mul(self, rhs: EisensteinInt) -> EisensteinInt {
        let (a, b, c, d) = (self.re_unit, self.om_unit, rhs.re_unit, rhs.om_unit);
        let ac = chk(a.checked_mul(c));
        let bd = chk(b.checked_mul(d));
        let ad = chk(a.checked_mul(d));
        let bc = chk(b.checked_mul(c));
        EisensteinInt::new(chk(ac.checked_sub(bd)), chk(chk(ad.checked_add(bc)).checked_sub(bd)))
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}w", self.re_unit, self.om_unit)
    }
}
