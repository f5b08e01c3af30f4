//! Eisenstein integers a + b·w3, where w3 = (-1 + i*sqrt(3))/2 is a primitive
//! cube root of unity. Coefficients are arbitrary precision; there is no
//! division (the ring is only ever used additively/multiplicatively here).

use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::Error;

/// a + b*w3 with w3^2 = -1 - w3.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EisensteinInt {
    a: BigInt,
    b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        EisensteinInt { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        EisensteinInt::new(0, 0)
    }

    pub fn one() -> Self {
        EisensteinInt::new(1, 0)
    }

    pub fn omega3() -> Self {
        EisensteinInt::new(0, 1)
    }

    /// w6^k for the primitive sixth root w6 = 1 + w3 (= -w3^2).
    /// The six powers cycle 1, 1+w3, w3, -1, -1-w3, -w3.
    pub fn omega6_power(k: u64) -> Self {
        match k % 6 {
            0 => EisensteinInt::new(1, 0),
            1 => EisensteinInt::new(1, 1),
            2 => EisensteinInt::new(0, 1),
            3 => EisensteinInt::new(-1, 0),
            4 => EisensteinInt::new(-1, -1),
            _ => EisensteinInt::new(0, -1),
        }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when the w3 coefficient vanishes, i.e. the value is in Z.
    pub fn is_rational_integer(&self) -> bool {
        self.b.is_zero()
    }

    /// Complex conjugate: conj(w3) = w3^2 = -1 - w3, so (a, b) -> (a - b, -b).
    pub fn conj(&self) -> Self {
        EisensteinInt { a: &self.a - &self.b, b: -&self.b }
    }

    /// Field norm a^2 - ab + b^2 (= |a + b*w3|^2), never negative.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Numeric embedding into C.
    pub fn to_complex(&self) -> Complex64 {
        let a = self.a.to_f64().expect("coefficient exceeds f64 range");
        let b = self.b.to_f64().expect("coefficient exceeds f64 range");
        let half_sqrt3 = libm::sqrt(3.0) / 2.0;
        Complex64::new(a - b / 2.0, b * half_sqrt3)
    }

    /// Canonical textual form, e.g. "-1-2*w3", "2+w3", "-w3", "0".
    pub fn render(&self) -> String {
        alloc::format!("{self}")
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let mag = self.b.abs();
        let sign = if self.b.is_negative() { "-" } else { "+" };
        if self.a.is_zero() {
            // leading term: omit a bare "+"
            if self.b.is_negative() {
                if mag == BigInt::from(1) {
                    return write!(f, "-w3");
                }
                return write!(f, "-{mag}*w3");
            }
            if mag == BigInt::from(1) {
                return write!(f, "w3");
            }
            return write!(f, "{mag}*w3");
        }
        if mag == BigInt::from(1) {
            write!(f, "{}{sign}w3", self.a)
        } else {
            write!(f, "{}{sign}{mag}*w3", self.a)
        }
    }
}

impl FromStr for EisensteinInt {
    type Err = Error;

    /// Parses the same grammar `Display` emits, plus the obvious variants
    /// ("1*w3", whitespace around terms).
    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: String = s.chars().filter(|c| !c.is_ascii_whitespace()).collect();
        let bytes = compact.as_bytes();
        if bytes.is_empty() {
            return Err(Error::Parse { what: "empty Eisenstein literal" });
        }
        let mut a = BigInt::zero();
        let mut b = BigInt::zero();
        let mut i = 0usize;
        while i < bytes.len() {
            let negative = match bytes[i] {
                b'+' => {
                    i += 1;
                    false
                }
                b'-' => {
                    i += 1;
                    true
                }
                _ => false,
            };
            // bare w3 term
            if compact[i..].starts_with("w3") {
                i += 2;
                if negative {
                    b -= 1;
                } else {
                    b += 1;
                }
                continue;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i == start {
                return Err(Error::Parse { what: "expected digits or w3" });
            }
            let mut mag: BigInt = compact[start..i]
                .parse()
                .map_err(|_| Error::Parse { what: "integer literal" })?;
            if negative {
                mag = -mag;
            }
            if compact[i..].starts_with("*w3") {
                i += 3;
                b += mag;
            } else if compact[i..].starts_with("w3") {
                i += 2;
                b += mag;
            } else {
                a += mag;
            }
        }
        Ok(EisensteinInt { a, b })
    }
}

impl From<i64> for EisensteinInt {
    fn from(v: i64) -> Self {
        EisensteinInt::new(v, 0)
    }
}

impl Add for &EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

/// (a1 + b1 w)(a2 + b2 w) = (a1 a2 - b1 b2) + (a1 b2 + a2 b1 - b1 b2) w,
/// using w^2 = -1 - w.
impl Mul for &EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, rhs: &EisensteinInt) -> EisensteinInt {
        let bb = &self.b * &rhs.b;
        EisensteinInt {
            a: &self.a * &rhs.a - &bb,
            b: &self.a * &rhs.b + &rhs.a * &self.b - &bb,
        }
    }
}

impl Neg for &EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt { a: -&self.a, b: -&self.b }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for EisensteinInt {
            type Output = EisensteinInt;
            fn $method(self, rhs: EisensteinInt) -> EisensteinInt {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn e(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    #[test]
    fn omega6_squared_is_omega3() {
        let w6 = EisensteinInt::omega6_power(1);
        assert_eq!(e(1, 1), w6);
        assert_eq!(EisensteinInt::omega3(), &w6 * &w6);
    }

    #[test]
    fn omega6_fifth_power() {
        assert_eq!(e(0, -1), EisensteinInt::omega6_power(5));
        // w6^5 = -w3, i.e. conj of w6 up to the sixth-root structure
        let mut acc = EisensteinInt::one();
        let w6 = EisensteinInt::omega6_power(1);
        for _ in 0..5 {
            acc = &acc * &w6;
        }
        assert_eq!(acc, EisensteinInt::omega6_power(5));
    }

    #[test]
    fn omega6_powers_multiply_to_one() {
        for k in 0..=6 {
            let prod = &EisensteinInt::omega6_power(k) * &EisensteinInt::omega6_power(6 - k);
            assert_eq!(EisensteinInt::one(), prod, "k = {k}");
        }
    }

    #[test]
    fn conjugation_flips_omega_coeff() {
        assert_eq!(e(1, 2), e(-1, -2).conj());
        assert_eq!(e(-1, -1), EisensteinInt::omega3().conj());
    }

    #[test]
    fn norm_matches_modulus_squared() {
        for (a, b) in [(0i64, 0i64), (3, 0), (-1, -2), (5, 7), (-4, 9)] {
            let x = e(a, b);
            let z = x.to_complex();
            let norm = x.norm().to_f64().unwrap();
            assert!((z.norm_sqr() - norm).abs() < 1e-9, "({a},{b})");
            assert!(norm >= 0.0);
        }
    }

    #[test]
    fn rendering_round_trips() {
        for (x, s) in [
            (e(-1, -2), "-1-2*w3"),
            (e(2, 1), "2+w3"),
            (e(0, -1), "-w3"),
            (e(0, 2), "2*w3"),
            (e(7, 0), "7"),
            (e(0, 0), "0"),
            (e(-3, 4), "-3+4*w3"),
        ] {
            assert_eq!(s, x.to_string());
            assert_eq!(x, s.parse().unwrap());
        }
        // lenient variants
        assert_eq!(e(1, 1), "1 + 1*w3".parse().unwrap());
        assert_eq!(e(0, 1), "+w3".parse().unwrap());
        assert!("".parse::<EisensteinInt>().is_err());
        assert!("2*".parse::<EisensteinInt>().is_err());
        assert!("w4".parse::<EisensteinInt>().is_err());
    }

    #[test]
    fn numeric_embedding_agrees_with_mul() {
        let x = e(3, -2);
        let y = e(-1, 5);
        let exact = (&x * &y).to_complex();
        let float = x.to_complex() * y.to_complex();
        assert!((exact - float).norm() < 1e-12);
    }
}
