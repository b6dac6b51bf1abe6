//! Exact scalar fields.
//!
//! Everything above this module is generic over [`Field`]. The default is
//! [`Rational`]; [`Fp`] is a prime field for faster sweeps.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    /// Short name used in dumps, e.g. `"Q"` or `"F_101"`.
    fn name() -> alloc::string::String;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Rational number with `i128` parts, always reduced, denominator positive.
///
/// Arithmetic is checked: an overflow panics instead of wrapping, so a result
/// is either exact or absent.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        let (mut n, mut d) = if g == 0 { (0, 1) } else { (num / g, den / g) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        Rational { num: n, den: d }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<i128> {
        (self.den == 1).then_some(self.num)
    }
}

const OVERFLOW: &str = "rational arithmetic overflowed i128";

impl Add for Rational {
    type Output = Rational;
    fn add(self, o: Rational) -> Rational {
        if self.den == 1 && o.den == 1 {
            return Rational { num: self.num.checked_add(o.num).expect(OVERFLOW), den: 1 };
        }
        let g = gcd(self.den, o.den);
        let l = self.den / g;
        let n = self
            .num
            .checked_mul(o.den / g)
            .and_then(|a| o.num.checked_mul(l).and_then(|b| a.checked_add(b)))
            .expect(OVERFLOW);
        let d = l.checked_mul(o.den).expect(OVERFLOW);
        Rational::new(n, d)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, o: Rational) -> Rational {
        self + (-o)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, o: Rational) -> Rational {
        if self.den == 1 && o.den == 1 {
            return Rational { num: self.num.checked_mul(o.num).expect(OVERFLOW), den: 1 };
        }
        let g1 = gcd(self.num, o.den).max(1);
        let g2 = gcd(o.num, self.den).max(1);
        let n = (self.num / g1).checked_mul(o.num / g2).expect(OVERFLOW);
        let d = (self.den / g2).checked_mul(o.den / g1).expect(OVERFLOW);
        Rational::new(n, d)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: self.num.checked_neg().expect(OVERFLOW), den: self.den }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational { num: 0, den: 1 }
    }
    fn one() -> Self {
        Rational { num: 1, den: 1 }
    }
    fn from_i64(v: i64) -> Self {
        Rational { num: v as i128, den: 1 }
    }
    fn is_zero(&self) -> bool {
        self.num == 0
    }
    fn inv(&self) -> Self {
        assert!(self.num != 0, "inverse of zero");
        Rational::new(self.den, self.num)
    }
    fn name() -> alloc::string::String {
        "Q".into()
    }
}

/// The prime field `Z/P`. `P` must be an odd prime below 2^31.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn value(&self) -> u64 {
        self.0
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp((self.0 + P - o.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(self.0 * o.0 % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        // Fermat
        let mut base = self.0;
        let mut e = P - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Fp(acc)
    }
    fn name() -> alloc::string::String {
        alloc::format!("F_{}", P)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_basics() {
        let a = Rational::new(6, -4);
        assert_eq!(a, Rational::new(-3, 2));
        assert_eq!(a + Rational::new(3, 2), Rational::zero());
        assert_eq!(a * a.inv(), Rational::one());
        assert_eq!((a - Rational::one()).to_integer(), None);
        assert_eq!(Rational::new(4, 2).to_integer(), Some(2));
    }

    #[test]
    fn prime_field_inverse() {
        type F = Fp<101>;
        for v in 1..101 {
            let x = F::from_i64(v);
            assert!((x * x.inv()).is_one());
        }
        assert_eq!(F::from_i64(-1), F::from_i64(100));
    }
}
