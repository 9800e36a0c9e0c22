//! Exact ground fields.
//!
//! Everything downstream is generic over [`Scalar`]. Two families are provided:
//! arbitrary-precision rationals and prime fields `Fp<P>` with `P` fixed at
//! compile time.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

/// An exact field element.
pub trait Scalar:
    Num + Neg<Output = Self> + Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Human-readable name of the field, e.g. `Q` or `F_7`.
    fn field_name() -> String;

    /// Characteristic of the field (0 for the rationals).
    fn characteristic() -> u64;

    fn from_i64(v: i64) -> Self;

    /// `num/den`, or `None` when `den` vanishes in the field.
    fn from_frac(num: i64, den: i64) -> Option<Self> {
        let d = Self::from_i64(den);
        if d.is_zero() {
            None
        } else {
            Some(Self::from_i64(num) / d)
        }
    }

    /// Multiplicative inverse; `None` for zero.
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    /// Rescale a coefficient vector to a canonical representative of its line:
    /// integral and primitive over the rationals, leading coefficient one elsewhere.
    fn normalize_line(v: &mut [Self]);
}

impl Scalar for BigRational {
    fn field_name() -> String {
        "Q".to_string()
    }

    fn characteristic() -> u64 {
        0
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn normalize_line(v: &mut [Self]) {
        let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() else {
            return;
        };
        let mut den = BigInt::one();
        for x in v.iter() {
            den = den.lcm(x.denom());
        }
        let mut num = BigInt::zero();
        for x in v.iter() {
            let scaled = (x * BigRational::from_integer(den.clone())).to_integer();
            num = num.gcd(&scaled);
        }
        if num.is_zero() {
            return;
        }
        let mut factor = BigRational::new(den, num);
        if lead.is_negative() {
            factor = -factor;
        }
        for x in v.iter_mut() {
            *x = &*x * &factor;
        }
    }
}

/// Integers modulo a prime `P`. Primality is checked with [`is_prime`] by callers
/// that choose `P` at run time; arithmetic itself assumes it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
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

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp(((self.0 as u128 + o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        assert!(o.0 != 0, "division by zero in F_{P}");
        self * o.pow(P - 2)
    }
}

impl<const P: u64> Rem for Fp<P> {
    type Output = Self;
    fn rem(self, _o: Self) -> Self {
        Fp(0)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        let v = i64::from_str_radix(s, radix)?;
        Ok(Fp::new(v))
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn field_name() -> String {
        format!("F_{P}")
    }

    fn characteristic() -> u64 {
        P
    }

    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }

    fn normalize_line(v: &mut [Self]) {
        if let Some(lead) = v.iter().find(|x| !x.is_zero()).copied() {
            let inv = Fp::<P>(1) / lead;
            for x in v.iter_mut() {
                *x = *x * inv;
            }
        }
    }
}

/// Deterministic primality test by trial division (ample for field moduli).
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Parse `a` or `a/b` into a field element.
pub fn parse_scalar<F: Scalar>(s: &str) -> Option<F> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim().parse::<i64>().ok()?, b.trim().parse::<i64>().ok()?),
        None => (s.parse::<i64>().ok()?, 1),
    };
    F::from_frac(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn prime_field_inverse() {
        for a in 1..7 {
            let x = F7::new(a);
            assert_eq!(x * x.inverse().unwrap(), F7::one());
        }
        assert!(F7::zero().inverse().is_none());
        assert_eq!(F7::new(-1), F7::new(6));
    }

    #[test]
    fn fractions() {
        let q: BigRational = parse_scalar("-3/6").unwrap();
        assert_eq!(q, BigRational::from_frac(-1, 2).unwrap());
        let x: F7 = parse_scalar("1/2").unwrap();
        assert_eq!(x * F7::new(2), F7::one());
        assert!(parse_scalar::<F7>("1/7").is_none());
    }

    #[test]
    fn normalize_rational_line() {
        let mut v = vec![
            BigRational::from_frac(-1, 2).unwrap(),
            BigRational::from_frac(1, 3).unwrap(),
        ];
        BigRational::normalize_line(&mut v);
        assert_eq!(v, vec![BigRational::from_i64(3), BigRational::from_i64(-2)]);
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
