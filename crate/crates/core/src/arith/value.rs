use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::primes::PrimeExponents;

/// An exact real `r·√s` with `r` rational and `s` a squarefree positive rational.
///
/// The form is canonical, so structural equality is value equality:
///
/// * `s` carries every prime with an odd exponent in `v²`, with exponent `+1`
///   if that exponent is positive and `-1` if it is negative;
/// * `r` carries the sign and everything else;
/// * zero is `r = 0, s = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SqrtRationalValue {
    r: BigRational,
    s: PrimeExponents,
}

impl SqrtRationalValue {
    pub fn zero() -> Self {
        SqrtRationalValue { r: BigRational::zero(), s: PrimeExponents::one() }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(r: BigRational) -> Self {
        SqrtRationalValue { r, s: PrimeExponents::one() }
    }

    /// Canonical form of `coef · √radicand`.
    pub fn from_parts(coef: &BigRational, radicand: &PrimeExponents) -> Self {
        if coef.is_zero() {
            return Self::zero();
        }
        let mut num = coef.numer().clone();
        let mut den = coef.denom().clone();
        let mut s = PrimeExponents::one();
        for (p, e) in radicand.iter() {
            // Truncating split: e = 2a + b with b in {-1, 0, 1} sharing e's sign.
            let (a, b) = (e / 2, e % 2);
            let pw = num_traits::pow(BigInt::from(p), a.unsigned_abs() as usize);
            if a > 0 {
                num *= pw;
            } else if a < 0 {
                den *= pw;
            }
            if b != 0 {
                s.add_exp(p, b);
            }
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        // A radical prime whose exponent sign disagrees with a factor left in r
        // flips side: e.g. (1/5)·√5 = √(1/5).
        let mut flips = Vec::new();
        for (p, b) in s.iter() {
            let bp = BigInt::from(p);
            if b < 0 && num.is_multiple_of(&bp) {
                num /= &bp;
                flips.push((p, 2));
            } else if b > 0 && den.is_multiple_of(&bp) {
                den /= &bp;
                flips.push((p, -2));
            }
        }
        for (p, d) in flips {
            s.add_exp(p, d);
        }
        SqrtRationalValue { r: BigRational::new_raw(num, den), s }
    }

    /// Canonicalizes `sum · √prefactor`.
    pub fn canonical_sqrt(prefactor: &PrimeExponents, sum: &BigRational) -> Self {
        Self::from_parts(sum, prefactor)
    }

    /// Rational coefficient `r` (carries the sign).
    pub fn r(&self) -> &BigRational {
        &self.r
    }

    /// Squarefree radicand `s` as prime exponents (all `±1`).
    pub fn s_exponents(&self) -> &PrimeExponents {
        &self.s
    }

    pub fn s(&self) -> BigRational {
        self.s.to_rational()
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.r.is_zero() {
            0
        } else if self.r.is_positive() {
            1
        } else {
            -1
        }
    }

    /// `v²`, which is always rational.
    pub fn square(&self) -> BigRational {
        &self.r * &self.r * self.s()
    }

    pub fn neg(&self) -> Self {
        SqrtRationalValue { r: -self.r.clone(), s: self.s.clone() }
    }

    /// Floating-point approximation; for display and debugging only.
    pub fn to_f64(&self) -> f64 {
        let r = self.r.to_f64().unwrap_or(f64::NAN);
        let s = self.s().to_f64().unwrap_or(f64::NAN);
        r * s.sqrt()
    }
}

impl fmt::Display for SqrtRationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s.is_one() {
            write!(f, "{}", self.r)
        } else {
            write!(f, "{}*sqrt({})", self.r, self.s())
        }
    }
}
