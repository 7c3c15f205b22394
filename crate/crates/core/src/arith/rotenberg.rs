use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::primes::PrimeExponents;
use super::value::SqrtRationalValue;
use crate::error::{Error, Result};

/// The sixteen base primes `2..=53` of the table format.
pub const BASE_PRIMES: [u64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// A value written as `multiplier · √(∏ pᵉ)`.
///
/// The radicand is split into exponents of the sixteen base primes and a list of
/// `(prime, exponent)` overflow factors for primes beyond 53. The multiplier is the
/// signed numerator of the canonical coefficient; its denominator is folded into
/// the radicand as even negative exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotenbergLine {
    pub sign_multiplier: BigInt,
    pub base_exps: [i64; 16],
    pub overflow: Vec<(u64, i64)>,
}

impl RotenbergLine {
    pub fn encode(value: &SqrtRationalValue) -> Self {
        let r = value.r();
        let mut radicand = value.s_exponents().clone();
        if !r.is_zero() {
            radicand.mul_pow(&PrimeExponents::factor_integer(r.denom()), -2);
        }
        let mut base_exps = [0; 16];
        let mut overflow = Vec::new();
        for (p, e) in radicand.iter() {
            match BASE_PRIMES.iter().position(|&b| b == p) {
                Some(i) => base_exps[i] = e,
                None => overflow.push((p, e)),
            }
        }
        RotenbergLine { sign_multiplier: r.numer().clone(), base_exps, overflow }
    }

    pub fn radicand(&self) -> PrimeExponents {
        let mut e = PrimeExponents::from_pairs(BASE_PRIMES.iter().copied().zip(self.base_exps));
        for &(p, x) in &self.overflow {
            e.add_exp(p, x);
        }
        e
    }

    pub fn decode(&self) -> SqrtRationalValue {
        SqrtRationalValue::from_parts(&BigRational::from_integer(self.sign_multiplier.clone()), &self.radicand())
    }
}

pub fn to_rotenberg(value: &SqrtRationalValue) -> RotenbergLine {
    RotenbergLine::encode(value)
}

impl fmt::Display for RotenbergLine {
    /// `e1 … e16 &m p^e …`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.base_exps {
            write!(f, "{e} ")?;
        }
        write!(f, "&{}", self.sign_multiplier)?;
        for (p, e) in &self.overflow {
            write!(f, " {p}^{e}")?;
        }
        Ok(())
    }
}

impl FromStr for RotenbergLine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("{what} in Rotenberg field {s:?}"));
        let mut toks = s.split_whitespace();
        let mut base_exps = [0i64; 16];
        for slot in base_exps.iter_mut() {
            let tok = toks.next().ok_or_else(|| bad("missing exponent"))?;
            *slot = tok.parse().map_err(|_| bad("bad exponent"))?;
        }
        let mult = toks.next().and_then(|t| t.strip_prefix('&')).ok_or_else(|| bad("missing '&' multiplier"))?;
        let sign_multiplier: BigInt = mult.parse().map_err(|_| bad("bad multiplier"))?;
        let mut overflow: Vec<(u64, i64)> = Vec::new();
        for tok in toks {
            let (p, e) = tok.split_once('^').ok_or_else(|| bad("bad overflow factor"))?;
            let p: u64 = p.parse().map_err(|_| bad("bad overflow prime"))?;
            let e: i64 = e.parse().map_err(|_| bad("bad overflow exponent"))?;
            if p <= 53 || overflow.last().is_some_and(|&(q, _)| q >= p) || e == 0 {
                return Err(bad("non-canonical overflow factor"));
            }
            overflow.push((p, e));
        }
        Ok(RotenbergLine { sign_multiplier, base_exps, overflow })
    }
}
