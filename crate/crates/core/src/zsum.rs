//! Shared single-sum kernel for the standard and super evaluators.
//!
//! Both formulas have the shape
//!
//! ```text
//! Σ_z (-1)^z (z+s)! Π(z) / ( ∏_i (z - a_i)! ∏_k (b_k - z)! ),   max a ≤ z ≤ min b
//! ```
//!
//! Successive terms (without `Π`) differ by the small-integer ratio
//! `-(z+1+s) ∏_k (b_k - z) / ∏_i (z+1-a_i)`, so the sum is `F · S` where `S` is an
//! integer built by a Horner pass over those ratios and
//! `F = (-1)^zmin (zmin+s)! / (∏_i (zmax-a_i)! ∏_k (b_k-zmin)!)` is a pure
//! factorial quotient.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::DenseExponents;
use crate::error::{Error, Result};

pub(crate) struct ZSum {
    /// Integer numerator `S`, with `(-1)^zmin` already applied.
    pub numerator: BigInt,
}

/// Evaluates the sum. The factorial quotient `F` is multiplied into `exps`
/// raised to `f_power` (2 when `F` is to be moved under a square root).
pub(crate) fn single_sum(
    lower: [i64; 4],
    upper: [i64; 3],
    shift: i64,
    monomial: impl Fn(i64) -> Result<i64>,
    exps: &mut DenseExponents,
    f_power: i64,
) -> Result<ZSum> {
    let z_min = *lower.iter().max().unwrap();
    let z_max = *upper.iter().min().unwrap();
    if z_min > z_max || z_min + shift < 0 {
        return Err(Error::Consistency(format!("empty summation range [{z_min}, {z_max}]")));
    }

    let mut q = BigInt::one();
    let mut g = BigInt::from(monomial(z_max)?);
    for z in (z_min..z_max).rev() {
        let mut a = -(z + 1 + shift);
        let mut b = 1i64;
        for &bk in &upper {
            a *= bk - z;
        }
        for &ai in &lower {
            b *= z + 1 - ai;
        }
        // A zero factor would mean some term denominator does not divide the
        // common one.
        if b <= 0 || a == 0 {
            return Err(Error::Consistency(format!("z-sum ratio degenerate at z = {z}")));
        }
        q *= b;
        let pi = monomial(z)?;
        g = &q * pi + g * a;
    }
    if z_min % 2 != 0 {
        g = -g;
    }

    exps.add_factorial((z_min + shift) as u64, f_power);
    for &ai in &lower {
        exps.add_factorial((z_max - ai) as u64, -f_power);
    }
    for &bk in &upper {
        exps.add_factorial((bk - z_min) as u64, -f_power);
    }
    Ok(ZSum { numerator: g })
}

impl ZSum {
    pub(crate) fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}
