//! Exact standard 6-j symbols from the single z-sum in triangle/quadrangle form:
//!
//! ```text
//! {J1 J2 J3; j1 j2 j3} = √( ∏_{k,i} (q_k - p_i)! / ∏_i (p_i + 1)! )
//!                        · Σ_z (-1)^z (z+1)! / ( ∏_i (z - p_i)! ∏_k (q_k - z)! )
//! ```

use num_rational::BigRational;

use crate::arith::{DenseExponents, SqrtRationalValue};
use crate::error::Result;
use crate::spin::{Mode, SixJSymbol};
use crate::zsum::single_sum;

/// Exact value of a standard 6-j symbol.
///
/// Fails with [`Error::InvalidTriangle`](crate::Error::InvalidTriangle) or
/// [`Error::HalfIntegerTriangle`](crate::Error::HalfIntegerTriangle) when the
/// symbol is not standard-valid.
pub fn eval_6j(symbol: &SixJSymbol) -> Result<SqrtRationalValue> {
    let tq = symbol.check_valid(Mode::Standard)?;
    let p = tq.p.map(|x| x.twice() / 2);
    let q = tq.q.map(|x| x.twice() / 2);

    let max_q = *q.iter().max().unwrap();
    let mut exps = DenseExponents::new(max_q as u64 + 1);
    for &qk in &q {
        for &pi in &p {
            exps.add_factorial((qk - pi) as u64, 1);
        }
    }
    for &pi in &p {
        exps.add_factorial((pi + 1) as u64, -1);
    }

    let sum = single_sum(p, q, 1, |_| Ok(1), &mut exps, 2)?;
    if sum.is_zero() {
        return Ok(SqrtRationalValue::zero());
    }
    Ok(SqrtRationalValue::from_parts(&BigRational::from_integer(sum.numerator), &exps.into_sparse()))
}
