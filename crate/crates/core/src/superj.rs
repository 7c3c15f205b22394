//! osp(1|2) super 6-j symbols.
//!
//! A super symbol carries a parity read off its triangles: α when all four are
//! integer, γ when all four are half-integer and β when exactly two are. The
//! value is
//!
//! ```text
//! (-1)^(4 Σ J_k j_k) √( ∏ [q_k - p_i]! / ∏ [p_i + ½]! )
//!     · Σ_z (-1)^z z! Π(z) / ( ∏ (z - [p_i + ½])! ∏ ([q_k + ½] - z)! )
//! ```
//!
//! with `[x]` the integer part and `Π` a parity-dependent monomial of degree ≤ 1.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith::{DenseExponents, SqrtRationalValue};
use crate::error::{Error, Result};
use crate::spin::{HalfInt, Mode, SixJSymbol, TriangleQuad};
use crate::zsum::single_sum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Alpha,
    Beta,
    Gamma,
}

impl Parity {
    pub const ALL: [Parity; 3] = [Parity::Alpha, Parity::Beta, Parity::Gamma];

    /// Table marker: `<a>`, `<b>` or `<g>`.
    pub fn marker(self) -> &'static str {
        match self {
            Parity::Alpha => "<a>",
            Parity::Beta => "<b>",
            Parity::Gamma => "<g>",
        }
    }

    /// Single-letter code used in file names.
    pub fn letter(self) -> char {
        match self {
            Parity::Alpha => 'a',
            Parity::Beta => 'b',
            Parity::Gamma => 'g',
        }
    }

    pub fn from_marker(s: &str) -> Option<Parity> {
        Parity::ALL.into_iter().find(|p| p.marker() == s)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Alpha => "alpha",
            Parity::Beta => "beta",
            Parity::Gamma => "gamma",
        })
    }
}

pub(crate) fn parity_of_triangles(tq: &TriangleQuad) -> Result<Parity> {
    match tq.half_integer_p_count() {
        0 => Ok(Parity::Alpha),
        2 => Ok(Parity::Beta),
        4 => Ok(Parity::Gamma),
        // Σp = 2 Σ spins is an integer, so the count is always even.
        n => Err(Error::Consistency(format!("{n} half-integer triangles"))),
    }
}

/// Parity of a super-valid symbol.
pub fn parity_of(symbol: &SixJSymbol) -> Result<Parity> {
    let tq = symbol.check_valid(Mode::Super)?;
    parity_of_triangles(&tq)
}

/// Triangle and quadrangle labels of a β symbol.
///
/// `p, p'` are the integer triangles and `p̄, p̄'` the half-integer ones, each pair
/// in index order. Exactly one quadrangle, `q_{l*}`, is integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BetaLabels {
    pub p: HalfInt,
    pub p_prime: HalfInt,
    pub pbar: HalfInt,
    pub pbar_prime: HalfInt,
    pub q_int: HalfInt,
    /// 1-based index of the integer quadrangle.
    pub l_star: usize,
    pub qbar: HalfInt,
    pub qbar_prime: HalfInt,
}

pub(crate) fn beta_labels(tq: &TriangleQuad) -> Result<BetaLabels> {
    let (ints, halves): (Vec<HalfInt>, Vec<HalfInt>) = tq.p.iter().partition(|p| p.is_integer());
    if ints.len() != 2 {
        return Err(Error::NotBeta);
    }
    let int_q: Vec<usize> = (0..3).filter(|&k| tq.q[k].is_integer()).collect();
    let &[l] = int_q.as_slice() else {
        return Err(Error::Consistency(format!("beta symbol with {} integer quadrangles", int_q.len())));
    };
    let others: Vec<HalfInt> = (0..3).filter(|&k| k != l).map(|k| tq.q[k]).collect();
    Ok(BetaLabels {
        p: ints[0],
        p_prime: ints[1],
        pbar: halves[0],
        pbar_prime: halves[1],
        q_int: tq.q[l],
        l_star: l + 1,
        qbar: others[0],
        qbar_prime: others[1],
    })
}

/// β labels of a symbol; errors with [`Error::NotBeta`] for α or γ symbols.
pub fn beta_decomposition(symbol: &SixJSymbol) -> Result<BetaLabels> {
    let tq = symbol.check_valid(Mode::Super)?;
    beta_labels(&tq)
}

/// Integer coefficients `(c1, c0)` of `Π(z) = c1·z + c0`.
fn monomial_coefficients(parity: Parity, symbol: &SixJSymbol, tq: &TriangleQuad) -> Result<(i64, i64)> {
    match parity {
        Parity::Alpha => Ok((0, 1)),
        Parity::Beta => {
            let b = beta_labels(tq)?;
            let (qb, qb2) = (b.qbar.twice(), b.qbar_prime.twice());
            let (p, p2) = (b.p.twice(), b.p_prime.twice());
            // -(q̄ + q̄' - p - p' + 1), doubled first.
            let slope2 = -(qb + qb2 - p - p2 + 2);
            // (q̄ + ½)(q̄' + ½) - p p', quadrupled first.
            let const4 = (qb + 1) * (qb2 + 1) - p * p2;
            if slope2 % 2 != 0 || const4 % 4 != 0 {
                return Err(Error::Consistency(format!("non-integer beta monomial for {symbol}")));
            }
            Ok((slope2 / 2, const4 / 4))
        }
        Parity::Gamma => {
            // 2 Π(0) = 4 Σ J_k j_k + 2 Σ spins + 1.
            let const2 = symbol.four_sum_jj() + symbol.twice_spin_sum() + 1;
            if const2 % 2 != 0 {
                return Err(Error::Consistency(format!("non-integer gamma monomial for {symbol}")));
            }
            Ok((-1, const2 / 2))
        }
    }
}

/// `Π_parity(z)` for the given symbol.
pub fn monomial(parity: Parity, symbol: &SixJSymbol, z: i64) -> Result<i64> {
    if parity == Parity::Alpha {
        return Ok(1);
    }
    let tq = symbol.triangles();
    let (c1, c0) = monomial_coefficients(parity, symbol, &tq)?;
    Ok(c1 * z + c0)
}

/// Exact value of a super 6-j symbol.
pub fn eval_super_6j(symbol: &SixJSymbol) -> Result<SqrtRationalValue> {
    let tq = symbol.check_valid(Mode::Super)?;
    let parity = parity_of_triangles(&tq)?;
    let (c1, c0) = monomial_coefficients(parity, symbol, &tq)?;

    let pd = tq.p.map(HalfInt::twice);
    let qd = tq.q.map(HalfInt::twice);
    let lower = pd.map(|p| (p + 1).div_euclid(2));
    let upper = qd.map(|q| (q + 1).div_euclid(2));

    let max_b = *upper.iter().max().unwrap();
    let mut exps = DenseExponents::new(max_b as u64 + 1);
    for &q in &qd {
        for &p in &pd {
            exps.add_factorial((q - p).div_euclid(2) as u64, 1);
        }
    }
    for &a in &lower {
        exps.add_factorial(a as u64, -1);
    }

    let sum = single_sum(lower, upper, 0, |z| Ok(c1 * z + c0), &mut exps, 2)?;
    if sum.is_zero() {
        return Ok(SqrtRationalValue::zero());
    }
    let mut numerator: BigInt = sum.numerator;
    if symbol.four_sum_jj() % 2 != 0 {
        numerator = -numerator;
    }
    Ok(SqrtRationalValue::from_parts(&BigRational::from_integer(numerator), &exps.into_sparse()))
}

/// Evaluates with the formula matching `mode`.
pub fn eval(symbol: &SixJSymbol, mode: Mode) -> Result<SqrtRationalValue> {
    match mode {
        Mode::Standard => crate::racah::eval_6j(symbol),
        Mode::Super => eval_super_6j(symbol),
    }
}
