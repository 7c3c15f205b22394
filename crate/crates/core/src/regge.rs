//! The five Regge transformations.
//!
//! Each transformation is a 6×6 matrix with entries in {0, ±½, 1} acting on the
//! spin vector `(J1, J2, J3, j1, j2, j3)`. Matrices are stored doubled so that
//! application stays in integer arithmetic on doubled spins.
//!
//! [`apply_regge`] uses the quadrangle form of each transformation
//! (`J_l, ½q_l - J_m, ½q_l - J_n` and its cyclic relatives). For κ = 4, 5 that is
//! exactly the matrix product; for κ = 1, 2, 3 it differs from the matrix product
//! by a fixed tetrahedral rearrangement (see [`apply_matrix`]).

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::spin::{Mode, SixJSymbol};
use crate::superj::{beta_labels, parity_of_triangles, Parity};

const R_TWICE: [[[i64; 6]; 6]; 5] = [
    [
        [2, 0, 0, 0, 0, 0],
        [0, 1, 1, 0, 1, -1],
        [0, 1, 1, 0, -1, 1],
        [0, 0, 0, 2, 0, 0],
        [0, 1, -1, 0, 1, 1],
        [0, -1, 1, 0, 1, 1],
    ],
    [
        [1, 0, 1, 1, 0, -1],
        [0, 2, 0, 0, 0, 0],
        [1, 0, 1, -1, 0, 1],
        [1, 0, -1, 1, 0, 1],
        [0, 0, 0, 0, 2, 0],
        [-1, 0, 1, 1, 0, 1],
    ],
    [
        [1, 1, 0, 1, -1, 0],
        [1, 1, 0, -1, 1, 0],
        [0, 0, 2, 0, 0, 0],
        [1, -1, 0, 1, 1, 0],
        [-1, 1, 0, 1, 1, 0],
        [0, 0, 0, 0, 0, 2],
    ],
    [
        [0, 1, 1, 0, 1, -1],
        [1, 0, 1, -1, 0, 1],
        [1, 1, 0, 1, -1, 0],
        [0, 1, -1, 0, 1, 1],
        [-1, 0, 1, 1, 0, 1],
        [1, -1, 0, 1, 1, 0],
    ],
    [
        [0, 1, 1, 0, -1, 1],
        [1, 0, 1, 1, 0, -1],
        [1, 1, 0, -1, 1, 0],
        [0, -1, 1, 0, 1, 1],
        [1, 0, -1, 1, 0, 1],
        [-1, 1, 0, 1, 1, 0],
    ],
];

pub const KAPPAS: [usize; 5] = [1, 2, 3, 4, 5];

/// An exact 6×6 rational matrix.
pub type Matrix6 = [[Rational64; 6]; 6];

/// Regge matrix `R_κ`, entries stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReggeMatrix {
    kappa: usize,
    twice: [[i64; 6]; 6],
}

impl ReggeMatrix {
    pub fn kappa(&self) -> usize {
        self.kappa
    }

    /// Entry `(row, col)`, 0-based, as a rational.
    pub fn entry(&self, row: usize, col: usize) -> Rational64 {
        Rational64::new(self.twice[row][col], 2)
    }

    /// Doubled entries `2·R_κ`.
    pub fn twice(&self) -> [[i64; 6]; 6] {
        self.twice
    }

    pub fn to_matrix(&self) -> Matrix6 {
        let mut m = [[Rational64::zero(); 6]; 6];
        for (r, row) in m.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                *x = self.entry(r, c);
            }
        }
        m
    }
}

pub fn regge_matrix(kappa: usize) -> Result<ReggeMatrix> {
    if !(1..=5).contains(&kappa) {
        return Err(Error::BadKappa(kappa));
    }
    Ok(ReggeMatrix { kappa, twice: R_TWICE[kappa - 1] })
}

/// Result of applying a transformation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReggeOutcome {
    Image(SixJSymbol),
    /// Some output spin would be a quarter-integer (a needed quadrangle is half-integer).
    Rejected,
}

impl ReggeOutcome {
    pub fn image(self) -> Option<SixJSymbol> {
        match self {
            ReggeOutcome::Image(s) => Some(s),
            ReggeOutcome::Rejected => None,
        }
    }
}

fn finish(twice: [i64; 6], kappa: usize, input: &SixJSymbol) -> Result<ReggeOutcome> {
    SixJSymbol::new(twice)
        .map(ReggeOutcome::Image)
        .map_err(|_| Error::Consistency(format!("Regge R{kappa} maps {input} to a negative spin")))
}

/// `J' = R_κ J` computed literally from the matrix.
pub fn apply_matrix(kappa: usize, symbol: &SixJSymbol) -> Result<ReggeOutcome> {
    let m = regge_matrix(kappa)?;
    let t = symbol.twice();
    let mut out = [0i64; 6];
    for (o, row) in out.iter_mut().zip(m.twice.iter()) {
        let x: i64 = row.iter().zip(t.iter()).map(|(a, b)| a * b).sum();
        if x % 2 != 0 {
            return Ok(ReggeOutcome::Rejected);
        }
        *o = x / 2;
    }
    finish(out, kappa, symbol)
}

/// Applies Regge transformation `κ` in its quadrangle form.
///
/// κ = l ∈ {1,2,3}: `{J_l, ½q_l - J_m, ½q_l - J_n; j_l, ½q_l - j_m, ½q_l - j_n}`
/// with `(l, m, n)` cyclic; κ = 4: `{½q_1 - j_3, ½q_2 - j_1, ½q_3 - j_2; …}`;
/// κ = 5: `{½q_1 - j_2, ½q_2 - j_3, ½q_3 - j_1; …}` (lower row with `J`).
pub fn apply_regge(kappa: usize, symbol: &SixJSymbol) -> Result<ReggeOutcome> {
    if !(1..=5).contains(&kappa) {
        return Err(Error::BadKappa(kappa));
    }
    let t = symbol.twice();
    let q = symbol.triangles().q.map(|x| x.twice());
    let (upper, lower) = (&t[0..3], &t[3..6]);
    let out = match kappa {
        1..=3 => {
            let l = kappa - 1;
            let (m, n) = ((l + 1) % 3, (l + 2) % 3);
            if q[l] % 2 != 0 {
                return Ok(ReggeOutcome::Rejected);
            }
            let h = q[l] / 2;
            [upper[l], h - upper[m], h - upper[n], lower[l], h - lower[m], h - lower[n]]
        }
        _ => {
            if q.iter().any(|x| x % 2 != 0) {
                return Ok(ReggeOutcome::Rejected);
            }
            let h = q.map(|x| x / 2);
            // κ = 4 pairs q_l with index n = l+2, κ = 5 with m = l+1.
            let shift = if kappa == 4 { 2 } else { 1 };
            let mut out = [0i64; 6];
            for l in 0..3 {
                let k = (l + shift) % 3;
                out[l] = h[l] - lower[k];
                out[l + 3] = h[l] - upper[k];
            }
            out
        }
    };
    finish(out, kappa, symbol)
}

/// Transformations that stay within half-integer spins for `mode`.
///
/// Standard symbols and super α/γ symbols admit all five; a super β symbol only
/// the one at its integer quadrangle.
pub fn applicable_set(symbol: &SixJSymbol, mode: Mode) -> Result<Vec<usize>> {
    let tq = symbol.check_valid(mode)?;
    if mode == Mode::Standard {
        return Ok(KAPPAS.to_vec());
    }
    match parity_of_triangles(&tq)? {
        Parity::Alpha | Parity::Gamma => Ok(KAPPAS.to_vec()),
        Parity::Beta => Ok(vec![beta_labels(&tq)?.l_star]),
    }
}

pub fn identity6() -> Matrix6 {
    let mut m = [[Rational64::zero(); 6]; 6];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rational64::one();
    }
    m
}

pub fn mat_mul(a: &Matrix6, b: &Matrix6) -> Matrix6 {
    let mut m = [[Rational64::zero(); 6]; 6];
    for i in 0..6 {
        for j in 0..6 {
            m[i][j] = (0..6).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    m
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn determinant(a: &Matrix6) -> Rational64 {
    let mut m = *a;
    let mut det = Rational64::one();
    for col in 0..6 {
        let Some(pivot) = (col..6).find(|&r| !m[r][col].is_zero()) else {
            return Rational64::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        let prow = m[col];
        for row in m.iter_mut().skip(col + 1) {
            let f = row[col] / prow[col];
            for (x, v) in row[col..].iter_mut().zip(&prow[col..]) {
                *x -= f * v;
            }
        }
    }
    det
}

/// Coefficients `c_0..c_6` of the monic characteristic polynomial `det(xI - A)`
/// (Faddeev–LeVerrier).
pub fn characteristic_polynomial(a: &Matrix6) -> [Rational64; 7] {
    let mut coeffs = [Rational64::zero(); 7];
    coeffs[6] = Rational64::one();
    let mut m = [[Rational64::zero(); 6]; 6];
    for k in 1..=6usize {
        let mut next = mat_mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += coeffs[7 - k];
        }
        m = next;
        let am = mat_mul(a, &m);
        let trace: Rational64 = (0..6).map(|i| am[i][i]).sum();
        coeffs[6 - k] = -trace / Rational64::from_integer(k as i64);
    }
    coeffs
}
