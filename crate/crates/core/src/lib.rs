//! Exact Wigner 6-j and osp(1|2) super 6-j symbols, their Regge symmetries and
//! the Regge partition of each symbol.
//!
//! Spins are doubled integers throughout; values are exact `r·√s` numbers with
//! `r` rational and `s` squarefree.

pub mod arith;
pub mod error;
pub mod orbit;
pub mod racah;
pub mod regge;
pub mod spin;
pub mod superj;
pub mod table;
mod zsum;

pub use arith::{factor_factorial, to_rotenberg, PrimeExponents, RotenbergLine, SqrtRationalValue};
pub use error::{Error, Result};
pub use orbit::{
    canonical_form, classify, classify_oracle, regge_star, s4_rearrangements, OrbitReport, PartitionClass,
};
pub use racah::eval_6j;
pub use regge::{applicable_set, apply_matrix, apply_regge, regge_matrix, ReggeMatrix, ReggeOutcome};
pub use spin::{HalfInt, Mode, SixJSymbol, TriangleQuad};
pub use superj::{beta_decomposition, eval, eval_super_6j, monomial, parity_of, BetaLabels, Parity};
pub use table::{enumerate_symbols, parse_line, render_line, run, RunSummary, TableConfig, TableEntry};
