//! Tetrahedral rearrangements, Regge closures and partition classes.
//!
//! A symbol's Regge closure is the set of tetrahedral classes reachable by
//! applicable Regge transformations; each class counts as 24 aspects. Closure
//! sizes 24, 48, 72 and 144 name the classes S0, S1, S2 and S5.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::regge::{applicable_set, apply_matrix, apply_regge, KAPPAS};
use crate::spin::{HalfInt, Mode, SixJSymbol, TriangleQuad};
use crate::superj::{beta_labels, parity_of_triangles, Parity};

const COLUMN_PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
const ROW_FLIPS: [[bool; 3]; 4] =
    [[false, false, false], [true, true, false], [true, false, true], [false, true, true]];

/// Regge partition class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartitionClass {
    S0,
    S1,
    S2,
    S5,
}

impl PartitionClass {
    pub const ALL: [PartitionClass; 4] =
        [PartitionClass::S0, PartitionClass::S1, PartitionClass::S2, PartitionClass::S5];

    /// The set label: 0, 1, 2 or 5.
    pub fn index(self) -> u8 {
        match self {
            PartitionClass::S0 => 0,
            PartitionClass::S1 => 1,
            PartitionClass::S2 => 2,
            PartitionClass::S5 => 5,
        }
    }

    /// Number of tetrahedral classes in the closure.
    pub fn representative_count(self) -> usize {
        match self {
            PartitionClass::S0 => 1,
            PartitionClass::S1 => 2,
            PartitionClass::S2 => 3,
            PartitionClass::S5 => 6,
        }
    }

    pub fn closure_size(self) -> usize {
        24 * self.representative_count()
    }

    pub fn from_representative_count(n: usize) -> Option<Self> {
        PartitionClass::ALL.into_iter().find(|c| c.representative_count() == n)
    }

    /// Classes a symbol of this parity can fall in.
    pub fn reachable(parity: Parity) -> &'static [PartitionClass] {
        match parity {
            Parity::Beta => &PartitionClass::ALL[..2],
            _ => &PartitionClass::ALL,
        }
    }
}

impl fmt::Display for PartitionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}", self.index())
    }
}

/// The 24 tetrahedral aspects: 6 column permutations times 4 upper/lower
/// exchanges of two columns. Duplicates are kept.
pub fn s4_rearrangements(symbol: &SixJSymbol) -> Vec<SixJSymbol> {
    let t = symbol.twice();
    let mut out = Vec::with_capacity(24);
    for perm in COLUMN_PERMS {
        for flip in ROW_FLIPS {
            let mut a = [0i64; 6];
            for c in 0..3 {
                let (up, lo) = (t[perm[c]], t[perm[c] + 3]);
                (a[c], a[c + 3]) = if flip[c] { (lo, up) } else { (up, lo) };
            }
            out.push(SixJSymbol::from_twice_unchecked(a));
        }
    }
    out
}

/// Lexicographically smallest doubled tuple among the 24 aspects.
pub fn canonical_form(symbol: &SixJSymbol) -> SixJSymbol {
    s4_rearrangements(symbol).into_iter().min().unwrap()
}

pub fn is_canonical(symbol: &SixJSymbol) -> bool {
    s4_rearrangements(symbol).iter().all(|a| symbol <= a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    /// Canonical forms; the query's own comes first, the rest in ascending order.
    pub representatives: Vec<SixJSymbol>,
    pub closure_size: usize,
    pub class: PartitionClass,
}

/// Applies every applicable Regge transformation, reduces modulo the tetrahedral
/// group and closes transitively.
pub fn regge_star(symbol: &SixJSymbol, mode: Mode) -> Result<OrbitReport> {
    symbol.check_valid(mode)?;
    let start = canonical_form(symbol);
    let mut seen: Vec<SixJSymbol> = vec![start];
    let mut frontier = vec![start];
    while let Some(rep) = frontier.pop() {
        for kappa in applicable_set(&rep, mode)? {
            let Some(img) = apply_regge(kappa, &rep)?.image() else {
                return Err(Error::Consistency(format!("applicable R{kappa} rejected {rep}")));
            };
            let c = canonical_form(&img);
            if !seen.contains(&c) {
                seen.push(c);
                frontier.push(c);
            }
        }
    }
    seen[1..].sort();
    let class = PartitionClass::from_representative_count(seen.len())
        .ok_or_else(|| Error::Consistency(format!("{symbol}: {} tetrahedral classes in closure", seen.len())))?;
    Ok(OrbitReport { closure_size: 24 * seen.len(), representatives: seen, class })
}

/// Equality pattern of a multiset of four values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Pattern4 {
    AllEqual,
    ThreeOne,
    TwoTwo,
    TwoOneOne,
    AllDistinct,
}

fn pattern4(p: &[HalfInt; 4]) -> Pattern4 {
    let mut v = *p;
    v.sort();
    let mut runs = vec![1usize];
    for w in v.windows(2) {
        if w[0] == w[1] {
            *runs.last_mut().unwrap() += 1;
        } else {
            runs.push(1);
        }
    }
    runs.sort_unstable();
    match runs.as_slice() {
        [4] => Pattern4::AllEqual,
        [1, 3] => Pattern4::ThreeOne,
        [2, 2] => Pattern4::TwoTwo,
        [1, 1, 2] => Pattern4::TwoOneOne,
        _ => Pattern4::AllDistinct,
    }
}

/// Number of distinct values among three.
fn distinct3(q: &[HalfInt; 3]) -> usize {
    match (q[0] == q[1], q[1] == q[2], q[0] == q[2]) {
        (true, true, _) => 1,
        (false, false, false) => 3,
        _ => 2,
    }
}

fn classify_triangles(tq: &TriangleQuad) -> PartitionClass {
    use PartitionClass::*;
    use Pattern4::*;
    let pp = pattern4(&tq.p);
    match (distinct3(&tq.q), pp) {
        // all q equal, or at most two distinct p values with three equal
        (1, _) | (_, AllEqual | ThreeOne) => S0,
        // q_l = q_m ≠ q_n
        (2, TwoTwo | TwoOneOne) => S1,
        (2, AllDistinct) => S2,
        // all q different
        (_, TwoTwo | TwoOneOne) => S2,
        (_, AllDistinct) => S5,
    }
}

/// Partition class from the equality pattern of the triangles and quadrangles.
///
/// For standard, α and γ symbols:
///
/// * S0: all `q` equal, or some `p` value occurs at least three times;
/// * S1: exactly two `q` equal, and the `p` pattern is `aabc` or `aabb`;
/// * S2: exactly two `q` equal with all `p` distinct, or all `q` distinct with
///   `p` pattern `aabc` or `aabb`;
/// * S5: all `q` distinct and all `p` distinct.
///
/// For β symbols, S0 iff `q̄ = q̄'` or `p = p'` or `p̄ = p̄'`, otherwise S1.
pub fn classify(symbol: &SixJSymbol, mode: Mode) -> Result<PartitionClass> {
    let tq = symbol.check_valid(mode)?;
    if mode == Mode::Super && parity_of_triangles(&tq)? == Parity::Beta {
        let b = beta_labels(&tq)?;
        let s0 = b.qbar == b.qbar_prime || b.p == b.p_prime || b.pbar == b.pbar_prime;
        return Ok(if s0 { PartitionClass::S0 } else { PartitionClass::S1 });
    }
    Ok(classify_triangles(&tq))
}

/// Brute-force closure size.
///
/// Every tetrahedral class is held as its full set of aspects; every Regge matrix
/// is applied to every aspect, and an image opens a new class unless some known
/// class already contains it. Returns `24 × number of classes`.
pub fn closure_size_oracle(symbol: &SixJSymbol, mode: Mode) -> Result<usize> {
    symbol.check_valid(mode)?;
    let aspects = |s: &SixJSymbol| s4_rearrangements(s).into_iter().collect::<HashSet<_>>();
    let mut classes: Vec<HashSet<SixJSymbol>> = vec![aspects(symbol)];
    let mut next = 0;
    while next < classes.len() {
        let members: Vec<SixJSymbol> = classes[next].iter().copied().collect();
        next += 1;
        for m in &members {
            for kappa in KAPPAS {
                let Some(img) = apply_matrix(kappa, m)?.image() else { continue };
                if !img.is_valid(mode) {
                    return Err(Error::Consistency(format!("R{kappa} maps {m} to invalid {img}")));
                }
                if !classes.iter().any(|c| c.contains(&img)) {
                    classes.push(aspects(&img));
                }
            }
        }
    }
    Ok(24 * classes.len())
}

/// Partition class read off the brute-force closure size.
pub fn classify_oracle(symbol: &SixJSymbol, mode: Mode) -> Result<PartitionClass> {
    let size = closure_size_oracle(symbol, mode)?;
    let class = PartitionClass::ALL
        .into_iter()
        .find(|c| c.closure_size() == size)
        .ok_or_else(|| Error::Consistency(format!("{symbol}: closure size {size} outside {{24, 48, 72, 144}}")))?;
    if mode == Mode::Super && parity_of_triangles(&symbol.triangles())? == Parity::Beta && size > 48 {
        return Err(Error::Consistency(format!("{symbol}: beta closure size {size}")));
    }
    Ok(class)
}
