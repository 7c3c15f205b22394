//! Half-integer spins, six-spin symbols and their triangle/quadrangle sums.
//!
//! Every spin is stored as twice its value, so `3/2` is held as `3`. All
//! arithmetic in this module is plain integer arithmetic on doubled values.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A spin value in ½ℤ, stored doubled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    #[inline]
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    #[inline]
    pub const fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    #[inline]
    pub const fn twice(self) -> i64 {
        self.0
    }

    #[inline]
    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// Integer part `[x]`, i.e. `floor(x)`.
    #[inline]
    pub const fn floor(self) -> i64 {
        self.0.div_euclid(2)
    }

    /// Exact integer value, if the spin is integral.
    #[inline]
    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: Self) -> Self {
        HalfInt(self.0 + rhs.0)
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: Self) -> Self {
        HalfInt(self.0 - rhs.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `"10"`, `"21/2"` or a decimal ending in `.5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a half-integer: {s:?}"));
        if let Some((num, den)) = s.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| bad())?;
            match den.trim() {
                "1" => Ok(HalfInt(2 * num)),
                "2" => Ok(HalfInt(num)),
                _ => Err(bad()),
            }
        } else if let Some(whole) = s.strip_suffix(".5") {
            let whole: i64 = whole.parse().map_err(|_| bad())?;
            if whole < 0 || s.starts_with('-') {
                return Err(bad());
            }
            Ok(HalfInt(2 * whole + 1))
        } else {
            let n: i64 = s.strip_suffix(".0").unwrap_or(s).parse().map_err(|_| bad())?;
            Ok(HalfInt(2 * n))
        }
    }
}

/// Which family of symbols is being handled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// Ordinary su(2) 6-j symbols: all triangles integer.
    Standard,
    /// osp(1|2) super 6-j symbols: triangles may be half-integer.
    Super,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Standard => "standard",
            Mode::Super => "super",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Mode::Standard),
            "super" => Ok(Mode::Super),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

/// A symbol `{J1 J2 J3; j1 j2 j3}`.
///
/// Ordering is the lexicographic order of the doubled tuple
/// `(2J1, 2J2, 2J3, 2j1, 2j2, 2j3)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SixJSymbol {
    twice: [i64; 6],
}

impl SixJSymbol {
    /// Builds a symbol from six doubled spins in the order `2J1 2J2 2J3 2j1 2j2 2j3`.
    ///
    /// Only negativity is rejected; triangle conditions are checked by the evaluators.
    pub fn new(twice: [i64; 6]) -> Result<Self> {
        if let Some(index) = twice.iter().position(|&t| t < 0) {
            return Err(Error::NegativeSpin { index, twice: twice[index] });
        }
        Ok(SixJSymbol { twice })
    }

    #[inline]
    pub(crate) const fn from_twice_unchecked(twice: [i64; 6]) -> Self {
        SixJSymbol { twice }
    }

    #[inline]
    pub fn twice(&self) -> [i64; 6] {
        self.twice
    }

    /// Upper row `J1 J2 J3`.
    pub fn upper(&self) -> [HalfInt; 3] {
        [0, 1, 2].map(|i| HalfInt(self.twice[i]))
    }

    /// Lower row `j1 j2 j3`.
    pub fn lower(&self) -> [HalfInt; 3] {
        [3, 4, 5].map(|i| HalfInt(self.twice[i]))
    }

    pub fn spins(&self) -> [HalfInt; 6] {
        self.twice.map(HalfInt)
    }

    pub fn triangles(&self) -> TriangleQuad {
        let [a1, a2, a3, b1, b2, b3] = self.twice;
        TriangleQuad {
            p: [a1 + b2 + b3, b1 + a2 + b3, b1 + b2 + a3, a1 + a2 + a3].map(HalfInt),
            q: [a2 + b2 + a3 + b3, a1 + b1 + a3 + b3, a1 + b1 + a2 + b2].map(HalfInt),
        }
    }

    /// First violated `(k, i)` pair (1-based) with `q_k - p_i < 0`, if any.
    pub fn violated_pair(&self) -> Option<(usize, usize)> {
        self.triangles().violated_pair()
    }

    pub fn is_super_valid(&self) -> bool {
        self.violated_pair().is_none()
    }

    pub fn is_standard_valid(&self) -> bool {
        let tq = self.triangles();
        tq.p.iter().all(|p| p.is_integer()) && tq.violated_pair().is_none()
    }

    pub fn is_valid(&self, mode: Mode) -> bool {
        match mode {
            Mode::Standard => self.is_standard_valid(),
            Mode::Super => self.is_super_valid(),
        }
    }

    /// Checks validity for `mode`, reporting the first violation.
    pub fn check_valid(&self, mode: Mode) -> Result<TriangleQuad> {
        let tq = self.triangles();
        if mode == Mode::Standard {
            if let Some(i) = tq.p.iter().position(|p| !p.is_integer()) {
                return Err(Error::HalfIntegerTriangle { i: i + 1 });
            }
        }
        match tq.violated_pair() {
            Some((k, i)) => Err(Error::InvalidTriangle { k, i }),
            None => Ok(tq),
        }
    }

    /// `4 (J1 j1 + J2 j2 + J3 j3)`, always an integer.
    pub fn four_sum_jj(&self) -> i64 {
        let t = self.twice;
        t[0] * t[3] + t[1] * t[4] + t[2] * t[5]
    }

    /// `2 (J1 + J2 + J3 + j1 + j2 + j3)`.
    pub fn twice_spin_sum(&self) -> i64 {
        self.twice.iter().sum()
    }

    /// Space-separated doubled spins, `2J1 2J2 2J3 2j1 2j2 2j3`.
    pub fn to_doubled_string(&self) -> String {
        let t = self.twice;
        format!("{} {} {} {} {} {}", t[0], t[1], t[2], t[3], t[4], t[5])
    }
}

impl fmt::Display for SixJSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.upper();
        let [d, e, g] = self.lower();
        write!(f, "{{{a} {b} {c}; {d} {e} {g}}}")
    }
}

impl FromStr for SixJSymbol {
    type Err = Error;

    /// Parses either `{9 8 6; 3/2 9/2 13/2}` or six doubled integers `18 16 12 3 9 13`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let twice: Vec<i64> = if let Some(body) = s.strip_prefix('{') {
            let body = body.strip_suffix('}').ok_or_else(|| Error::Parse(format!("unterminated symbol {s:?}")))?;
            body.replace(';', " ")
                .split_whitespace()
                .map(|tok| tok.parse::<HalfInt>().map(HalfInt::twice))
                .collect::<Result<_>>()?
        } else {
            s.split_whitespace()
                .map(|tok| tok.parse::<i64>().map_err(|_| Error::Parse(format!("bad integer {tok:?}"))))
                .collect::<Result<_>>()?
        };
        let twice: [i64; 6] =
            twice.try_into().map_err(|v: Vec<i64>| Error::Parse(format!("expected 6 spins, got {}", v.len())))?;
        SixJSymbol::new(twice)
    }
}

/// Triangles `p1..p4` and quadrangles `q1..q3` of a symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TriangleQuad {
    pub p: [HalfInt; 4],
    pub q: [HalfInt; 3],
}

impl TriangleQuad {
    pub fn violated_pair(&self) -> Option<(usize, usize)> {
        for (k, q) in self.q.iter().enumerate() {
            for (i, p) in self.p.iter().enumerate() {
                if q.0 < p.0 {
                    return Some((k + 1, i + 1));
                }
            }
        }
        None
    }

    pub fn max_p(&self) -> HalfInt {
        *self.p.iter().max().unwrap()
    }

    pub fn min_q(&self) -> HalfInt {
        *self.q.iter().min().unwrap()
    }

    pub fn half_integer_p_count(&self) -> usize {
        self.p.iter().filter(|p| !p.is_integer()).count()
    }
}
