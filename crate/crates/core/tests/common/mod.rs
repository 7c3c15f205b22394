//! Test-side oracles. Nothing here calls the library's evaluators or its
//! factorial/prime machinery; values are rebuilt from plain factorial tables.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use sixj::{Mode, SixJSymbol, SqrtRationalValue};

pub fn sym(t: [i64; 6]) -> SixJSymbol {
    SixJSymbol::new(t).unwrap()
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn fact(n: i64) -> BigInt {
    assert!(n >= 0, "factorial of {n}");
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn fact_r(n: i64) -> BigRational {
    BigRational::from_integer(fact(n))
}

/// Every valid symbol with doubled spins in `0..=max_twice`, all aspects included.
pub fn all_valid(max_twice: i64, mode: Mode) -> Vec<SixJSymbol> {
    let mut out = Vec::new();
    let r = 0..=max_twice;
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    for e in r.clone() {
                        for f in r.clone() {
                            let s = sym([a, b, c, d, e, f]);
                            if s.is_valid(mode) {
                                out.push(s);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// An exact value held as `sign · √square`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Squared {
    pub sign: i32,
    pub square: BigRational,
}

impl Squared {
    pub fn of(v: &SqrtRationalValue) -> Self {
        Squared { sign: v.signum(), square: v.square() }
    }

    fn from_prefactor_sum(prefactor: BigRational, sum: BigRational) -> Self {
        let sign = if sum.is_zero() {
            0
        } else if sum.is_positive() {
            1
        } else {
            -1
        };
        Squared { sign, square: prefactor * &sum * &sum }
    }
}

/// Standard 6-j by the classical Racah formula with triangle coefficients:
/// `{a b c; d e f} = Δ(abc)Δ(aef)Δ(dbf)Δ(dec) Σ_t (-1)^t (t+1)! / (…)`.
/// Works on doubled spins; all triads must have integer sums.
pub fn racah_oracle(s: &SixJSymbol) -> Squared {
    let [a, b, c, d, e, f] = s.twice();
    let triads = [(a, b, c), (a, e, f), (d, b, f), (d, e, c)];
    let mut delta2 = BigRational::one();
    for &(x, y, z) in &triads {
        assert_eq!((x + y + z) % 2, 0);
        delta2 *=
            fact_r((x + y - z) / 2) * fact_r((x - y + z) / 2) * fact_r((-x + y + z) / 2) / fact_r((x + y + z) / 2 + 1);
    }
    let sums: Vec<i64> = triads.iter().map(|&(x, y, z)| (x + y + z) / 2).collect();
    let quads = [(a + b + d + e) / 2, (a + c + d + f) / 2, (b + c + e + f) / 2];
    let lo = *sums.iter().max().unwrap();
    let hi = *quads.iter().min().unwrap();
    let mut total = BigRational::zero();
    for t in lo..=hi {
        let mut den = BigInt::one();
        for &x in &sums {
            den *= fact(t - x);
        }
        for &y in &quads {
            den *= fact(y - t);
        }
        let term = BigRational::new(fact(t + 1), den);
        if t % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Squared::from_prefactor_sum(delta2, total)
}

/// Triangles and quadrangles in doubled units, by direct sums.
pub fn pq_doubled(s: &SixJSymbol) -> ([i64; 4], [i64; 3]) {
    let [j1u, j2u, j3u, j1, j2, j3] = s.twice();
    (
        [j1u + j2 + j3, j1 + j2u + j3, j1 + j2 + j3u, j1u + j2u + j3u],
        [j2u + j2 + j3u + j3, j1u + j1 + j3u + j3, j1u + j1 + j2u + j2],
    )
}

fn half(twice: i64) -> BigRational {
    rat(twice, 2)
}

/// Super 6-j term by term in exact rationals: phase, square-root prefactor
/// with integer-part factorials, and the parity monomial evaluated as a
/// rational at every `z`.
pub fn super_oracle(s: &SixJSymbol) -> Squared {
    let (p, q) = pq_doubled(s);
    let [j1u, j2u, j3u, j1, j2, j3] = s.twice();
    // [x] for x = twice/2 >= 0.
    let ip = |twice: i64| twice / 2;
    let mut prefactor = BigRational::one();
    for &qk in &q {
        for &pi in &p {
            prefactor *= fact_r(ip(qk - pi));
        }
    }
    for &pi in &p {
        prefactor /= fact_r(ip(pi + 1));
    }

    let spins = [j1u, j2u, j3u, j1, j2, j3].map(half);
    let jj = &spins[0] * &spins[3] + &spins[1] * &spins[4] + &spins[2] * &spins[5];
    let four_jj = &jj * BigRational::from_integer(4.into());
    assert!(four_jj.is_integer());
    let phase_odd = four_jj.to_integer().is_odd();

    let half_count = p.iter().filter(|&&x| x % 2 != 0).count();
    let pi_of_z: Box<dyn Fn(i64) -> BigRational> = match half_count {
        0 => Box::new(|_| BigRational::one()),
        4 => {
            let spin_sum: BigRational = spins.iter().cloned().sum();
            let c = BigRational::from_integer(2.into()) * &jj + spin_sum + rat(1, 2);
            Box::new(move |z| &c - BigRational::from_integer(z.into()))
        }
        2 => {
            let ints: Vec<BigRational> = p.iter().filter(|&&x| x % 2 == 0).map(|&x| half(x)).collect();
            let bars: Vec<BigRational> = q.iter().filter(|&&x| x % 2 != 0).map(|&x| half(x)).collect();
            assert_eq!(bars.len(), 2);
            let slope = -(&bars[0] + &bars[1] - &ints[0] - &ints[1] + BigRational::one());
            let c = (&bars[0] + rat(1, 2)) * (&bars[1] + rat(1, 2)) - &ints[0] * &ints[1];
            Box::new(move |z| &slope * BigRational::from_integer(z.into()) + &c)
        }
        n => panic!("{n} half-integer triangles"),
    };

    let lower = p.map(|x| ip(x + 1));
    let upper = q.map(|x| ip(x + 1));
    let lo = *lower.iter().max().unwrap();
    let hi = *upper.iter().min().unwrap();
    let mut total = BigRational::zero();
    for z in lo..=hi {
        let mut den = BigInt::one();
        for &a in &lower {
            den *= fact(z - a);
        }
        for &b in &upper {
            den *= fact(b - z);
        }
        let term = BigRational::new(fact(z), den) * pi_of_z(z);
        if z % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    if phase_odd {
        total = -total;
    }
    Squared::from_prefactor_sum(prefactor, total)
}

/// The 24 aspects, built independently: column permutations times
/// upper/lower exchange in two columns.
pub fn aspects(s: &SixJSymbol) -> Vec<[i64; 6]> {
    let t = s.twice();
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let flips: [[bool; 3]; 4] = [[false; 3], [true, true, false], [true, false, true], [false, true, true]];
    let mut out = Vec::with_capacity(24);
    for perm in perms {
        for flip in flips {
            let mut a = [0; 6];
            for (col, &src) in perm.iter().enumerate() {
                let (up, lo) = (t[src], t[src + 3]);
                let (up, lo) = if flip[col] { (lo, up) } else { (up, lo) };
                a[col] = up;
                a[col + 3] = lo;
            }
            out.push(a);
        }
    }
    out
}
