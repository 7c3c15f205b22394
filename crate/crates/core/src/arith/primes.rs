use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

const CACHED_PRIME_LIMIT: u64 = 10_000;

fn sieve(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// All primes `<= limit`, in increasing order.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit <= CACHED_PRIME_LIMIT {
        let cached = cached_primes();
        let end = cached.partition_point(|&p| p <= limit);
        cached[..end].to_vec()
    } else {
        sieve(limit)
    }
}

pub(crate) fn cached_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve(CACHED_PRIME_LIMIT))
}

/// A positive rational held as a map prime → exponent. Exponents may be negative.
///
/// Zero exponents are never stored, so the empty map is `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeExponents {
    exps: BTreeMap<u64, i64>,
}

impl PrimeExponents {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn get(&self, prime: u64) -> i64 {
        self.exps.get(&prime).copied().unwrap_or(0)
    }

    /// Adds `delta` to the exponent of `prime`.
    pub fn add_exp(&mut self, prime: u64, delta: i64) {
        if delta == 0 {
            return;
        }
        let e = self.exps.entry(prime).or_insert(0);
        *e += delta;
        if *e == 0 {
            self.exps.remove(&prime);
        }
    }

    /// `self *= other^power`.
    pub fn mul_pow(&mut self, other: &PrimeExponents, power: i64) {
        for (&p, &e) in &other.exps {
            self.add_exp(p, e * power);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.exps.iter().map(|(&p, &e)| (p, e))
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, i64)>) -> Self {
        let mut out = Self::one();
        for (p, e) in pairs {
            out.add_exp(p, e);
        }
        out
    }

    /// Factors a nonzero integer's absolute value by trial division.
    ///
    /// Intended for smooth numbers (factorial quotients); a large prime cofactor is
    /// still found, but slowly.
    pub fn factor_integer(n: &BigInt) -> Self {
        assert!(!n.is_zero(), "cannot factor zero");
        let mut rest = n.abs();
        let mut out = Self::one();
        let try_prime = |p: u64, rest: &mut BigInt, out: &mut Self| {
            let bp = BigInt::from(p);
            loop {
                let (q, r) = rest.div_rem(&bp);
                if !r.is_zero() {
                    break;
                }
                *rest = q;
                out.add_exp(p, 1);
            }
        };
        for &p in cached_primes() {
            if rest.is_one() {
                return out;
            }
            if BigInt::from(p * p) > rest {
                break;
            }
            try_prime(p, &mut rest, &mut out);
        }
        if rest.is_one() {
            return out;
        }
        // Past the cached table: plain odd trial division.
        let mut d = CACHED_PRIME_LIMIT + 1;
        loop {
            if BigInt::from(d) * BigInt::from(d) > rest {
                break;
            }
            try_prime(d, &mut rest, &mut out);
            if rest.is_one() {
                return out;
            }
            d += 2;
        }
        let last: u64 = u64::try_from(&rest).expect("prime cofactor beyond u64");
        out.add_exp(last, 1);
        out
    }

    /// Factors a nonzero rational (sign ignored).
    pub fn factor_rational(x: &BigRational) -> Self {
        let mut out = Self::factor_integer(x.numer());
        out.mul_pow(&Self::factor_integer(x.denom()), -1);
        out
    }

    pub fn to_rational(&self) -> BigRational {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (p, e) in self.iter() {
            let pw: BigInt = Pow::pow(BigInt::from(p), e.unsigned_abs());
            if e > 0 {
                num *= pw;
            } else {
                den *= pw;
            }
        }
        BigRational::new(num, den)
    }
}

/// Exponents of `n!` by Legendre's formula.
pub fn factor_factorial(n: u64) -> PrimeExponents {
    let mut out = PrimeExponents::one();
    for p in primes_up_to(n) {
        out.add_exp(p, legendre(n, p));
    }
    out
}

/// Exponent of prime `p` in `n!`.
#[inline]
pub fn legendre(n: u64, p: u64) -> i64 {
    let mut e = 0;
    let mut m = n;
    while m >= p {
        m /= p;
        e += m as i64;
    }
    e
}

/// Dense exponent accumulator over the primes below a fixed bound.
///
/// Used on the evaluation hot path where many factorials are multiplied
/// and divided before the result is converted to a [`PrimeExponents`].
pub(crate) struct DenseExponents {
    primes: &'static [u64],
    exps: Vec<i64>,
}

impl DenseExponents {
    pub(crate) fn new(max_factorial: u64) -> Self {
        assert!(max_factorial <= CACHED_PRIME_LIMIT, "factorial argument {max_factorial} too large");
        let all = cached_primes();
        let end = all.partition_point(|&p| p <= max_factorial);
        DenseExponents { primes: &all[..end], exps: vec![0; end] }
    }

    /// `self *= (n!)^power`.
    pub(crate) fn add_factorial(&mut self, n: u64, power: i64) {
        for (slot, &p) in self.exps.iter_mut().zip(self.primes) {
            if p > n {
                break;
            }
            *slot += power * legendre(n, p);
        }
    }

    pub(crate) fn into_sparse(self) -> PrimeExponents {
        PrimeExponents::from_pairs(self.primes.iter().copied().zip(self.exps))
    }
}
