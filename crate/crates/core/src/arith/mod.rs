//! Exact value algebra: prime-factored factorials, canonical `r·√s` values
//! and the prime-exponent table encoding.

mod primes;
mod rotenberg;
mod value;

pub(crate) use primes::DenseExponents;
pub use primes::{factor_factorial, legendre, primes_up_to, PrimeExponents};
pub use rotenberg::{to_rotenberg, RotenbergLine, BASE_PRIMES};
pub use value::SqrtRationalValue;
