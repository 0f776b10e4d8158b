//! Exact-arithmetic toolkit for Frobenius pushforwards of line bundles on
//! wonderful compactifications of semisimple adjoint groups.
//!
//! Everything here is exact: weights live in the fundamental-weight lattice
//! with `i64` coordinates, counts are big integers, and the rare rational
//! intermediate (coordinates in the simple-root basis) uses exact rationals.
//!
//! The main entry point is [`root_system::RootSystemData::build`]; the other
//! modules layer combinatorics on top of it:
//!
//! * [`weight_order`] — the two partial orders on the weight lattice that
//!   drive everything else,
//! * [`summand`] — direct-summand tests and candidate-weight enumeration for
//!   `F_* L(λ)`,
//! * [`subdivisor`] — counting effective subdivisor decompositions of
//!   `(1-p)K_X - λ` and the Thomsen multiplicity formula,
//! * [`blocks`] — linkage classes, alcove signatures, summand ranks and
//!   block dimensions,
//! * [`rep_dims`] — Weyl/Steinberg/filtration dimension counts,
//! * [`steinberg`] — locating the Steinberg-block line bundle summand,
//! * [`ktheory`] — torus-fixed-point classes and the graded-ring
//!   (Chern-character) pushforward,
//! * [`cli`] — the JSON command-line front end.

pub mod blocks;
pub mod cli;
pub mod ktheory;
pub mod rep_dims;
pub mod root_system;
pub mod steinberg;
pub mod subdivisor;
pub mod summand;
pub mod weight_order;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported root system type: {0}")]
    UnsupportedType(String),
    #[error("rank {0} is out of range for type {1}")]
    RankOutOfRange(usize, String),
    #[error("Weyl group enumeration is disabled for A_n with n > {max}; rank {n} requested")]
    WeylUnavailable { n: usize, max: usize },
    #[error("{0} is not a prime")]
    NotPrime(i64),
    #[error("prime {p} divides the Coxeter number {h} (or is otherwise excluded here)")]
    BadPrime { p: i64, h: i64 },
    #[error("prime {p} is smaller than the Coxeter number {h}; no alcove table applies")]
    PrimeTooSmall { p: i64, h: i64 },
    #[error("weight is not dominant")]
    NotDominant,
    #[error("weight has {got} coordinates, expected {expected}")]
    BadWeightLength { got: usize, expected: usize },
    #[error("no summand-rank table is available for type {0}")]
    NoRankTable(String),
    #[error("multiplicity lower bound is only established in type A (got {0})")]
    LowerBoundUnavailable(String),
    #[error("subdivisor DP exceeded the state limit of {limit} states")]
    DpStateLimit { limit: usize },
    #[error("expansion would produce {terms} terms, above the limit {limit}")]
    ExpansionTooLarge { terms: u128, limit: u128 },
    #[error("no weight congruent to the Steinberg shift exists for this λ and p")]
    NoSteinbergCandidate,
    #[error("the Steinberg candidate set has {0} maximal elements, expected exactly one")]
    AmbiguousSteinbergWeight(usize),
    #[error("element of degree 0 is zero and cannot be inverted")]
    NotInvertible,
    #[error("character assignment contains a zero value")]
    ZeroAssignment,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Deterministic Miller–Rabin primality test, exact for all `i64` inputs.
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2i64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let n = n as u128;
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let pow = |mut b: u128, mut e: u128| -> u128 {
        let mut acc = 1u128;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % n;
            }
            b = b * b % n;
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::is_prime;

    #[test]
    fn primality_small_range() {
        let primes: Vec<i64> = (0..100).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
        );
        assert!(is_prime(1_000_003));
        assert!(!is_prime(1_000_001));
    }
}
