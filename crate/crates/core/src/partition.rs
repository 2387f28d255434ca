//! Splitting the side of a generating square into its `(t, l)` partitions.
//!
//! A side `S = 2tl` admits one partition per way of distributing the odd
//! prime powers of `S` between `t` and `l`. All factors of two go to `t`, so a
//! side with `j` distinct odd primes has exactly `2^j` partitions. They are
//! returned ordered by ascending `t`.

use std::fmt;

use num_integer::Integer;

use crate::arith;
use crate::error::{Error, Result};

/// Side length of a generating square: an even integer `>= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Side(u64);

impl Side {
    pub fn new(value: u64) -> Result<Self> {
        if value >= 2 && value.is_multiple_of(2) {
            Ok(Side(value))
        } else {
            Err(Error::InvalidSide(value))
        }
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// First-level ordinal `N = S / 2`.
    pub fn ordinal(self) -> u64 {
        self.0 / 2
    }

    /// The next side in the ordering, `S + 2`.
    pub fn next(self) -> Result<Self> {
        arith::add(self.0, 2).map(Side)
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A split of the side `S = 2tl` with `l` odd and `gcd(t, l) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Partition {
    t: u64,
    l: u64,
    side: Side,
}

impl Partition {
    pub fn new(t: u64, l: u64) -> Result<Self> {
        if t == 0 || l.is_multiple_of(2) || t.gcd(&l) != 1 {
            return Err(Error::InvalidPartition { t, l });
        }
        let side = Side::new(arith::mul(2, arith::mul(t, l)?)?)?;
        Ok(Partition { t, l, side })
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn side(&self) -> Side {
        self.side
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S={} t={} l={}", self.side, self.t, self.l)
    }
}

/// Prime factorization of a side, split into the power of two and the odd
/// prime powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddFactorProfile {
    pub two_exponent: u32,
    /// `(prime, exponent)` with strictly increasing primes.
    pub odd_prime_powers: Vec<(u64, u32)>,
}

impl OddFactorProfile {
    /// Number of distinct odd primes, `j`.
    pub fn odd_prime_count(&self) -> usize {
        self.odd_prime_powers.len()
    }

    /// Multiplies the profile back out.
    pub fn product(&self) -> Result<u64> {
        self.odd_prime_powers
            .iter()
            .try_fold(arith::pow(2, self.two_exponent)?, |acc, &(p, e)| {
                arith::mul(acc, arith::pow(p, e)?)
            })
    }

    /// The odd prime powers `p^e`, each of which must go wholly to `t` or `l`.
    fn atoms(&self) -> Result<Vec<u64>> {
        self.odd_prime_powers
            .iter()
            .map(|&(p, e)| arith::pow(p, e))
            .collect()
    }
}

/// Trial division up to the square root of the remaining cofactor.
pub fn factor_side(side: Side) -> OddFactorProfile {
    let mut rest = side.value();
    let two_exponent = rest.trailing_zeros();
    rest >>= two_exponent;

    let mut odd_prime_powers = Vec::new();
    let mut p = 3u64;
    // p <= rest / p avoids squaring p near the top of the range
    while p <= rest / p {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            odd_prime_powers.push((p, e));
        }
        p += 2;
    }
    if rest > 1 {
        odd_prime_powers.push((rest, 1));
    }

    OddFactorProfile {
        two_exponent,
        odd_prime_powers,
    }
}

/// `k = 2^j`, the number of partitions of `side`.
pub fn partition_count(side: Side) -> Result<u64> {
    let j = factor_side(side).odd_prime_count() as u32;
    arith::pow(2, j)
}

/// All partitions of `side`, sorted by strictly increasing `t`.
pub fn enumerate_partitions(side: Side) -> Result<Vec<Partition>> {
    let atoms = factor_side(side).atoms()?;
    let half = side.ordinal();
    let count = arith::pow(2, atoms.len() as u32)?;

    let mut partitions = (0..count)
        .map(|mask| {
            let l = atoms
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask >> bit & 1 == 1)
                .map(|(_, &atom)| atom)
                .product::<u64>();
            Partition::new(half / l, l)
        })
        .collect::<Result<Vec<_>>>()?;
    partitions.sort_unstable_by_key(Partition::t);
    Ok(partitions)
}

/// 1-based position of `partition` among the partitions of its side.
pub fn rank_of(partition: &Partition) -> Result<u64> {
    let position = enumerate_partitions(partition.side())?
        .iter()
        .position(|p| p == partition)
        .expect("every valid partition is enumerated for its own side");
    Ok(position as u64 + 1)
}
