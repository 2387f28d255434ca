//! Forward and inverse maps between partitions and primitive triples.
//!
//! A partition `(S, t, l)` yields
//!
//! ```text
//! y = S + 2t^2    x = S + l^2    z = S + 2t^2 + l^2
//! ```
//!
//! and a primitive triple with even leg `y` is mapped back through
//! `l = sqrt(z - y)`, `S = x - l^2`, `t = S / 2l`.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A primitive triple `x^2 + y^2 = z^2` with odd leg `x` and even leg `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PrimitiveTriple {
    x: u64,
    y: u64,
    z: u64,
}

impl PrimitiveTriple {
    /// Validates an already-canonical triple (`x` odd, `y` even).
    pub fn new(x: u64, y: u64, z: u64) -> Result<Self> {
        if !is_pythagorean(x, y, z) || x == 0 || y == 0 {
            return Err(Error::NotATriple { a: x, b: y, c: z });
        }
        let g = x.gcd(&y);
        if g != 1 {
            return Err(Error::NotPrimitive { x, y, z, gcd: g });
        }
        if x.is_multiple_of(2) {
            return Err(Error::Malformed {
                x,
                y,
                z,
                reason: "odd leg must come first",
            });
        }
        Ok(PrimitiveTriple { x, y, z })
    }

    /// Accepts the three values in any order: the largest is the hypotenuse
    /// and the even leg becomes `y`.
    pub fn from_unordered(a: u64, b: u64, c: u64) -> Result<Self> {
        let (x, y, z) = canonicalize(a, b, c)?;
        Self::new(x, y, z)
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn y(&self) -> u64 {
        self.y
    }

    pub fn z(&self) -> u64 {
        self.z
    }

    pub fn as_tuple(&self) -> (u64, u64, u64) {
        (self.x, self.y, self.z)
    }
}

impl fmt::Display for PrimitiveTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// `k` times a primitive triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneralTriple {
    base: PrimitiveTriple,
    scale: u64,
    legs: (u64, u64, u64),
}

impl GeneralTriple {
    pub fn base(&self) -> &PrimitiveTriple {
        &self.base
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    /// `(kx, ky, kz)`.
    pub fn as_tuple(&self) -> (u64, u64, u64) {
        self.legs
    }
}

impl PartialEq<PrimitiveTriple> for GeneralTriple {
    fn eq(&self, other: &PrimitiveTriple) -> bool {
        self.legs == other.as_tuple()
    }
}

fn is_pythagorean(x: u64, y: u64, z: u64) -> bool {
    // u128 squares so a non-triple never reports overflow first
    let (x, y, z) = (x as u128, y as u128, z as u128);
    (x * x).checked_add(y * y) == Some(z * z)
}

/// Sorts so the largest value is `z` and, when exactly one leg is even, that
/// leg is `y`. Rejects anything that is not a Pythagorean triple.
fn canonicalize(a: u64, b: u64, c: u64) -> Result<(u64, u64, u64)> {
    let mut v = [a, b, c];
    v.sort_unstable();
    let [mut x, mut y, z] = v;
    if x == 0 || !is_pythagorean(x, y, z) {
        return Err(Error::NotATriple { a, b, c });
    }
    if x % 2 == 0 && y % 2 == 1 {
        std::mem::swap(&mut x, &mut y);
    }
    Ok((x, y, z))
}

/// Builds the primitive triple generated by `partition`.
pub fn construct(partition: &Partition) -> Result<PrimitiveTriple> {
    let s = partition.side().value();
    let two_t2 = arith::mul(2, arith::square(partition.t())?)?;
    let l2 = arith::square(partition.l())?;
    let y = arith::add(s, two_t2)?;
    let x = arith::add(s, l2)?;
    let z = arith::add(y, l2)?;
    Ok(PrimitiveTriple { x, y, z })
}

/// Maps a primitive triple (legs in any order) back to its partition.
pub fn invert(a: u64, b: u64, c: u64) -> Result<Partition> {
    let (x, y, z) = canonicalize(a, b, c)?;
    let g = x.gcd(&y).gcd(&z);
    if g != 1 {
        return Err(Error::NotPrimitive { x, y, z, gcd: g });
    }
    invert_canonical(x, y, z)
}

fn invert_canonical(x: u64, y: u64, z: u64) -> Result<Partition> {
    let malformed = |reason| Error::Malformed { x, y, z, reason };

    let l = arith::exact_sqrt(z - y).ok_or(malformed("z - y is not a perfect square"))?;
    if l % 2 == 0 {
        return Err(malformed("sqrt(z - y) is even"));
    }
    let l2 = l * l;
    if x <= l2 {
        return Err(malformed("x - l^2 is not positive"));
    }
    let s = x - l2;
    let two_l = arith::mul(2, l)?;
    if !s.is_multiple_of(two_l) {
        return Err(malformed("S is not divisible by 2l"));
    }
    let partition = Partition::new(s / two_l, l)?;

    debug_assert_eq!(construct(&partition)?.as_tuple(), (x, y, z));
    Ok(partition)
}

/// Splits any Pythagorean triple into its common factor `k` and the
/// partition of the reduced primitive triple.
pub fn decompose_general(a: u64, b: u64, c: u64) -> Result<(u64, Partition)> {
    let (x, y, z) = canonicalize(a, b, c)?;
    let k = x.gcd(&y).gcd(&z);
    let (x, y, z) = (x / k, y / k, z / k);
    // Reducing can move the even leg.
    let (x, y) = if x % 2 == 0 { (y, x) } else { (x, y) };
    Ok((k, invert_canonical(x, y, z)?))
}

pub fn scale(triple: &PrimitiveTriple, k: u64) -> Result<GeneralTriple> {
    if k == 0 {
        return Err(Error::ZeroScale);
    }
    let legs = (
        arith::mul(k, triple.x)?,
        arith::mul(k, triple.y)?,
        arith::mul(k, triple.z)?,
    );
    Ok(GeneralTriple {
        base: *triple,
        scale: k,
        legs,
    })
}
