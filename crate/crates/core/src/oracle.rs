//! Independent generators of primitive triples, used only to check the
//! partition construction.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::arith;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::triple::PrimitiveTriple;

fn check_bound(z_max: u64) -> Result<()> {
    if z_max < 5 {
        return Err(Error::NotPositive {
            what: "z_max - 4 (the bound must be at least 5)",
        });
    }
    arith::square(z_max).map(drop)
}

/// Every primitive triple with `z <= z_max`, found by testing each even leg
/// `y < z` for a perfect-square `z^2 - y^2`.
pub fn brute_force_primitive(z_max: u64) -> Result<BTreeSet<PrimitiveTriple>> {
    check_bound(z_max)?;
    let mut found = BTreeSet::new();
    for z in 5..=z_max {
        let z2 = z * z;
        for y in (2..z).step_by(2) {
            let Some(x) = arith::exact_sqrt(z2 - y * y) else {
                continue;
            };
            if x % 2 == 1 && x.gcd(&y) == 1 {
                found.insert(PrimitiveTriple::new(x, y, z)?);
            }
        }
    }
    Ok(found)
}

/// `(m^2 - n^2, 2mn, m^2 + n^2)`.
pub fn euclid_triple(m: u64, n: u64) -> Result<PrimitiveTriple> {
    if n == 0 || m <= n || (m - n).is_multiple_of(2) || m.gcd(&n) != 1 {
        return Err(Error::Malformed {
            x: m,
            y: n,
            z: 0,
            reason: "Euclid pair needs m > n >= 1, coprime, opposite parity",
        });
    }
    let (m2, n2) = (arith::square(m)?, arith::square(n)?);
    PrimitiveTriple::new(
        m2 - n2,
        arith::mul(2, arith::mul(m, n)?)?,
        arith::add(m2, n2)?,
    )
}

/// Every primitive triple with `z <= z_max` from coprime, opposite-parity
/// `m > n >= 1`.
pub fn euclid_parametrization(z_max: u64) -> Result<BTreeSet<PrimitiveTriple>> {
    check_bound(z_max)?;
    let mut found = BTreeSet::new();
    for m in (2u64..).take_while(|m| m * m < z_max) {
        for n in (1..m).take_while(|n| m * m + n * n <= z_max) {
            if (m - n) % 2 == 1 && m.gcd(&n) == 1 {
                found.insert(euclid_triple(m, n)?);
            }
        }
    }
    Ok(found)
}

/// Euclid parameters of a partition: `m = t + l`, `n = t`.
pub fn euclid_pair(partition: &Partition) -> (u64, u64) {
    (partition.t() + partition.l(), partition.t())
}
