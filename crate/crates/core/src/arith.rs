//! Checked `u64` helpers that report the failing operation instead of wrapping.

use crate::error::{Error, Result};

pub(crate) fn add(lhs: u64, rhs: u64) -> Result<u64> {
    lhs.checked_add(rhs).ok_or(Error::Overflow {
        op: "add",
        lhs,
        rhs,
    })
}

pub(crate) fn mul(lhs: u64, rhs: u64) -> Result<u64> {
    lhs.checked_mul(rhs).ok_or(Error::Overflow {
        op: "mul",
        lhs,
        rhs,
    })
}

pub(crate) fn square(v: u64) -> Result<u64> {
    v.checked_mul(v).ok_or(Error::Overflow {
        op: "square",
        lhs: v,
        rhs: v,
    })
}

pub(crate) fn pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::Overflow {
        op: "pow",
        lhs: base,
        rhs: exp as u64,
    })
}

/// Exact square root, or `None` when `v` is not a perfect square.
pub fn exact_sqrt(v: u64) -> Option<u64> {
    let r = v.isqrt();
    (r * r == v).then_some(r)
}
