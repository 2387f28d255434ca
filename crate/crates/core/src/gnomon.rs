//! Gnomon decomposition of a triple.
//!
//! The `z x z` square of a triple splits two ways: the `y x y` square plus a
//! gnomon of thickness `T1 = z - y = l^2` and area `x^2`, or the `x x x`
//! square plus a gnomon of thickness `T2 = z - x = 2t^2` and area `y^2`.
//! Peeling a gnomon into unit-thick layers from the inside out gives the odd
//! numbers `2s + 1, 2s + 3, ...` for an inner square of side `s`.

use crate::arith;
use crate::error::{Error, Result};
use crate::triple::{GeneralTriple, PrimitiveTriple};

/// L-shaped region left when a `(L - T)` square is cut from an `L` square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gnomon {
    thickness: u64,
    side_length: u64,
    area: u64,
}

impl Gnomon {
    pub fn new(thickness: u64, side_length: u64) -> Result<Self> {
        if thickness == 0 || thickness > side_length {
            return Err(Error::NotPositive {
                what: "gnomon thickness (and at most the side length)",
            });
        }
        // T(2L - T) = L^2 - (L - T)^2
        let area = arith::mul(thickness, arith::mul(2, side_length)? - thickness)?;
        Ok(Gnomon {
            thickness,
            side_length,
            area,
        })
    }

    pub fn thickness(&self) -> u64 {
        self.thickness
    }

    pub fn side_length(&self) -> u64 {
        self.side_length
    }

    pub fn area(&self) -> u64 {
        self.area
    }

    /// Side of the square the gnomon wraps.
    pub fn inner_side(&self) -> u64 {
        self.side_length - self.thickness
    }

    pub fn progression(&self) -> Result<GnomonProgression> {
        progression_on_square(self.inner_side(), self.thickness)
    }
}

/// The two connected gnomons of one triple, optionally scaled by `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GnomonPair {
    /// Wraps the square on the even leg; area `x^2`, thickness `T1`.
    pub odd_gnomon: Gnomon,
    /// Wraps the square on the odd leg; area `y^2`, thickness `T2`.
    pub even_gnomon: Gnomon,
    pub triple: PrimitiveTriple,
    pub scale: u64,
}

impl GnomonPair {
    pub fn side_length(&self) -> u64 {
        self.odd_gnomon.side_length
    }
}

/// Odd numbers `first_term, first_term + 2, ...` with `term_count` terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GnomonProgression {
    first_term: u64,
    term_count: u64,
}

impl GnomonProgression {
    pub const DIFFERENCE: u64 = 2;

    pub fn first_term(&self) -> u64 {
        self.first_term
    }

    pub fn term_count(&self) -> u64 {
        self.term_count
    }

    pub fn last_term(&self) -> u64 {
        self.first_term + Self::DIFFERENCE * (self.term_count - 1)
    }

    /// Closed-form sum `n(a + n - 1)`.
    pub fn sum(&self) -> Result<u64> {
        arith::mul(self.term_count, self.first_term + self.term_count - 1)
    }

    pub fn terms(&self) -> impl Iterator<Item = u64> + Clone {
        let first = self.first_term;
        (0..self.term_count).map(move |i| first + Self::DIFFERENCE * i)
    }

    /// The last `count` terms as a progression of their own.
    pub fn suffix(&self, count: u64) -> GnomonProgression {
        let count = count.min(self.term_count);
        GnomonProgression {
            first_term: self.first_term + Self::DIFFERENCE * (self.term_count - count),
            term_count: count,
        }
    }
}

/// The progression of a `thickness`-thick gnomon around a `square_side` square.
pub fn progression_on_square(square_side: u64, thickness: u64) -> Result<GnomonProgression> {
    if square_side == 0 {
        return Err(Error::NotPositive {
            what: "square side",
        });
    }
    if thickness == 0 {
        return Err(Error::NotPositive {
            what: "gnomon thickness",
        });
    }
    let first_term = arith::add(arith::mul(2, square_side)?, 1)?;
    // last term 2(s + T) - 1 must also fit
    arith::mul(2, arith::add(square_side, thickness)?)?;
    Ok(GnomonProgression {
        first_term,
        term_count: thickness,
    })
}

pub fn gnomon_pair(triple: &PrimitiveTriple) -> Result<GnomonPair> {
    build_pair(triple, 1, triple.as_tuple())
}

/// Gnomons of `(kx, ky, kz)`: thicknesses `k l^2` and `2k t^2`, side `kz`.
pub fn scaled_gnomon_pair(general: &GeneralTriple) -> Result<GnomonPair> {
    build_pair(general.base(), general.scale(), general.as_tuple())
}

fn build_pair(
    base: &PrimitiveTriple,
    scale: u64,
    (x, y, z): (u64, u64, u64),
) -> Result<GnomonPair> {
    let pair = GnomonPair {
        odd_gnomon: Gnomon::new(z - y, z)?,
        even_gnomon: Gnomon::new(z - x, z)?,
        triple: *base,
        scale,
    };
    debug_assert_eq!(pair.odd_gnomon.area, x * x);
    debug_assert_eq!(pair.even_gnomon.area, y * y);
    Ok(pair)
}

/// How the shorter progression of a pair sits inside the longer one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overlap {
    /// Trailing terms common to both progressions.
    pub shared: GnomonProgression,
    pub longer: GnomonProgression,
    pub shorter: GnomonProgression,
}

/// Both progressions of a pair end at `2z - 1`, so the thinner gnomon's
/// progression is exactly the tail of the thicker one's.
pub fn overlap_terms(pair: &GnomonPair) -> Result<Overlap> {
    let odd = pair.odd_gnomon.progression()?;
    let even = pair.even_gnomon.progression()?;
    // l^2 = 2t^2 has no solution with l odd
    assert_ne!(
        odd.term_count, even.term_count,
        "connected gnomons of {} have equal thickness",
        pair.triple
    );
    let (longer, shorter) = if odd.term_count > even.term_count {
        (odd, even)
    } else {
        (even, odd)
    };
    let shared = longer.suffix(shorter.term_count);
    debug_assert_eq!(shared, shorter);
    Ok(Overlap {
        shared,
        longer,
        shorter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::stream;
    use crate::partition::Side;
    use crate::triple::{construct, invert, scale};

    fn triple(x: u64, y: u64, z: u64) -> PrimitiveTriple {
        PrimitiveTriple::new(x, y, z).unwrap()
    }

    fn thicknesses(pair: &GnomonPair) -> (u64, u64, u64) {
        (
            pair.odd_gnomon.thickness(),
            pair.even_gnomon.thickness(),
            pair.side_length(),
        )
    }

    #[test]
    fn gnomon_rejects_bad_shapes() {
        assert!(Gnomon::new(0, 5).is_err());
        assert!(Gnomon::new(6, 5).is_err());
        assert_eq!(Gnomon::new(5, 5).unwrap().area(), 25);
        assert!(Gnomon::new(1, u64::MAX / 2 + 1).is_err());
    }

    #[test]
    fn pair_examples() {
        let p = gnomon_pair(&triple(3, 4, 5)).unwrap();
        assert_eq!(thicknesses(&p), (1, 2, 5));
        assert_eq!((p.odd_gnomon.area(), p.even_gnomon.area()), (9, 16));

        let p = gnomon_pair(&triple(15, 8, 17)).unwrap();
        assert_eq!(thicknesses(&p), (9, 2, 17));
        assert_eq!((p.odd_gnomon.area(), p.even_gnomon.area()), (225, 64));

        let p = gnomon_pair(&triple(4961, 6480, 8161)).unwrap();
        assert_eq!(thicknesses(&p), (1681, 3200, 8161));
    }

    #[test]
    fn progression_examples() {
        let p = progression_on_square(3, 2).unwrap();
        assert_eq!(p.terms().collect::<Vec<_>>(), vec![7, 9]);
        assert_eq!(p.sum(), Ok(16));

        let p = progression_on_square(4, 1).unwrap();
        assert_eq!(p.terms().collect::<Vec<_>>(), vec![9]);
        assert_eq!(p.sum(), Ok(9));

        let p = progression_on_square(8, 9).unwrap();
        assert_eq!(
            p.terms().collect::<Vec<_>>(),
            (17..=33).step_by(2).collect::<Vec<_>>()
        );
        assert_eq!(p.sum(), Ok(225));
        assert_eq!(p.last_term(), 33);

        assert!(progression_on_square(0, 1).is_err());
        assert!(progression_on_square(1, 0).is_err());
        assert!(progression_on_square(u64::MAX / 2, 1).is_err());
    }

    #[test]
    fn overlap_examples() {
        let o = overlap_terms(&gnomon_pair(&triple(3, 4, 5)).unwrap()).unwrap();
        assert_eq!(o.longer.terms().collect::<Vec<_>>(), vec![7, 9]);
        assert_eq!(o.shorter.terms().collect::<Vec<_>>(), vec![9]);
        assert_eq!(o.shared.terms().collect::<Vec<_>>(), vec![9]);

        let o = overlap_terms(&gnomon_pair(&triple(15, 8, 17)).unwrap()).unwrap();
        assert_eq!(
            o.longer.terms().collect::<Vec<_>>(),
            (17..=33).step_by(2).collect::<Vec<_>>()
        );
        assert_eq!(o.shared.terms().collect::<Vec<_>>(), vec![31, 33]);
        // y < x: the shorter one is built on x
        assert_eq!(o.shorter.first_term(), 2 * 15 + 1);
    }

    #[test]
    fn scaled_examples() {
        let base = triple(3, 4, 5);
        let p = scaled_gnomon_pair(&scale(&base, 1).unwrap()).unwrap();
        assert_eq!(p, gnomon_pair(&base).unwrap());

        let p = scaled_gnomon_pair(&scale(&base, 4).unwrap()).unwrap();
        assert_eq!(thicknesses(&p), (4, 8, 20));
        assert_eq!((p.odd_gnomon.area(), p.even_gnomon.area()), (144, 256));

        let p = scaled_gnomon_pair(&scale(&triple(15, 8, 17), 3).unwrap()).unwrap();
        assert_eq!(thicknesses(&p), (27, 6, 51));
        assert_eq!((p.odd_gnomon.area(), p.even_gnomon.area()), (2025, 576));
        assert_eq!(27 * (2 * 51 - 27), 2025);
        assert_eq!(6 * (2 * 51 - 6), 576);
    }

    #[test]
    fn identities_over_the_table() {
        let rows = stream(Side::new(2).unwrap(), Side::new(600).unwrap()).unwrap();
        for row in rows {
            let (x, y, z) = row.triple.as_tuple();
            let (t, l) = (row.partition.t(), row.partition.l());
            let pair = gnomon_pair(&row.triple).unwrap();
            let (t1, t2, side) = thicknesses(&pair);
            assert_eq!((t1, t2, side), (l * l, 2 * t * t, z));
            assert_eq!(t1 + t2, 2 * z - x - y);
            assert_eq!(t1 * (2 * z - t1), x * x);
            assert_eq!(t2 * (2 * z - t2), y * y);

            let odd = pair.odd_gnomon.progression().unwrap();
            let even = pair.even_gnomon.progression().unwrap();
            assert_eq!(odd.terms().sum::<u64>(), x * x);
            assert_eq!(even.terms().sum::<u64>(), y * y);
            assert_eq!(odd.last_term(), 2 * z - 1);
            assert_eq!(even.last_term(), 2 * z - 1);

            let o = overlap_terms(&pair).unwrap();
            let tail: Vec<u64> = o
                .longer
                .terms()
                .skip((o.longer.term_count() - o.shorter.term_count()) as usize)
                .collect();
            assert_eq!(tail, o.shorter.terms().collect::<Vec<_>>());
            assert_eq!(tail, o.shared.terms().collect::<Vec<_>>());
        }
    }

    #[test]
    fn scaling_law() {
        let rows = stream(Side::new(2).unwrap(), Side::new(200).unwrap()).unwrap();
        for row in rows {
            let base = gnomon_pair(&row.triple).unwrap();
            let (x, y, _) = row.triple.as_tuple();
            for k in 1..=20 {
                let p = scaled_gnomon_pair(&scale(&row.triple, k).unwrap()).unwrap();
                assert_eq!(p.odd_gnomon.thickness(), k * base.odd_gnomon.thickness());
                assert_eq!(p.even_gnomon.thickness(), k * base.even_gnomon.thickness());
                assert_eq!(p.side_length(), k * row.triple.z());
                assert_eq!(p.odd_gnomon.area(), k * k * x * x);
                assert_eq!(p.even_gnomon.area(), k * k * y * y);
                // the scaled progressions still overlap as a suffix
                let o = overlap_terms(&p).unwrap();
                assert_eq!(o.shared, o.shorter);
                assert_eq!(o.longer.last_term(), 2 * k * row.triple.z() - 1);
            }
        }
    }

    #[test]
    fn gnomons_of_4961_6480_8161_via_inversion() {
        let p = invert(4961, 6480, 8161).unwrap();
        let pair = gnomon_pair(&construct(&p).unwrap()).unwrap();
        assert_eq!(pair.odd_gnomon.thickness(), p.l() * p.l());
        assert_eq!(pair.even_gnomon.thickness(), 2 * p.t() * p.t());
    }
}
