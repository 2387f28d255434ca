//! SVG drawings of the square-plus-gnomon pictures.
//!
//! Every drawing is a square frame in integer units. Inner squares are
//! anchored at the top-right corner and gnomons run down the left edge and
//! along the bottom. A layout is built first as plain rectangles, its gnomon
//! areas are checked against the square they should equal, and only then is
//! it serialized.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::arith;
use crate::error::{Error, Result};
use crate::triple::PrimitiveTriple;

/// Largest width or height of a rendered SVG, in pixels.
pub const MAX_PIXELS: u64 = 20_000;

const FRAME_STROKE: &str = "#222222";
const SQUARE_FILL: &str = "#f2efe6";
const GNOMON_FILL: &str = "#5b8cc9";
const SHARED_FILL: &str = "#e08a3c";
const CELL_STROKE: &str = "#888888";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagramKind {
    /// `x x x` square plus the gnomon of thickness `2t^2` and area `y^2`.
    SquareGnomonOdd,
    /// `y x y` square plus the gnomon of thickness `l^2` and area `x^2`.
    SquareGnomonEven,
    /// Both gnomons in one `z x z` frame, the thinner one on top.
    Connected,
    /// `k^2` copies of the even-square cell in a `kz x kz` frame.
    Lattice,
    /// The same lattice with the `y` squares gathered top-right and one
    /// gnomon of thickness `k l^2` around them.
    LatticeRegrouped,
}

impl DiagramKind {
    pub const ALL: [DiagramKind; 5] = [
        DiagramKind::SquareGnomonOdd,
        DiagramKind::SquareGnomonEven,
        DiagramKind::Connected,
        DiagramKind::Lattice,
        DiagramKind::LatticeRegrouped,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DiagramKind::SquareGnomonOdd => "square_gnomon_odd",
            DiagramKind::SquareGnomonEven => "square_gnomon_even",
            DiagramKind::Connected => "connected",
            DiagramKind::Lattice => "lattice",
            DiagramKind::LatticeRegrouped => "lattice_regrouped",
        }
    }

    pub fn is_lattice(self) -> bool {
        matches!(self, DiagramKind::Lattice | DiagramKind::LatticeRegrouped)
    }
}

impl fmt::Display for DiagramKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DiagramKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        DiagramKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown diagram kind `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramSpec {
    pub kind: DiagramKind,
    pub triple: PrimitiveTriple,
    /// Only read by the lattice kinds.
    pub scale_k: u64,
    /// Pixels per integer unit.
    pub unit_px: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Frame,
    Square,
    Gnomon,
    /// Part of the thinner gnomon, which the thicker one absorbs.
    Shared,
}

impl Role {
    fn class(self) -> &'static str {
        match self {
            Role::Frame => "frame",
            Role::Square => "square",
            Role::Gnomon => "gnomon",
            Role::Shared => "shared",
        }
    }

    fn is_gnomon(self) -> bool {
        matches!(self, Role::Gnomon | Role::Shared)
    }
}

/// Axis-aligned rectangle in integer units, origin top-left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rect {
    pub x: u64,
    pub y: u64,
    pub width: u64,
    pub height: u64,
    pub role: Role,
}

impl Rect {
    pub fn area(&self) -> u64 {
        self.width * self.height
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    pub class: &'static str,
    pub rects: Vec<Rect>,
    /// Area the gnomon rectangles of this group must add up to.
    pub expected_gnomon_area: Option<u64>,
}

impl Group {
    pub fn gnomon_area(&self) -> u64 {
        self.rects
            .iter()
            .filter(|r| r.role.is_gnomon())
            .map(Rect::area)
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    pub kind: DiagramKind,
    /// Side of the outer frame in units.
    pub size: u64,
    pub groups: Vec<Group>,
}

impl Layout {
    pub fn groups_of<'a>(&'a self, class: &'a str) -> impl Iterator<Item = &'a Group> + 'a {
        self.groups.iter().filter(move |g| g.class == class)
    }

    /// Fails if any group's gnomon cells miss the area of the square they stand for.
    pub fn check_areas(&self) -> Result<()> {
        for g in &self.groups {
            if let Some(expected) = g.expected_gnomon_area {
                let drawn = g.gnomon_area();
                if drawn != expected {
                    return Err(Error::AreaMismatch {
                        kind: self.kind.as_str(),
                        drawn,
                        expected,
                    });
                }
            }
        }
        Ok(())
    }
}

/// A `side` square at `(x0, y0)` with its inner square of side `side - thickness`
/// top-right and the gnomon as a left column plus a bottom strip.
fn square_with_gnomon(x0: u64, y0: u64, side: u64, thickness: u64, gnomon_role: Role) -> [Rect; 3] {
    let inner = side - thickness;
    [
        Rect {
            x: x0 + thickness,
            y: y0,
            width: inner,
            height: inner,
            role: Role::Square,
        },
        Rect {
            x: x0,
            y: y0,
            width: thickness,
            height: side,
            role: gnomon_role,
        },
        Rect {
            x: x0 + thickness,
            y: y0 + inner,
            width: inner,
            height: thickness,
            role: gnomon_role,
        },
    ]
}

fn frame(x: u64, y: u64, side: u64) -> Rect {
    Rect {
        x,
        y,
        width: side,
        height: side,
        role: Role::Frame,
    }
}

/// Rectangles of the drawing, before any pixel scaling.
pub fn layout(spec: &DiagramSpec) -> Result<Layout> {
    let (x, y, z) = spec.triple.as_tuple();
    let (t1, t2) = (z - y, z - x);
    let sq = |v: u64| arith::square(v);

    let single = |thickness: u64, area: u64| -> Vec<Group> {
        let mut rects = vec![frame(0, 0, z)];
        rects.extend(square_with_gnomon(0, 0, z, thickness, Role::Gnomon));
        vec![Group {
            class: "cell",
            rects,
            expected_gnomon_area: Some(area),
        }]
    };

    let (size, groups) = match spec.kind {
        DiagramKind::SquareGnomonEven => (z, single(t1, sq(x)?)),
        DiagramKind::SquareGnomonOdd => (z, single(t2, sq(y)?)),
        DiagramKind::Connected => {
            let odd = (t1, sq(x)?, "odd-gnomon");
            let even = (t2, sq(y)?, "even-gnomon");
            let (thick, thin) = if t1 > t2 { (odd, even) } else { (even, odd) };
            let gnomon = |(t, area, class): (u64, u64, &'static str), role| Group {
                class,
                rects: square_with_gnomon(0, 0, z, t, role).to_vec(),
                expected_gnomon_area: Some(area),
            };
            let groups = vec![
                Group {
                    class: "frame",
                    rects: vec![frame(0, 0, z)],
                    expected_gnomon_area: None,
                },
                gnomon(thick, Role::Gnomon),
                gnomon(thin, Role::Shared),
            ];
            (z, groups)
        }
        DiagramKind::Lattice => {
            let k = lattice_scale(spec)?;
            let size = arith::mul(k, z)?;
            let cell_area = sq(x)?;
            let mut groups = vec![Group {
                class: "frame",
                rects: vec![frame(0, 0, size)],
                expected_gnomon_area: None,
            }];
            for row in 0..k {
                for col in 0..k {
                    let (ox, oy) = (col * z, row * z);
                    let mut rects = vec![frame(ox, oy, z)];
                    rects.extend(square_with_gnomon(ox, oy, z, t1, Role::Gnomon));
                    groups.push(Group {
                        class: "cell",
                        rects,
                        expected_gnomon_area: Some(cell_area),
                    });
                }
            }
            (size, groups)
        }
        DiagramKind::LatticeRegrouped => {
            let k = lattice_scale(spec)?;
            let size = arith::mul(k, z)?;
            let thickness = arith::mul(k, t1)?;
            let [_, left, bottom] = square_with_gnomon(0, 0, size, thickness, Role::Gnomon);
            let mut tiles = vec![frame(0, 0, size)];
            for row in 0..k {
                for col in 0..k {
                    tiles.push(Rect {
                        x: thickness + col * y,
                        y: row * y,
                        width: y,
                        height: y,
                        role: Role::Square,
                    });
                }
            }
            let groups = vec![
                Group {
                    class: "squares",
                    rects: tiles,
                    expected_gnomon_area: None,
                },
                Group {
                    class: "gnomon",
                    rects: vec![left, bottom],
                    expected_gnomon_area: Some(sq(arith::mul(k, x)?)?),
                },
            ];
            (size, groups)
        }
    };

    Ok(Layout {
        kind: spec.kind,
        size,
        groups,
    })
}

/// Side of the outer frame in units.
fn frame_units(spec: &DiagramSpec) -> Result<u64> {
    let z = spec.triple.z();
    if spec.kind.is_lattice() {
        arith::mul(lattice_scale(spec)?, z)
    } else {
        Ok(z)
    }
}

fn lattice_scale(spec: &DiagramSpec) -> Result<u64> {
    if spec.scale_k == 0 {
        return Err(Error::ZeroScale);
    }
    Ok(spec.scale_k)
}

/// Renders `spec` as an SVG 1.1 document. Identical specs give identical bytes.
pub fn render(spec: &DiagramSpec) -> Result<String> {
    if spec.unit_px == 0 {
        return Err(Error::NotPositive { what: "unit size" });
    }
    let frame = frame_units(spec)?;
    let px = match arith::mul(frame, spec.unit_px) {
        Ok(px) if px <= MAX_PIXELS => px,
        over => {
            let px = over.unwrap_or(u64::MAX);
            return Err(Error::SizeLimit {
                width: px,
                height: px,
                limit: MAX_PIXELS,
            });
        }
    };
    let layout = layout(spec)?;
    layout.check_areas()?;

    let u = spec.unit_px;
    let mut svg = String::new();
    // fmt::Write into a String cannot fail
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{px}" height="{px}" viewBox="0 0 {px} {px}">"#
    );
    let (x, y, z) = spec.triple.as_tuple();
    let scale = if spec.kind.is_lattice() {
        format!(" k={}", spec.scale_k)
    } else {
        String::new()
    };
    let _ = writeln!(svg, "<title>{} ({x}, {y}, {z}){scale}</title>", spec.kind);
    for group in &layout.groups {
        let _ = writeln!(svg, r#"<g class="{}">"#, group.class);
        for r in &group.rects {
            let (fill, stroke) = match r.role {
                Role::Frame if group.class == "cell" => ("none", CELL_STROKE),
                Role::Frame => ("none", FRAME_STROKE),
                Role::Square => (SQUARE_FILL, CELL_STROKE),
                Role::Gnomon => (GNOMON_FILL, "none"),
                Role::Shared => (SHARED_FILL, "none"),
            };
            let _ = writeln!(
                svg,
                r#"<rect class="{}" x="{}" y="{}" width="{}" height="{}" fill="{fill}" stroke="{stroke}"/>"#,
                r.role.class(),
                r.x * u,
                r.y * u,
                r.width * u,
                r.height * u,
            );
        }
        let _ = writeln!(svg, "</g>");
    }
    let _ = writeln!(svg, "</svg>");
    Ok(svg)
}
