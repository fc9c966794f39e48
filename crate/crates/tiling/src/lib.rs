//! Tessellations by triangle reflection groups on the sphere, the Euclidean
//! plane and the Poincaré disk.
//!
//! All geometry is double precision. Points are `[f64; 3]`; planar models
//! (plane, disk) keep the third coordinate at zero.

mod generate;
mod geom;
mod seed;
mod svg;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use generate::{generate_tiling, Limit, TileTriangle, TilingScene, DEFAULT_MAX_TRIANGLES};
pub use geom::{hyperbolic_distance, interior_angles, reflect, Geodesic, Pt};
pub use seed::{seed_triangle, Seed};
pub use svg::{emit_svg, SvgStyle};

/// Incidence and dedup tolerance.
pub const EPS: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TilingError {
    #[error("signature {0} does not describe a {1} triangle")]
    GeometryMismatch(TriangleSignature, &'static str),
    #[error("signature {0} is not elliptic")]
    NotElliptic(TriangleSignature),
    #[error("signature {0} has an entry 1: the triangle degenerates")]
    Degenerate(TriangleSignature),
    #[error("limit too small: {0}")]
    LimitTooSmall(String),
    #[error("bad signature '{0}'")]
    Parse(String),
}

/// `n` in the angle `π/n`; `Infinite` gives angle 0 (an ideal vertex).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn angle(self) -> f64 {
        match self {
            Order::Finite(n) => std::f64::consts::PI / n as f64,
            Order::Infinite => 0.0,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Order::Infinite
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriangleSignature {
    pub p: Order,
    pub q: Order,
    pub r: Order,
}

impl TriangleSignature {
    pub fn new(p: u32, q: u32, r: u32) -> Self {
        TriangleSignature { p: Order::Finite(p), q: Order::Finite(q), r: Order::Finite(r) }
    }

    pub fn orders(&self) -> [Order; 3] {
        [self.p, self.q, self.r]
    }

    pub fn angles(&self) -> [f64; 3] {
        self.orders().map(Order::angle)
    }

    fn has_one(&self) -> bool {
        self.orders().contains(&Order::Finite(1))
    }

    /// `1/p + 1/q + 1/r` as a reduced fraction `(num, den)`, with `1/∞ = 0`.
    fn reciprocal_sum(&self) -> (u64, u64) {
        let (mut num, mut den) = (0u64, 1u64);
        for o in self.orders() {
            if let Order::Finite(n) = o {
                num = num * n as u64 + den;
                den *= n as u64;
                let g = gcd(num, den);
                num /= g;
                den /= g;
            }
        }
        (num, den)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for TriangleSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p, self.q, self.r)
    }
}

impl FromStr for TriangleSignature {
    type Err = TilingError;

    /// `"2,3,7"`; `inf` or `∞` for an ideal vertex.
    fn from_str(s: &str) -> Result<Self, TilingError> {
        let bad = || TilingError::Parse(s.to_string());
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let mut out = [Order::Infinite; 3];
        for (slot, part) in out.iter_mut().zip(&parts) {
            *slot = match *part {
                "inf" | "∞" | "infinity" => Order::Infinite,
                t => match t.parse::<u32>() {
                    Ok(n) if n >= 1 => Order::Finite(n),
                    _ => return Err(bad()),
                },
            };
        }
        Ok(TriangleSignature { p: out[0], q: out[1], r: out[2] })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Geometry {
    Elliptic,
    Euclidean,
    Hyperbolic,
}

impl Geometry {
    pub fn name(self) -> &'static str {
        match self {
            Geometry::Elliptic => "elliptic",
            Geometry::Euclidean => "euclidean",
            Geometry::Hyperbolic => "hyperbolic",
        }
    }
}

/// Sign of `1/p + 1/q + 1/r − 1`.
pub fn classify_signature(sig: &TriangleSignature) -> Geometry {
    let (num, den) = sig.reciprocal_sum();
    match num.cmp(&den) {
        std::cmp::Ordering::Greater => Geometry::Elliptic,
        std::cmp::Ordering::Equal => Geometry::Euclidean,
        std::cmp::Ordering::Less => Geometry::Hyperbolic,
    }
}

/// `4 / (1/p + 1/q + 1/r − 1)`, the order of the full reflection group.
pub fn elliptic_triangle_count(sig: &TriangleSignature) -> Result<u64, TilingError> {
    if classify_signature(sig) != Geometry::Elliptic {
        return Err(TilingError::NotElliptic(*sig));
    }
    let (num, den) = sig.reciprocal_sum();
    let excess = num - den;
    assert_eq!((4 * den) % excess, 0, "elliptic counts are integral");
    Ok(4 * den / excess)
}
