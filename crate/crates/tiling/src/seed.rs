use crate::geom::{Geodesic, Pt};
use crate::{classify_signature, Geometry, Order, TilingError, TriangleSignature};

/// Seed triangle: vertices `[A, B, C]` with angles `π/p, π/q, π/r`, and the
/// sides opposite each vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct Seed {
    pub vertices: [Pt; 3],
    pub sides: [Geodesic; 3],
}

pub(crate) fn sides_of(geometry: Geometry, v: &[Pt; 3]) -> [Geodesic; 3] {
    std::array::from_fn(|i| Geodesic::through(geometry, &v[(i + 1) % 3], &v[(i + 2) % 3]))
}

fn polar(r: f64, theta: f64) -> Pt {
    [r * theta.cos(), r * theta.sin(), 0.0]
}

/// Hyperbolic side length between vertices with angles `a` (here) and `b`
/// (there), `c` opposite; `None` when a vertex is ideal.
fn hyperbolic_side(a: Order, b: Order, c: Order) -> Option<f64> {
    if a.is_infinite() || b.is_infinite() {
        return None;
    }
    let (a, b, c) = (a.angle(), b.angle(), c.angle());
    Some(((a.cos() * b.cos() + c.cos()) / (a.sin() * b.sin())).acosh())
}

/// Builds the seed in the model of its geometry. Hyperbolic: a finite vertex
/// at the origin, the next on the positive real axis, ideal vertices on the
/// unit circle. Spherical: `A` at the south pole. Euclidean: `A` at the
/// origin, `B = 1`.
pub fn seed_triangle(sig: &TriangleSignature, geometry: Geometry) -> Result<Seed, TilingError> {
    if classify_signature(sig) != geometry {
        return Err(TilingError::GeometryMismatch(*sig, geometry.name()));
    }
    if sig.has_one() {
        return Err(TilingError::Degenerate(*sig));
    }
    let o = sig.orders();
    let ang = sig.angles();
    let vertices = match geometry {
        Geometry::Hyperbolic => match o.iter().position(|x| !x.is_infinite()) {
            None => {
                let w = std::f64::consts::TAU / 3.0;
                [polar(1.0, 0.0), polar(1.0, w), polar(1.0, 2.0 * w)]
            }
            Some(k) => {
                let (k1, k2) = ((k + 1) % 3, (k + 2) % 3);
                let to =
                    |j: usize, other: usize| hyperbolic_side(o[k], o[j], o[other]).map_or(1.0, |d| (d / 2.0).tanh());
                let mut v = [[0.0; 3]; 3];
                v[k1] = polar(to(k1, k2), 0.0);
                v[k2] = polar(to(k2, k1), ang[k]);
                v
            }
        },
        Geometry::Elliptic => {
            let side = |x: f64, y: f64, z: f64| ((z.cos() + x.cos() * y.cos()) / (x.sin() * y.sin())).acos();
            let c = side(ang[0], ang[1], ang[2]);
            let b = side(ang[0], ang[2], ang[1]);
            let a = [0.0, 0.0, -1.0];
            let bv = [c.sin(), 0.0, -c.cos()];
            let cv = [b.sin() * ang[0].cos(), b.sin() * ang[0].sin(), -b.cos()];
            [a, bv, cv]
        }
        Geometry::Euclidean => {
            // law of sines with AB = 1
            let b = ang[1].sin() / ang[2].sin();
            [[0.0; 3], [1.0, 0.0, 0.0], polar(b, ang[0])]
        }
    };
    Ok(Seed { sides: sides_of(geometry, &vertices), vertices })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{interior_angles, norm};

    fn check_angles(sig: TriangleSignature, g: Geometry) {
        let s = seed_triangle(&sig, g).unwrap();
        let got = interior_angles(g, &s.vertices);
        for (a, e) in got.iter().zip(sig.angles()) {
            assert!((a - e).abs() < 1e-9, "{sig}: {got:?}");
        }
        for (i, side) in s.sides.iter().enumerate() {
            assert!(side.contains(&s.vertices[(i + 1) % 3]) && side.contains(&s.vertices[(i + 2) % 3]));
        }
    }

    #[test]
    fn seeds_have_the_right_angles() {
        check_angles(TriangleSignature::new(2, 3, 7), Geometry::Hyperbolic);
        check_angles(TriangleSignature::new(4, 5, 3), Geometry::Hyperbolic);
        check_angles(TriangleSignature::new(2, 3, 3), Geometry::Elliptic);
        check_angles(TriangleSignature::new(2, 3, 5), Geometry::Elliptic);
        check_angles(TriangleSignature::new(2, 3, 6), Geometry::Euclidean);
        check_angles(TriangleSignature::new(3, 3, 3), Geometry::Euclidean);
    }

    #[test]
    fn ideal_vertices() {
        let s = seed_triangle(&"inf,inf,inf".parse().unwrap(), Geometry::Hyperbolic).unwrap();
        for v in &s.vertices {
            assert!((norm(v) - 1.0).abs() < 1e-12);
        }
        let s = seed_triangle(&"2,3,inf".parse().unwrap(), Geometry::Hyperbolic).unwrap();
        assert!((norm(&s.vertices[2]) - 1.0).abs() < 1e-12);
        assert!(norm(&s.vertices[1]) < 1.0);
        let angles = interior_angles(Geometry::Hyperbolic, &s.vertices);
        assert!((angles[0] - std::f64::consts::FRAC_PI_2).abs() < 1e-9);
        assert!((angles[1] - std::f64::consts::FRAC_PI_3).abs() < 1e-9);
        let s = seed_triangle(&"inf,3,3".parse().unwrap(), Geometry::Hyperbolic).unwrap();
        assert!((norm(&s.vertices[0]) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mismatches() {
        assert!(matches!(
            seed_triangle(&TriangleSignature::new(2, 3, 7), Geometry::Elliptic),
            Err(TilingError::GeometryMismatch(..))
        ));
        assert!(matches!(
            seed_triangle(&TriangleSignature::new(1, 3, 3), Geometry::Elliptic),
            Err(TilingError::Degenerate(_))
        ));
    }
}
