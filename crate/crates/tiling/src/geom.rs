use crate::{Geometry, EPS};

pub type Pt = [f64; 3];

fn sub(a: &Pt, b: &Pt) -> Pt {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn add(a: &Pt, b: &Pt) -> Pt {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn scale(a: &Pt, s: f64) -> Pt {
    [a[0] * s, a[1] * s, a[2] * s]
}

pub(crate) fn dot(a: &Pt, b: &Pt) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn norm(a: &Pt) -> f64 {
    dot(a, a).sqrt()
}

fn cross(a: &Pt, b: &Pt) -> Pt {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn cross2(a: &Pt, b: &Pt) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

pub(crate) fn dist(a: &Pt, b: &Pt) -> f64 {
    norm(&sub(a, b))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Geodesic {
    /// Diameter of the disk with unit direction `dir`.
    DiskLine {
        dir: [f64; 2],
    },
    /// Circle orthogonal to the unit circle.
    DiskCircle {
        center: [f64; 2],
        radius: f64,
    },
    PlaneLine {
        point: [f64; 2],
        dir: [f64; 2],
    },
    /// Great circle with unit normal.
    GreatCircle {
        normal: Pt,
    },
}

impl Geodesic {
    /// The geodesic through two distinct points of the model.
    pub fn through(geometry: Geometry, a: &Pt, b: &Pt) -> Geodesic {
        match geometry {
            Geometry::Elliptic => {
                let n = cross(a, b);
                Geodesic::GreatCircle { normal: scale(&n, 1.0 / norm(&n)) }
            }
            Geometry::Euclidean => {
                let d = sub(b, a);
                let l = norm(&d);
                Geodesic::PlaneLine { point: [a[0], a[1]], dir: [d[0] / l, d[1] / l] }
            }
            Geometry::Hyperbolic => {
                // center c with 2c·a = |a|² + 1 and 2c·b = |b|² + 1
                let det = cross2(a, b);
                let scale_ab = norm(a).max(norm(b)).max(1.0);
                if det.abs() < EPS * scale_ab {
                    let far = if norm(a) > norm(b) { a } else { b };
                    let l = norm(far);
                    return Geodesic::DiskLine { dir: [far[0] / l, far[1] / l] };
                }
                let ra = (dot(a, a) + 1.0) / 2.0;
                let rb = (dot(b, b) + 1.0) / 2.0;
                let cx = (ra * b[1] - rb * a[1]) / det;
                let cy = (a[0] * rb - b[0] * ra) / det;
                let radius = (cx * cx + cy * cy - 1.0).max(0.0).sqrt();
                Geodesic::DiskCircle { center: [cx, cy], radius }
            }
        }
    }

    /// Whether `p` lies on the geodesic.
    pub fn contains(&self, p: &Pt) -> bool {
        match self {
            Geodesic::DiskLine { dir } => (dir[0] * p[1] - dir[1] * p[0]).abs() < EPS,
            Geodesic::DiskCircle { center, radius } => {
                ((p[0] - center[0]).hypot(p[1] - center[1]) - radius).abs() < EPS * radius.max(1.0)
            }
            Geodesic::PlaneLine { point, dir } => (dir[0] * (p[1] - point[1]) - dir[1] * (p[0] - point[0])).abs() < EPS,
            Geodesic::GreatCircle { normal } => dot(normal, p).abs() < EPS,
        }
    }
}

/// Reflection in the geodesic: circle inversion, mirror or Householder map.
pub fn reflect(g: &Geodesic, p: &Pt) -> Pt {
    match g {
        Geodesic::DiskLine { dir } => {
            let d = [dir[0], dir[1], 0.0];
            sub(&scale(&d, 2.0 * dot(p, &d)), p)
        }
        Geodesic::DiskCircle { center, radius } => {
            let c = [center[0], center[1], 0.0];
            let v = sub(p, &c);
            add(&c, &scale(&v, radius * radius / dot(&v, &v)))
        }
        Geodesic::PlaneLine { point, dir } => {
            let a = [point[0], point[1], 0.0];
            let d = [dir[0], dir[1], 0.0];
            let v = sub(p, &a);
            add(&a, &sub(&scale(&d, 2.0 * dot(&v, &d)), &v))
        }
        Geodesic::GreatCircle { normal } => sub(p, &scale(normal, 2.0 * dot(p, normal))),
    }
}

/// Unit tangent at `v` of the geodesic segment from `v` to `w`.
fn tangent(geometry: Geometry, v: &Pt, w: &Pt) -> Pt {
    let t = match geometry {
        Geometry::Euclidean => sub(w, v),
        Geometry::Elliptic => sub(w, &scale(v, dot(v, w))),
        Geometry::Hyperbolic => match Geodesic::through(geometry, v, w) {
            Geodesic::DiskCircle { center, .. } => {
                let r = [v[0] - center[0], v[1] - center[1], 0.0];
                let t = [-r[1], r[0], 0.0];
                if dot(&t, &sub(w, v)) < 0.0 {
                    scale(&t, -1.0)
                } else {
                    t
                }
            }
            _ => sub(w, v),
        },
    };
    scale(&t, 1.0 / norm(&t))
}

/// Interior angles at the three vertices, measured from tangent vectors.
pub fn interior_angles(geometry: Geometry, v: &[Pt; 3]) -> [f64; 3] {
    std::array::from_fn(|i| {
        let a = tangent(geometry, &v[i], &v[(i + 1) % 3]);
        let b = tangent(geometry, &v[i], &v[(i + 2) % 3]);
        dot(&a, &b).clamp(-1.0, 1.0).acos()
    })
}

/// Distance in the Poincaré disk.
pub fn hyperbolic_distance(a: &Pt, b: &Pt) -> f64 {
    let d2 = dot(&sub(a, b), &sub(a, b));
    (1.0 + 2.0 * d2 / ((1.0 - dot(a, a)) * (1.0 - dot(b, b)))).acosh()
}
