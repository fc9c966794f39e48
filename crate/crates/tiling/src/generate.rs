use std::collections::{HashMap, VecDeque};

use crate::geom::{dist, norm, reflect, Pt};
use crate::seed::{seed_triangle, sides_of};
use crate::{classify_signature, Geometry, TilingError, TriangleSignature, EPS};

/// Stopping rule for the reflection search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Limit {
    MaxTriangles(usize),
    /// Longest reflection word.
    MaxWord(usize),
    /// Hyperbolic: drop triangles of Euclidean diameter below the bound.
    /// Euclidean: keep the patch within radius `1/bound` of the origin.
    MinSize(f64),
}

/// Used when an infinite tiling is requested without a limit.
pub const DEFAULT_MAX_TRIANGLES: usize = 2000;

#[derive(Debug, Clone, PartialEq)]
pub struct TileTriangle {
    pub vertices: [Pt; 3],
    /// Parity of the reflection word; alternates across every edge.
    pub parity: bool,
    pub word: Vec<u8>,
}

impl TileTriangle {
    pub fn centroid(&self) -> Pt {
        let v = &self.vertices;
        std::array::from_fn(|k| (v[0][k] + v[1][k] + v[2][k]) / 3.0)
    }

    pub fn diameter(&self) -> f64 {
        let v = &self.vertices;
        dist(&v[0], &v[1]).max(dist(&v[1], &v[2])).max(dist(&v[0], &v[2]))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TilingScene {
    pub geometry: Geometry,
    pub signature: TriangleSignature,
    pub triangles: Vec<TileTriangle>,
    /// The search ran out of new triangles before any limit applied.
    pub closed: bool,
}

type Key = [i64; 3];

fn key_of(p: &Pt) -> Key {
    p.map(|x| (x / EPS).round() as i64)
}

/// Centroid set on a `EPS` grid; lookups also probe the neighbouring cells so
/// rounding at a cell boundary cannot split one centroid into two keys.
struct CentroidSet {
    seen: HashMap<Key, ()>,
}

impl CentroidSet {
    fn insert(&mut self, p: &Pt) -> bool {
        let k = key_of(p);
        for dx in -1..=1 {
            for dy in -1..=1 {
                for dz in -1..=1 {
                    if self.seen.contains_key(&[k[0] + dx, k[1] + dy, k[2] + dz]) {
                        return false;
                    }
                }
            }
        }
        self.seen.insert(k, ());
        true
    }
}

/// Breadth-first search over reflections of the seed in its sides.
pub fn generate_tiling(sig: &TriangleSignature, limit: Option<Limit>) -> Result<TilingScene, TilingError> {
    match limit {
        Some(Limit::MaxTriangles(0)) => {
            return Err(TilingError::LimitTooSmall("maxTriangles must be at least 1".into()))
        }
        Some(Limit::MinSize(e)) if !(e > 0.0 && e.is_finite()) => {
            return Err(TilingError::LimitTooSmall(format!("minSize must be positive, got {e}")))
        }
        _ => {}
    }
    let geometry = classify_signature(sig);
    let limit = match (geometry, limit) {
        (Geometry::Elliptic, l) => l,
        (_, None) => Some(Limit::MaxTriangles(DEFAULT_MAX_TRIANGLES)),
        (_, l) => l,
    };
    let seed = seed_triangle(sig, geometry)?;
    let keep = |t: &TileTriangle| match (limit, geometry) {
        (Some(Limit::MaxWord(n)), _) => t.word.len() <= n,
        (Some(Limit::MinSize(e)), Geometry::Hyperbolic) => t.diameter() >= e,
        (Some(Limit::MinSize(e)), Geometry::Euclidean) => norm(&t.centroid()) <= 1.0 / e,
        _ => true,
    };
    let max = match limit {
        Some(Limit::MaxTriangles(n)) => n,
        _ => usize::MAX,
    };
    let first = TileTriangle { vertices: seed.vertices, parity: false, word: vec![] };
    let mut seen = CentroidSet { seen: HashMap::new() };
    seen.insert(&first.centroid());
    let mut triangles = vec![first];
    let mut queue = VecDeque::from([0usize]);
    let mut truncated = false;
    'search: while let Some(i) = queue.pop_front() {
        let sides = sides_of(geometry, &triangles[i].vertices);
        for (s, side) in sides.iter().enumerate() {
            let t = &triangles[i];
            if t.word.last() == Some(&(s as u8)) {
                continue;
            }
            let mut word = t.word.clone();
            word.push(s as u8);
            let cand = TileTriangle { vertices: t.vertices.map(|v| reflect(side, &v)), parity: !t.parity, word };
            if !keep(&cand) {
                truncated = true;
                continue;
            }
            if !seen.insert(&cand.centroid()) {
                continue;
            }
            if triangles.len() == max {
                truncated = true;
                break 'search;
            }
            triangles.push(cand);
            queue.push_back(triangles.len() - 1);
        }
    }
    Ok(TilingScene { geometry, signature: *sig, triangles, closed: !truncated })
}
