//! Isometric-grid sweep baseline: counts the triangles of a rigid grid
//! contained in the polygon, maximised over grid offsets and rotation.
//! A transparent lower-bound comparator, not a reimplementation of prior
//! placement heuristics.

use crate::geometry::{Point2, Segment, SimplePolygon, Vec2, EPS};
use rayon::prelude::*;
use std::f64::consts::FRAC_PI_3;

/// A grid pose: translation offset plus rotation in `[0, pi/3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPose {
    pub offset: Point2,
    pub rotation: f64,
}

/// Evaluates an `offsets x offsets x rotations` lattice of grid poses and
/// returns the maximum number of grid triangles fully contained in the
/// polygon, with the pose achieving it. The aligned pose (zero offset,
/// zero rotation) is always among the samples.
pub fn grid_sweep(
    polygon: &SimplePolygon,
    side: f64,
    offsets: usize,
    rotations: usize,
) -> (usize, GridPose) {
    assert!(side > 0.0 && offsets >= 1 && rotations >= 1);

    let results: Vec<(usize, usize)> = (0..rotations)
        .into_par_iter()
        .map(|rot_idx| {
            let rotation = FRAC_PI_3 * rot_idx as f64 / rotations as f64;
            let mut best = 0usize;
            let mut best_offset = 0usize;
            for a in 0..offsets {
                for b in 0..offsets {
                    let count = count_at(polygon, side, rotation, a, b, offsets);
                    if count > best {
                        best = count;
                        best_offset = a * offsets + b;
                    }
                }
            }
            (best, best_offset)
        })
        .collect();

    let (rot_idx, &(count, offset_idx)) = results
        .iter()
        .enumerate()
        .max_by_key(|(i, (c, _))| (*c, std::cmp::Reverse(*i)))
        .expect("at least one rotation");
    let rotation = FRAC_PI_3 * rot_idx as f64 / rotations as f64;
    let (a, b) = (offset_idx / offsets, offset_idx % offsets);
    let (u, w) = basis(side, rotation);
    let offset = Point2::new(0.0, 0.0) + u * (a as f64 / offsets as f64) + w * (b as f64 / offsets as f64);
    (count, GridPose { offset, rotation })
}

fn basis(side: f64, rotation: f64) -> (Vec2, Vec2) {
    (
        Vec2::from_bearing(rotation) * side,
        Vec2::from_bearing(rotation + FRAC_PI_3) * side,
    )
}

fn count_at(
    polygon: &SimplePolygon,
    side: f64,
    rotation: f64,
    a: usize,
    b: usize,
    offsets: usize,
) -> usize {
    let (u, w) = basis(side, rotation);
    let origin =
        Point2::new(0.0, 0.0) + u * (a as f64 / offsets as f64) + w * (b as f64 / offsets as f64);

    // lattice index range covering the bounding box
    let (min, max) = polygon.bounding_box();
    let corners = [
        Point2::new(min.x, min.y),
        Point2::new(max.x, min.y),
        Point2::new(max.x, max.y),
        Point2::new(min.x, max.y),
    ];
    let det = u.cross(w);
    let mut i_min = f64::INFINITY;
    let mut i_max = f64::NEG_INFINITY;
    let mut j_min = f64::INFINITY;
    let mut j_max = f64::NEG_INFINITY;
    for c in corners {
        let d = c - origin;
        let i = d.cross(w) / det;
        let j = u.cross(d) / det;
        i_min = i_min.min(i);
        i_max = i_max.max(i);
        j_min = j_min.min(j);
        j_max = j_max.max(j);
    }

    let mut count = 0;
    for i in (i_min.floor() as i64 - 1)..=(i_max.ceil() as i64 + 1) {
        for j in (j_min.floor() as i64 - 1)..=(j_max.ceil() as i64 + 1) {
            let p00 = origin + u * i as f64 + w * j as f64;
            let p10 = p00 + u;
            let p01 = p00 + w;
            let p11 = p10 + w;
            if triangle_inside(polygon, [p00, p10, p01]) {
                count += 1;
            }
            if triangle_inside(polygon, [p10, p11, p01]) {
                count += 1;
            }
        }
    }
    count
}

/// Vertex-and-edge containment: all vertices inside (boundary included
/// within tolerance) and no proper crossing with any polygon edge.
fn triangle_inside(polygon: &SimplePolygon, tri: [Point2; 3]) -> bool {
    for v in tri {
        if !polygon.contains_with_tol(v, EPS) {
            return false;
        }
    }
    let centroid = Point2::new(
        (tri[0].x + tri[1].x + tri[2].x) / 3.0,
        (tri[0].y + tri[1].y + tri[2].y) / 3.0,
    );
    if !polygon.contains_with_tol(centroid, EPS) {
        return false;
    }
    for k in 0..3 {
        let side = Segment::new(tri[k], tri[(k + 1) % 3]);
        for edge in polygon.edges() {
            if side.properly_intersects(&edge) {
                return false;
            }
        }
    }
    true
}
