//! Directional contact distances.
//!
//! `contact_distance` answers: translating (never rotating) `mover` along
//! the line joining the two centers, at what center distance does it first
//! touch `target`? Equivalently, it is the exit distance of a ray cast from
//! the target center through the configuration-space obstacle
//! `target ⊕ (-mover)`, which is computed here from support functions
//! without building the Minkowski sum explicitly.

use super::{PlacedConvex, Segment, Vec2, EPS};
use crate::error::Error;

/// Center distance at which `mover`, translated toward `target` along the
/// center line, first touches `target`. Exact for all shape pairs; equals
/// `r_i + r_j` for circle pairs.
pub fn contact_distance(mover: &PlacedConvex, target: &PlacedConvex) -> Result<f64, Error> {
    let pt = target.center();
    let pm = mover.center();
    let d = (pm - pt).norm();
    if d < EPS {
        return Err(Error::CoincidentCenters);
    }
    let v = (pm - pt) / d;
    match (target, mover) {
        (
            PlacedConvex::Circle { radius: rt, .. },
            PlacedConvex::Circle { radius: rm, .. },
        ) => Ok(rt + rm),
        (PlacedConvex::Polygon { .. }, PlacedConvex::Polygon { .. }) => {
            Ok(polygon_pair_exit(target, mover, v))
        }
        (PlacedConvex::Polygon { center, vertices }, PlacedConvex::Circle { radius, .. }) => {
            let local: Vec<Vec2> = vertices.iter().map(|w| *w - *center).collect();
            Ok(rounded_exit(&local, *radius, v))
        }
        (PlacedConvex::Circle { radius, .. }, PlacedConvex::Polygon { center, vertices }) => {
            // reflect the mover polygon about its center
            let local: Vec<Vec2> = vertices.iter().map(|w| -(*w - *center)).collect();
            Ok(rounded_exit(&local, *radius, v))
        }
    }
}

/// Ray exit distance for the sum of two convex polygons. The obstacle is
/// the intersection of half-planes whose normals are the edge normals of
/// the target and of the reflected mover, with support values summed.
fn polygon_pair_exit(target: &PlacedConvex, mover: &PlacedConvex, v: Vec2) -> f64 {
    let (tc, tv) = match target {
        PlacedConvex::Polygon { center, vertices } => (*center, vertices),
        _ => unreachable!(),
    };
    let (mc, mv) = match mover {
        PlacedConvex::Polygon { center, vertices } => (*center, vertices),
        _ => unreachable!(),
    };
    let t_local: Vec<Vec2> = tv.iter().map(|w| *w - tc).collect();
    let m_reflected: Vec<Vec2> = mv.iter().map(|w| -(*w - mc)).collect();

    let support = |set: &[Vec2], n: Vec2| -> f64 {
        set.iter().map(|w| w.dot(n)).fold(f64::NEG_INFINITY, f64::max)
    };

    let mut exit = f64::INFINITY;
    let mut consider = |normals_of: &[Vec2]| {
        let k = normals_of.len();
        for i in 0..k {
            let e = normals_of[(i + 1) % k] - normals_of[i];
            let n = Vec2::new(e.y, -e.x).normalized(); // outward for CCW
            let nv = n.dot(v);
            if nv > EPS {
                let h = support(&t_local, n) + support(&m_reflected, n);
                exit = exit.min(h / nv);
            }
        }
    };
    consider(&t_local);
    consider(&m_reflected);
    exit
}

/// Ray exit distance from `K ⊕ disc(r)` with `K` a convex polygon given by
/// vertex offsets from the ray origin. Every candidate lies inside the
/// obstacle and the true exit feature is among them, so the exit distance
/// is the maximum over valid edge-offset and vertex-arc candidates.
fn rounded_exit(k_local: &[Vec2], r: f64, v: Vec2) -> f64 {
    let n = k_local.len();
    let mut best = 0.0f64;
    for i in 0..n {
        let q1 = k_local[i];
        let q2 = k_local[(i + 1) % n];
        let edge = q2 - q1;
        let len = edge.norm();
        if len > EPS {
            let normal = Vec2::new(edge.y, -edge.x) / len; // outward for CCW
            let nv = normal.dot(v);
            if nv > EPS {
                let s = (normal.dot(q1) + r) / nv;
                let foot = v * s - normal * r;
                let t = (foot - q1).dot(edge / len);
                if s > 0.0 && t >= -EPS && t <= len + EPS {
                    best = best.max(s);
                }
            }
        }
        // vertex arc: |s v - q1| = r
        let vw = v.dot(q1);
        let disc = vw * vw - (q1.norm_sq() - r * r);
        if disc >= 0.0 {
            let s = vw + disc.sqrt();
            if s > 0.0 {
                best = best.max(s);
            }
        }
    }
    best
}

/// Distance from the contact pose center to the projection point on the
/// edge's supporting line, when the shape translates along the normal
/// toward the line. For circles this is the radius; for polygons it is the
/// support distance toward the line.
pub fn contact_distance_to_line(mover: &PlacedConvex, edge: &Segment) -> Result<f64, Error> {
    let center = mover.center();
    let foot = edge.project_onto_line(center);
    let d = (center - foot).norm();
    if d < EPS {
        return Err(Error::CenterOnEdgeLine);
    }
    let toward_line = (foot - center) / d;
    Ok(mover.support(toward_line))
}
