//! Exact intersection areas involving circles.

use super::{Point2, Vec2};

/// Area of the intersection of two discs (the lens formula).
pub fn circle_circle_intersection_area(ca: Point2, ra: f64, cb: Point2, rb: f64) -> f64 {
    let d = ca.distance(cb);
    if d >= ra + rb {
        return 0.0;
    }
    let (rmin, rmax) = if ra < rb { (ra, rb) } else { (rb, ra) };
    if d <= rmax - rmin {
        return std::f64::consts::PI * rmin * rmin;
    }
    let cos_a = ((d * d + ra * ra - rb * rb) / (2.0 * d * ra)).clamp(-1.0, 1.0);
    let cos_b = ((d * d + rb * rb - ra * ra) / (2.0 * d * rb)).clamp(-1.0, 1.0);
    let t1 = ra * ra * cos_a.acos();
    let t2 = rb * rb * cos_b.acos();
    let s = (-d + ra + rb) * (d + ra - rb) * (d - ra + rb) * (d + ra + rb);
    t1 + t2 - 0.5 * s.max(0.0).sqrt()
}

/// Area of the intersection of a disc with a simple CCW polygon, computed
/// exactly by accumulating per-edge circular-segment contributions.
pub fn circle_polygon_intersection_area(center: Point2, r: f64, vertices: &[Point2]) -> f64 {
    let n = vertices.len();
    let mut total = 0.0;
    for i in 0..n {
        let a = vertices[i] - center;
        let b = vertices[(i + 1) % n] - center;
        total += edge_contribution(a, b, r);
    }
    total.max(0.0)
}

/// Green's-theorem contribution of one directed edge, relative to a disc
/// of radius `r` at the origin: segment pieces inside the disc contribute
/// triangle areas, pieces outside contribute arc sectors.
fn edge_contribution(a: Vec2, b: Vec2, r: f64) -> f64 {
    let d = b - a;
    let len_sq = d.norm_sq();
    if len_sq == 0.0 {
        return 0.0;
    }
    // |a + t d|^2 = r^2
    let qb = a.dot(d);
    let qc = a.norm_sq() - r * r;
    let disc = qb * qb - len_sq * qc;
    let mut cuts = [0.0f64; 2];
    let mut n_cuts = 0;
    if disc > 0.0 {
        let sq = disc.sqrt();
        for t in [(-qb - sq) / len_sq, (-qb + sq) / len_sq] {
            if t > 0.0 && t < 1.0 {
                cuts[n_cuts] = t;
                n_cuts += 1;
            }
        }
    }
    let mut pieces = Vec::with_capacity(3);
    let mut prev = 0.0;
    for &t in &cuts[..n_cuts] {
        pieces.push((prev, t));
        prev = t;
    }
    pieces.push((prev, 1.0));

    let point_at = |t: f64| a + d * t;
    let mut sum = 0.0;
    for (t0, t1) in pieces {
        if t1 - t0 <= 0.0 {
            continue;
        }
        let p = point_at(t0);
        let q = point_at(t1);
        let mid = point_at(0.5 * (t0 + t1));
        if mid.norm_sq() <= r * r {
            sum += 0.5 * p.cross(q);
        } else {
            sum += 0.5 * r * r * p.cross(q).atan2(p.dot(q));
        }
    }
    sum
}
