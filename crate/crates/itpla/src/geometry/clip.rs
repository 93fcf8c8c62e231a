//! Convex clipping and simple-polygon triangulation.

use super::{signed_area, Point2, EPS};

/// Sutherland-Hodgman clip of `subject` against a convex CCW `clip` polygon.
/// Returns the clipped vertex loop (possibly empty).
pub fn clip_convex(subject: &[Point2], clip: &[Point2]) -> Vec<Point2> {
    let mut output = subject.to_vec();
    let m = clip.len();
    for i in 0..m {
        if output.is_empty() {
            break;
        }
        let a = clip[i];
        let b = clip[(i + 1) % m];
        let dir = b - a;
        let input = std::mem::take(&mut output);
        let n = input.len();
        for j in 0..n {
            let p = input[j];
            let q = input[(j + 1) % n];
            let sp = dir.cross(p - a);
            let sq = dir.cross(q - a);
            if sp >= 0.0 {
                output.push(p);
                if sq < 0.0 {
                    output.push(p.lerp(q, sp / (sp - sq)));
                }
            } else if sq >= 0.0 {
                output.push(p.lerp(q, sp / (sp - sq)));
            }
        }
    }
    output
}

/// Ear-clipping triangulation of a simple CCW polygon. The returned
/// triangles partition the polygon's interior.
pub fn triangulate(vertices: &[Point2]) -> Vec<[Point2; 3]> {
    let mut idx: Vec<usize> = (0..vertices.len()).collect();
    let mut triangles = Vec::with_capacity(vertices.len().saturating_sub(2));

    while idx.len() > 3 {
        let n = idx.len();
        let mut clipped = false;
        for k in 0..n {
            let ia = idx[(k + n - 1) % n];
            let ib = idx[k];
            let ic = idx[(k + 1) % n];
            let (a, b, c) = (vertices[ia], vertices[ib], vertices[ic]);
            let cross = (b - a).cross(c - b);
            if cross <= EPS * EPS {
                continue; // reflex or degenerate corner
            }
            let mut is_ear = true;
            for &other in &idx {
                if other == ia || other == ib || other == ic {
                    continue;
                }
                if point_in_triangle(vertices[other], a, b, c) {
                    is_ear = false;
                    break;
                }
            }
            if is_ear {
                triangles.push([a, b, c]);
                idx.remove(k);
                clipped = true;
                break;
            }
        }
        if !clipped {
            // numerically stuck (collinear chains); drop the flattest corner
            let n = idx.len();
            let mut worst = 0;
            let mut worst_cross = f64::INFINITY;
            for k in 0..n {
                let a = vertices[idx[(k + n - 1) % n]];
                let b = vertices[idx[k]];
                let c = vertices[idx[(k + 1) % n]];
                let cr = (b - a).cross(c - b).abs();
                if cr < worst_cross {
                    worst_cross = cr;
                    worst = k;
                }
            }
            idx.remove(worst);
        }
    }
    if idx.len() == 3 {
        triangles.push([vertices[idx[0]], vertices[idx[1]], vertices[idx[2]]]);
    }
    triangles
}

fn point_in_triangle(p: Point2, a: Point2, b: Point2, c: Point2) -> bool {
    let s1 = (b - a).cross(p - a);
    let s2 = (c - b).cross(p - b);
    let s3 = (a - c).cross(p - c);
    s1 >= -EPS && s2 >= -EPS && s3 >= -EPS
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn clip_squares() {
        let a = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ];
        let b = vec![
            Point2::new(0.5, 0.5),
            Point2::new(1.5, 0.5),
            Point2::new(1.5, 1.5),
            Point2::new(0.5, 1.5),
        ];
        assert_relative_eq!(signed_area(&clip_convex(&a, &b)), 0.25, epsilon = 1e-12);
    }

    #[test]
    fn triangulation_preserves_area() {
        // non-convex L-shape
        let l = vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(2.0, 1.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 2.0),
            Point2::new(0.0, 2.0),
        ];
        let tris = triangulate(&l);
        assert_eq!(tris.len(), 4);
        let total: f64 = tris.iter().map(|t| signed_area(t)).sum();
        assert_relative_eq!(total, 3.0, epsilon = 1e-12);
    }
}
