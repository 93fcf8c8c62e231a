//! Planar geometry kernel: points, polygons, convex shapes, areas,
//! clipping and directional contact distances.
//!
//! All predicates use an absolute tolerance of [`EPS`] in model length
//! units. Operations are pure functions over immutable inputs.

mod circle;
mod clip;
mod contact;

pub use circle::{circle_circle_intersection_area, circle_polygon_intersection_area};
pub use clip::{clip_convex, triangulate};
pub use contact::{contact_distance, contact_distance_to_line};

use crate::error::Error;
use serde::{Deserialize, Serialize};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Absolute tolerance for geometric predicates, in model length units.
pub const EPS: f64 = 1e-9;

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

/// A displacement vector in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(&self, other: Point2) -> f64 {
        (*self - other).norm()
    }

    /// Coordinate-wise linear interpolation, `t = 0` gives `self`.
    pub fn lerp(&self, other: Point2, t: f64) -> Point2 {
        Point2::new(self.x + (other.x - self.x) * t, self.y + (other.y - self.y) * t)
    }
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    /// Unit vector at the given bearing (radians, CCW from +x).
    pub fn from_bearing(angle: f64) -> Self {
        Self::new(angle.cos(), angle.sin())
    }

    pub fn dot(&self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(&self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(&self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn normalized(&self) -> Vec2 {
        let n = self.norm();
        Vec2::new(self.x / n, self.y / n)
    }

    /// Rotation by +90 degrees (CCW).
    pub fn perp(&self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    pub fn rotated(&self, angle: f64) -> Vec2 {
        let (s, c) = angle.sin_cos();
        Vec2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    /// Bearing in radians, CCW from +x, in (-pi, pi].
    pub fn bearing(&self) -> f64 {
        self.y.atan2(self.x)
    }
}

impl Sub for Point2 {
    type Output = Vec2;
    fn sub(self, rhs: Point2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add<Vec2> for Point2 {
    type Output = Point2;
    fn add(self, rhs: Vec2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub<Vec2> for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Vec2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x * rhs, self.y * rhs)
    }
}

impl Div<f64> for Vec2 {
    type Output = Vec2;
    fn div(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x / rhs, self.y / rhs)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// A directed line segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: Point2,
    pub b: Point2,
}

impl Segment {
    pub fn new(a: Point2, b: Point2) -> Self {
        Self { a, b }
    }

    pub fn midpoint(&self) -> Point2 {
        self.a.lerp(self.b, 0.5)
    }

    pub fn length(&self) -> f64 {
        (self.b - self.a).norm()
    }

    pub fn direction(&self) -> Vec2 {
        (self.b - self.a).normalized()
    }

    /// Perpendicular (unsigned) distance from `p` to the supporting line.
    pub fn line_distance(&self, p: Point2) -> f64 {
        let d = self.direction();
        (p - self.a).cross(d).abs()
    }

    /// Normal projection of `p` onto the supporting line.
    pub fn project_onto_line(&self, p: Point2) -> Point2 {
        let d = self.direction();
        self.a + d * (p - self.a).dot(d)
    }

    /// Distance from `p` to the closest point of the segment itself.
    pub fn distance_to_point(&self, p: Point2) -> f64 {
        let ab = self.b - self.a;
        let t = ((p - self.a).dot(ab) / ab.norm_sq()).clamp(0.0, 1.0);
        p.distance(self.a.lerp(self.b, t))
    }

    /// Tests proper crossing (interiors of both segments intersect in one point).
    /// Segments within an EPS angle of parallel are treated as non-crossing.
    pub fn properly_intersects(&self, other: &Segment) -> bool {
        let d1 = self.b - self.a;
        let d2 = other.b - other.a;
        let denom = d1.cross(d2);
        if denom.abs() < EPS * d1.norm() * d2.norm() {
            return false;
        }
        let t = (other.a - self.a).cross(d2) / denom;
        let u = (other.a - self.a).cross(d1) / denom;
        t > EPS && t < 1.0 - EPS && u > EPS && u < 1.0 - EPS
    }
}

/// Signed shoelace area of a vertex loop; positive when counter-clockwise.
pub fn signed_area(vertices: &[Point2]) -> f64 {
    let n = vertices.len();
    let mut twice = 0.0;
    for i in 0..n {
        let p = vertices[i];
        let q = vertices[(i + 1) % n];
        twice += p.x * q.y - p.y * q.x;
    }
    0.5 * twice
}

/// A simple closed polygon with counter-clockwise vertices and strictly
/// positive area.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplePolygon {
    vertices: Vec<Point2>,
}

impl SimplePolygon {
    /// Validates vertex count, finiteness, orientation and simplicity.
    pub fn new(vertices: Vec<Point2>) -> Result<Self, Error> {
        if vertices.len() < 3 {
            return Err(Error::DegeneratePolygon("fewer than 3 vertices".into()));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::DegeneratePolygon("non-finite vertex".into()));
        }
        let area = signed_area(&vertices);
        if area.abs() <= EPS * EPS {
            return Err(Error::DegeneratePolygon("zero area".into()));
        }
        if area < 0.0 {
            return Err(Error::DegeneratePolygon(
                "vertices are clockwise; counter-clockwise order is required".into(),
            ));
        }
        let n = vertices.len();
        for i in 0..n {
            let si = Segment::new(vertices[i], vertices[(i + 1) % n]);
            if si.length() < EPS {
                return Err(Error::DegeneratePolygon(format!("edge {i} has zero length")));
            }
            for j in i + 1..n {
                let sj = Segment::new(vertices[j], vertices[(j + 1) % n]);
                if si.properly_intersects(&sj) {
                    return Err(Error::DegeneratePolygon(format!(
                        "edges {i} and {j} intersect"
                    )));
                }
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge(&self, j: usize) -> Segment {
        let n = self.vertices.len();
        Segment::new(self.vertices[j % n], self.vertices[(j + 1) % n])
    }

    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        (0..self.vertices.len()).map(move |j| self.edge(j))
    }

    /// Shoelace area; strictly positive for a valid polygon.
    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn bounding_box(&self) -> (Point2, Point2) {
        let mut min = self.vertices[0];
        let mut max = self.vertices[0];
        for v in &self.vertices {
            min.x = min.x.min(v.x);
            min.y = min.y.min(v.y);
            max.x = max.x.max(v.x);
            max.y = max.y.max(v.y);
        }
        (min, max)
    }

    /// Even-odd containment; points on the boundary are not guaranteed
    /// either way. Use [`Self::contains_with_tol`] near the boundary.
    pub fn contains(&self, p: Point2) -> bool {
        let mut inside = false;
        let n = self.vertices.len();
        let mut j = n - 1;
        for i in 0..n {
            let vi = self.vertices[i];
            let vj = self.vertices[j];
            if (vi.y > p.y) != (vj.y > p.y) {
                let x_cross = vi.x + (p.y - vi.y) / (vj.y - vi.y) * (vj.x - vi.x);
                if p.x < x_cross {
                    inside = !inside;
                }
            }
            j = i;
        }
        inside
    }

    /// Containment with points within `tol` of the boundary counted inside.
    pub fn contains_with_tol(&self, p: Point2, tol: f64) -> bool {
        if self.contains(p) {
            return true;
        }
        self.edges().any(|e| e.distance_to_point(p) <= tol)
    }
}

/// A convex module footprint in its body frame: either an analytic circle
/// or a convex CCW polygon with centroid at the origin.
#[derive(Debug, Clone, PartialEq)]
pub enum ConvexShape {
    Circle { radius: f64 },
    Polygon { vertices: Vec<Point2> },
}

impl ConvexShape {
    pub fn circle(radius: f64) -> Result<Self, Error> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidShape("circle radius must be positive".into()));
        }
        Ok(Self::Circle { radius })
    }

    /// Builds a convex polygon shape; vertices are re-centred on their
    /// area centroid so the body-frame origin is the centroid.
    pub fn convex_polygon(vertices: Vec<Point2>) -> Result<Self, Error> {
        if vertices.len() < 3 {
            return Err(Error::InvalidShape("fewer than 3 vertices".into()));
        }
        let area = signed_area(&vertices);
        if area <= EPS * EPS {
            return Err(Error::InvalidShape("polygon must be CCW with positive area".into()));
        }
        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            if (b - a).norm() < EPS {
                return Err(Error::InvalidShape("zero-length edge".into()));
            }
            if (b - a).cross(c - b) < -EPS {
                return Err(Error::InvalidShape("polygon is not convex".into()));
            }
        }
        let centroid = polygon_centroid(&vertices);
        let recentred = vertices
            .into_iter()
            .map(|v| Point2::new(v.x - centroid.x, v.y - centroid.y))
            .collect();
        Ok(Self::Polygon { vertices: recentred })
    }

    pub fn area(&self) -> f64 {
        match self {
            Self::Circle { radius } => std::f64::consts::PI * radius * radius,
            Self::Polygon { vertices } => signed_area(vertices),
        }
    }

    /// Radius of the smallest circle centred at the origin containing the shape.
    pub fn circumradius(&self) -> f64 {
        match self {
            Self::Circle { radius } => *radius,
            Self::Polygon { vertices } => vertices
                .iter()
                .map(|v| (*v - Point2::new(0.0, 0.0)).norm())
                .fold(0.0, f64::max),
        }
    }

    /// Places the shape in the world frame at `center` with orientation `theta`.
    pub fn place(&self, center: Point2, theta: f64) -> PlacedConvex {
        match self {
            Self::Circle { radius } => PlacedConvex::Circle { center, radius: *radius },
            Self::Polygon { vertices } => {
                let world = vertices
                    .iter()
                    .map(|v| center + (*v - Point2::new(0.0, 0.0)).rotated(theta))
                    .collect();
                PlacedConvex::Polygon { center, vertices: world }
            }
        }
    }
}

fn polygon_centroid(vertices: &[Point2]) -> Point2 {
    let n = vertices.len();
    let mut cx = 0.0;
    let mut cy = 0.0;
    let mut twice_area = 0.0;
    for i in 0..n {
        let p = vertices[i];
        let q = vertices[(i + 1) % n];
        let w = p.x * q.y - q.x * p.y;
        twice_area += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    Point2::new(cx / (3.0 * twice_area), cy / (3.0 * twice_area))
}

/// A convex shape placed in the world frame.
#[derive(Debug, Clone, PartialEq)]
pub enum PlacedConvex {
    Circle { center: Point2, radius: f64 },
    Polygon { center: Point2, vertices: Vec<Point2> },
}

impl PlacedConvex {
    pub fn center(&self) -> Point2 {
        match self {
            Self::Circle { center, .. } | Self::Polygon { center, .. } => *center,
        }
    }

    pub fn area(&self) -> f64 {
        match self {
            Self::Circle { radius, .. } => std::f64::consts::PI * radius * radius,
            Self::Polygon { vertices, .. } => signed_area(vertices),
        }
    }

    /// Support value `max_{x in shape} dir . x` with `dir` a unit vector and
    /// `x` measured from the shape's center.
    pub fn support(&self, dir: Vec2) -> f64 {
        match self {
            Self::Circle { radius, .. } => *radius,
            Self::Polygon { center, vertices } => vertices
                .iter()
                .map(|v| (*v - *center).dot(dir))
                .fold(f64::NEG_INFINITY, f64::max),
        }
    }

    /// World-frame vertices of a polygonal approximation. Circles use `segments`
    /// chords with the radius inflated so the polygon area equals the disc area
    /// exactly (relative boundary error is O(1/segments^2)).
    pub fn to_polygon_vertices(&self, segments: usize) -> Vec<Point2> {
        match self {
            Self::Polygon { vertices, .. } => vertices.clone(),
            Self::Circle { center, radius } => {
                let n = segments.max(8);
                let step = 2.0 * std::f64::consts::PI / n as f64;
                // regular n-gon with the same area as the disc
                let r = radius * (step / step.sin()).sqrt();
                (0..n)
                    .map(|i| {
                        let a = step * i as f64;
                        *center + Vec2::from_bearing(a) * r
                    })
                    .collect()
            }
        }
    }

    /// Whether the open interior intersects the given segment.
    pub fn interior_intersects_segment(&self, seg: &Segment) -> bool {
        match self {
            Self::Circle { center, radius } => seg.distance_to_point(*center) < radius - EPS,
            Self::Polygon { vertices, .. } => {
                // Clip the segment's parameter interval by each edge half-plane.
                let n = vertices.len();
                let d = seg.b - seg.a;
                let mut lo = 0.0f64;
                let mut hi = 1.0f64;
                for i in 0..n {
                    let p = vertices[i];
                    let q = vertices[(i + 1) % n];
                    let normal = (q - p).perp(); // inward for CCW
                    let num = normal.dot(seg.a - p);
                    let den = normal.dot(d);
                    if den.abs() < EPS * EPS {
                        if num <= EPS {
                            return false; // parallel and outside (or on the line)
                        }
                        continue;
                    }
                    let t = -num / den;
                    if den > 0.0 {
                        lo = lo.max(t);
                    } else {
                        hi = hi.min(t);
                    }
                }
                lo + EPS < hi
            }
        }
    }
}

/// Intersection area of two placed convex shapes. Exact for circle pairs,
/// polygon pairs and circle-polygon pairs.
pub fn intersection_area(a: &PlacedConvex, b: &PlacedConvex) -> f64 {
    match (a, b) {
        (
            PlacedConvex::Circle { center: ca, radius: ra },
            PlacedConvex::Circle { center: cb, radius: rb },
        ) => circle_circle_intersection_area(*ca, *ra, *cb, *rb),
        (PlacedConvex::Circle { center, radius }, PlacedConvex::Polygon { vertices, .. })
        | (PlacedConvex::Polygon { vertices, .. }, PlacedConvex::Circle { center, radius }) => {
            circle_polygon_intersection_area(*center, *radius, vertices)
        }
        (PlacedConvex::Polygon { vertices: va, .. }, PlacedConvex::Polygon { vertices: vb, .. }) => {
            signed_area(&clip_convex(va, vb)).max(0.0)
        }
    }
}

/// Intersection area of a placed convex shape with a simple polygon
/// (which may be non-convex).
pub fn intersection_area_with_polygon(shape: &PlacedConvex, polygon: &SimplePolygon) -> f64 {
    match shape {
        PlacedConvex::Circle { center, radius } => {
            circle_polygon_intersection_area(*center, *radius, polygon.vertices())
        }
        PlacedConvex::Polygon { vertices, .. } => triangulate(polygon.vertices())
            .iter()
            .map(|tri| signed_area(&clip_convex(vertices, tri)).max(0.0))
            .sum(),
    }
}

/// Number of chords used when a circle must be polygonalized for
/// boolean union work.
pub const UNION_CIRCLE_SEGMENTS: usize = 128;

/// Area of the union of all `shape ∩ clip` regions.
///
/// Polygonal shapes go through exact boolean decomposition; circles are
/// polygonalized area-preservingly with [`UNION_CIRCLE_SEGMENTS`] chords,
/// which bounds the relative error by about `4e-4` on overlapping regions
/// and keeps disjoint unions exact.
pub fn union_area_clipped(shapes: &[PlacedConvex], clip: &SimplePolygon) -> f64 {
    use geo::{Area, BooleanOps, MultiPolygon};

    if shapes.is_empty() {
        return 0.0;
    }
    let to_geo = |verts: &[Point2]| -> geo::Polygon {
        geo::Polygon::new(
            geo::LineString::from(
                verts.iter().map(|p| (p.x, p.y)).collect::<Vec<_>>(),
            ),
            vec![],
        )
    };
    let clip_poly = MultiPolygon::new(vec![to_geo(clip.vertices())]);
    let mut acc: Option<MultiPolygon> = None;
    for shape in shapes {
        let verts = shape.to_polygon_vertices(UNION_CIRCLE_SEGMENTS);
        let piece = MultiPolygon::new(vec![to_geo(&verts)]);
        acc = Some(match acc {
            None => piece,
            Some(u) => u.union(&piece),
        });
    }
    let union = acc.expect("non-empty shapes");
    union.intersection(&clip_poly).unsigned_area()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn square(x0: f64, y0: f64, s: f64) -> Vec<Point2> {
        vec![
            Point2::new(x0, y0),
            Point2::new(x0 + s, y0),
            Point2::new(x0 + s, y0 + s),
            Point2::new(x0, y0 + s),
        ]
    }

    fn unit_triangle(side: f64) -> ConvexShape {
        let r = side / 3f64.sqrt();
        let rho = side / (2.0 * 3f64.sqrt());
        ConvexShape::convex_polygon(vec![
            Point2::new(-side / 2.0, -rho),
            Point2::new(side / 2.0, -rho),
            Point2::new(0.0, r),
        ])
        .unwrap()
    }

    #[test]
    fn polygon_area_unit_square() {
        let p = SimplePolygon::new(square(0.0, 0.0, 1.0)).unwrap();
        assert_relative_eq!(p.area(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn polygon_area_equilateral_triangle() {
        let t = unit_triangle(1.0);
        assert_relative_eq!(t.area(), 0.4330127, epsilon = 1e-6);
    }

    #[test]
    fn polygon_area_l_shape() {
        // three unit squares in an L
        let p = SimplePolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(2.0, 1.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 2.0),
            Point2::new(0.0, 2.0),
        ])
        .unwrap();
        assert_relative_eq!(p.area(), 3.0, epsilon = 1e-12);
    }

    #[test]
    fn reversed_vertices_negate_shoelace_and_are_rejected() {
        let verts = square(0.0, 0.0, 2.0);
        let mut rev = verts.clone();
        rev.reverse();
        assert_relative_eq!(signed_area(&verts), -signed_area(&rev), epsilon = 1e-12);
        assert!(SimplePolygon::new(rev).is_err());
    }

    #[test]
    fn degenerate_polygons_rejected() {
        assert!(SimplePolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(2.0, 0.0),
        ])
        .is_err());
        // bow-tie
        assert!(SimplePolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
        ])
        .is_err());
    }

    #[test]
    fn intersection_area_offset_squares() {
        let a = ConvexShape::convex_polygon(square(0.0, 0.0, 1.0)).unwrap();
        let pa = a.place(Point2::new(0.5, 0.5), 0.0);
        let pb = a.place(Point2::new(1.0, 1.0), 0.0);
        assert_relative_eq!(intersection_area(&pa, &pb), 0.25, epsilon = 1e-12);
    }

    #[test]
    fn intersection_area_coincident_triangles() {
        let t = unit_triangle(1.0);
        let pa = t.place(Point2::new(0.3, -0.2), 0.7);
        let pb = t.place(Point2::new(0.3, -0.2), 0.7);
        assert_relative_eq!(intersection_area(&pa, &pb), t.area(), epsilon = 1e-9);
    }

    #[test]
    fn intersection_area_disjoint_is_zero() {
        let t = unit_triangle(1.0);
        let pa = t.place(Point2::new(0.0, 0.0), 0.0);
        let pb = t.place(Point2::new(5.0, 0.0), 1.0);
        assert_eq!(intersection_area(&pa, &pb), 0.0);
    }

    #[test]
    fn union_single_and_coincident_and_disjoint() {
        let clip = SimplePolygon::new(square(-5.0, -5.0, 10.0)).unwrap();
        let t = unit_triangle(1.0);
        let a = t.place(Point2::new(0.0, 0.0), 0.0);
        let area = t.area();
        assert_relative_eq!(union_area_clipped(&[a.clone()], &clip), area, epsilon = 1e-9);
        assert_relative_eq!(
            union_area_clipped(&[a.clone(), a.clone()], &clip),
            area,
            epsilon = 1e-9
        );
        let b = t.place(Point2::new(3.0, 0.0), 0.0);
        assert_relative_eq!(
            union_area_clipped(&[a, b], &clip),
            2.0 * area,
            epsilon = 1e-9
        );
    }

    #[test]
    fn circle_union_is_area_preserving() {
        let clip = SimplePolygon::new(square(-10.0, -10.0, 20.0)).unwrap();
        let c = ConvexShape::circle(1.0).unwrap();
        let a = c.place(Point2::new(0.0, 0.0), 0.0);
        assert_relative_eq!(
            union_area_clipped(&[a], &clip),
            std::f64::consts::PI,
            max_relative = 1e-6
        );
    }

    #[test]
    fn interior_segment_intersection() {
        let t = unit_triangle(1.0);
        let placed = t.place(Point2::new(0.0, 0.0), 0.0);
        let crossing = Segment::new(Point2::new(-1.0, 0.0), Point2::new(1.0, 0.0));
        let outside = Segment::new(Point2::new(-1.0, 2.0), Point2::new(1.0, 2.0));
        assert!(placed.interior_intersects_segment(&crossing));
        assert!(!placed.interior_intersects_segment(&outside));
        // tangent along the bottom side: touches the boundary, not the interior
        let rho = 1.0 / (2.0 * 3f64.sqrt());
        let tangent = Segment::new(Point2::new(-1.0, -rho), Point2::new(1.0, -rho));
        assert!(!placed.interior_intersects_segment(&tangent));
    }

    #[test]
    fn containment_tests() {
        let p = SimplePolygon::new(square(0.0, 0.0, 1.0)).unwrap();
        assert!(p.contains(Point2::new(0.5, 0.5)));
        assert!(!p.contains(Point2::new(1.5, 0.5)));
        assert!(p.contains_with_tol(Point2::new(1.0, 0.5), 1e-9));
    }
}
