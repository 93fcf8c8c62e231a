//! Domain model: modules, placements, semi-space neighbour relations and
//! the normalised-distance / angular-difference / translation-offset
//! primitives that the pseudo-forces are built from.
//!
//! Conventions fixed here and used everywhere else:
//!
//! * triangle side `k` (0..3, counter-clockwise) has outward normal bearing
//!   `theta + 2*pi*k/3 - pi/2` in the world frame;
//! * semi-spaces around a triangle rotate with the module and are centred
//!   on the side normals; semi-spaces around a circle are world-anchored
//!   starting at bearing 0;
//! * a positive angular difference means the first module must rotate
//!   counter-clockwise by half the returned amount.

use crate::error::Error;
use crate::geometry::{
    self, contact_distance, contact_distance_to_line, ConvexShape, PlacedConvex, Point2, Segment,
    SimplePolygon, Vec2, EPS,
};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

/// Wraps an angle into `[0, 2*pi)`.
pub fn wrap_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(2.0 * PI);
    if t >= 2.0 * PI {
        0.0
    } else {
        t
    }
}

/// Wraps an angle into `(-pi/3, pi/3]` modulo the triangle's 120-degree
/// rotational symmetry.
pub fn wrap_to_symmetry(delta: f64) -> f64 {
    let period = 2.0 * FRAC_PI_3;
    let mut d = delta.rem_euclid(period);
    if d > FRAC_PI_3 {
        d -= period;
    }
    d
}

/// Planar position plus orientation of a module's reference frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pose {
    pub center: Point2,
    /// Orientation in radians, wrapped to `[0, 2*pi)`. Carried but
    /// semantically inert for circular modules.
    pub theta: f64,
}

impl Pose {
    pub fn new(center: Point2, theta: f64) -> Self {
        Self { center, theta: wrap_angle(theta) }
    }
}

/// Circle (radius) or equilateral triangle (side length).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModuleShape {
    Circle { radius: f64 },
    Triangle { side: f64 },
}

impl ModuleShape {
    pub fn circle(radius: f64) -> Result<Self, Error> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidShape("radius must be positive".into()));
        }
        Ok(Self::Circle { radius })
    }

    pub fn triangle(side: f64) -> Result<Self, Error> {
        if !(side.is_finite() && side > 0.0) {
            return Err(Error::InvalidShape("side must be positive".into()));
        }
        Ok(Self::Triangle { side })
    }

    /// The size parameter: radius for circles, side length for triangles.
    pub fn size(&self) -> f64 {
        match self {
            Self::Circle { radius } => *radius,
            Self::Triangle { side } => *side,
        }
    }

    pub fn area(&self) -> f64 {
        match self {
            Self::Circle { radius } => PI * radius * radius,
            Self::Triangle { side } => 3f64.sqrt() / 4.0 * side * side,
        }
    }

    pub fn circumradius(&self) -> f64 {
        match self {
            Self::Circle { radius } => *radius,
            Self::Triangle { side } => side / 3f64.sqrt(),
        }
    }

    pub fn inradius(&self) -> f64 {
        match self {
            Self::Circle { radius } => *radius,
            Self::Triangle { side } => side / (2.0 * 3f64.sqrt()),
        }
    }

    /// Number of semi-spaces around a module: 6 for circles, 3 for triangles.
    pub fn semispace_count(&self) -> usize {
        match self {
            Self::Circle { .. } => 6,
            Self::Triangle { .. } => 3,
        }
    }

    pub fn is_triangle(&self) -> bool {
        matches!(self, Self::Triangle { .. })
    }

    /// Body-frame footprint with the centroid at the origin.
    pub fn footprint(&self) -> ConvexShape {
        match self {
            Self::Circle { radius } => ConvexShape::Circle { radius: *radius },
            Self::Triangle { side } => {
                let rho = self.inradius();
                let r = self.circumradius();
                ConvexShape::Polygon {
                    vertices: vec![
                        Point2::new(-side / 2.0, -rho),
                        Point2::new(side / 2.0, -rho),
                        Point2::new(0.0, r),
                    ],
                }
            }
        }
    }
}

/// One placed module.
#[derive(Debug, Clone, PartialEq)]
pub struct Module {
    pub id: usize,
    pub shape: ModuleShape,
    pub pose: Pose,
}

impl Module {
    pub fn new(id: usize, shape: ModuleShape, pose: Pose) -> Self {
        Self { id, shape, pose }
    }

    pub fn placed(&self) -> PlacedConvex {
        self.shape.footprint().place(self.pose.center, self.pose.theta)
    }
}

/// A set of module poses over one polygon; the solver's evolving state.
#[derive(Debug, Clone, PartialEq)]
pub struct Placement {
    pub polygon: SimplePolygon,
    pub modules: Vec<Module>,
}

impl Placement {
    pub fn new(polygon: SimplePolygon, modules: Vec<Module>) -> Result<Self, Error> {
        let mut seen = std::collections::BTreeSet::new();
        for m in &modules {
            if !seen.insert(m.id) {
                return Err(Error::DuplicateModule(m.id));
            }
        }
        Ok(Self { polygon, modules })
    }

    pub fn module_index(&self, id: usize) -> Option<usize> {
        self.modules.iter().position(|m| m.id == id)
    }
}

/// Theoretical upper bound on the number of modules fitting in the
/// polygon: the floor of the area ratio.
pub fn upper_bound(polygon: &SimplePolygon, shape: &ModuleShape) -> usize {
    // the 1e-9 slack keeps exact-tiling ratios from flooring down a unit
    (polygon.area() / shape.area() + 1e-9).floor() as usize
}

/// Index of one of the K equal angular sectors around a module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SemiSpaceIndex(pub usize);

/// Sector of the bearing from `module`'s center to `point`. Triangle
/// sectors rotate with the module frame, each centred on one outward side
/// normal; circle sectors are world-anchored starting at bearing 0.
/// Points exactly on a sector boundary go to the lower index.
pub fn classify_semispace(module: &Module, point: Point2) -> Result<SemiSpaceIndex, Error> {
    let v = point - module.pose.center;
    if v.norm() < EPS {
        return Err(Error::CoincidentPoint);
    }
    let count = module.shape.semispace_count();
    let width = 2.0 * PI / count as f64;
    let anchor = if module.shape.is_triangle() {
        // sector 0 is centred on side 0's outward normal
        module.pose.theta - FRAC_PI_2 - width / 2.0
    } else {
        0.0
    };
    let r = wrap_angle(v.bearing() - anchor);
    let mut k = (r / width) as usize;
    if k >= count {
        k = count - 1;
    }
    // Bearings within ANGLE_EPS of a sector boundary are treated as on it
    // and assigned to the lower of the two adjacent indices, so that exact
    // lattice configurations classify identically regardless of rounding.
    const ANGLE_EPS: f64 = 1e-9;
    let frac = r - k as f64 * width;
    if frac <= ANGLE_EPS {
        if k > 0 {
            k -= 1;
        }
    } else if width - frac <= ANGLE_EPS && k + 1 == count {
        k = 0;
    }
    Ok(SemiSpaceIndex(k))
}

/// One side of a triangular module, with its connector mid point.
#[derive(Debug, Clone, Copy)]
pub struct Side {
    pub index: usize,
    pub a: Point2,
    pub b: Point2,
    pub midpoint: Point2,
    pub outward_normal: Vec2,
    pub direction: Vec2,
}

/// The three sides of a triangular module, counter-clockwise.
pub fn triangle_sides(module: &Module) -> Result<[Side; 3], Error> {
    let ModuleShape::Triangle { side } = module.shape else {
        return Err(Error::NotATriangle);
    };
    let rho = module.shape.inradius();
    let c = module.pose.center;
    let theta = module.pose.theta;
    let mut sides = [None, None, None];
    for (k, slot) in sides.iter_mut().enumerate() {
        let normal = Vec2::from_bearing(theta + 2.0 * FRAC_PI_3 * k as f64 - FRAC_PI_2);
        let dir = normal.perp();
        let midpoint = c + normal * rho;
        *slot = Some(Side {
            index: k,
            a: midpoint - dir * (side / 2.0),
            b: midpoint + dir * (side / 2.0),
            midpoint,
            outward_normal: normal,
            direction: dir,
        });
    }
    Ok(sides.map(|s| s.unwrap()))
}

/// The side whose outward normal best aligns with `toward`; ties go to
/// the lower side index.
pub fn facing_side(module: &Module, toward: Vec2) -> Result<Side, Error> {
    let sides = triangle_sides(module)?;
    let mut best = sides[0];
    let mut best_dot = sides[0].outward_normal.dot(toward);
    for s in &sides[1..] {
        let d = s.outward_normal.dot(toward);
        if d > best_dot {
            best_dot = d;
            best = *s;
        }
    }
    Ok(best)
}

/// Dimensionless normalised distance between two modules:
/// `(d/d*)^2 - 1` with `d` the center distance and `d*` the directional
/// contact distance. Negative exactly when the pair overlaps along the
/// center line.
pub fn normalized_distance(m_i: &Module, m_j: &Module) -> Result<f64, Error> {
    let d = m_i.pose.center.distance(m_j.pose.center);
    if d < EPS {
        return Err(Error::CoincidentCenters);
    }
    let d_star = contact_distance(&m_j.placed(), &m_i.placed())?;
    Ok((d / d_star).powi(2) - 1.0)
}

/// Normalised distance between a module and a polygon edge, measured
/// along the normal from the center to the edge's supporting line.
pub fn normalized_distance_to_edge(m_i: &Module, edge: &Segment) -> Result<f64, Error> {
    let placed = m_i.placed();
    let foot = edge.project_onto_line(m_i.pose.center);
    let d = m_i.pose.center.distance(foot);
    if d < EPS {
        return Err(Error::CenterOnEdgeLine);
    }
    let d_star = contact_distance_to_line(&placed, edge)?;
    Ok((d / d_star).powi(2) - 1.0)
}

fn facing_normals(m_i: &Module, m_j: &Module) -> Result<(Side, Side), Error> {
    let u = m_j.pose.center - m_i.pose.center;
    if u.norm() < EPS {
        return Err(Error::CoincidentCenters);
    }
    let u = u.normalized();
    Ok((facing_side(m_i, u)?, facing_side(m_j, -u)?))
}

/// Signed rotation, wrapped into `(-pi/3, pi/3]`, that realigns the two
/// facing sides when applied with opposite signs half-and-half to each
/// module. Positive means `m_i` rotates counter-clockwise.
///
/// Does not check the neighbour relation; see [`angular_difference`].
pub fn angular_difference_unchecked(m_i: &Module, m_j: &Module) -> Result<f64, Error> {
    if !m_i.shape.is_triangle() || !m_j.shape.is_triangle() {
        return Err(Error::NotATriangle);
    }
    let (side_i, side_j) = facing_normals(m_i, m_j)?;
    let beta_i = side_i.outward_normal.bearing();
    let beta_j = side_j.outward_normal.bearing();
    Ok(wrap_to_symmetry(beta_j - beta_i + PI))
}

/// As [`angular_difference_unchecked`], but requires the pair to be
/// mutual neighbours in `graph`.
pub fn angular_difference(
    m_i: &Module,
    m_j: &Module,
    graph: &NeighborGraph,
) -> Result<f64, Error> {
    if !graph.mutual_ids(m_i.id, m_j.id) {
        return Err(Error::NotMutualNeighbours);
    }
    angular_difference_unchecked(m_i, m_j)
}

/// Half the connector slide mismatch: the component of the vector joining
/// the facing connectors along the facing side's direction, halved.
pub fn translation_offset_unchecked(m_i: &Module, m_j: &Module) -> Result<Vec2, Error> {
    if !m_i.shape.is_triangle() || !m_j.shape.is_triangle() {
        return Err(Error::NotATriangle);
    }
    let (side_i, side_j) = facing_normals(m_i, m_j)?;
    let slide = (side_j.midpoint - side_i.midpoint).dot(side_i.direction);
    Ok(side_i.direction * (slide / 2.0))
}

/// As [`translation_offset_unchecked`], but requires mutual neighbours.
pub fn translation_offset(
    m_i: &Module,
    m_j: &Module,
    graph: &NeighborGraph,
) -> Result<Vec2, Error> {
    if !graph.mutual_ids(m_i.id, m_j.id) {
        return Err(Error::NotMutualNeighbours);
    }
    translation_offset_unchecked(m_i, m_j)
}

/// Options for neighbour graph construction.
#[derive(Debug, Clone, Copy)]
pub struct GraphOptions {
    /// Split polygon edges into sub-segments no longer than the module
    /// diameter before classification, so long edges are represented by
    /// more than their single mid point.
    pub subdivide_edges: bool,
    /// An edge is a neighbour candidate only within this multiple of the
    /// module circumradius; farther borders exert no influence.
    pub edge_range_factor: f64,
}

impl Default for GraphOptions {
    fn default() -> Self {
        Self { subdivide_edges: true, edge_range_factor: 4.0 }
    }
}

/// A polygon (sub-)edge entry in the neighbour graph.
#[derive(Debug, Clone, Copy)]
pub struct EdgeRef {
    /// Index of the parent edge in the polygon.
    pub parent: usize,
    pub segment: Segment,
}

/// Per-sector nearest entities. A sector can hold a module and an edge at
/// the same time; they are selected independently.
#[derive(Debug, Clone, Copy, Default)]
pub struct SectorEntry {
    /// Index (into `Placement::modules`) of the nearest module in this sector.
    pub module: Option<usize>,
    /// Index (into [`NeighborGraph::edge_refs`]) of the nearest edge.
    pub edge: Option<usize>,
}

/// Per-module, per-semi-space nearest module or polygon edge, plus the
/// derived overlap sets. The relation is non-reciprocal in general.
#[derive(Debug, Clone)]
pub struct NeighborGraph {
    sectors: Vec<Vec<SectorEntry>>,
    edge_refs: Vec<EdgeRef>,
    /// For each edge ref, the module nearest to its mid point; edge moment
    /// forces apply only to that module (the reciprocal of the module-edge
    /// neighbour relation).
    edge_nearest_module: Vec<Option<usize>>,
    /// Overlap partners per module: indices of overlapping modules.
    overlap_modules: Vec<Vec<usize>>,
    /// Overlap partners per module: parent edge indices crossed by the interior.
    overlap_edges: Vec<Vec<usize>>,
    ids: Vec<usize>,
}

impl NeighborGraph {
    pub fn sectors(&self, module_index: usize) -> &[SectorEntry] {
        &self.sectors[module_index]
    }

    pub fn edge_refs(&self) -> &[EdgeRef] {
        &self.edge_refs
    }

    pub fn edge_segment(&self, edge_ref: usize) -> Segment {
        self.edge_refs[edge_ref].segment
    }

    /// Whether the module with graph index `other` appears among the
    /// sector entries of `host` (i.e. `other` is a neighbour of `host`).
    pub fn has_module_neighbor(&self, host: usize, other: usize) -> bool {
        self.sectors[host].iter().any(|s| s.module == Some(other))
    }

    pub fn mutual(&self, i: usize, j: usize) -> bool {
        self.has_module_neighbor(i, j) && self.has_module_neighbor(j, i)
    }

    /// Mutuality lookup by module id.
    pub fn mutual_ids(&self, id_i: usize, id_j: usize) -> bool {
        let (Some(i), Some(j)) = (self.index_of(id_i), self.index_of(id_j)) else {
            return false;
        };
        self.mutual(i, j)
    }

    fn index_of(&self, id: usize) -> Option<usize> {
        self.ids.iter().position(|&x| x == id)
    }

    /// Number of distinct neighbours of a module: neighbouring modules
    /// plus neighbouring (parent) polygon edges.
    pub fn neighbor_count(&self, module_index: usize) -> usize {
        let mut modules = std::collections::BTreeSet::new();
        let mut edges = std::collections::BTreeSet::new();
        for entry in &self.sectors[module_index] {
            if let Some(m) = entry.module {
                modules.insert(m);
            }
            if let Some(e) = entry.edge {
                edges.insert(self.edge_refs[e].parent);
            }
        }
        modules.len() + edges.len()
    }

    pub fn overlap_modules(&self, module_index: usize) -> &[usize] {
        &self.overlap_modules[module_index]
    }

    pub fn overlap_edges(&self, module_index: usize) -> &[usize] {
        &self.overlap_edges[module_index]
    }

    /// Whether `module_index` is the module nearest to the given edge ref.
    pub fn edge_reciprocates(&self, edge_ref: usize, module_index: usize) -> bool {
        self.edge_nearest_module[edge_ref] == Some(module_index)
    }
}

/// Builds the neighbour graph for a placement snapshot.
///
/// For every module and each of its K semi-spaces this selects the nearest
/// module by center distance (ties to the lower id) and, independently,
/// the nearest polygon (sub-)edge by mid-point distance, restricted to
/// edges within range. Overlap sets are derived from exact pairwise
/// interior-intersection tests.
pub fn build_neighbor_graph(placement: &Placement, options: &GraphOptions) -> NeighborGraph {
    let modules = &placement.modules;
    let n = modules.len();

    let min_diameter = modules
        .iter()
        .map(|m| 2.0 * m.shape.circumradius())
        .fold(f64::INFINITY, f64::min);
    let mut edge_refs = Vec::new();
    for (parent, edge) in placement.polygon.edges().enumerate() {
        let pieces = if options.subdivide_edges && min_diameter.is_finite() {
            (edge.length() / min_diameter).ceil().max(1.0) as usize
        } else {
            1
        };
        for p in 0..pieces {
            let t0 = p as f64 / pieces as f64;
            let t1 = (p + 1) as f64 / pieces as f64;
            edge_refs.push(EdgeRef {
                parent,
                segment: Segment::new(edge.a.lerp(edge.b, t0), edge.a.lerp(edge.b, t1)),
            });
        }
    }

    let placed: Vec<PlacedConvex> = modules.iter().map(|m| m.placed()).collect();
    let mut sectors = vec![Vec::new(); n];
    let mut overlap_modules = vec![Vec::new(); n];
    let mut overlap_edges = vec![Vec::new(); n];

    for i in 0..n {
        let m_i = &modules[i];
        let k_count = m_i.shape.semispace_count();
        let mut entries = vec![SectorEntry::default(); k_count];
        // best (distance, id) per sector, separately for modules and edges
        let mut best_module = vec![(f64::INFINITY, usize::MAX); k_count];
        let mut best_edge = vec![(f64::INFINITY, usize::MAX); k_count];

        for (j, m_j) in modules.iter().enumerate() {
            if j == i {
                continue;
            }
            let d = m_i.pose.center.distance(m_j.pose.center);
            if d < EPS {
                // coincident centers cannot be classified; they still overlap
                overlap_modules[i].push(j);
                continue;
            }
            if let Ok(SemiSpaceIndex(k)) = classify_semispace(m_i, m_j.pose.center) {
                let candidate = (d, m_j.id);
                if candidate < best_module[k] {
                    best_module[k] = candidate;
                    entries[k].module = Some(j);
                }
            }
            if let Ok(d_star) = contact_distance(&placed[j], &placed[i]) {
                if d < d_star - EPS {
                    overlap_modules[i].push(j);
                }
            }
        }

        let range = options.edge_range_factor * m_i.shape.circumradius();
        for (e, edge_ref) in edge_refs.iter().enumerate() {
            if edge_ref.segment.distance_to_point(m_i.pose.center) > range {
                continue;
            }
            let mid = edge_ref.segment.midpoint();
            let d = m_i.pose.center.distance(mid);
            if d < EPS {
                continue;
            }
            if let Ok(SemiSpaceIndex(k)) = classify_semispace(m_i, mid) {
                let candidate = (d, e);
                if candidate < best_edge[k] {
                    best_edge[k] = candidate;
                    entries[k].edge = Some(e);
                }
            }
        }

        for (parent, edge) in placement.polygon.edges().enumerate() {
            if placed[i].interior_intersects_segment(&edge) {
                overlap_edges[i].push(parent);
            }
        }

        sectors[i] = entries;
    }

    let edge_nearest_module = edge_refs
        .iter()
        .map(|edge_ref| {
            let mid = edge_ref.segment.midpoint();
            modules
                .iter()
                .enumerate()
                .map(|(idx, m)| (mid.distance(m.pose.center), m.id, idx))
                .min_by(|a, b| (a.0, a.1).partial_cmp(&(b.0, b.1)).unwrap())
                .map(|(_, _, idx)| idx)
        })
        .collect();

    NeighborGraph {
        sectors,
        edge_refs,
        edge_nearest_module,
        overlap_modules,
        overlap_edges,
        ids: modules.iter().map(|m| m.id).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn big_square(half: f64) -> SimplePolygon {
        SimplePolygon::new(vec![
            Point2::new(-half, -half),
            Point2::new(half, -half),
            Point2::new(half, half),
            Point2::new(-half, half),
        ])
        .unwrap()
    }

    fn circle_module(id: usize, x: f64, y: f64, r: f64) -> Module {
        Module::new(id, ModuleShape::circle(r).unwrap(), Pose::new(Point2::new(x, y), 0.0))
    }

    fn triangle_module(id: usize, x: f64, y: f64, side: f64, theta: f64) -> Module {
        Module::new(id, ModuleShape::triangle(side).unwrap(), Pose::new(Point2::new(x, y), theta))
    }

    /// Two triangles joined exactly at side-1 of `a`: faces aligned,
    /// connectors matched.
    fn kissing_pair(side: f64) -> (Module, Module) {
        let a = triangle_module(0, 0.0, 0.0, side, 0.0);
        let rho = a.shape.inradius();
        let dir = Vec2::from_bearing(FRAC_PI_3 / 2.0); // side-1 normal at 30 degrees
        let b_center = a.pose.center + dir * (2.0 * rho);
        let b = Module::new(
            1,
            a.shape,
            Pose::new(b_center, FRAC_PI_3),
        );
        (a, b)
    }

    #[test]
    fn upper_bound_examples() {
        let shape = ModuleShape::triangle(1.0).unwrap();
        let area = shape.area();
        // scale a unit square to the requested area ratios
        let poly = |ratio: f64| {
            let s = (ratio * area).sqrt();
            SimplePolygon::new(vec![
                Point2::new(0.0, 0.0),
                Point2::new(s, 0.0),
                Point2::new(s, s),
                Point2::new(0.0, s),
            ])
            .unwrap()
        };
        assert_eq!(upper_bound(&poly(3.2), &shape), 3);
        assert_eq!(upper_bound(&poly(1.0), &shape), 1);
        assert_eq!(upper_bound(&poly(0.43), &shape), 0);
    }

    #[test]
    fn classify_circle_sectors() {
        let m = circle_module(0, 0.0, 0.0, 1.0);
        let bearing = |deg: f64| {
            let a = deg.to_radians();
            Point2::new(10.0 * a.cos(), 10.0 * a.sin())
        };
        assert_eq!(classify_semispace(&m, bearing(30.0)).unwrap().0, 0);
        assert_eq!(classify_semispace(&m, bearing(359.0)).unwrap().0, 5);
        // exact boundary at 60 degrees goes to the lower index
        assert_eq!(classify_semispace(&m, Point2::new(0.5, 0.5 * 3f64.sqrt())).unwrap().0, 0);
        assert!(classify_semispace(&m, Point2::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn classify_triangle_sectors_follow_the_frame() {
        let m = triangle_module(0, 0.0, 0.0, 1.0, 0.0);
        // due along side-0 outward normal (straight down)
        assert_eq!(classify_semispace(&m, Point2::new(0.0, -5.0)).unwrap().0, 0);
        // due along side-1 outward normal (30 degrees)
        let p = Point2::new(5.0 * (FRAC_PI_3 / 2.0).cos(), 5.0 * (FRAC_PI_3 / 2.0).sin());
        assert_eq!(classify_semispace(&m, p).unwrap().0, 1);
        // rotating the module rotates the sectors
        let m2 = triangle_module(0, 0.0, 0.0, 1.0, PI);
        assert_eq!(classify_semispace(&m2, Point2::new(0.0, 5.0)).unwrap().0, 0);
    }

    #[test]
    fn neighbor_graph_collinear_shadowing() {
        let polygon = big_square(100.0);
        let a = circle_module(0, 0.0, 0.0, 1.0);
        let b = circle_module(1, 3.0, 0.0, 1.0);
        let c = circle_module(2, 6.0, 0.0, 1.0);
        let placement = Placement::new(polygon, vec![a, b, c]).unwrap();
        let graph = build_neighbor_graph(&placement, &GraphOptions::default());
        // B names both A and C; A names only B (C shadowed by distance)
        assert!(graph.has_module_neighbor(1, 0));
        assert!(graph.has_module_neighbor(1, 2));
        assert!(graph.has_module_neighbor(0, 1));
        assert!(!graph.has_module_neighbor(0, 2));
        // all far apart: no overlaps
        assert!(graph.overlap_modules(0).is_empty());
    }

    #[test]
    fn neighbor_graph_one_way_relation() {
        // B alone in A's sector 0; in B's sector toward A a third module is
        // closer, so B is a neighbour of A but A is not a neighbour of B.
        let polygon = big_square(100.0);
        let a = circle_module(0, 0.0, 0.0, 0.2);
        let b = circle_module(1, 4.0, 0.0, 0.2);
        let c = circle_module(2, 1.0, 1.9, 0.2);
        let placement = Placement::new(polygon, vec![a, b, c]).unwrap();
        let graph = build_neighbor_graph(&placement, &GraphOptions::default());
        assert!(graph.has_module_neighbor(0, 1), "B should be A's neighbour");
        assert!(!graph.has_module_neighbor(1, 0), "A should be shadowed for B");
    }

    #[test]
    fn isolated_module_has_empty_sectors() {
        let polygon = big_square(100.0);
        let placement =
            Placement::new(polygon, vec![circle_module(0, 0.0, 0.0, 1.0)]).unwrap();
        let graph = build_neighbor_graph(&placement, &GraphOptions::default());
        assert!(graph.sectors(0).iter().all(|s| s.module.is_none() && s.edge.is_none()));
        assert_eq!(graph.neighbor_count(0), 0);
    }

    #[test]
    fn normalized_distance_circles() {
        let a = circle_module(0, 0.0, 0.0, 1.0);
        let at = |d: f64| circle_module(1, d, 0.0, 1.0);
        assert_relative_eq!(normalized_distance(&a, &at(2.0)).unwrap(), 0.0, epsilon = 1e-12);
        assert_relative_eq!(normalized_distance(&a, &at(4.0)).unwrap(), 3.0, epsilon = 1e-12);
        assert_relative_eq!(normalized_distance(&a, &at(1.0)).unwrap(), -0.75, epsilon = 1e-12);
        assert!(normalized_distance(&a, &at(0.0)).is_err());
    }

    #[test]
    fn normalized_distance_is_scale_invariant() {
        for lambda in [0.5, 2.0, 17.0] {
            let a = triangle_module(0, 0.0, 0.0, 1.0, 0.3);
            let b = triangle_module(1, 0.9, 0.4, 1.0, 1.1);
            let sa = triangle_module(0, 0.0, 0.0, lambda, 0.3);
            let sb = triangle_module(1, 0.9 * lambda, 0.4 * lambda, lambda, 1.1);
            assert_relative_eq!(
                normalized_distance(&a, &b).unwrap(),
                normalized_distance(&sa, &sb).unwrap(),
                epsilon = 1e-9
            );
        }
    }

    #[test]
    fn normalized_distance_to_edge_cases() {
        let edge = Segment::new(Point2::new(-10.0, 0.0), Point2::new(10.0, 0.0));
        let at = |d: f64| circle_module(0, 0.0, d, 1.0);
        assert_relative_eq!(
            normalized_distance_to_edge(&at(1.0), &edge).unwrap(),
            0.0,
            epsilon = 1e-12
        );
        assert_relative_eq!(
            normalized_distance_to_edge(&at(2.0), &edge).unwrap(),
            3.0,
            epsilon = 1e-12
        );
        // triangle flat-facing the edge, overlapping half-way
        let t = triangle_module(0, 0.0, 0.1443, 1.0, 0.0);
        let expected = (0.1443 / (1.0 / (2.0 * 3f64.sqrt()))).powi(2) - 1.0;
        let got = normalized_distance_to_edge(&t, &edge).unwrap();
        assert_relative_eq!(got, expected, epsilon = 1e-12);
        assert_relative_eq!(got, -0.75, epsilon = 1e-3);
        assert!(normalized_distance_to_edge(&at(0.0), &edge).is_err());
    }

    #[test]
    fn angular_difference_kissing_pair_is_zero() {
        let (a, b) = kissing_pair(1.0);
        assert_relative_eq!(angular_difference_unchecked(&a, &b).unwrap(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn angular_difference_detects_and_corrects_misalignment() {
        let (a, mut b) = kissing_pair(1.0);
        b.pose = Pose::new(b.pose.center, b.pose.theta + 0.1);
        let delta = angular_difference_unchecked(&a, &b).unwrap();
        assert_relative_eq!(delta.abs(), 0.1, epsilon = 1e-12);
        // applying +delta/2 to a and -delta/2 to b realigns the faces
        let a2 = Module::new(0, a.shape, Pose::new(a.pose.center, a.pose.theta + delta / 2.0));
        let b2 = Module::new(1, b.shape, Pose::new(b.pose.center, b.pose.theta - delta / 2.0));
        assert_relative_eq!(angular_difference_unchecked(&a2, &b2).unwrap(), 0.0, epsilon = 1e-9);
    }

    #[test]
    fn angular_difference_respects_triangle_symmetry() {
        let (a, mut b) = kissing_pair(1.0);
        b.pose = Pose::new(b.pose.center, b.pose.theta + 2.0 * FRAC_PI_3);
        assert_relative_eq!(angular_difference_unchecked(&a, &b).unwrap(), 0.0, epsilon = 1e-12);
        // antisymmetry up to the sign convention
        let mut b2 = b.clone();
        b2.pose = Pose::new(b2.pose.center, b2.pose.theta + 0.07);
        let dij = angular_difference_unchecked(&a, &b2).unwrap();
        let dji = angular_difference_unchecked(&b2, &a).unwrap();
        assert_relative_eq!(dij, -dji, epsilon = 1e-12);
    }

    #[test]
    fn angular_difference_requires_mutual_neighbors() {
        let polygon = big_square(100.0);
        let (a, b) = kissing_pair(1.0);
        let lonely = triangle_module(2, 50.0, 50.0, 1.0, 0.0);
        let placement = Placement::new(polygon, vec![a.clone(), b, lonely.clone()]).unwrap();
        let graph = build_neighbor_graph(&placement, &GraphOptions::default());
        assert!(angular_difference(&placement.modules[0], &placement.modules[1], &graph).is_ok());
        assert!(matches!(
            angular_difference(&a, &lonely, &graph),
            Err(Error::NotMutualNeighbours)
        ));
    }

    #[test]
    fn translation_offset_matched_connectors() {
        let (a, b) = kissing_pair(1.0);
        let off = translation_offset_unchecked(&a, &b).unwrap();
        assert!(off.norm() < 1e-12);
    }

    #[test]
    fn translation_offset_measures_half_the_slide() {
        let (a, mut b) = kissing_pair(1.0);
        let sides = triangle_sides(&a).unwrap();
        let slide_dir = sides[1].direction;
        b.pose = Pose::new(b.pose.center + slide_dir * 0.4, b.pose.theta);
        let off = translation_offset_unchecked(&a, &b).unwrap();
        assert_relative_eq!(off.norm(), 0.2, epsilon = 1e-12);
        // the two halves add up to the full mismatch along the shared side
        let off_ji = translation_offset_unchecked(&b, &a).unwrap();
        assert_relative_eq!(
            off.dot(slide_dir) - off_ji.dot(slide_dir),
            0.4,
            epsilon = 1e-12
        );
    }

    #[test]
    fn translation_offset_rotated_frame() {
        // a pair whose shared side runs at 60 degrees to the x axis:
        // slide 0.4 projects to components (0.1, 0.17320)
        let (a, mut b) = kissing_pair(1.0);
        let rot = FRAC_PI_3 - triangle_sides(&a).unwrap()[1].direction.bearing();
        let a2 = Module::new(
            0,
            a.shape,
            Pose::new(a.pose.center.lerp(a.pose.center, 0.0), a.pose.theta + rot),
        );
        let b_center = Point2::new(0.0, 0.0)
            + (b.pose.center - Point2::new(0.0, 0.0)).rotated(rot);
        b.pose = Pose::new(b_center, b.pose.theta + rot);
        let slide_dir = triangle_sides(&a2).unwrap()[1].direction;
        assert_relative_eq!(slide_dir.bearing(), FRAC_PI_3, epsilon = 1e-12);
        let b_slid = Module::new(1, b.shape, Pose::new(b.pose.center + slide_dir * 0.4, b.pose.theta));
        let off = translation_offset_unchecked(&a2, &b_slid).unwrap();
        assert_relative_eq!(off.x, 0.1, epsilon = 1e-9);
        assert_relative_eq!(off.y, 0.17320, epsilon = 1e-4);
        assert_relative_eq!(off.norm(), 0.2, epsilon = 1e-12);
    }

    #[test]
    fn duplicate_ids_rejected() {
        let polygon = big_square(10.0);
        let a = circle_module(0, 0.0, 0.0, 1.0);
        let b = circle_module(0, 3.0, 0.0, 1.0);
        assert!(Placement::new(polygon, vec![a, b]).is_err());
    }

    #[test]
    fn sector_assignment_is_exclusive_and_argmin() {
        // every neighbour candidate sits in exactly one sector and each
        // selected neighbour is the strict argmin in its sector
        let polygon = big_square(100.0);
        let mut modules = vec![circle_module(0, 0.0, 0.0, 0.5)];
        let coords = [
            (2.0, 0.3),
            (1.5, 1.8),
            (-1.0, 2.0),
            (-2.2, 0.1),
            (-1.2, -1.4),
            (1.1, -1.9),
            (3.5, 0.2),
        ];
        for (i, (x, y)) in coords.iter().enumerate() {
            modules.push(circle_module(i + 1, *x, *y, 0.5));
        }
        let placement = Placement::new(polygon, modules).unwrap();
        let graph = build_neighbor_graph(&placement, &GraphOptions::default());
        let m0 = &placement.modules[0];
        for (k, entry) in graph.sectors(0).iter().enumerate() {
            if let Some(sel) = entry.module {
                let sel_d = m0.pose.center.distance(placement.modules[sel].pose.center);
                for (j, mj) in placement.modules.iter().enumerate().skip(1) {
                    if j == sel {
                        continue;
                    }
                    let SemiSpaceIndex(kj) = classify_semispace(m0, mj.pose.center).unwrap();
                    if kj == k {
                        assert!(m0.pose.center.distance(mj.pose.center) > sel_d);
                    }
                }
            }
        }
    }
}
