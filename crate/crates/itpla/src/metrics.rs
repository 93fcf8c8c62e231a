//! Placement quality metrics: total overlap area, total misplacement,
//! per-module overlap and acceptability.

use crate::error::Error;
use crate::geometry::{union_area_clipped, PlacedConvex, Point2, UNION_CIRCLE_SEGMENTS};
use crate::model::{translation_offset_unchecked, NeighborGraph, Placement};
use std::collections::BTreeMap;

/// Snapshot of all quality numbers for one placement.
#[derive(Debug, Clone, PartialEq)]
pub struct PlacementMetrics {
    pub total_overlap: f64,
    pub total_misplacement: f64,
    pub module_count: usize,
    pub per_module_overlap: BTreeMap<usize, f64>,
    /// Fraction of the polygon covered by modules: `(sum A(m) - O) / A(P)`.
    pub coverage_ratio: f64,
}

impl PlacementMetrics {
    pub fn compute(placement: &Placement, graph: &NeighborGraph) -> Self {
        let sum_area: f64 = placement.modules.iter().map(|m| m.shape.area()).sum();
        let total_overlap = total_overlap(placement);
        let per_module_overlap = placement
            .modules
            .iter()
            .enumerate()
            .map(|(i, m)| (m.id, per_module_overlap_by_index(placement, i)))
            .collect();
        Self {
            total_overlap,
            total_misplacement: total_misplacement(placement, graph),
            module_count: placement.modules.len(),
            per_module_overlap,
            coverage_ratio: (sum_area - total_overlap) / placement.polygon.area(),
        }
    }
}

/// Total overlap area: the amount of module area that is either shared
/// between modules or protruding beyond the polygon.
pub fn total_overlap(placement: &Placement) -> f64 {
    if placement.modules.is_empty() {
        return 0.0;
    }
    let shapes: Vec<PlacedConvex> = placement.modules.iter().map(|m| m.placed()).collect();
    let sum_area: f64 = placement.modules.iter().map(|m| m.shape.area()).sum();
    (sum_area - union_area_clipped(&shapes, &placement.polygon)).max(0.0)
}

/// The part of one module's area that is outside the polygon or shared
/// with any other module.
pub fn per_module_overlap(placement: &Placement, id: usize) -> Result<f64, Error> {
    let index = placement.module_index(id).ok_or(Error::UnknownModule(id))?;
    Ok(per_module_overlap_by_index(placement, index))
}

fn per_module_overlap_by_index(placement: &Placement, index: usize) -> f64 {
    use geo::{Area, BooleanOps, MultiPolygon};

    let to_geo = |verts: &[Point2]| -> MultiPolygon {
        MultiPolygon::new(vec![geo::Polygon::new(
            geo::LineString::from(verts.iter().map(|p| (p.x, p.y)).collect::<Vec<_>>()),
            vec![],
        )])
    };

    let module = &placement.modules[index];
    let own = to_geo(&module.placed().to_polygon_vertices(UNION_CIRCLE_SEGMENTS));
    let clip = to_geo(placement.polygon.vertices());
    // exclusive interior share: inside the polygon and in no other module
    let mut exclusive = own.intersection(&clip);
    for (j, other) in placement.modules.iter().enumerate() {
        if j == index {
            continue;
        }
        let quick = module.pose.center.distance(other.pose.center)
            > module.shape.circumradius() + other.shape.circumradius();
        if quick {
            continue;
        }
        let other_geo = to_geo(&other.placed().to_polygon_vertices(UNION_CIRCLE_SEGMENTS));
        exclusive = exclusive.difference(&other_geo);
    }
    (module.shape.area() - exclusive.unsigned_area()).max(0.0)
}

/// Half the sum of connector offset lengths over ordered mutual-neighbour
/// triangle pairs; zero for circle placements.
pub fn total_misplacement(placement: &Placement, graph: &NeighborGraph) -> f64 {
    let n = placement.modules.len();
    let mut sum = 0.0;
    for i in 0..n {
        let m_i = &placement.modules[i];
        if !m_i.shape.is_triangle() {
            continue;
        }
        for entry in graph.sectors(i) {
            let Some(j) = entry.module else { continue };
            let m_j = &placement.modules[j];
            if !m_j.shape.is_triangle() || !graph.mutual(i, j) {
                continue;
            }
            if let Ok(offset) = translation_offset_unchecked(m_i, m_j) {
                sum += offset.norm();
            }
        }
    }
    0.5 * sum
}

/// Acceptability thresholds of a placement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AcceptanceThresholds {
    pub tau_o: f64,
    pub tau_m: f64,
}

/// True when both threshold inequalities hold (inclusive).
pub fn is_acceptable(
    placement: &Placement,
    graph: &NeighborGraph,
    thresholds: &AcceptanceThresholds,
) -> bool {
    total_overlap(placement) <= thresholds.tau_o
        && total_misplacement(placement, graph) <= thresholds.tau_m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::SimplePolygon;
    use crate::model::{build_neighbor_graph, GraphOptions, Module, ModuleShape, Pose};
    use approx::assert_relative_eq;
    use std::f64::consts::FRAC_PI_3;

    fn big_square(half: f64) -> SimplePolygon {
        SimplePolygon::new(vec![
            Point2::new(-half, -half),
            Point2::new(half, -half),
            Point2::new(half, half),
            Point2::new(-half, half),
        ])
        .unwrap()
    }

    fn triangle_module(id: usize, x: f64, y: f64, theta: f64) -> Module {
        Module::new(id, ModuleShape::triangle(1.0).unwrap(), Pose::new(Point2::new(x, y), theta))
    }

    #[test]
    fn disjoint_interior_modules_have_zero_overlap() {
        let placement = Placement::new(
            big_square(50.0),
            vec![triangle_module(0, 0.0, 0.0, 0.0), triangle_module(1, 5.0, 0.0, 0.0)],
        )
        .unwrap();
        assert_relative_eq!(total_overlap(&placement), 0.0, epsilon = 1e-9);
        assert_relative_eq!(per_module_overlap(&placement, 0).unwrap(), 0.0, epsilon = 1e-9);
    }

    #[test]
    fn coincident_modules_overlap_by_one_area() {
        let placement = Placement::new(
            big_square(50.0),
            vec![triangle_module(0, 0.0, 0.0, 0.2), triangle_module(1, 0.0, 0.0, 0.2)],
        )
        .unwrap();
        let area = placement.modules[0].shape.area();
        assert_relative_eq!(total_overlap(&placement), area, max_relative = 1e-6);
        // each module is fully shared
        assert_relative_eq!(per_module_overlap(&placement, 0).unwrap(), area, max_relative = 1e-6);
        assert_relative_eq!(per_module_overlap(&placement, 1).unwrap(), area, max_relative = 1e-6);
    }

    #[test]
    fn protrusion_counts_as_overlap() {
        // square polygon [0,10]^2 with a triangle centred on the bottom edge
        let polygon = SimplePolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(10.0, 0.0),
            Point2::new(10.0, 10.0),
            Point2::new(0.0, 10.0),
        ])
        .unwrap();
        // flat side up, apex down through the border: half in, half out by
        // construction at the right height
        let shape = ModuleShape::triangle(1.0).unwrap();
        let placement = Placement::new(
            polygon,
            vec![Module::new(0, shape, Pose::new(Point2::new(5.0, 0.0), 0.0))],
        )
        .unwrap();
        // the triangle straddles the border; overlap equals the part below y=0
        let below = {
            // triangle with flat bottom at -inradius: the strip below y=0 is a
            // trapezoid from y=-rho to 0
            let rho = shape.inradius();
            let r = shape.circumradius();
            // width at height y (measured from bottom): linear from 1 at y=-rho
            // to 0 at apex y=r; integrate width over [-rho, 0]
            let h = rho + r;
            let width_at = |y: f64| (r - y) / h;
            // Simpson's rule is exact for the linear integrand
            rho * (width_at(-rho) + 4.0 * width_at(-rho / 2.0) + width_at(0.0)) / 6.0
        };
        assert_relative_eq!(total_overlap(&placement), below, epsilon = 1e-6);
        assert_relative_eq!(
            per_module_overlap(&placement, 0).unwrap(),
            below,
            epsilon = 1e-6
        );
    }

    #[test]
    fn misplacement_counts_half_of_ordered_pairs() {
        let shape = ModuleShape::triangle(1.0).unwrap();
        let a = Module::new(0, shape, Pose::new(Point2::new(0.0, 0.0), 0.0));
        let dir = crate::geometry::Vec2::from_bearing(FRAC_PI_3 / 2.0);
        let slide = crate::model::triangle_sides(&a).unwrap()[1].direction;
        let b = Module::new(
            1,
            shape,
            Pose::new(Point2::new(0.0, 0.0) + dir * (2.0 * shape.inradius()) + slide * 0.4, FRAC_PI_3),
        );
        let placement = Placement::new(big_square(50.0), vec![a, b]).unwrap();
        let graph = build_neighbor_graph(&placement, &GraphOptions::default());
        assert_relative_eq!(total_misplacement(&placement, &graph), 0.2, epsilon = 1e-9);
    }

    #[test]
    fn connected_patch_has_zero_misplacement() {
        let shape = ModuleShape::triangle(1.0).unwrap();
        let a = Module::new(0, shape, Pose::new(Point2::new(0.0, 0.0), 0.0));
        let dir = crate::geometry::Vec2::from_bearing(FRAC_PI_3 / 2.0);
        let b = Module::new(
            1,
            shape,
            Pose::new(Point2::new(0.0, 0.0) + dir * (2.0 * shape.inradius()), FRAC_PI_3),
        );
        let placement = Placement::new(big_square(50.0), vec![a, b]).unwrap();
        let graph = build_neighbor_graph(&placement, &GraphOptions::default());
        assert_relative_eq!(total_misplacement(&placement, &graph), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn circle_placements_have_zero_misplacement() {
        let shape = ModuleShape::circle(1.0).unwrap();
        let placement = Placement::new(
            big_square(50.0),
            vec![
                Module::new(0, shape, Pose::new(Point2::new(0.0, 0.0), 0.0)),
                Module::new(1, shape, Pose::new(Point2::new(1.5, 0.0), 0.0)),
            ],
        )
        .unwrap();
        let graph = build_neighbor_graph(&placement, &GraphOptions::default());
        assert_eq!(total_misplacement(&placement, &graph), 0.0);
    }

    #[test]
    fn acceptability_is_inclusive() {
        let placement = Placement::new(
            big_square(50.0),
            vec![triangle_module(0, 0.0, 0.0, 0.0)],
        )
        .unwrap();
        let graph = build_neighbor_graph(&placement, &GraphOptions::default());
        let overlap = total_overlap(&placement);
        assert!(is_acceptable(
            &placement,
            &graph,
            &AcceptanceThresholds { tau_o: overlap, tau_m: 0.0 }
        ));
        assert!(is_acceptable(
            &placement,
            &graph,
            &AcceptanceThresholds { tau_o: 1.0, tau_m: 1.0 }
        ));
    }

    #[test]
    fn double_count_identity_for_a_pair() {
        // for two overlapping interior modules, the per-module overlaps sum
        // to the total overlap plus the pairwise intersection
        let a = triangle_module(0, 0.0, 0.0, 0.0);
        let b = triangle_module(1, 0.4, 0.0, 0.0);
        let placement = Placement::new(big_square(50.0), vec![a.clone(), b.clone()]).unwrap();
        let pairwise = crate::geometry::intersection_area(&a.placed(), &b.placed());
        assert!(pairwise > 0.0);
        let sum: f64 = [0, 1]
            .iter()
            .map(|&id| per_module_overlap(&placement, id).unwrap())
            .sum();
        assert_relative_eq!(
            sum,
            total_overlap(&placement) + pairwise,
            epsilon = 1e-6
        );
    }

    #[test]
    fn removing_a_module_never_increases_total_overlap() {
        let placement = Placement::new(
            big_square(50.0),
            vec![
                triangle_module(0, 0.0, 0.0, 0.3),
                triangle_module(1, 0.3, 0.1, 1.0),
                triangle_module(2, -0.2, 0.2, 2.0),
            ],
        )
        .unwrap();
        let full = total_overlap(&placement);
        for drop in 0..3 {
            let mut reduced = placement.clone();
            reduced.modules.remove(drop);
            assert!(total_overlap(&reduced) <= full + 1e-9);
        }
    }

    #[test]
    fn unknown_id_is_an_error() {
        let placement =
            Placement::new(big_square(50.0), vec![triangle_module(0, 0.0, 0.0, 0.0)]).unwrap();
        assert!(per_module_overlap(&placement, 9).is_err());
    }
}
