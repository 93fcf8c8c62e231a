//! SVG rendering of placements: polygon outline, filled modules,
//! connector marks and flagged overlap regions.

use crate::error::Error;
use crate::geometry::{intersection_area, Point2, UNION_CIRCLE_SEGMENTS};
use crate::io::write_atomic;
use crate::model::{triangle_sides, Placement};
use std::fmt::Write as _;
use std::path::Path;

fn path_data(points: &[Point2]) -> String {
    let mut d = String::new();
    for (i, p) in points.iter().enumerate() {
        let c = if i == 0 { 'M' } else { 'L' };
        let _ = write!(d, "{}{:.6} {:.6} ", c, p.x, -p.y);
    }
    d.push('Z');
    d
}

/// Renders a placement as an SVG document. Elements are emitted in a
/// deterministic order: outline, modules by id, connector marks,
/// protrusion and pairwise-overlap flags.
pub fn render_svg_string(placement: &Placement) -> String {
    use geo::{Area, BooleanOps, MultiPolygon};

    let polygon = &placement.polygon;
    let (min, max) = polygon.bounding_box();
    let margin = 0.05 * (max.x - min.x).max(max.y - min.y).max(1.0);
    let view = format!(
        "{:.6} {:.6} {:.6} {:.6}",
        min.x - margin,
        -(max.y + margin),
        (max.x - min.x) + 2.0 * margin,
        (max.y - min.y) + 2.0 * margin
    );

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{view}\">"
    );
    let _ = writeln!(
        svg,
        "<style>.boundary{{fill:none;stroke:#333;stroke-width:0.02}} \
         .module{{fill:#7ec8e3;fill-opacity:0.65;stroke:#1b4965;stroke-width:0.012}} \
         .connector{{fill:#1b4965}} \
         .overlap{{fill:#d62828;fill-opacity:0.8;stroke:none}}</style>"
    );
    let _ = writeln!(
        svg,
        "<path class=\"boundary\" d=\"{}\"/>",
        path_data(polygon.vertices())
    );

    let mut modules: Vec<_> = placement.modules.iter().collect();
    modules.sort_by_key(|m| m.id);

    for module in &modules {
        match module.placed() {
            crate::geometry::PlacedConvex::Circle { center, radius } => {
                let _ = writeln!(
                    svg,
                    "<circle class=\"module\" cx=\"{:.6}\" cy=\"{:.6}\" r=\"{:.6}\"/>",
                    center.x, -center.y, radius
                );
            }
            crate::geometry::PlacedConvex::Polygon { vertices, .. } => {
                let _ = writeln!(svg, "<path class=\"module\" d=\"{}\"/>", path_data(&vertices));
            }
        }
    }

    let mark = 0.03
        * modules
            .iter()
            .map(|m| m.shape.size())
            .fold(1.0f64, f64::min);
    for module in &modules {
        if let Ok(sides) = triangle_sides(module) {
            for side in sides {
                let _ = writeln!(
                    svg,
                    "<circle class=\"connector\" cx=\"{:.6}\" cy=\"{:.6}\" r=\"{:.6}\"/>",
                    side.midpoint.x, -side.midpoint.y, mark
                );
            }
        }
    }

    // overlap flags: protrusion beyond the border, then pairwise overlaps
    let to_geo = |verts: &[Point2]| -> MultiPolygon {
        MultiPolygon::new(vec![geo::Polygon::new(
            geo::LineString::from(verts.iter().map(|p| (p.x, p.y)).collect::<Vec<_>>()),
            vec![],
        )])
    };
    let clip = to_geo(polygon.vertices());
    let emit_region = |svg: &mut String, region: &MultiPolygon| {
        for poly in region.iter() {
            let pts: Vec<Point2> = poly
                .exterior()
                .coords()
                .map(|c| Point2::new(c.x, c.y))
                .collect();
            if pts.len() >= 3 {
                let _ = writeln!(svg, "<path class=\"overlap\" d=\"{}\"/>", path_data(&pts));
            }
        }
    };
    for module in &modules {
        let own = to_geo(&module.placed().to_polygon_vertices(UNION_CIRCLE_SEGMENTS));
        let outside = own.difference(&clip);
        if outside.unsigned_area() > 1e-9 {
            emit_region(&mut svg, &outside);
        }
    }
    for i in 0..modules.len() {
        for j in i + 1..modules.len() {
            let a = modules[i].placed();
            let b = modules[j].placed();
            if intersection_area(&a, &b) > 1e-9 {
                let ga = to_geo(&a.to_polygon_vertices(UNION_CIRCLE_SEGMENTS));
                let gb = to_geo(&b.to_polygon_vertices(UNION_CIRCLE_SEGMENTS));
                emit_region(&mut svg, &ga.intersection(&gb));
            }
        }
    }

    svg.push_str("</svg>\n");
    svg
}

/// Writes the SVG for a placement to `path` atomically.
pub fn render_svg(placement: &Placement, path: &Path) -> Result<(), Error> {
    write_atomic(path, render_svg_string(placement).as_bytes())
}
