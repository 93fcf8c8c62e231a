//! The bundled benchmark polygons, sized for modules of unit side.

use crate::geometry::{Point2, SimplePolygon};

/// One named benchmark polygon.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub polygon: SimplePolygon,
}

/// A regular hexagon of side `s` centred at the origin, oriented so the
/// aligned isometric grid tiles it exactly with six triangles of side `s`.
pub fn regular_hexagon(s: f64) -> SimplePolygon {
    let verts = (0..6)
        .map(|k| {
            let a = std::f64::consts::FRAC_PI_3 * k as f64;
            Point2::new(s * a.cos(), s * a.sin())
        })
        .collect();
    SimplePolygon::new(verts).expect("hexagon is simple")
}

/// The five bundled polygons:
///
/// 1. `hexagon` — exact six-triangle tiling exists;
/// 2. `rectangle` — a 4 x 1 strip;
/// 3. `dumbbell` — two mutually rotated lobes joined by a waist narrower
///    than a module row, so no single grid alignment serves both;
/// 4. `heptagon` — convex but irregular;
/// 5. `lshape` — concave, with a corner that cannot take a full module.
pub fn bundled() -> Vec<CorpusEntry> {
    let hexagon = regular_hexagon(1.0);
    let rectangle = SimplePolygon::new(vec![
        Point2::new(0.0, 0.0),
        Point2::new(4.0, 0.0),
        Point2::new(4.0, 1.0),
        Point2::new(0.0, 1.0),
    ])
    .expect("rectangle is simple");
    // two hexagonal lobes, the right one rotated 30 degrees so no single
    // grid orientation serves both, bridged by a waist too low for a row
    let dumbbell = {
        let s = 1.0f64; // lobe hexagon side
        let h = 0.22f64; // waist half-height
        let cx = 2.6f64; // right lobe center
        let apothem = s * 3f64.sqrt() / 2.0;
        let hexa = |k: u32| std::f64::consts::FRAC_PI_3 * k as f64;
        // waist joints: on the left lobe's lower-right edge, and on the
        // right lobe's (rotated, hence vertical) left edge
        let lx = s - h / 3f64.sqrt();
        let rx = cx - apothem;
        let mut verts = vec![
            Point2::new(lx, -h),
            Point2::new(rx, -h),
        ];
        // right lobe, rotated 30 degrees, CCW from its lower-left corner
        for k in 0..6 {
            let a = -std::f64::consts::FRAC_PI_2 - std::f64::consts::FRAC_PI_3 + hexa(k);
            verts.push(Point2::new(cx + s * a.cos(), s * a.sin()));
        }
        verts.push(Point2::new(rx, h));
        verts.push(Point2::new(lx, h));
        // left lobe, CCW from its upper-right corner
        for k in 1..6 {
            let a = hexa(k);
            verts.push(Point2::new(s * a.cos(), s * a.sin()));
        }
        SimplePolygon::new(verts).expect("dumbbell is simple")
    };
    let heptagon = SimplePolygon::new(vec![
        Point2::new(0.0, 0.0),
        Point2::new(1.3, -0.5),
        Point2::new(2.3, 0.1),
        Point2::new(2.55, 1.2),
        Point2::new(1.7, 2.0),
        Point2::new(0.45, 1.85),
        Point2::new(-0.35, 0.9),
    ])
    .expect("heptagon is simple");
    let lshape = SimplePolygon::new(vec![
        Point2::new(0.0, 0.0),
        Point2::new(2.6, 0.0),
        Point2::new(2.6, 1.1),
        Point2::new(1.1, 1.1),
        Point2::new(1.1, 2.6),
        Point2::new(0.0, 2.6),
    ])
    .expect("lshape is simple");

    vec![
        CorpusEntry { name: "hexagon", polygon: hexagon },
        CorpusEntry { name: "rectangle", polygon: rectangle },
        CorpusEntry { name: "dumbbell", polygon: dumbbell },
        CorpusEntry { name: "heptagon", polygon: heptagon },
        CorpusEntry { name: "lshape", polygon: lshape },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{upper_bound, ModuleShape};
    use approx::assert_relative_eq;

    #[test]
    fn hexagon_area_is_six_triangles() {
        let hex = regular_hexagon(1.0);
        let tri = ModuleShape::triangle(1.0).unwrap();
        assert_relative_eq!(hex.area(), 6.0 * tri.area(), epsilon = 1e-12);
        assert_eq!(upper_bound(&hex, &tri), 6);
    }

    #[test]
    fn corpus_has_five_valid_entries() {
        let corpus = bundled();
        assert_eq!(corpus.len(), 5);
        let tri = ModuleShape::triangle(1.0).unwrap();
        for entry in &corpus {
            assert!(entry.polygon.area() > 0.0);
            let bound = upper_bound(&entry.polygon, &tri);
            assert!(bound >= 4, "{} too small: bound {bound}", entry.name);
            assert!(bound <= 16, "{} too large: bound {bound}", entry.name);
        }
    }

    #[test]
    fn dumbbell_waist_is_narrower_than_a_module_row() {
        // the waist must split placements into two patches
        let tri_height = 3f64.sqrt() / 2.0;
        let waist = 1.35 - 0.55;
        assert!(waist < tri_height);
    }
}
