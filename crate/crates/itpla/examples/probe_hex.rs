use itpla::corpus::regular_hexagon;
use itpla::model::ModuleShape;
use itpla::solver::{itpla, SolverConfig};
use std::time::Instant;

fn main() {
    let hex = regular_hexagon(1.0);
    let shape = ModuleShape::triangle(1.0).unwrap();
    let area = shape.area();
    let variants: Vec<(&str, i32, f64)> = vec![
        ("n=2,taus=1e-5", 2, 1e-5),
        ("n=2,taus=1e-6", 2, 1e-6),
        ("n=8,taus=1e-6", 8, 1e-6),
        ("n=8,taus=1e-7", 8, 1e-7),
        ("n=6,taus=1e-6", 6, 1e-6),
    ];
    for (name, n, taus) in &variants {
        let t0 = Instant::now();
        let mut six = 0;
        let mut best_o = f64::INFINITY;
        let mut best_m = f64::INFINITY;
        for seed in 0..10u64 {
            let mut config = SolverConfig::defaults_for(&shape);
            config.seed = seed;
            config.gains.weight_exponent = *n;
            config.tau_s = *taus;
            let result = itpla(&hex, &shape, &config).unwrap();
            let last = result.trace.rows.last().unwrap();
            if result.placement.modules.len() == 6 {
                six += 1;
                if last.total_overlap < best_o {
                    best_o = last.total_overlap;
                    best_m = last.total_misplacement;
                }
            }
        }
        println!("{name:15} six-module runs {six}/10 best O {:.6} A ({:.2e}), M {:.2e}  [{:.1}s]",
            best_o / area, best_o, best_m, t0.elapsed().as_secs_f64());
    }
}
