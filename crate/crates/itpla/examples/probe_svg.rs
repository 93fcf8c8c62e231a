use itpla::corpus::bundled;
use itpla::model::ModuleShape;
use itpla::render::render_svg;
use itpla::solver::{itpla, SolverConfig};
use std::path::PathBuf;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let which: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let seed: u64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(0);
    let entry = &bundled()[which];
    let shape = ModuleShape::triangle(1.0).unwrap();
    let mut config = SolverConfig::defaults_for(&shape);
    config.gains.weight_exponent = 8;
    config.tau_s = 1e-6;
    config.max_iterations = 8000;
    config.seed = seed;
    let result = itpla(&entry.polygon, &shape, &config).unwrap();
    let out = PathBuf::from("/tmp/probe_svg");
    std::fs::create_dir_all(&out).unwrap();
    render_svg(&result.placement, &out.join(format!("{}_final.svg", entry.name))).unwrap();
    for (iter, snap) in &result.snapshots {
        render_svg(snap, &out.join(format!("{}_rm_{iter:06}.svg", entry.name))).unwrap();
    }
    println!("final {} modules; snapshots {}", result.placement.modules.len(), result.snapshots.len());
}
