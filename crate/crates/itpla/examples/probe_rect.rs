use itpla::corpus::bundled;
use itpla::model::ModuleShape;
use itpla::solver::{itpla, SolverConfig, TraceEvent};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let n: i32 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let dt: f64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(0.01);
    let taus: f64 = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(1e-6);
    let which: usize = args.get(4).and_then(|s| s.parse().ok()).unwrap_or(1);
    let entry = &bundled()[which];
    let shape = ModuleShape::triangle(1.0).unwrap();
    let area = shape.area();
    let mut config = SolverConfig::defaults_for(&shape);
    config.gains.weight_exponent = n;
    config.dt = dt;
    config.tau_s = taus;
    config.seed = 0;
    let result = itpla(&entry.polygon, &shape, &config).unwrap();
    println!("{} n={} dt={} taus={:.0e}: final {} modules", entry.name, n, dt, taus,
        result.placement.modules.len());
    // phase summaries: between removals
    let mut phase_start = 0usize;
    for (i, row) in result.trace.rows.iter().enumerate() {
        match row.event {
            TraceEvent::Removal | TraceEvent::Accepted => {
                let phase = &result.trace.rows[phase_start..=i];
                let admitted = phase.iter().filter(|r| r.event == TraceEvent::Admitted).count();
                let capped = phase.iter().any(|r| r.event == TraceEvent::CapReached);
                println!(
                    "  phase at count {:2}: {:6} iters, admitted {}, capped {}, end O {:.4}A M {:.3e} [{}]",
                    phase.first().unwrap().module_count,
                    phase.len(),
                    admitted,
                    capped,
                    row.total_overlap / area,
                    row.total_misplacement,
                    row.event.label()
                );
                phase_start = i + 1;
            }
            _ => {}
        }
    }
}
