use itpla::baseline::grid_sweep;
use itpla::corpus::bundled;
use itpla::model::{upper_bound, ModuleShape};
use itpla::solver::{multi_start, SolverConfig};
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let n: i32 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let cap: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(8000);
    let chi_pd: f64 = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(1.0);
    let chi_t: f64 = args.get(4).and_then(|s| s.parse().ok()).unwrap_or(1.0);
    let dt: f64 = args.get(5).and_then(|s| s.parse().ok()).unwrap_or(0.01);
    let shape = ModuleShape::triangle(1.0).unwrap();
    let mut config = SolverConfig::defaults_for(&shape);
    config.gains.weight_exponent = n;
    config.tau_s = 1e-6;
    config.starts = 10;
    config.max_iterations = cap;
    config.gains.chi_pd = chi_pd;
    config.gains.chi_ptau = chi_pd;
    config.gains.chi_t = chi_t;
    config.dt = dt;
    println!("n={n} cap={cap} chi_pd={chi_pd} chi_t={chi_t} dt={dt}");
    let mut wins = 0;
    for entry in bundled() {
        let bound = upper_bound(&entry.polygon, &shape);
        let t0 = Instant::now();
        let (best, traces) = multi_start(&entry.polygon, &shape, &config).unwrap();
        let t_itpla = t0.elapsed().as_secs_f64();
        let (base, _) = grid_sweep(&entry.polygon, 1.0, 32, 60);
        let counts: Vec<usize> = traces.iter().map(|t| t.rows.last().unwrap().module_count).collect();
        let win = best.placement.modules.len() >= base;
        wins += win as i32;
        println!(
            "  {:10} bound {:2} itpla {:2} {} baseline {:2}  counts {:?}  [{:.1}s]",
            entry.name, bound, best.placement.modules.len(),
            if win { ">=" } else { "< " }, base, counts, t_itpla
        );
    }
    println!("  wins {wins}/5");
}
