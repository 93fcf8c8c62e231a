//! The iterative placement solver: per-step pseudo-force integration,
//! annealed stable-placement generation, and the outer accept-or-remove
//! loop, plus multi-start orchestration.

use crate::error::Error;
use crate::forces::{aggregate, ForceGains};
use crate::geometry::{Point2, SimplePolygon};
use crate::metrics::{is_acceptable, total_misplacement, total_overlap, AcceptanceThresholds};
use crate::model::{
    build_neighbor_graph, upper_bound, wrap_angle, GraphOptions, Module, ModuleShape,
    NeighborGraph, Placement, Pose,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// All solver parameters. Build one with [`SolverConfig::defaults_for`]
/// or resolve a config file via [`crate::io::ConfigFile`].
#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    /// Time quantum converting pseudo-force velocities into displacements.
    pub dt: f64,
    /// Overlap acceptance threshold (area units).
    pub tau_o: f64,
    /// Misplacement acceptance threshold (length units).
    pub tau_m: f64,
    /// Desired number of stable solutions per annealing phase.
    pub tau_e: usize,
    /// Weight of overlap in the annealing energy and the selection score.
    pub alpha_o: f64,
    /// Weight of misplacement in the annealing energy and selection score.
    pub alpha_m: f64,
    /// Approximate-stability displacement threshold (length units per step).
    pub tau_s: f64,
    /// Step cap per annealing phase; reaching it degrades gracefully.
    pub max_iterations: usize,
    /// Base RNG seed.
    pub seed: u64,
    /// Multi-start run count.
    pub starts: usize,
    /// Per-step displacement clamp in units of the module inradius.
    pub max_step_factor: f64,
    /// See [`GraphOptions::subdivide_edges`].
    pub subdivide_edges: bool,
    /// See [`GraphOptions::edge_range_factor`].
    pub edge_range_factor: f64,
    pub gains: ForceGains,
}

impl SolverConfig {
    /// Documented defaults, with the shape-relative thresholds resolved:
    /// `tau_o = 0.02 * A(m)`, `tau_m = 0.05 * size`, `tau_s = 1e-4 * size`.
    pub fn defaults_for(shape: &ModuleShape) -> Self {
        crate::io::ConfigFile::default().resolve(shape).expect("defaults are valid")
    }

    pub fn graph_options(&self) -> GraphOptions {
        GraphOptions {
            subdivide_edges: self.subdivide_edges,
            edge_range_factor: self.edge_range_factor,
        }
    }

    pub fn thresholds(&self) -> AcceptanceThresholds {
        AcceptanceThresholds { tau_o: self.tau_o, tau_m: self.tau_m }
    }

    pub fn validate(&self) -> Result<(), Error> {
        let positive = [
            ("dt", self.dt),
            ("tau_s", self.tau_s),
            ("max_step_factor", self.max_step_factor),
            ("edge_range_factor", self.edge_range_factor),
        ];
        for (name, v) in positive {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidConfig(format!("{name} must be positive")));
            }
        }
        let non_negative = [
            ("tau_o", self.tau_o),
            ("tau_m", self.tau_m),
            ("alpha_o", self.alpha_o),
            ("alpha_m", self.alpha_m),
        ];
        for (name, v) in non_negative {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::InvalidConfig(format!("{name} must be non-negative")));
            }
        }
        if self.tau_e < 1 {
            return Err(Error::InvalidConfig("tau_e must be at least 1".into()));
        }
        if self.starts < 1 {
            return Err(Error::InvalidConfig("starts must be at least 1".into()));
        }
        if self.max_iterations < 1 {
            return Err(Error::InvalidConfig("max_iterations must be at least 1".into()));
        }
        self.gains.validate()
    }
}

/// What happened at one trace row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceEvent {
    None,
    Init,
    Admitted,
    Removal,
    CapReached,
    Accepted,
}

impl TraceEvent {
    pub fn label(&self) -> &'static str {
        match self {
            Self::None => "",
            Self::Init => "init",
            Self::Admitted => "admitted",
            Self::Removal => "removal",
            Self::CapReached => "cap_reached",
            Self::Accepted => "accepted",
        }
    }
}

/// One per-iteration record.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceRow {
    pub iteration: u64,
    pub module_count: usize,
    pub total_overlap: f64,
    pub total_misplacement: f64,
    pub event: TraceEvent,
}

/// Per-iteration records of one solver run.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RunTrace {
    pub seed: u64,
    pub rows: Vec<TraceRow>,
    /// True when the final placement came from a capped annealing phase
    /// rather than a regular admission.
    pub degraded: bool,
}

impl RunTrace {
    fn push(&mut self, row: TraceRow) {
        self.rows.push(row);
    }
}

/// Outcome of one complete run.
#[derive(Debug, Clone)]
pub struct RunResult {
    pub placement: Placement,
    pub trace: RunTrace,
    /// Placements captured right after each module removal.
    pub snapshots: Vec<(u64, Placement)>,
}

/// `count` modules with centers sampled uniformly inside the polygon and
/// orientations uniform in `[0, 2*pi)`. Overlaps are permitted.
pub fn generate_initial_placement(
    polygon: &SimplePolygon,
    shape: &ModuleShape,
    count: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Placement, Error> {
    let (min, max) = polygon.bounding_box();
    let mut modules = Vec::with_capacity(count);
    for id in 0..count {
        let mut attempts = 0;
        let center = loop {
            let p = Point2::new(
                rng.random_range(min.x..=max.x),
                rng.random_range(min.y..=max.y),
            );
            if polygon.contains(p) {
                break p;
            }
            attempts += 1;
            if attempts > 1_000_000 {
                return Err(Error::SamplingFailed);
            }
        };
        let theta = rng.random_range(0.0..std::f64::consts::TAU);
        modules.push(Module::new(id, *shape, Pose::new(center, theta)));
    }
    Placement::new(polygon.clone(), modules)
}

/// One synchronous integration step: builds the neighbour graph on the
/// input snapshot, computes every pseudo-force from it, then applies
/// translation and rotation to every module simultaneously.
pub fn generate_next_placement(placement: &Placement, config: &SolverConfig) -> Placement {
    let graph = build_neighbor_graph(placement, &config.graph_options());
    step_with_graph(placement, &graph, config)
}

fn step_with_graph(
    placement: &Placement,
    graph: &NeighborGraph,
    config: &SolverConfig,
) -> Placement {
    let mut next = placement.clone();
    for (i, module) in next.modules.iter_mut().enumerate() {
        let force = aggregate(i, placement, graph, &config.gains);
        let mut displacement = force.translation * config.dt;
        let max_step = config.max_step_factor * module.shape.inradius();
        let norm = displacement.norm();
        if norm > max_step {
            displacement = displacement * (max_step / norm);
        }
        let rotation = force.rotation * config.dt;
        module.pose = Pose::new(
            module.pose.center + displacement,
            wrap_angle(module.pose.theta + rotation),
        );
    }
    next
}

/// Largest single-module pose change between two snapshots, measured as a
/// length (rotations scaled by the circumradius so they count as arc).
fn max_displacement(before: &Placement, after: &Placement) -> f64 {
    before
        .modules
        .iter()
        .zip(&after.modules)
        .map(|(a, b)| {
            let shift = a.pose.center.distance(b.pose.center);
            let mut dtheta = (b.pose.theta - a.pose.theta).abs();
            if dtheta > std::f64::consts::PI {
                dtheta = std::f64::consts::TAU - dtheta;
            }
            shift.max(dtheta * a.shape.circumradius())
        })
        .fold(0.0, f64::max)
}

/// A candidate admitted by the annealing loop.
#[derive(Debug, Clone)]
pub struct Candidate {
    pub placement: Placement,
    pub overlap: f64,
    pub misplacement: f64,
    pub admission: usize,
}

/// Result of one annealing phase.
#[derive(Debug, Clone)]
pub struct StablePhase {
    pub candidates: Vec<Candidate>,
    /// True when the iteration cap was reached with no admissions and the
    /// single candidate is merely the best state seen.
    pub capped: bool,
}

/// Iterates [`generate_next_placement`], admitting a placement whenever
/// the Metropolis test passes and the last step's maximum per-module
/// displacement is below `tau_s`, until `tau_e` admissions or the
/// iteration cap. On a cap with zero admissions the best-seen placement
/// is returned with the `capped` flag set.
pub fn generate_stable_placements(
    placement: &Placement,
    config: &SolverConfig,
    rng: &mut ChaCha8Rng,
) -> StablePhase {
    let mut trace = RunTrace::default();
    let mut iteration = 0;
    generate_stable_placements_traced(placement, config, rng, &mut trace, &mut iteration)
}

fn generate_stable_placements_traced(
    placement: &Placement,
    config: &SolverConfig,
    rng: &mut ChaCha8Rng,
    trace: &mut RunTrace,
    iteration: &mut u64,
) -> StablePhase {
    let options = config.graph_options();
    let mut current = placement.clone();
    let mut graph = build_neighbor_graph(&current, &options);
    let mut overlap_c = total_overlap(&current);
    let mut misplacement_c = total_misplacement(&current, &graph);

    let score =
        |o: f64, m: f64| -> f64 { config.alpha_o * o + config.alpha_m * m };

    let mut candidates: Vec<Candidate> = Vec::new();
    let mut best = Candidate {
        placement: current.clone(),
        overlap: overlap_c,
        misplacement: misplacement_c,
        admission: 0,
    };

    for _ in 0..config.max_iterations {
        let next = step_with_graph(&current, &graph, config);
        let next_graph = build_neighbor_graph(&next, &options);
        let overlap_n = total_overlap(&next);
        let misplacement_n = total_misplacement(&next, &next_graph);

        let delta_e = config.alpha_o * (overlap_n - overlap_c)
            + config.alpha_m * (misplacement_n - misplacement_c);
        let temperature = score(overlap_c, misplacement_c) + 1e-9;
        let u: f64 = rng.random_range(0.0..1.0);
        let anneal_pass = u < (-delta_e / temperature).exp();
        let displacement = max_displacement(&current, &next);

        *iteration += 1;
        let mut event = TraceEvent::None;

        if anneal_pass && displacement < config.tau_s {
            candidates.push(Candidate {
                placement: next.clone(),
                overlap: overlap_n,
                misplacement: misplacement_n,
                admission: candidates.len(),
            });
            event = TraceEvent::Admitted;
        }

        trace.push(TraceRow {
            iteration: *iteration,
            module_count: next.modules.len(),
            total_overlap: overlap_n,
            total_misplacement: misplacement_n,
            event,
        });

        if score(overlap_n, misplacement_n) < score(best.overlap, best.misplacement) {
            best = Candidate {
                placement: next.clone(),
                overlap: overlap_n,
                misplacement: misplacement_n,
                admission: 0,
            };
        }

        current = next;
        graph = next_graph;
        overlap_c = overlap_n;
        misplacement_c = misplacement_n;

        if candidates.len() >= config.tau_e {
            return StablePhase { candidates, capped: false };
        }
    }

    if candidates.is_empty() {
        trace.push(TraceRow {
            iteration: *iteration,
            module_count: current.modules.len(),
            total_overlap: overlap_c,
            total_misplacement: misplacement_c,
            event: TraceEvent::CapReached,
        });
        StablePhase { candidates: vec![best], capped: true }
    } else {
        StablePhase { candidates, capped: false }
    }
}

/// The candidate minimising the weighted sum of total overlap and total
/// misplacement; ties go to the earliest admission.
pub fn select_best(candidates: &[Candidate], config: &SolverConfig) -> Result<Candidate, Error> {
    candidates
        .iter()
        .min_by(|a, b| {
            let sa = config.alpha_o * a.overlap + config.alpha_m * a.misplacement;
            let sb = config.alpha_o * b.overlap + config.alpha_m * b.misplacement;
            sa.partial_cmp(&sb)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.admission.cmp(&b.admission))
        })
        .cloned()
        .ok_or(Error::EmptyCandidateSet)
}

/// Removes exactly one module: among modules whose individual overlap is
/// at least the mean, the one with the fewest neighbours, ties broken by
/// the largest overlap, then by the lowest id. Falls back to the same
/// order over all modules when the filter selects none.
pub fn remove_module(placement: &Placement, config: &SolverConfig) -> Result<Placement, Error> {
    if placement.modules.is_empty() {
        return Err(Error::EmptyPlacement);
    }
    let graph = build_neighbor_graph(placement, &config.graph_options());
    let overlaps: Vec<f64> = placement
        .modules
        .iter()
        .enumerate()
        .map(|(i, _)| crate::metrics::per_module_overlap(placement, placement.modules[i].id))
        .collect::<Result<_, _>>()?;
    let mean = overlaps.iter().sum::<f64>() / overlaps.len() as f64;

    // lexicographic: fewest neighbours, then largest overlap, then lowest id
    let key = |i: usize| {
        (
            graph.neighbor_count(i),
            std::cmp::Reverse(ordered_float(overlaps[i])),
            placement.modules[i].id,
        )
    };
    let filtered: Vec<usize> = (0..placement.modules.len())
        .filter(|&i| overlaps[i] >= mean)
        .collect();
    let pool = if filtered.is_empty() {
        (0..placement.modules.len()).collect()
    } else {
        filtered
    };
    let victim = pool.into_iter().min_by_key(|&i| key(i)).expect("non-empty pool");

    let mut next = placement.clone();
    next.modules.remove(victim);
    Ok(next)
}

fn ordered_float(x: f64) -> u64 {
    // monotone map from non-negative floats to integers for use in keys
    debug_assert!(x >= 0.0);
    x.to_bits()
}

/// Rounds every pose coordinate to 12 significant decimal digits. Applied
/// to results before acceptance so serialized output and reported metrics
/// agree bit-for-bit after a round trip.
pub fn snap_placement(placement: &Placement) -> Placement {
    let mut snapped = placement.clone();
    for m in &mut snapped.modules {
        m.pose = Pose::new(
            Point2::new(round_sig(m.pose.center.x, 12), round_sig(m.pose.center.y, 12)),
            round_sig(m.pose.theta, 12),
        );
    }
    snapped
}

/// Rounds to `digits` significant decimal digits via decimal formatting.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits - 1, x).parse().unwrap()
}

/// The full iterative placement loop: initialise with the upper-bound
/// module count, then alternate annealing phases, best-candidate
/// selection, the acceptability test, and module removal until an
/// acceptable placement remains. Total by construction: the empty
/// placement is acceptable vacuously.
pub fn itpla(
    polygon: &SimplePolygon,
    shape: &ModuleShape,
    config: &SolverConfig,
) -> Result<RunResult, Error> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut trace = RunTrace { seed: config.seed, ..Default::default() };
    let mut snapshots = Vec::new();
    let mut iteration: u64 = 0;

    let bound = upper_bound(polygon, shape);
    let mut current = generate_initial_placement(polygon, shape, bound, &mut rng)?;
    {
        let graph = build_neighbor_graph(&current, &config.graph_options());
        trace.push(TraceRow {
            iteration,
            module_count: current.modules.len(),
            total_overlap: total_overlap(&current),
            total_misplacement: total_misplacement(&current, &graph),
            event: TraceEvent::Init,
        });
    }

    loop {
        let phase = if current.modules.is_empty() {
            StablePhase {
                candidates: vec![Candidate {
                    placement: current.clone(),
                    overlap: 0.0,
                    misplacement: 0.0,
                    admission: 0,
                }],
                capped: false,
            }
        } else {
            generate_stable_placements_traced(&current, config, &mut rng, &mut trace, &mut iteration)
        };

        let best = select_best(&phase.candidates, config)?;
        let snapped = snap_placement(&best.placement);
        let graph = build_neighbor_graph(&snapped, &config.graph_options());
        let overlap = total_overlap(&snapped);
        let misplacement = total_misplacement(&snapped, &graph);

        if is_acceptable(&snapped, &graph, &config.thresholds()) {
            trace.push(TraceRow {
                iteration,
                module_count: snapped.modules.len(),
                total_overlap: overlap,
                total_misplacement: misplacement,
                event: TraceEvent::Accepted,
            });
            trace.degraded = phase.capped;
            return Ok(RunResult { placement: snapped, trace, snapshots });
        }

        // unacceptable: remove one module and warm-restart from the
        // surviving poses
        current = remove_module(&snapped, config)?;
        iteration += 1;
        let graph = build_neighbor_graph(&current, &config.graph_options());
        trace.push(TraceRow {
            iteration,
            module_count: current.modules.len(),
            total_overlap: total_overlap(&current),
            total_misplacement: total_misplacement(&current, &graph),
            event: TraceEvent::Removal,
        });
        snapshots.push((iteration, current.clone()));
    }
}

/// Runs [`itpla`] `starts` times with per-run seeds `seed + index` and
/// returns the best run (most modules, ties by the lowest weighted score)
/// along with every run's trace.
pub fn multi_start(
    polygon: &SimplePolygon,
    shape: &ModuleShape,
    config: &SolverConfig,
) -> Result<(RunResult, Vec<RunTrace>), Error> {
    config.validate()?;
    let results: Vec<RunResult> = (0..config.starts)
        .into_par_iter()
        .map(|run| {
            let mut cfg = config.clone();
            cfg.seed = config.seed.wrapping_add(run as u64);
            itpla(polygon, shape, &cfg)
        })
        .collect::<Result<_, _>>()?;

    let traces: Vec<RunTrace> = results.iter().map(|r| r.trace.clone()).collect();
    let best = results
        .into_iter()
        .min_by(|a, b| {
            let count = b.placement.modules.len().cmp(&a.placement.modules.len());
            let score = |r: &RunResult| {
                let row = r.trace.rows.last().expect("trace has rows");
                config.alpha_o * row.total_overlap + config.alpha_m * row.total_misplacement
            };
            count.then(
                score(a)
                    .partial_cmp(&score(b))
                    .unwrap_or(std::cmp::Ordering::Equal),
            )
        })
        .expect("at least one run");
    Ok((best, traces))
}
