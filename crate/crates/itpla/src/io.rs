//! File formats: polygon JSON, solver config TOML, placement JSON and the
//! trace CSV. All defaults live in [`ConfigFile`] and nowhere else.

use crate::error::Error;
use crate::forces::ForceGains;
use crate::geometry::{Point2, SimplePolygon};
use crate::model::{Module, ModuleShape, Placement, Pose};
use crate::solver::{round_sig, RunTrace, SolverConfig};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// A polygon document: counter-clockwise vertices plus optional metadata.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub units: Option<String>,
    pub vertices: Vec<[f64; 2]>,
}

impl PolygonFile {
    pub fn from_polygon(polygon: &SimplePolygon, name: Option<&str>) -> Self {
        Self {
            name: name.map(str::to_owned),
            units: None,
            vertices: polygon.vertices().iter().map(|p| [p.x, p.y]).collect(),
        }
    }

    pub fn to_polygon(&self) -> Result<SimplePolygon, Error> {
        SimplePolygon::new(self.vertices.iter().map(|[x, y]| Point2::new(*x, *y)).collect())
    }
}

/// Reads and validates a polygon file, reporting parse positions on error.
pub fn load_polygon(path: &Path) -> Result<(SimplePolygon, Option<String>), Error> {
    let text = std::fs::read_to_string(path)?;
    let file: PolygonFile = serde_json::from_str(&text).map_err(|e| Error::FileFormat {
        path: path.display().to_string(),
        message: format!("line {}, column {}: {}", e.line(), e.column(), e),
    })?;
    let polygon = file.to_polygon().map_err(|e| Error::FileFormat {
        path: path.display().to_string(),
        message: format!("field `vertices`: {e}"),
    })?;
    Ok((polygon, file.name))
}

pub fn save_polygon(path: &Path, polygon: &SimplePolygon, name: Option<&str>) -> Result<(), Error> {
    let file = PolygonFile::from_polygon(polygon, name);
    let mut text = serde_json::to_string_pretty(&file).expect("polygon serializes");
    text.push('\n');
    write_atomic(path, text.as_bytes())
}

/// Gain block of the config file.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GainsFile {
    pub chi_d: f64,
    pub chi_tau: f64,
    pub chi_t: f64,
    pub chi_pd: f64,
    pub chi_ptau: f64,
    pub n: i32,
    pub weight_epsilon: f64,
}

impl Default for GainsFile {
    fn default() -> Self {
        let g = ForceGains::default();
        Self {
            chi_d: g.chi_d,
            chi_tau: g.chi_tau,
            chi_t: g.chi_t,
            chi_pd: g.chi_pd,
            chi_ptau: g.chi_ptau,
            n: g.weight_exponent,
            weight_epsilon: g.weight_epsilon,
        }
    }
}

/// The solver configuration document. Unknown keys are rejected; unset
/// fields take the defaults below. The three thresholds marked
/// shape-relative resolve against the module actually being placed:
///
/// | field  | default          |
/// |--------|------------------|
/// | tau_o  | `0.02 * A(m)`    |
/// | tau_m  | `0.05 * size`    |
/// | tau_s  | `1e-4 * size`    |
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ConfigFile {
    pub dt: f64,
    /// Overlap threshold; shape-relative when unset.
    pub tau_o: Option<f64>,
    /// Misplacement threshold; shape-relative when unset.
    pub tau_m: Option<f64>,
    /// Stability displacement threshold; shape-relative when unset.
    pub tau_s: Option<f64>,
    pub tau_e: usize,
    pub alpha_o: f64,
    pub alpha_m: f64,
    pub max_iterations: usize,
    pub seed: u64,
    pub starts: usize,
    pub max_step_factor: f64,
    pub subdivide_edges: bool,
    pub edge_range_factor: f64,
    pub gains: GainsFile,
}

impl Default for ConfigFile {
    fn default() -> Self {
        Self {
            dt: 0.01,
            tau_o: None,
            tau_m: None,
            tau_s: None,
            tau_e: 5,
            alpha_o: 1.0,
            alpha_m: 1.0,
            max_iterations: 20_000,
            seed: 0,
            starts: 1,
            max_step_factor: 0.5,
            subdivide_edges: true,
            edge_range_factor: 4.0,
            gains: GainsFile::default(),
        }
    }
}

impl ConfigFile {
    /// Fills shape-relative defaults and validates everything.
    pub fn resolve(&self, shape: &ModuleShape) -> Result<SolverConfig, Error> {
        let config = SolverConfig {
            dt: self.dt,
            tau_o: self.tau_o.unwrap_or(0.02 * shape.area()),
            tau_m: self.tau_m.unwrap_or(0.05 * shape.size()),
            tau_s: self.tau_s.unwrap_or(1e-4 * shape.size()),
            tau_e: self.tau_e,
            alpha_o: self.alpha_o,
            alpha_m: self.alpha_m,
            max_iterations: self.max_iterations,
            seed: self.seed,
            starts: self.starts,
            max_step_factor: self.max_step_factor,
            subdivide_edges: self.subdivide_edges,
            edge_range_factor: self.edge_range_factor,
            gains: ForceGains {
                chi_d: self.gains.chi_d,
                chi_tau: self.gains.chi_tau,
                chi_t: self.gains.chi_t,
                chi_pd: self.gains.chi_pd,
                chi_ptau: self.gains.chi_ptau,
                weight_exponent: self.gains.n,
                weight_epsilon: self.gains.weight_epsilon,
            },
        };
        if self.dt < 0.0 {
            return Err(Error::InvalidConfig("dt must be non-negative".into()));
        }
        // dt == 0 is allowed for identity-step experiments; everything else
        // goes through the solver's validation
        if config.dt > 0.0 {
            config.validate()?;
        }
        Ok(config)
    }

    /// The default document as annotated TOML, for `--print-config`.
    pub fn print_default() -> String {
        let body = toml::to_string_pretty(&Self::default()).expect("config serializes");
        format!(
            "# itpla solver configuration (defaults)\n\
             # unset shape-relative thresholds resolve at solve time:\n\
             #   tau_o = 0.02 * module area\n\
             #   tau_m = 0.05 * module size\n\
             #   tau_s = 1e-4 * module size\n\
             {body}"
        )
    }
}

/// Reads a config file (TOML), rejecting unknown keys.
pub fn load_config(path: &Path) -> Result<ConfigFile, Error> {
    let text = std::fs::read_to_string(path)?;
    toml::from_str(&text).map_err(|e| Error::FileFormat {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// One serialized module record.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleRecord {
    pub id: usize,
    pub kind: String,
    pub size: f64,
    pub x: f64,
    pub y: f64,
    pub theta: f64,
}

/// Serializes module poses (angles in radians, 12 significant digits).
pub fn placement_to_json(placement: &Placement) -> String {
    let records: Vec<ModuleRecord> = placement
        .modules
        .iter()
        .map(|m| ModuleRecord {
            id: m.id,
            kind: match m.shape {
                ModuleShape::Circle { .. } => "circle".into(),
                ModuleShape::Triangle { .. } => "triangle".into(),
            },
            size: round_sig(m.shape.size(), 12),
            x: round_sig(m.pose.center.x, 12),
            y: round_sig(m.pose.center.y, 12),
            theta: round_sig(m.pose.theta, 12),
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&records).expect("records serialize");
    text.push('\n');
    text
}

pub fn save_placement(path: &Path, placement: &Placement) -> Result<(), Error> {
    write_atomic(path, placement_to_json(placement).as_bytes())
}

/// Loads module records back into a placement over the given polygon.
pub fn load_placement(path: &Path, polygon: SimplePolygon) -> Result<Placement, Error> {
    let text = std::fs::read_to_string(path)?;
    let records: Vec<ModuleRecord> =
        serde_json::from_str(&text).map_err(|e| Error::FileFormat {
            path: path.display().to_string(),
            message: format!("line {}, column {}: {}", e.line(), e.column(), e),
        })?;
    let modules = records
        .into_iter()
        .map(|r| {
            let shape = match r.kind.as_str() {
                "circle" => ModuleShape::circle(r.size),
                "triangle" => ModuleShape::triangle(r.size),
                other => Err(Error::FileFormat {
                    path: path.display().to_string(),
                    message: format!("unknown module kind `{other}`"),
                }),
            }?;
            Ok(Module::new(r.id, shape, Pose::new(Point2::new(r.x, r.y), r.theta)))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Placement::new(polygon, modules)
}

/// Formats a float at 12 significant digits (shortest representation of
/// the rounded value).
pub fn fmt_sig12(x: f64) -> String {
    format!("{}", round_sig(x, 12))
}

/// Renders a run trace as CSV under the frozen `itpla-trace v1` schema.
pub fn trace_to_csv(trace: &RunTrace) -> String {
    let mut out = String::from("# itpla-trace v1\n");
    out.push_str("iteration,module_count,total_overlap,total_misplacement,event\n");
    for row in &trace.rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.iteration,
            row.module_count,
            fmt_sig12(row.total_overlap),
            fmt_sig12(row.total_misplacement),
            row.event.label()
        ));
    }
    out
}

pub fn save_trace(path: &Path, trace: &RunTrace) -> Result<(), Error> {
    write_atomic(path, trace_to_csv(trace).as_bytes())
}

/// Whole-file atomic write: write a sibling temp file, then rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), Error> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = std::path::PathBuf::from(tmp);
    std::fs::write(&tmp, bytes)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}
