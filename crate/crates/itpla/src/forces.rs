//! Pseudo-forces: velocity-like per-step corrections, not Newtonian
//! forces. Five families contribute, each aggregated as a weighted mean
//! over the module's semi-space neighbours:
//!
//! * module distance (attraction/repulsion along the center line),
//! * module moment (rotation realigning facing sides, split half-half),
//! * connector offset (slide along the facing side, split half-half),
//! * edge distance (attraction/repulsion along the border normal),
//! * edge moment (full rotation aligning the facing side to the border).
//!
//! Translation and rotation components are then summed separately.

use crate::error::Error;
use crate::geometry::{Segment, Vec2, EPS};
use crate::model::{
    angular_difference_unchecked, facing_side, normalized_distance, normalized_distance_to_edge,
    translation_offset_unchecked, wrap_to_symmetry, Module, NeighborGraph, Placement,
};
use std::f64::consts::PI;

/// Gains and weighting parameters for all pseudo-force families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForceGains {
    /// Gain of the module-module distance force.
    pub chi_d: f64,
    /// Gain of the module-module moment force.
    pub chi_tau: f64,
    /// Gain of the connector offset force.
    pub chi_t: f64,
    /// Gain of the module-edge distance force.
    pub chi_pd: f64,
    /// Gain of the module-edge moment force.
    pub chi_ptau: f64,
    /// Exponent of the distance-weight ratio.
    pub weight_exponent: i32,
    /// Additive guard on the quadratic moment/offset weights so an
    /// all-aligned family stays well defined.
    pub weight_epsilon: f64,
}

impl Default for ForceGains {
    fn default() -> Self {
        Self {
            chi_d: 1.0,
            chi_tau: 1.0,
            chi_t: 1.0,
            chi_pd: 1.0,
            chi_ptau: 1.0,
            weight_exponent: 2,
            weight_epsilon: 1e-12,
        }
    }
}

impl ForceGains {
    pub fn validate(&self) -> Result<(), Error> {
        let positive = [
            ("chi_d", self.chi_d),
            ("chi_tau", self.chi_tau),
            ("chi_t", self.chi_t),
            ("chi_pd", self.chi_pd),
            ("chi_ptau", self.chi_ptau),
            ("weight_epsilon", self.weight_epsilon),
        ];
        for (name, v) in positive {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidConfig(format!("{name} must be positive")));
            }
        }
        if self.weight_exponent < 1 {
            return Err(Error::InvalidConfig("weight exponent must be >= 1".into()));
        }
        Ok(())
    }
}

/// One translation vector plus one rotation scalar per module per time
/// quantum.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PseudoForce {
    pub translation: Vec2,
    pub rotation: f64,
}

/// The five aggregates, kept separate for inspection.
#[derive(Debug, Clone, Copy, Default)]
pub struct ForceBreakdown {
    pub distance: Vec2,
    pub moment: f64,
    pub offset: Vec2,
    pub edge_distance: Vec2,
    pub edge_moment: f64,
}

impl ForceBreakdown {
    pub fn total(&self) -> PseudoForce {
        PseudoForce {
            translation: self.distance + self.offset + self.edge_distance,
            rotation: self.moment + self.edge_moment,
        }
    }
}

/// Distance force of neighbour `m_k` on `m_i`: magnitude `chi_d * d_bar`
/// along the center line (attraction when positive, repulsion when the
/// pair overlaps), with weight `(d*/d)^n`.
pub fn distance_force(m_i: &Module, m_k: &Module, gains: &ForceGains) -> Result<(Vec2, f64), Error> {
    let d_bar = normalized_distance(m_i, m_k)?;
    let toward = (m_k.pose.center - m_i.pose.center).normalized();
    let force = toward * (gains.chi_d * d_bar);
    // (d*/d)^n == ((d/d*)^2)^(-n/2) == (d_bar + 1)^(-n/2)
    let weight = (d_bar + 1.0).powf(-(gains.weight_exponent as f64) / 2.0);
    Ok((force, weight))
}

/// Moment force of neighbour `m_k` on `m_i`: half the corrective rotation,
/// weighted by the squared angular difference. Zero for circles.
pub fn moment_force(m_i: &Module, m_k: &Module, gains: &ForceGains) -> Result<(f64, f64), Error> {
    if !m_i.shape.is_triangle() || !m_k.shape.is_triangle() {
        return Ok((0.0, 0.0));
    }
    let delta = angular_difference_unchecked(m_i, m_k)?;
    Ok((gains.chi_tau * delta / 2.0, delta * delta + gains.weight_epsilon))
}

/// Connector offset force of neighbour `m_k` on `m_i`: half the offset
/// vector, always attractive toward the matched-connector configuration.
pub fn offset_force(m_i: &Module, m_k: &Module, gains: &ForceGains) -> Result<(Vec2, f64), Error> {
    if !m_i.shape.is_triangle() || !m_k.shape.is_triangle() {
        return Ok((Vec2::ZERO, 0.0));
    }
    let offset = translation_offset_unchecked(m_i, m_k)?;
    Ok((
        offset * (gains.chi_t / 2.0),
        offset.norm_sq() + gains.weight_epsilon,
    ))
}

/// Edge distance force of neighbour edge `e_j` on `m_i`: along the edge
/// normal through the center, repulsive into the polygon on overlap and
/// attractive toward the border otherwise; weight mirrors the module form.
pub fn edge_distance_force(
    m_i: &Module,
    edge: &Segment,
    gains: &ForceGains,
) -> Result<(Vec2, f64), Error> {
    let d_bar = normalized_distance_to_edge(m_i, edge)?;
    let foot = edge.project_onto_line(m_i.pose.center);
    let away = (m_i.pose.center - foot).normalized();
    let force = away * (-gains.chi_pd * d_bar);
    let weight = (d_bar + 1.0).powf(-(gains.weight_exponent as f64) / 2.0);
    Ok((force, weight))
}

/// Edge moment force of neighbour edge `e_j` on `m_i`: the full corrective
/// rotation aligning the module's facing side parallel to the edge (all
/// the rotation is induced on the module). Zero for circles.
pub fn edge_moment_force(
    m_i: &Module,
    edge: &Segment,
    gains: &ForceGains,
) -> Result<(f64, f64), Error> {
    if !m_i.shape.is_triangle() {
        return Ok((0.0, 0.0));
    }
    let foot = edge.project_onto_line(m_i.pose.center);
    let away = m_i.pose.center - foot;
    if away.norm() < EPS {
        return Err(Error::CenterOnEdgeLine);
    }
    let away = away.normalized();
    let side = facing_side(m_i, -away)?;
    let delta = wrap_to_symmetry(away.bearing() + PI - side.outward_normal.bearing());
    Ok((gains.chi_ptau * delta, delta * delta + gains.weight_epsilon))
}

#[derive(Default)]
struct WeightedVec {
    sum: Vec2,
    weight: f64,
}

impl WeightedVec {
    fn add(&mut self, f: Vec2, w: f64) {
        self.sum = self.sum + f * w;
        self.weight += w;
    }
    fn mean(&self) -> Vec2 {
        if self.weight > 0.0 {
            self.sum / self.weight
        } else {
            Vec2::ZERO
        }
    }
}

#[derive(Default)]
struct WeightedScalar {
    sum: f64,
    weight: f64,
}

impl WeightedScalar {
    fn add(&mut self, f: f64, w: f64) {
        self.sum += f * w;
        self.weight += w;
    }
    fn mean(&self) -> f64 {
        if self.weight > 0.0 {
            self.sum / self.weight
        } else {
            0.0
        }
    }
}

/// Aggregates all pseudo-force families acting on the module at
/// `index` over a frozen placement snapshot and its neighbour graph.
///
/// Moment and offset forces apply only to mutual triangle pairs; edge
/// moments only where the module is the edge's own nearest module.
pub fn aggregate_breakdown(
    index: usize,
    placement: &Placement,
    graph: &NeighborGraph,
    gains: &ForceGains,
) -> ForceBreakdown {
    let m_i = &placement.modules[index];
    let mut distance = WeightedVec::default();
    let mut moment = WeightedScalar::default();
    let mut offset = WeightedVec::default();
    let mut edge_distance = WeightedVec::default();
    let mut edge_moment = WeightedScalar::default();

    for entry in graph.sectors(index) {
        if let Some(k) = entry.module {
            let m_k = &placement.modules[k];
            if let Ok((f, w)) = distance_force(m_i, m_k, gains) {
                distance.add(f, w);
            }
            if m_i.shape.is_triangle() && m_k.shape.is_triangle() && graph.mutual(index, k) {
                if let Ok((f, w)) = moment_force(m_i, m_k, gains) {
                    moment.add(f, w);
                }
                if let Ok((f, w)) = offset_force(m_i, m_k, gains) {
                    offset.add(f, w);
                }
            }
        }
        if let Some(e) = entry.edge {
            let segment = graph.edge_segment(e);
            if let Ok((f, w)) = edge_distance_force(m_i, &segment, gains) {
                edge_distance.add(f, w);
            }
            if m_i.shape.is_triangle() && graph.edge_reciprocates(e, index) {
                if let Ok((f, w)) = edge_moment_force(m_i, &segment, gains) {
                    edge_moment.add(f, w);
                }
            }
        }
    }

    ForceBreakdown {
        distance: distance.mean(),
        moment: moment.mean(),
        offset: offset.mean(),
        edge_distance: edge_distance.mean(),
        edge_moment: edge_moment.mean(),
    }
}

/// Total pseudo-force on one module: translation is the sum of the
/// distance, offset and edge-distance aggregates; rotation is the sum of
/// the moment and edge-moment aggregates.
pub fn aggregate(
    index: usize,
    placement: &Placement,
    graph: &NeighborGraph,
    gains: &ForceGains,
) -> PseudoForce {
    aggregate_breakdown(index, placement, graph, gains).total()
}
