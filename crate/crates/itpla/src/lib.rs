//! Iterative force-directed placement of circular and triangular modules
//! inside simple polygons.

pub mod baseline;
pub mod corpus;
pub mod error;
pub mod forces;
pub mod geometry;
pub mod io;
pub mod metrics;
pub mod model;
pub mod render;
pub mod solver;

pub use error::Error;
