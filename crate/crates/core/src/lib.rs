//! Persistence barcodes of piecewise-linear functions on the interval and
//! the circle, and the structure of the persistence map's fiber: component
//! membership tests, canonical representatives, explicit in-fiber paths,
//! component enumeration over a barcode, and fiber homotopy-type reports
//! for Morse functions on compact surfaces.

pub mod error;
pub mod num;
pub mod fiber_circle;
pub mod fiber_interval;
pub mod generate;
pub mod json;
pub mod persistence;
pub mod pl;
pub mod surface;

pub use error::{Error, Result};
pub use num::Rat;
