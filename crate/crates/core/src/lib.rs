pub mod cache;
pub mod cli;
pub mod csf;
pub mod error;
pub mod graph;
pub mod partition;
pub mod positivity;
pub mod regression;
pub mod scan;
pub mod spider;
pub mod symfunc;
pub mod treegen;

pub use error::{Error, Result};
