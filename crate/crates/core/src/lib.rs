pub mod appendix;
pub mod catalog;
pub mod envelope;
pub mod error;
pub mod frame_file;
pub mod groebner;
pub mod logderiv;
pub mod parse;
pub mod poly;
pub mod report;
pub mod sample;
pub mod spencer;
pub mod suites;
pub mod weyl;

pub use error::{Error, Result};
