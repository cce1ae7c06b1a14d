pub mod cli;
pub mod coloring;
pub mod counting;
pub mod cycle_completion;
pub mod error;
pub mod flownet;
pub mod gen;
pub mod matching;
pub mod oracles;
pub mod partitioning;
pub mod spanning;
pub mod tree_core;
pub mod treebuild;

pub use error::{Error, Result};
