//! Perfect and multiple state transfer on oriented normal Cayley graphs.

pub mod cayley;
pub mod characters;
pub mod cli;
pub mod config;
mod context;
mod error;
pub mod families;
pub mod group;
mod par;
pub mod pst;
pub mod walk;

pub use config::RunConfig;
pub use context::GroupContext;
pub use error::{Error, Result};
