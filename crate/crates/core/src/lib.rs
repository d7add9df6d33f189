//! Link-level simulation and reflection optimization for active-IRS-aided
//! point-to-point links, with passive-IRS and amplify-and-forward relay
//! baselines.
//!
//! All internal APIs use linear power ratios and watts; dB and dBm only
//! appear in the configuration layer ([`config`]).

pub mod channel;
pub mod cli;
pub mod config;
pub mod error;
pub mod experiments;
pub mod reflection;
pub mod relay;

pub use error::{Error, Result};
