//! enumlab: a desk-scale laboratory for studying contact-discovery
//! enumeration against a fully synthetic messaging directory.
//!
//! The crate is organized around the stages of an experiment:
//!
//! - [`numplan`] parses numbering-plan metadata and generates the candidate
//!   phone-number space.
//! - [`synthpop`] synthesizes a deterministic ground-truth population of
//!   accounts, devices and prekey material, including injected anomalies.
//! - [`directory`] serves the discovery endpoints over a population and
//!   enforces pluggable defense policies (token bucket, cardinality limits,
//!   visibility caps).
//! - [`enumerator`] drives multi-round scans against a directory with
//!   batching, sessions, checkpointing and throughput accounting.
//! - [`census`] computes population analytics from scan outputs.
//! - [`keyaudit`] performs keying-material forensics on prekey dumps.
//! - [`experiment`] wires all stages into one reproducible run.

pub mod census;
pub mod crypto;
pub mod directory;
pub mod enumerator;
pub mod experiment;
pub mod keyaudit;
pub mod numplan;
pub mod synthpop;
