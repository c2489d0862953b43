//! Quantifies how evenly geocoded rental listings represent census tracts
//! relative to each tract's share of vacant rental inventory, and models the
//! sociodemographic correlates of that representation.
//!
//! The pipeline runs in stages:
//!
//! 1. [`ingest`] parses tract geometries (GeoJSON), tract attributes (CSV),
//!    listings (CSV), and city definitions (TOML), derives the analysis
//!    variables, and filters the tract universe.
//! 2. [`geo`] spatially joins listings to tracts and tallies per-tract counts.
//! 3. [`metrics`] computes expected counts, representation ratios, Gini
//!    concentration, classification labels, share comparisons, and
//!    affordability shares.
//! 4. [`stats`] produces over/under-represented group contrasts (Welch or
//!    pooled t-tests, Cohen's d), outlier trimming, and density-curve data.
//! 5. [`spatial`] builds queen-contiguity and distance-decay weights matrices
//!    and computes Moran's I diagnostics.
//! 6. [`econ`] estimates fixed-effects OLS and maximum-likelihood spatial-lag
//!    and spatial-error models, with interaction marginal effects and a
//!    robustness harness.
//! 7. [`pipeline`] orchestrates it all from a [`config::PipelineConfig`] into
//!    a directory of CSV/JSON reports, and [`synth`] generates seeded
//!    synthetic fixtures with known ground truth.
//!
//! With the default `parallel` feature, the data-parallel inner loops (spatial
//! join, weights construction, per-city metrics, robustness fits) run on
//! rayon; without it everything runs sequentially on one thread.

pub mod config;
pub mod econ;
pub mod error;
pub mod geo;
pub mod ingest;
pub mod metrics;
pub mod numfmt;
pub mod par;
pub mod pipeline;
pub mod report;
pub mod spatial;
pub mod stats;
pub mod synth;

pub use error::{Error, Result};
