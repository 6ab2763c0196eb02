//! Experiment driver: verification suites, the proof-gap demonstration,
//! JSON reports and the `ect-lab` command line.

pub mod cli;
pub mod report;
pub mod suites;

pub use cli::run_cli;
pub use report::{ExperimentReport, GapReport, GraphSource, InstanceRecord, ARTIFACT_VERSION};
pub use suites::{
    demo_proof_gap, derive_seed, verify_fct_sample, verify_theorem1_search, verify_theorem1_suite,
    verify_theorem2_catalog, verify_theorem2_suite, PlanarFamily, SuiteConfig,
};
