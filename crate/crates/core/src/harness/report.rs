use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::planarity::PlanarityVerdict;

pub const ARTIFACT_VERSION: &str = concat!("ect-core ", env!("CARGO_PKG_VERSION"));

/// Where an instance came from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GraphSource {
    File {
        path: String,
    },
    Named {
        name: String,
    },
    Generated {
        generator: String,
        n: usize,
        seed: u64,
    },
}

/// Quotient planarity of one enumerated minimum coloring.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ColoringVerdict {
    pub classes: Vec<Vec<usize>>,
    pub quotient_complete: bool,
    pub quotient_planar: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub source: GraphSource,
    pub n: usize,
    pub m: usize,
    pub chi: usize,
    /// Minimum colorings whose quotient was checked.
    pub colorings_checked: usize,
    /// Every checked quotient was complete on `chi` vertices.
    pub quotient_complete: bool,
    /// For the planarity experiments: some checked quotient was planar.
    /// Otherwise the planarity of the witness coloring's quotient.
    pub quotient_planar: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub planar_quotient_fraction: Option<f64>,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
    pub graph: Graph,
    /// A minimum coloring; re-checkable with `is_proper` and `apply_ect`.
    pub witness: Coloring,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub per_coloring: Vec<ColoringVerdict>,
    pub elapsed_ms: f64,
}

/// A coloring with a complete quotient that still uses more than `chi`
/// colors: complete quotients do not imply minimality.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NonConverseWitness {
    pub name: String,
    pub graph: Graph,
    pub coloring: Coloring,
    pub classes: Vec<Vec<usize>>,
    pub quotient_complete: bool,
    pub colors_used: usize,
    pub chi: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub artifact_version: String,
    pub seed: u64,
    pub instances: usize,
    pub n_max: usize,
    pub coloring_cap: usize,
    pub per_instance: Vec<InstanceRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub non_converse_witnesses: Vec<NonConverseWitness>,
    pub summary: Summary,
}

impl ExperimentReport {
    pub(crate) fn new(
        experiment: &str,
        seed: u64,
        n_max: usize,
        coloring_cap: usize,
        per_instance: Vec<InstanceRecord>,
    ) -> Self {
        let passed = per_instance.iter().filter(|r| r.passed).count();
        ExperimentReport {
            experiment: experiment.to_string(),
            artifact_version: ARTIFACT_VERSION.to_string(),
            seed,
            instances: per_instance.len(),
            n_max,
            coloring_cap,
            summary: Summary {
                passed,
                failed: per_instance.len() - passed,
            },
            per_instance,
            non_converse_witnesses: Vec::new(),
        }
    }

    pub fn violations(&self) -> usize {
        self.summary.failed
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{}: {} instances, {} passed, {} failed",
            self.experiment, self.instances, self.summary.passed, self.summary.failed
        )
    }
}

/// One identification of a non-adjacent pair that turns a planar graph
/// into K5.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GapReport {
    pub experiment: String,
    pub artifact_version: String,
    pub base: Graph,
    pub base_planar: PlanarityVerdict,
    pub pair: (usize, usize),
    pub pair_adjacent: bool,
    pub identified: Graph,
    pub identified_complete: bool,
    pub identified_planar: PlanarityVerdict,
    /// base planar, pair non-adjacent, identified graph K5 and non-planar.
    pub demonstrated: bool,
}
