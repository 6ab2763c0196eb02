//! Verification experiments over seeded instance families.
//!
//! Every instance draws from its own RNG seeded by `derive_seed(seed, index)`,
//! so instances can run on any number of threads and the report is the same
//! as a sequential run.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::report::{
    ColoringVerdict, ExperimentReport, GapReport, GraphSource, InstanceRecord, NonConverseWitness,
    ARTIFACT_VERSION,
};
use crate::coloring::{chromatic_number_exact, enumerate_colorings_with, is_proper, Coloring};
use crate::ect::{apply_ect, color_classes, is_quotient_complete, QuotientGraph};
use crate::error::{Error, Result};
use crate::graph::{
    generate_planar, named_graph, random_gnp, split_k5, GeneratorMode, Graph, CATALOG,
};
use crate::planarity::{is_planar, Witness};

pub const THEOREM2_DEFAULT_CAP: usize = 50;
pub const THEOREM1_DEFAULT_CAP: usize = 1000;
pub const SUITE_MAX_N: usize = 12;

/// How planar instances are drawn.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PlanarFamily {
    Maximal,
    Subsample {
        p: f64,
    },
    /// Per instance, a coin flip between maximal and a subsample with
    /// deletion probability drawn from `[0.1, 0.5)`.
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SuiteConfig {
    pub count: usize,
    pub n_max: usize,
    pub seed: u64,
    pub coloring_cap: usize,
    pub family: PlanarFamily,
}

impl SuiteConfig {
    pub fn new(count: usize, n_max: usize, seed: u64) -> Self {
        SuiteConfig {
            count,
            n_max,
            seed,
            coloring_cap: THEOREM2_DEFAULT_CAP,
            family: PlanarFamily::Maximal,
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.coloring_cap = cap;
        self
    }

    pub fn with_family(mut self, family: PlanarFamily) -> Self {
        self.family = family;
        self
    }

    fn check(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::Argument("count must be at least 1".into()));
        }
        if !(3..=SUITE_MAX_N).contains(&self.n_max) {
            return Err(Error::Argument(format!(
                "n-max must be in 3..={SUITE_MAX_N}, got {}",
                self.n_max
            )));
        }
        if self.coloring_cap == 0 {
            return Err(Error::Argument("coloring cap must be at least 1".into()));
        }
        Ok(())
    }
}

/// SplitMix64 finalizer applied to `seed ^ index`.
pub fn derive_seed(seed: u64, index: usize) -> u64 {
    let mut z = (seed ^ index as u64).wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn elapsed_ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn quotient_of(g: &Graph, c: &Coloring) -> QuotientGraph {
    let p = color_classes(g, c).expect("enumerated colorings are proper");
    apply_ect(g, &p).expect("color classes are independent")
}

fn random_instance(index: usize, seed: u64, n_max: usize) -> (GraphSource, Graph) {
    let s = derive_seed(seed, index);
    let mut rng = ChaCha8Rng::seed_from_u64(s);
    let n = rng.gen_range(3..=n_max);
    let p = rng.gen_range(0.2..0.8);
    let g = random_gnp(n, p, &mut rng).expect("n within limits");
    let source = GraphSource::Generated {
        generator: format!("gnp(p={p:.4})"),
        n,
        seed: s,
    };
    (source, g)
}

fn planar_instance(
    index: usize,
    seed: u64,
    n_max: usize,
    family: PlanarFamily,
) -> Result<(GraphSource, Graph)> {
    let s = derive_seed(seed, index);
    let mut rng = ChaCha8Rng::seed_from_u64(s);
    let n = rng.gen_range(3..=n_max);
    let mode = match family {
        PlanarFamily::Maximal => GeneratorMode::Maximal,
        PlanarFamily::Subsample { p } => GeneratorMode::Subsample { p },
        PlanarFamily::Mixed => {
            if rng.gen_bool(0.5) {
                GeneratorMode::Maximal
            } else {
                GeneratorMode::Subsample {
                    p: rng.gen_range(0.1..0.5),
                }
            }
        }
    };
    let generator = match mode {
        GeneratorMode::Maximal => "maximal-planar".to_string(),
        GeneratorMode::Subsample { p } => format!("planar-subsample(p={p:.4})"),
    };
    let g = generate_planar(n, s, mode)?;
    Ok((
        GraphSource::Generated {
            generator,
            n,
            seed: s,
        },
        g,
    ))
}

/// Checks every enumerated minimum coloring of `g` (up to `cap`) for a
/// complete quotient on exactly `chi` vertices.
pub fn theorem2_instance(
    index: usize,
    source: GraphSource,
    g: Graph,
    cap: usize,
) -> InstanceRecord {
    let t = Instant::now();
    let (chi, witness) = chromatic_number_exact(&g);
    let colorings = enumerate_colorings_with(&g, chi, cap);
    let mut violation = None;
    if !is_proper(&g, &witness).unwrap_or(false) || witness.k() != chi {
        violation = Some(format!(
            "solver witness {:?} is not a proper {chi}-coloring",
            witness.colors()
        ));
    }
    if colorings.is_empty() {
        violation = Some(format!("no proper {chi}-coloring enumerated"));
    }
    for c in &colorings {
        let q = quotient_of(&g, c);
        if q.graph.n() != chi || !is_quotient_complete(&q) {
            violation.get_or_insert(format!(
                "minimum coloring with classes {:?} has quotient {:?}, not K{chi}",
                q.classes,
                q.graph.edges()
            ));
        }
    }
    let witness_quotient = quotient_of(&g, &witness);
    InstanceRecord {
        index,
        source,
        n: g.n(),
        m: g.edge_count(),
        chi,
        colorings_checked: colorings.len(),
        quotient_complete: violation.is_none(),
        quotient_planar: is_planar(&witness_quotient.graph).planar,
        planar_quotient_fraction: None,
        passed: violation.is_none(),
        violation,
        graph: g,
        witness,
        per_coloring: Vec::new(),
        elapsed_ms: elapsed_ms(t),
    }
}

/// C6 split into `{0,3} {1,4} {2,5}`: the quotient is K3 although C6 is
/// 2-colorable.
pub fn c6_non_converse() -> NonConverseWitness {
    let g = Graph::cycle(6).expect("static");
    let coloring = Coloring::new(vec![0, 1, 2, 0, 1, 2]).expect("static");
    let q = quotient_of(&g, &coloring);
    NonConverseWitness {
        name: "C6".into(),
        chi: chromatic_number_exact(&g).0,
        colors_used: coloring.k(),
        quotient_complete: is_quotient_complete(&q),
        classes: q.classes,
        graph: g,
        coloring,
    }
}

/// Random graphs (not necessarily planar): every minimum coloring's quotient
/// must be the complete graph on `chi` vertices.
pub fn verify_theorem2_suite(cfg: &SuiteConfig) -> Result<ExperimentReport> {
    cfg.check()?;
    let records: Vec<InstanceRecord> = (0..cfg.count)
        .into_par_iter()
        .map(|i| {
            let (source, g) = random_instance(i, cfg.seed, cfg.n_max);
            theorem2_instance(i, source, g, cfg.coloring_cap)
        })
        .collect();
    let mut report =
        ExperimentReport::new("theorem2", cfg.seed, cfg.n_max, cfg.coloring_cap, records);
    report.non_converse_witnesses.push(c6_non_converse());
    Ok(report)
}

/// The same check over every named catalog graph.
pub fn verify_theorem2_catalog(cap: usize) -> Result<ExperimentReport> {
    if cap == 0 {
        return Err(Error::Argument("coloring cap must be at least 1".into()));
    }
    let records: Vec<InstanceRecord> = CATALOG
        .par_iter()
        .enumerate()
        .map(|(i, name)| {
            let g = named_graph(name).expect("catalog entry");
            theorem2_instance(
                i,
                GraphSource::Named {
                    name: name.to_string(),
                },
                g,
                cap,
            )
        })
        .collect();
    let n_max = records.iter().map(|r| r.n).max().unwrap_or(0);
    let mut report = ExperimentReport::new("theorem2-catalog", 0, n_max, cap, records);
    report.non_converse_witnesses.push(c6_non_converse());
    Ok(report)
}

fn fct_instance(index: usize, source: GraphSource, g: Graph) -> InstanceRecord {
    let t = Instant::now();
    let mut violation = None;
    if !is_planar(&g).planar {
        violation = Some("instance is not planar".to_string());
    }
    let (chi, witness) = chromatic_number_exact(&g);
    if chi > 4 {
        violation.get_or_insert(format!("planar graph needs {chi} colors"));
    }
    let q = quotient_of(&g, &witness);
    let complete = q.graph.n() == chi && is_quotient_complete(&q);
    let planar = is_planar(&q.graph).planar;
    if !complete {
        violation.get_or_insert(format!(
            "minimum quotient {:?} is not K{chi}",
            q.graph.edges()
        ));
    }
    if !planar {
        violation.get_or_insert(format!("minimum quotient K{chi} is not planar"));
    }
    InstanceRecord {
        index,
        source,
        n: g.n(),
        m: g.edge_count(),
        chi,
        colorings_checked: 1,
        quotient_complete: complete,
        quotient_planar: planar,
        planar_quotient_fraction: None,
        passed: violation.is_none(),
        violation,
        graph: g,
        witness,
        per_coloring: Vec::new(),
        elapsed_ms: elapsed_ms(t),
    }
}

/// Seeded planar graphs must be 4-colorable, and their minimum quotient
/// `K_chi` planar.
pub fn verify_fct_sample(cfg: &SuiteConfig) -> Result<ExperimentReport> {
    cfg.check()?;
    let records: Result<Vec<InstanceRecord>> = (0..cfg.count)
        .into_par_iter()
        .map(|i| {
            let (source, g) = planar_instance(i, cfg.seed, cfg.n_max, cfg.family)?;
            Ok(fct_instance(i, source, g))
        })
        .collect();
    Ok(ExperimentReport::new(
        "fct", cfg.seed, cfg.n_max, 1, records?,
    ))
}

/// Enumerates the minimum colorings of a planar graph (up to `cap`) and
/// records which quotients stay planar. Passes iff at least one does.
pub fn theorem1_instance(
    index: usize,
    source: GraphSource,
    g: Graph,
    cap: usize,
    keep_detail: bool,
) -> Result<InstanceRecord> {
    if g.n() > SUITE_MAX_N {
        return Err(Error::Argument(format!(
            "theorem1 search is limited to {SUITE_MAX_N} vertices, got {}",
            g.n()
        )));
    }
    if cap == 0 {
        return Err(Error::Argument("coloring cap must be at least 1".into()));
    }
    if !is_planar(&g).planar {
        return Err(Error::contract(
            "theorem1 search needs a planar input graph",
        ));
    }
    let t = Instant::now();
    let (chi, witness) = chromatic_number_exact(&g);
    let colorings = enumerate_colorings_with(&g, chi, cap);
    let verdicts: Vec<ColoringVerdict> = colorings
        .iter()
        .map(|c| {
            let q = quotient_of(&g, c);
            ColoringVerdict {
                quotient_complete: q.graph.n() == chi && is_quotient_complete(&q),
                quotient_planar: is_planar(&q.graph).planar,
                classes: q.classes,
            }
        })
        .collect();
    let planar_count = verdicts.iter().filter(|v| v.quotient_planar).count();
    let exists = planar_count > 0;
    let violation = (!exists).then(|| {
        format!(
            "none of {} minimum colorings has a planar quotient",
            verdicts.len()
        )
    });
    Ok(InstanceRecord {
        index,
        source,
        n: g.n(),
        m: g.edge_count(),
        chi,
        colorings_checked: verdicts.len(),
        quotient_complete: verdicts.iter().all(|v| v.quotient_complete),
        quotient_planar: exists,
        planar_quotient_fraction: Some(planar_count as f64 / verdicts.len().max(1) as f64),
        passed: exists,
        violation,
        graph: g,
        witness,
        per_coloring: if keep_detail { verdicts } else { Vec::new() },
        elapsed_ms: elapsed_ms(t),
    })
}

/// Single-graph form: one instance with per-coloring verdicts.
pub fn verify_theorem1_search(
    g: &Graph,
    source: GraphSource,
    cap: usize,
) -> Result<ExperimentReport> {
    let rec = theorem1_instance(0, source, g.clone(), cap, true)?;
    Ok(ExperimentReport::new("theorem1", 0, g.n(), cap, vec![rec]))
}

/// Existence of a planarity-preserving minimum quotient over seeded planar
/// instances.
pub fn verify_theorem1_suite(cfg: &SuiteConfig) -> Result<ExperimentReport> {
    cfg.check()?;
    let records: Result<Vec<InstanceRecord>> = (0..cfg.count)
        .into_par_iter()
        .map(|i| {
            let (source, g) = planar_instance(i, cfg.seed, cfg.n_max, cfg.family)?;
            theorem1_instance(i, source, g, cfg.coloring_cap, false)
        })
        .collect();
    Ok(ExperimentReport::new(
        "theorem1",
        cfg.seed,
        cfg.n_max,
        cfg.coloring_cap,
        records?,
    ))
}

/// Identifies the split pair of split-K5: a planar graph whose single
/// non-adjacent identification produces K5.
pub fn demo_proof_gap() -> GapReport {
    let (base, (u, v)) = split_k5();
    let base_planar = is_planar(&base);
    let pair_adjacent = base.has_edge(u, v);
    let identified = base.identify_vertices(u, v).expect("pair is non-adjacent");
    let identified_planar = is_planar(&identified);
    let identified_complete = identified.is_complete();
    let k5_witness = matches!(&identified_planar.witness, Witness::Minor(_));
    let demonstrated = base_planar.planar
        && !pair_adjacent
        && identified.n() == 5
        && identified.edge_count() == 10
        && identified_complete
        && !identified_planar.planar
        && k5_witness;
    GapReport {
        experiment: "demo-gap".into(),
        artifact_version: ARTIFACT_VERSION.into(),
        base,
        base_planar,
        pair: (u, v),
        pair_adjacent,
        identified,
        identified_complete,
        identified_planar,
        demonstrated,
    }
}
