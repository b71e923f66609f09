//! Reports: per-instance filtration tables with fits and verdicts, and
//! corpus-wide suite runs.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::checks::{
    check_cmvwc_equivalence, check_cover_polarization, check_cover_vs_reg, check_criteria_suite,
    check_edge_persistence, check_oracles, check_polarization, check_polymatroidal_chain,
    check_slope_theorem, check_symbolic_persistence, check_there_exist, check_upper_bounds,
    check_variant_agreement, Filtration, Status, Verdict,
};
use super::corpus::{
    graphs_on, graphs_without_isolated, random_ideals, squarefree_ideals, whiskered_up_to,
    GraphFilter,
};
use super::fit::{first_fit, FitSummary};
use crate::caps::Caps;
use crate::combinatorics::{cover_ideal, graph_edge_ideal, is_polymatroidal, Graph};
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::symbolic::PowerKind;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceRow {
    pub k: u32,
    pub alpha: u64,
    pub v: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reg: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub schema_version: u32,
    pub instance: String,
    pub power: String,
    pub checks: Vec<Verdict>,
    pub sequences: Vec<SequenceRow>,
    pub fit: Option<FitSummary>,
}

impl FiltrationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// `k,alpha,v,reg` rows; `reg` is empty where it was not computed.
    pub fn to_csv(&self) -> String {
        sequence_csv(&self.sequences, &["alpha", "v", "reg"])
    }

    pub fn has_fail(&self) -> bool {
        self.checks.iter().any(Verdict::is_fail)
    }
}

/// CSV of the chosen columns among `alpha`, `v`, `reg`, keyed by `k`.
pub fn sequence_csv(rows: &[SequenceRow], columns: &[&str]) -> String {
    let mut s = String::from("k");
    for c in columns {
        s.push(',');
        s.push_str(c);
    }
    s.push('\n');
    for r in rows {
        s.push_str(&r.k.to_string());
        for c in columns {
            s.push(',');
            match *c {
                "alpha" => s.push_str(&r.alpha.to_string()),
                "v" => s.push_str(&r.v.to_string()),
                "reg" => s.push_str(&r.reg.map(|x| x.to_string()).unwrap_or_default()),
                _ => {}
            }
        }
        s.push('\n');
    }
    s
}

/// Rows `(k, α, v, reg)` of a filtration for `k ≤ K`; `reg` is left out
/// when `with_reg` is false or when it exceeds the caps.
pub fn sequence_rows(
    i: &MonomialIdeal,
    kind: PowerKind,
    max_k: u32,
    with_reg: bool,
    caps: &Caps,
) -> Result<Vec<SequenceRow>> {
    let mut f = Filtration::new(i, kind, caps);
    (1..=max_k)
        .map(|k| {
            let reg = if with_reg {
                match f.reg(k) {
                    Ok(r) => Some(r),
                    Err(Error::Resource(_)) => None,
                    Err(e) => return Err(e),
                }
            } else {
                None
            };
            Ok(SequenceRow {
                k,
                alpha: f.alpha(k)?,
                v: f.v(k)?,
                reg,
            })
        })
        .collect()
}

/// Which ideal of a graph an instance stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealKind {
    Cover,
    Edge,
}

impl FromStr for IdealKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cover" => Ok(IdealKind::Cover),
            "edge" => Ok(IdealKind::Edge),
            other => Err(Error::Domain(format!(
                "unknown ideal kind `{other}` (expected cover or edge)"
            ))),
        }
    }
}

pub fn graph_ideal(g: &Graph, kind: IdealKind) -> Result<MonomialIdeal> {
    match kind {
        IdealKind::Cover => cover_ideal(g),
        IdealKind::Edge => graph_edge_ideal(g),
    }
}

/// Sequence table, fit of the v-sequence and every applicable check for one
/// ideal, optionally coming from a graph.
pub fn ideal_report(
    i: &MonomialIdeal,
    graph: Option<(&Graph, IdealKind)>,
    kind: PowerKind,
    max_k: u32,
    caps: &Caps,
) -> Result<FiltrationReport> {
    let sequences = sequence_rows(i, kind, max_k, true, caps)?;
    let v: Vec<u64> = sequences.iter().map(|r| r.v).collect();
    let fit = first_fit(&v).map(|f| f.summary());
    let mut checks = Vec::new();
    let instance = match graph {
        Some((g, IdealKind::Cover)) => {
            checks.push(check_cover_vs_reg(g, max_k, caps));
            checks.push(check_cmvwc_equivalence(g, max_k, caps));
            checks.push(check_cover_polarization(g, max_k));
            format!("J({g:?})")
        }
        Some((g, IdealKind::Edge)) => {
            checks.extend(check_criteria_suite(i, Some(g), max_k, caps));
            checks.push(check_edge_persistence(g, max_k.max(2)));
            format!("I({g:?})")
        }
        None => {
            if i.is_squarefree() {
                checks.extend(check_criteria_suite(i, None, max_k, caps));
            }
            i.to_string()
        }
    };
    if i.is_squarefree() {
        checks.push(check_slope_theorem(i, max_k, caps));
        checks.push(check_upper_bounds(i, max_k, caps));
        checks.push(check_symbolic_persistence(i, max_k.max(2)));
        checks.push(check_variant_agreement(i, max_k));
    }
    checks.push(check_there_exist(i, kind));
    checks.push(check_polarization(i));
    checks.extend(check_oracles(i, caps));
    Ok(FiltrationReport {
        schema_version: SCHEMA_VERSION,
        instance,
        power: kind.to_string(),
        checks,
        sequences,
        fit,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Cover,
    Cmvwc,
    Slope,
    Bounds,
    Criteria,
    Polymatroidal,
    Persistence,
    Polarization,
    ThereExist,
    Variants,
    Oracles,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Cover,
        Suite::Cmvwc,
        Suite::Slope,
        Suite::Bounds,
        Suite::Criteria,
        Suite::Polymatroidal,
        Suite::Persistence,
        Suite::Polarization,
        Suite::ThereExist,
        Suite::Variants,
        Suite::Oracles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cover => "cover",
            Suite::Cmvwc => "cmvwc",
            Suite::Slope => "slope",
            Suite::Bounds => "bounds",
            Suite::Criteria => "criteria",
            Suite::Polymatroidal => "polymatroidal",
            Suite::Persistence => "persistence",
            Suite::Polarization => "polarization",
            Suite::ThereExist => "there-exist",
            Suite::Variants => "variants",
            Suite::Oracles => "oracles",
        }
    }

    /// Corpus bounds used when none are given.
    pub fn defaults(self) -> SuiteOptions {
        let base = SuiteOptions::default();
        match self {
            Suite::Cover => SuiteOptions {
                n_max: 4,
                max_k: 3,
                ..base
            },
            // Whiskered graphs on six vertices polarize to 18 variables at k = 3.
            Suite::Cmvwc => SuiteOptions {
                n_max: 4,
                max_k: 3,
                caps: Caps {
                    homology_vars: 18,
                    ..Caps::default()
                },
                ..base
            },
            Suite::Slope => SuiteOptions { max_k: 6, ..base },
            Suite::Bounds | Suite::Variants => SuiteOptions { max_k: 4, ..base },
            Suite::Criteria | Suite::Polymatroidal => SuiteOptions { max_k: 3, ..base },
            Suite::Persistence => SuiteOptions {
                n_max: 5,
                max_k: 4,
                ..base
            },
            Suite::Polarization => SuiteOptions {
                n_max: 4,
                max_k: 3,
                ..base
            },
            Suite::ThereExist | Suite::Oracles => base,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite `{s}`")))
    }
}

/// Corpus bounds and window for a suite run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Largest graph vertex count.
    pub n_max: usize,
    pub max_k: u32,
    /// Largest variable count of square-free ideals.
    pub vars: usize,
    /// Largest generator count of square-free ideals.
    pub gens: usize,
    pub seed: u64,
    /// Number of random ideals.
    pub count: usize,
    pub caps: Caps,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            n_max: 5,
            max_k: 3,
            vars: 5,
            gens: 6,
            seed: 0,
            count: 50,
            caps: Caps::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceVerdicts {
    pub instance: String,
    pub checks: Vec<Verdict>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub trend_pass: usize,
    pub inconclusive: usize,
}

impl Tally {
    fn add(&mut self, s: Status) {
        match s {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Skip => self.skip += 1,
            Status::TrendPass => self.trend_pass += 1,
            Status::Inconclusive => self.inconclusive += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: String,
    pub max_k: u32,
    pub instances: Vec<InstanceVerdicts>,
    pub summary: Tally,
}

impl SuiteReport {
    pub fn has_fail(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// `instance,check,status,witness,detail` rows.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("instance,check,status,witness,detail\n");
        for inst in &self.instances {
            for c in &inst.checks {
                let w = c
                    .witness
                    .as_ref()
                    .map(|w| w.to_string())
                    .unwrap_or_default();
                let d = c.detail.clone().unwrap_or_default();
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    csv_field(&inst.instance),
                    c.name,
                    c.status,
                    csv_field(&w),
                    csv_field(&d)
                ));
            }
        }
        s
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

type Job = Box<dyn Fn() -> Vec<Verdict> + Send + Sync>;

fn graph_jobs(
    graphs: Vec<(String, Graph)>,
    run: impl Fn(&Graph) -> Vec<Verdict> + Send + Sync + Clone + 'static,
) -> Vec<(String, Job)> {
    graphs
        .into_iter()
        .map(|(name, g)| {
            let run = run.clone();
            (name, Box::new(move || run(&g)) as Job)
        })
        .collect()
}

fn ideal_jobs(
    ideals: Vec<MonomialIdeal>,
    run: impl Fn(&MonomialIdeal) -> Vec<Verdict> + Send + Sync + Clone + 'static,
) -> Vec<(String, Job)> {
    ideals
        .into_iter()
        .map(|i| {
            let run = run.clone();
            (i.to_string(), Box::new(move || run(&i)) as Job)
        })
        .collect()
}

fn named(graphs: Vec<Graph>, prefix: &str) -> Vec<(String, Graph)> {
    graphs
        .into_iter()
        .map(|g| (format!("{prefix}({g:?})"), g))
        .collect()
}

/// Instances and the checks run on each.
fn jobs(suite: Suite, o: &SuiteOptions) -> Result<Vec<(String, Job)>> {
    let (k, caps) = (o.max_k, o.caps);
    Ok(match suite {
        Suite::Cover => graph_jobs(named(graphs_without_isolated(o.n_max)?, "J"), move |g| {
            vec![check_cover_vs_reg(g, k, &caps)]
        }),
        Suite::Cmvwc => {
            let mut graphs = named(graphs_without_isolated(o.n_max)?, "J");
            graphs.extend(
                whiskered_up_to(3)?
                    .into_iter()
                    .map(|(n, g)| (format!("J({n})"), g)),
            );
            graph_jobs(graphs, move |g| vec![check_cmvwc_equivalence(g, k, &caps)])
        }
        Suite::Slope => ideal_jobs(squarefree_ideals(o.vars, o.gens)?, move |i| {
            vec![check_slope_theorem(i, k, &caps)]
        }),
        Suite::Bounds => ideal_jobs(squarefree_ideals(o.vars, o.gens)?, move |i| {
            vec![check_upper_bounds(i, k, &caps)]
        }),
        Suite::Criteria => {
            let mut out = ideal_jobs(squarefree_ideals(o.vars, o.gens)?, move |i| {
                check_criteria_suite(i, None, k, &caps)
            });
            let mut graphs = Vec::new();
            for n in 2..=o.n_max.min(5) {
                graphs.extend(graphs_on(n, GraphFilter::NoIsolated)?);
            }
            out.extend(graph_jobs(
                named(graphs, "I"),
                move |g| match graph_edge_ideal(g) {
                    Ok(i) => check_criteria_suite(&i, Some(g), k, &caps)
                        .into_iter()
                        .filter(|v| v.name == "bipartite-chordal")
                        .collect(),
                    Err(e) => vec![Verdict::skip("bipartite-chordal", e.to_string())],
                },
            ));
            out
        }
        Suite::Polymatroidal => {
            let ideals: Vec<MonomialIdeal> = squarefree_ideals(o.vars, o.gens)?
                .into_iter()
                .filter(is_polymatroidal)
                .collect();
            ideal_jobs(ideals, move |i| {
                vec![check_polymatroidal_chain(i, k, &caps)]
            })
        }
        Suite::Persistence => {
            let mut out = ideal_jobs(squarefree_ideals(o.vars, o.gens)?, move |i| {
                vec![check_symbolic_persistence(i, k)]
            });
            let mut graphs = Vec::new();
            for n in 2..=o.n_max {
                graphs.extend(graphs_on(n, GraphFilter::NoIsolated)?);
            }
            out.extend(graph_jobs(named(graphs, "I"), move |g| {
                vec![check_edge_persistence(g, k)]
            }));
            out
        }
        Suite::Polarization => {
            let mut out = ideal_jobs(random_ideals(o.seed, o.count, 4, 3, 4)?, |i| {
                vec![check_polarization(i)]
            });
            out.extend(graph_jobs(
                named(graphs_without_isolated(o.n_max)?, "J"),
                move |g| vec![check_cover_polarization(g, k)],
            ));
            out
        }
        Suite::ThereExist => ideal_jobs(squarefree_ideals(o.vars, o.gens)?, |i| {
            vec![check_there_exist(i, PowerKind::SYMBOLIC_MIN)]
        }),
        Suite::Variants => ideal_jobs(squarefree_ideals(o.vars, o.gens)?, move |i| {
            vec![check_variant_agreement(i, k)]
        }),
        Suite::Oracles => {
            let mut ideals = squarefree_ideals(o.vars, o.gens)?;
            ideals.extend(random_ideals(o.seed, o.count, 4, 3, 4)?);
            ideal_jobs(ideals, move |i| check_oracles(i, &caps))
        }
    })
}

/// Runs a suite over its corpus on the current rayon pool. Instances keep
/// their corpus order, so reports are identical across thread counts.
pub fn run_suite(suite: Suite, options: &SuiteOptions) -> Result<SuiteReport> {
    let work = jobs(suite, options)?;
    let instances: Vec<InstanceVerdicts> = work
        .par_iter()
        .map(|(name, job)| InstanceVerdicts {
            instance: name.clone(),
            checks: job(),
        })
        .collect();
    let mut summary = Tally::default();
    for c in instances.iter().flat_map(|i| &i.checks) {
        summary.add(c.status);
    }
    Ok(SuiteReport {
        schema_version: SCHEMA_VERSION,
        suite: suite.name().into(),
        max_k: options.max_k,
        instances,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::ideal;

    #[test]
    fn triangle_report() {
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let r = ideal_report(&tri, None, PowerKind::SYMBOLIC_MIN, 4, &Caps::default()).unwrap();
        assert_eq!(r.sequences.len(), 4);
        assert!(!r.has_fail(), "{:#?}", r.checks);
        let csv = r.to_csv();
        assert_eq!(csv.lines().count(), 5);
        assert!(csv.starts_with("k,alpha,v,reg\n1,2,1,1\n"));
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["schema_version"], 1);
        assert_eq!(json["sequences"][0]["alpha"], 2);
    }

    #[test]
    fn small_cover_suite() {
        let o = SuiteOptions {
            n_max: 3,
            max_k: 2,
            ..SuiteOptions::default()
        };
        let r = run_suite(Suite::Cover, &o).unwrap();
        assert_eq!(r.instances.len(), 1 + 2);
        assert_eq!(r.summary.pass, 3);
        assert_eq!(r, run_suite(Suite::Cover, &o).unwrap());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
