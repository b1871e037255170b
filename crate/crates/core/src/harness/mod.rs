//! Corpus-driven checks of the known inequalities, probes of the open
//! problems, and the report format shared by the CLI.

mod checks;
mod corpus;
mod probe;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{KdmvError, Result};
use crate::graph::{all_pairs_distances, girth, to_graph6, Graph, INF};
use crate::solve::DEFAULT_BUDGET;

pub use corpus::{load_corpus, CorpusItem, MAX_BLOCK_ORDER, MAX_GENERATED_ORDER};
pub use probe::counterexample_search;

use checks::{run_check, Facts};

macro_rules! check_ids {
    ($($id:ident => $statement:literal),* $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
        pub enum CheckId {
            $($id),*
        }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$id),*];

            /// The relation the check tests.
            pub fn statement(self) -> &'static str {
                match self {
                    $(CheckId::$id => $statement),*
                }
            }
        }

        impl fmt::Display for CheckId {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let s = match self {
                    $(CheckId::$id => stringify!($id)),*
                };
                f.write_str(s)
            }
        }

        impl FromStr for CheckId {
            type Err = KdmvError;

            fn from_str(s: &str) -> Result<Self> {
                $(
                    if s.eq_ignore_ascii_case(stringify!($id)) {
                        return Ok(CheckId::$id);
                    }
                )*
                Err(KdmvError::Spec(format!("unknown check {s:?}")))
            }
        }
    };
}

check_ids! {
    ObsChain => "chi_mu = chi_mu_d <= .. <= chi_mu_1 = theta; ceil(n/mu_k) <= chi_mu_k; gamma_k <= chi_mu_k",
    OrderBound => "rho_2 <= chi_mu2 <= ceil(n/2) for connected G",
    GammaTotalUpper => "chi_mu2 <= gamma_t without isolated vertices",
    GirthGammaLower => "chi_mu2 >= gamma when girth >= 7",
    ClosedNbhdLemma => "girth >= 7: optimal classes lie in a closed neighbourhood, in an open one when of size >= 3",
    ThmDis => "girth >= 7, no isolated vertices: theta(G[#2]) = chi_imu2 = gamma_t",
    TriangleFreeDis => "triangle-free, no isolated vertices: theta(G[#2]) <= gamma_t",
    LexicChain => "G connected, n >= 2: chi_mu2(G o H) <= theta(G[#2]) <= theta((G o H)[#2])",
    ThmCon => "min degree >= 2, girth >= 5: chi_mu2(G o H) <= chi_mu2(G)",
    StrongProductBound => "chi_mu_k(G x H) <= chi_mu_k(G) chi_mu_k(H)",
    CartesianLower => "G, H connected: chi_mu2(G box H) >= max(chi_mu2(G) rho_2(H), chi_mu2(H) rho_2(G))",
    QnStructure => "Q_n: 2DMV classes are within a closed neighbourhood or a Q_3 partite set; chi_mu2 <= gamma",
    FormulaAgreement => "closed forms for paths, cycles, P_n x K_m, block graphs and tori equal the exact value",
    ConstructionValidity => "every applicable construction verifies with the promised class count",
    OpenQnEquality => "open: chi_mu2(Q_n) = gamma(Q_n)?",
    OpenCartesianGamma => "open: chi_mu2(G box H) >= max(chi_mu2(G) gamma(H), chi_mu2(H) gamma(G))?",
    OpenBlockTheta => "open: which block graphs have chi_mu2 = theta?",
}

impl CheckId {
    /// Open checks report findings and never fail a suite.
    pub fn is_open(self) -> bool {
        matches!(
            self,
            CheckId::OpenQnEquality | CheckId::OpenCartesianGamma | CheckId::OpenBlockTheta
        )
    }
}

/// Graph properties an instance must have for a check to apply.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub connected: bool,
    pub isolate_free: bool,
    pub min_order: usize,
    pub min_degree: usize,
    pub min_girth: Option<u32>,
    pub block_graph: bool,
    /// `Q_d` with vertex `v` adjacent to `v ^ (1 << i)`.
    pub hypercube: bool,
}

impl Hypothesis {
    pub fn for_check(id: CheckId) -> Self {
        let base = Hypothesis::default();
        let connected = Hypothesis {
            connected: true,
            ..base.clone()
        };
        match id {
            CheckId::ObsChain | CheckId::OrderBound | CheckId::CartesianLower | CheckId::OpenCartesianGamma => {
                connected
            }
            CheckId::GammaTotalUpper => Hypothesis {
                isolate_free: true,
                ..base
            },
            CheckId::GirthGammaLower | CheckId::ClosedNbhdLemma => Hypothesis {
                min_girth: Some(7),
                ..base
            },
            CheckId::ThmDis => Hypothesis {
                min_girth: Some(7),
                isolate_free: true,
                ..base
            },
            CheckId::TriangleFreeDis => Hypothesis {
                min_girth: Some(4),
                isolate_free: true,
                ..base
            },
            CheckId::LexicChain => Hypothesis {
                min_order: 2,
                ..connected
            },
            CheckId::ThmCon => Hypothesis {
                min_degree: 2,
                min_girth: Some(5),
                ..base
            },
            CheckId::QnStructure | CheckId::OpenQnEquality => Hypothesis {
                hypercube: true,
                ..base
            },
            CheckId::OpenBlockTheta => Hypothesis {
                block_graph: true,
                ..base
            },
            CheckId::StrongProductBound | CheckId::FormulaAgreement | CheckId::ConstructionValidity => base,
        }
    }

    /// Reason the graph falls outside the hypothesis, if it does.
    pub(crate) fn violation(&self, facts: &Facts) -> Option<String> {
        let g = facts.graph();
        if g.n() < self.min_order.max(1) {
            return Some(format!("order {} < {}", g.n(), self.min_order.max(1)));
        }
        if self.connected && !g.is_connected() {
            return Some("disconnected".into());
        }
        if self.isolate_free && g.has_isolated_vertex() {
            return Some("has an isolated vertex".into());
        }
        if g.min_degree() < self.min_degree {
            return Some(format!("minimum degree {} < {}", g.min_degree(), self.min_degree));
        }
        if let (Some(need), Some(have)) = (self.min_girth, facts.girth()) {
            if have < need {
                return Some(format!("girth {have} < {need}"));
            }
        }
        if self.block_graph && !facts.is_block_graph() {
            return Some("not a block graph".into());
        }
        if self.hypercube && facts.hypercube_dim().is_none() {
            return Some("not a labelled hypercube".into());
        }
        None
    }
}

/// One check with its hypothesis, `k` range and per-solve budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckSpec {
    pub id: CheckId,
    pub hypothesis: Hypothesis,
    /// Largest `k` tried by `k`-dependent checks (the diameter caps it).
    pub k_max: u32,
    /// Node budget for each exact solve.
    pub budget: u64,
    /// Largest product order the product checks will solve.
    pub product_limit: usize,
}

impl CheckSpec {
    pub fn new(id: CheckId) -> Self {
        CheckSpec {
            id,
            hypothesis: Hypothesis::for_check(id),
            k_max: 4,
            budget: DEFAULT_BUDGET,
            product_limit: 16,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_k_max(mut self, k_max: u32) -> Self {
        self.k_max = k_max;
        self
    }
}

/// Parses a comma-separated list of check ids; `all` selects every check.
pub fn parse_checks(list: &str) -> Result<Vec<CheckId>> {
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(CheckId::ALL.to_vec());
    }
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    SkipHypothesis,
    SkipBudget,
    /// Result of an open check; `holds` says whether the conjectured
    /// relation held on this instance.
    Finding {
        holds: bool,
    },
}

impl Outcome {
    fn label(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::SkipHypothesis => "skip-hypothesis",
            Outcome::SkipBudget => "skip-budget",
            Outcome::Finding { holds: true } => "holds",
            Outcome::Finding { holds: false } => "does-not-hold",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckVerdict {
    pub check: CheckId,
    pub outcome: Outcome,
    pub detail: String,
}

/// Exact values computed for an instance (absent when not applicable or
/// out of budget).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Values {
    pub chi_mu2: Option<usize>,
    pub gamma: Option<usize>,
    pub gamma_t: Option<usize>,
    pub theta_nd2: Option<usize>,
    pub rho2: Option<usize>,
    /// Classes of an optimal 2DMV colouring, as sorted vertex lists.
    pub chi_mu2_classes: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub id: String,
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub girth: Option<u32>,
    /// Absent for disconnected graphs.
    pub diam: Option<u32>,
    pub values: Values,
    pub verdicts: Vec<CheckVerdict>,
    /// Search nodes spent on this instance.
    pub nodes: u64,
}

impl InstanceRecord {
    fn new(id: &str, g: &Graph) -> Self {
        let d = all_pairs_distances(g).diameter();
        InstanceRecord {
            id: id.to_string(),
            graph6: to_graph6(g),
            n: g.n(),
            edges: g.edge_count(),
            girth: girth(g),
            diam: (d < INF).then_some(d),
            values: Values::default(),
            verdicts: Vec::new(),
            nodes: 0,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub instances: usize,
    /// Verdicts that ran to completion (pass, fail or finding).
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped_budget: usize,
    pub skipped_hypothesis: usize,
    pub findings: usize,
    /// Findings where the relation did not hold.
    pub counterexamples: usize,
    /// Completed verdicts per check.
    pub coverage: BTreeMap<CheckId, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub source: String,
    pub checks: Vec<CheckSpec>,
    pub instances: Vec<InstanceRecord>,
    pub summary: Summary,
}

/// Fixed CSV columns.
pub const CSV_HEADER: [&str; 10] = [
    "graph6",
    "n",
    "girth",
    "diam",
    "chi_mu2",
    "gamma",
    "gamma_t",
    "theta_nd2",
    "rho2",
    "verdicts",
];

impl Report {
    fn assemble(source: &str, checks: Vec<CheckSpec>, instances: Vec<InstanceRecord>) -> Self {
        let mut s = Summary {
            instances: instances.len(),
            ..Summary::default()
        };
        for v in instances.iter().flat_map(|r| &r.verdicts) {
            match v.outcome {
                Outcome::Pass => s.passed += 1,
                Outcome::Fail => s.failed += 1,
                Outcome::SkipBudget => s.skipped_budget += 1,
                Outcome::SkipHypothesis => s.skipped_hypothesis += 1,
                Outcome::Finding { holds } => {
                    s.findings += 1;
                    s.counterexamples += usize::from(!holds);
                }
            }
            if matches!(v.outcome, Outcome::Pass | Outcome::Fail | Outcome::Finding { .. }) {
                s.checked += 1;
                *s.coverage.entry(v.check).or_default() += 1;
            }
        }
        Report {
            source: source.to_string(),
            checks,
            instances,
            summary: s,
        }
    }

    /// No failed verdicts (open checks never fail).
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> Result<String> {
        let io = |e: csv::Error| KdmvError::Io(e.to_string());
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER).map_err(io)?;
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        for r in &self.instances {
            let verdicts: Vec<String> = r
                .verdicts
                .iter()
                .map(|v| format!("{}={}", v.check, v.outcome.label()))
                .collect();
            w.write_record([
                r.graph6.clone(),
                r.n.to_string(),
                r.girth.map(|x| x.to_string()).unwrap_or_else(|| "inf".into()),
                r.diam.map(|x| x.to_string()).unwrap_or_default(),
                opt(r.values.chi_mu2),
                opt(r.values.gamma),
                opt(r.values.gamma_t),
                opt(r.values.theta_nd2),
                opt(r.values.rho2),
                verdicts.join(";"),
            ])
            .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| KdmvError::Io(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv is utf-8"))
    }
}

/// Runs every check on every corpus instance. Instances are solved in
/// parallel; the report keeps corpus order.
pub fn run_suite(source: &str, corpus: &[CorpusItem], checks: &[CheckSpec]) -> Report {
    let budget = checks.iter().map(|c| c.budget).max().unwrap_or(DEFAULT_BUDGET);
    let instances = corpus
        .par_iter()
        .map(|item| {
            let facts = Facts::new(&item.graph, &item.spec, budget);
            let mut record = InstanceRecord::new(&item.id, &item.graph);
            record.verdicts = checks.iter().map(|spec| run_check(&facts, spec)).collect();
            record.values = facts.values();
            record.nodes = facts.nodes();
            record
        })
        .collect();
    Report::assemble(source, checks.to_vec(), instances)
}
