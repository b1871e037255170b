use std::cell::{Cell, OnceCell, RefCell};
use std::collections::BTreeMap;

use super::{CheckId, CheckSpec, CheckVerdict, Outcome, Values};
use crate::bitset::VertexSet;
use crate::chromatic::{chi_i_mu2_exact, chi_mu_k_exact, clique_cover_theta, Coloring};
use crate::constructions::{
    block_graph_coloring, cartesian_corona_c4_coloring, color_cycle, color_path, color_strong_path_complete,
    formula_chi_mu_k, hypercube_neighborhood_coloring, lex_coloring_from_2dmv, lex_coloring_from_i2dmv,
    product_coloring_strong, torus_eod_coloring, tree_half_coloring,
};
use crate::domination::{
    gamma_exact, gamma_k_exact, gamma_t_exact, neighborhood_i2dmv_partition, rho2_exact, total_dom_partition,
};
use crate::error::KdmvError;
use crate::graph::{
    all_pairs_distances, blocks, center_info, exact_distance_graph, generate, girth, product, DistanceMatrix,
    FamilySpec, Graph, ProductKind, INF,
};
use crate::solve::SolveResult;
use crate::visibility::{classify_q_n_diam2_set, max_kdmv, QnDiam2Class};

/// Why a check did not produce a verdict.
pub(crate) enum Stop {
    Budget(String),
    Hypothesis(String),
    Error(KdmvError),
}

impl Stop {
    pub fn describe(&self) -> String {
        match self {
            Stop::Budget(d) | Stop::Hypothesis(d) => d.clone(),
            Stop::Error(e) => e.to_string(),
        }
    }
}

impl From<KdmvError> for Stop {
    fn from(e: KdmvError) -> Self {
        Stop::Error(e)
    }
}

pub(crate) enum Done {
    Pass(String),
    Fail(String),
    Finding(bool, String),
}

type Step<T> = Result<T, Stop>;

fn exact<W: Clone>(what: &str, r: &SolveResult<W>) -> Step<(usize, W)> {
    match r.status {
        crate::solve::Status::Exact => Ok((r.value, r.witness.clone())),
        crate::solve::Status::BoundsOnly { lower, upper } => Err(Stop::Budget(format!(
            "{what}: only {lower} <= . <= {upper} within budget"
        ))),
    }
}

/// Lazily computed exact invariants of one graph.
pub(crate) struct Facts<'a> {
    g: &'a Graph,
    spec: &'a FamilySpec,
    budget: u64,
    nodes: Cell<u64>,
    dm: DistanceMatrix,
    girth: Option<u32>,
    block_graph: OnceCell<bool>,
    chi: RefCell<BTreeMap<u32, SolveResult<Coloring>>>,
    gamma: OnceCell<SolveResult<VertexSet>>,
    gamma_t: OnceCell<Option<SolveResult<VertexSet>>>,
    theta: OnceCell<SolveResult<Coloring>>,
    theta_nd2: OnceCell<SolveResult<Coloring>>,
    rho2: OnceCell<SolveResult<VertexSet>>,
}

impl<'a> Facts<'a> {
    pub fn new(g: &'a Graph, spec: &'a FamilySpec, budget: u64) -> Self {
        Facts {
            g,
            spec,
            budget,
            nodes: Cell::new(0),
            dm: all_pairs_distances(g),
            girth: girth(g),
            block_graph: OnceCell::new(),
            chi: RefCell::new(BTreeMap::new()),
            gamma: OnceCell::new(),
            gamma_t: OnceCell::new(),
            theta: OnceCell::new(),
            theta_nd2: OnceCell::new(),
            rho2: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn girth(&self) -> Option<u32> {
        self.girth
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.get()
    }

    fn charge<W>(&self, r: &SolveResult<W>) {
        self.nodes.set(self.nodes.get() + r.nodes);
    }

    /// Finite diameter, or a hypothesis stop for disconnected graphs.
    fn diam(&self) -> Step<u32> {
        let d = self.dm.diameter();
        if d >= INF {
            return Err(Stop::Hypothesis("disconnected".into()));
        }
        Ok(d)
    }

    pub fn is_block_graph(&self) -> bool {
        *self
            .block_graph
            .get_or_init(|| self.g.is_connected() && blocks(self.g).map(|b| b.is_block_graph).unwrap_or(false))
    }

    /// `d` when the graph is `Q_d` with the bit-string labelling.
    pub fn hypercube_dim(&self) -> Option<usize> {
        let n = self.g.n();
        if n < 2 || !n.is_power_of_two() {
            return None;
        }
        let d = n.trailing_zeros() as usize;
        (0..n)
            .all(|v| *self.g.adj(v) == (0..d).map(|i| v ^ (1 << i)).collect::<VertexSet>())
            .then_some(d)
    }

    fn chi(&self, k: u32) -> Step<(usize, Coloring)> {
        if let Some(r) = self.chi.borrow().get(&k) {
            return exact(&format!("chi_mu{k}"), r);
        }
        let r = chi_mu_k_exact(self.g, k, self.budget)?;
        self.charge(&r);
        let out = exact(&format!("chi_mu{k}"), &r);
        self.chi.borrow_mut().insert(k, r);
        out
    }

    fn mu(&self, k: u32) -> Step<usize> {
        let r = max_kdmv(self.g, k, self.budget);
        self.charge(&r);
        Ok(exact(&format!("mu_{k}"), &r)?.0)
    }

    fn gamma_k(&self, k: u32) -> Step<usize> {
        let r = gamma_k_exact(self.g, k, self.budget)?;
        self.charge(&r);
        Ok(exact(&format!("gamma_{k}"), &r)?.0)
    }

    fn gamma(&self) -> Step<(usize, VertexSet)> {
        let r = self.gamma.get_or_init(|| {
            let r = gamma_exact(self.g, self.budget);
            self.charge(&r);
            r
        });
        exact("gamma", r)
    }

    fn gamma_t(&self) -> Step<(usize, VertexSet)> {
        let r = self.gamma_t.get_or_init(|| {
            let r = gamma_t_exact(self.g, self.budget).ok()?;
            self.charge(&r);
            Some(r)
        });
        match r {
            Some(r) => exact("gamma_t", r),
            None => Err(Stop::Hypothesis("has an isolated vertex".into())),
        }
    }

    fn theta(&self) -> Step<usize> {
        let r = self.theta.get_or_init(|| {
            let r = clique_cover_theta(self.g, self.budget).expect("clique cover accepts any graph");
            self.charge(&r);
            r
        });
        Ok(exact("theta", r)?.0)
    }

    fn theta_nd2(&self) -> Step<(usize, Coloring)> {
        let r = self.theta_nd2.get_or_init(|| {
            let r = clique_cover_theta(&exact_distance_graph(self.g, 2), self.budget)
                .expect("clique cover accepts any graph");
            self.charge(&r);
            r
        });
        exact("theta(G[#2])", r)
    }

    fn rho2(&self) -> Step<usize> {
        let r = self.rho2.get_or_init(|| {
            let r = rho2_exact(self.g, self.budget);
            self.charge(&r);
            r
        });
        Ok(exact("rho_2", r)?.0)
    }

    pub fn chi_and_gamma(&self) -> std::result::Result<(usize, usize), String> {
        let c = self.chi(2).map_err(|s| s.describe())?.0;
        let g = self.gamma().map_err(|s| s.describe())?.0;
        Ok((c, g))
    }

    /// Headline values for the report, computing any that are missing.
    pub fn values(&self) -> Values {
        let ok = |s: Step<usize>| s.ok();
        Values {
            chi_mu2: ok(self.chi(2).map(|x| x.0)),
            gamma: ok(self.gamma().map(|x| x.0)),
            gamma_t: ok(self.gamma_t().map(|x| x.0)),
            theta_nd2: ok(self.theta_nd2().map(|x| x.0)),
            rho2: ok(self.rho2()),
            chi_mu2_classes: self.chi(2).ok().map(|(_, c)| c.class_lists()),
        }
    }

    /// `k` values `1..=k_max`, capped at the diameter (at least 1).
    fn k_range(&self, k_max: u32) -> Step<Vec<u32>> {
        let d = self.diam()?.max(1);
        Ok((1..=k_max.min(d)).collect())
    }
}

pub(crate) fn run_check(facts: &Facts, spec: &CheckSpec) -> CheckVerdict {
    let verdict = |outcome, detail: String| CheckVerdict {
        check: spec.id,
        outcome,
        detail,
    };
    if let Some(why) = spec.hypothesis.violation(facts) {
        return verdict(Outcome::SkipHypothesis, why);
    }
    match evaluate(facts, spec) {
        Ok(Done::Pass(d)) => verdict(Outcome::Pass, d),
        Ok(Done::Fail(d)) => verdict(
            if spec.id.is_open() {
                Outcome::Finding { holds: false }
            } else {
                Outcome::Fail
            },
            d,
        ),
        Ok(Done::Finding(holds, d)) => verdict(Outcome::Finding { holds }, d),
        Err(Stop::Budget(d)) => verdict(Outcome::SkipBudget, d),
        Err(Stop::Hypothesis(d)) => verdict(Outcome::SkipHypothesis, d),
        Err(Stop::Error(e)) => verdict(Outcome::Fail, e.to_string()),
    }
}

/// Collects failed conditions; passes when none failed.
#[derive(Default)]
struct Tally {
    checked: Vec<String>,
    failed: Vec<String>,
}

impl Tally {
    fn expect(&mut self, ok: bool, what: String) {
        if ok {
            self.checked.push(what);
        } else {
            self.failed.push(what);
        }
    }

    fn done(self) -> Step<Done> {
        if !self.failed.is_empty() {
            return Ok(Done::Fail(self.failed.join("; ")));
        }
        if self.checked.is_empty() {
            return Err(Stop::Hypothesis("nothing applicable".into()));
        }
        Ok(Done::Pass(self.checked.join("; ")))
    }
}

fn factor(s: &str) -> Graph {
    generate(&s.parse().expect("valid factor spec")).expect("small factor")
}

/// Second factors for the product checks.
const LEX_FACTORS: [&str; 3] = ["complete:2", "empty:2", "path:3"];
const CONNECTED_FACTORS: [&str; 2] = ["complete:2", "path:3"];

fn factors<'s>(facts: &Facts, spec: &CheckSpec, list: &[&'s str]) -> Step<Vec<(&'s str, Graph)>> {
    let n = facts.graph().n();
    let fs: Vec<(&str, Graph)> = list
        .iter()
        .map(|s| (*s, factor(s)))
        .filter(|(_, h)| n * h.n() <= spec.product_limit)
        .collect();
    if fs.is_empty() {
        return Err(Stop::Hypothesis(format!(
            "products exceed {} vertices",
            spec.product_limit
        )));
    }
    Ok(fs)
}

fn evaluate(facts: &Facts, spec: &CheckSpec) -> Step<Done> {
    let g = facts.graph();
    let n = g.n();
    let mut t = Tally::default();
    match spec.id {
        CheckId::ObsChain => {
            let d = facts.diam()?;
            let ks = facts.k_range(spec.k_max)?;
            let theta = facts.theta()?;
            let chis: Vec<usize> = ks.iter().map(|&k| facts.chi(k).map(|x| x.0)).collect::<Step<_>>()?;
            t.expect(chis[0] == theta, format!("chi_mu1 = {} vs theta = {theta}", chis[0]));
            for (i, &k) in ks.iter().enumerate() {
                if i + 1 < ks.len() {
                    t.expect(
                        chis[i + 1] <= chis[i],
                        format!("chi_mu{} = {} <= chi_mu{k} = {}", k + 1, chis[i + 1], chis[i]),
                    );
                }
                let mu = facts.mu(k)?;
                t.expect(
                    n.div_ceil(mu) <= chis[i],
                    format!("ceil({n}/{mu}) <= chi_mu{k} = {}", chis[i]),
                );
                let gk = facts.gamma_k(k)?;
                t.expect(gk <= chis[i], format!("gamma_{k} = {gk} <= chi_mu{k}"));
            }
            if ks.last() == Some(&d.max(1)) {
                let (mv, _) = facts.chi(u32::MAX / 8)?;
                t.expect(
                    mv == chis[chis.len() - 1],
                    format!("chi_mu = {mv} = chi_mu{}", d.max(1)),
                );
            }
        }
        CheckId::OrderBound => {
            let (c, _) = facts.chi(2)?;
            let rho = facts.rho2()?;
            t.expect(c <= n.div_ceil(2), format!("chi_mu2 = {c} <= ceil({n}/2)"));
            t.expect(rho <= c, format!("rho_2 = {rho} <= chi_mu2 = {c}"));
        }
        CheckId::GammaTotalUpper => {
            let (c, _) = facts.chi(2)?;
            let (gt, d) = facts.gamma_t()?;
            t.expect(c <= gt, format!("chi_mu2 = {c} <= gamma_t = {gt}"));
            let parts = total_dom_partition(g, &d.to_vec())?;
            t.expect(
                parts.num_classes() <= gt,
                format!("partition from gamma_t-set has {} classes", parts.num_classes()),
            );
        }
        CheckId::GirthGammaLower => {
            let (c, _) = facts.chi(2)?;
            let (gm, _) = facts.gamma()?;
            t.expect(c >= gm, format!("chi_mu2 = {c} >= gamma = {gm}"));
        }
        CheckId::ClosedNbhdLemma => {
            let (_, col) = facts.chi(2)?;
            for class in col.classes() {
                let closed = (0..n).any(|v| class.is_subset(&g.closed_nbhd(v)));
                t.expect(closed, format!("class {:?} in a closed neighbourhood", class.to_vec()));
                if class.len() >= 3 {
                    let open = (0..n).any(|v| class.is_subset(g.adj(v)));
                    t.expect(open, format!("class {:?} in an open neighbourhood", class.to_vec()));
                }
            }
        }
        CheckId::ThmDis => {
            let (th, _) = facts.theta_nd2()?;
            let r = chi_i_mu2_exact(g, facts.budget)?;
            facts.charge(&r);
            let (ci, _) = exact("chi_imu2", &r)?;
            let (gt, d) = facts.gamma_t()?;
            t.expect(
                th == ci && ci == gt,
                format!("theta(G[#2]) = {th}, chi_imu2 = {ci}, gamma_t = {gt}"),
            );
            let parts = neighborhood_i2dmv_partition(g, &d.to_vec())?;
            t.expect(
                parts.num_classes() == gt,
                format!("I2DMV partition has {} classes", parts.num_classes()),
            );
        }
        CheckId::TriangleFreeDis => {
            let (th, _) = facts.theta_nd2()?;
            let (gt, _) = facts.gamma_t()?;
            t.expect(th <= gt, format!("theta(G[#2]) = {th} <= gamma_t = {gt}"));
        }
        CheckId::LexicChain => {
            let (th, cover) = facts.theta_nd2()?;
            for (name, h) in factors(facts, spec, &LEX_FACTORS)? {
                let p = product(ProductKind::Lex, g, &h)?;
                let pf = Facts::new(&p, facts.spec, facts.budget);
                let (cp, _) = pf.chi(2)?;
                let (thp, _) = pf.theta_nd2()?;
                facts.nodes.set(facts.nodes() + pf.nodes());
                t.expect(cp <= th && th <= thp, format!("H = {name}: {cp} <= {th} <= {thp}"));
                let lifted = lex_coloring_from_i2dmv(g, &cover, &h)?;
                t.expect(
                    lifted.num_classes() == th,
                    format!("H = {name}: lifted cover has {} classes", lifted.num_classes()),
                );
            }
        }
        CheckId::ThmCon => {
            let (c, col) = facts.chi(2)?;
            for (name, h) in factors(facts, spec, &LEX_FACTORS)? {
                let p = product(ProductKind::Lex, g, &h)?;
                let pf = Facts::new(&p, facts.spec, facts.budget);
                let (cp, _) = pf.chi(2)?;
                facts.nodes.set(facts.nodes() + pf.nodes());
                t.expect(cp <= c, format!("H = {name}: chi_mu2(G o H) = {cp} <= {c}"));
                let lifted = lex_coloring_from_2dmv(g, &col, &h)?;
                t.expect(
                    lifted.num_classes() == c,
                    format!("H = {name}: lifted colouring has {} classes", lifted.num_classes()),
                );
            }
        }
        CheckId::StrongProductBound => {
            for (name, h) in factors(facts, spec, &CONNECTED_FACTORS)? {
                let p = product(ProductKind::Strong, g, &h)?;
                let hspec = FamilySpec::EmptyGraph(1);
                let hf = Facts::new(&h, &hspec, facts.budget);
                let pf = Facts::new(&p, facts.spec, facts.budget);
                for k in 1..=spec.k_max.min(3) {
                    let (cg, wg) = facts.chi(k)?;
                    let (ch, wh) = hf.chi(k)?;
                    let (cp, _) = pf.chi(k)?;
                    t.expect(cp <= cg * ch, format!("H = {name}, k = {k}: {cp} <= {cg} * {ch}"));
                    let built = product_coloring_strong(g, &wg, &h, &wh, k)?;
                    t.expect(
                        built.num_classes() == cg * ch,
                        format!("H = {name}, k = {k}: product classes verify"),
                    );
                }
                facts.nodes.set(facts.nodes() + pf.nodes() + hf.nodes());
            }
        }
        CheckId::CartesianLower => {
            let (c, _) = facts.chi(2)?;
            let rho = facts.rho2()?;
            for (name, h) in factors(facts, spec, &CONNECTED_FACTORS)? {
                let p = product(ProductKind::Cartesian, g, &h)?;
                let hspec = FamilySpec::EmptyGraph(1);
                let hf = Facts::new(&h, &hspec, facts.budget);
                let pf = Facts::new(&p, facts.spec, facts.budget);
                let (ch, _) = hf.chi(2)?;
                let rh = hf.rho2()?;
                let (cp, _) = pf.chi(2)?;
                facts.nodes.set(facts.nodes() + pf.nodes() + hf.nodes());
                let bound = (c * rh).max(ch * rho);
                t.expect(cp >= bound, format!("H = {name}: chi_mu2(G box H) = {cp} >= {bound}"));
            }
        }
        CheckId::QnStructure => {
            let d = facts.hypercube_dim().expect("hypothesis checked");
            let (c, col) = facts.chi(2)?;
            for class in col.classes() {
                let kind = classify_q_n_diam2_set(d, &class)?;
                t.expect(
                    !matches!(kind, QnDiam2Class::NotDiam2 | QnDiam2Class::Square),
                    format!("class {:?} is {kind:?}", class.to_vec()),
                );
            }
            let (gm, dom) = facts.gamma()?;
            t.expect(c <= gm, format!("chi_mu2 = {c} <= gamma = {gm}"));
            let nb = hypercube_neighborhood_coloring(d, &dom.to_vec())?;
            t.expect(
                nb.num_classes() <= gm,
                format!("neighbourhood colouring has {} classes", nb.num_classes()),
            );
            if d <= 4 {
                let bad = classifier_errors(g, &facts.dm, d)?;
                t.expect(bad == 0, format!("classifier exhaustive on Q_{d}: {bad} errors"));
            }
        }
        CheckId::FormulaAgreement => {
            let d = facts.diam()?.max(1);
            let mut ks: Vec<u32> = (1..=spec.k_max).collect();
            ks.push(d);
            ks.dedup();
            for k in ks {
                if let Some(f) = formula_chi_mu_k(facts.spec, k) {
                    let (c, _) = facts.chi(k)?;
                    t.expect(c == f, format!("k = {k}: formula {f}, exact {c}"));
                }
            }
            if t.checked.is_empty() && t.failed.is_empty() {
                return Err(Stop::Hypothesis("no closed form applies".into()));
            }
        }
        CheckId::ConstructionValidity => constructions(facts, spec, &mut t)?,
        CheckId::OpenQnEquality => {
            let (c, _) = facts.chi(2)?;
            let (gm, _) = facts.gamma()?;
            return Ok(Done::Finding(c == gm, format!("chi_mu2 = {c}, gamma = {gm}")));
        }
        CheckId::OpenCartesianGamma => {
            let (c, _) = facts.chi(2)?;
            let (gm, _) = facts.gamma()?;
            let mut holds = true;
            let mut notes = Vec::new();
            for (name, h) in factors(facts, spec, &CONNECTED_FACTORS)? {
                let (ok, note) = cartesian_gamma(c, gm, &h, g, facts.budget)?;
                holds &= ok;
                notes.push(format!("H = {name}: {note}"));
            }
            return Ok(Done::Finding(holds, notes.join("; ")));
        }
        CheckId::OpenBlockTheta => {
            let (c, _) = facts.chi(2)?;
            let th = facts.theta()?;
            return Ok(Done::Finding(c == th, format!("chi_mu2 = {c}, theta = {th}")));
        }
    }
    t.done()
}

/// Whether `chi_mu2(G box H) >= max(chi_mu2(G) gamma(H), chi_mu2(H) gamma(G))`,
/// given `chi_mu2(G)` and `gamma(G)`.
pub(crate) fn cartesian_gamma(chi_g: usize, gamma_g: usize, h: &Graph, g: &Graph, budget: u64) -> Step<(bool, String)> {
    let hspec = FamilySpec::EmptyGraph(1);
    let hf = Facts::new(h, &hspec, budget);
    let (ch, _) = hf.chi(2)?;
    let (gh, _) = hf.gamma()?;
    let p = product(ProductKind::Cartesian, g, h)?;
    let pf = Facts::new(&p, &hspec, budget);
    let (cp, _) = pf.chi(2)?;
    let bound = (chi_g * gh).max(ch * gamma_g);
    Ok((cp >= bound, format!("chi_mu2(G box H) = {cp}, bound {bound}")))
}

/// Subsets of `Q_d` the classifier gets wrong.
fn classifier_errors(g: &Graph, dm: &DistanceMatrix, d: usize) -> Step<usize> {
    let n = g.n();
    let mut bad = 0;
    for mask in 1u64..(1u64 << n) {
        let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let diam2 = s.iter().all(|u| s.iter().all(|v| dm.get(u, v) <= 2));
        let ok = match classify_q_n_diam2_set(d, &s)? {
            QnDiam2Class::NotDiam2 => !diam2,
            QnDiam2Class::WithinClosedNeighborhood(v) => diam2 && s.is_subset(&g.closed_nbhd(v)),
            QnDiam2Class::Square => diam2 && s.len() == 4 && s.iter().all(|v| (*g.adj(v) & s).len() == 2),
            QnDiam2Class::Q3PartiteSet => {
                diam2
                    && s.len() == 4
                    && s.iter().all(|u| s.iter().all(|v| u == v || dm.get(u, v) == 2))
                    && !(0..n).any(|v| s.is_subset(&g.closed_nbhd(v)))
            }
        };
        bad += usize::from(!ok);
    }
    Ok(bad)
}

fn constructions(facts: &Facts, spec: &CheckSpec, t: &mut Tally) -> Step<()> {
    let g = facts.graph();
    let n = g.n();
    if g.is_connected() {
        let c = tree_half_coloring(g)?;
        t.expect(
            c.num_classes() <= n.div_ceil(2),
            format!("spanning-tree peeling: {} classes", c.num_classes()),
        );
    }
    if !g.has_isolated_vertex() {
        let (gt, d) = facts.gamma_t()?;
        let c = total_dom_partition(g, &d.to_vec())?;
        t.expect(
            c.num_classes() <= gt,
            format!("gamma_t partition: {} classes", c.num_classes()),
        );
        if facts.girth().is_none_or(|x| x >= 7) {
            let c = neighborhood_i2dmv_partition(g, &d.to_vec())?;
            t.expect(
                c.num_classes() == gt,
                format!("I2DMV partition: {} classes", c.num_classes()),
            );
        }
    }
    if facts.is_block_graph() {
        let info = center_info(g, &facts.dm)?;
        let d = info.diameter;
        if d >= 2 {
            let target = (d as usize + 1).div_ceil(2);
            let condition = info.deg_star <= target;
            let (c, _) = facts.chi(d - 1)?;
            t.expect(
                (c == target) == condition,
                format!("chi_mu{} = {c}, target {target}, deg* = {}", d - 1, info.deg_star),
            );
            match block_graph_coloring(g) {
                Ok(col) => t.expect(
                    condition && col.num_classes() == target,
                    format!("level colouring: {} classes", col.num_classes()),
                ),
                Err(KdmvError::Condition(_)) => t.expect(!condition, "level colouring refused".into()),
                Err(e) => return Err(e.into()),
            }
        }
    }
    match facts.spec {
        FamilySpec::Path(len) => {
            for k in 1..=spec.k_max {
                let c = color_path(*len, k)?;
                t.expect(c.num_classes() == len.div_ceil(2), format!("path pairs, k = {k}"));
            }
        }
        FamilySpec::Cycle(len) => {
            for k in 1..=spec.k_max {
                let c = color_cycle(*len, k)?;
                let want = formula_chi_mu_k(facts.spec, k).unwrap_or(0);
                t.expect(
                    c.num_classes() == want,
                    format!("cycle scheme, k = {k}: {} classes", c.num_classes()),
                );
            }
        }
        FamilySpec::Strong(a, b) => {
            if let (FamilySpec::Path(pn), FamilySpec::Complete(m)) = (a.as_ref(), b.as_ref()) {
                for k in 2..=spec.k_max.min(pn.saturating_sub(2) as u32) {
                    if *pn >= 4 && *m >= 2 {
                        let c = color_strong_path_complete(*pn, *m, k)?;
                        t.expect(
                            true,
                            format!("strong block scheme, k = {k}: {} classes", c.num_classes()),
                        );
                    }
                }
            }
        }
        FamilySpec::Cartesian(a, b) => match (a.as_ref(), b.as_ref()) {
            (FamilySpec::Cycle(p), FamilySpec::Cycle(q)) if p % 4 == 0 && q % 4 == 0 => {
                let c = torus_eod_coloring(*p, *q)?;
                t.expect(
                    c.num_classes() == p * q / 4,
                    format!("torus: {} classes", c.num_classes()),
                );
            }
            (FamilySpec::Corona(inner), FamilySpec::Cycle(4)) => {
                let base = generate(inner)?;
                match cartesian_corona_c4_coloring(&base) {
                    Ok(c) => t.expect(
                        c.num_classes() == 2 * base.n(),
                        format!("corona copies: {} classes", c.num_classes()),
                    ),
                    Err(KdmvError::Domain(_)) => {}
                    Err(e) => return Err(e.into()),
                }
            }
            _ => {}
        },
        FamilySpec::Hypercube(d) => {
            let (gm, dom) = facts.gamma()?;
            let c = hypercube_neighborhood_coloring(*d, &dom.to_vec())?;
            t.expect(
                c.num_classes() <= gm,
                format!("neighbourhoods: {} classes", c.num_classes()),
            );
        }
        _ => {}
    }
    Ok(())
}
