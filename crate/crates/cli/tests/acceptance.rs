//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines always show; exits nonzero on any FAIL.
//!
//! Independent checks (bitmask brute force over vertex subsets) live here
//! rather than in the library.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::Rng as _;
use serde_json::Value;
use sparselab_core::analysis::{branching_root, g_of_lambda};
use sparselab_core::generate::{gnp, gnp_bounded, rng};
use sparselab_core::reductions::{
    ds_to_setcover, mmvc_from_is, vc_to_ds, vc_to_fas, vc_to_fvs, vc_to_ids, Origin,
};
use sparselab_core::sparsify::{
    approx_is_kstep, excavate, kstep_sparsify, param_is_excavation, ExactSubsolver,
};
use sparselab_core::{
    lift_solution, solve_exact, superlinear_sparsify, validate, Candidate, Graph, Instance, Mode,
    OracleBudget, Problem, Reduction, SetSystem, Step, ThresholdPolicy, Transfer,
};

// ---------------------------------------------------------------- harness

struct Verdict {
    ok: bool,
    detail: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict {
            ok: true,
            detail: Vec::new(),
        }
    }

    fn fail(&mut self, msg: impl Into<String>) {
        self.ok = false;
        self.detail.push(msg.into());
    }

    fn note(&mut self, msg: impl Into<String>) {
        self.detail.push(msg.into());
    }
}

/// Count of failures for one named check plus its first counterexample.
struct Tally {
    name: String,
    checked: usize,
    failed: usize,
    first: Option<String>,
}

impl Tally {
    fn new(name: impl Into<String>) -> Self {
        Tally {
            name: name.into(),
            checked: 0,
            failed: 0,
            first: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }

    fn report(&self, v: &mut Verdict) {
        let line = format!(
            "{}: {} checked, {} failed",
            self.name, self.checked, self.failed
        );
        if self.failed == 0 {
            v.note(line);
        } else {
            v.fail(format!(
                "{line}; first: {}",
                self.first.as_deref().unwrap_or("")
            ));
        }
    }
}

fn budget() -> OracleBudget {
    OracleBudget::default()
}

fn oracle(problem: Problem, instance: &Instance) -> Candidate {
    solve_exact(problem, instance, &budget())
        .unwrap_or_else(|e| panic!("{problem} oracle failed: {e}"))
}

fn edges_of(g: &Graph) -> String {
    format!("n={} edges={:?}", g.n(), g.edges().collect::<Vec<_>>())
}

// ------------------------------------------------------- brute force

fn adjacency(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

fn bits(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn independent(adj: &[u32], mask: u32) -> bool {
    bits(mask, adj.len()).iter().all(|&v| adj[v] & mask == 0)
}

fn covers(g: &Graph, mask: u32) -> bool {
    g.edges()
        .all(|(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
}

fn dominates(adj: &[u32], mask: u32) -> bool {
    (0..adj.len()).all(|v| mask >> v & 1 == 1 || adj[v] & mask != 0)
}

/// Independence number by scanning every vertex subset.
fn brute_alpha(g: &Graph) -> usize {
    let adj = adjacency(g);
    (0u32..1 << g.n())
        .filter(|&m| independent(&adj, m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn strip_isolated(g: &Graph) -> Graph {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    g.induced_subgraph(&keep).unwrap()
}

// ------------------------------------------------------------ corpora

/// Criteria 3 and 4: 200 graphs, n in 2..=10, p alternating 0.2 / 0.5.
fn reduction_corpus() -> Vec<Graph> {
    (0..200u64)
        .map(|i| {
            let mut r = rng(0x5eed_0003 + i);
            let n = r.random_range(2..=10);
            let p = if i % 2 == 0 { 0.2 } else { 0.5 };
            gnp(n, p, &mut r)
        })
        .collect()
}

/// Criteria 5 and 6: 100 graphs, n in 4..=16.
fn sparsify_corpus() -> Vec<Graph> {
    (0..100u64)
        .map(|i| {
            let mut r = rng(0x5eed_0005 + i);
            let n = r.random_range(4..=16);
            let p = [0.2, 0.35, 0.5][i as usize % 3];
            gnp(n, p, &mut r)
        })
        .collect()
}

// ----------------------------------------------------------- criteria

fn criterion_1() -> Verdict {
    let mut v = Verdict::new();
    let out = Command::new(env!("CARGO_BIN_EXE_sparselab"))
        .args(["--json", "analyze", "tables"])
        .output()
        .unwrap();
    if !out.status.success() {
        v.fail("analyze tables exited with an error");
        return v;
    }
    let t: Value = serde_json::from_slice(&out.stdout).unwrap();
    for (row, (lambda, mu)) in
        t["mu"]
            .as_array()
            .unwrap()
            .iter()
            .zip([(1.1, 1.0073), (1.18, 1.027), (1.21, 1.038)])
    {
        let got_l = row["lambda"].as_f64().unwrap();
        let got = row["mu"].as_f64().unwrap();
        if (got_l - lambda).abs() > 1e-12 || (got - mu).abs() > 1e-3 {
            v.fail(format!("lambda {got_l}: mu {got} vs {mu}"));
        } else {
            v.note(format!("lambda {lambda}: mu {got:.4} (table {mu})"));
        }
    }
    let rows = t["parameterized"].as_array().unwrap();
    for (row, (d, a, b)) in rows.iter().zip([(3, 4, 2), (4, 5, 4)]) {
        let got = (
            row["max_degree"].as_u64(),
            row["exhaustive_base"].as_u64(),
            row["excavation_base"].as_u64(),
        );
        if got != (Some(d), Some(a), Some(b)) {
            v.fail(format!("Delta {d}: got {got:?}"));
        }
    }
    if rows.len() != 2 {
        v.fail(format!("{} parameterized rows", rows.len()));
    }
    // the text form is byte-compared with the golden file in the cli tests
    let text = Command::new(env!("CARGO_BIN_EXE_sparselab"))
        .args(["analyze", "tables"])
        .output()
        .unwrap();
    let golden = std::fs::read(concat!(env!("CARGO_MANIFEST_DIR"), "/golden/tables.txt")).unwrap();
    if text.stdout != golden {
        v.fail("text tables differ from golden/tables.txt");
    }
    v
}

fn criterion_2() -> Verdict {
    let mut v = Verdict::new();
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let r2 = branching_root(2).unwrap();
    if (r2.value() - phi).abs() > 1e-10 {
        v.fail(format!("root(2) = {} vs {phi}", r2.value()));
    }
    // (b - 1) ln(1 + e) + ln e = 0 at the root's excess e; evaluated here
    // from scratch to confirm a sign change around the reported value
    let h = |b: usize, e: f64| (b as f64 - 1.0) * e.ln_1p() + e.ln();
    let mut prev = f64::INFINITY;
    let mut worst = 0f64;
    for b in 2..=10_000usize {
        let r = branching_root(b).unwrap();
        worst = worst.max(r.residual().abs());
        if r.residual().abs() > 1e-12 {
            v.fail(format!("b = {b}: residual {:e}", r.residual()));
            break;
        }
        let e = r.excess();
        if !(e < prev) {
            v.fail(format!("b = {b}: root does not decrease"));
            break;
        }
        if !(h(b, e * (1.0 - 1e-9)) < 0.0 && h(b, e * (1.0 + 1e-9)) > 0.0) {
            v.fail(format!("b = {b}: no sign change around excess {e:e}"));
            break;
        }
        prev = e;
    }
    v.note(format!("max |residual| over b <= 10^4: {worst:e}"));
    v
}

/// Optimum of the copy-plus-edge-dummies gadget by subset scan (for the
/// counterexample message).
fn ids_gadget_formula(g: &Graph) -> usize {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0u32..1 << n)
        .filter_map(|mask| {
            let inside = |v: usize| mask >> v & 1 == 1;
            let missed: Vec<&(usize, usize)> = edges
                .iter()
                .filter(|&&(a, b)| !inside(a) && !inside(b))
                .collect();
            let ok = (0..n).all(|v| inside(v) || missed.iter().any(|&&(a, b)| a == v || b == v));
            ok.then(|| mask.count_ones() as usize + 2 * missed.len())
        })
        .min()
        .unwrap_or(0)
}

fn criterion_3(corpus: &[Graph]) -> Verdict {
    let mut v = Verdict::new();
    let mut ds = Tally::new("gamma(vc_to_ds) = tau");
    let mut sc = Tally::new("set cover(ds_to_setcover) = gamma");
    let mut hs = Tally::new("hitting set(dual) = set cover");
    let mut fvs = Tally::new("fvs(vc_to_fvs) = tau");
    let mut ids = Tally::new("ids(vc_to_ids) = tau");
    let mut fas = Tally::new("fas(vc_to_fas) = tau");
    let mut sat = Tally::new("max2sat = m + alpha");
    let mut mmvc = Tally::new("mmvc(H_t) = n + (t - 1) alpha");
    let mut idsp = Tally::new("ids(H_{r+1}) = alpha + (n - alpha)(r + 1)");
    let mut pack = Tally::new("set packing = alpha");
    for g in corpus {
        let (n, m) = (g.n(), g.m());
        let alpha = brute_alpha(g);
        let tau = n - alpha;
        let core = strip_isolated(g);
        if core.n() > 0 {
            let (d, _) = vc_to_ds(&core).unwrap();
            let gamma = oracle(Problem::Ds, &d.clone().into()).value;
            ds.check(gamma == tau, || {
                format!("{}: gamma {gamma}, tau {tau}", edges_of(&core))
            });
            let s = ds_to_setcover(&d).unwrap();
            let cover = oracle(Problem::SetCover, &s.clone().into()).value;
            sc.check(cover == gamma, || {
                format!("{}: cover {cover}, gamma {gamma}", edges_of(&d))
            });
            let hit = oracle(Problem::HittingSet, &s.dual().into()).value;
            hs.check(hit == cover, || {
                format!("{}: hitting {hit}, cover {cover}", edges_of(&d))
            });
            let (f, _) = vc_to_fvs(&core).unwrap();
            let fv = oracle(Problem::Fvs, &f.into()).value;
            fvs.check(fv == tau, || {
                format!("{}: fvs {fv}, tau {tau}", edges_of(&core))
            });
            let (h, _) = vc_to_ids(&core).unwrap();
            let iv = oracle(Problem::Ids, &h.into()).value;
            ids.check(iv == tau, || {
                format!(
                    "{}: gadget ids {iv} (subset formula {}), tau {tau}",
                    edges_of(&core),
                    ids_gadget_formula(&core)
                )
            });
        }
        let (a, _) = vc_to_fas(g).unwrap();
        let fv = oracle(Problem::Fas, &a.into()).value;
        fas.check(fv == tau, || {
            format!("{}: fas {fv}, tau {tau}", edges_of(g))
        });

        let cnf = sparselab_core::reductions::is_to_max2sat(g).unwrap();
        let best = (0u32..1 << n)
            .map(|mask| cnf.satisfied(&(0..n).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>()))
            .max();
        let sv = oracle(Problem::Max2Sat, &cnf.into()).value;
        sat.check(sv == m + alpha && best == Some(sv), || {
            format!("{}: max2sat {sv}, m + alpha {}", edges_of(g), m + alpha)
        });

        for t in [2, 3, n + 1] {
            let (h, _) = sparselab_core::reductions::is_to_mmvc(g, t).unwrap();
            let mv = oracle(Problem::Mmvc, &h.into()).value;
            mmvc.check(mv == n + (t - 1) * alpha, || {
                format!("{} t={t}: mmvc {mv}", edges_of(g))
            });
        }
        for r in [1, 2] {
            let (h, _) = sparselab_core::reductions::is_to_mmvc(g, r + 1).unwrap();
            let iv = oracle(Problem::Ids, &h.into()).value;
            let want = alpha + (n - alpha) * (r + 1);
            idsp.check(iv == want, || {
                format!("{} r={r}: ids {iv}, want {want}", edges_of(g))
            });
        }
        let p = sparselab_core::reductions::is_to_setpacking(g).unwrap();
        let pv = oracle(Problem::SetPacking, &p.into()).value;
        pack.check(pv == alpha, || {
            format!("{}: packing {pv}, alpha {alpha}", edges_of(g))
        });
    }
    for t in [&ds, &sc, &hs, &fvs, &ids, &fas, &sat, &mmvc, &idsp, &pack] {
        t.report(&mut v);
    }
    v
}

// ---------------------------------------------------- ratio transfer

/// `opt` grown by the first `k` entries of each order, for every `k` keeping
/// the size within `r * |opt|`.
fn paddings<T: Clone + PartialEq>(opt: &[T], orders: &[Vec<T>], r: f64) -> Vec<Vec<T>> {
    let limit = (r * opt.len() as f64 + 1e-9).floor() as usize;
    let mut out = vec![opt.to_vec()];
    for order in orders {
        let extra: Vec<T> = order.iter().filter(|x| !opt.contains(x)).cloned().collect();
        for k in 1..=limit.saturating_sub(opt.len()).min(extra.len()) {
            let mut c = opt.to_vec();
            c.extend(extra[..k].iter().cloned());
            out.push(c);
        }
    }
    out
}

/// Every subset of `opt` with at least `ceil(|opt| / r)` members.
fn truncations(opt: &[usize], r: f64) -> Vec<Vec<usize>> {
    let k = opt.len();
    let min = (k as f64 / r - 1e-9).ceil() as usize;
    (0u32..1 << k)
        .filter(|m| m.count_ones() as usize >= min)
        .map(|m| {
            (0..k)
                .filter(|&i| m >> i & 1 == 1)
                .map(|i| opt[i])
                .collect()
        })
        .collect()
}

struct TransferCase<'a> {
    tally: &'a mut Tally,
    reduction: Reduction,
    source: Instance,
    source_opt: usize,
    target_opt: usize,
    r: f64,
}

impl TransferCase<'_> {
    fn run(&mut self, reduced: &sparselab_core::Reduced, pool: Vec<Candidate>) {
        let red = &self.reduction;
        let transfer = red.transfer();
        let maximize = red.source.is_maximization();
        for cand in pool {
            let within = if red.target.is_maximization() {
                cand.value as f64 * self.r + 1e-9 >= self.target_opt as f64
            } else {
                cand.value as f64 <= self.r * self.target_opt as f64 + 1e-9
            };
            assert!(within, "pool candidate outside ratio {}", self.r);
            let back = match red.backward(reduced, &cand) {
                Ok(b) => b,
                Err(e) => {
                    let msg = format!("{}: backward failed on {:?}: {e}", red.name(), cand.payload);
                    self.tally.check(false, || msg);
                    continue;
                }
            };
            let feasible = validate(red.source, &self.source, &back)
                .map(|v| v.feasible)
                .unwrap_or(false);
            let value = back.value as f64;
            let opt = self.source_opt as f64;
            let ok = feasible
                && match &transfer {
                    Transfer::LoseEdgeClauses => {
                        let m = self.source.as_graph().map_or(0, |g| g.m());
                        back.value + m >= cand.value
                    }
                    Transfer::Pendant { t } => {
                        let n = self.source.as_graph().map_or(0, |g| g.n());
                        let t = t.unwrap_or(n + 1) as f64;
                        let rho = cand.value as f64 / self.target_opt as f64;
                        let exact = (cand.value as f64 - n as f64) / (t - 1.0);
                        let bound = rho - (1.0 - rho) * n as f64 / ((t - 1.0) * opt);
                        (value - exact).abs() < 1e-9 && (opt == 0.0 || value / opt + 1e-9 >= bound)
                    }
                    other => {
                        let b = other.ratio_bound(self.r).expect("ratio transfer");
                        if maximize {
                            value * b + 1e-9 >= opt
                        } else {
                            value <= b * opt + 1e-9
                        }
                    }
                };
            let source_desc = match &self.source {
                Instance::Graph(g) => edges_of(g),
                other => serde_json::to_string(other).unwrap(),
            };
            let (name, r, so, to) = (red.name(), self.r, self.source_opt, self.target_opt);
            self.tally.check(ok, || {
                format!(
                    "{name} r={r} on {source_desc}: target {:?} (value {}, opt {to}) maps to {:?} (value {}, feasible {feasible}, source opt {so})",
                    cand.payload, cand.value, back.payload, back.value
                )
            });
        }
    }
}

/// All independent dominating sets of the vc_to_ids gadget: for each `S` of
/// copies, closed under adding copies with no uncovered edge, `S` plus the
/// dummies of the uncovered edges.
fn ids_gadget_pool(core: &Graph, reduced: &sparselab_core::Reduced) -> Vec<Vec<usize>> {
    let map = reduced.stages[0].gadget.as_ref().unwrap();
    let n = core.n();
    let edges: Vec<(usize, usize)> = core.edges().collect();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..1 << n {
        let mut s = mask;
        loop {
            let mut has_missed = 0u32;
            for &(u, v) in &edges {
                if s >> u & 1 == 0 && s >> v & 1 == 0 {
                    has_missed |= 1 << u | 1 << v;
                }
            }
            let lonely = !s & !has_missed & ((1u32 << n) - 1);
            if lonely == 0 {
                break;
            }
            s |= lonely;
        }
        let mut d = bits(s, n);
        for dm in &map.dummies {
            if let Origin::Edge(u, v) = dm.origin {
                if s >> u & 1 == 0 && s >> v & 1 == 0 {
                    d.push(dm.id);
                }
            }
        }
        d.sort_unstable();
        if !out.contains(&d) {
            out.push(d);
        }
    }
    out
}

fn criterion_4(corpus: &[Graph]) -> Verdict {
    let mut v = Verdict::new();
    let names = [
        "vc_to_ds",
        "ds_to_setcover",
        "setcover_to_hittingset",
        "hittingset_to_setcover",
        "vc_to_fvs",
        "vc_to_ids",
        "vc_to_fas",
        "is_to_setpacking",
        "is_to_max2sat",
        "is_to_mmvc(t=2)",
        "is_to_mmvc(t=3)",
        "is_to_lcol(2)",
        "is_to_planar",
        "vc_to_ds then ds_to_setcover",
    ];
    let mut tallies: Vec<Tally> = names.iter().map(|n| Tally::new(*n)).collect();
    for g in corpus {
        let n = g.n();
        let gi: Instance = g.clone().into();
        let alpha = brute_alpha(g);
        let adj = adjacency(g);
        let core = strip_isolated(g);
        let ci: Instance = core.clone().into();
        let tau_core = core.n() - if core.n() > 0 { brute_alpha(&core) } else { 0 };
        let gamma = oracle(Problem::Ds, &gi).value;
        let sets: SetSystem = ds_to_setcover(g).unwrap();
        let cover = oracle(Problem::SetCover, &sets.clone().into()).value;

        for r in [1.5, 2.0] {
            let mut slot = 0;

            // vertex-cover gadgets with edge dummies; pad dummies first and
            // originals first
            for step in [Step::VcToDs, Step::VcToFvs] {
                let t = slot;
                slot += 1;
                if core.n() == 0 {
                    continue;
                }
                let red = Reduction::single(step);
                let reduced = red.forward(&ci).unwrap();
                let opt = oracle(red.target, &reduced.instance);
                let all: Vec<usize> = (0..reduced.instance.as_graph().unwrap().n()).collect();
                let dummies_first: Vec<usize> = all.iter().rev().copied().collect();
                let pool = paddings(opt.vertex_set().unwrap(), &[dummies_first, all], r)
                    .into_iter()
                    .map(|c| Candidate::vertices(red.target, c))
                    .collect();
                TransferCase {
                    tally: &mut tallies[t],
                    reduction: red,
                    source: ci.clone(),
                    source_opt: tau_core,
                    target_opt: opt.value,
                    r,
                }
                .run(&reduced, pool);
            }

            // dominating set to set cover, on the source graph itself
            let t = slot;
            slot += 1;
            let red = Reduction::single(Step::DsToSetCover);
            let reduced = red.forward(&gi).unwrap();
            let opt = oracle(Problem::SetCover, &reduced.instance);
            let up: Vec<usize> = (0..n).collect();
            let down: Vec<usize> = up.iter().rev().copied().collect();
            let pool = paddings(opt.payload.indices().unwrap(), &[up, down], r)
                .into_iter()
                .map(|c| Candidate::sets(Problem::SetCover, c))
                .collect();
            TransferCase {
                tally: &mut tallies[t],
                reduction: red,
                source: gi.clone(),
                source_opt: gamma,
                target_opt: opt.value,
                r,
            }
            .run(&reduced, pool);

            // the two dual directions
            let si: Instance = sets.clone().into();
            for step in [Step::SetCoverToHittingSet, Step::HittingSetToSetCover] {
                let t = slot;
                slot += 1;
                let red = Reduction::single(step);
                let reduced = red.forward(&si).unwrap();
                let opt = oracle(red.target, &reduced.instance);
                let universe = match &reduced.instance {
                    Instance::SetSystem(s) if red.target == Problem::HittingSet => s.ground(),
                    Instance::SetSystem(s) => s.len(),
                    _ => unreachable!(),
                };
                let up: Vec<usize> = (0..universe).collect();
                let down: Vec<usize> = up.iter().rev().copied().collect();
                let make = |c: Vec<usize>| match red.target {
                    Problem::HittingSet => Candidate::elements(red.target, c),
                    _ => Candidate::sets(red.target, c),
                };
                let pool = paddings(opt.payload.indices().unwrap(), &[up, down], r)
                    .into_iter()
                    .map(make)
                    .collect();
                let source_opt = cover;
                TransferCase {
                    tally: &mut tallies[t],
                    reduction: red,
                    source: si.clone(),
                    source_opt,
                    target_opt: opt.value,
                    r,
                }
                .run(&reduced, pool);
            }

            // the independent dominating set gadget: every independent
            // dominating set of the gadget within ratio r
            let t = slot;
            slot += 1;
            if core.n() > 0 {
                let red = Reduction::single(Step::VcToIds);
                let reduced = red.forward(&ci).unwrap();
                let opt = oracle(Problem::Ids, &reduced.instance).value;
                let pool = ids_gadget_pool(&core, &reduced)
                    .into_iter()
                    .filter(|d| d.len() as f64 <= r * opt as f64 + 1e-9)
                    .map(|d| Candidate::vertices(Problem::Ids, d))
                    .collect();
                TransferCase {
                    tally: &mut tallies[t],
                    reduction: red,
                    source: ci.clone(),
                    source_opt: tau_core,
                    target_opt: opt,
                    r,
                }
                .run(&reduced, pool);
            }

            // feedback arc set gadget: pad with arcs in both orders
            let t = slot;
            slot += 1;
            let red = Reduction::single(Step::VcToFas);
            let reduced = red.forward(&gi).unwrap();
            let opt = oracle(Problem::Fas, &reduced.instance);
            let arcs: Vec<(usize, usize)> = reduced.instance.as_graph().unwrap().edges().collect();
            let rev: Vec<(usize, usize)> = arcs.iter().rev().copied().collect();
            let Some(opt_arcs) = (match &opt.payload {
                sparselab_core::Payload::Arcs(a) => Some(a.clone()),
                _ => None,
            }) else {
                unreachable!()
            };
            let pool = paddings(&opt_arcs, &[arcs, rev], r)
                .into_iter()
                .map(|c| Candidate::arcs(Problem::Fas, c))
                .collect();
            TransferCase {
                tally: &mut tallies[t],
                reduction: red,
                source: gi.clone(),
                source_opt: n - alpha,
                target_opt: opt.value,
                r,
            }
            .run(&reduced, pool);

            // set packing: every large enough subset of an optimum
            let t = slot;
            slot += 1;
            let red = Reduction::single(Step::IsToSetPacking);
            let reduced = red.forward(&gi).unwrap();
            let opt = oracle(Problem::SetPacking, &reduced.instance);
            let pool = truncations(opt.payload.indices().unwrap(), r)
                .into_iter()
                .map(|c| Candidate::sets(Problem::SetPacking, c))
                .collect();
            TransferCase {
                tally: &mut tallies[t],
                reduction: red,
                source: gi.clone(),
                source_opt: alpha,
                target_opt: opt.value,
                r,
            }
            .run(&reduced, pool);

            // max-2-sat: every assignment within ratio r
            let t = slot;
            slot += 1;
            let red = Reduction::single(Step::IsToMax2Sat);
            let reduced = red.forward(&gi).unwrap();
            let cnf = reduced.instance.as_cnf().unwrap().clone();
            let opt = oracle(Problem::Max2Sat, &reduced.instance).value;
            let pool = (0u32..1 << n)
                .map(|mask| {
                    Candidate::assignment(
                        Problem::Max2Sat,
                        &cnf,
                        (0..n).map(|i| mask >> i & 1 == 1).collect(),
                    )
                })
                .filter(|c| c.value as f64 * r + 1e-9 >= opt as f64)
                .collect();
            TransferCase {
                tally: &mut tallies[t],
                reduction: red,
                source: gi.clone(),
                source_opt: alpha,
                target_opt: opt,
                r,
            }
            .run(&reduced, pool);

            // pendant gadget: the minimal covers (V - S) + pendants(S) for
            // independent S, within ratio r
            for pend in [2, 3] {
                let t = slot;
                slot += 1;
                let red = Reduction::single(Step::IsToMmvc { t: Some(pend) });
                let reduced = red.forward(&gi).unwrap();
                let map = reduced.stages[0].gadget.clone().unwrap();
                let opt = oracle(Problem::Mmvc, &reduced.instance).value;
                let pool = (0u32..1 << n)
                    .filter(|&m| independent(&adj, m))
                    .map(|m| mmvc_from_is(&map, &bits(m, n)))
                    .filter(|c| c.value as f64 * r + 1e-9 >= opt as f64)
                    .collect();
                TransferCase {
                    tally: &mut tallies[t],
                    reduction: red,
                    source: gi.clone(),
                    source_opt: alpha,
                    target_opt: opt,
                    r,
                }
                .run(&reduced, pool);
            }

            // colorable and planar subgraphs: large subsets of an optimum
            for step in [Step::IsToLcol { colors: 2 }, Step::IsToPlanar] {
                let t = slot;
                slot += 1;
                let red = Reduction::single(step);
                let reduced = red.forward(&gi).unwrap();
                let opt = oracle(red.target, &reduced.instance);
                let pool = truncations(opt.vertex_set().unwrap(), r)
                    .into_iter()
                    .map(|c| Candidate::vertices(red.target, c))
                    .collect();
                TransferCase {
                    tally: &mut tallies[t],
                    reduction: red,
                    source: gi.clone(),
                    source_opt: alpha,
                    target_opt: opt.value,
                    r,
                }
                .run(&reduced, pool);
            }

            // a two-step chain
            let t = slot;
            slot += 1;
            if core.n() > 0 {
                let red = Reduction::parse_chain("vc:ds,ds:setcover", None).unwrap();
                let reduced = red.forward(&ci).unwrap();
                let opt = oracle(Problem::SetCover, &reduced.instance);
                let len = reduced.instance.as_set_system().unwrap().len();
                let up: Vec<usize> = (0..len).collect();
                let down: Vec<usize> = up.iter().rev().copied().collect();
                let pool = paddings(opt.payload.indices().unwrap(), &[down, up], r)
                    .into_iter()
                    .map(|c| Candidate::sets(Problem::SetCover, c))
                    .collect();
                TransferCase {
                    tally: &mut tallies[t],
                    reduction: red,
                    source: ci.clone(),
                    source_opt: tau_core,
                    target_opt: opt.value,
                    r,
                }
                .run(&reduced, pool);
            }
            assert_eq!(slot, names.len());
        }
    }
    for t in &tallies {
        t.report(&mut v);
    }
    v
}

fn criterion_5(corpus: &[Graph]) -> Verdict {
    let mut v = Verdict::new();
    let policies = [
        ThresholdPolicy::Constant(2),
        ThresholdPolicy::Constant(3),
        ThresholdPolicy::Power(0.5),
        ThresholdPolicy::OfLambda(1.3),
        ThresholdPolicy::OfLambda(1.5),
    ];
    let mut preserve = Tally::new("max lifted leaf optimum = alpha (IS) / tau (VC)");
    let mut degree = Tally::new("leaf degree <= threshold");
    let mut count = Tally::new("leaves <= ceil(root(t + 1)^n)");
    let mut edges = Tally::new("leaf edges <= floor(g / 2) n_leaf (of-lambda)");
    let mut total_leaves = 0usize;
    for g in corpus {
        let n = g.n();
        let alpha = brute_alpha(g);
        let gi: Instance = g.clone().into();
        for policy in policies {
            for mode in [Mode::Is, Mode::Vc] {
                let leaves = superlinear_sparsify(g, mode, policy).unwrap();
                let t = leaves.threshold();
                let mut k = 0usize;
                let mut best: Option<usize> = None;
                let mut feasible = true;
                for leaf in leaves {
                    k += 1;
                    let d = leaf.leaf.max_degree();
                    degree.check(d <= t, || {
                        format!(
                            "{} {policy} {mode} leaf {}: degree {d} > {t}",
                            edges_of(g),
                            leaf.path
                        )
                    });
                    if let ThresholdPolicy::OfLambda(l) = policy {
                        let cap = g_of_lambda(l).unwrap() / 2 * leaf.leaf.n();
                        edges.check(leaf.leaf.m() <= cap, || {
                            format!(
                                "{} {policy} leaf {}: {} edges > {cap}",
                                edges_of(g),
                                leaf.path,
                                leaf.leaf.m()
                            )
                        });
                    }
                    let local = oracle(mode.problem(), &leaf.leaf.clone().into());
                    let lifted = lift_solution(g, &leaf, &local, mode).unwrap();
                    feasible &= validate(mode.problem(), &gi, &lifted).unwrap().feasible;
                    best = Some(match (best, mode) {
                        (None, _) => lifted.value,
                        (Some(b), Mode::Is) => b.max(lifted.value),
                        (Some(b), Mode::Vc) => b.min(lifted.value),
                    });
                }
                total_leaves += k;
                let bound = branching_root(t + 1).unwrap().value().powi(n as i32).ceil();
                count.check(k as f64 <= bound, || {
                    format!("{} {policy} {mode}: {k} leaves > {bound}", edges_of(g))
                });
                let want = if mode == Mode::Is { alpha } else { n - alpha };
                preserve.check(feasible && best == Some(want), || {
                    format!("{} {policy} {mode}: best lifted {best:?}, want {want}, all feasible {feasible}", edges_of(g))
                });
            }
        }
    }
    for t in [&preserve, &degree, &count, &edges] {
        t.report(&mut v);
    }
    v.note(format!("{total_leaves} leaves in total"));
    v
}

fn criterion_6(corpus: &[Graph]) -> Verdict {
    let mut v = Verdict::new();
    let mut half = Tally::new("approx_is_kstep >= ceil(alpha / 2)");
    let mut drop = Tally::new("kstep residual degree <= Delta - k");
    let sub = ExactSubsolver { budget: budget() };
    for g in corpus {
        let alpha = brute_alpha(g);
        let c = approx_is_kstep(g, &sub).unwrap();
        let ok = validate(Problem::Is, &g.clone().into(), &c)
            .unwrap()
            .feasible
            && c.value >= alpha.div_ceil(2);
        half.check(ok, || {
            format!("{}: value {}, alpha {alpha}", edges_of(g), c.value)
        });
        let d = g.max_degree();
        for k in 1..d {
            let ex = kstep_sparsify(g, k).unwrap();
            let r = ex.residual.max_degree();
            drop.check(r <= d - k, || {
                format!("{} k={k}: residual degree {r} > {}", edges_of(g), d - k)
            });
        }
        // excavating past the degree empties the graph's edges
        let ex = excavate(g, d + 1);
        drop.check(ex.residual.m() == 0, || {
            format!("{}: edges survive {} excavations", edges_of(g), d + 1)
        });
    }
    half.report(&mut v);
    drop.report(&mut v);
    v
}

fn criterion_7() -> Verdict {
    let mut v = Verdict::new();
    let mut exact = Tally::new("param_is_excavation = alpha");
    let mut counter = Tally::new("enumerated <= 2^((Delta - 2) alpha)");
    let mut degrees = [0usize; 5];
    for i in 0..100u64 {
        let mut r = rng(0x5eed_0007 + i);
        let n = r.random_range(8..=18);
        let p = [0.25, 0.4, 0.6][i as usize % 3];
        let g = gnp_bounded(n, p, 4, &mut r);
        let d = g.max_degree();
        degrees[d] += 1;
        let alpha = brute_alpha(&g);
        let out = param_is_excavation(&g).unwrap();
        let feasible = validate(Problem::Is, &g.clone().into(), &out.candidate)
            .unwrap()
            .feasible;
        exact.check(feasible && out.candidate.value == alpha, || {
            format!(
                "{}: value {}, alpha {alpha}",
                edges_of(&g),
                out.candidate.value
            )
        });
        let bound = 2f64.powi((d as i32 - 2) * alpha as i32);
        counter.check(out.enumerated as f64 <= bound, || {
            format!(
                "{}: enumerated {} > 2^{}",
                edges_of(&g),
                out.enumerated,
                (d as i32 - 2) * alpha as i32
            )
        });
    }
    exact.report(&mut v);
    counter.report(&mut v);
    v.note(format!("max degree histogram 0..=4: {degrees:?}"));
    v
}

fn criterion_8() -> Verdict {
    let mut v = Verdict::new();
    let mut t = Tally::new("minimal cover <=> complement independent dominating (all subsets)");
    for i in 0..300u64 {
        let mut r = rng(0x5eed_0008 + i);
        let n = r.random_range(1..=8);
        let p = [0.2, 0.4, 0.6, 0.8][i as usize % 4];
        let g = gnp(n, p, &mut r);
        let gi: Instance = g.clone().into();
        let adj = adjacency(&g);
        let full = (1u32 << n) - 1;
        for mask in 0..=full {
            let minimal =
                covers(&g, mask) && bits(mask, n).iter().all(|&x| !covers(&g, mask & !(1 << x)));
            let rest = full & !mask;
            let ids = independent(&adj, rest) && dominates(&adj, rest);
            let lib_mmvc = validate(
                Problem::Mmvc,
                &gi,
                &Candidate::vertices(Problem::Mmvc, bits(mask, n)),
            )
            .unwrap()
            .feasible;
            let lib_ids = validate(
                Problem::Ids,
                &gi,
                &Candidate::vertices(Problem::Ids, bits(rest, n)),
            )
            .unwrap()
            .feasible;
            let ok = minimal == ids && lib_mmvc == minimal && lib_ids == ids;
            t.check(ok, || {
                format!(
                    "{} C={:?}: minimal {minimal}, ids {ids}, validate {lib_mmvc}/{lib_ids}",
                    edges_of(&g),
                    bits(mask, n)
                )
            });
        }
    }
    t.report(&mut v);
    v
}

fn main() {
    // `cargo test -- --list` and filters come through as arguments; there is
    // nothing to list
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let started = Instant::now();
    let reductions = reduction_corpus();
    let sparse = sparsify_corpus();
    let mut all_ok = true;
    let mut run =
        |id: u32, title: &str, limit: Option<Duration>, f: &mut dyn FnMut() -> Verdict| {
            let t0 = Instant::now();
            let mut v = f();
            let took = t0.elapsed();
            if let Some(limit) = limit {
                if took > limit {
                    v.fail(format!("runtime {:.2?} exceeds {:?}", took, limit));
                }
            }
            let status = if v.ok { "PASS" } else { "FAIL" };
            println!("criterion {id} [{title}]: {status} ({:.2?})", took);
            for line in &v.detail {
                println!("    {line}");
            }
            all_ok &= v.ok;
        };
    run(
        1,
        "table reproduction",
        Some(Duration::from_secs(1)),
        &mut criterion_1,
    );
    run(
        2,
        "root calculus",
        Some(Duration::from_secs(1)),
        &mut criterion_2,
    );
    run(
        3,
        "reduction optimum correspondence",
        Some(Duration::from_secs(600)),
        &mut || criterion_3(&reductions),
    );
    run(4, "ratio-transfer soundness", None, &mut || {
        criterion_4(&reductions)
    });
    run(
        5,
        "sparsifier preservation",
        Some(Duration::from_secs(600)),
        &mut || criterion_5(&sparse),
    );
    run(6, "k-step chain", None, &mut || criterion_6(&sparse));
    run(
        7,
        "parameterized algorithm",
        Some(Duration::from_secs(300)),
        &mut criterion_7,
    );
    run(8, "complement duality", None, &mut criterion_8);
    println!(
        "acceptance: {} in {:.2?}",
        if all_ok { "all PASS" } else { "FAIL" },
        started.elapsed()
    );
    if !all_ok {
        std::process::exit(1);
    }
}
