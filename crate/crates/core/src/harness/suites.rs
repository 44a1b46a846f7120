//! Theorem-verification suites: each runs a property over an enumerated or
//! sampled population and reports violations verbatim.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classifier::{
    classify_rank2, classify_rank3_linear_avoider_last, combine_union, one_edge_reduction,
    OneEdgeResidue,
};
use crate::hypergraph::{Edge, Hypergraph};
use crate::oracle::{solve, LastPlayer, Outcome, Player, Solver};
use crate::structure::{find_non_cut_vertex, find_pairing, recognize_component, Kind};

use super::enumerate::{
    enumerate_antichains, enumerate_graphs, enumerate_linear_3uniform_connected,
    enumerate_linear_rank3, enumerate_linear_rank3_on, random_linear3,
};
use super::gen::{gen_family, gen_random_hypergraph, GenSpec};

/// The thirteen verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    LastTheorem,
    UnionTable,
    Duality,
    Monotonicity,
    SuperLemma,
    OneEdge,
    LastMoveImplications,
    ManyMoves,
    Rank2,
    Rank3AvoiderLast,
    NonCut,
    Pairings,
    Reductions,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::LastTheorem,
        Suite::UnionTable,
        Suite::Duality,
        Suite::Monotonicity,
        Suite::SuperLemma,
        Suite::OneEdge,
        Suite::LastMoveImplications,
        Suite::ManyMoves,
        Suite::Rank2,
        Suite::Rank3AvoiderLast,
        Suite::NonCut,
        Suite::Pairings,
        Suite::Reductions,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::LastTheorem => "last-theorem",
            Suite::UnionTable => "union-table",
            Suite::Duality => "duality",
            Suite::Monotonicity => "monotonicity",
            Suite::SuperLemma => "super-lemma",
            Suite::OneEdge => "one-edge",
            Suite::LastMoveImplications => "lastmove-implications",
            Suite::ManyMoves => "many-moves",
            Suite::Rank2 => "rank2",
            Suite::Rank3AvoiderLast => "rank3-avoider-last",
            Suite::NonCut => "non-cut",
            Suite::Pairings => "pairings",
            Suite::Reductions => "reductions",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        Suite::ALL
            .iter()
            .find(|suite| suite.name() == s)
            .copied()
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!("unknown suite {s:?}; expected one of {}", names.join(", "))
            })
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Population limits; `None` fields use the suite's default.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bounds {
    /// Cap on vertex count for the enumerated part.
    pub max_n: Option<usize>,
    /// Number of random instances for the sampled part.
    pub samples: Option<u64>,
    /// Worker threads; 0 or 1 means sequential.
    pub jobs: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub instance: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: u64,
    pub violation_count: u64,
    /// At most the first 20 violations, verbatim.
    pub violations: Vec<Violation>,
    pub wall_ms: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

const KEPT_VIOLATIONS: usize = 20;

#[derive(Default)]
struct Recorder {
    checked: u64,
    violation_count: u64,
    violations: Vec<Violation>,
}

impl Recorder {
    fn check(&mut self) {
        self.checked += 1;
    }

    fn violate(&mut self, instance: &Hypergraph, detail: impl Into<String>) {
        self.violation_count += 1;
        if self.violations.len() < KEPT_VIOLATIONS {
            self.violations.push(Violation {
                instance: instance.to_string(),
                detail: detail.into(),
            });
        }
    }

    fn merge(&mut self, other: Recorder) {
        self.checked += other.checked;
        self.violation_count += other.violation_count;
        for v in other.violations {
            if self.violations.len() < KEPT_VIOLATIONS {
                self.violations.push(v);
            }
        }
    }

    fn into_report(self, suite: &str, started: Instant) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            checked: self.checked,
            violation_count: self.violation_count,
            violations: self.violations,
            wall_ms: started.elapsed().as_millis(),
        }
    }
}

/// Runs `body(shard, nshards)` on each of `jobs` workers and merges.
fn run_sharded(jobs: usize, body: &(dyn Fn(usize, usize) -> Recorder + Sync)) -> Recorder {
    let jobs = jobs.max(1);
    if jobs == 1 {
        return body(0, 1);
    }
    let mut total = Recorder::default();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs).map(|s| scope.spawn(move || body(s, jobs))).collect();
        for h in handles {
            total.merge(h.join().expect("suite worker panicked"));
        }
    });
    total
}

/// Dispatches a suite by name.
pub fn verify_suite(suite: Suite, bounds: &Bounds, seed: u64) -> SuiteReport {
    let started = Instant::now();
    let rec = match suite {
        Suite::LastTheorem => last_theorem(bounds, seed),
        Suite::UnionTable => union_table(bounds),
        Suite::Duality => duality(bounds),
        Suite::Monotonicity => monotonicity(bounds, seed),
        Suite::SuperLemma => super_lemma(bounds, seed),
        Suite::OneEdge => one_edge(bounds, seed),
        Suite::LastMoveImplications => lastmove_implications(bounds),
        Suite::ManyMoves => many_moves(bounds, seed),
        Suite::Rank2 => rank2(bounds),
        Suite::Rank3AvoiderLast => rank3_avoider_last(bounds, seed),
        Suite::NonCut => non_cut(bounds),
        Suite::Pairings => pairings(bounds),
        Suite::Reductions => reductions(bounds, seed),
    };
    rec.into_report(suite.name(), started)
}

pub fn verify_many_moves(bounds: &Bounds, seed: u64) -> SuiteReport {
    verify_suite(Suite::ManyMoves, bounds, seed)
}

pub fn verify_lastmove_implications(bounds: &Bounds) -> SuiteReport {
    verify_suite(Suite::LastMoveImplications, bounds, 0)
}

fn winners(h: &Hypergraph) -> (Player, Player) {
    let al = solve(h, LastPlayer::AvoiderLast).expect("population within oracle bounds");
    let el = solve(h, LastPlayer::EnforcerLast).expect("population within oracle bounds");
    (al, el)
}

fn oracle_outcome(h: &Hypergraph) -> Result<Outcome, String> {
    let (al, el) = winners(h);
    Outcome::from_winners(al, el).map_err(|e| e.to_string())
}

/// The impossible winner combination never occurs (Avoider as last, Enforcer
/// as second-to-last).
fn last_theorem(bounds: &Bounds, seed: u64) -> Recorder {
    let max_n = bounds.max_n.unwrap_or(5);
    let samples = bounds.samples.unwrap_or(2000);
    let mut rec = Recorder::default();
    let probe = |rec: &mut Recorder, h: &Hypergraph| {
        rec.check();
        if let Err(e) = oracle_outcome(h) {
            rec.violate(h, e);
        }
    };
    for g in enumerate_graphs(max_n) {
        probe(&mut rec, &g);
    }
    enumerate_linear_rank3(max_n, false, |h| probe(&mut rec, h));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let n = rng.gen_range(2..=8);
        let m = rng.gen_range(0..=2 * n);
        let h = {
            let s: u64 = rng.gen();
            gen_random_hypergraph(n, m, s)
        };
        probe(&mut rec, &h);
    }
    rec
}

fn union_pool() -> Vec<Hypergraph> {
    let mut pool = vec![
        gen_family(&GenSpec::Pn { n: 1 }).unwrap(),
        gen_family(&GenSpec::Pn { n: 2 }).unwrap(),
        gen_family(&GenSpec::Pn { n: 3 }).unwrap(),
        gen_family(&GenSpec::Pn { n: 4 }).unwrap(),
        gen_family(&GenSpec::Cn { n: 4 }).unwrap(),
        gen_family(&GenSpec::Cn { n: 5 }).unwrap(),
        gen_family(&GenSpec::Bull).unwrap(),
        gen_family(&GenSpec::Sunlet3).unwrap(),
        gen_family(&GenSpec::Prism).unwrap(),
    ];
    // prism fragments with at most 5 vertices
    let prism = gen_family(&GenSpec::Prism).unwrap();
    pool.push(prism.enforcer_update(0).unwrap()); // two edges on 5 vertices
    pool.push(Hypergraph::from_edge_lists(3, &[&[0, 1, 2]]).unwrap());
    pool.push(Hypergraph::from_edge_lists(5, &[&[0, 1, 2], &[2, 3, 4]]).unwrap());
    pool
}

/// Outcome of a disjoint union equals the table applied to component
/// outcomes, over all ordered pairs from the pool.
fn union_table(_bounds: &Bounds) -> Recorder {
    let pool = union_pool();
    let outcomes: Vec<Outcome> =
        pool.iter().map(|h| oracle_outcome(h).expect("pool instance")).collect();
    let mut rec = Recorder::default();
    for (i, a) in pool.iter().enumerate() {
        for (j, b) in pool.iter().enumerate() {
            rec.check();
            let u = a.disjoint_union(b);
            let want = combine_union(outcomes[i], outcomes[j]);
            match oracle_outcome(&u) {
                Ok(got) if got == want => {}
                Ok(got) => rec.violate(&u, format!("union outcome {got}, table says {want}")),
                Err(e) => rec.violate(&u, e),
            }
        }
    }
    rec
}

/// Role reversal through the transversal hypergraph: Avoider wins `H` in a
/// given order exactly when Enforcer wins `H^T` with the orders swapped.
fn duality(bounds: &Bounds) -> Recorder {
    let max_n = bounds.max_n.unwrap_or(6);
    run_sharded(bounds.jobs, &|shard, nshards| {
        let mut rec = Recorder::default();
        let mut index = 0u64;
        for n in 1..=max_n {
            enumerate_antichains(n, 6, |h| {
                index += 1;
                if (index - 1) % nshards as u64 != shard as u64 {
                    return;
                }
                rec.check();
                let dual = h.transversal_dual().expect("n within dual bounds");
                let (al, el) = winners(h);
                let (dal, del) = winners(&dual);
                // Avoider wins H as last <=> Enforcer wins H^T as last
                if (al == Player::Avoider) != (del == Player::Enforcer) {
                    rec.violate(h, format!("last-player duality broken (dual {dual})"));
                }
                // Avoider wins H as second-to-last <=> Enforcer wins H^T as
                // second-to-last
                if (el == Player::Avoider) != (dal == Player::Enforcer) {
                    rec.violate(h, format!("second-to-last duality broken (dual {dual})"));
                }
            });
        }
        rec
    })
}

/// Removing edges (and unused vertices) never helps Enforcer's opponent:
/// if Enforcer wins a subhypergraph in some order, he wins the whole in the
/// same order.
fn monotonicity(bounds: &Bounds, seed: u64) -> Recorder {
    let max_n = bounds.max_n.unwrap_or(5);
    let mut rec = Recorder::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let probe = |rec: &mut Recorder, h: &Hypergraph, rng: &mut ChaCha8Rng| {
        let m = h.edge_count();
        let (al, el) = winners(h);
        let try_subset = |rec: &mut Recorder, keep: u64| {
            rec.check();
            let edges: Vec<Edge> = h
                .edges()
                .iter()
                .enumerate()
                .filter(|(i, _)| keep & (1 << i) != 0)
                .map(|(_, e)| e.clone())
                .collect();
            let sub = Hypergraph::new(h.vertex_count(), edges).expect("subset of valid edges");
            let (sal, sel) = winners(&sub);
            if sal == Player::Enforcer && al != Player::Enforcer {
                rec.violate(h, format!("sub {sub} won by Enforcer as Avoider-last, whole is not"));
            }
            if sel == Player::Enforcer && el != Player::Enforcer {
                rec.violate(h, format!("sub {sub} won by Enforcer as Enforcer-last, whole is not"));
            }
        };
        if m <= 5 {
            for keep in 0..(1u64 << m) {
                try_subset(rec, keep);
            }
        } else {
            for _ in 0..10 {
                try_subset(rec, rng.gen_range(0..(1u64 << m)));
            }
        }
    };
    for g in enumerate_graphs(max_n.min(4)) {
        probe(&mut rec, &g, &mut rng);
    }
    enumerate_linear_rank3(max_n, true, |h| probe(&mut rec, h, &mut rng));
    for _ in 0..bounds.samples.unwrap_or(300) {
        let s: u64 = rng.gen();
        let h = gen_random_hypergraph(rng.gen_range(2..=8), rng.gen_range(1..=8), s);
        probe(&mut rec, &h, &mut rng);
    }
    rec
}

/// Collapsing an indistinguishable pair (one vertex to each player)
/// preserves the outcome.
fn super_lemma(bounds: &Bounds, seed: u64) -> Recorder {
    let max_n = bounds.max_n.unwrap_or(5);
    let mut rec = Recorder::default();
    let probe = |rec: &mut Recorder, h: &Hypergraph| {
        for (x, y) in h.indistinguishable_pairs() {
            rec.check();
            let collapsed = h.super_reduce(x, y).expect("pair from the scan");
            match (oracle_outcome(h), oracle_outcome(&collapsed)) {
                (Ok(a), Ok(b)) if a == b => {}
                (Ok(a), Ok(b)) => rec.violate(
                    h,
                    format!("outcome {a} became {b} after collapsing ({x}, {y})"),
                ),
                (Err(e), _) | (_, Err(e)) => rec.violate(h, e),
            }
        }
    };
    for g in enumerate_graphs(max_n) {
        probe(&mut rec, &g);
    }
    enumerate_linear_rank3(max_n, false, |h| probe(&mut rec, h));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..bounds.samples.unwrap_or(1000) {
        let s: u64 = rng.gen();
        let h = gen_random_hypergraph(rng.gen_range(2..=8), rng.gen_range(1..=6), s);
        probe(&mut rec, &h);
    }
    rec
}

/// The 1-edge rule agrees with the oracle wherever a 1-edge exists.
fn one_edge(bounds: &Bounds, seed: u64) -> Recorder {
    let max_n = bounds.max_n.unwrap_or(5);
    let mut rec = Recorder::default();
    let probe = |rec: &mut Recorder, h: &Hypergraph| {
        rec.check();
        let trace = one_edge_reduction(h).expect("instance has a 1-edge");
        let (al, el) = winners(h);
        if al != trace.avoider_last {
            rec.violate(h, "1-edge rule: Avoider-last winner mismatch");
        }
        let want_el = match &trace.enforcer_last {
            OneEdgeResidue::Decided(w) => *w,
            OneEdgeResidue::AvoiderLastOf(res) => {
                solve(res, LastPlayer::AvoiderLast).expect("residue within bounds")
            }
        };
        if el != want_el {
            rec.violate(h, format!("1-edge rule: Enforcer-last winner {el}, rule says {want_el}"));
        }
    };
    // all rank-2 hypergraphs with at least one 1-edge
    for n in 1..=max_n {
        let mut units: Vec<Edge> = (0..n).map(|v| Edge::new(vec![v])).collect();
        let pairs: Vec<Edge> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| Edge::new(vec![a, b])))
            .collect();
        units.extend(pairs);
        let all = units;
        for mask in 0u64..(1 << all.len()) {
            if mask & ((1 << n) - 1) == 0 {
                continue; // no 1-edge
            }
            let edges: Vec<Edge> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, e)| e.clone())
                .collect();
            probe(&mut rec, &Hypergraph::new(n, edges).expect("valid edges"));
        }
    }
    // rank-3 shapes with a 1-edge grafted on
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..bounds.samples.unwrap_or(500) {
        let n = rng.gen_range(2..=7);
        let mut h = random_linear3(n, rng.gen_range(1..=n), &mut rng);
        let mut edges: Vec<Edge> = h.edges().to_vec();
        edges.push(Edge::new(vec![rng.gen_range(0..n)]));
        h = Hypergraph::new(n, edges).expect("valid edges");
        probe(&mut rec, &h);
    }
    rec
}

/// The two one-directional reductions of the last-move heuristic hold, and
/// both converses genuinely fail somewhere in the search space.
fn lastmove_implications(bounds: &Bounds) -> Recorder {
    let max_n = bounds.max_n.unwrap_or(5);
    let search_n = bounds.max_n.unwrap_or(7);
    let mut rec = Recorder::default();
    // implications on the exhaustive population
    let probe = |rec: &mut Recorder, h: &Hypergraph| {
        if h.vertex_count() == 0 {
            return;
        }
        rec.check();
        let (al, el) = winners(h);
        for y in h.vertices() {
            let peeled = h.enforcer_update(y).expect("vertex of h");
            if solve(&peeled, LastPlayer::AvoiderLast).unwrap() == Player::Avoider
                && el != Player::Avoider
            {
                rec.violate(h, format!("Avoider wins minus {y} as last but loses as second-to-last"));
            }
        }
        for x in h.vertices() {
            let taken = h.avoider_update(x).expect("vertex of h");
            if solve(&taken, LastPlayer::EnforcerLast).unwrap() == Player::Enforcer
                && al != Player::Enforcer
            {
                rec.violate(h, format!("Enforcer wins plus {x} as last but loses as second-to-last"));
            }
        }
    };
    for g in enumerate_graphs(max_n) {
        probe(&mut rec, &g);
    }
    enumerate_linear_rank3(max_n, false, |h| probe(&mut rec, h));

    // converse counterexamples must exist
    let mut found_first = None;
    let mut found_second = None;
    'search: for n in 2..=search_n {
        let mut done = false;
        enumerate_linear_rank3_on(n, true, 0, 1, &mut |h| {
            if done || h.edge_count() == 0 {
                return;
            }
            let (al, el) = winners(h);
            if found_first.is_none() && el == Player::Avoider {
                let none = h.vertices().all(|y| {
                    let peeled = h.enforcer_update(y).expect("vertex of h");
                    solve(&peeled, LastPlayer::AvoiderLast).unwrap() != Player::Avoider
                });
                if none {
                    found_first = Some(h.clone());
                }
            }
            if found_second.is_none() && al == Player::Enforcer {
                let none = h.vertices().all(|x| {
                    let taken = h.avoider_update(x).expect("vertex of h");
                    solve(&taken, LastPlayer::EnforcerLast).unwrap() != Player::Enforcer
                });
                if none {
                    found_second = Some(h.clone());
                }
            }
            done = found_first.is_some() && found_second.is_some();
        });
        if found_first.is_some() && found_second.is_some() {
            break 'search;
        }
    }
    rec.check();
    if found_first.is_none() {
        rec.violate(
            &Hypergraph::empty(0),
            format!("no counterexample to the first converse found up to n = {search_n}"),
        );
    }
    rec.check();
    if found_second.is_none() {
        rec.violate(
            &Hypergraph::empty(0),
            format!("no counterexample to the second converse found up to n = {search_n}"),
        );
    }
    rec
}

/// A winning first player still wins after gifting the opponent any even
/// number of free moves; a winning second player, any odd number.
fn many_moves(bounds: &Bounds, seed: u64) -> Recorder {
    let max_n = bounds.max_n.unwrap_or(5);
    let mut rec = Recorder::default();
    let probe = |rec: &mut Recorder, h: &Hypergraph| {
        let n = h.vertex_count();
        if n == 0 {
            return;
        }
        let mut solver = Solver::new(h, LastPlayer::AvoiderLast).expect("within bounds");
        for p in [Player::Avoider, Player::Enforcer] {
            let as_first = solver.solve_from(0, 0, p).unwrap() == p;
            let as_second = solver.solve_from(0, 0, p.other()).unwrap() == p;
            for x_set in 0..(1u64 << n) {
                let even = x_set.count_ones() % 2 == 0;
                if !(as_first && even || as_second && !even) {
                    continue;
                }
                rec.check();
                let (a_mask, e_mask) = match p {
                    Player::Avoider => (0, x_set),
                    Player::Enforcer => (x_set, 0),
                };
                let w = solver.solve_from(a_mask, e_mask, p).unwrap();
                if w != p {
                    rec.violate(
                        h,
                        format!("{p} wins outright but loses after gifting mask {x_set:#b}"),
                    );
                }
            }
        }
    };
    for g in enumerate_graphs(max_n.min(4)) {
        probe(&mut rec, &g);
    }
    enumerate_linear_rank3(max_n, true, |h| probe(&mut rec, h));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..bounds.samples.unwrap_or(200) {
        let s: u64 = rng.gen();
        let h = gen_random_hypergraph(rng.gen_range(2..=6), rng.gen_range(1..=6), s);
        probe(&mut rec, &h);
    }
    rec
}

/// The rank-2 classifier agrees with the oracle on every labeled graph up
/// to the bound, and its certificates re-validate.
fn rank2(bounds: &Bounds) -> Recorder {
    let max_n = bounds.max_n.unwrap_or(6);
    run_sharded(bounds.jobs, &|shard, nshards| {
        let mut rec = Recorder::default();
        for (i, g) in enumerate_graphs(max_n).enumerate() {
            if i % nshards != shard {
                continue;
            }
            rec.check();
            let (verdict, cert) = match classify_rank2(&g) {
                Ok(v) => v,
                Err(e) => {
                    rec.violate(&g, format!("classifier error: {e}"));
                    continue;
                }
            };
            match oracle_outcome(&g) {
                Ok(want) if want == verdict.outcome => {}
                Ok(want) => {
                    rec.violate(&g, format!("classifier {}, oracle {want}", verdict.outcome))
                }
                Err(e) => rec.violate(&g, e),
            }
            if let Err(e) = cert.validate(&g) {
                rec.violate(&g, format!("certificate rejected: {e}"));
            }
        }
        rec
    })
}

/// The rank-3 Avoider-last classifier agrees with the oracle on every
/// enumerated connected linear instance up to the bound, plus seeded random
/// linear instances up to 12 vertices.
fn rank3_avoider_last(bounds: &Bounds, seed: u64) -> Recorder {
    let max_n = bounds.max_n.unwrap_or(7);
    let samples = bounds.samples.unwrap_or(10_000);
    let probe = |rec: &mut Recorder, h: &Hypergraph, validate: bool| {
        rec.check();
        let (got, cert) = match classify_rank3_linear_avoider_last(h) {
            Ok(r) => r,
            Err(e) => {
                rec.violate(h, format!("classifier error: {e}"));
                return;
            }
        };
        let want = solve(h, LastPlayer::AvoiderLast).expect("population within bounds");
        if got != want {
            rec.violate(h, format!("classifier {got}, oracle {want}"));
        }
        if validate {
            if let Err(e) = cert.validate(h) {
                rec.violate(h, format!("certificate rejected: {e}"));
            }
        }
    };
    let mut total = run_sharded(bounds.jobs, &|shard, nshards| {
        let mut rec = Recorder::default();
        for n in 1..=max_n {
            enumerate_linear_rank3_on(n, true, shard, nshards, &mut |h| {
                let validate = rec.checked % 64 == 0;
                probe(&mut rec, h, validate);
            });
        }
        rec
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let n = rng.gen_range(2..=12);
        let h = random_linear3(n, rng.gen_range(1..=n), &mut rng);
        probe(&mut total, &h, i % 64 == 0);
    }
    total
}

/// The farthest-then-minimum-degree vertex is never a cut vertex, and every
/// valid instance has at least two non-cut vertices.
fn non_cut(bounds: &Bounds) -> Recorder {
    let max_n = bounds.max_n.unwrap_or(9);
    run_sharded(bounds.jobs, &|shard, nshards| {
        let mut rec = Recorder::default();
        for n in 2..=max_n {
            enumerate_linear_3uniform_connected(n, true, shard, nshards, &mut |h| {
                rec.check();
                let mut non_cut_vertices = 0;
                for v in h.vertices() {
                    let peeled = h.enforcer_update(v).expect("vertex of h");
                    if peeled.is_connected() {
                        non_cut_vertices += 1;
                    }
                }
                if non_cut_vertices < 2 {
                    rec.violate(h, format!("only {non_cut_vertices} non-cut vertices"));
                }
                for x in h.vertices() {
                    let u = match find_non_cut_vertex(h, x) {
                        Ok(u) => u,
                        Err(e) => {
                            rec.violate(h, format!("selection failed from {x}: {e}"));
                            continue;
                        }
                    };
                    let peeled = h.enforcer_update(u).expect("vertex of h");
                    if !peeled.is_connected() {
                        rec.violate(h, format!("selected cut vertex {u} from {x}"));
                    }
                }
            });
        }
        rec
    })
}

/// Every pairing the search finds certifies an Avoider win in both orders.
fn pairings(bounds: &Bounds) -> Recorder {
    let max_n = bounds.max_n.unwrap_or(6);
    let mut rec = Recorder::default();
    let probe = |rec: &mut Recorder, h: &Hypergraph| {
        if h.vertex_count() > 10 {
            return;
        }
        let Some(p) = find_pairing(h, 100_000) else {
            return;
        };
        rec.check();
        if let Err(e) = p.validate(h) {
            rec.violate(h, format!("pairing invalid: {e}"));
            return;
        }
        match oracle_outcome(h) {
            Ok(Outcome::Avoider) => {}
            Ok(o) => rec.violate(h, format!("paired instance has outcome {o}")),
            Err(e) => rec.violate(h, e),
        }
    };
    for g in enumerate_graphs(max_n.min(5)) {
        probe(&mut rec, &g);
    }
    enumerate_linear_rank3(max_n, true, |h| probe(&mut rec, h));
    for l in 3..=5 {
        probe(&mut rec, &gen_family(&GenSpec::Cycle3u { len: l }).unwrap());
    }
    for l in 2..=5 {
        let nunchaku = gen_family(&GenSpec::Nunchaku { len: l }).unwrap();
        probe(&mut rec, &nunchaku.enforcer_update(0).unwrap().remove_isolated());
    }
    rec
}

/// Leaf-edge reduction preserves outcomes; the reduced hypergraph is an
/// isolated vertex exactly for linear trees; a linear tree with two
/// leaf-edges is a chain.
fn reductions(bounds: &Bounds, seed: u64) -> Recorder {
    let max_n = bounds.max_n.unwrap_or(6);
    let mut rec = Recorder::default();
    let probe = |rec: &mut Recorder, h: &Hypergraph| {
        rec.check();
        let reduced = h.reduce_rank3().expect("rank at most 3");
        match (oracle_outcome(h), oracle_outcome(&reduced)) {
            (Ok(a), Ok(b)) if a == b => {}
            (Ok(a), Ok(b)) => {
                rec.violate(h, format!("outcome {a} became {b} after reduction ({reduced})"))
            }
            (Err(e), _) | (_, Err(e)) => rec.violate(h, e),
        }
        if h.is_uniform(3) && h.is_connected() {
            let reduces_out = reduced.vertex_count() == 1 && reduced.edge_count() == 0;
            // independent linear-tree test: each added edge brings |e|-1 new
            // vertices, so trees are exactly the connected linear instances
            // with n - 1 = sum of (|e| - 1)
            let edge_growth: usize = h.edges().iter().map(|e| e.len() - 1).sum();
            let is_tree = h.is_linear() && edge_growth + 1 == h.vertex_count();
            if reduces_out != is_tree {
                rec.violate(
                    h,
                    format!("reduction says tree = {reduces_out}, the count criterion disagrees"),
                );
            }
            if is_tree && h.edge_count() >= 2 && h.leaf_edges().len() == 2 {
                let kind = recognize_component(h).kind;
                if kind != Kind::Chain {
                    rec.violate(h, format!("two-leaf-edge tree recognized as {kind}"));
                }
            }
        }
    };
    enumerate_linear_rank3(max_n, false, |h| probe(&mut rec, h));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..bounds.samples.unwrap_or(500) {
        let n = rng.gen_range(2..=10);
        let h = random_linear3(n, rng.gen_range(1..=n), &mut rng);
        probe(&mut rec, &h);
    }
    rec
}

/// Searches for counterexamples to "minimum degree at least `d` makes
/// Enforcer win as last player". Witnesses are reported as violations of
/// the conjecture (they are discoveries, not implementation bugs).
pub fn conjecture_search(min_degree: usize, n_max: usize, seed: u64) -> SuiteReport {
    let started = Instant::now();
    let mut rec = Recorder::default();
    let probe = |rec: &mut Recorder, h: &Hypergraph| {
        if h.degrees().iter().any(|&d| d < min_degree) {
            return;
        }
        rec.check();
        if solve(h, LastPlayer::EnforcerLast).expect("within bounds") == Player::Avoider {
            rec.violate(h, format!("min degree {min_degree} yet Avoider wins as second-to-last"));
        }
    };
    // the known 13-vertex cut-vertex instance
    if min_degree <= 3 && n_max >= 13 {
        let fig7 = gen_family(&GenSpec::Fig7).unwrap();
        probe(&mut rec, &fig7);
    }
    for n in 2..=n_max.min(9) {
        enumerate_linear_3uniform_connected(n, false, 0, 1, &mut |h| probe(&mut rec, h));
    }
    // sampled mixed-rank instances beyond the enumeration
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..2000 {
        let n = rng.gen_range(4..=n_max.min(12).max(4));
        let h = random_linear3(n, rng.gen_range(n..=2 * n), &mut rng);
        if h.is_connected() {
            probe(&mut rec, &h);
        }
    }
    rec.into_report("conjecture-search", started)
}
