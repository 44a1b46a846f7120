//! Structural gadgets and their recognizers: chains, nunchakus, cycles,
//! prisms, linear trees, the small-graph taxonomy, pairings, and the
//! non-cut-vertex selection rule.

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, Hypergraph, VertexId};

/// An `ab`-chain: a simple walk of 3-edges whose endpoints `a` and `b` each
/// appear only in the first (resp. last) edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    edges: Vec<Edge>,
    endpoints: (VertexId, VertexId),
}

impl Chain {
    /// Builds a chain, checking every invariant: 3-uniform edges, consecutive
    /// edges intersecting (in exactly one vertex), non-consecutive edges
    /// disjoint, and endpoints private to the first and last edge.
    pub fn new(edges: Vec<Edge>, a: VertexId, b: VertexId) -> Result<Chain> {
        if edges.is_empty() {
            return Err(Error::Contract("a chain has at least one edge".into()));
        }
        if a == b {
            return Err(Error::Contract("chain endpoints must be distinct".into()));
        }
        for e in &edges {
            if e.len() != 3 {
                return Err(Error::Contract(format!("chain edge {e} is not a 3-edge")));
            }
        }
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let shared = (edges[i].mask() & edges[j].mask()).count_ones();
                let want = if j == i + 1 { 1 } else { 0 };
                if shared != want {
                    return Err(Error::Contract(format!(
                        "chain edges {} and {} share {} vertices, expected {}",
                        edges[i], edges[j], shared, want
                    )));
                }
            }
        }
        let private = |v: VertexId, idx: usize| {
            edges.iter().enumerate().all(|(i, e)| e.contains(v) == (i == idx))
        };
        if !private(a, 0) {
            return Err(Error::Contract(format!(
                "endpoint {a} must appear in the first edge only"
            )));
        }
        if !private(b, edges.len() - 1) {
            return Err(Error::Contract(format!(
                "endpoint {b} must appear in the last edge only"
            )));
        }
        Ok(Chain { edges, endpoints: (a, b) })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        self.endpoints
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The chain read from `b` to `a`.
    pub fn reversed(&self) -> Chain {
        Chain {
            edges: self.edges.iter().rev().cloned().collect(),
            endpoints: (self.endpoints.1, self.endpoints.0),
        }
    }
}

/// A set of pairwise disjoint vertex pairs hitting every edge of some target
/// hypergraph; certifies that Avoider wins both orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    pub pairs: Vec<(VertexId, VertexId)>,
}

impl Pairing {
    /// Checks the defining invariants against `h`: pairs pairwise disjoint
    /// and every edge contains some pair.
    pub fn validate(&self, h: &Hypergraph) -> Result<()> {
        let mut seen = 0u64;
        for &(x, y) in &self.pairs {
            if x == y || x >= h.vertex_count() || y >= h.vertex_count() {
                return Err(Error::Contract(format!("bad pair ({x}, {y})")));
            }
            let m = (1u64 << x) | (1u64 << y);
            if seen & m != 0 {
                return Err(Error::Contract(format!("pair ({x}, {y}) overlaps another pair")));
            }
            seen |= m;
        }
        for e in h.edges() {
            let em = e.mask();
            let hit = self
                .pairs
                .iter()
                .any(|&(x, y)| em & (1 << x) != 0 && em & (1 << y) != 0);
            if !hit {
                return Err(Error::Contract(format!("edge {e} contains no pair")));
            }
        }
        Ok(())
    }
}

/// What a connected hypergraph was recognized as.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    IsolatedVertex,
    Isolated2Edge,
    Chain,
    Nunchaku,
    Cycle,
    Prism,
    LinearTree,
    P1,
    P2,
    C5,
    Bull,
    PseudoStar,
    Other,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Kind::IsolatedVertex => "isolated vertex",
            Kind::Isolated2Edge => "isolated 2-edge",
            Kind::Chain => "chain",
            Kind::Nunchaku => "nunchaku",
            Kind::Cycle => "cycle",
            Kind::Prism => "prism",
            Kind::LinearTree => "linear tree",
            Kind::P1 => "P1",
            Kind::P2 => "P2",
            Kind::C5 => "C5",
            Kind::Bull => "bull",
            Kind::PseudoStar => "pseudo-star",
            Kind::Other => "other",
        };
        f.write_str(s)
    }
}

/// Structured evidence attached to a [`Recognition`]; each variant
/// re-validates against the definition of the recognized kind.
#[derive(Clone, Debug)]
pub enum Witness {
    /// The kind is fully determined by global counts; nothing to record.
    Definitional,
    /// Walk order for nunchakus and cycles.
    EdgeOrder(Vec<Edge>),
    /// The chain, with endpoints.
    Chain(Chain),
    /// Hub vertex of a pseudo-star.
    Hub(VertexId),
    /// Pattern-to-host vertex map (C5 cycle order; bull as triangle then the
    /// two pendant vertices).
    VertexMap(Vec<VertexId>),
}

#[derive(Clone, Debug)]
pub struct Recognition {
    pub kind: Kind,
    pub witness: Witness,
}

impl Recognition {
    fn plain(kind: Kind) -> Recognition {
        Recognition { kind, witness: Witness::Definitional }
    }
}

/// Orders the edges of `h` as a simple open walk: consecutive edges share
/// exactly one vertex, non-consecutive edges are disjoint, every edge and
/// vertex is used. Returns the edge order, or none.
fn assemble_open_walk(h: &Hypergraph) -> Option<Vec<Edge>> {
    let edges = h.edges();
    let m = edges.len();
    if m == 0 {
        return None;
    }
    // The intersection graph must be a path, so walk it greedily from an end.
    let inter: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| j != i && edges[i].mask() & edges[j].mask() != 0)
                .collect()
        })
        .collect();
    let start = (0..m).find(|&i| inter[i].len() <= 1)?;
    let mut order = vec![start];
    let mut used = vec![false; m];
    used[start] = true;
    while order.len() < m {
        let cur = *order.last().unwrap();
        let next = inter[cur].iter().copied().find(|&j| !used[j])?;
        order.push(next);
        used[next] = true;
    }
    // Walk conditions on the chosen order.
    for i in 0..m {
        for j in i + 1..m {
            let shared = (edges[order[i]].mask() & edges[order[j]].mask()).count_ones();
            let want = if j == i + 1 { 1 } else { 0 };
            if shared != want {
                return None;
            }
        }
    }
    let covered = order.iter().fold(0u64, |acc, &i| acc | edges[i].mask());
    if covered.count_ones() as usize != h.vertex_count() {
        return None;
    }
    Some(order.into_iter().map(|i| edges[i].clone()).collect())
}

/// Orders the edges of `h` as a simple closed walk (intersection graph a
/// cycle, adjacent edges sharing exactly one vertex, others disjoint).
fn assemble_closed_walk(h: &Hypergraph) -> Option<Vec<Edge>> {
    let edges = h.edges();
    let m = edges.len();
    if m < 3 {
        return None;
    }
    let inter: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| j != i && edges[i].mask() & edges[j].mask() != 0)
                .collect()
        })
        .collect();
    if inter.iter().any(|nb| nb.len() != 2) {
        return None;
    }
    let mut order = vec![0usize];
    let mut used = vec![false; m];
    used[0] = true;
    while order.len() < m {
        let cur = *order.last().unwrap();
        let next = inter[cur].iter().copied().find(|&j| !used[j])?;
        order.push(next);
        used[next] = true;
    }
    for i in 0..m {
        for j in i + 1..m {
            let shared = (edges[order[i]].mask() & edges[order[j]].mask()).count_ones();
            let adjacent = j == i + 1 || (i == 0 && j == m - 1);
            if shared != if adjacent { 1 } else { 0 } {
                return None;
            }
        }
    }
    let covered = order.iter().fold(0u64, |acc, &i| acc | edges[i].mask());
    if covered.count_ones() as usize != h.vertex_count() {
        return None;
    }
    Some(order.into_iter().map(|i| edges[i].clone()).collect())
}

/// Recognizes a nunchaku: a simple walk whose first and last edges have size
/// 2 and whose interior edges have size 3, with at least two edges.
pub fn is_nunchaku(h: &Hypergraph) -> Recognition {
    let m = h.edge_count();
    if m < 2 {
        return Recognition::plain(Kind::Other);
    }
    let walk = match assemble_open_walk(h) {
        Some(w) => w,
        None => return Recognition::plain(Kind::Other),
    };
    let sizes_ok = walk.first().unwrap().len() == 2
        && walk.last().unwrap().len() == 2
        && walk[1..m - 1].iter().all(|e| e.len() == 3);
    if sizes_ok {
        Recognition { kind: Kind::Nunchaku, witness: Witness::EdgeOrder(walk) }
    } else {
        Recognition::plain(Kind::Other)
    }
}

/// Recognizes a cycle: a closed simple walk of 3-edges (so `2ℓ` vertices for
/// `ℓ ≥ 3` edges).
fn is_cycle(h: &Hypergraph) -> Recognition {
    // `2ℓ` vertices over `ℓ` 3-edges forces the junction vertices to be
    // pairwise distinct, which a closed walk alone does not.
    if !h.is_uniform(3) || h.vertex_count() != 2 * h.edge_count() {
        return Recognition::plain(Kind::Other);
    }
    match assemble_closed_walk(h) {
        Some(w) => Recognition { kind: Kind::Cycle, witness: Witness::EdgeOrder(w) },
        None => Recognition::plain(Kind::Other),
    }
}

/// Recognizes the prism, which is the unique connected linear 3-uniform
/// hypergraph with 6 vertices, 4 edges and every degree 2.
fn is_prism(h: &Hypergraph) -> bool {
    h.vertex_count() == 6
        && h.edge_count() == 4
        && h.is_uniform(3)
        && h.is_linear()
        && h.is_connected()
        && h.degrees().iter().all(|&d| d == 2)
}

/// Recognizes a chain of 3-edges (as a standalone hypergraph; the endpoints
/// of the witness are the smallest eligible vertex ids).
fn is_chain(h: &Hypergraph) -> Recognition {
    if !h.is_uniform(3) || h.edge_count() == 0 {
        return Recognition::plain(Kind::Other);
    }
    let walk = match assemble_open_walk(h) {
        Some(w) => w,
        None => return Recognition::plain(Kind::Other),
    };
    let deg = h.degrees();
    let ends = if walk.len() == 1 {
        let m = walk[0].members();
        Some((m[0], m[1]))
    } else {
        let next = walk[1].mask();
        let prev = walk[walk.len() - 2].mask();
        let a = walk[0]
            .members()
            .iter()
            .copied()
            .find(|&v| deg[v] == 1 && next & (1 << v) == 0);
        let b = walk[walk.len() - 1]
            .members()
            .iter()
            .copied()
            .find(|&v| deg[v] == 1 && prev & (1 << v) == 0);
        a.zip(b)
    };
    match ends {
        Some((a, b)) if a != b => match Chain::new(walk, a, b) {
            Ok(c) => Recognition { kind: Kind::Chain, witness: Witness::Chain(c) },
            Err(_) => Recognition::plain(Kind::Other),
        },
        _ => Recognition::plain(Kind::Other),
    }
}

/// Whether `h` is a linear tree: 3-uniform, linear, and reducible to a single
/// isolated vertex by leaf-edge removal.
fn is_linear_tree(h: &Hypergraph) -> bool {
    if !h.is_uniform(3) || !h.is_linear() {
        return false;
    }
    match h.reduce_rank3() {
        Ok(r) => r.vertex_count() == 1 && r.edge_count() == 0,
        Err(_) => false,
    }
}

/// Classifies a connected hypergraph as exactly one [`Kind`]: the isolated
/// kinds first, then the rank-3 gadgets when a 3-edge is present, then the
/// small-graph taxonomy for rank ≤ 2, and `Other` for everything else.
pub fn recognize_component(h: &Hypergraph) -> Recognition {
    if h.vertex_count() == 1 && h.edge_count() == 0 {
        return Recognition::plain(Kind::IsolatedVertex);
    }
    if h.vertex_count() == 2 && h.edges().len() == 1 && h.edges()[0].len() == 2 {
        return Recognition::plain(Kind::Isolated2Edge);
    }
    let rank = h.rank();
    if rank == 3 {
        if is_prism(h) {
            return Recognition::plain(Kind::Prism);
        }
        let c = is_cycle(h);
        if c.kind == Kind::Cycle {
            return c;
        }
        let nk = is_nunchaku(h);
        if nk.kind == Kind::Nunchaku {
            return nk;
        }
        let ch = is_chain(h);
        if ch.kind == Kind::Chain {
            return ch;
        }
        if is_linear_tree(h) {
            return Recognition::plain(Kind::LinearTree);
        }
        return Recognition::plain(Kind::Other);
    }
    if rank <= 2 {
        return match graph_recognizers(h) {
            Ok(r) => r,
            Err(_) => Recognition::plain(Kind::Other),
        };
    }
    Recognition::plain(Kind::Other)
}

/// The connected-graph taxonomy behind the rank-2 classification: P1, P2,
/// C5, bull, pseudo-star, or `Other`.
pub fn graph_recognizers(g: &Hypergraph) -> Result<Recognition> {
    if g.rank() > 2 {
        return Err(Error::Unsupported(format!(
            "graph taxonomy requires rank at most 2, got rank {}",
            g.rank()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Contract("graph taxonomy requires a connected graph".into()));
    }
    // 1-edges fall outside the taxonomy; they are stripped upstream.
    if g.edges().iter().any(|e| e.len() < 2) {
        return Ok(Recognition::plain(Kind::Other));
    }
    let g = g.normalize();
    let n = g.vertex_count();
    let m = g.edge_count();
    if n == 1 {
        return Ok(Recognition::plain(Kind::P1));
    }
    if n == 2 && m == 1 {
        return Ok(Recognition::plain(Kind::P2));
    }
    if let Some(order) = cycle_order(&g, 5) {
        return Ok(Recognition { kind: Kind::C5, witness: Witness::VertexMap(order) });
    }
    if let Some(map) = bull_map(&g) {
        return Ok(Recognition { kind: Kind::Bull, witness: Witness::VertexMap(map) });
    }
    if n >= 3 {
        for hub in g.vertices() {
            let peeled = g.enforcer_update(hub).expect("hub is a vertex of g");
            if peeled
                .connected_components()
                .iter()
                .all(|c| c.vertices.len() <= 2)
            {
                return Ok(Recognition { kind: Kind::PseudoStar, witness: Witness::Hub(hub) });
            }
        }
    }
    Ok(Recognition::plain(Kind::Other))
}

/// If `g` is exactly the cycle C_k, returns its vertices in cycle order.
fn cycle_order(g: &Hypergraph, k: usize) -> Option<Vec<VertexId>> {
    if g.vertex_count() != k || g.edge_count() != k {
        return None;
    }
    if g.degrees().iter().any(|&d| d != 2) {
        return None;
    }
    let adj = adjacency(g);
    let mut order = vec![0];
    let mut prev = usize::MAX;
    while order.len() < k {
        let cur = *order.last().unwrap();
        let next = adj[cur].iter().copied().find(|&v| v != prev)?;
        prev = cur;
        order.push(next);
    }
    // degrees all 2 and k edges force the closing edge, but check anyway
    if adj[order[k - 1]].contains(&order[0]) {
        Some(order)
    } else {
        None
    }
}

/// If `g` is exactly the bull, returns `[x, y, z, p, q]` with triangle
/// `x y z` and pendant edges `x p`, `y q`.
fn bull_map(g: &Hypergraph) -> Option<Vec<VertexId>> {
    if g.vertex_count() != 5 || g.edge_count() != 5 {
        return None;
    }
    let mut deg = g.degrees();
    deg.sort_unstable();
    if deg != [1, 1, 2, 3, 3] {
        return None;
    }
    let adj = adjacency(g);
    let degrees = g.degrees();
    let x = (0..5).find(|&v| degrees[v] == 3)?;
    let y = (x + 1..5).find(|&v| degrees[v] == 3)?;
    if !adj[x].contains(&y) {
        return None;
    }
    let z = (0..5).find(|&v| degrees[v] == 2 && adj[x].contains(&v) && adj[y].contains(&v))?;
    let p = adj[x].iter().copied().find(|&v| degrees[v] == 1)?;
    let q = adj[y].iter().copied().find(|&v| degrees[v] == 1)?;
    Some(vec![x, y, z, p, q])
}

fn adjacency(g: &Hypergraph) -> Vec<Vec<VertexId>> {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for e in g.edges() {
        if let [a, b] = e.members() {
            adj[*a].push(*b);
            adj[*b].push(*a);
        }
    }
    for nb in &mut adj {
        nb.sort_unstable();
        nb.dedup();
    }
    adj
}

/// Forbidden patterns of the rank-2 outcome theorem (plus P3, whose absence
/// is the Avoider-win side).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    P3,
    TwoP3,
    C4,
    Sunlet3,
}

impl Pattern {
    /// Pattern as (vertex count, edge list); the embedding maps pattern
    /// vertex `i` to host vertex `map[i]`.
    pub fn shape(self) -> (usize, &'static [(usize, usize)]) {
        match self {
            Pattern::P3 => (3, &[(0, 1), (1, 2)]),
            Pattern::TwoP3 => (6, &[(0, 1), (1, 2), (3, 4), (4, 5)]),
            Pattern::C4 => (4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
            Pattern::Sunlet3 => (6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]),
        }
    }
}

/// An injective vertex map embedding a [`Pattern`] into a host graph as a
/// (not necessarily induced) subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub pattern: Pattern,
    pub map: Vec<VertexId>,
}

impl Embedding {
    /// Checks injectivity and that every pattern edge is a host edge.
    pub fn validate(&self, g: &Hypergraph) -> Result<()> {
        let (k, edges) = self.pattern.shape();
        if self.map.len() != k {
            return Err(Error::Contract("embedding has wrong arity".into()));
        }
        let mut sorted = self.map.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != k {
            return Err(Error::Contract("embedding is not injective".into()));
        }
        if sorted.last().is_some_and(|&v| v >= g.vertex_count()) {
            return Err(Error::Contract("embedding maps outside the host".into()));
        }
        for &(a, b) in edges {
            let e = Edge::new(vec![self.map[a], self.map[b]]);
            if !g.edges().contains(&e) {
                return Err(Error::Contract(format!("host is missing edge {e}")));
            }
        }
        Ok(())
    }
}

/// Searches for `pattern` as a subgraph of `g` using a detector specialized
/// per pattern. `None` means the pattern does not embed.
pub fn contains_forbidden(g: &Hypergraph, pattern: Pattern) -> Option<Embedding> {
    let g = g.normalize();
    let adj = adjacency(&g);
    let map = match pattern {
        Pattern::P3 => find_p3(&adj).map(|(x, y, z)| vec![x, y, z]),
        Pattern::C4 => find_c4(&adj),
        Pattern::Sunlet3 => find_sunlet3(&adj),
        Pattern::TwoP3 => find_two_p3(&adj),
    }?;
    let emb = Embedding { pattern, map };
    debug_assert!(emb.validate(&g).is_ok());
    Some(emb)
}

/// Generic backtracking subgraph search; exists as an independent check on
/// the specialized detectors.
pub fn contains_forbidden_generic(g: &Hypergraph, pattern: Pattern) -> Option<Embedding> {
    let g = g.normalize();
    let adj = adjacency(&g);
    let (k, edges) = pattern.shape();
    let n = g.vertex_count();
    let mut map = Vec::with_capacity(k);
    fn rec(
        n: usize,
        k: usize,
        edges: &[(usize, usize)],
        adj: &[Vec<VertexId>],
        map: &mut Vec<VertexId>,
    ) -> bool {
        if map.len() == k {
            return true;
        }
        let i = map.len();
        'cand: for v in 0..n {
            if map.contains(&v) {
                continue;
            }
            for &(a, b) in edges {
                let (a, b) = (a.min(b), a.max(b));
                if b == i && a < i && !adj[map[a]].contains(&v) {
                    continue 'cand;
                }
            }
            map.push(v);
            if rec(n, k, edges, adj, map) {
                return true;
            }
            map.pop();
        }
        false
    }
    if rec(n, k, edges, &adj, &mut map) {
        Some(Embedding { pattern, map })
    } else {
        None
    }
}

fn find_p3(adj: &[Vec<VertexId>]) -> Option<(VertexId, VertexId, VertexId)> {
    for (y, nb) in adj.iter().enumerate() {
        if nb.len() >= 2 {
            return Some((nb[0], y, nb[1]));
        }
    }
    None
}

fn find_c4(adj: &[Vec<VertexId>]) -> Option<Vec<VertexId>> {
    // two vertices with two common neighbours
    let n = adj.len();
    for u in 0..n {
        for v in u + 1..n {
            let common: Vec<_> = adj[u].iter().copied().filter(|w| adj[v].contains(w)).collect();
            if common.len() >= 2 {
                return Some(vec![u, common[0], v, common[1]]);
            }
        }
    }
    None
}

fn find_sunlet3(adj: &[Vec<VertexId>]) -> Option<Vec<VertexId>> {
    // triangle plus a system of distinct pendant representatives
    let n = adj.len();
    for x in 0..n {
        for &y in adj[x].iter().filter(|&&y| y > x) {
            for &z in adj[y].iter().filter(|&&z| z > y) {
                if !adj[x].contains(&z) {
                    continue;
                }
                let tri = [x, y, z];
                let outside = |v: VertexId| !tri.contains(&v);
                for &px in adj[x].iter().filter(|&&v| outside(v)) {
                    for &py in adj[y].iter().filter(|&&v| outside(v) && v != px) {
                        for &pz in adj[z].iter().filter(|&&v| outside(v) && v != px && v != py) {
                            return Some(vec![x, y, z, px, py, pz]);
                        }
                    }
                }
            }
        }
    }
    None
}

fn find_two_p3(adj: &[Vec<VertexId>]) -> Option<Vec<VertexId>> {
    // all P3s (centre + ordered neighbour pair), then any vertex-disjoint two
    let mut p3s = Vec::new();
    for (y, nb) in adj.iter().enumerate() {
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                p3s.push([nb[i], y, nb[j]]);
            }
        }
    }
    for (i, p) in p3s.iter().enumerate() {
        for q in &p3s[i + 1..] {
            if p.iter().all(|v| !q.contains(v)) {
                return Some(vec![p[0], p[1], p[2], q[0], q[1], q[2]]);
            }
        }
    }
    None
}

/// Vertex distances from `x`, where one step moves within an edge; the
/// distance to `v` is the length of a shortest chain from `x` to `v`.
pub fn distances_from(h: &Hypergraph, x: VertexId) -> Result<Vec<Option<usize>>> {
    if x >= h.vertex_count() {
        return Err(Error::UnknownVertex { vertex: x, n: h.vertex_count() });
    }
    let mut dist = vec![None; h.vertex_count()];
    dist[x] = Some(0);
    let mut frontier = vec![x];
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for e in h.edges() {
            if e.members().iter().any(|v| frontier.contains(v)) {
                for &v in e.members() {
                    if dist[v].is_none() {
                        dist[v] = Some(d);
                        next.push(v);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(dist)
}

/// Shortest `ab`-chain in a linear 3-uniform hypergraph, or `None` when `a`
/// and `b` are disconnected. The chain found has length `dist(a, b)`.
pub fn shortest_chain(h: &Hypergraph, a: VertexId, b: VertexId) -> Result<Option<Chain>> {
    for v in [a, b] {
        if v >= h.vertex_count() {
            return Err(Error::UnknownVertex { vertex: v, n: h.vertex_count() });
        }
    }
    if a == b {
        return Err(Error::Contract("chain endpoints must be distinct".into()));
    }
    if !h.is_linear() {
        return Err(Error::Unsupported("shortest chains require a linear hypergraph".into()));
    }
    // Breadth-first layering over the 3-edges only.
    let edges: Vec<&Edge> = h.edges().iter().filter(|e| e.len() == 3).collect();
    let mut edge_dist: Vec<Option<usize>> = vec![None; edges.len()];
    let mut parent: Vec<Option<usize>> = vec![None; edges.len()];
    let mut frontier = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        if e.contains(a) {
            edge_dist[i] = Some(1);
            frontier.push(i);
        }
    }
    let hit_b = |i: usize| edges[i].contains(b);
    let mut reached = frontier.iter().copied().find(|&i| hit_b(i));
    while reached.is_none() && !frontier.is_empty() {
        let mut next = Vec::new();
        for &i in &frontier {
            for (j, e) in edges.iter().enumerate() {
                if edge_dist[j].is_none() && e.mask() & edges[i].mask() != 0 {
                    edge_dist[j] = Some(edge_dist[i].unwrap() + 1);
                    parent[j] = Some(i);
                    next.push(j);
                }
            }
        }
        reached = next.iter().copied().find(|&i| hit_b(i));
        frontier = next;
    }
    let Some(last) = reached else {
        return Ok(None);
    };
    let mut seq = Vec::new();
    let mut cur = Some(last);
    while let Some(i) = cur {
        seq.push(edges[i].clone());
        cur = parent[i];
    }
    seq.reverse();
    // A shortest breadth-first walk admits no shortcut, so it is already a
    // chain with private endpoints; Chain::new re-checks every invariant.
    Chain::new(seq, a, b).map(Some).map_err(|e| {
        Error::Internal(format!("breadth-first walk failed chain validation: {e}"))
    })
}

/// Joins an `ab`-chain and a `bc`-chain into an `ac`-chain using only their
/// edges: a prefix of `p` when `c` already lies on it, plain concatenation
/// when the chains only share `b`, and a shortest chain through the union of
/// their edges otherwise.
pub fn compose_chains(p: &Chain, q: &Chain) -> Result<Chain> {
    let (a, b) = p.endpoints();
    let (qb, c) = q.endpoints();
    if b != qb {
        return Err(Error::Contract(format!(
            "chains do not share an endpoint: {b} vs {qb}"
        )));
    }
    if a == c {
        return Err(Error::Contract("outer endpoints must be distinct".into()));
    }
    if let Some(i) = p.edges().iter().position(|e| e.contains(c)) {
        return Chain::new(p.edges()[..=i].to_vec(), a, c);
    }
    let mut edges = p.edges().to_vec();
    edges.extend(q.edges().iter().cloned());
    if let Ok(chain) = Chain::new(edges.clone(), a, c) {
        return Ok(chain);
    }
    // Overlapping chains: search the union. Relabel to a compact hypergraph.
    edges.dedup();
    let mut verts: Vec<VertexId> = edges.iter().flat_map(|e| e.members().iter().copied()).collect();
    verts.sort_unstable();
    verts.dedup();
    let index = |v: VertexId| verts.binary_search(&v).unwrap();
    let relabeled: Vec<Edge> = edges
        .iter()
        .map(|e| Edge::new(e.members().iter().map(|&v| index(v)).collect()))
        .collect();
    let union = Hypergraph::new(verts.len(), relabeled)
        .map_err(|e| Error::Internal(format!("bad chain union: {e}")))?;
    let found = shortest_chain(&union, index(a), index(c))?
        .ok_or_else(|| Error::Internal("chain union lost connectivity".into()))?;
    let restored: Vec<Edge> = found
        .edges()
        .iter()
        .map(|e| Edge::new(e.members().iter().map(|&v| verts[v]).collect()))
        .collect();
    Chain::new(restored, a, c)
}

/// Among the vertices farthest from `x`, returns the one of minimum degree
/// (ties to the lowest id); in a connected reduced linear 3-uniform
/// hypergraph this vertex is never a cut vertex.
pub fn find_non_cut_vertex(h: &Hypergraph, x: VertexId) -> Result<VertexId> {
    if x >= h.vertex_count() {
        return Err(Error::UnknownVertex { vertex: x, n: h.vertex_count() });
    }
    if h.vertex_count() == 1 && h.edge_count() == 0 {
        return Err(Error::Contract("isolated vertex has no non-cut vertex to select".into()));
    }
    if !h.is_connected() || !h.is_linear() || !h.is_uniform(3) || !h.is_reduced_rank3() {
        return Err(Error::Contract(
            "non-cut selection requires a connected reduced linear 3-uniform hypergraph".into(),
        ));
    }
    let dist = distances_from(h, x)?;
    let far = dist
        .iter()
        .map(|d| d.expect("connected hypergraph"))
        .max()
        .expect("nonempty vertex set");
    let deg = h.degrees();
    (0..h.vertex_count())
        .filter(|&v| dist[v] == Some(far))
        .min_by_key(|&v| (deg[v], v))
        .ok_or_else(|| Error::Internal("no farthest vertex".into()))
}

/// Searches for a pairing of `h`. Constructive fast paths cover cycles,
/// matchings, and walks ending in a 2-edge; otherwise an exact backtracking
/// search runs within `budget` nodes. `None` means no pairing was found
/// within the budget, not that none exists — except when the search
/// completes, which it does for every small instance.
pub fn find_pairing(h: &Hypergraph, budget: u64) -> Option<Pairing> {
    let h = h.normalize();
    if h.has_empty_edge() || h.edges().iter().any(|e| e.len() < 2) {
        return None;
    }
    for fast in [pairing_for_matching, pairing_for_cycle, pairing_for_half_nunchaku] {
        if let Some(p) = fast(&h) {
            debug_assert!(p.validate(&h).is_ok());
            return Some(p);
        }
    }
    let mut nodes = 0u64;
    let mut pairs = Vec::new();
    if backtrack_pairing(&h, 0, &mut pairs, &mut nodes, budget) {
        let p = Pairing { pairs };
        debug_assert!(p.validate(&h).is_ok());
        Some(p)
    } else {
        None
    }
}

/// Pairwise disjoint edges: two vertices of each edge form a pairing.
fn pairing_for_matching(h: &Hypergraph) -> Option<Pairing> {
    let mut seen = 0u64;
    for e in h.edges() {
        if e.mask() & seen != 0 {
            return None;
        }
        seen |= e.mask();
    }
    if h.edge_count() == 0 {
        return Some(Pairing { pairs: Vec::new() });
    }
    Some(Pairing {
        pairs: h.edges().iter().map(|e| (e.members()[0], e.members()[1])).collect(),
    })
}

/// In a cycle every edge is `{junction, middle, junction}`; pairing each
/// middle vertex with the junction preceding it hits every edge.
fn pairing_for_cycle(h: &Hypergraph) -> Option<Pairing> {
    let rec = is_cycle(h);
    let Witness::EdgeOrder(walk) = &rec.witness else {
        return None;
    };
    let deg = h.degrees();
    let mut pairs = Vec::new();
    for (i, e) in walk.iter().enumerate() {
        let prev = &walk[(i + walk.len() - 1) % walk.len()];
        let junction = e.members().iter().copied().find(|&v| prev.contains(v))?;
        let middle = e.members().iter().copied().find(|&v| deg[v] == 1)?;
        pairs.push((middle, junction));
    }
    Some(Pairing { pairs })
}

/// A walk `3, 3, …, 3, 2` (a nunchaku with one end edge shrunk away, as
/// arises after the opposite endpoint is claimed): each 3-edge pairs its two
/// vertices not shared with the next edge, and the final 2-edge pairs its
/// own two vertices.
fn pairing_for_half_nunchaku(h: &Hypergraph) -> Option<Pairing> {
    let walk = assemble_open_walk(h)?;
    let m = walk.len();
    if m < 2 {
        return None;
    }
    let mut walk = walk;
    if walk[0].len() == 2 && walk[m - 1].len() == 3 {
        walk.reverse();
    }
    if walk[m - 1].len() != 2 || walk[..m - 1].iter().any(|e| e.len() != 3) {
        return None;
    }
    let mut pairs = Vec::new();
    for i in 0..m - 1 {
        let next_mask = walk[i + 1].mask();
        let free: Vec<_> = walk[i]
            .members()
            .iter()
            .copied()
            .filter(|&v| next_mask & (1 << v) == 0)
            .collect();
        if free.len() != 2 {
            return None;
        }
        pairs.push((free[0], free[1]));
    }
    let last = walk[m - 1].members();
    pairs.push((last[0], last[1]));
    Some(Pairing { pairs })
}

fn backtrack_pairing(
    h: &Hypergraph,
    from_edge: usize,
    pairs: &mut Vec<(VertexId, VertexId)>,
    nodes: &mut u64,
    budget: u64,
) -> bool {
    *nodes += 1;
    if *nodes > budget {
        return false;
    }
    let used: u64 = pairs.iter().fold(0, |acc, &(x, y)| acc | (1 << x) | (1 << y));
    // first edge not yet hit by a chosen pair
    let unhit = h.edges()[from_edge..].iter().position(|e| {
        !pairs
            .iter()
            .any(|&(x, y)| e.mask() & (1 << x) != 0 && e.mask() & (1 << y) != 0)
    });
    let Some(offset) = unhit else {
        return true;
    };
    let edge = &h.edges()[from_edge + offset];
    let mem = edge.members();
    for i in 0..mem.len() {
        for j in i + 1..mem.len() {
            let (x, y) = (mem[i], mem[j]);
            if used & ((1 << x) | (1 << y)) != 0 {
                continue;
            }
            pairs.push((x, y));
            if backtrack_pairing(h, from_edge + offset, pairs, nodes, budget) {
                return true;
            }
            pairs.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;
    use crate::oracle::{outcome, Outcome};

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_edge_lists(n, edges).unwrap()
    }

    fn prism() -> Hypergraph {
        h(6, &[&[3, 4, 5], &[1, 2, 5], &[0, 2, 4], &[0, 1, 3]])
    }

    /// junctions 0..ℓ, middles ℓ..2ℓ
    fn cycle3u(l: usize) -> Hypergraph {
        let edges: Vec<Vec<usize>> =
            (0..l).map(|i| vec![i, l + i, (i + 1) % l]).collect();
        let refs: Vec<&[usize]> = edges.iter().map(|e| e.as_slice()).collect();
        h(2 * l, &refs)
    }

    /// vertices 0..2ℓ−1 along the walk
    fn nunchaku(l: usize) -> Hypergraph {
        let mut edges: Vec<Vec<usize>> = vec![vec![0, 1]];
        for i in 0..l - 2 {
            edges.push(vec![2 * i + 1, 2 * i + 2, 2 * i + 3]);
        }
        edges.push(vec![2 * (l - 2) + 1, 2 * (l - 2) + 2]);
        let refs: Vec<&[usize]> = edges.iter().map(|e| e.as_slice()).collect();
        h(2 * l - 1, &refs)
    }

    #[test]
    fn chain_invariants() {
        let e = |v: &[usize]| Edge::new(v.to_vec());
        let c = Chain::new(vec![e(&[0, 1, 2]), e(&[2, 3, 4])], 0, 4).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.endpoints(), (0, 4));
        // endpoint in a later edge
        assert!(Chain::new(vec![e(&[0, 1, 2]), e(&[2, 3, 0])], 0, 3).is_err());
        // non-consecutive edges intersect
        assert!(Chain::new(
            vec![e(&[0, 1, 2]), e(&[2, 3, 4]), e(&[4, 5, 1])],
            0,
            5
        )
        .is_err());
        // 2-edge
        assert!(Chain::new(vec![e(&[0, 1])], 0, 1).is_err());
    }

    #[test]
    fn shortest_chain_examples() {
        // prism: two vertices sharing an edge → length 1
        let p = prism();
        let c = shortest_chain(&p, 3, 4).unwrap().unwrap();
        assert_eq!(c.len(), 1);
        // 3-uniform cycle of length 4: antipodal junctions → length 2
        let c4 = cycle3u(4);
        let c = shortest_chain(&c4, 0, 2).unwrap().unwrap();
        assert_eq!(c.len(), 2);
        // disconnected pair
        let two = h(6, &[&[0, 1, 2], &[3, 4, 5]]);
        assert!(shortest_chain(&two, 0, 3).unwrap().is_none());
        // non-linear input rejected
        let bad = h(4, &[&[0, 1, 2], &[0, 1, 3]]);
        assert!(matches!(shortest_chain(&bad, 2, 3), Err(Error::Unsupported(_))));
    }

    #[test]
    fn compose_chain_cases() {
        let e = |v: &[usize]| Edge::new(v.to_vec());
        // internally disjoint: plain concatenation
        let p = Chain::new(vec![e(&[0, 1, 2]), e(&[2, 3, 4])], 0, 4).unwrap();
        let q = Chain::new(vec![e(&[4, 5, 6])], 4, 6).unwrap();
        let pq = compose_chains(&p, &q).unwrap();
        assert_eq!(pq.endpoints(), (0, 6));
        assert_eq!(pq.len(), 3);
        // c on p: prefix up to the first edge containing c
        let q2 = Chain::new(vec![e(&[4, 5, 6]), e(&[6, 7, 3])], 4, 3).unwrap();
        let pc = compose_chains(&p, &q2).unwrap();
        assert_eq!(pc.endpoints(), (0, 3));
        assert_eq!(pc.edges(), &[e(&[0, 1, 2]), e(&[2, 3, 4])]);
        // overlapping interiors: fall back to search, result still validates
        let p3 = Chain::new(vec![e(&[0, 1, 2]), e(&[2, 3, 4]), e(&[4, 5, 6])], 0, 6).unwrap();
        let q3 = Chain::new(vec![e(&[6, 5, 4]), e(&[4, 7, 8])], 6, 8).unwrap();
        let r = compose_chains(&p3, &q3).unwrap();
        assert_eq!(r.endpoints(), (0, 8));
        // mismatched pivots
        assert!(compose_chains(&q, &q2).is_err());
    }

    #[test]
    fn recognize_gadgets() {
        assert_eq!(recognize_component(&Hypergraph::empty(1)).kind, Kind::IsolatedVertex);
        assert_eq!(recognize_component(&h(2, &[&[0, 1]])).kind, Kind::Isolated2Edge);
        assert_eq!(recognize_component(&prism()).kind, Kind::Prism);
        for l in 3..=5 {
            assert_eq!(recognize_component(&cycle3u(l)).kind, Kind::Cycle, "cycle {l}");
        }
        for l in 3..=5 {
            assert_eq!(recognize_component(&nunchaku(l)).kind, Kind::Nunchaku, "nunchaku {l}");
        }
        let chain = h(5, &[&[0, 1, 2], &[2, 3, 4]]);
        let r = recognize_component(&chain);
        assert_eq!(r.kind, Kind::Chain);
        if let Witness::Chain(c) = r.witness {
            assert_eq!(c.len(), 2);
        } else {
            panic!("chain kind without chain witness");
        }
        // star of three 3-edges at a hub: a linear tree but not a chain
        let tree = h(7, &[&[0, 1, 2], &[0, 3, 4], &[0, 5, 6]]);
        assert_eq!(recognize_component(&tree).kind, Kind::LinearTree);
        // cycle plus chord is nothing from the list
        let other = h(6, &[&[0, 3, 1], &[1, 4, 2], &[2, 5, 0], &[0, 1, 4]]);
        assert_eq!(recognize_component(&other).kind, Kind::Other);
    }

    #[test]
    fn nunchaku_of_length_two_is_p3() {
        let p3 = h(3, &[&[0, 1], &[1, 2]]);
        let r = is_nunchaku(&p3);
        assert_eq!(r.kind, Kind::Nunchaku);
        // but as a component, the graph taxonomy takes precedence
        assert_eq!(recognize_component(&p3).kind, Kind::PseudoStar);
        assert_eq!(is_nunchaku(&prism()).kind, Kind::Other);
        assert_eq!(is_nunchaku(&h(2, &[&[0, 1]])).kind, Kind::Other);
    }

    #[test]
    fn graph_taxonomy() {
        let path = |k: usize| {
            let edges: Vec<Vec<usize>> = (0..k - 1).map(|i| vec![i, i + 1]).collect();
            let refs: Vec<&[usize]> = edges.iter().map(|e| e.as_slice()).collect();
            h(k, &refs)
        };
        assert_eq!(graph_recognizers(&Hypergraph::empty(1)).unwrap().kind, Kind::P1);
        assert_eq!(graph_recognizers(&h(2, &[&[0, 1]])).unwrap().kind, Kind::P2);
        let c3 = h(3, &[&[0, 1], &[1, 2], &[2, 0]]);
        assert_eq!(graph_recognizers(&c3).unwrap().kind, Kind::PseudoStar);
        for k in 3..=5 {
            assert_eq!(graph_recognizers(&path(k)).unwrap().kind, Kind::PseudoStar, "P{k}");
        }
        assert_eq!(graph_recognizers(&path(6)).unwrap().kind, Kind::Other);
        let c5 = h(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 0]]);
        assert_eq!(graph_recognizers(&c5).unwrap().kind, Kind::C5);
        let bull = h(5, &[&[0, 1], &[1, 2], &[2, 0], &[0, 3], &[1, 4]]);
        let r = graph_recognizers(&bull).unwrap();
        assert_eq!(r.kind, Kind::Bull);
        if let Witness::VertexMap(m) = r.witness {
            assert_eq!(m.len(), 5);
        }
        assert!(graph_recognizers(&h(3, &[&[0, 1, 2]])).is_err());
    }

    #[test]
    fn forbidden_patterns() {
        let c4 = h(4, &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]]);
        assert!(contains_forbidden(&c4, Pattern::P3).is_some());
        assert!(contains_forbidden(&c4, Pattern::C4).is_some());
        let bull = h(5, &[&[0, 1], &[1, 2], &[2, 0], &[0, 3], &[1, 4]]);
        for p in [Pattern::TwoP3, Pattern::C4, Pattern::Sunlet3] {
            assert!(contains_forbidden(&bull, p).is_none(), "{p:?} in bull");
        }
        let sunlet = h(6, &[&[0, 1], &[1, 2], &[2, 0], &[0, 3], &[1, 4], &[2, 5]]);
        let emb = contains_forbidden(&sunlet, Pattern::Sunlet3).unwrap();
        emb.validate(&sunlet).unwrap();
        let p3p3 = h(6, &[&[0, 1], &[1, 2], &[3, 4], &[4, 5]]);
        let emb = contains_forbidden(&p3p3, Pattern::TwoP3).unwrap();
        emb.validate(&p3p3).unwrap();
    }

    #[test]
    fn specialized_detectors_agree_with_generic() {
        // all labeled graphs on 5 vertices is too slow here; use 4 plus a
        // selection of 6-vertex instances where every pattern can occur
        let pairs4: Vec<(usize, usize)> =
            (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).collect();
        let mut hosts = Vec::new();
        for mask in 0u32..(1 << pairs4.len()) {
            let edges: Vec<Vec<usize>> = pairs4
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &(a, b))| vec![a, b])
                .collect();
            let refs: Vec<&[usize]> = edges.iter().map(|e| e.as_slice()).collect();
            hosts.push(h(4, &refs));
        }
        hosts.push(h(6, &[&[0, 1], &[1, 2], &[2, 0], &[0, 3], &[1, 4], &[2, 5]]));
        hosts.push(h(6, &[&[0, 1], &[1, 2], &[3, 4], &[4, 5]]));
        hosts.push(h(6, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 0]]));
        for host in &hosts {
            for p in [Pattern::P3, Pattern::TwoP3, Pattern::C4, Pattern::Sunlet3] {
                let fast = contains_forbidden(host, p);
                let slow = contains_forbidden_generic(host, p);
                assert_eq!(fast.is_some(), slow.is_some(), "{host} {p:?}");
                if let Some(e) = fast {
                    e.validate(host).unwrap();
                }
            }
        }
    }

    #[test]
    fn non_cut_selection() {
        for x in 0..6 {
            let u = find_non_cut_vertex(&prism(), x).unwrap();
            assert!(prism().enforcer_update(u).unwrap().is_connected());
        }
        let c3 = cycle3u(3);
        for x in 0..6 {
            let u = find_non_cut_vertex(&c3, x).unwrap();
            assert!(c3.enforcer_update(u).unwrap().is_connected());
        }
        // preconditions enforced
        assert!(find_non_cut_vertex(&h(5, &[&[0, 1, 2], &[2, 3, 4]]), 0).is_err()); // not reduced
        assert!(find_non_cut_vertex(&h(3, &[&[0, 1]]), 0).is_err());
    }

    #[test]
    fn pairings() {
        for l in 3..=5 {
            let c = cycle3u(l);
            let p = find_pairing(&c, 1_000_000).unwrap();
            assert_eq!(p.pairs.len(), l);
            p.validate(&c).unwrap();
        }
        // P3 has no pairing
        assert!(find_pairing(&h(3, &[&[0, 1], &[1, 2]]), 1_000_000).is_none());
        // matching: the edge set itself
        let m = h(5, &[&[0, 1], &[2, 3]]);
        let p = find_pairing(&m, 1_000_000).unwrap();
        p.validate(&m).unwrap();
        assert_eq!(p.pairs.len(), 2);
        // nunchaku with an endpoint claimed by Enforcer
        for l in 2..=5 {
            let half = nunchaku(l).enforcer_update(0).unwrap().remove_isolated();
            let p = find_pairing(&half, 1_000_000).unwrap();
            p.validate(&half).unwrap();
        }
        // the prism has none: by linearity each pair covers one edge, and
        // four disjoint pairs need eight vertices
        assert!(find_pairing(&prism(), 1_000_000).is_none());
        // a chain takes the backtracking path
        let chain = h(7, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 6]]);
        let p = find_pairing(&chain, 1_000_000).unwrap();
        p.validate(&chain).unwrap();
    }

    #[test]
    fn pairing_implies_avoider_outcome() {
        let boards = [
            cycle3u(3),
            cycle3u(4),
            prism(),
            h(5, &[&[0, 1], &[2, 3]]),
            h(4, &[&[0, 1], &[1, 2], &[2, 3]]),
            h(6, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 0]]),
        ];
        for b in &boards {
            if let Some(p) = find_pairing(b, 1_000_000) {
                p.validate(b).unwrap();
                assert_eq!(outcome(b).unwrap(), Outcome::Avoider, "{b}");
            }
        }
    }

    #[test]
    fn distances_and_triangle_inequality() {
        let c4 = cycle3u(4);
        let d = distances_from(&c4, 0).unwrap();
        assert_eq!(d[0], Some(0));
        assert_eq!(d[2], Some(2));
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    if a == b || b == c || a == c {
                        continue;
                    }
                    let ab = shortest_chain(&c4, a, b).unwrap().unwrap().len();
                    let bc = shortest_chain(&c4, b, c).unwrap().unwrap().len();
                    let ac = shortest_chain(&c4, a, c).unwrap().unwrap().len();
                    assert!(ac <= ab + bc);
                }
            }
        }
    }
}
