//! Hypergraph representation, the two game-update operators and
//! outcome-preserving reductions.
//!
//! Vertices are dense indices `0..n`. Human-readable names only exist at the
//! CLI boundary; everything in here works on indices and bitmasks.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Dense vertex index.
pub type VertexId = usize;

/// A sorted, duplicate-free set of vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge(Vec<VertexId>);

impl Edge {
    pub fn new(mut members: Vec<VertexId>) -> Self {
        members.sort_unstable();
        members.dedup();
        Edge(members)
    }

    pub fn members(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Bitmask over vertices; only valid for member ids < 64.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| m | (1u64 << v))
    }

    fn is_subset_of(&self, other: &Edge) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A hypergraph on vertices `0..n` with a list of edges.
///
/// Duplicate edges are legal on input; [`Hypergraph::normalize`] sorts the
/// edge list and removes exact duplicates. An empty edge is legal and makes
/// Enforcer win outright.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Edge>,
}

/// One connected component: the original vertex ids it covers plus the
/// relabeled induced subhypergraph.
#[derive(Clone, Debug)]
pub struct Component {
    /// Sorted original vertex ids. Empty for the synthetic component carrying
    /// empty edges.
    pub vertices: Vec<VertexId>,
    pub hypergraph: Hypergraph,
}

/// One step of the rank-3 leaf-edge reduction, in the vertex labels of the
/// hypergraph the step was applied to.
#[derive(Clone, Debug)]
pub struct ReductionStep {
    pub edge: Edge,
    pub removed: (VertexId, VertexId),
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        for e in &edges {
            if let Some(&v) = e.members().iter().find(|&&v| v >= n) {
                return Err(Error::UnknownVertex { vertex: v, n });
            }
        }
        Ok(Hypergraph { n, edges })
    }

    pub fn from_edge_lists(n: usize, edges: &[&[VertexId]]) -> Result<Self> {
        Self::new(n, edges.iter().map(|e| Edge::new(e.to_vec())).collect())
    }

    pub fn empty(n: usize) -> Self {
        Hypergraph { n, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_odd(&self) -> bool {
        self.n % 2 == 1
    }

    pub fn has_empty_edge(&self) -> bool {
        self.edges.iter().any(|e| e.is_empty())
    }

    /// Maximum edge size, 0 if there are no edges.
    pub fn rank(&self) -> usize {
        self.edges.iter().map(|e| e.len()).max().unwrap_or(0)
    }

    pub fn is_uniform(&self, k: usize) -> bool {
        self.edges.iter().all(|e| e.len() == k)
    }

    /// Sorts edges lexicographically and removes exact duplicates.
    pub fn normalize(&self) -> Hypergraph {
        let mut edges = self.edges.clone();
        edges.sort();
        edges.dedup();
        Hypergraph { n: self.n, edges }
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::UnknownVertex { vertex: v, n: self.n })
        }
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.contains(v)).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for e in &self.edges {
            for &v in e.members() {
                d[v] += 1;
            }
        }
        d
    }

    /// Any two distinct edges share at most one vertex.
    pub fn is_linear(&self) -> bool {
        let norm = self.normalize();
        for (i, a) in norm.edges.iter().enumerate() {
            for b in &norm.edges[i + 1..] {
                let shared = a.members().iter().filter(|&&v| b.contains(v)).count();
                if shared > 1 {
                    return false;
                }
            }
        }
        true
    }

    /// Keeps the vertices with `keep[v]`, relabeling the survivors densely in
    /// increasing order of original id. Edges keep only surviving members.
    fn shrink_vertices(&self, keep: &[bool]) -> Hypergraph {
        let mut relabel = vec![usize::MAX; self.n];
        let mut next = 0usize;
        for v in 0..self.n {
            if keep[v] {
                relabel[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                Edge::new(
                    e.members()
                        .iter()
                        .filter(|&&v| keep[v])
                        .map(|&v| relabel[v])
                        .collect(),
                )
            })
            .collect();
        Hypergraph { n: next, edges }
    }

    /// The hypergraph after Avoider picks `x`: the vertex disappears and is
    /// shrunk out of every edge (an edge that contained only `x` becomes the
    /// empty edge).
    pub fn avoider_update(&self, x: VertexId) -> Result<Hypergraph> {
        self.check_vertex(x)?;
        let mut keep = vec![true; self.n];
        keep[x] = false;
        Ok(self.shrink_vertices(&keep))
    }

    /// The hypergraph after Enforcer picks `y`: the vertex disappears and
    /// every edge containing it is killed.
    pub fn enforcer_update(&self, y: VertexId) -> Result<Hypergraph> {
        self.check_vertex(y)?;
        let mut keep = vec![true; self.n];
        keep[y] = false;
        let filtered = Hypergraph {
            n: self.n,
            edges: self.edges.iter().filter(|e| !e.contains(y)).cloned().collect(),
        };
        Ok(filtered.shrink_vertices(&keep))
    }

    /// Disjoint union; the vertices of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Hypergraph {
        let mut edges = self.edges.clone();
        for e in &other.edges {
            edges.push(Edge::new(e.members().iter().map(|&v| v + self.n).collect()));
        }
        Hypergraph { n: self.n + other.n, edges }
    }

    /// Connected components under walk-connectivity. Isolated vertices are
    /// singleton components. Empty edges, which touch no vertex, are gathered
    /// into one extra zero-vertex component at the end.
    pub fn connected_components(&self) -> Vec<Component> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], v: usize) -> usize {
            let mut r = v;
            while parent[r] != r {
                r = parent[r];
            }
            let mut v = v;
            while parent[v] != r {
                let next = parent[v];
                parent[v] = r;
                v = next;
            }
            r
        }
        for e in &self.edges {
            if let Some(&first) = e.members().first() {
                let rf = find(&mut parent, first);
                for &v in &e.members()[1..] {
                    let rv = find(&mut parent, v);
                    parent[rv] = rf;
                }
            }
        }
        let mut groups: Vec<Vec<VertexId>> = Vec::new();
        let mut root_group = vec![usize::MAX; self.n];
        for v in 0..self.n {
            let r = find(&mut parent, v);
            if root_group[r] == usize::MAX {
                root_group[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[root_group[r]].push(v);
        }
        let mut out: Vec<Component> = groups
            .into_iter()
            .map(|vertices| {
                let mut keep = vec![false; self.n];
                let mut in_comp = vec![false; self.n];
                for &v in &vertices {
                    keep[v] = true;
                    in_comp[v] = true;
                }
                let edges = self
                    .edges
                    .iter()
                    .filter(|e| !e.is_empty() && in_comp[e.members()[0]])
                    .cloned()
                    .collect();
                let sub = Hypergraph { n: self.n, edges };
                Component { hypergraph: sub.shrink_vertices(&keep), vertices }
            })
            .collect();
        let empties: Vec<Edge> = self.edges.iter().filter(|e| e.is_empty()).cloned().collect();
        if !empties.is_empty() {
            out.push(Component {
                vertices: Vec::new(),
                hypergraph: Hypergraph { n: 0, edges: empties },
            });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Same vertex set; the edges are the minimal transversals of `self`.
    ///
    /// Superset transversals never change the game, so only minimal ones are
    /// emitted. Guarded to small instances since it enumerates all vertex
    /// subsets.
    pub fn transversal_dual(&self) -> Result<Hypergraph> {
        if self.n > 20 {
            return Err(Error::ResourceBound(format!(
                "transversal_dual supports at most 20 vertices, got {}",
                self.n
            )));
        }
        let edge_masks: Vec<u64> = self.edges.iter().map(|e| e.mask()).collect();
        let hits_all = |t: u64| edge_masks.iter().all(|&em| em & t != 0);
        // An empty edge has no transversal at all.
        if self.has_empty_edge() {
            return Ok(Hypergraph { n: self.n, edges: Vec::new() });
        }
        let mut duals = Vec::new();
        for t in 0u64..(1u64 << self.n) {
            if !hits_all(t) {
                continue;
            }
            let minimal = (0..self.n)
                .all(|v| t & (1 << v) == 0 || !hits_all(t & !(1u64 << v)));
            if minimal {
                duals.push(Edge::new(
                    (0..self.n).filter(|&v| t & (1 << v) != 0).collect(),
                ));
            }
        }
        Ok(Hypergraph { n: self.n, edges: duals }.normalize())
    }

    /// Removes every edge that is a strict superset of another edge
    /// (duplicates are removed too). Outcome-preserving.
    pub fn minimize_edges(&self) -> Hypergraph {
        let norm = self.normalize();
        let keep: Vec<Edge> = norm
            .edges
            .iter()
            .filter(|e| {
                !norm
                    .edges
                    .iter()
                    .any(|f| f != *e && f.is_subset_of(e))
            })
            .cloned()
            .collect();
        Hypergraph { n: self.n, edges: keep }
    }

    /// Drops degree-0 vertices, relabeling the rest. Outcome-preserving.
    pub fn remove_isolated(&self) -> Hypergraph {
        let deg = self.degrees();
        let keep: Vec<bool> = deg.iter().map(|&d| d > 0).collect();
        self.shrink_vertices(&keep)
    }

    /// All unordered pairs `(x, y)` such that swapping `x` for `y` maps the
    /// edge set into itself in both directions.
    pub fn indistinguishable_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let set: HashSet<&[VertexId]> = self.edges.iter().map(|e| e.members()).collect();
        let swapped_in = |e: &Edge, from: VertexId, to: VertexId| -> bool {
            let f = Edge::new(
                e.members()
                    .iter()
                    .map(|&v| if v == from { to } else { v })
                    .collect(),
            );
            set.contains(f.members())
        };
        let mut out = Vec::new();
        for x in 0..self.n {
            'pair: for y in x + 1..self.n {
                for e in &self.edges {
                    if e.contains(x) && !e.contains(y) && !swapped_in(e, x, y) {
                        continue 'pair;
                    }
                    if e.contains(y) && !e.contains(x) && !swapped_in(e, y, x) {
                        continue 'pair;
                    }
                }
                out.push((x, y));
            }
        }
        out
    }

    pub fn are_indistinguishable(&self, x: VertexId, y: VertexId) -> Result<bool> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        Ok(self.indistinguishable_pairs().contains(&(a, b)))
    }

    /// `H^{+x-y}` for an indistinguishable pair: both vertices disappear,
    /// edges containing both are removed, edges containing exactly one shrink
    /// by that one. Outcome-preserving.
    pub fn super_reduce(&self, x: VertexId, y: VertexId) -> Result<Hypergraph> {
        if x == y || !self.are_indistinguishable(x, y)? {
            return Err(Error::Contract(format!(
                "vertices {x} and {y} are not an indistinguishable pair"
            )));
        }
        self.avoider_update(x)?
            .enforcer_update(if y > x { y - 1 } else { y })
    }

    /// All leaf-edges: edges with at most one vertex of degree greater than 1.
    pub fn leaf_edges(&self) -> Vec<Edge> {
        let deg = self.degrees();
        self.edges
            .iter()
            .filter(|e| e.members().iter().filter(|&&v| deg[v] > 1).count() <= 1)
            .cloned()
            .collect()
    }

    /// Repeatedly removes a size-3 leaf-edge together with two of its
    /// degree-1 vertices until none remains. Outcome-preserving for linear
    /// inputs of rank at most 3.
    ///
    /// Each step removes the lexicographically smallest size-3 leaf-edge and
    /// its two smallest degree-1 vertices, so the result is deterministic.
    pub fn reduce_rank3(&self) -> Result<Hypergraph> {
        Ok(self.reduce_rank3_traced()?.0)
    }

    /// Like [`Hypergraph::reduce_rank3`] but also returns the removal steps,
    /// each in the labels of the hypergraph it was applied to.
    pub fn reduce_rank3_traced(&self) -> Result<(Hypergraph, Vec<ReductionStep>)> {
        if self.rank() > 3 {
            return Err(Error::Unsupported(format!(
                "leaf-edge reduction requires rank at most 3, got rank {}",
                self.rank()
            )));
        }
        let mut h = self.normalize();
        let mut trace = Vec::new();
        loop {
            let deg = h.degrees();
            let target = h
                .edges
                .iter()
                .filter(|e| {
                    e.len() == 3 && e.members().iter().filter(|&&v| deg[v] > 1).count() <= 1
                })
                .min()
                .cloned();
            let Some(edge) = target else { break };
            let deg1: Vec<VertexId> = edge
                .members()
                .iter()
                .copied()
                .filter(|&v| deg[v] == 1)
                .collect();
            let (u, v) = (deg1[0], deg1[1]);
            trace.push(ReductionStep { edge: edge.clone(), removed: (u, v) });
            let mut keep = vec![true; h.n];
            keep[u] = false;
            keep[v] = false;
            let without = Hypergraph {
                n: h.n,
                edges: h.edges.iter().filter(|e| **e != edge).cloned().collect(),
            };
            h = without.shrink_vertices(&keep).normalize();
        }
        Ok((h, trace))
    }

    /// True if the hypergraph of rank <= 3 has no size-3 leaf-edge.
    pub fn is_reduced_rank3(&self) -> bool {
        let deg = self.degrees();
        !self.edges.iter().any(|e| {
            e.len() == 3 && e.members().iter().filter(|&&v| deg[v] > 1).count() <= 1
        })
    }

    /// Edge bitmasks; requires at most 64 vertices.
    pub fn edge_masks(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(Error::ResourceBound(format!(
                "bitmask operations support at most 64 vertices, got {}",
                self.n
            )));
        }
        Ok(self.edges.iter().map(|e| e.mask()).collect())
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.n)?;
        for e in &self.edges {
            write!(f, " {e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_edge_lists(n, edges).unwrap()
    }

    #[test]
    fn avoider_update_shrinks_edges() {
        // single edge {a,b}, pick a
        let g = h(2, &[&[0, 1]]).avoider_update(0).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edges(), &[Edge::new(vec![0])]);

        // P3 a-b-c, pick the middle
        let g = h(3, &[&[0, 1], &[1, 2]]).avoider_update(1).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.normalize().edges(), &[Edge::new(vec![0]), Edge::new(vec![1])]);

        // 3-edge plus an isolated vertex, pick the isolated one
        let g = h(4, &[&[0, 1, 2]]).avoider_update(3).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[Edge::new(vec![0, 1, 2])]);
    }

    #[test]
    fn enforcer_update_kills_edges() {
        let g = h(3, &[&[0, 1], &[1, 2]]).enforcer_update(1).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert!(g.edges().is_empty());

        // C4 0-1-2-3
        let g = h(4, &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]])
            .enforcer_update(0)
            .unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.normalize().edges(), &[Edge::new(vec![0, 1]), Edge::new(vec![1, 2])]);

        // nunchaku of length 3: {a,m1},{m1,p,m2},{m2,b}, kill the center p=2
        let g = h(5, &[&[0, 1], &[1, 2, 3], &[3, 4]]).enforcer_update(2).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.normalize().edges(), &[Edge::new(vec![0, 1]), Edge::new(vec![2, 3])]);
    }

    #[test]
    fn update_operators_commute() {
        let g = h(5, &[&[0, 1, 2], &[2, 3], &[3, 4], &[0, 4]]);
        for x in 0..5 {
            for y in 0..5 {
                if x == y {
                    continue;
                }
                let xy = g
                    .avoider_update(x)
                    .unwrap()
                    .enforcer_update(if y > x { y - 1 } else { y })
                    .unwrap();
                let yx = g
                    .enforcer_update(y)
                    .unwrap()
                    .avoider_update(if x > y { x - 1 } else { x })
                    .unwrap();
                assert_eq!(xy.normalize(), yx.normalize());
            }
        }
    }

    #[test]
    fn disjoint_union_shifts() {
        let p1 = Hypergraph::empty(1);
        let p2 = h(2, &[&[0, 1]]);
        let u = p1.disjoint_union(&p2);
        assert_eq!(u.vertex_count(), 3);
        assert_eq!(u.edges(), &[Edge::new(vec![1, 2])]);
        let e = Hypergraph::empty(0);
        assert_eq!(e.disjoint_union(&p2), p2);
    }

    #[test]
    fn components_split() {
        let p3 = h(3, &[&[0, 1], &[1, 2]]);
        let two = p3.disjoint_union(&p3);
        let comps = two.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertices, vec![0, 1, 2]);
        assert_eq!(comps[1].hypergraph.normalize(), p3.normalize());

        let g = h(3, &[&[0, 1]]);
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[1].vertices, vec![2]);
        assert_eq!(comps[1].hypergraph.vertex_count(), 1);
    }

    #[test]
    fn degree_and_linear() {
        let star = h(4, &[&[0, 1], &[0, 2], &[0, 3]]);
        assert_eq!(star.degree(0).unwrap(), 3);
        assert_eq!(star.degree(1).unwrap(), 1);
        assert!(h(4, &[&[0, 1, 2], &[0, 1, 3]]).is_linear() == false);
        // duplicate edge removed by normalize does not break linearity
        assert!(h(3, &[&[0, 1, 2], &[0, 1, 2]]).is_linear());
        assert!(star.degree(7).is_err());
    }

    #[test]
    fn transversal_duals() {
        let g = h(2, &[&[0, 1]]).transversal_dual().unwrap();
        assert_eq!(g.edges(), &[Edge::new(vec![0]), Edge::new(vec![1])]);

        let p3 = h(3, &[&[0, 1], &[1, 2]]).transversal_dual().unwrap();
        assert_eq!(p3.edges(), &[Edge::new(vec![0, 2]), Edge::new(vec![1])]);

        let empty_edge = h(2, &[&[], &[0, 1]]).transversal_dual().unwrap();
        assert!(empty_edge.edges().is_empty());
    }

    #[test]
    fn minimize_and_isolated() {
        let g = h(3, &[&[0], &[0, 1]]).minimize_edges();
        assert_eq!(g.edges(), &[Edge::new(vec![0])]);
        let g = h(4, &[&[0, 1], &[0, 1, 2], &[2, 3]]).minimize_edges();
        assert_eq!(g.edges(), &[Edge::new(vec![0, 1]), Edge::new(vec![2, 3])]);
        let anti = h(4, &[&[0, 1], &[2, 3]]);
        assert_eq!(anti.minimize_edges(), anti.normalize());

        let g = h(5, &[&[0, 2], &[2, 4]]).remove_isolated();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(Hypergraph::empty(3).remove_isolated().vertex_count(), 0);
    }

    #[test]
    fn indistinguishable_and_super_reduce() {
        // two degree-1 vertices of a single edge
        let g = h(2, &[&[0, 1]]);
        assert_eq!(g.indistinguishable_pairs(), vec![(0, 1)]);
        let r = g.super_reduce(0, 1).unwrap();
        assert_eq!(r.vertex_count(), 0);
        assert!(r.edges().is_empty());

        // P3 endpoints: {a,b}\{a} u {c} = {b,c} is an edge
        let p3 = h(3, &[&[0, 1], &[1, 2]]);
        assert!(p3.indistinguishable_pairs().contains(&(0, 2)));
        let r = p3.super_reduce(0, 2).unwrap();
        assert_eq!(r.vertex_count(), 1);
        assert_eq!(r.normalize().edges(), &[Edge::new(vec![0])]);

        // leaf 3-edge {a,u,v}: u,v of degree 1 are indistinguishable
        let g = h(4, &[&[0, 1], &[1, 2, 3]]);
        assert!(g.indistinguishable_pairs().contains(&(2, 3)));
        let r = g.super_reduce(2, 3).unwrap();
        assert_eq!(r.normalize().edges(), &[Edge::new(vec![0, 1])]);

        assert!(h(3, &[&[0, 1]]).super_reduce(0, 2).is_err());
    }

    #[test]
    fn leaf_edge_reduction() {
        let (r, trace) = h(3, &[&[0, 1, 2]]).reduce_rank3_traced().unwrap();
        assert_eq!(r.vertex_count(), 1);
        assert!(r.edges().is_empty());
        assert_eq!(trace.len(), 1);
        assert_eq!(trace[0].removed, (0, 1));

        // a 3-uniform linear tree: two edges sharing one vertex
        let t = h(5, &[&[0, 1, 2], &[2, 3, 4]]);
        let r = t.reduce_rank3().unwrap();
        assert_eq!(r.vertex_count(), 1);
        assert!(r.edges().is_empty());

        // prism: every vertex has degree 2, nothing to reduce
        let prism = h(6, &[&[3, 4, 5], &[1, 2, 5], &[0, 2, 4], &[0, 1, 3]]);
        assert_eq!(prism.reduce_rank3().unwrap(), prism.normalize());
        assert!(prism.is_reduced_rank3());

        assert!(h(4, &[&[0, 1, 2, 3]]).reduce_rank3().is_err());
    }

    #[test]
    fn leaf_edges_listing() {
        // chain of length 3
        let c = h(7, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 6]]);
        let leaves = c.leaf_edges();
        assert_eq!(leaves.len(), 2);
        assert!(leaves.contains(&Edge::new(vec![0, 1, 2])));
        assert!(leaves.contains(&Edge::new(vec![4, 5, 6])));
        // 3-uniform cycle of length 3 has none
        let cy = h(6, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 0]]);
        assert!(cy.leaf_edges().is_empty());
        let single = h(2, &[&[0, 1]]);
        assert_eq!(single.leaf_edges().len(), 1);
    }
}
