//! Deterministic constructions of the named instance families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, Hypergraph};

use super::enumerate::{random_hypergraph, random_linear3};

/// A named instance family with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum GenSpec {
    /// Path graph on `n ≥ 1` vertices.
    Pn { n: usize },
    /// Cycle graph on `n ≥ 3` vertices.
    Cn { n: usize },
    /// Triangle with two pendant edges.
    Bull,
    /// Triangle with three pendant edges.
    Sunlet3,
    /// Random pseudo-star on `size ≥ 3` vertices: hub 0, the rest split
    /// into singletons and pairs hanging off it.
    PseudoStar { size: usize, seed: u64 },
    /// 3-uniform chain of `len ≥ 1` edges (`2·len + 1` vertices).
    Chain { len: usize },
    /// Nunchaku of `len ≥ 2` edges (`2·len − 1` vertices, always odd).
    Nunchaku { len: usize },
    /// 3-uniform cycle of `len ≥ 3` edges (`2·len` vertices).
    Cycle3u { len: usize },
    /// The 6-vertex, 4-edge prism.
    Prism,
    /// Two prisms joined through a cut vertex by six 3-edges: 13 vertices,
    /// 14 edges, minimum degree 3.
    Fig7,
    /// Erdős–Rényi graph: each 2-edge present with probability `p`.
    RandomGraph { n: usize, p: f64, seed: u64 },
    /// Random linear hypergraph with edges of size 2 or 3.
    RandomLinear3 { n: usize, edges: usize, seed: u64 },
}

/// Prism on vertices `base..base + 6`, with the two triangles
/// `{0,1,2}` and `{3,4,5}` in local labels and edges pairing each vertex of
/// one triangle with an opposite pair of the other.
fn prism_edges(base: usize) -> Vec<Edge> {
    [[3, 4, 5], [1, 2, 5], [0, 2, 4], [0, 1, 3]]
        .iter()
        .map(|e| Edge::new(e.iter().map(|&v| base + v).collect()))
        .collect()
}

pub fn gen_family(spec: &GenSpec) -> Result<Hypergraph> {
    let bad = |msg: &str| Err(Error::InvalidInput(msg.into()));
    match *spec {
        GenSpec::Pn { n } => {
            if n < 1 {
                return bad("a path needs at least one vertex");
            }
            let edges = (0..n.saturating_sub(1)).map(|i| Edge::new(vec![i, i + 1])).collect();
            Hypergraph::new(n, edges)
        }
        GenSpec::Cn { n } => {
            if n < 3 {
                return bad("a cycle graph needs at least three vertices");
            }
            let edges = (0..n).map(|i| Edge::new(vec![i, (i + 1) % n])).collect();
            Hypergraph::new(n, edges)
        }
        GenSpec::Bull => Hypergraph::from_edge_lists(
            5,
            &[&[0, 1], &[1, 2], &[2, 0], &[0, 3], &[1, 4]],
        ),
        GenSpec::Sunlet3 => Hypergraph::from_edge_lists(
            6,
            &[&[0, 1], &[1, 2], &[2, 0], &[0, 3], &[1, 4], &[2, 5]],
        ),
        GenSpec::PseudoStar { size, seed } => {
            if size < 3 {
                return bad("a pseudo-star needs at least three vertices");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            let mut v = 1;
            while v < size {
                if v + 1 < size && rng.gen_bool(0.5) {
                    // a pair: its own edge plus at least one spoke to the hub
                    edges.push(Edge::new(vec![v, v + 1]));
                    edges.push(Edge::new(vec![0, v]));
                    if rng.gen_bool(0.5) {
                        edges.push(Edge::new(vec![0, v + 1]));
                    }
                    v += 2;
                } else {
                    edges.push(Edge::new(vec![0, v]));
                    v += 1;
                }
            }
            Hypergraph::new(size, edges)
        }
        GenSpec::Chain { len } => {
            if len < 1 {
                return bad("a chain needs at least one edge");
            }
            let edges = (0..len).map(|i| Edge::new(vec![2 * i, 2 * i + 1, 2 * i + 2])).collect();
            Hypergraph::new(2 * len + 1, edges)
        }
        GenSpec::Nunchaku { len } => {
            if len < 2 {
                return bad("a nunchaku needs at least two edges");
            }
            let mut edges = vec![Edge::new(vec![0, 1])];
            for i in 0..len - 2 {
                edges.push(Edge::new(vec![2 * i + 1, 2 * i + 2, 2 * i + 3]));
            }
            edges.push(Edge::new(vec![2 * (len - 2) + 1, 2 * (len - 2) + 2]));
            Hypergraph::new(2 * len - 1, edges)
        }
        GenSpec::Cycle3u { len } => {
            if len < 3 {
                return bad("a 3-uniform cycle needs at least three edges");
            }
            let edges =
                (0..len).map(|i| Edge::new(vec![i, len + i, (i + 1) % len])).collect();
            Hypergraph::new(2 * len, edges)
        }
        GenSpec::Prism => Hypergraph::new(6, prism_edges(0)),
        GenSpec::Fig7 => {
            let mut edges = prism_edges(0);
            edges.extend(prism_edges(6));
            for i in 0..6 {
                edges.push(Edge::new(vec![i, 12, i + 6]));
            }
            Hypergraph::new(13, edges)
        }
        GenSpec::RandomGraph { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return bad("edge probability must lie in [0, 1]");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(p) {
                        edges.push(Edge::new(vec![a, b]));
                    }
                }
            }
            Hypergraph::new(n, edges)
        }
        GenSpec::RandomLinear3 { n, edges, seed } => {
            if n < 2 {
                return bad("the linear sampler needs at least two vertices");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(random_linear3(n, edges, &mut rng))
        }
    }
}

/// Seeded general random hypergraph; not a named family, but shares the
/// generator plumbing.
pub fn gen_random_hypergraph(n: usize, m: usize, seed: u64) -> Hypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_hypergraph(n, m, &mut rng)
}
