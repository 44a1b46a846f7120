//! Exhaustive labeled enumeration and seeded random sampling of instance
//! populations.

use rand::Rng;

use crate::hypergraph::{Edge, Hypergraph, VertexId};

/// All labeled graphs on `1..=n_max` vertices: every subset of the
/// `n`-choose-2 possible 2-edges, for each `n`.
pub fn enumerate_graphs(n_max: usize) -> impl Iterator<Item = Hypergraph> {
    (1..=n_max).flat_map(|n| {
        let pairs: Vec<(VertexId, VertexId)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let count = 1u64 << pairs.len();
        (0..count).map(move |mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &(a, b))| Edge::new(vec![a, b]))
                .collect();
            Hypergraph::new(n, edges).expect("valid pair edges")
        })
    })
}

/// Candidate edges of size 2 and 3 on `n` vertices in lexicographic order,
/// paired with a bitmask over vertex pairs for constant-time linearity
/// checks (two edges are compatible iff their pair masks are disjoint).
fn linear_candidates(n: usize) -> Vec<(Edge, u128)> {
    let pair_bit = |a: usize, b: usize| 1u128 << (a * n + b);
    let mut cands = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            cands.push((Edge::new(vec![a, b]), pair_bit(a, b)));
            for c in b + 1..n {
                cands.push((
                    Edge::new(vec![a, b, c]),
                    pair_bit(a, b) | pair_bit(a, c) | pair_bit(b, c),
                ));
            }
        }
    }
    cands.sort_by(|(e1, _), (e2, _)| e1.cmp(e2));
    cands
}

/// Visits every linear hypergraph with edges of size 2 or 3 on exactly `n`
/// labeled vertices, including the empty edge set. With `connected_only`,
/// only connected instances (all `n` vertices in one component) are visited.
///
/// `shard`/`nshards` split the work deterministically by the index of the
/// lexicographically first edge: shard `s` visits the instances whose first
/// edge has index `≡ s (mod nshards)`; the empty edge set goes to shard 0.
pub fn enumerate_linear_rank3_on<F: FnMut(&Hypergraph)>(
    n: usize,
    connected_only: bool,
    shard: usize,
    nshards: usize,
    f: &mut F,
) {
    assert!(n * n <= 128, "pair-mask encoding needs n*n <= 128");
    let cands = linear_candidates(n);
    let mut chosen: Vec<usize> = Vec::new();

    fn emit<F: FnMut(&Hypergraph)>(
        n: usize,
        cands: &[(Edge, u128)],
        chosen: &[usize],
        connected_only: bool,
        f: &mut F,
    ) {
        if connected_only && !connected_masks(n, chosen.iter().map(|&i| cands[i].0.mask())) {
            return;
        }
        let edges = chosen.iter().map(|&i| cands[i].0.clone()).collect();
        let h = Hypergraph::new(n, edges).expect("candidate edges are valid");
        f(&h);
    }

    fn rec<F: FnMut(&Hypergraph)>(
        n: usize,
        cands: &[(Edge, u128)],
        start: usize,
        used_pairs: u128,
        chosen: &mut Vec<usize>,
        connected_only: bool,
        f: &mut F,
    ) {
        emit(n, cands, chosen, connected_only, f);
        for i in start..cands.len() {
            let (_, pairs) = &cands[i];
            if used_pairs & pairs == 0 {
                chosen.push(i);
                rec(n, cands, i + 1, used_pairs | pairs, chosen, connected_only, f);
                chosen.pop();
            }
        }
    }

    if nshards <= 1 {
        rec(n, &cands, 0, 0, &mut chosen, connected_only, f);
    } else {
        if shard == 0 {
            emit(n, &cands, &chosen, connected_only, f);
        }
        for first in 0..cands.len() {
            if first % nshards != shard {
                continue;
            }
            chosen.push(first);
            rec(n, &cands, first + 1, cands[first].1, &mut chosen, connected_only, f);
            chosen.pop();
        }
    }
}

/// [`enumerate_linear_rank3_on`] over every vertex count `1..=n_max`,
/// unsharded.
pub fn enumerate_linear_rank3<F: FnMut(&Hypergraph)>(n_max: usize, connected_only: bool, mut f: F) {
    for n in 1..=n_max {
        enumerate_linear_rank3_on(n, connected_only, 0, 1, &mut f);
    }
}

/// Visits every connected linear 3-uniform hypergraph on exactly `n`
/// labeled vertices, optionally restricted to reduced ones (no size-3
/// leaf-edge). Sharded like [`enumerate_linear_rank3_on`].
pub fn enumerate_linear_3uniform_connected<F: FnMut(&Hypergraph)>(
    n: usize,
    reduced_only: bool,
    shard: usize,
    nshards: usize,
    f: &mut F,
) {
    assert!(n * n <= 128, "pair-mask encoding needs n*n <= 128");
    let cands: Vec<(Edge, u128)> =
        linear_candidates(n).into_iter().filter(|(e, _)| e.len() == 3).collect();
    let mut chosen: Vec<usize> = Vec::new();

    fn rec<F: FnMut(&Hypergraph)>(
        n: usize,
        cands: &[(Edge, u128)],
        start: usize,
        used_pairs: u128,
        chosen: &mut Vec<usize>,
        reduced_only: bool,
        f: &mut F,
    ) {
        if connected_masks(n, chosen.iter().map(|&i| cands[i].0.mask())) {
            let edges: Vec<Edge> = chosen.iter().map(|&i| cands[i].0.clone()).collect();
            let h = Hypergraph::new(n, edges).expect("candidate edges are valid");
            if !reduced_only || h.is_reduced_rank3() {
                f(&h);
            }
        }
        for i in start..cands.len() {
            let (_, pairs) = &cands[i];
            if used_pairs & pairs == 0 {
                chosen.push(i);
                rec(n, cands, i + 1, used_pairs | pairs, chosen, reduced_only, f);
                chosen.pop();
            }
        }
    }

    if nshards <= 1 {
        rec(n, &cands, 0, 0, &mut chosen, reduced_only, f);
    } else {
        if shard == 0 && n == 1 {
            f(&Hypergraph::empty(1));
        }
        for first in 0..cands.len() {
            if first % nshards != shard {
                continue;
            }
            chosen.push(first);
            rec(n, &cands, first + 1, cands[first].1, &mut chosen, reduced_only, f);
            chosen.pop();
        }
    }
}

fn connected_masks(n: usize, edges: impl Iterator<Item = u64> + Clone) -> bool {
    if n == 0 {
        return true;
    }
    let mut reach = 1u64;
    loop {
        let mut grown = reach;
        for e in edges.clone() {
            if e & reach != 0 {
                grown |= e;
            }
        }
        if grown == reach {
            break;
        }
        reach = grown;
    }
    reach.count_ones() as usize == n
}

/// Seeded random linear hypergraph with edges of size 2 or 3: repeatedly
/// draws a random edge and keeps it when linearity is preserved, until
/// `target_edges` are placed or the attempt budget runs out.
pub fn random_linear3<R: Rng>(n: usize, target_edges: usize, rng: &mut R) -> Hypergraph {
    assert!(n >= 2);
    let mut used_pairs = std::collections::HashSet::new();
    let mut edges: Vec<Edge> = Vec::new();
    let mut attempts = 0;
    while edges.len() < target_edges && attempts < 100 * target_edges.max(1) {
        attempts += 1;
        let size = if n >= 3 && rng.gen_bool(0.7) { 3 } else { 2 };
        let mut verts: Vec<usize> = Vec::with_capacity(size);
        while verts.len() < size {
            let v = rng.gen_range(0..n);
            if !verts.contains(&v) {
                verts.push(v);
            }
        }
        let mut pairs = Vec::new();
        for i in 0..size {
            for j in i + 1..size {
                pairs.push((verts[i].min(verts[j]), verts[i].max(verts[j])));
            }
        }
        if pairs.iter().all(|p| !used_pairs.contains(p)) {
            used_pairs.extend(pairs);
            edges.push(Edge::new(verts));
        }
    }
    Hypergraph::new(n, edges).expect("sampled edges are valid")
}

/// Seeded random hypergraph with `m` edges of sizes 1 to 4, with no
/// structural restriction; used to probe order-independent theorems outside
/// the structured populations.
pub fn random_hypergraph<R: Rng>(n: usize, m: usize, rng: &mut R) -> Hypergraph {
    assert!(n >= 1);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let size = rng.gen_range(1..=4.min(n));
        let mut verts: Vec<usize> = Vec::with_capacity(size);
        while verts.len() < size {
            let v = rng.gen_range(0..n);
            if !verts.contains(&v) {
                verts.push(v);
            }
        }
        edges.push(Edge::new(verts));
    }
    Hypergraph::new(n, edges).expect("sampled edges are valid").normalize()
}

/// All hypergraphs on exactly `n` vertices whose edge set is an antichain
/// (no edge contains another) of at most `max_edges` nonempty edges, plus
/// the two degenerate instances (no edges; a single empty edge).
pub fn enumerate_antichains<F: FnMut(&Hypergraph)>(n: usize, max_edges: usize, mut f: F) {
    assert!(n <= 16);
    let full = (1u32 << n) - 1;
    f(&Hypergraph::empty(n));
    f(&Hypergraph::new(n, vec![Edge::new(Vec::new())]).expect("empty edge"));
    let mut chosen: Vec<u32> = Vec::new();

    fn edge_of(mask: u32, n: usize) -> Edge {
        Edge::new((0..n).filter(|&v| mask & (1 << v) != 0).collect())
    }

    fn rec<F: FnMut(&Hypergraph)>(
        n: usize,
        full: u32,
        start: u32,
        chosen: &mut Vec<u32>,
        max_edges: usize,
        f: &mut F,
    ) {
        if !chosen.is_empty() {
            let edges = chosen.iter().map(|&m| edge_of(m, n)).collect();
            f(&Hypergraph::new(n, edges).expect("mask edges are valid"));
        }
        if chosen.len() == max_edges {
            return;
        }
        for mask in start..=full {
            if chosen
                .iter()
                .all(|&c| c & mask != c && c & mask != mask)
            {
                chosen.push(mask);
                rec(n, full, mask + 1, chosen, max_edges, f);
                chosen.pop();
            }
        }
    }

    rec(n, full, 1, &mut chosen, max_edges, &mut f);
}
