//! Polynomial-time outcome classification with machine-checkable
//! certificates: the forbidden-subgraph rule for rank 2, the component
//! taxonomy for linear rank 3 (Avoider moving last), the union table for
//! disconnected boards, and an explicit oracle fallback for everything the
//! structural theory does not cover.

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, ReductionStep, VertexId};
use crate::oracle::{self, LastPlayer, Outcome, Player, Winner};
use crate::structure::{
    contains_forbidden, find_pairing, graph_recognizers, recognize_component, Embedding, Kind,
    Pairing, Pattern, Recognition,
};

/// How a verdict (or one order's winner) was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    ForbiddenSubgraph,
    ComponentTaxonomy,
    UnionTable,
    OneEdgeReduction,
    Pairing,
    OracleFallback,
}

/// Evidence attached to a [`Certificate`]; every variant re-validates
/// independently of the code path that produced it.
#[derive(Clone, Debug)]
pub enum CertWitness {
    /// The verdict follows from counts alone (e.g. a 0-edge).
    Definitional,
    Embedding(Embedding),
    Pairing(Pairing),
    /// Per-component recognitions (original vertex ids, recognition),
    /// together with the leaf-edge removals that preceded them.
    Taxonomy { trace: Vec<ReductionStep>, components: Vec<(Vec<VertexId>, Recognition)> },
    /// Vertices of the 1-edges stripped (in removal order, labels of the
    /// hypergraph each removal was applied to), plus the certificate for the
    /// 1-edge-free residue when one was needed.
    OneEdge { removed: Vec<VertexId>, residual: Option<Box<Certificate>> },
    /// Per-component certificates (original vertex ids).
    Components(Vec<(Vec<VertexId>, Certificate)>),
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub outcome: Outcome,
    pub basis: Basis,
    pub witness: CertWitness,
}

impl Certificate {
    /// Re-checks the witness against `h`: embeddings must embed, pairings
    /// must pair, recorded recognitions must match a fresh recognition.
    pub fn validate(&self, h: &Hypergraph) -> Result<()> {
        match &self.witness {
            CertWitness::Definitional => Ok(()),
            CertWitness::Embedding(e) => e.validate(h),
            CertWitness::Pairing(p) => p.validate(h),
            CertWitness::Taxonomy { trace, components } => {
                let (reduced, fresh_trace) = h.reduce_rank3_traced()?;
                if fresh_trace.len() != trace.len() {
                    return Err(Error::Contract("reduction trace length mismatch".into()));
                }
                validate_component_kinds(&reduced, components)
            }
            CertWitness::OneEdge { removed, residual } => {
                let mut cur = h.normalize();
                for &y in removed {
                    if !cur.edges().iter().any(|e| e.members() == [y]) {
                        return Err(Error::Contract(format!("no 1-edge at vertex {y}")));
                    }
                    cur = cur.enforcer_update(y)?;
                }
                if cur.edges().iter().any(|e| e.len() <= 1) {
                    return Err(Error::Contract("residue still has a small edge".into()));
                }
                if let Some(inner) = residual {
                    inner.validate(&cur)?;
                }
                Ok(())
            }
            CertWitness::Components(parts) => {
                let comps = h.normalize().connected_components();
                if comps.len() != parts.len() {
                    return Err(Error::Contract("component count mismatch".into()));
                }
                for (comp, (verts, cert)) in comps.iter().zip(parts) {
                    if &comp.vertices != verts {
                        return Err(Error::Contract("component vertex sets mismatch".into()));
                    }
                    cert.validate(&comp.hypergraph)?;
                }
                Ok(())
            }
        }
    }
}

fn validate_component_kinds(
    h: &Hypergraph,
    recorded: &[(Vec<VertexId>, Recognition)],
) -> Result<()> {
    let comps = h.connected_components();
    if comps.len() != recorded.len() {
        return Err(Error::Contract("component count mismatch".into()));
    }
    for (comp, (verts, rec)) in comps.iter().zip(recorded) {
        if &comp.vertices != verts {
            return Err(Error::Contract("component vertex sets mismatch".into()));
        }
        let fresh = recognize_component(&comp.hypergraph);
        // the isolated kinds shadow their graph-taxonomy names
        let same = fresh.kind == rec.kind
            || (fresh.kind == Kind::IsolatedVertex && rec.kind == Kind::P1)
            || (fresh.kind == Kind::Isolated2Edge && rec.kind == Kind::P2);
        if !same {
            return Err(Error::Contract(format!(
                "recorded kind {} but recognition says {}",
                rec.kind, fresh.kind
            )));
        }
    }
    Ok(())
}

/// One order's winner together with how it was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Judged {
    pub winner: Winner,
    pub method: Basis,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifierVerdict {
    pub avoider_last: Judged,
    pub enforcer_last: Judged,
    pub outcome: Outcome,
}

impl ClassifierVerdict {
    fn from_outcome(outcome: Outcome, avoider_last: Basis, enforcer_last: Basis) -> Self {
        ClassifierVerdict {
            avoider_last: Judged {
                winner: outcome.winner(LastPlayer::AvoiderLast),
                method: avoider_last,
            },
            enforcer_last: Judged {
                winner: outcome.winner(LastPlayer::EnforcerLast),
                method: enforcer_last,
            },
            outcome,
        }
    }
}

/// Winner once the 1-edges are stripped: either already decided, or the same
/// question as Avoider-last on the 1-edge-free residue.
#[derive(Clone, Debug)]
pub enum OneEdgeResidue {
    Decided(Winner),
    AvoiderLastOf(Hypergraph),
}

/// Trace of the 1-edge rule: with a 1-edge `{y}` present, Avoider loses as
/// last player outright, and her second-to-last game is equivalent to the
/// last-player game on `H^{-y}`.
#[derive(Clone, Debug)]
pub struct OneEdgeTrace {
    /// 1-edge vertices removed, each in the labels of the hypergraph it was
    /// removed from.
    pub removed: Vec<VertexId>,
    pub avoider_last: Winner,
    pub enforcer_last: OneEdgeResidue,
}

/// Applies the 1-edge rule iteratively. Errors if `h` has no 1-edge.
pub fn one_edge_reduction(h: &Hypergraph) -> Result<OneEdgeTrace> {
    let mut cur = h.normalize();
    if !cur.edges().iter().any(|e| e.len() == 1) {
        return Err(Error::Contract("no 1-edge to reduce".into()));
    }
    let mut removed = Vec::new();
    let first = cur
        .edges()
        .iter()
        .find(|e| e.len() == 1)
        .map(|e| e.members()[0])
        .unwrap();
    removed.push(first);
    cur = cur.enforcer_update(first)?;
    // One swap of orders only: if another 1-edge survives, Avoider also
    // loses the residual game as last player, so both orders are decided.
    let enforcer_last = if cur.edges().iter().any(|e| e.len() <= 1) {
        while let Some(y) = cur
            .edges()
            .iter()
            .find(|e| e.len() == 1)
            .map(|e| e.members()[0])
        {
            removed.push(y);
            cur = cur.enforcer_update(y)?;
        }
        OneEdgeResidue::Decided(Player::Enforcer)
    } else {
        OneEdgeResidue::AvoiderLastOf(cur)
    };
    Ok(OneEdgeTrace { removed, avoider_last: Player::Enforcer, enforcer_last })
}

/// Outcome of a disjoint union from the component outcomes.
pub fn combine_union(o1: Outcome, o2: Outcome) -> Outcome {
    use Outcome::*;
    match (o1, o2) {
        (Avoider, Avoider) => Avoider,
        (Avoider, SecondToLast) | (SecondToLast, Avoider) => SecondToLast,
        (Enforcer, _) | (_, Enforcer) | (SecondToLast, SecondToLast) => Enforcer,
    }
}

/// Classifies a hypergraph of rank at most 2: 1-edges via the 1-edge rule,
/// then no-P3 ⇒ Avoider, a forbidden subgraph ⇒ Enforcer, and the
/// second-to-last player otherwise.
pub fn classify_rank2(g: &Hypergraph) -> Result<(ClassifierVerdict, Certificate)> {
    if g.rank() > 2 {
        return Err(Error::Unsupported(format!(
            "rank-2 classification got rank {}",
            g.rank()
        )));
    }
    let g = g.normalize();
    if g.has_empty_edge() {
        let outcome = Outcome::Enforcer;
        let verdict = ClassifierVerdict::from_outcome(
            outcome,
            Basis::OneEdgeReduction,
            Basis::OneEdgeReduction,
        );
        let cert = Certificate {
            outcome,
            basis: Basis::OneEdgeReduction,
            witness: CertWitness::Definitional,
        };
        return Ok((verdict, cert));
    }
    if g.edges().iter().any(|e| e.len() == 1) {
        let trace = one_edge_reduction(&g)?;
        let (el, residual_cert) = match &trace.enforcer_last {
            OneEdgeResidue::Decided(w) => (*w, None),
            OneEdgeResidue::AvoiderLastOf(res) => {
                let (inner_verdict, inner_cert) = classify_rank2(res)?;
                (inner_verdict.avoider_last.winner, Some(Box::new(inner_cert)))
            }
        };
        let outcome = Outcome::from_winners(trace.avoider_last, el)?;
        let verdict = ClassifierVerdict::from_outcome(
            outcome,
            Basis::OneEdgeReduction,
            Basis::OneEdgeReduction,
        );
        let cert = Certificate {
            outcome,
            basis: Basis::OneEdgeReduction,
            witness: CertWitness::OneEdge { removed: trace.removed, residual: residual_cert },
        };
        return Ok((verdict, cert));
    }
    // 2-uniform from here.
    if contains_forbidden(&g, Pattern::P3).is_none() {
        // No P3 means the edges are pairwise disjoint and form a pairing.
        let pairing = find_pairing(&g, u64::MAX).ok_or_else(|| {
            Error::Internal("P3-free graph must be a matching".into())
        })?;
        let outcome = Outcome::Avoider;
        let verdict = ClassifierVerdict::from_outcome(outcome, Basis::Pairing, Basis::Pairing);
        let cert =
            Certificate { outcome, basis: Basis::Pairing, witness: CertWitness::Pairing(pairing) };
        return Ok((verdict, cert));
    }
    for pattern in [Pattern::TwoP3, Pattern::C4, Pattern::Sunlet3] {
        if let Some(emb) = contains_forbidden(&g, pattern) {
            let outcome = Outcome::Enforcer;
            let verdict = ClassifierVerdict::from_outcome(
                outcome,
                Basis::ForbiddenSubgraph,
                Basis::ForbiddenSubgraph,
            );
            let cert = Certificate {
                outcome,
                basis: Basis::ForbiddenSubgraph,
                witness: CertWitness::Embedding(emb),
            };
            return Ok((verdict, cert));
        }
    }
    // P3 present but no forbidden pattern: every component is P1 or P2
    // except exactly one, which is C5, the bull, or a pseudo-star.
    let comps = g.connected_components();
    let mut recorded = Vec::with_capacity(comps.len());
    let mut specials = 0usize;
    for comp in &comps {
        let rec = graph_recognizers(&comp.hypergraph)?;
        match rec.kind {
            Kind::P1 | Kind::P2 => {}
            Kind::C5 | Kind::Bull | Kind::PseudoStar => specials += 1,
            other => {
                return Err(Error::Internal(format!(
                    "taxonomy found unexpected component kind {other}"
                )))
            }
        }
        recorded.push((comp.vertices.clone(), rec));
    }
    if specials != 1 {
        return Err(Error::Internal(format!(
            "expected exactly one special component, found {specials}"
        )));
    }
    let outcome = Outcome::SecondToLast;
    let verdict = ClassifierVerdict::from_outcome(
        outcome,
        Basis::ComponentTaxonomy,
        Basis::ComponentTaxonomy,
    );
    let cert = Certificate {
        outcome,
        basis: Basis::ComponentTaxonomy,
        witness: CertWitness::Taxonomy { trace: Vec::new(), components: recorded },
    };
    Ok((verdict, cert))
}

/// Winner of the Avoider-last game on a linear hypergraph of rank at most 3:
/// leaf-edge reduction first, then Avoider wins if and only if every
/// component of the residue is a cycle, a prism, an isolated 2-edge or an
/// isolated vertex.
pub fn classify_rank3_linear_avoider_last(h: &Hypergraph) -> Result<(Winner, Certificate)> {
    if h.rank() > 3 {
        return Err(Error::Unsupported(format!(
            "rank-3 classification got rank {}",
            h.rank()
        )));
    }
    if !h.is_linear() {
        return Err(Error::Unsupported("rank-3 classification requires a linear hypergraph".into()));
    }
    // Any 0- or 1-edge makes Avoider lose as last player outright.
    if h.edges().iter().any(|e| e.len() <= 1) {
        let cert = Certificate {
            outcome: Outcome::Enforcer, // placeholder order; winner is what matters here
            basis: Basis::OneEdgeReduction,
            witness: CertWitness::Definitional,
        };
        return Ok((Player::Enforcer, cert));
    }
    let (reduced, trace) = h.normalize().reduce_rank3_traced()?;
    let comps = reduced.connected_components();
    let mut recorded = Vec::with_capacity(comps.len());
    let mut all_good = true;
    for comp in &comps {
        let rec = recognize_component(&comp.hypergraph);
        all_good &= matches!(
            rec.kind,
            Kind::Cycle | Kind::Prism | Kind::Isolated2Edge | Kind::IsolatedVertex
        );
        recorded.push((comp.vertices.clone(), rec));
    }
    let winner = if all_good { Player::Avoider } else { Player::Enforcer };
    let cert = Certificate {
        outcome: if all_good { Outcome::Avoider } else { Outcome::Enforcer },
        basis: Basis::ComponentTaxonomy,
        witness: CertWitness::Taxonomy { trace, components: recorded },
    };
    Ok((winner, cert))
}

/// Full dispatcher: decomposes into connected components, classifies each by
/// the strongest applicable rule (falling back to the exact solver where the
/// structural theory is silent, tagged [`Basis::OracleFallback`]), and
/// combines component outcomes through the union table.
pub fn classify(h: &Hypergraph) -> Result<(ClassifierVerdict, Certificate)> {
    classify_with_bound(h, oracle::DEFAULT_BOUND)
}

pub fn classify_with_bound(
    h: &Hypergraph,
    bound: usize,
) -> Result<(ClassifierVerdict, Certificate)> {
    let comps = h.normalize().connected_components();
    let mut total = Outcome::Avoider;
    let mut al_oracle = false;
    let mut el_oracle = false;
    let mut parts = Vec::with_capacity(comps.len());
    let mut single_basis = None;
    for comp in &comps {
        let c = &comp.hypergraph;
        let (outcome, cert, comp_al_oracle, comp_el_oracle) = if c.rank() <= 2 {
            let (v, cert) = classify_rank2(c)?;
            (v.outcome, cert, false, false)
        } else if c.rank() == 3 && c.is_linear() {
            let (al, cert) = classify_rank3_linear_avoider_last(c)?;
            let el = oracle::solve_with_bound(c, LastPlayer::EnforcerLast, bound)
                .map_err(|e| describe_fragment(e, comp.vertices.as_slice()))?;
            let outcome = Outcome::from_winners(al, el)?;
            let cert = Certificate { outcome, ..cert };
            (outcome, cert, false, true)
        } else {
            let outcome = oracle::outcome_with_bound(c, bound)
                .map_err(|e| describe_fragment(e, comp.vertices.as_slice()))?;
            let cert = Certificate {
                outcome,
                basis: Basis::OracleFallback,
                witness: CertWitness::Definitional,
            };
            (outcome, cert, true, true)
        };
        total = combine_union(total, outcome);
        al_oracle |= comp_al_oracle;
        el_oracle |= comp_el_oracle;
        single_basis = Some(cert.basis);
        parts.push((comp.vertices.clone(), cert));
    }
    let structural = if parts.len() == 1 {
        single_basis.unwrap()
    } else {
        Basis::UnionTable
    };
    let verdict = ClassifierVerdict::from_outcome(
        total,
        if al_oracle { Basis::OracleFallback } else { structural },
        if el_oracle { Basis::OracleFallback } else { structural },
    );
    let cert = if parts.len() == 1 {
        parts.pop().map(|(_, c)| c).expect("one part")
    } else {
        Certificate {
            outcome: total,
            basis: Basis::UnionTable,
            witness: CertWitness::Components(parts),
        }
    };
    Ok((verdict, cert))
}

fn describe_fragment(e: Error, vertices: &[VertexId]) -> Error {
    match e {
        Error::ResourceBound(msg) => Error::ResourceBound(format!(
            "{msg} (oracle fallback on the component with vertices {vertices:?})"
        )),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;
    use crate::oracle::outcome;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_edge_lists(n, edges).unwrap()
    }

    fn prism() -> Hypergraph {
        h(6, &[&[3, 4, 5], &[1, 2, 5], &[0, 2, 4], &[0, 1, 3]])
    }

    fn cycle3u(l: usize) -> Hypergraph {
        let edges: Vec<Vec<usize>> = (0..l).map(|i| vec![i, l + i, (i + 1) % l]).collect();
        let refs: Vec<&[usize]> = edges.iter().map(|e| e.as_slice()).collect();
        h(2 * l, &refs)
    }

    #[test]
    fn union_table() {
        use Outcome::*;
        let table = [
            (Avoider, Avoider, Avoider),
            (Avoider, SecondToLast, SecondToLast),
            (Avoider, Enforcer, Enforcer),
            (SecondToLast, SecondToLast, Enforcer),
            (SecondToLast, Enforcer, Enforcer),
            (Enforcer, Enforcer, Enforcer),
        ];
        for (a, b, want) in table {
            assert_eq!(combine_union(a, b), want);
            assert_eq!(combine_union(b, a), want);
        }
    }

    #[test]
    fn one_edge_rule() {
        // a lone 1-edge: Enforcer as Avoider-last, Avoider as Enforcer-last
        let t = one_edge_reduction(&h(1, &[&[0]])).unwrap();
        assert_eq!(t.avoider_last, Player::Enforcer);
        match t.enforcer_last {
            OneEdgeResidue::AvoiderLastOf(res) => assert_eq!(res.edge_count(), 0),
            _ => panic!("expected a residual game"),
        }
        // 1-edge plus a disjoint 2-edge
        let g = h(3, &[&[0], &[1, 2]]);
        let (v, cert) = classify_rank2(&g).unwrap();
        assert_eq!(v.outcome, Outcome::SecondToLast);
        assert_eq!(v.enforcer_last.winner, Player::Avoider);
        cert.validate(&g).unwrap();
        // two 1-edges: Enforcer both orders
        let g2 = h(2, &[&[0], &[1]]);
        let (v2, _) = classify_rank2(&g2).unwrap();
        assert_eq!(v2.outcome, Outcome::Enforcer);
        // no 1-edge is a contract breach
        assert!(one_edge_reduction(&h(2, &[&[0, 1]])).is_err());
    }

    #[test]
    fn rank2_examples() {
        // perfect matching
        let m = h(6, &[&[0, 1], &[2, 3], &[4, 5]]);
        let (v, cert) = classify_rank2(&m).unwrap();
        assert_eq!(v.outcome, Outcome::Avoider);
        assert_eq!(cert.basis, Basis::Pairing);
        cert.validate(&m).unwrap();

        // P5 plus P2: one pseudo-star component
        let g = h(7, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[5, 6]]);
        let (v, cert) = classify_rank2(&g).unwrap();
        assert_eq!(v.outcome, Outcome::SecondToLast);
        assert_eq!(cert.basis, Basis::ComponentTaxonomy);
        cert.validate(&g).unwrap();

        // 2P3
        let g = h(6, &[&[0, 1], &[1, 2], &[3, 4], &[4, 5]]);
        let (v, cert) = classify_rank2(&g).unwrap();
        assert_eq!(v.outcome, Outcome::Enforcer);
        assert_eq!(cert.basis, Basis::ForbiddenSubgraph);
        cert.validate(&g).unwrap();

        // C5 plus P3 contains a 2P3
        let g = h(8, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 0], &[5, 6], &[6, 7]]);
        let (v, _) = classify_rank2(&g).unwrap();
        assert_eq!(v.outcome, Outcome::Enforcer);

        assert!(classify_rank2(&h(3, &[&[0, 1, 2]])).is_err());
    }

    #[test]
    fn rank2_agrees_with_oracle_small() {
        let pairs: Vec<(usize, usize)> =
            (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<Vec<usize>> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &(a, b))| vec![a, b])
                .collect();
            let refs: Vec<&[usize]> = edges.iter().map(|e| e.as_slice()).collect();
            let g = h(4, &refs);
            let (v, cert) = classify_rank2(&g).unwrap();
            assert_eq!(v.outcome, outcome(&g).unwrap(), "{g}");
            cert.validate(&g).unwrap();
        }
    }

    #[test]
    fn rank3_avoider_last() {
        // prism ∪ cycle(4) ∪ isolated 2-edge
        let good = prism().disjoint_union(&cycle3u(4)).disjoint_union(&h(2, &[&[0, 1]]));
        let (w, cert) = classify_rank3_linear_avoider_last(&good).unwrap();
        assert_eq!(w, Player::Avoider);
        cert.validate(&good).unwrap();

        // any nunchaku: Enforcer wins the Avoider-last game
        let p3 = h(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(classify_rank3_linear_avoider_last(&p3).unwrap().0, Player::Enforcer);
        let n3 = h(5, &[&[0, 1], &[1, 2, 3], &[3, 4]]);
        assert_eq!(classify_rank3_linear_avoider_last(&n3).unwrap().0, Player::Enforcer);

        // odd connected 3-uniform non-tree
        let odd = h(7, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 0], &[0, 3, 6]]);
        assert!(odd.is_linear());
        assert_eq!(classify_rank3_linear_avoider_last(&odd).unwrap().0, Player::Enforcer);

        // linear trees reduce to an isolated vertex: Avoider wins as last
        let tree = h(7, &[&[0, 1, 2], &[0, 3, 4], &[0, 5, 6]]);
        assert_eq!(classify_rank3_linear_avoider_last(&tree).unwrap().0, Player::Avoider);

        // non-linear input rejected
        let bad = h(4, &[&[0, 1, 2], &[0, 1, 3]]);
        assert!(classify_rank3_linear_avoider_last(&bad).is_err());
    }

    #[test]
    fn dispatcher() {
        // rank 2: fully structural
        let g = h(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        let (v, cert) = classify(&g).unwrap();
        assert_eq!(v.outcome, outcome(&g).unwrap());
        assert_ne!(v.avoider_last.method, Basis::OracleFallback);
        assert_ne!(v.enforcer_last.method, Basis::OracleFallback);
        cert.validate(&g).unwrap();

        // linear rank 3: the Enforcer-last side is oracle-tagged
        let c = cycle3u(3);
        let (v, _) = classify(&c).unwrap();
        assert_eq!(v.outcome, Outcome::Avoider);
        assert_ne!(v.avoider_last.method, Basis::OracleFallback);
        assert_eq!(v.enforcer_last.method, Basis::OracleFallback);

        // mixed components: P2 ∪ prism
        let mixed = h(2, &[&[0, 1]]).disjoint_union(&prism());
        let (v, cert) = classify(&mixed).unwrap();
        assert_eq!(v.outcome, Outcome::Avoider);
        assert_eq!(v.outcome, outcome(&mixed).unwrap());
        cert.validate(&mixed).unwrap();

        // non-linear rank 3 goes to the oracle on both orders
        let nl = h(4, &[&[0, 1, 2], &[0, 1, 3]]);
        let (v, _) = classify(&nl).unwrap();
        assert_eq!(v.avoider_last.method, Basis::OracleFallback);
        assert_eq!(v.outcome, outcome(&nl).unwrap());

        // an oversized non-linear component errors and names itself
        let edges: Vec<Vec<usize>> = (2..17).map(|i| vec![0, 1, i]).collect();
        let refs: Vec<&[usize]> = edges.iter().map(|e| e.as_slice()).collect();
        let big = h(17, &refs);
        match classify(&big) {
            Err(Error::ResourceBound(msg)) => assert!(msg.contains("component")),
            other => panic!("expected a resource error, got {other:?}"),
        }
    }

    #[test]
    fn union_table_matches_oracle_on_samples() {
        let pool = [
            Hypergraph::empty(1),
            h(2, &[&[0, 1]]),
            h(3, &[&[0, 1], &[1, 2]]),
            h(4, &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]]),
        ];
        for a in &pool {
            for b in &pool {
                let u = a.disjoint_union(b);
                let want = combine_union(outcome(a).unwrap(), outcome(b).unwrap());
                assert_eq!(outcome(&u).unwrap(), want, "{a} + {b}");
            }
        }
    }
}
