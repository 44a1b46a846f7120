//! File formats for hypergraphs with named vertices.
//!
//! Two formats share one document model:
//!
//! * terse text — one edge per line, whitespace-separated vertex names,
//!   with an optional leading `vertices:` header declaring names that no
//!   edge mentions (isolated vertices);
//! * JSON — `{"vertices": [...], "edges": [[...], ...]}` with the same
//!   optional `vertices` list.
//!
//! Names are opaque tokens compared byte-wise. Serialization is canonical:
//! the header lists every name in sorted order, edge members are sorted,
//! and edges are sorted and deduplicated, so serialize ∘ parse is
//! idempotent. An empty edge is only expressible in JSON, and
//! [`serialize`] falls back to the JSON form when one is present.

use anyhow::{anyhow, bail, Result};
use serde::{Deserialize, Serialize};

use ae_core::{Edge, Hypergraph};

/// A hypergraph over named vertices, as read from or written to a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergraphDocument {
    /// All vertex names, sorted byte-wise; index in this list is the dense
    /// vertex id used by the solver.
    pub vertices: Vec<String>,
    /// Edges as lists of names drawn from `vertices`.
    pub edges: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct JsonDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<String>>,
    edges: Vec<Vec<String>>,
}

impl HypergraphDocument {
    /// Parses either format, chosen by the first non-whitespace byte
    /// (`{` means JSON).
    pub fn parse(text: &str) -> Result<HypergraphDocument> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_terse(text)
        }
    }

    fn parse_terse(text: &str) -> Result<HypergraphDocument> {
        let mut declared: Vec<String> = Vec::new();
        let mut edges: Vec<Vec<String>> = Vec::new();
        let mut seen_content = false;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = i + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if !seen_content && line.starts_with("vertices:") {
                seen_content = true;
                for name in line["vertices:".len()..].split_whitespace() {
                    declared.push(name.to_string());
                }
                continue;
            }
            seen_content = true;
            let names: Vec<String> = line.split_whitespace().map(str::to_string).collect();
            for (j, a) in names.iter().enumerate() {
                if names[..j].contains(a) {
                    bail!("line {lineno}: duplicate name {a:?} in edge");
                }
            }
            edges.push(names);
        }
        Self::build(declared, edges)
    }

    fn parse_json(text: &str) -> Result<HypergraphDocument> {
        let doc: JsonDoc = serde_json::from_str(text)
            .map_err(|e| anyhow!("JSON parse error at line {}: {}", e.line(), e))?;
        for edge in &doc.edges {
            for (j, a) in edge.iter().enumerate() {
                if a.is_empty() {
                    bail!("empty vertex name in an edge");
                }
                if edge[..j].contains(a) {
                    bail!("duplicate name {a:?} in edge");
                }
            }
        }
        Self::build(doc.vertices.unwrap_or_default(), doc.edges)
    }

    fn build(declared: Vec<String>, edges: Vec<Vec<String>>) -> Result<HypergraphDocument> {
        let mut vertices = declared;
        for (j, a) in vertices.iter().enumerate() {
            if a.is_empty() {
                bail!("empty vertex name in the vertices list");
            }
            if vertices[..j].contains(a) {
                bail!("duplicate name {a:?} in the vertices list");
            }
        }
        for edge in &edges {
            for name in edge {
                if name.is_empty() {
                    bail!("empty vertex name in an edge");
                }
                if !vertices.contains(name) {
                    vertices.push(name.clone());
                }
            }
        }
        vertices.sort();
        Ok(HypergraphDocument { vertices, edges })
    }

    /// The document for a hypergraph whose dense id `i` is named
    /// `names[i]`; edge members and edges come out sorted.
    pub fn from_hypergraph(h: &Hypergraph, names: &[String]) -> Result<HypergraphDocument> {
        if names.len() != h.vertex_count() {
            bail!("{} names for {} vertices", names.len(), h.vertex_count());
        }
        let mut order: Vec<usize> = (0..names.len()).collect();
        order.sort_by(|&a, &b| names[a].cmp(&names[b]));
        let vertices: Vec<String> = order.iter().map(|&i| names[i].clone()).collect();
        let mut edges: Vec<Vec<String>> = h
            .edges()
            .iter()
            .map(|e| {
                let mut members: Vec<String> =
                    e.members().iter().map(|&v| names[v].clone()).collect();
                members.sort();
                members
            })
            .collect();
        edges.sort();
        edges.dedup();
        Ok(HypergraphDocument { vertices, edges })
    }

    /// Dense-id hypergraph plus the id-to-name table (sorted names).
    pub fn to_hypergraph(&self) -> Result<(Hypergraph, Vec<String>)> {
        let id = |name: &String| -> Result<usize> {
            self.vertices
                .binary_search(name)
                .map_err(|_| anyhow!("edge mentions undeclared name {name:?}"))
        };
        let mut edges = Vec::with_capacity(self.edges.len());
        for edge in &self.edges {
            let members: Vec<usize> = edge.iter().map(&id).collect::<Result<_>>()?;
            edges.push(Edge::new(members));
        }
        let h = Hypergraph::new(self.vertices.len(), edges)?;
        Ok((h, self.vertices.clone()))
    }

    /// Canonical text form; JSON when an empty edge leaves the terse form
    /// unable to express the document.
    pub fn serialize(&self) -> String {
        let canon = self.canonicalized();
        if canon.edges.iter().any(|e| e.is_empty()) {
            return canon.serialize_json();
        }
        let mut out = String::new();
        out.push_str("vertices:");
        for name in &canon.vertices {
            out.push(' ');
            out.push_str(name);
        }
        out.push('\n');
        for edge in &canon.edges {
            out.push_str(&edge.join(" "));
            out.push('\n');
        }
        out
    }

    /// Canonical JSON form.
    pub fn serialize_json(&self) -> String {
        let canon = self.canonicalized();
        let doc = JsonDoc { vertices: Some(canon.vertices), edges: canon.edges };
        let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
        s.push('\n');
        s
    }

    fn canonicalized(&self) -> HypergraphDocument {
        let mut vertices = self.vertices.clone();
        vertices.sort();
        let mut edges: Vec<Vec<String>> = self
            .edges
            .iter()
            .map(|e| {
                let mut e = e.clone();
                e.sort();
                e
            })
            .collect();
        edges.sort();
        edges.dedup();
        HypergraphDocument { vertices, edges }
    }
}

/// Default names `v0`, `v1`, … for hypergraphs born without any (generated
/// families, reduction outputs).
pub fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// Parses either format straight to a dense hypergraph and its name table.
pub fn parse(text: &str) -> Result<(Hypergraph, Vec<String>)> {
    HypergraphDocument::parse(text)?.to_hypergraph()
}

/// Canonical text for a hypergraph under the given names.
pub fn serialize(h: &Hypergraph, names: &[String]) -> Result<String> {
    Ok(HypergraphDocument::from_hypergraph(h, names)?.serialize())
}
