//! Simple undirected graphs over labelled vertices, their connected
//! components, and the four proper graphs of `A_n`.
//!
//! Only proper edges are stored. The reflexive loops of a power graph never
//! change a component or an isolation statement, so they are left implicit;
//! a vertex is isolated when it has degree 0.

mod build;
pub mod cache;
mod census;
mod dsu;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::PartitionType;
use crate::perm::{CyclicClass, Permutation};

pub use build::{order_graph, power_type_graph, proper_power_graph, quotient_power_graph, Limits};
pub use census::{components, ComponentCensus};
pub use dsu::DisjointSets;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    /// Proper power graph on `A_n \ {id}`.
    Power,
    /// Proper quotient power graph on cyclic classes.
    Quotient,
    /// Proper power-type graph on cycle types.
    #[serde(rename = "ptype")]
    PowerType,
    /// Proper order graph on element orders.
    Order,
}

impl GraphKind {
    pub const ALL: [GraphKind; 4] = [
        GraphKind::Power,
        GraphKind::Quotient,
        GraphKind::PowerType,
        GraphKind::Order,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Power => "power",
            GraphKind::Quotient => "quotient",
            GraphKind::PowerType => "ptype",
            GraphKind::Order => "order",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::parse(format!("unknown graph kind `{s}`")))
    }
}

/// Vertex of the order graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementOrder(pub u64);

impl fmt::Display for ElementOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A value that can label vertices of one of the four graphs.
pub trait VertexLabel: Clone + PartialEq + fmt::Display + Sized {
    const KIND: GraphKind;

    /// Cycle type carried by the label, when it has one.
    fn vertex_type(&self) -> Option<PartitionType>;

    fn encode(&self) -> String {
        self.to_string()
    }

    fn decode(text: &str, n: usize) -> Result<Self>;
}

impl VertexLabel for Permutation {
    const KIND: GraphKind = GraphKind::Power;

    fn vertex_type(&self) -> Option<PartitionType> {
        Some(self.cycle_type())
    }

    fn decode(text: &str, n: usize) -> Result<Self> {
        Permutation::parse_cycles(n, text)
    }
}

impl VertexLabel for CyclicClass {
    const KIND: GraphKind = GraphKind::Quotient;

    fn vertex_type(&self) -> Option<PartitionType> {
        Some(self.cycle_type().clone())
    }

    fn encode(&self) -> String {
        self.representative().to_string()
    }

    fn decode(text: &str, n: usize) -> Result<Self> {
        let rep = Permutation::parse_cycles(n, text.trim_start_matches('[').trim_end_matches(']'))?;
        Ok(CyclicClass::from_representative(&rep))
    }
}

impl VertexLabel for PartitionType {
    const KIND: GraphKind = GraphKind::PowerType;

    fn vertex_type(&self) -> Option<PartitionType> {
        Some(self.clone())
    }

    fn decode(text: &str, n: usize) -> Result<Self> {
        let t: PartitionType = text.parse()?;
        if t.n() != n {
            return Err(Error::parse(format!("type {t} is not a partition of {n}")));
        }
        Ok(t)
    }
}

impl VertexLabel for ElementOrder {
    const KIND: GraphKind = GraphKind::Order;

    fn vertex_type(&self) -> Option<PartitionType> {
        None
    }

    fn decode(text: &str, _n: usize) -> Result<Self> {
        text.trim()
            .parse()
            .map(ElementOrder)
            .map_err(|_| Error::parse(format!("bad order `{text}`")))
    }
}

/// Vertex labels plus a sorted, duplicate-free list of proper edges
/// `(a, b)` with `a < b`.
#[derive(Debug, Clone, PartialEq)]
pub struct UndirectedGraph<L> {
    labels: Vec<L>,
    edges: Vec<(u32, u32)>,
}

impl<L> UndirectedGraph<L> {
    /// Self-pairs are dropped and duplicates merged.
    pub fn new(labels: Vec<L>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let v = labels.len();
        if v > u32::MAX as usize {
            return Err(Error::Precondition("too many vertices".into()));
        }
        let mut out = Vec::new();
        for (a, b) in edges {
            if a >= v || b >= v {
                return Err(Error::Precondition(format!(
                    "edge ({a}, {b}) out of range for {v} vertices"
                )));
            }
            if a != b {
                out.push((a.min(b) as u32, a.max(b) as u32));
            }
        }
        Ok(Self::from_normalized(labels, out))
    }

    pub(crate) fn from_normalized(labels: Vec<L>, mut edges: Vec<(u32, u32)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        Self { labels, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &L {
        &self.labels[v]
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let key = (a.min(b) as u32, a.max(b) as u32);
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.labels.len()];
        for &(a, b) in &self.edges {
            deg[a as usize] += 1;
            deg[b as usize] += 1;
        }
        deg
    }

    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.labels.len()];
        for &(a, b) in &self.edges {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        adj
    }
}

impl<L: PartialEq + fmt::Display> UndirectedGraph<L> {
    pub fn index_of(&self, label: &L) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }
}

/// Labels of the degree-0 vertices, in vertex order.
pub fn isolated_vertices<L>(g: &UndirectedGraph<L>) -> Vec<&L> {
    g.degrees()
        .into_iter()
        .enumerate()
        .filter(|&(_, d)| d == 0)
        .map(|(v, _)| &g.labels[v])
        .collect()
}

/// Vertex set of the component containing `label`, in vertex order.
pub fn component_of<'g, L: PartialEq + fmt::Display>(
    g: &'g UndirectedGraph<L>,
    label: &L,
) -> Result<Vec<&'g L>> {
    let start = g.index_of(label)?;
    let adj = g.adjacency();
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            let w = w as usize;
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    Ok(seen
        .iter()
        .enumerate()
        .filter(|&(_, &s)| s)
        .map(|(v, _)| &g.labels[v])
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalisation_drops_loops_and_duplicates() {
        let g = UndirectedGraph::new(
            vec![ElementOrder(2), ElementOrder(4), ElementOrder(3)],
            [(0, 1), (1, 0), (2, 2)],
        )
        .unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(isolated_vertices(&g), vec![&ElementOrder(3)]);
        assert!(UndirectedGraph::new(vec![ElementOrder(2)], [(0, 1)]).is_err());
    }

    #[test]
    fn component_lookup() {
        let labels: Vec<_> = (2..6).map(ElementOrder).collect();
        let g = UndirectedGraph::new(labels, [(0, 2)]).unwrap();
        let c: Vec<_> = component_of(&g, &ElementOrder(4)).unwrap();
        assert_eq!(c, vec![&ElementOrder(2), &ElementOrder(4)]);
        assert_eq!(
            component_of(&g, &ElementOrder(3)).unwrap(),
            vec![&ElementOrder(3)]
        );
        assert!(matches!(
            component_of(&g, &ElementOrder(9)),
            Err(Error::UnknownLabel(_))
        ));
    }

    #[test]
    fn kind_names() {
        for k in GraphKind::ALL {
            assert_eq!(k.as_str().parse::<GraphKind>().unwrap(), k);
        }
        assert!("tree".parse::<GraphKind>().is_err());
    }
}
