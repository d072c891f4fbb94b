use std::collections::BTreeMap;

use super::{DisjointSets, UndirectedGraph, VertexLabel};
use crate::partition::PartitionType;

/// Connected components of a graph with per-component type multiplicities.
///
/// Components are numbered from 0 in order of their first vertex.
#[derive(Debug, Clone)]
pub struct ComponentCensus {
    component_id: Vec<u32>,
    sizes: Vec<usize>,
    /// Distinct vertex types, sorted; empty for graphs without typed labels.
    types: Vec<PartitionType>,
    /// Per component: `(index into types, count)` sorted by type index.
    multiplicity: Vec<Vec<(u32, u64)>>,
}

impl ComponentCensus {
    pub fn component_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.component_id.len()
    }

    pub fn component_id(&self, vertex: usize) -> usize {
        self.component_id[vertex] as usize
    }

    pub fn component_ids(&self) -> &[u32] {
        &self.component_id
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Vertices of component `c`, ascending.
    pub fn members(&self, c: usize) -> Vec<usize> {
        self.component_id
            .iter()
            .enumerate()
            .filter(|&(_, &id)| id as usize == c)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn non_singleton_components(&self) -> Vec<usize> {
        (0..self.sizes.len())
            .filter(|&c| self.sizes[c] > 1)
            .collect()
    }

    /// `k_C(T)`: vertices of type `t` in component `c`.
    pub fn multiplicity(&self, c: usize, t: &PartitionType) -> u64 {
        let Ok(ti) = self.types.binary_search(t) else {
            return 0;
        };
        let row = &self.multiplicity[c];
        row.binary_search_by_key(&(ti as u32), |&(i, _)| i)
            .map_or(0, |pos| row[pos].1)
    }

    /// Types admissible for component `c`.
    pub fn types_in(&self, c: usize) -> impl Iterator<Item = (&PartitionType, u64)> + '_ {
        self.multiplicity[c]
            .iter()
            .map(move |&(i, k)| (&self.types[i as usize], k))
    }

    /// All vertex types seen, sorted.
    pub fn types(&self) -> &[PartitionType] {
        &self.types
    }

    /// Number of vertices of type `t` over all components.
    pub fn type_total(&self, t: &PartitionType) -> u64 {
        (0..self.component_count())
            .map(|c| self.multiplicity(c, t))
            .sum()
    }
}

pub fn components<L: VertexLabel>(g: &UndirectedGraph<L>) -> ComponentCensus {
    let v = g.vertex_count();
    let mut dsu = DisjointSets::new(v);
    for &(a, b) in g.edges() {
        dsu.union(a as usize, b as usize);
    }

    let mut root_to_id: Vec<u32> = vec![u32::MAX; v];
    let mut component_id = Vec::with_capacity(v);
    let mut sizes: Vec<usize> = Vec::new();
    for vertex in 0..v {
        let r = dsu.find(vertex);
        if root_to_id[r] == u32::MAX {
            root_to_id[r] = sizes.len() as u32;
            sizes.push(0);
        }
        let id = root_to_id[r];
        sizes[id as usize] += 1;
        component_id.push(id);
    }

    let vertex_types: Vec<Option<PartitionType>> =
        g.labels().iter().map(VertexLabel::vertex_type).collect();
    let mut types: Vec<PartitionType> = vertex_types.iter().flatten().cloned().collect();
    types.sort();
    types.dedup();

    let mut counts: Vec<BTreeMap<u32, u64>> = vec![BTreeMap::new(); sizes.len()];
    for (vertex, t) in vertex_types.iter().enumerate() {
        if let Some(t) = t {
            let ti = types.binary_search(t).expect("type collected above") as u32;
            *counts[component_id[vertex] as usize].entry(ti).or_default() += 1;
        }
    }
    let multiplicity = counts
        .into_iter()
        .map(|m| m.into_iter().collect())
        .collect();

    ComponentCensus {
        component_id,
        sizes,
        types,
        multiplicity,
    }
}
