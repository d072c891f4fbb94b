//! Counting quotient-graph components type by type.
//!
//! Pick a type not yet seen, look at the component of any class of that
//! type, and add `mu_T[A_n] / k_C(T)`: every component admissible for `T`
//! holds the same number of vertices of type `T`. The types of the chosen
//! component are then marked as seen. The number of steps equals the number
//! of components of the power-type graph.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{mu_classes, BigCount};
use crate::error::{Error, Result};
use crate::graph::{components, ComponentCensus, UndirectedGraph};
use crate::partition::{enumerate_types, PartitionType};
use crate::perm::CyclicClass;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    /// Smallest unseen type, first class of that type.
    Lexicographic,
    /// Unseen type and class drawn from a seeded generator.
    Seeded(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProcedureOutcome {
    pub total: BigCount,
    pub steps: usize,
    /// `(T_j, mu_{T_j}[A_n] / k_{C_j}(T_j))` in selection order.
    pub picks: Vec<(PartitionType, BigCount)>,
}

pub fn procedure_count(
    n: usize,
    quotient: &UndirectedGraph<CyclicClass>,
    selection: Selection,
) -> Result<ProcedureOutcome> {
    procedure_count_with_census(n, quotient, &components(quotient), selection)
}

pub fn procedure_count_with_census(
    n: usize,
    quotient: &UndirectedGraph<CyclicClass>,
    census: &ComponentCensus,
    selection: Selection,
) -> Result<ProcedureOutcome> {
    let all_types = enumerate_types(n, true, true);
    let mut by_type: Vec<Vec<usize>> = vec![Vec::new(); all_types.len()];
    for (v, class) in quotient.labels().iter().enumerate() {
        let t = class.cycle_type();
        let i = all_types.binary_search(t).map_err(|_| {
            Error::Precondition(format!("vertex type {t} is not a nontrivial type of A_{n}"))
        })?;
        by_type[i].push(v);
    }

    let mut rng = match selection {
        Selection::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        Selection::Lexicographic => None,
    };

    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut total = BigUint::zero();
    let mut picks = Vec::new();
    loop {
        let unseen: Vec<usize> = (0..all_types.len()).filter(|i| !seen.contains(i)).collect();
        let Some(&first) = unseen.first() else { break };
        let (ti, vertex) = match rng.as_mut() {
            None => (first, by_type[first].first().copied()),
            Some(rng) => {
                let ti = *unseen.choose(rng).expect("nonempty");
                (ti, by_type[ti].choose(rng).copied())
            }
        };
        let t = &all_types[ti];
        let vertex = vertex.ok_or_else(|| {
            Error::Precondition(format!("no vertex of type {t} in the quotient graph"))
        })?;
        let c = census.component_id(vertex);
        let k = census.multiplicity(c, t);
        let mu = mu_classes(t)?.into_inner();
        let (q, r) = mu.div_rem(&BigUint::from(k));
        if !r.is_zero() {
            return Err(Error::InexactDivision {
                context: format!("mu_{t}[A_{n}] / k_C({t})"),
                numerator: mu.to_string(),
                denominator: k.to_string(),
            });
        }
        total += &q;
        picks.push((t.clone(), BigCount::new(q)));
        for (ct, _) in census.types_in(c) {
            if let Ok(i) = all_types.binary_search(ct) {
                seen.insert(i);
            }
        }
    }
    Ok(ProcedureOutcome {
        total: BigCount::new(total),
        steps: picks.len(),
        picks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{quotient_power_graph, Limits};

    #[test]
    fn small_degrees() {
        let lim = Limits::default();
        for (n, total, steps) in [(3usize, 1u64, 1usize), (4, 7, 2), (5, 31, 3), (6, 121, 4)] {
            let q = quotient_power_graph(n, &lim).unwrap();
            let out = procedure_count(n, &q, Selection::Lexicographic).unwrap();
            assert_eq!(out.total, BigCount::from(total), "n = {n}");
            assert_eq!(out.steps, steps, "n = {n}");
        }
    }

    #[test]
    fn choice_does_not_matter() {
        let q = quotient_power_graph(7, &Limits::default()).unwrap();
        let census = components(&q);
        for seed in 0..10 {
            let out = procedure_count_with_census(7, &q, &census, Selection::Seeded(seed)).unwrap();
            assert_eq!(out.total, BigCount::from(421));
            assert_eq!(out.steps, 4);
        }
    }
}
