use std::collections::BTreeSet;

use super::critical_primes;
use crate::error::{Error, Result};
use crate::graph::{components, isolated_vertices, order_graph, power_type_graph, Limits};
use crate::partition::PartitionType;

/// Shape of the power-type graph of `A_n` for `n >= 11`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub n: usize,
    pub component_count: usize,
    pub main_component_types: BTreeSet<PartitionType>,
    pub isolated_types: BTreeSet<PartitionType>,
    /// Orders of the isolated types.
    pub isolated_primes: BTreeSet<u64>,
    /// Isolated vertices of the proper order graph.
    pub isolated_orders: BTreeSet<u64>,
    pub critical_primes: BTreeSet<u64>,
    pub main_is_complete: bool,
    /// Two non-adjacent main-component types, of orders 2 and 3.
    pub non_adjacent_witness: Option<(PartitionType, PartitionType)>,
}

/// The only type of order `p` that can be isolated when `p` is critical.
pub fn expected_isolated_type(n: u64, p: u64) -> Option<PartitionType> {
    let pairs: Vec<(u64, u64)> = if p == n {
        vec![(n, 1)]
    } else if p + 1 == n {
        vec![(1, 1), (p, 1)]
    } else if p + 2 == n {
        vec![(1, 2), (p, 1)]
    } else if 2 * p == n {
        vec![(p, 2)]
    } else if 2 * p + 1 == n {
        vec![(1, 1), (p, 2)]
    } else {
        return None;
    };
    PartitionType::from_multiplicities(pairs).ok()
}

pub fn structure_report(n: usize, limits: &Limits) -> Result<StructureReport> {
    let primes = critical_primes(n as u64)?;
    let violation = |detail: String| Error::StructureViolation { n, detail };

    let g = power_type_graph(n, limits)?;
    let census = components(&g);
    let big = census.non_singleton_components();
    let [main] = big.as_slice() else {
        return Err(violation(format!(
            "expected one non-singleton component, found {}",
            big.len()
        )));
    };
    let main = *main;
    let members = census.members(main);
    let main_types: BTreeSet<PartitionType> = members.iter().map(|&v| g.label(v).clone()).collect();

    let isolated: BTreeSet<PartitionType> = isolated_vertices(&g).into_iter().cloned().collect();
    let expected: BTreeSet<PartitionType> = primes
        .iter()
        .filter_map(|&p| expected_isolated_type(n as u64, p))
        .collect();
    if isolated != expected {
        return Err(violation(format!(
            "isolated types {isolated:?} differ from the critical-prime set {expected:?}"
        )));
    }
    let isolated_primes: BTreeSet<u64> = isolated.iter().map(PartitionType::order).collect();
    if !isolated_primes.is_subset(&primes) || primes.len() > 2 {
        return Err(violation(format!(
            "isolated orders {isolated_primes:?}, critical primes {primes:?}"
        )));
    }

    let inner_edges = g
        .edges()
        .iter()
        .filter(|&&(a, _)| census.component_id(a as usize) == main)
        .count();
    let k = members.len();
    let main_is_complete = inner_edges == k * (k - 1) / 2;

    let witness = members.iter().find_map(|&a| {
        let ta = g.label(a);
        if ta.order() != 2 {
            return None;
        }
        members.iter().find_map(|&b| {
            let tb = g.label(b);
            (tb.order() == 3 && !g.has_edge(a, b)).then(|| (ta.clone(), tb.clone()))
        })
    });
    if main_is_complete || witness.is_none() {
        return Err(violation("main component is complete".into()));
    }

    let og = order_graph(n, limits)?;
    let isolated_orders: BTreeSet<u64> = isolated_vertices(&og).into_iter().map(|o| o.0).collect();
    if !isolated_orders.is_subset(&primes) || components(&og).non_singleton_components().len() != 1
    {
        return Err(violation(format!(
            "order graph isolated vertices {isolated_orders:?} not among {primes:?}"
        )));
    }

    Ok(StructureReport {
        n,
        component_count: census.component_count(),
        main_component_types: main_types,
        isolated_types: isolated,
        isolated_primes,
        isolated_orders,
        critical_primes: primes,
        main_is_complete,
        non_adjacent_witness: witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[&str]) -> BTreeSet<PartitionType> {
        v.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn reports() {
        let lim = Limits::default();
        let r12 = structure_report(12, &lim).unwrap();
        assert_eq!(r12.isolated_types, set(&["[1,11]"]));
        assert_eq!(r12.component_count, 2);

        let r13 = structure_report(13, &lim).unwrap();
        assert_eq!(r13.isolated_types, set(&["[13]", "[1^2,11]"]));
        assert_eq!(r13.component_count, 3);

        let r16 = structure_report(16, &lim).unwrap();
        assert!(r16.isolated_types.is_empty());
        assert_eq!(r16.component_count, 1);
        assert!(!r16.main_is_complete);
        assert!(structure_report(10, &lim).is_err());
    }

    #[test]
    fn expected_types() {
        let e = |n, p| expected_isolated_type(n, p).unwrap().to_string();
        assert_eq!(e(13, 13), "[13]");
        assert_eq!(e(12, 11), "[1,11]");
        assert_eq!(e(13, 11), "[1^2,11]");
        assert_eq!(e(14, 7), "[7^2]");
        assert_eq!(e(11, 5), "[1,5^2]");
        assert!(expected_isolated_type(20, 7).is_none());
    }
}
