use std::collections::{BTreeMap, BTreeSet};

use altpower::arith::totient;
use altpower::census::{
    brute_force_counts, closed_form_counts, mu_elements, procedure_count, Selection,
};
use altpower::graph::{
    components, power_type_graph, proper_power_graph, quotient_power_graph, Limits,
};
use altpower::partition::enumerate_types;
use altpower::perm::cyclic_class_of;

fn limits() -> Limits {
    Limits::default()
}

#[test]
fn element_components_are_unions_of_class_fibres() {
    for n in 3..=9 {
        let g = proper_power_graph(n, &limits()).unwrap();
        let q = quotient_power_graph(n, &limits()).unwrap();
        let (ge, qe) = (components(&g), components(&q));
        assert_eq!(ge.component_count(), qe.component_count(), "n = {n}");

        // element component -> quotient component must be a well-defined bijection
        let mut image: BTreeMap<usize, usize> = BTreeMap::new();
        for (v, x) in g.labels().iter().enumerate() {
            let c = qe.component_id(q.index_of(&cyclic_class_of(x)).unwrap());
            let prev = image.insert(ge.component_id(v), c);
            assert!(
                prev.is_none_or(|p| p == c),
                "n = {n}: component split across classes"
            );
        }
        let targets: BTreeSet<usize> = image.values().copied().collect();
        assert_eq!(targets.len(), qe.component_count());

        // fibre sizes add up: |C| = sum of phi(o) over its classes
        let mut fibres = vec![0usize; qe.component_count()];
        for (v, class) in q.labels().iter().enumerate() {
            fibres[qe.component_id(v)] += class.size() as usize;
        }
        for (ec, qc) in image {
            assert_eq!(ge.sizes()[ec], fibres[qc], "n = {n}");
        }
    }
}

#[test]
fn class_count_matches_mu_over_phi() {
    for n in 3..=9 {
        let q = quotient_power_graph(n, &limits()).unwrap();
        let mut want = 0u64;
        for t in enumerate_types(n, true, true) {
            want += mu_elements(&t).unwrap().to_u64().unwrap() / totient(t.order());
        }
        assert_eq!(q.vertex_count() as u64, want, "n = {n}");
    }
}

#[test]
fn type_projection_of_a_component_is_a_component() {
    for n in 3..=9 {
        let q = quotient_power_graph(n, &limits()).unwrap();
        let t = power_type_graph(n, &limits()).unwrap();
        let (qc, tc) = (components(&q), components(&t));
        let mut projections: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); qc.component_count()];
        for (v, class) in q.labels().iter().enumerate() {
            projections[qc.component_id(v)].insert(t.index_of(class.cycle_type()).unwrap());
        }
        for proj in projections {
            let c = tc.component_id(*proj.iter().next().unwrap());
            let whole: BTreeSet<usize> = tc.members(c).into_iter().collect();
            assert_eq!(proj, whole, "n = {n}");
        }
    }
}

#[test]
fn even_order_classes_split_below_ten_and_join_at_ten() {
    for n in 4..=10 {
        let q = quotient_power_graph(n, &limits()).unwrap();
        let qc = components(&q);
        let comps: BTreeSet<usize> = q
            .labels()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.order() % 2 == 0)
            .map(|(v, _)| qc.component_id(v))
            .collect();
        if n < 10 {
            assert!(comps.len() > 1, "n = {n}");
        } else {
            assert_eq!(comps.len(), 1);
        }
    }
}

#[test]
fn brute_force_agrees_with_stored_table() {
    for n in 3..=9 {
        let bf = brute_force_counts(n, &limits()).unwrap();
        let cf = closed_form_counts(n).unwrap();
        assert_eq!(
            (bf.c0.clone(), bf.c0_ptype, bf.c0_order),
            (cf.c0.clone(), cf.c0_ptype, cf.c0_order)
        );
        let q = quotient_power_graph(n, &limits()).unwrap();
        let p = procedure_count(n, &q, Selection::Lexicographic).unwrap();
        assert_eq!(p.total, cf.c0);
        assert_eq!(p.steps as u32, cf.c0_ptype);
        assert!(cf.c0_order <= cf.c0_ptype);
    }
}
