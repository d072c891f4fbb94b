//! Builders for the four proper graphs of `A_n`.
//!
//! Element-level work packs each image table into the nibbles of a `u64`,
//! most significant nibble first, so numeric order on keys is lexicographic
//! order on image tables. Vertices are then located by binary search in the
//! sorted key list.

use rayon::prelude::*;

use super::{ElementOrder, UndirectedGraph};
use crate::arith::{divisors, lcm};
use crate::error::{Error, Result};
use crate::partition::{enumerate_types, PartitionType, DEFAULT_PARTITION_CEILING};
use crate::perm::{
    canonical_generator, is_even_images, next_permutation, orbits_of, power_into, CyclicClass,
    Permutation, DEFAULT_BRUTE_FORCE_CEILING, MAX_PACKED_DEGREE,
};

/// Size limits protecting against accidental huge runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for which `A_n` is enumerated (quotient graph).
    pub brute_force: usize,
    /// Largest `n` for which element-level edges are materialised.
    pub element_graph: usize,
    /// Largest `n` for graphs over partitions.
    pub partition: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            brute_force: DEFAULT_BRUTE_FORCE_CEILING,
            element_graph: 9,
            partition: DEFAULT_PARTITION_CEILING,
        }
    }
}

impl Limits {
    /// Lifts the element-level ceiling up to the brute-force one.
    pub fn with_element_graph_at_brute_force(mut self) -> Self {
        self.element_graph = self.brute_force;
        self
    }

    fn check(n: usize, ceiling: usize, what: &'static str) -> Result<()> {
        if n < 3 {
            return Err(Error::Precondition(format!("{what} needs n >= 3, got {n}")));
        }
        if n > ceiling {
            return Err(Error::Capacity { what, n, ceiling });
        }
        Ok(())
    }

    fn check_element(n: usize, ceiling: usize, what: &'static str) -> Result<()> {
        Self::check(n, ceiling.min(MAX_PACKED_DEGREE), what)
    }
}

pub(crate) fn pack(images: &[u8]) -> u64 {
    images.iter().fold(0u64, |k, &x| (k << 4) | x as u64)
}

pub(crate) fn unpack(key: u64, out: &mut [u8]) {
    let n = out.len();
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = ((key >> (4 * (n - 1 - i))) & 0xf) as u8;
    }
}

/// Packed keys of `A_n`, ascending; the identity comes first.
pub(crate) fn alternating_keys(n: usize) -> Vec<u64> {
    let mut cur: Vec<u8> = (0..n as u8).collect();
    let mut out = Vec::new();
    loop {
        if is_even_images(&cur) {
            out.push(pack(&cur));
        }
        if !next_permutation(&mut cur) {
            break;
        }
    }
    out
}

struct Scratch {
    images: Vec<u8>,
    buf: Vec<u8>,
    best: Vec<u8>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Self {
            images: vec![0; n],
            buf: vec![0; n],
            best: vec![0; n],
        }
    }
}

fn order_of_orbits(orbits: &[Vec<u8>]) -> u64 {
    orbits.iter().fold(1, |acc, c| lcm(acc, c.len() as u64))
}

fn canonical_key(key: u64, s: &mut Scratch) -> u64 {
    unpack(key, &mut s.images);
    let orbits = orbits_of(&s.images);
    let order = order_of_orbits(&orbits);
    canonical_generator(&s.images, &orbits, order, &mut s.buf, &mut s.best);
    pack(&s.best)
}

fn locate(sorted: &[u64], key: u64) -> usize {
    sorted
        .binary_search(&key)
        .expect("power of an even permutation is even")
}

/// Proper power graph on `A_n \ {id}`: `x ~ y` iff one lies in the cyclic
/// subgroup of the other.
pub fn proper_power_graph(n: usize, limits: &Limits) -> Result<UndirectedGraph<Permutation>> {
    Limits::check_element(
        n,
        limits.element_graph.min(limits.brute_force),
        "proper power graph",
    )?;
    let mut keys = alternating_keys(n);
    keys.remove(0);
    let keys = keys;

    let mut edges: Vec<(u32, u32)> = keys
        .par_iter()
        .enumerate()
        .map_init(
            || Scratch::new(n),
            |s, (i, &key)| {
                unpack(key, &mut s.images);
                let orbits = orbits_of(&s.images);
                let order = order_of_orbits(&orbits);
                let mut local = Vec::with_capacity(order.saturating_sub(2) as usize);
                for m in 2..order {
                    power_into(&s.images, &orbits, m, &mut s.buf);
                    let j = locate(&keys, pack(&s.buf));
                    local.push((i.min(j) as u32, i.max(j) as u32));
                }
                local
            },
        )
        .flatten_iter()
        .collect();
    edges.par_sort_unstable();
    edges.dedup();

    let labels = keys
        .iter()
        .map(|&k| {
            let mut images = vec![0u8; n];
            unpack(k, &mut images);
            Permutation::from_images_unchecked(&images)
        })
        .collect();
    Ok(UndirectedGraph::from_normalized(labels, edges))
}

/// Proper quotient power graph: one vertex per nontrivial cyclic subgroup
/// generator class, adjacent when one subgroup contains the other.
pub fn quotient_power_graph(n: usize, limits: &Limits) -> Result<UndirectedGraph<CyclicClass>> {
    Limits::check_element(n, limits.brute_force, "quotient power graph")?;
    let keys = alternating_keys(n);

    let mut reps: Vec<u64> = keys[1..]
        .par_iter()
        .map_init(|| Scratch::new(n), |s, &k| canonical_key(k, s))
        .collect();
    reps.par_sort_unstable();
    reps.dedup();
    drop(keys);

    // <x^d> for d | o(x) runs over every subgroup of <x>.
    let mut edges: Vec<(u32, u32)> = reps
        .par_iter()
        .enumerate()
        .map_init(
            || Scratch::new(n),
            |s, (i, &key)| {
                unpack(key, &mut s.images);
                let orbits = orbits_of(&s.images);
                let order = order_of_orbits(&orbits);
                let base = s.images.clone();
                let mut local = Vec::new();
                for d in divisors(order) {
                    if d == 1 || d == order {
                        continue;
                    }
                    power_into(&base, &orbits, d, &mut s.images);
                    let sub_orbits = orbits_of(&s.images);
                    let sub_order = order / d;
                    canonical_generator(&s.images, &sub_orbits, sub_order, &mut s.buf, &mut s.best);
                    let j = locate(&reps, pack(&s.best));
                    local.push((i.min(j) as u32, i.max(j) as u32));
                }
                local
            },
        )
        .flatten_iter()
        .collect();
    edges.par_sort_unstable();
    edges.dedup();

    let labels = reps
        .par_iter()
        .map(|&k| {
            let mut images = vec![0u8; n];
            unpack(k, &mut images);
            crate::perm::cyclic_class_of(&Permutation::from_images_unchecked(&images))
        })
        .collect();
    Ok(UndirectedGraph::from_normalized(labels, edges))
}

/// Proper power-type graph on the nontrivial cycle types of `A_n`.
pub fn power_type_graph(n: usize, limits: &Limits) -> Result<UndirectedGraph<PartitionType>> {
    Limits::check(n, limits.partition, "power-type graph")?;
    let types = enumerate_types(n, true, true);
    let edges: Vec<(u32, u32)> = types
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, t)| {
            let types = &types;
            t.proper_powers().into_iter().map(move |p| {
                let j = types
                    .binary_search(&p)
                    .expect("proper powers of alternating types are alternating and nontrivial");
                (i.min(j) as u32, i.max(j) as u32)
            })
        })
        .collect();
    Ok(UndirectedGraph::from_normalized(types, edges))
}

/// Proper order graph: orders of nontrivial elements of `A_n`, adjacent on
/// divisibility.
pub fn order_graph(n: usize, limits: &Limits) -> Result<UndirectedGraph<ElementOrder>> {
    Limits::check(n, limits.partition, "order graph")?;
    let mut orders: Vec<u64> = enumerate_types(n, true, true)
        .iter()
        .map(PartitionType::order)
        .collect();
    orders.sort_unstable();
    orders.dedup();
    let mut edges = Vec::new();
    for (i, &a) in orders.iter().enumerate() {
        for (j, &b) in orders.iter().enumerate().skip(i + 1) {
            if b % a == 0 {
                edges.push((i as u32, j as u32));
            }
        }
    }
    let labels = orders.into_iter().map(ElementOrder).collect();
    Ok(UndirectedGraph::from_normalized(labels, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{component_of, components, isolated_vertices};

    #[test]
    fn packing_preserves_lex_order() {
        let a = [0u8, 2, 1, 3];
        let b = [0u8, 3, 1, 2];
        assert!(pack(&a) < pack(&b));
        let mut out = [0u8; 4];
        unpack(pack(&b), &mut out);
        assert_eq!(out, b);
        assert_eq!(alternating_keys(5).len(), 60);
    }

    #[test]
    fn a4_graphs() {
        let lim = Limits::default();
        let g = proper_power_graph(4, &lim).unwrap();
        assert_eq!(g.vertex_count(), 11);
        assert_eq!(components(&g).component_count(), 7);
        let q = quotient_power_graph(4, &lim).unwrap();
        assert_eq!(q.vertex_count(), 7);
        assert_eq!(q.edge_count(), 0);
    }

    #[test]
    fn a5_counts() {
        let lim = Limits::default();
        let g = proper_power_graph(5, &lim).unwrap();
        assert_eq!(g.vertex_count(), 59);
        assert_eq!(components(&g).component_count(), 31);
        let t = power_type_graph(5, &lim).unwrap();
        assert_eq!(isolated_vertices(&t).len(), 3);
    }

    #[test]
    fn a6_double_transposition_component() {
        // (1 3 2 4)(5 6) and (3 1 4 2)(5 6) are mutually inverse, so the
        // quotient component of [(1 2)(3 4)] is a single edge while the
        // element-level component is {psi, phi, phi^-1}.
        let lim = Limits::default();
        let q = quotient_power_graph(6, &lim).unwrap();
        let psi = Permutation::parse_cycles(6, "(1 2)(3 4)").unwrap();
        let phi = Permutation::parse_cycles(6, "(1 3 2 4)(5 6)").unwrap();
        let phi_inv = Permutation::parse_cycles(6, "(3 1 4 2)(5 6)").unwrap();
        assert_eq!(phi.inverse(), phi_inv);
        let comp = component_of(&q, &crate::perm::cyclic_class_of(&psi)).unwrap();
        assert_eq!(comp.len(), 2);
        assert!(comp.contains(&&crate::perm::cyclic_class_of(&phi)));
        assert!(comp.contains(&&crate::perm::cyclic_class_of(&phi_inv)));

        let g = proper_power_graph(6, &lim).unwrap();
        let mut elems: Vec<_> = component_of(&g, &psi)
            .unwrap()
            .into_iter()
            .cloned()
            .collect();
        elems.sort();
        let mut want = vec![psi, phi, phi_inv];
        want.sort();
        assert_eq!(elems, want);
    }

    #[test]
    fn order_graphs() {
        let lim = Limits::default();
        let g = order_graph(6, &lim).unwrap();
        assert_eq!(components(&g).component_count(), 3);
        let g8 = order_graph(8, &lim).unwrap();
        assert_eq!(isolated_vertices(&g8), vec![&ElementOrder(7)]);
    }

    #[test]
    fn limits_are_enforced() {
        let lim = Limits::default();
        assert!(matches!(
            proper_power_graph(10, &lim),
            Err(Error::Capacity { ceiling: 9, .. })
        ));
        assert!(matches!(
            quotient_power_graph(11, &lim),
            Err(Error::Capacity { ceiling: 10, .. })
        ));
        assert!(matches!(
            power_type_graph(65, &lim),
            Err(Error::Capacity { ceiling: 64, .. })
        ));
        assert!(matches!(order_graph(2, &lim), Err(Error::Precondition(_))));
    }
}
