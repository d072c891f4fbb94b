//! Permutations of `{1..n}`, their cycle structure, and enumeration of the
//! alternating group.
//!
//! Points are 1-based at every I/O boundary (cycle notation, `apply`);
//! image tables are stored 0-based.

use std::fmt;
use std::str::FromStr;

use crate::arith::{gcd, lcm};
use crate::error::{Error, Result};
use crate::partition::PartitionType;

/// Default largest degree for which `A_n` is enumerated element by element.
pub const DEFAULT_BRUTE_FORCE_CEILING: usize = 10;

/// Hard limit for element-level work: images are packed into nibbles of a
/// `u64` by the graph builders.
pub const MAX_PACKED_DEGREE: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u8]>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!((1..=255).contains(&n), "degree must be in 1..=255");
        Self {
            images: (0..n as u8).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > 255 {
            return Err(Error::parse(format!("degree {n} out of range 1..=255")));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::parse(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Self {
            images: images.into_boxed_slice(),
        })
    }

    pub(crate) fn from_images_unchecked(images: &[u8]) -> Self {
        Self {
            images: images.into(),
        }
    }

    /// Builds a permutation of degree `n` from disjoint cycles of 1-based points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if n == 0 || n > 255 {
            return Err(Error::parse(format!("degree {n} out of range 1..=255")));
        }
        let mut images: Vec<u8> = (0..n as u8).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p == 0 || p > n {
                    return Err(Error::parse(format!("point {p} outside 1..={n}")));
                }
                if touched[p - 1] {
                    return Err(Error::parse(format!("point {p} repeated")));
                }
                touched[p - 1] = true;
                let next = cycle[(i + 1) % cycle.len()];
                images[p - 1] = (next - 1) as u8;
            }
        }
        Ok(Self {
            images: images.into_boxed_slice(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image table.
    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// `compose(a, b)` maps `i` to `a(b(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let images = other
            .images
            .iter()
            .map(|&b| self.images[b as usize])
            .collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Orbits of the permutation as 0-based point lists, each starting at
    /// its smallest point, ordered by that point. Fixed points included.
    pub fn orbits(&self) -> Vec<Vec<u8>> {
        orbits_of(&self.images)
    }

    /// `x^k` in O(n) by shifting along each cycle.
    pub fn power(&self, k: u64) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        power_into(&self.images, &self.orbits(), k, &mut images);
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    pub fn cycle_type(&self) -> PartitionType {
        PartitionType::from_parts(self.degree(), self.orbits().iter().map(|c| c.len() as u64))
            .expect("orbit sizes always partition the degree")
    }

    pub fn order(&self) -> u64 {
        self.orbits()
            .iter()
            .fold(1, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Even iff `n - (number of cycles)` is even.
    pub fn is_even(&self) -> bool {
        (self.degree() - self.orbits().len()).is_multiple_of(2)
    }

    /// Nontrivial cycles in 1-based points, as printed in cycle notation.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.orbits()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| c.into_iter().map(|p| p as usize + 1).collect())
            .collect()
    }

    /// Parses cycle notation such as `(1 2)(3 4)` or `id` at degree `n`.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Permutation> {
        let text = text.trim();
        if text == "id" || text.is_empty() {
            if n == 0 || n > 255 {
                return Err(Error::parse(format!("degree {n} out of range 1..=255")));
            }
            return Ok(Permutation::identity(n));
        }
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::parse(format!("expected `(` in `{text}`")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::parse(format!("unclosed cycle in `{text}`")))?;
            let cycle = open[..close]
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::parse(format!("bad point `{tok}` in `{text}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if cycle.is_empty() {
                return Err(Error::parse(format!("empty cycle in `{text}`")));
            }
            cycles.push(cycle);
            rest = open[close + 1..].trim_start();
        }
        Permutation::from_cycles(n, &cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("id");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [n={}]", self.degree())
    }
}

pub(crate) fn orbits_of(images: &[u8]) -> Vec<Vec<u8>> {
    let n = images.len();
    let mut seen = [false; 256];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            cycle.push(p as u8);
            p = images[p] as usize;
        }
        out.push(cycle);
    }
    out
}

pub(crate) fn power_into(images: &[u8], orbits: &[Vec<u8>], k: u64, out: &mut [u8]) {
    debug_assert_eq!(images.len(), out.len());
    for cycle in orbits {
        let len = cycle.len();
        let shift = (k % len as u64) as usize;
        for (i, &p) in cycle.iter().enumerate() {
            out[p as usize] = cycle[(i + shift) % len];
        }
    }
}

/// The set of generators of one cyclic subgroup, identified by a canonical
/// generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicClass {
    representative: Permutation,
    order: u64,
    cycle_type: PartitionType,
}

impl CyclicClass {
    pub fn representative(&self) -> &Permutation {
        &self.representative
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn cycle_type(&self) -> &PartitionType {
        &self.cycle_type
    }

    /// Number of group elements in the class, `phi(order)`.
    pub fn size(&self) -> u64 {
        crate::arith::totient(self.order)
    }

    /// Reassembles a class from a stored representative, re-canonicalising.
    pub fn from_representative(rep: &Permutation) -> CyclicClass {
        cyclic_class_of(rep)
    }
}

impl fmt::Display for CyclicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative)
    }
}

/// Lexicographically smallest image table among the generators of `<x>`.
pub(crate) fn canonical_generator(
    images: &[u8],
    orbits: &[Vec<u8>],
    order: u64,
    buf: &mut [u8],
    best: &mut [u8],
) {
    best.copy_from_slice(images);
    for k in 2..order {
        if gcd(k, order) != 1 {
            continue;
        }
        power_into(images, orbits, k, buf);
        if *buf < *best {
            best.copy_from_slice(buf);
        }
    }
}

pub fn cyclic_class_of(x: &Permutation) -> CyclicClass {
    let orbits = x.orbits();
    let order = orbits.iter().fold(1, |acc, c| lcm(acc, c.len() as u64));
    let n = x.degree();
    let mut buf = vec![0u8; n];
    let mut best = vec![0u8; n];
    canonical_generator(&x.images, &orbits, order, &mut buf, &mut best);
    CyclicClass {
        representative: Permutation {
            images: best.into_boxed_slice(),
        },
        order,
        cycle_type: PartitionType::from_parts(n, orbits.iter().map(|c| c.len() as u64))
            .expect("orbit sizes partition n"),
    }
}

/// Lexicographic iterator over the even permutations of `{1..n}`.
#[derive(Debug, Clone)]
pub struct AlternatingIter {
    current: Vec<u8>,
    done: bool,
}

impl Iterator for AlternatingIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = Permutation::from_images_unchecked(&self.current);
        loop {
            if !next_permutation(&mut self.current) {
                self.done = true;
                break;
            }
            if is_even_images(&self.current) {
                break;
            }
        }
        Some(out)
    }
}

/// Streams `A_n` in lexicographic order of image tables.
pub fn enumerate_alternating(n: usize, ceiling: usize) -> Result<AlternatingIter> {
    if n == 0 {
        return Err(Error::Precondition("degree must be at least 1".into()));
    }
    if n > ceiling {
        return Err(Error::Capacity {
            what: "enumeration of A_n",
            n,
            ceiling,
        });
    }
    Ok(AlternatingIter {
        current: (0..n as u8).collect(),
        done: false,
    })
}

pub(crate) fn next_permutation(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

pub(crate) fn is_even_images(images: &[u8]) -> bool {
    let mut seen = [false; 256];
    let mut cycles = 0;
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            p = images[p] as usize;
        }
    }
    (images.len() - cycles).is_multiple_of(2)
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses `n:(1 2)(3 4)`; bare cycle notation needs a degree, use
    /// [`Permutation::parse_cycles`] for that.
    fn from_str(s: &str) -> Result<Self> {
        let (n, cycles) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(format!("expected `n:cycles`, got `{s}`")))?;
        let n = n
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad degree in `{s}`")))?;
        Permutation::parse_cycles(n, cycles)
    }
}
