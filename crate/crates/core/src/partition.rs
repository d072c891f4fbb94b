//! Partitions of `n` viewed as cycle types.
//!
//! A [`PartitionType`] is stored canonically as `(part, multiplicity)` pairs
//! with strictly increasing parts and positive multiplicities, so structural
//! equality is partition equality. The text form is the bracketed notation
//! `[1^4,2^2]`, multiplicity 1 omitted.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::arith::{divisors, gcd, lcm};
use crate::error::{Error, Result};

/// Default largest `n` for graphs built over partitions.
pub const DEFAULT_PARTITION_CEILING: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionType {
    n: usize,
    parts: Vec<(u64, u64)>,
}

impl PartitionType {
    /// Canonicalises an arbitrary list of positive parts summing to `n`.
    pub fn from_parts(n: usize, parts: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut sorted: Vec<u64> = parts.into_iter().collect();
        if sorted.contains(&0) {
            return Err(Error::parse("parts must be positive"));
        }
        let total: u64 = sorted.iter().sum();
        if total != n as u64 {
            return Err(Error::parse(format!("parts sum to {total}, expected {n}")));
        }
        sorted.sort_unstable();
        let mut grouped: Vec<(u64, u64)> = Vec::new();
        for x in sorted {
            match grouped.last_mut() {
                Some((m, t)) if *m == x => *t += 1,
                _ => grouped.push((x, 1)),
            }
        }
        Ok(Self { n, parts: grouped })
    }

    /// From `(part, multiplicity)` pairs; zero multiplicities are dropped.
    pub fn from_multiplicities(pairs: impl IntoIterator<Item = (u64, u64)>) -> Result<Self> {
        let mut parts = Vec::new();
        for (m, t) in pairs {
            parts.extend(std::iter::repeat_n(m, t as usize));
        }
        let n = parts.iter().sum::<u64>() as usize;
        if n == 0 {
            return Err(Error::parse("empty partition"));
        }
        Self::from_parts(n, parts)
    }

    pub fn trivial(n: usize) -> Self {
        assert!(n >= 1);
        Self {
            n,
            parts: vec![(1, n as u64)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(part, multiplicity)` pairs, parts strictly increasing.
    pub fn parts(&self) -> &[(u64, u64)] {
        &self.parts
    }

    pub fn num_parts(&self) -> u64 {
        self.parts.iter().map(|&(_, t)| t).sum()
    }

    pub fn multiplicity(&self, part: u64) -> u64 {
        self.parts
            .iter()
            .find(|&&(m, _)| m == part)
            .map_or(0, |&(_, t)| t)
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.len() == 1 && self.parts[0].0 == 1
    }

    /// lcm of the parts.
    pub fn order(&self) -> u64 {
        self.parts.iter().fold(1, |acc, &(m, _)| lcm(acc, m))
    }

    pub fn gcd_parts(&self) -> u64 {
        self.parts.iter().fold(0, |acc, &(m, _)| gcd(acc, m))
    }

    /// `T^a`: each part `x` becomes `gcd(a, x)` copies of `x / gcd(a, x)`.
    pub fn power(&self, a: u64) -> PartitionType {
        let mut parts = Vec::with_capacity(self.parts.len());
        for &(x, t) in &self.parts {
            let g = gcd(a, x);
            parts.push((x / g, t * g));
        }
        parts.sort_unstable();
        let mut merged: Vec<(u64, u64)> = Vec::with_capacity(parts.len());
        for (m, t) in parts {
            match merged.last_mut() {
                Some((pm, pt)) if *pm == m => *pt += t,
                _ => merged.push((m, t)),
            }
        }
        PartitionType {
            n: self.n,
            parts: merged,
        }
    }

    pub fn is_proper_power_exponent(&self, a: u64) -> bool {
        let o = self.order();
        let g = gcd(a, o);
        g != 1 && g != o
    }

    /// All proper powers, found by running the exponent over the divisors of
    /// the order (`T^a = T^gcd(a, o(T))`).
    pub fn proper_powers(&self) -> BTreeSet<PartitionType> {
        let o = self.order();
        divisors(o)
            .into_iter()
            .filter(|&d| d != 1 && d != o)
            .map(|d| self.power(d))
            .collect()
    }

    /// Realised by even permutations: `n - #parts` is even.
    pub fn is_alternating(&self) -> bool {
        (self.n as u64 - self.num_parts()).is_multiple_of(2)
    }

    /// Parts listed with repetition, ascending.
    pub fn expanded(&self) -> Vec<u64> {
        self.parts
            .iter()
            .flat_map(|&(m, t)| std::iter::repeat_n(m, t as usize))
            .collect()
    }
}

impl fmt::Display for PartitionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, &(m, t)) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if t == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{m}^{t}")?;
            }
        }
        f.write_str("]")
    }
}

impl fmt::Debug for PartitionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PartitionType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(format!("expected `[...]`, got `{s}`")))?;
        let bad = |what: &str| Error::parse(format!("{what} in `{s}`"));
        let mut pairs: Vec<(u64, u64)> = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            let (m, t) = match tok.split_once('^') {
                Some((m, t)) => (m.trim(), t.trim()),
                None => (tok, "1"),
            };
            let m: u64 = m.parse().map_err(|_| bad("bad part"))?;
            let t: u64 = t.parse().map_err(|_| bad("bad multiplicity"))?;
            if m == 0 || t == 0 {
                return Err(bad("zero part or multiplicity"));
            }
            if let Some(&(prev, _)) = pairs.last() {
                if prev >= m {
                    return Err(bad("parts not strictly ascending"));
                }
            }
            pairs.push((m, t));
        }
        let n = pairs.iter().map(|&(m, t)| m * t).sum::<u64>() as usize;
        Ok(PartitionType { n, parts: pairs })
    }
}

/// All partitions of `n`, optionally restricted to alternating types and
/// without `[1^n]`, in ascending canonical order.
pub fn enumerate_types(
    n: usize,
    alternating_only: bool,
    exclude_trivial: bool,
) -> Vec<PartitionType> {
    assert!(n >= 1, "n must be positive");
    let mut out = Vec::new();
    let mut stack: Vec<u64> = Vec::new();
    descend(n as u64, n as u64, &mut stack, &mut |parts| {
        let t = PartitionType::from_parts(n, parts.iter().copied()).expect("valid partition");
        if alternating_only && !t.is_alternating() {
            return;
        }
        if exclude_trivial && t.is_trivial() {
            return;
        }
        out.push(t);
    });
    out.sort();
    out
}

// Non-increasing part sequences: each next part is at most the previous.
fn descend(remaining: u64, max_part: u64, stack: &mut Vec<u64>, emit: &mut impl FnMut(&[u64])) {
    if remaining == 0 {
        emit(stack);
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        stack.push(part);
        descend(remaining - part, part, stack, emit);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PartitionType {
        s.parse().unwrap()
    }

    #[test]
    fn order_and_gcd() {
        assert_eq!(PartitionType::trivial(6).order(), 1);
        assert_eq!(t("[2,5,6]").order(), 30);
        assert_eq!(t("[1^2,3^2,5]").order(), 15);
        assert_eq!(PartitionType::trivial(6).gcd_parts(), 1);
        assert_eq!(t("[4^2]").gcd_parts(), 4);
        assert_eq!(t("[2,5,6]").gcd_parts(), 1);
    }

    #[test]
    fn powers() {
        assert_eq!(t("[2,5,6]").power(2), t("[1^2,3^2,5]"));
        let x = t("[1,2^2,3,6]");
        assert_eq!(x.power(1), x);
        assert_eq!(x.power(x.order()), PartitionType::trivial(x.n()));
        assert!(t("[2,5,6]").is_proper_power_exponent(2));
        assert!(!x.is_proper_power_exponent(1));
        assert!(!t("[3^3]").is_proper_power_exponent(3));
    }

    #[test]
    fn proper_power_sets() {
        assert!(PartitionType::trivial(7).proper_powers().is_empty());
        let nine: Vec<_> = t("[9]").proper_powers().into_iter().collect();
        assert_eq!(nine, vec![t("[3^3]")]);
        assert!(t("[2,5,6]").proper_powers().contains(&t("[1^2,3^2,5]")));
    }

    #[test]
    fn alternating_types() {
        assert!(PartitionType::trivial(5).is_alternating());
        assert!(!t("[1^3,2]").is_alternating());
        assert!(t("[2^2]").is_alternating());
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_types(4, true, true), vec![t("[1,3]"), t("[2^2]")]);
        assert_eq!(enumerate_types(5, false, false).len(), 7);
        assert_eq!(enumerate_types(1, false, false), vec![t("[1]")]);
        // p(n) for small n
        let p = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &count) in p.iter().enumerate().skip(1) {
            assert_eq!(enumerate_types(n, false, false).len(), count, "n = {n}");
        }
    }

    #[test]
    fn text_format() {
        for s in ["[1^4,2^2]", "[2,5,6]", "[1]", "[1^2,3^2,5]"] {
            assert_eq!(t(s).to_string(), s);
        }
        assert_eq!(t("[1^4,2^2]").n(), 8);
        for bad in ["1,2", "[2,1]", "[1,1]", "[0]", "[1^0]", "[a]", "[]"] {
            assert!(bad.parse::<PartitionType>().is_err(), "{bad}");
        }
    }
}
