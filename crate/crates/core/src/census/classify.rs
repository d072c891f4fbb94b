use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::BigCount;
use crate::arith::{factorial, is_prime, Factorials};
use crate::error::{Error, Result};
use crate::graph::{components, order_graph, power_type_graph, quotient_power_graph, Limits};

/// `(n, c0, c0 of the power-type graph, c0 of the order graph)` for
/// `3 <= n <= 10`, where no row of the general table applies.
pub const SMALL_N_TABLE: [(usize, u64, u32, u32); 8] = [
    (3, 1, 1, 1),
    (4, 7, 2, 2),
    (5, 31, 3, 3),
    (6, 121, 4, 3),
    (7, 421, 4, 3),
    (8, 962, 3, 2),
    (9, 5442, 4, 2),
    (10, 29345, 3, 1),
];

/// `n` lies in `P ∪ (P+1) ∪ (P+2) ∪ 2P ∪ (2P+1)`.
pub fn in_set_a(n: u64) -> bool {
    is_prime(n)
        || (n >= 1 && is_prime(n - 1))
        || (n >= 2 && is_prime(n - 2))
        || (n.is_multiple_of(2) && is_prime(n / 2))
        || (n % 2 == 1 && is_prime((n - 1) / 2))
}

fn require_large(n: u64) -> Result<()> {
    if n < 11 {
        return Err(Error::Precondition(format!("needs n >= 11, got {n}")));
    }
    Ok(())
}

/// Primes among `n, n-1, n-2, n/2, (n-1)/2`, the only possible orders of
/// vertices outside the main component.
pub fn critical_primes(n: u64) -> Result<BTreeSet<u64>> {
    require_large(n)?;
    let mut candidates = vec![n, n - 1, n - 2];
    if n.is_multiple_of(2) {
        candidates.push(n / 2);
    } else {
        candidates.push((n - 1) / 2);
    }
    Ok(candidates.into_iter().filter(|&p| is_prime(p)).collect())
}

/// The ten mutually exclusive cases for `n >= 11`, in table order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Row {
    NMinus2AndHalfNMinus1,
    NAndHalfNMinus1,
    NAndNMinus2,
    NMinus2Only,
    HalfNMinus1Only,
    NOnly,
    NMinus1NotHalfN,
    NMinus1AndHalfN,
    HalfNNotNMinus1,
    NotInA,
}

impl Row {
    pub const ALL: [Row; 10] = [
        Row::NMinus2AndHalfNMinus1,
        Row::NAndHalfNMinus1,
        Row::NAndNMinus2,
        Row::NMinus2Only,
        Row::HalfNMinus1Only,
        Row::NOnly,
        Row::NMinus1NotHalfN,
        Row::NMinus1AndHalfN,
        Row::HalfNNotNMinus1,
        Row::NotInA,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Row::NMinus2AndHalfNMinus1 => "n-2, (n-1)/2 in P",
            Row::NAndHalfNMinus1 => "n, (n-1)/2 in P",
            Row::NAndNMinus2 => "n, n-2 in P",
            Row::NMinus2Only => "n-2 in P, n not in P, (n-1)/2 not in P",
            Row::HalfNMinus1Only => "(n-1)/2 in P, n not in P, n-2 not in P",
            Row::NOnly => "n in P, n-2 not in P, (n-1)/2 not in P",
            Row::NMinus1NotHalfN => "n-1 in P, n/2 not in P",
            Row::NMinus1AndHalfN => "n-1, n/2 in P",
            Row::HalfNNotNMinus1 => "n/2 in P, n-1 not in P",
            Row::NotInA => "n not in A",
        }
    }

    fn predicate(self, n: u64) -> bool {
        let np = is_prime(n);
        let n1 = is_prime(n - 1);
        let n2 = is_prime(n - 2);
        let half = n.is_multiple_of(2) && is_prime(n / 2);
        let half_m = n % 2 == 1 && is_prime((n - 1) / 2);
        match self {
            Row::NMinus2AndHalfNMinus1 => n2 && half_m,
            Row::NAndHalfNMinus1 => np && half_m,
            Row::NAndNMinus2 => np && n2,
            Row::NMinus2Only => n2 && !np && !half_m,
            Row::HalfNMinus1Only => half_m && !np && !n2,
            Row::NOnly => np && !n2 && !half_m,
            Row::NMinus1NotHalfN => n1 && !half,
            Row::NMinus1AndHalfN => n1 && half,
            Row::HalfNNotNMinus1 => half && !n1,
            Row::NotInA => !in_set_a(n),
        }
    }

    pub fn c0_ptype(self) -> u32 {
        match self {
            Row::NMinus2AndHalfNMinus1 | Row::NAndHalfNMinus1 | Row::NAndNMinus2 => 3,
            Row::NMinus1AndHalfN => 3,
            Row::NotInA => 1,
            _ => 2,
        }
    }

    pub fn c0_order(self) -> u32 {
        match self {
            Row::NAndNMinus2 => 3,
            Row::HalfNMinus1Only | Row::HalfNNotNMinus1 | Row::NotInA => 1,
            _ => 2,
        }
    }

    /// Summands of `c0 - 1`.
    fn terms(self, n: u64) -> Vec<Term> {
        // n(n-1)(n-4)!/2
        let a = Term::new(&[n, n - 1], n - 4, 2);
        // 4n(n-2)(n-4)!/(n-1)
        let b = Term::new(&[4, n, n - 2], n - 4, n - 1);
        // (n-2)!
        let c = Term::new(&[], n - 2, 1);
        // n(n-3)!
        let d = Term::new(&[n], n - 3, 1);
        // 4(n-1)(n-3)!/n
        let e = Term::new(&[4, n - 1], n - 3, n);
        match self {
            Row::NMinus2AndHalfNMinus1 => vec![a, b],
            Row::NAndHalfNMinus1 => vec![c, b],
            Row::NAndNMinus2 => vec![c, a],
            Row::NMinus2Only => vec![a],
            Row::HalfNMinus1Only => vec![b],
            Row::NOnly => vec![c],
            Row::NMinus1NotHalfN => vec![d],
            Row::NMinus1AndHalfN => vec![e, d],
            Row::HalfNNotNMinus1 => vec![e],
            Row::NotInA => vec![],
        }
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `prod(factors) * k! / denominator`.
#[derive(Debug, Clone)]
struct Term {
    factors: Vec<u64>,
    factorial_of: u64,
    denominator: u64,
}

impl Term {
    fn new(factors: &[u64], factorial_of: u64, denominator: u64) -> Self {
        Self {
            factors: factors.to_vec(),
            factorial_of,
            denominator,
        }
    }

    fn coefficient(&self) -> BigUint {
        self.factors.iter().fold(BigUint::one(), |acc, &f| acc * f)
    }

    fn evaluate(&self, n: u64, facts: &mut Factorials) -> Result<BigUint> {
        let num = self.coefficient() * facts.get(self.factorial_of);
        let den = BigUint::from(self.denominator);
        let (q, r) = num.div_rem(&den);
        if !r.is_zero() {
            return Err(Error::InexactDivision {
                context: format!("closed form for n = {n}"),
                numerator: num.to_string(),
                denominator: den.to_string(),
            });
        }
        Ok(q)
    }

    fn render(&self) -> String {
        let coef = self.coefficient();
        let den = BigUint::from(self.denominator);
        let k = self.factorial_of;
        let (q, r) = coef.div_rem(&den);
        if r.is_zero() {
            if q.is_one() {
                format!("{k}!")
            } else {
                format!("{q}*{k}!")
            }
        } else {
            let g = coef.gcd(&den);
            format!("{}*{k}!/{}", coef / &g, den / &g)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowClassification {
    pub n: u64,
    pub row: Row,
    pub critical_primes: BTreeSet<u64>,
}

/// Finds the unique table row for `n >= 11`, checking that no two
/// predicates hold at once.
pub fn classify_row(n: u64) -> Result<RowClassification> {
    require_large(n)?;
    let matching: Vec<Row> = Row::ALL.into_iter().filter(|r| r.predicate(n)).collect();
    let row = match matching.as_slice() {
        [row] => *row,
        _ => {
            return Err(Error::StructureViolation {
                n: n as usize,
                detail: format!("row predicates matched {matching:?}, expected exactly one"),
            })
        }
    };
    Ok(RowClassification {
        n,
        row,
        critical_primes: critical_primes(n)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountSource {
    BruteForce,
    ClosedForm,
    Both,
}

impl fmt::Display for CountSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountSource::BruteForce => "brute-force",
            CountSource::ClosedForm => "closed-form",
            CountSource::Both => "both",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub c0: BigCount,
    pub c0_ptype: u32,
    pub c0_order: u32,
    pub two_connected: bool,
    pub source: CountSource,
    pub row: Option<Row>,
    /// Factored form of `c0`, e.g. `210*17!+1`, when known.
    pub expression: Option<String>,
}

impl CensusRow {
    fn check(self) -> Result<Self> {
        let ok = self.c0_order <= self.c0_ptype
            && BigCount::from(self.c0_ptype as u64) <= self.c0
            && self.two_connected == (self.c0 == BigCount::from(1));
        if !ok {
            return Err(Error::StructureViolation {
                n: self.n,
                detail: format!("inconsistent census row {self:?}"),
            });
        }
        Ok(self)
    }
}

/// Component counts from the stored small-`n` table or the closed forms.
pub fn closed_form_counts(n: usize) -> Result<CensusRow> {
    closed_form_counts_with(n, &mut Factorials::new())
}

/// As [`closed_form_counts`], reusing a factorial table across calls.
pub fn closed_form_counts_with(n: usize, facts: &mut Factorials) -> Result<CensusRow> {
    if n < 3 {
        return Err(Error::Precondition(format!("census needs n >= 3, got {n}")));
    }
    if let Some(&(_, c0, ptype, order)) = SMALL_N_TABLE.iter().find(|r| r.0 == n) {
        return CensusRow {
            n,
            c0: BigCount::from(c0),
            c0_ptype: ptype,
            c0_order: order,
            two_connected: c0 == 1,
            source: CountSource::ClosedForm,
            row: None,
            expression: None,
        }
        .check();
    }
    let nn = n as u64;
    let row = classify_row(nn)?.row;
    let terms = row.terms(nn);
    let mut c0 = BigUint::one();
    for t in &terms {
        c0 += t.evaluate(nn, facts)?;
    }
    let expression = terms
        .iter()
        .map(Term::render)
        .chain(std::iter::once("1".to_string()))
        .collect::<Vec<_>>()
        .join("+");
    CensusRow {
        n,
        two_connected: c0.is_one(),
        c0: BigCount::new(c0),
        c0_ptype: row.c0_ptype(),
        c0_order: row.c0_order(),
        source: CountSource::ClosedForm,
        row: Some(row),
        expression: Some(expression),
    }
    .check()
}

/// Component counts measured on built graphs (quotient level for `c0`).
pub fn brute_force_counts(n: usize, limits: &Limits) -> Result<CensusRow> {
    let q = quotient_power_graph(n, limits)?;
    let c0 = components(&q).component_count() as u64;
    let ptype = components(&power_type_graph(n, limits)?).component_count() as u32;
    let order = components(&order_graph(n, limits)?).component_count() as u32;
    CensusRow {
        n,
        c0: BigCount::from(c0),
        c0_ptype: ptype,
        c0_order: order,
        two_connected: c0 == 1,
        source: CountSource::BruteForce,
        row: if n >= 11 {
            Some(classify_row(n as u64)?.row)
        } else {
            None
        },
        expression: None,
    }
    .check()
}

/// `P(A_n)` is 2-connected iff `n = 3` or `n` is outside `A`.
pub fn two_connected(n: u64) -> Result<bool> {
    if n < 3 {
        return Err(Error::Precondition(format!("needs n >= 3, got {n}")));
    }
    Ok(n == 3 || !in_set_a(n))
}

/// Number of components of the proper order graph, by arithmetic alone.
pub fn order_graph_verdict(n: u64) -> Result<u32> {
    if n < 3 {
        return Err(Error::Precondition(format!("needs n >= 3, got {n}")));
    }
    if n == 3 {
        return Ok(1);
    }
    if n == 6 {
        return Ok(3);
    }
    let p = is_prime(n);
    let p1 = is_prime(n - 1);
    let p2 = is_prime(n - 2);
    Ok(if p && p2 {
        3
    } else if p || p1 || p2 {
        2
    } else {
        1
    })
}

/// Number of quotient-graph components holding elements of prime order `p`
/// when `n` is `p`, `p + 1` or `p + 2`.
pub fn c_p_components(n: u64, p: u64) -> Result<BigCount> {
    if !is_prime(p) || n < 4 || !(p..=p + 2).contains(&n) {
        return Err(Error::Precondition(format!(
            "c_p needs p prime and n in {{p, p+1, p+2}} with n >= 4, got n = {n}, p = {p}"
        )));
    }
    if p == 2 {
        // n = 4, elements of order 2 have type [2^2]
        return Ok(BigCount::from(3));
    }
    let f = factorial(p - 2);
    let v = match n - p {
        0 => f,
        1 => f * (p + 1),
        _ => f * (p + 2) * (p + 1) / 2u32,
    };
    Ok(BigCount::new(v))
}
