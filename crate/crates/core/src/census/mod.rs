//! Exact component counting for the proper graphs of `A_n`: element and
//! class counts per cycle type, the component-counting procedure over the
//! quotient graph, the arithmetic row classifier and closed forms for all
//! `n`, and structure reports for large `n`.

mod classify;
mod counts;
mod procedure;
mod structure;

use std::fmt;
use std::ops::{Add, AddAssign};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

pub use classify::{
    brute_force_counts, c_p_components, classify_row, closed_form_counts, closed_form_counts_with,
    critical_primes, in_set_a, order_graph_verdict, two_connected, CensusRow, CountSource, Row,
    RowClassification, SMALL_N_TABLE,
};
pub use counts::{edge_count_formula, elements_of_order, mu_classes, mu_elements};
pub use procedure::{procedure_count, procedure_count_with_census, ProcedureOutcome, Selection};
pub use structure::{expected_isolated_type, structure_report, StructureReport};

/// Exact nonnegative count.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn new(value: BigUint) -> Self {
        Self(value)
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn parse_decimal(s: &str) -> Option<Self> {
        BigUint::parse_bytes(s.as_bytes(), 10).map(Self)
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        Self(v)
    }
}

impl Add for BigCount {
    type Output = BigCount;

    fn add(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 + rhs.0)
    }
}

impl AddAssign<&BigCount> for BigCount {
    fn add_assign(&mut self, rhs: &BigCount) {
        self.0 += &rhs.0;
    }
}

impl std::iter::Sum for BigCount {
    fn sum<I: Iterator<Item = BigCount>>(iter: I) -> Self {
        iter.fold(BigCount::default(), |a, b| a + b)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}
