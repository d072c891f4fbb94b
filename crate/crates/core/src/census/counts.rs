use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::BigCount;
use crate::arith::{factorial, totient};
use crate::error::{Error, Result};
use crate::partition::{enumerate_types, PartitionType};

/// Number of permutations of type `t`: `n! / prod(m^t * t!)`.
pub fn mu_elements(t: &PartitionType) -> Result<BigCount> {
    if !t.is_alternating() {
        return Err(Error::NotAlternating(t.to_string()));
    }
    Ok(BigCount::new(mu_unchecked(t)))
}

fn mu_unchecked(t: &PartitionType) -> BigUint {
    let mut denom = BigUint::one();
    for &(m, mult) in t.parts() {
        denom *= BigUint::from(m).pow(mult as u32);
        denom *= factorial(mult);
    }
    let (q, r) = factorial(t.n() as u64).div_rem(&denom);
    debug_assert!(r.is_zero());
    q
}

/// Number of cyclic classes of type `t`: `mu_elements(t) / phi(o(t))`.
pub fn mu_classes(t: &PartitionType) -> Result<BigCount> {
    let mu = mu_elements(t)?.into_inner();
    let phi = BigUint::from(totient(t.order()));
    let (q, r) = mu.div_rem(&phi);
    if !r.is_zero() {
        return Err(Error::InexactDivision {
            context: format!("class count of {t}"),
            numerator: mu.to_string(),
            denominator: phi.to_string(),
        });
    }
    Ok(BigCount::new(q))
}

/// `s_m`: number of elements of order `m` in `A_n`.
pub fn elements_of_order(n: usize, m: u64) -> BigCount {
    enumerate_types(n, true, false)
        .iter()
        .filter(|t| t.order() == m)
        .map(|t| BigCount::new(mu_unchecked(t)))
        .sum()
}

/// `|E*| = 1/2 * sum_m s_m (2m - phi(m) - 3)` over nontrivial orders `m`.
pub fn edge_count_formula(n: usize) -> Result<BigCount> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "edge count needs n >= 3, got {n}"
        )));
    }
    let mut by_order: std::collections::BTreeMap<u64, BigUint> = Default::default();
    for t in enumerate_types(n, true, true) {
        *by_order.entry(t.order()).or_default() += mu_unchecked(&t);
    }
    let mut total = BigUint::zero();
    for (m, s) in by_order {
        // 2m - phi(m) - 3 >= m - 2 >= 0 for m >= 2
        let weight = 2 * m - totient(m) - 3;
        total += s * weight;
    }
    let (half, r) = total.div_rem(&BigUint::from(2u8));
    if !r.is_zero() {
        return Err(Error::InexactDivision {
            context: format!("edge count of P0(A_{n})"),
            numerator: total.to_string(),
            denominator: "2".into(),
        });
    }
    Ok(BigCount::new(half))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PartitionType {
        s.parse().unwrap()
    }

    #[test]
    fn element_counts() {
        assert_eq!(mu_elements(&t("[1^2,2^2]")).unwrap(), BigCount::from(45));
        assert_eq!(mu_elements(&t("[5]")).unwrap(), BigCount::from(24));
        assert_eq!(
            mu_elements(&PartitionType::trivial(7)).unwrap(),
            BigCount::from(1)
        );
        assert!(matches!(
            mu_elements(&t("[1,2]")),
            Err(Error::NotAlternating(_))
        ));
    }

    #[test]
    fn class_counts() {
        assert_eq!(mu_classes(&t("[1^2,2^2]")).unwrap(), BigCount::from(45));
        assert_eq!(mu_classes(&t("[3^3]")).unwrap(), BigCount::from(1120));
        assert_eq!(mu_classes(&t("[5^2]")).unwrap(), BigCount::from(18144));
        assert_eq!(mu_classes(&t("[1,3^3]")).unwrap(), BigCount::from(11200));
        assert_eq!(mu_classes(&t("[5]")).unwrap(), BigCount::from(6));
    }

    #[test]
    fn five_cycles_by_enumeration() {
        let count = crate::perm::enumerate_alternating(5, 10)
            .unwrap()
            .filter(|x| x.cycle_type() == t("[5]"))
            .count();
        assert_eq!(
            mu_elements(&t("[5]")).unwrap(),
            BigCount::from(count as u64)
        );
    }

    #[test]
    fn elements_sum_to_group_order() {
        for n in 2..=20usize {
            let total: BigCount = enumerate_types(n, true, false)
                .iter()
                .map(|t| mu_elements(t).unwrap())
                .sum();
            let half = factorial(n as u64) / BigUint::from(2u8);
            assert_eq!(total.into_inner(), half, "n = {n}");
        }
    }

    #[test]
    fn order_counts() {
        // A_4: 3 involutions, 8 elements of order 3
        assert_eq!(elements_of_order(4, 2), BigCount::from(3));
        assert_eq!(elements_of_order(4, 3), BigCount::from(8));
    }
}
