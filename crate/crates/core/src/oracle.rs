//! Brute-force enumeration oracles.
//!
//! Nothing here goes through Smith normal forms: quotients are computed by
//! closing a subgroup under addition and counting cosets, and isomorphism
//! types are compared through element-order censuses (two finite abelian
//! groups are isomorphic iff they have the same number of elements of each
//! order).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::abelian::{EndoMatrix, FinAbGroup, GroupElement};
use crate::exactalg::IntMatrix;
use crate::{Error, Result};

/// Cardinality and element-order census of a finite abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Census {
    pub cardinality: u64,
    /// element order -> number of elements of that order
    pub orders: BTreeMap<u64, u64>,
}

impl Census {
    pub fn from_element_orders(orders: impl IntoIterator<Item = u64>) -> Self {
        let mut census = Census::default();
        for o in orders {
            census.cardinality += 1;
            *census.orders.entry(o).or_insert(0) += 1;
        }
        census
    }
}

/// Census of `Z/f_1 + ... + Z/f_k`, by enumerating it.
pub fn census_of_factors(factors: &[u64]) -> Census {
    let group = FinAbGroup::from_orders(factors.to_vec()).expect("factors are positive");
    Census::from_element_orders(group.elements().map(|x| group.element_order(&x)))
}

/// Subgroup generated by `gens`, as a membership table indexed by
/// [`FinAbGroup::index_of`].
pub fn generated_subgroup(group: &FinAbGroup, gens: &[GroupElement], cap: usize) -> Result<Vec<bool>> {
    let size = group.size_within(cap)?;
    let mut member = vec![false; size];
    let mut frontier = vec![group.zero()];
    member[0] = true;
    while let Some(h) = frontier.pop() {
        for g in gens {
            let next = group.add(&h, g)?;
            let idx = group.index_of(&next);
            if !member[idx] {
                member[idx] = true;
                frontier.push(next);
            }
        }
    }
    Ok(member)
}

/// Quotient of `Z/o_1 + ... + Z/o_n` by the span of the relation columns,
/// computed by enumeration. The ambient group must have at most `cap`
/// elements.
pub fn quotient_census(ambient_orders: &[u64], relations: &IntMatrix, cap: usize) -> Result<Census> {
    let group = FinAbGroup::from_orders(ambient_orders.to_vec())?;
    if relations.rows() != group.rank() {
        return Err(Error::DimensionMismatch { expected: group.rank(), found: relations.rows() });
    }
    let gens: Vec<GroupElement> = (0..relations.cols())
        .map(|j| {
            let coords: Vec<u64> = relations
                .column(j)
                .iter()
                .zip(ambient_orders)
                .map(|(v, &o)| v.mod_floor(&BigInt::from(o)).to_u64().expect("residue fits"))
                .collect();
            group.element_from_u64(&coords)
        })
        .collect::<Result<_>>()?;
    let member = generated_subgroup(&group, &gens, cap)?;
    let subgroup_size = member.iter().filter(|&&m| m).count() as u64;

    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for a in group.elements() {
        let mut multiple = a.clone();
        let mut n = 1u64;
        while !member[group.index_of(&multiple)] {
            multiple = group.add(&multiple, &a)?;
            n += 1;
        }
        *counts.entry(n).or_insert(0) += 1;
    }
    // every coset contributes `subgroup_size` elements of the same order
    let orders = counts.into_iter().map(|(o, c)| (o, c / subgroup_size)).collect();
    Ok(Census { cardinality: group.cardinality() as u64 / subgroup_size, orders })
}

/// Size of the image of `t`, by applying it to every element.
pub fn image_size(group: &FinAbGroup, t: &EndoMatrix, cap: usize) -> Result<usize> {
    group.size_within(cap)?;
    let mut seen = vec![false; group.cardinality() as usize];
    let mut count = 0;
    for x in group.elements() {
        let idx = group.index_of(&group.apply(t, &x));
        if !seen[idx] {
            seen[idx] = true;
            count += 1;
        }
    }
    Ok(count)
}

/// Number of elements killed by `t`, by enumeration.
pub fn kernel_size(group: &FinAbGroup, t: &EndoMatrix, cap: usize) -> Result<usize> {
    group.size_within(cap)?;
    Ok(group.elements().filter(|x| group.apply(t, x).is_zero()).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_quotients() {
        let rel = IntMatrix::from_rows(&[vec![2i64]]).unwrap();
        let c = quotient_census(&[4], &rel, 64).unwrap();
        assert_eq!(c, census_of_factors(&[2]));
        let rel = IntMatrix::from_rows(&[vec![2i64]]).unwrap();
        assert_eq!(quotient_census(&[5], &rel, 64).unwrap(), census_of_factors(&[]));
    }

    #[test]
    fn census_distinguishes_types() {
        assert_ne!(census_of_factors(&[2, 2]), census_of_factors(&[4]));
        assert_eq!(census_of_factors(&[2, 3]), census_of_factors(&[6]));
        assert_eq!(census_of_factors(&[]).cardinality, 1);
    }

    #[test]
    fn cap_is_enforced() {
        let rel = IntMatrix::zeros(1, 0);
        assert!(matches!(quotient_census(&[100], &rel, 10), Err(Error::CapExceeded { .. })));
    }
}
