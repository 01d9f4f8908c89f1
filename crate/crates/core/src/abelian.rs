//! Finite abelian groups `Z/d_1 + ... + Z/d_r` and their endomorphisms.
//!
//! The summand orders are taken as given; they need not form a divisibility
//! chain. Elements are coordinate vectors reduced modulo the orders, and an
//! endomorphism is an `r x r` matrix whose column `j` is the image of the
//! `j`-th generator.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::exactalg::{self, IntMatrix};
use crate::{Error, Result};

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

#[inline]
pub(crate) fn neg_mod(a: u64, m: u64) -> u64 {
    if a == 0 {
        0
    } else {
        m - a
    }
}

pub(crate) fn reduce_i64(v: i64, m: u64) -> u64 {
    (v as i128).rem_euclid(m as i128) as u64
}

/// Coordinates of an element of a [`FinAbGroup`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupElement(Vec<u64>);

impl GroupElement {
    pub(crate) fn from_raw(coords: Vec<u64>) -> Self {
        GroupElement(coords)
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A direct sum of finite cyclic groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    orders: Vec<u64>,
}

impl FinAbGroup {
    /// Rejects any order `<= 0`; order 0 would be an infinite cyclic summand.
    pub fn new(orders: &[i64]) -> Result<Self> {
        let orders = orders
            .iter()
            .enumerate()
            .map(
                |(index, &order)| {
                    if order <= 0 {
                        Err(Error::NonFiniteGroup { index, order })
                    } else {
                        Ok(order as u64)
                    }
                },
            )
            .collect::<Result<Vec<_>>>()?;
        Ok(FinAbGroup { orders })
    }

    pub fn from_orders(orders: Vec<u64>) -> Result<Self> {
        if let Some(index) = orders.iter().position(|&o| o == 0) {
            return Err(Error::NonFiniteGroup { index, order: 0 });
        }
        Ok(FinAbGroup { orders })
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Number of cyclic summands.
    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// Number of elements; saturates at `u128::MAX`.
    pub fn cardinality(&self) -> u128 {
        self.orders.iter().try_fold(1u128, |acc, &o| acc.checked_mul(o as u128)).unwrap_or(u128::MAX)
    }

    /// `cardinality()` as a `usize`, or `CapExceeded` if it is above `cap`.
    pub fn size_within(&self, cap: usize) -> Result<usize> {
        let size = self.cardinality();
        if size > cap as u128 {
            return Err(Error::CapExceeded { size, cap });
        }
        Ok(size as usize)
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    /// Element with the given coordinates, reduced into range.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        self.check_len(coords.len())?;
        Ok(GroupElement(coords.iter().zip(&self.orders).map(|(&c, &o)| reduce_i64(c, o)).collect()))
    }

    pub fn element_from_u64(&self, coords: &[u64]) -> Result<GroupElement> {
        self.check_len(coords.len())?;
        Ok(GroupElement(coords.iter().zip(&self.orders).map(|(&c, &o)| c % o).collect()))
    }

    /// The `i`-th standard generator.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut g = self.zero();
        g.0[i] = 1 % self.orders[i];
        g
    }

    fn check_len(&self, found: usize) -> Result<()> {
        if found != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found });
        }
        Ok(())
    }

    fn check(&self, a: &GroupElement) -> Result<()> {
        self.check_len(a.0.len())
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_unchecked(a, b))
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(self.neg_unchecked(a))
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub_unchecked(a, b))
    }

    pub(crate) fn add_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        debug_assert!(a.0.len() == self.rank() && b.0.len() == self.rank());
        GroupElement(a.0.iter().zip(&b.0).zip(&self.orders).map(|((&x, &y), &o)| add_mod(x, y, o)).collect())
    }

    pub(crate) fn neg_unchecked(&self, a: &GroupElement) -> GroupElement {
        GroupElement(a.0.iter().zip(&self.orders).map(|(&x, &o)| neg_mod(x, o)).collect())
    }

    pub(crate) fn sub_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter().zip(&b.0).zip(&self.orders).map(|((&x, &y), &o)| add_mod(x, neg_mod(y, o), o)).collect(),
        )
    }

    /// `c * a` for any integer `c`.
    pub fn scale(&self, c: i64, a: &GroupElement) -> GroupElement {
        GroupElement(a.0.iter().zip(&self.orders).map(|(&x, &o)| mul_mod(reduce_i64(c, o), x, o)).collect())
    }

    /// Order of `a` in the group.
    pub fn element_order(&self, a: &GroupElement) -> u64 {
        a.0.iter().zip(&self.orders).fold(1u64, |acc, (&x, &o)| acc.lcm(&(o / x.gcd(&o))))
    }

    /// All elements in lexicographic order of their coordinate vectors.
    pub fn elements(&self) -> Elements<'_> {
        Elements { group: self, next: Some(self.zero()) }
    }

    /// Position of `a` in [`FinAbGroup::elements`].
    pub fn index_of(&self, a: &GroupElement) -> usize {
        a.0.iter().zip(&self.orders).fold(0usize, |acc, (&x, &o)| acc * o as usize + x as usize)
    }

    /// Inverse of [`FinAbGroup::index_of`].
    pub fn element_at(&self, mut index: usize) -> GroupElement {
        let mut coords = vec![0u64; self.rank()];
        for (c, &o) in coords.iter_mut().zip(&self.orders).rev() {
            *c = (index % o as usize) as u64;
            index /= o as usize;
        }
        GroupElement(coords)
    }

    /// Validates an integer matrix as an endomorphism: column `j` is the
    /// image of generator `j`, and `t[i][j] * d_j` must vanish mod `d_i`.
    pub fn endo(&self, entries: &[Vec<i64>]) -> Result<EndoMatrix> {
        self.check_len(entries.len())?;
        let mut reduced = Vec::with_capacity(self.rank());
        for (i, row) in entries.iter().enumerate() {
            self.check_len(row.len())?;
            reduced.push(row.iter().map(|&v| reduce_i64(v, self.orders[i])).collect::<Vec<_>>());
        }
        self.endo_from_reduced(reduced)
    }

    fn endo_from_reduced(&self, entries: Vec<Vec<u64>>) -> Result<EndoMatrix> {
        for (i, row) in entries.iter().enumerate() {
            for (j, &t) in row.iter().enumerate() {
                if mul_mod(t, self.orders[j], self.orders[i]) != 0 {
                    return Err(Error::IllDefinedHom { row: i, col: j });
                }
            }
        }
        Ok(EndoMatrix { entries })
    }

    pub fn identity_endo(&self) -> EndoMatrix {
        let r = self.rank();
        EndoMatrix { entries: (0..r).map(|i| (0..r).map(|j| u64::from(i == j) % self.orders[i]).collect()).collect() }
    }

    /// `t(x)`.
    pub fn apply(&self, t: &EndoMatrix, x: &GroupElement) -> GroupElement {
        debug_assert_eq!(x.0.len(), self.rank());
        GroupElement(
            t.entries
                .iter()
                .zip(&self.orders)
                .map(|(row, &o)| row.iter().zip(&x.0).fold(0u64, |acc, (&a, &b)| add_mod(acc, mul_mod(a, b, o), o)))
                .collect(),
        )
    }

    /// `a o b`, i.e. apply `b` first.
    pub fn compose(&self, a: &EndoMatrix, b: &EndoMatrix) -> EndoMatrix {
        let r = self.rank();
        let entries = (0..r)
            .map(|i| {
                let o = self.orders[i];
                (0..r)
                    .map(|j| (0..r).fold(0u64, |acc, k| add_mod(acc, mul_mod(a.entries[i][k], b.entries[k][j], o), o)))
                    .collect()
            })
            .collect();
        EndoMatrix { entries }
    }

    /// `1 - t`.
    pub fn one_minus(&self, t: &EndoMatrix) -> EndoMatrix {
        let id = self.identity_endo();
        let entries = t
            .entries
            .iter()
            .zip(&id.entries)
            .zip(&self.orders)
            .map(|((row, id_row), &o)| row.iter().zip(id_row).map(|(&a, &e)| add_mod(e, neg_mod(a, o), o)).collect())
            .collect();
        EndoMatrix { entries }
    }

    /// Whether `t` is surjective, equivalently bijective since the group is
    /// finite: the cokernel of `[t | diag(orders)]` must be trivial.
    pub fn is_automorphism(&self, t: &EndoMatrix) -> bool {
        self.is_surjective(t)
    }

    pub(crate) fn is_surjective(&self, t: &EndoMatrix) -> bool {
        exactalg::cokernel(&self.orders, &t.to_int_matrix())
            .expect("square endomorphism over positive orders has a finite cokernel")
            .invariant_factors
            .is_empty()
    }

    /// Inverse automorphism, one column at a time: column `j` solves
    /// `t x = g_j` over the presented group.
    #[allow(clippy::needless_range_loop)]
    pub fn inverse(&self, t: &EndoMatrix) -> Result<EndoMatrix> {
        let a = t.to_int_matrix();
        let r = self.rank();
        let mut entries = vec![vec![0u64; r]; r];
        for j in 0..r {
            let rhs: Vec<BigInt> = (0..r).map(|i| BigInt::from(u64::from(i == j))).collect();
            let x = exactalg::solve_presented(&self.orders, &a, &rhs)?.ok_or(Error::NotInvertible)?;
            for (i, xi) in x.iter().enumerate() {
                let o = BigInt::from(self.orders[i]);
                entries[i][j] = xi.mod_floor(&o).to_u64().expect("residue below a u64 order");
            }
        }
        self.endo_from_reduced(entries)
    }

    /// `t^m` for any integer `m`; negative powers need an automorphism.
    pub fn endo_pow(&self, t: &EndoMatrix, m: i64) -> Result<EndoMatrix> {
        let base = if m < 0 { self.inverse(t)? } else { t.clone() };
        Ok(self.pow_unsigned(&base, m.unsigned_abs()))
    }

    pub(crate) fn pow_unsigned(&self, base: &EndoMatrix, mut e: u64) -> EndoMatrix {
        let mut acc = self.identity_endo();
        let mut sq = base.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.compose(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.compose(&sq, &sq);
            }
        }
        acc
    }
}

/// Iterator over the elements of a group, see [`FinAbGroup::elements`].
pub struct Elements<'a> {
    group: &'a FinAbGroup,
    next: Option<GroupElement>,
}

impl Iterator for Elements<'_> {
    type Item = GroupElement;

    fn next(&mut self) -> Option<GroupElement> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut carried_out = true;
        for (c, &o) in succ.0.iter_mut().zip(&self.group.orders).rev() {
            *c += 1;
            if *c < o {
                carried_out = false;
                break;
            }
            *c = 0;
        }
        if !carried_out {
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// An endomorphism of a [`FinAbGroup`]; entries in row `i` are reduced
/// modulo the `i`-th order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EndoMatrix {
    entries: Vec<Vec<u64>>,
}

impl EndoMatrix {
    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        let r = self.entries.len();
        IntMatrix::from_fn(r, r, |i, j| BigInt::from(self.entries[i][j]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn g(orders: &[i64]) -> FinAbGroup {
        FinAbGroup::new(orders).unwrap()
    }

    #[test]
    fn make_group() {
        assert_eq!(g(&[6, 2]).cardinality(), 12);
        assert_eq!(g(&[1]).cardinality(), 1);
        assert_eq!(g(&[1]).elements().count(), 1);
        assert_eq!(FinAbGroup::new(&[0]), Err(Error::NonFiniteGroup { index: 0, order: 0 }));
        assert!(matches!(FinAbGroup::new(&[3, -2]), Err(Error::NonFiniteGroup { index: 1, .. })));
    }

    #[test]
    fn arithmetic() {
        let grp = g(&[3, 3]);
        let a = grp.element(&[1, 2]).unwrap();
        let b = grp.element(&[2, 2]).unwrap();
        assert_eq!(grp.add(&a, &b).unwrap(), grp.element(&[0, 1]).unwrap());
        assert_eq!(grp.add(&a, &grp.zero()).unwrap(), a);
        assert_eq!(grp.add(&a, &grp.neg(&a).unwrap()).unwrap(), grp.zero());
        let short = g(&[3]).zero();
        assert_eq!(grp.add(&a, &short), Err(Error::DimensionMismatch { expected: 2, found: 1 }));
    }

    #[test]
    fn enumeration_and_index() {
        let grp = g(&[2, 3]);
        let all: Vec<_> = grp.elements().collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[1], grp.element(&[0, 1]).unwrap());
        assert_eq!(all[3], grp.element(&[1, 0]).unwrap());
        for (i, x) in all.iter().enumerate() {
            assert_eq!(grp.index_of(x), i);
            assert_eq!(&grp.element_at(i), x);
        }
        assert_eq!(g(&[]).elements().count(), 1);
    }

    #[test]
    fn endo_validation() {
        let grp = g(&[6, 2]);
        assert!(grp.endo(&[vec![1, 3], vec![0, 1]]).is_ok());
        // column 2 sends the order-2 generator to something of order 6
        assert_eq!(grp.endo(&[vec![1, 1], vec![0, 1]]), Err(Error::IllDefinedHom { row: 0, col: 1 }));
        assert!(grp.endo(&[vec![1, 0], vec![0, 1]]).is_ok());
        assert!(matches!(grp.endo(&[vec![1, 0]]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn apply_examples() {
        let grp = g(&[3, 3]);
        let t = grp.endo(&[vec![0, 2], vec![1, 1]]).unwrap();
        assert_eq!(grp.apply(&t, &grp.element(&[1, 0]).unwrap()), grp.element(&[0, 1]).unwrap());
        assert_eq!(grp.apply(&t, &grp.element(&[0, 1]).unwrap()), grp.element(&[2, 1]).unwrap());
        let id = grp.identity_endo();
        for x in grp.elements() {
            assert_eq!(grp.apply(&id, &x), x);
        }
    }

    fn image_size(grp: &FinAbGroup, t: &EndoMatrix) -> usize {
        grp.elements().map(|x| grp.apply(t, &x)).collect::<BTreeSet<_>>().len()
    }

    #[test]
    fn automorphism_examples() {
        let z4 = g(&[4]);
        let t3 = z4.endo(&[vec![3]]).unwrap();
        let t2 = z4.endo(&[vec![2]]).unwrap();
        assert!(z4.is_automorphism(&t3));
        assert_eq!(image_size(&z4, &t3), 4);
        assert!(!z4.is_automorphism(&t2));
        assert_eq!(image_size(&z4, &t2), 2);

        let grp = g(&[6, 2]);
        let t = grp.endo(&[vec![1, 3], vec![0, 1]]).unwrap();
        assert!(grp.is_automorphism(&t));
        assert_eq!(image_size(&grp, &t), 12);
    }

    #[test]
    fn powers() {
        let z4 = g(&[4]);
        let t = z4.endo(&[vec![3]]).unwrap();
        assert_eq!(z4.endo_pow(&t, 0).unwrap(), z4.identity_endo());
        assert_eq!(z4.endo_pow(&t, -1).unwrap().entries(), &[vec![3]]);

        let z5 = g(&[5]);
        let t = z5.endo(&[vec![2]]).unwrap();
        assert_eq!(z5.endo_pow(&t, 3).unwrap().entries(), &[vec![3]]);
        assert_eq!(z5.endo_pow(&t, -1).unwrap().entries(), &[vec![3]]);

        let t2 = z4.endo(&[vec![2]]).unwrap();
        assert_eq!(z4.endo_pow(&t2, -1), Err(Error::NotInvertible));
        assert_eq!(z4.endo_pow(&t2, 2).unwrap().entries(), &[vec![0]]);
    }

    #[test]
    fn element_orders() {
        let grp = g(&[6, 4]);
        assert_eq!(grp.element_order(&grp.element(&[2, 1]).unwrap()), 12);
        assert_eq!(grp.element_order(&grp.element(&[3, 2]).unwrap()), 2);
        assert_eq!(grp.element_order(&grp.zero()), 1);
    }
}
