//! Finite quandles as operation tables, and Alexander quandles `y * x = Ty + x - Tx`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::abelian::{EndoMatrix, FinAbGroup, GroupElement};
use crate::{Error, Result};

pub const DEFAULT_TABLE_CAP: usize = 4096;

/// `y * x = Ty + x - Tx`.
pub fn alexander_op(group: &FinAbGroup, t: &EndoMatrix, y: &GroupElement, x: &GroupElement) -> GroupElement {
    let ty = group.apply(t, y);
    let tx = group.apply(t, x);
    group.sub_unchecked(&group.add_unchecked(&ty, x), &tx)
}

/// Connectivity through linear algebra: `1 - T` must be surjective (hence
/// bijective on a finite group).
pub fn is_connected_linear(group: &FinAbGroup, t: &EndoMatrix) -> bool {
    group.is_surjective(&group.one_minus(t))
}

/// First failed quandle axiom, checked in the order idempotence, right
/// invertibility, right self-distributivity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `x * x != x`
    Idempotence { x: usize },
    /// `y1 * x == y2 * x` with `y1 != y2`
    RightInvertibility { x: usize, y1: usize, y2: usize },
    /// `(z * y) * x != (z * x) * (y * x)`
    SelfDistributivity { x: usize, y: usize, z: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AxiomViolation::Idempotence { x } => write!(f, "idempotence fails at x={x}"),
            AxiomViolation::RightInvertibility { x, y1, y2 } => {
                write!(f, "right translation by {x} is not injective: {y1} and {y2} collide")
            }
            AxiomViolation::SelfDistributivity { x, y, z } => {
                write!(f, "self-distributivity fails at x={x}, y={y}, z={z}")
            }
        }
    }
}

/// `table[y][x] = y * x` over elements `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuandleTable {
    n: usize,
    table: Vec<u32>,
}

impl QuandleTable {
    /// Row-major table: `rows[y][x] = y * x`.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        let mut table = Vec::with_capacity(n * n);
        for (y, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            if let Some(x) = row.iter().position(|&v| v as usize >= n) {
                return Err(Error::TableEntryOutOfRange { row: y, col: x });
            }
            table.extend_from_slice(row);
        }
        Ok(QuandleTable { n, table })
    }

    /// The Alexander quandle on `group`, elements in lexicographic order.
    pub fn alexander(group: &FinAbGroup, t: &EndoMatrix, cap: usize) -> Result<Self> {
        let n = group.size_within(cap)?;
        if !group.is_automorphism(t) {
            return Err(Error::NotInvertible);
        }
        let elements: Vec<GroupElement> = group.elements().collect();
        // y * x = T(y - x) + x
        let images: Vec<GroupElement> = elements.iter().map(|e| group.apply(t, e)).collect();
        let mut table = vec![0u32; n * n];
        for y in 0..n {
            for x in 0..n {
                let v = group.add_unchecked(&group.sub_unchecked(&images[y], &images[x]), &elements[x]);
                table[y * n + x] = group.index_of(&v) as u32;
            }
        }
        Ok(QuandleTable { n, table })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `y * x`
    #[inline]
    pub fn op(&self, y: usize, x: usize) -> usize {
        self.table[y * self.n + x] as usize
    }

    pub fn first_violation(&self) -> Option<AxiomViolation> {
        let n = self.n;
        if let Some(x) = (0..n).find(|&x| self.op(x, x) != x) {
            return Some(AxiomViolation::Idempotence { x });
        }
        for x in 0..n {
            let mut seen = vec![usize::MAX; n];
            for y in 0..n {
                let v = self.op(y, x);
                if seen[v] != usize::MAX {
                    return Some(AxiomViolation::RightInvertibility { x, y1: seen[v], y2: y });
                }
                seen[v] = y;
            }
        }
        for x in 0..n {
            for y in 0..n {
                let yx = self.op(y, x);
                for z in 0..n {
                    if self.op(self.op(z, y), x) != self.op(self.op(z, x), yx) {
                        return Some(AxiomViolation::SelfDistributivity { x, y, z });
                    }
                }
            }
        }
        None
    }

    pub fn is_quandle(&self) -> bool {
        self.first_violation().is_none()
    }

    /// Orbit of element 0 under the group generated by the right
    /// translations; a quandle is connected iff this is everything.
    pub fn orbit_of_zero(&self) -> Vec<usize> {
        let n = self.n;
        if n == 0 {
            return Vec::new();
        }
        // inverse translations: inv[x][y * x] = y
        let mut inv = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                inv[x * n + self.op(y, x)] = y as u32;
            }
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = vec![0usize];
        let mut orbit = Vec::new();
        while let Some(p) = queue.pop() {
            orbit.push(p);
            for x in 0..n {
                for q in [self.op(p, x), inv[x * n + p] as usize] {
                    if !seen[q] {
                        seen[q] = true;
                        queue.push(q);
                    }
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    pub fn is_connected(&self) -> bool {
        self.orbit_of_zero().len() == self.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[i64]) -> FinAbGroup {
        FinAbGroup::new(orders).unwrap()
    }

    #[test]
    fn op_examples() {
        let z3 = g(&[3]);
        let t = z3.endo(&[vec![2]]).unwrap();
        let v = alexander_op(&z3, &t, &z3.element(&[1]).unwrap(), &z3.zero());
        assert_eq!(v.coords(), [2]);

        let grp = g(&[3, 3]);
        let t = grp.endo(&[vec![0, 2], vec![1, 1]]).unwrap();
        let v = alexander_op(&grp, &t, &grp.element(&[1, 0]).unwrap(), &grp.zero());
        assert_eq!(v.coords(), [0, 1]);
        for x in grp.elements() {
            assert_eq!(alexander_op(&grp, &t, &x, &x), x);
        }
    }

    #[test]
    fn dihedral_three() {
        let z3 = g(&[3]);
        let q = QuandleTable::alexander(&z3, &z3.endo(&[vec![2]]).unwrap(), DEFAULT_TABLE_CAP).unwrap();
        // y * x = 2y - x mod 3
        let expected = QuandleTable::from_rows(&[vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]).unwrap();
        assert_eq!(q, expected);
        assert!(q.is_quandle());
        assert!(q.is_connected());
    }

    #[test]
    fn z4_unit_three() {
        let z4 = g(&[4]);
        let t = z4.endo(&[vec![3]]).unwrap();
        let q = QuandleTable::alexander(&z4, &t, DEFAULT_TABLE_CAP).unwrap();
        for y in 0..4 {
            for x in 0..4 {
                assert_eq!(q.op(y, x) as i64, (3 * y as i64 - 2 * x as i64).rem_euclid(4));
            }
        }
        assert!(q.is_quandle());
        assert_eq!(q.orbit_of_zero(), [0, 2]);
        assert!(!q.is_connected());
        assert!(!is_connected_linear(&z4, &t));
    }

    #[test]
    fn trivial_group() {
        let grp = g(&[1]);
        let t = grp.endo(&[vec![0]]).unwrap();
        let q = QuandleTable::alexander(&grp, &t, DEFAULT_TABLE_CAP).unwrap();
        assert_eq!(q.len(), 1);
        assert!(q.is_connected());
        assert!(is_connected_linear(&grp, &t));
    }

    #[test]
    fn linear_connectivity() {
        let z5 = g(&[5]);
        let t = z5.endo(&[vec![4]]).unwrap();
        assert!(is_connected_linear(&z5, &t));
        assert!(QuandleTable::alexander(&z5, &t, 16).unwrap().is_connected());
    }

    #[test]
    fn axiom_violations() {
        let q = QuandleTable::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(q.first_violation(), Some(AxiomViolation::Idempotence { x: 0 }));
        let q = QuandleTable::from_rows(&[vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!(q.first_violation(), Some(AxiomViolation::Idempotence { x: 1 }));
        let q = QuandleTable::from_rows(&[vec![0, 0], vec![0, 1]]).unwrap();
        assert!(matches!(q.first_violation(), Some(AxiomViolation::RightInvertibility { x: 0, y1: 0, y2: 1 })));
        assert!(QuandleTable::from_rows(&[vec![0, 2], vec![1, 1]]).is_err());
    }

    #[test]
    fn cap_and_invertibility() {
        let grp = g(&[10, 10]);
        let t = grp.identity_endo();
        assert!(matches!(QuandleTable::alexander(&grp, &t, 50), Err(Error::CapExceeded { .. })));
        let z4 = g(&[4]);
        assert_eq!(QuandleTable::alexander(&z4, &z4.endo(&[vec![2]]).unwrap(), 16), Err(Error::NotInvertible));
    }
}
