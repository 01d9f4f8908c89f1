//! A fixed list of small `(M, T)` pairs with `|M (x) M| <= 256`: cyclic
//! groups, `(Z/p)^2` and mixed orders, both connected and not.

use alloc::vec::Vec;

use crate::abelian::{EndoMatrix, FinAbGroup};
use crate::Result;

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub orders: &'static [i64],
    /// Row-major; column `j` is the image of generator `j`.
    pub matrix: &'static [&'static [i64]],
}

impl CatalogEntry {
    pub fn build(&self) -> Result<(FinAbGroup, EndoMatrix)> {
        let group = FinAbGroup::new(self.orders)?;
        let rows: Vec<Vec<i64>> = self.matrix.iter().map(|r| r.to_vec()).collect();
        let endo = group.endo(&rows)?;
        Ok((group, endo))
    }
}

macro_rules! entry {
    ($name:expr, [$($o:expr),*], [$([$($t:expr),*]),*]) => {
        CatalogEntry { name: $name, orders: &[$($o),*], matrix: &[$(&[$($t),*]),*] }
    };
}

pub const CATALOG: &[CatalogEntry] = &[
    entry!("trivial", [1], [[0]]),
    entry!("Z2 trivial quandle", [2], [[1]]),
    entry!("Z3 dihedral", [3], [[2]]),
    entry!("Z4 t=3", [4], [[3]]),
    entry!("Z5 t=2", [5], [[2]]),
    entry!("Z5 t=3", [5], [[3]]),
    entry!("Z5 t=4", [5], [[4]]),
    entry!("Z6 t=5", [6], [[5]]),
    entry!("Z7 t=3", [7], [[3]]),
    entry!("Z7 t=6", [7], [[6]]),
    entry!("Z8 t=3", [8], [[3]]),
    entry!("Z8 t=5", [8], [[5]]),
    entry!("Z9 t=2", [9], [[2]]),
    entry!("Z9 t=4", [9], [[4]]),
    entry!("Z11 t=2", [11], [[2]]),
    entry!("Z13 t=4", [13], [[4]]),
    entry!("Z15 t=2", [15], [[2]]),
    entry!("(Z2)^2 t^2+t+1", [2, 2], [[0, 1], [1, 1]]),
    entry!("(Z2)^2 swap", [2, 2], [[0, 1], [1, 0]]),
    entry!("(Z3)^2 t^2-t+1", [3, 3], [[0, 2], [1, 1]]),
    entry!("(Z3)^2 t^2+1", [3, 3], [[0, 2], [1, 0]]),
    entry!("(Z3)^2 t^2+t+2", [3, 3], [[0, 1], [1, 2]]),
    entry!("(Z3)^2 2I", [3, 3], [[2, 0], [0, 2]]),
    entry!("(Z3)^2 unipotent", [3, 3], [[1, 1], [0, 1]]),
    entry!("(Z4)^2 t^2+t+1", [4, 4], [[0, 3], [1, 3]]),
    entry!("(Z4)^2 3I", [4, 4], [[3, 0], [0, 3]]),
    entry!("Z2+Z4 unipotent", [2, 4], [[1, 0], [2, 1]]),
    entry!("Z6+Z2 unipotent", [6, 2], [[1, 3], [0, 1]]),
    entry!("Z3+Z9 2I", [3, 9], [[2, 0], [0, 2]]),
    entry!("Z3+Z9 mixed", [3, 9], [[2, 1], [3, 2]]),
    entry!("Z2+Z2+Z3 mixed", [2, 2, 3], [[0, 1, 0], [1, 1, 0], [0, 0, 2]]),
];
