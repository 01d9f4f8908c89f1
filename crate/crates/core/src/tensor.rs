//! The tensor square `M (x) M`, the twist `tau(x (x) y) = Ty (x) x`, and the
//! cokernel `S(M,T)` of `1 - tau` together with its class map `[x (x) y]`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::abelian::{add_mod, mul_mod, EndoMatrix, FinAbGroup, GroupElement};
use crate::exactalg::{self, CokerPresentation, IntMatrix};
use crate::Result;

/// `M (x) M` on the generators `g_i (x) g_j`, listed row-major in `(i, j)`.
/// Generator `(i, j)` has order `gcd(d_i, d_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSquare {
    base: FinAbGroup,
    group: FinAbGroup,
}

impl TensorSquare {
    pub fn new(base: &FinAbGroup) -> Self {
        let d = base.orders();
        let gen_orders = d.iter().flat_map(|a| d.iter().map(move |b| a.gcd(b))).collect();
        TensorSquare {
            base: base.clone(),
            group: FinAbGroup::from_orders(gen_orders).expect("gcd of positive orders is positive"),
        }
    }

    pub fn base(&self) -> &FinAbGroup {
        &self.base
    }

    pub fn gen_orders(&self) -> &[u64] {
        self.group.orders()
    }

    /// The tensor square as a (non-normalized) sum of cyclic groups.
    pub fn as_group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.base.rank() + j
    }

    /// Coordinates of `x (x) y`: entry `(i, j)` is `x_i y_j mod gcd(d_i, d_j)`.
    pub fn bilinear_expand(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        let (x, y) = (x.coords(), y.coords());
        let coords: Vec<u64> = self
            .gen_orders()
            .iter()
            .enumerate()
            .map(|(idx, &o)| {
                let (i, j) = (idx / self.base.rank(), idx % self.base.rank());
                mul_mod(x[i] % o, y[j] % o, o)
            })
            .collect();
        self.group.element_from_u64(&coords).expect("coordinate count matches")
    }

    /// Matrix of `tau` on the tensor generators. The column of `(i, j)` is
    /// the expansion of `(T g_j) (x) g_i`, so its entry at `(k, i)` is `t[k][j]`.
    pub fn tau_matrix(&self, t: &EndoMatrix) -> IntMatrix {
        let r = self.base.rank();
        let mut m = IntMatrix::zeros(r * r, r * r);
        for i in 0..r {
            for j in 0..r {
                let col = self.index(i, j);
                for k in 0..r {
                    m.set(self.index(k, i), col, BigInt::from(t.entries()[k][j]));
                }
            }
        }
        m
    }
}

/// `S(M,T) = coker(1 - tau)` with its projection from `M (x) M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SGroup {
    pub(crate) tensor: TensorSquare,
    pub(crate) presentation: CokerPresentation,
    pub(crate) quotient: FinAbGroup,
}

impl SGroup {
    pub fn new(base: &FinAbGroup, t: &EndoMatrix) -> Result<Self> {
        let tensor = TensorSquare::new(base);
        let n = tensor.gen_orders().len();
        let tau = tensor.tau_matrix(t);
        let relations = IntMatrix::from_fn(n, n, |i, j| {
            let id = if i == j { BigInt::from(1) } else { BigInt::from(0) };
            id - tau.get(i, j)
        });
        let presentation = exactalg::cokernel(tensor.gen_orders(), &relations)?;
        let quotient = FinAbGroup::from_orders(presentation.invariant_factors.clone())?;
        Ok(SGroup { tensor, presentation, quotient })
    }

    pub fn tensor(&self) -> &TensorSquare {
        &self.tensor
    }

    pub fn presentation(&self) -> &CokerPresentation {
        &self.presentation
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.presentation.invariant_factors
    }

    /// `S(M,T)` as a sum of cyclic groups in invariant-factor form.
    pub fn quotient(&self) -> &FinAbGroup {
        &self.quotient
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors().is_empty()
    }

    /// Class of a tensor-coordinate vector.
    pub fn project(&self, tensor_coords: &GroupElement) -> GroupElement {
        GroupElement::from_raw(self.presentation.project(tensor_coords.coords()))
    }

    /// `[x (x) y]`, computed without materializing the expansion.
    pub fn class_of(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        let r = self.tensor.base.rank();
        let (x, y) = (x.coords(), y.coords());
        let coords = self
            .presentation
            .projection
            .iter()
            .zip(&self.presentation.invariant_factors)
            .map(|(row, &f)| {
                let mut acc = 0u64;
                for i in 0..r {
                    if x[i] == 0 {
                        continue;
                    }
                    let xi = x[i] % f;
                    for j in 0..r {
                        let p = row[i * r + j];
                        if p != 0 && y[j] != 0 {
                            acc = add_mod(acc, mul_mod(mul_mod(p, xi, f), y[j] % f, f), f);
                        }
                    }
                }
                acc
            })
            .collect();
        GroupElement::from_raw(coords)
    }

    /// A tensor-coordinate vector whose class is `alpha`.
    pub fn lift_class(&self, alpha: &GroupElement) -> GroupElement {
        GroupElement::from_raw(self.presentation.lift(alpha.coords()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn g(orders: &[i64]) -> FinAbGroup {
        FinAbGroup::new(orders).unwrap()
    }

    #[test]
    fn tensor_square_orders() {
        assert_eq!(TensorSquare::new(&g(&[2, 4])).gen_orders(), [2, 2, 2, 4]);
        assert_eq!(TensorSquare::new(&g(&[5])).gen_orders(), [5]);
        assert!(TensorSquare::new(&g(&[])).gen_orders().is_empty());
    }

    #[test]
    fn expansion() {
        let grp = g(&[5]);
        let ts = TensorSquare::new(&grp);
        let x = grp.element(&[2]).unwrap();
        let y = grp.element(&[3]).unwrap();
        assert_eq!(ts.bilinear_expand(&x, &y).coords(), [1]);
        assert!(ts.bilinear_expand(&grp.zero(), &y).is_zero());

        let grp = g(&[3, 3]);
        let ts = TensorSquare::new(&grp);
        let e = ts.bilinear_expand(&grp.generator(0), &grp.generator(1));
        assert_eq!(e.coords(), [0, 1, 0, 0]);
    }

    #[test]
    fn tau_examples() {
        let grp = g(&[5]);
        let t = grp.endo(&[vec![4]]).unwrap();
        assert_eq!(TensorSquare::new(&grp).tau_matrix(&t), IntMatrix::from_rows(&[vec![4]]).unwrap());

        let grp = g(&[3, 3]);
        let t = grp.endo(&[vec![0, 2], vec![1, 1]]).unwrap();
        let ts = TensorSquare::new(&grp);
        let tau = ts.tau_matrix(&t);
        // T g_1 = g_2, so tau(g_1 (x) g_1) = g_2 (x) g_1
        let col = tau.column(ts.index(0, 0));
        let expected: Vec<BigInt> = [0, 0, 1, 0].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(col, expected);

        let id = grp.identity_endo();
        let swap = ts.tau_matrix(&id);
        for i in 0..2 {
            for j in 0..2 {
                let col = swap.column(ts.index(i, j));
                for (row, v) in col.iter().enumerate() {
                    let want = i64::from(row == ts.index(j, i));
                    assert_eq!(*v, BigInt::from(want));
                }
            }
        }
    }

    #[test]
    fn s_group_examples() {
        let z5 = g(&[5]);
        assert!(SGroup::new(&z5, &z5.endo(&[vec![4]]).unwrap()).unwrap().is_trivial());

        let z4 = g(&[4]);
        let s = SGroup::new(&z4, &z4.endo(&[vec![3]]).unwrap()).unwrap();
        assert_eq!(s.invariant_factors(), [2]);
        let one = z4.element(&[1]).unwrap();
        assert_eq!(s.class_of(&one, &one).coords(), [1]);
        let alpha = s.quotient().element(&[1]).unwrap();
        assert_eq!(s.project(&s.lift_class(&alpha)), alpha);
        assert!(s.project(&s.lift_class(&s.quotient().zero())).is_zero());

        let grp = g(&[3, 3]);
        let t = grp.endo(&[vec![0, 2], vec![1, 1]]).unwrap();
        assert_eq!(SGroup::new(&grp, &t).unwrap().invariant_factors(), [3]);
    }

    #[test]
    fn class_map_matches_projection_of_expansion() {
        let grp = g(&[6, 2]);
        let t = grp.endo(&[vec![1, 3], vec![0, 1]]).unwrap();
        let s = SGroup::new(&grp, &t).unwrap();
        for x in grp.elements() {
            for y in grp.elements() {
                let via_expansion = s.project(&s.tensor().bilinear_expand(&x, &y));
                assert_eq!(s.class_of(&x, &y), via_expansion);
                assert_eq!(s.class_of(&x, &y), s.class_of(&grp.apply(&t, &y), &x));
            }
        }
        let census = oracle::quotient_census(
            s.tensor().gen_orders(),
            &{
                let n = s.tensor().gen_orders().len();
                let tau = s.tensor().tau_matrix(&t);
                IntMatrix::from_fn(n, n, |i, j| BigInt::from(i64::from(i == j)) - tau.get(i, j))
            },
            4096,
        )
        .unwrap();
        assert_eq!(census, oracle::census_of_factors(s.invariant_factors()));
    }
}
