//! The model group `F(M,T)` on `Z x M x S(M,T)` with multiplication
//!
//! ```text
//! (k, x, a)(m, y, b) = (k + m, T^m x + y, a + b + [T^m x (x) y])
//! ```
//!
//! For a connected Alexander quandle this group is the adjoint group, with
//! the generator `e_x` sent to `(1, x, 0)`. The degree map is the first
//! coordinate, the central subgroup `(0, 0, a)` plays the role of the kernel
//! of the action on `M`, and the cocycle `gamma(x, y)` is `(0, 0, -[x (x) y])`.

mod checks;

pub use checks::{CheckOutcome, IdentityReport};

use alloc::borrow::Cow;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::abelian::{EndoMatrix, FinAbGroup, GroupElement};
use crate::exactalg::{self, IntMatrix};
use crate::quandle::{alexander_op, is_connected_linear};
use crate::tensor::SGroup;
use crate::{Error, Result};

/// Powers `T^k` with `|k|` up to this bound are precomputed.
const POWER_CACHE: i64 = 8;

/// An element `(k, x, alpha)` of `F(M,T)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FElement {
    /// Degree; adds under multiplication.
    pub k: i64,
    pub x: GroupElement,
    /// Coordinates in `S(M,T)`.
    pub alpha: GroupElement,
}

impl FElement {
    pub fn new(k: i64, x: GroupElement, alpha: GroupElement) -> Self {
        FElement { k, x, alpha }
    }
}

impl fmt::Display for FElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.k, self.x, self.alpha)
    }
}

/// `e_x` or `e_x^{-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    pub x: GroupElement,
    pub inverse: bool,
}

impl Letter {
    pub fn gen(x: GroupElement) -> Self {
        Letter { x, inverse: false }
    }

    pub fn inv(x: GroupElement) -> Self {
        Letter { x, inverse: true }
    }

    pub fn exponent(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "e{}^-1", self.x)
        } else {
            write!(f, "e{}", self.x)
        }
    }
}

/// A product of generators `e_x^{+-1}`, read left to right.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GeneratorWord {
    pub letters: Vec<Letter>,
}

impl GeneratorWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        GeneratorWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Cancels adjacent `e_x e_x^{-1}` and `e_x^{-1} e_x` pairs.
    pub fn freely_reduced(self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for letter in self.letters {
            match out.last() {
                Some(last) if last.x == letter.x && last.inverse != letter.inverse => {
                    out.pop();
                }
                _ => out.push(letter),
            }
        }
        GeneratorWord { letters: out }
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Fundamental group of the Alexander quandle at `0`: the stabilizer of `0`
/// among degree-zero elements, `{(0, x, a) : (1 - T) x = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pi1 {
    pub invariant_factors: Vec<u64>,
    /// Generators of `ker(1 - T)`; empty when the quandle is connected.
    pub kernel_generators: Vec<GroupElement>,
    pub connected: bool,
}

impl Pi1 {
    pub fn order(&self) -> u128 {
        self.invariant_factors.iter().map(|&f| f as u128).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

/// Ambient data `(M, T, S(M,T))` for computations in `F(M,T)`.
#[derive(Clone, Debug)]
pub struct AdjContext {
    group: FinAbGroup,
    endo: EndoMatrix,
    s: SGroup,
    connected: bool,
    one_minus: EndoMatrix,
    inverse: EndoMatrix,
    // powers[i] = T^(i - POWER_CACHE)
    powers: Vec<EndoMatrix>,
}

impl AdjContext {
    /// Fails with `NotInvertible` unless `endo` is an automorphism.
    pub fn new(group: FinAbGroup, endo: EndoMatrix) -> Result<Self> {
        let s = SGroup::new(&group, &endo)?;
        Self::with_s_group(group, endo, s)
    }

    pub(crate) fn with_s_group(group: FinAbGroup, endo: EndoMatrix, s: SGroup) -> Result<Self> {
        if !group.is_automorphism(&endo) {
            return Err(Error::NotInvertible);
        }
        let inverse = group.inverse(&endo)?;
        let powers = (-POWER_CACHE..=POWER_CACHE)
            .map(|k| {
                if k < 0 {
                    group.pow_unsigned(&inverse, k.unsigned_abs())
                } else {
                    group.pow_unsigned(&endo, k as u64)
                }
            })
            .collect();
        Ok(AdjContext {
            connected: is_connected_linear(&group, &endo),
            one_minus: group.one_minus(&endo),
            group,
            endo,
            s,
            inverse,
            powers,
        })
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn endo(&self) -> &EndoMatrix {
        &self.endo
    }

    pub fn s_group(&self) -> &SGroup {
        &self.s
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// `T^k`.
    pub fn power(&self, k: i64) -> Cow<'_, EndoMatrix> {
        if (-POWER_CACHE..=POWER_CACHE).contains(&k) {
            Cow::Borrowed(&self.powers[(k + POWER_CACHE) as usize])
        } else if k < 0 {
            Cow::Owned(self.group.pow_unsigned(&self.inverse, k.unsigned_abs()))
        } else {
            Cow::Owned(self.group.pow_unsigned(&self.endo, k as u64))
        }
    }

    pub fn apply_power(&self, k: i64, x: &GroupElement) -> GroupElement {
        self.group.apply(&self.power(k), x)
    }

    pub fn identity(&self) -> FElement {
        FElement::new(0, self.group.zero(), self.s.quotient().zero())
    }

    /// `(0, 0, alpha)`.
    pub fn central(&self, alpha: GroupElement) -> FElement {
        FElement::new(0, self.group.zero(), alpha)
    }

    pub fn f_mul(&self, g: &FElement, h: &FElement) -> FElement {
        let s = self.s.quotient();
        let shifted = self.apply_power(h.k, &g.x);
        let cross = self.s.class_of(&shifted, &h.x);
        FElement {
            k: g.k.checked_add(h.k).expect("degree overflow"),
            x: self.group.add_unchecked(&shifted, &h.x),
            alpha: s.add_unchecked(&s.add_unchecked(&g.alpha, &h.alpha), &cross),
        }
    }

    /// `(-k, -u, -a + [u (x) u])` with `u = T^{-k} x`.
    pub fn f_inv(&self, g: &FElement) -> FElement {
        let s = self.s.quotient();
        let k = g.k.checked_neg().expect("degree overflow");
        let u = self.apply_power(k, &g.x);
        let square = self.s.class_of(&u, &u);
        FElement { k, x: self.group.neg_unchecked(&u), alpha: s.add_unchecked(&s.neg_unchecked(&g.alpha), &square) }
    }

    pub fn f_pow(&self, g: &FElement, n: i64) -> FElement {
        let base = if n < 0 { self.f_inv(g) } else { g.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = self.identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.f_mul(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.f_mul(&sq, &sq);
            }
        }
        acc
    }

    /// Image of the generator `e_x`: `(1, x, 0)`.
    pub fn phi(&self, x: &GroupElement) -> FElement {
        FElement::new(1, x.clone(), self.s.quotient().zero())
    }

    /// `gamma(x, y) = (0, 0, -[x (x) y])`.
    pub fn gamma(&self, x: &GroupElement, y: &GroupElement) -> FElement {
        self.central(self.s.quotient().neg_unchecked(&self.s.class_of(x, y)))
    }

    /// Image of the letter `e_x^{+-1}`.
    pub fn eval_letter(&self, letter: &Letter) -> FElement {
        let g = self.phi(&letter.x);
        if letter.inverse {
            self.f_inv(&g)
        } else {
            g
        }
    }

    pub fn eval_word(&self, word: &GeneratorWord) -> FElement {
        word.letters.iter().fold(self.identity(), |acc, l| self.f_mul(&acc, &self.eval_letter(l)))
    }

    /// Right action on `M`: `p . (k, x, a) = T^k p + (1 - T) x`. Each
    /// generator `e_x` acts as `p |-> p * x`.
    pub fn act(&self, p: &GroupElement, g: &FElement) -> GroupElement {
        let moved = self.apply_power(g.k, p);
        self.group.add_unchecked(&moved, &self.group.apply(&self.one_minus, &g.x))
    }

    /// `y * x` in the Alexander quandle.
    pub fn quandle_op(&self, y: &GroupElement, x: &GroupElement) -> GroupElement {
        alexander_op(&self.group, &self.endo, y, x)
    }

    /// A word in the generators evaluating to `g`:
    /// `e_0^{k-1} e_x` followed, for each term `c (g_i (x) g_j)` of a lift of
    /// the `S`-component, by `e_{u+v}^{-1} e_u e_0^{-1} e_v` with `u = c g_i`,
    /// `v = g_j`. The result is freely reduced. Its length grows with `|k|`.
    pub fn express_in_generators(&self, g: &FElement) -> Result<GeneratorWord> {
        if !self.connected {
            return Err(Error::NotConnected);
        }
        let zero = self.group.zero();
        let mut letters = Vec::new();
        let lead = g.k - 1;
        let e0 = if lead < 0 { Letter::inv(zero.clone()) } else { Letter::gen(zero.clone()) };
        letters.extend(core::iter::repeat_n(e0, lead.unsigned_abs() as usize));
        letters.push(Letter::gen(g.x.clone()));

        let tensor = self.s.tensor();
        let lifted = self.s.lift_class(&g.alpha);
        let r = self.group.rank();
        for (idx, &c) in lifted.coords().iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (i, j) = (idx / r, idx % r);
            let u = self.group.scale(c as i64, &self.group.generator(i));
            let v = self.group.generator(j);
            debug_assert_eq!(tensor.index(i, j), idx);
            letters.push(Letter::inv(self.group.add_unchecked(&u, &v)));
            letters.push(Letter::gen(u));
            letters.push(Letter::inv(zero.clone()));
            letters.push(Letter::gen(v));
        }
        Ok(GeneratorWord::new(letters).freely_reduced())
    }

    /// `pi_1(A(M,T), 0)` as an abelian group.
    ///
    /// The stabilizer `E = {(0, x, a) : Tx = x}` is abelian (for fixed `x`,
    /// `y` the defining relation gives `[x (x) y] = [y (x) x]`) and sits in
    /// `0 -> S -> E -> ker(1 - T) -> 0`. It is presented on lifts of kernel
    /// generators `h_i` plus the generators of `S`; every integer relation
    /// `sum a_i h_i = 0` in `M` contributes the relation
    /// `a - c(a)`, where `(0, 0, c(a)) = prod (0, h_i, 0)^{a_i}`.
    pub fn pi1(&self) -> Result<Pi1> {
        let orders = self.group.orders();
        let s_factors = self.s.invariant_factors();
        let kernel = exactalg::kernel_presented(orders, &self.one_minus.to_int_matrix())?;
        let mut gens: Vec<GroupElement> = kernel.iter().map(|v| self.residues(v)).filter(|h| !h.is_zero()).collect();
        gens.sort();
        gens.dedup();

        let q = gens.len();
        let t = s_factors.len();
        let exponent_s = s_factors.last().copied().unwrap_or(1);
        let mut ambient = Vec::with_capacity(q + t);
        for h in &gens {
            let n = (self.group.element_order(h) as u128) * exponent_s as u128;
            ambient.push(u64::try_from(n).map_err(|_| Error::Overflow)?);
        }
        ambient.extend_from_slice(s_factors);

        let mut columns: Vec<Vec<BigInt>> = Vec::new();
        if q > 0 {
            let h_matrix = IntMatrix::from_fn(orders.len(), q, |i, j| BigInt::from(gens[j].coords()[i]));
            for a in exactalg::kernel_presented(orders, &h_matrix)? {
                let mut product = self.identity();
                let mut column = vec![BigInt::from(0); q + t];
                for (i, ai) in a.iter().enumerate() {
                    let reduced = ai.mod_floor(&BigInt::from(ambient[i]));
                    let e = reduced.to_i64().ok_or(Error::Overflow)?;
                    let hat = FElement::new(0, gens[i].clone(), self.s.quotient().zero());
                    product = self.f_mul(&product, &self.f_pow(&hat, e));
                    column[i] = reduced;
                }
                debug_assert!(product.x.is_zero(), "relation among kernel generators");
                for (l, &c) in product.alpha.coords().iter().enumerate() {
                    column[q + l] = -BigInt::from(c);
                }
                columns.push(column);
            }
        }
        let relations = IntMatrix::from_columns(q + t, &columns);
        let presentation = exactalg::cokernel(&ambient, &relations)?;
        Ok(Pi1 {
            invariant_factors: presentation.invariant_factors,
            kernel_generators: gens,
            connected: self.connected,
        })
    }

    fn residues(&self, v: &[BigInt]) -> GroupElement {
        let coords: Vec<u64> = v
            .iter()
            .zip(self.group.orders())
            .map(|(c, &o)| c.mod_floor(&BigInt::from(o)).to_u64().expect("residue fits"))
            .collect();
        GroupElement::from_raw(coords)
    }
}
