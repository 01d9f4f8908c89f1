//! Adjoint groups and fundamental groups of finite Alexander quandles.
//!
//! An Alexander quandle lives on a finite abelian group `M` with an
//! automorphism `T`, and carries the operation `y * x = Ty + x - Tx`. Its
//! adjoint group is modelled here by the explicit group `F(M,T)` on
//! `Z x M x S(M,T)`, where `S(M,T)` is the cokernel of `1 - tau` on the
//! tensor square `M (x) M` and `tau(x (x) y) = Ty (x) x`.
//!
//! The crate is `no_std` (it needs `alloc`). All integer linear algebra is
//! exact: Smith normal forms run over arbitrary-precision integers.
//!
//! Module map:
//!
//! * [`abelian`]: finite abelian groups as sums of cyclic groups, endomorphisms.
//! * [`exactalg`]: Smith normal form and cokernel presentations.
//! * [`quandle`]: operation tables, the Alexander construction, connectivity.
//! * [`tensor`]: the tensor square, the twist and the group `S(M,T)`.
//! * [`adjoint`]: the model group, generator words, the action, `pi_1` and
//!   the identity verifiers.
//! * [`oracle`]: brute-force enumeration used to cross-check the algebra.
//! * [`catalog`]: a fixed list of small `(M, T)` pairs for exhaustive checks.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod abelian;
pub mod adjoint;
pub mod catalog;
mod error;
pub mod exactalg;
pub mod oracle;
pub mod quandle;
pub mod tensor;

pub use abelian::{EndoMatrix, FinAbGroup, GroupElement};
pub use adjoint::{AdjContext, FElement, GeneratorWord, Letter};
pub use error::Error;
pub use exactalg::{CokerPresentation, IntMatrix, SnfResult};
pub use quandle::QuandleTable;
pub use tensor::{SGroup, TensorSquare};

pub type Result<T, E = Error> = core::result::Result<T, E>;
