//! Exact computational workbench for the ADE fusion categories and their
//! adjoint subcategories.
//!
//! The crate computes, from first principles and in exact cyclotomic
//! arithmetic:
//!
//! - Temperley-Lieb diagram calculus: planar matchings, Jones-Wenzl
//!   idempotents, braidings, curls and Hopf links ([`tl`]);
//! - the fusion rings of the `A_N`, `D_{2N}`, `E_6`, `E_8` families, their
//!   adjoint subrings, Deligne products and `Z/2` de-equivariantizations
//!   ([`fusion`]);
//! - twist vectors and S-matrices of the Drinfeld centres, and the groups of
//!   twist-preserving fusion ring automorphisms ([`modular`]);
//! - generators-and-relations checks for the centre planar algebras and the
//!   planar-algebra automorphism solver ([`centre`]);
//! - NIM-rep searches, algebra-object candidates, induction/restriction
//!   through the centre and assembled Brauer-Picard tables ([`morita`]).
//!
//! A command-line front end for every stage lives in [`cli`] and the
//! `adefusion` binary. The mdbook under `book/` walks through the same
//! pipeline chapter by chapter; its code snippets compile as doc-tests of
//! this crate (see the `guide` module).

pub mod cyclo;
pub mod tl;
pub mod fusion;
pub mod catalog;
pub mod modular;
pub mod centre;
pub mod morita;
pub mod cli;

mod guide;

pub use cyclo::{Cyc, GaloisMap};
