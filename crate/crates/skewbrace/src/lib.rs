//! Finite skew left braces and the counting side of the Hopf-Galois
//! correspondence.
//!
//! A skew left brace is one carrier with two group structures `(G, ⋆)` and
//! `(G, ∘)` sharing an identity and satisfying
//! `g ∘ (h ⋆ k) = (g ∘ h) ⋆ g⁻¹ ⋆ (g ∘ k)`. Braces of order n correspond to
//! regular subgroups of holomorphs, and their ∘-stable subgroups count the
//! image of the Galois correspondence for the Hopf-Galois structure a brace
//! encodes. This crate provides:
//!
//! - [`group`]: Cayley-table groups, subgroup-lattice enumeration,
//!   automorphism groups and holomorphs;
//! - [`perm`]: permutations, permutation groups, regularity and normalizer
//!   predicates;
//! - [`brace`]: the brace axiom, the `𝓛` map, ∘-stability, left ideals, the
//!   Guarneri–Vendramin subset condition and the Galois report;
//! - [`construct`]: braces from regular subgroups of holomorphs, exact
//!   factorizations and fixed point free pairs, plus the α/β embeddings;
//! - [`algebra`]: nilpotent F_p structure-constant algebras, circle groups
//!   and left ideals;
//! - [`fixtures`]: the named examples (`rump8`, `a35`, `a34`, `heisenberg`,
//!   `heis_fpf`, `sn_factorization`, `zp_hol`);
//! - [`json`]: the stable file formats.

pub mod algebra;
pub mod brace;
pub mod construct;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod json;
pub mod perm;

pub use algebra::NilpotentAlgebra;
pub use brace::{GaloisReport, Ratio, SkewBrace};
pub use construct::{
    alpha_embedding, beta_embedding, brace_from_exact_factorization, brace_from_fpf_pair,
    brace_from_holomorph_regular, BraceIso, ExactFactorization, FpfPair,
};
pub use error::{Error, Result};
pub use group::{GroupTable, Subgroup, DEFAULT_ORDER_CAP};
pub use perm::{normalized_by, PermGroup, Permutation};
