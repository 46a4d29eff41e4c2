//! Symbolic representation theory of the Temperley-Lieb algebras TL_n(β) and
//! their dilute relatives dTL_n(β) at a root of unity.
//!
//! The crate classifies every finite-dimensional indecomposable module over
//! these algebras, computes the structural data of each class (composition
//! factors, Loewy layers, twisted duals, projective covers, injective hulls,
//! presentation kernels and cokernels, the short exact sequences that define
//! the zigzag families), evaluates the restriction and induction functors on
//! all of them, tabulates Hom- and Ext-dimensions, and builds the
//! Auslander-Reiten quiver of every block together with an exhaustive
//! almost-split verification.
//!
//! Everything is exact integer combinatorics: the deformation parameter only
//! enters through the order ℓ of the root of unity, so no floating point is
//! involved anywhere.
//!
//! Entry points:
//!
//! * [`algebra::AlgebraCtx`] — choose the algebra; criticality, orbits and
//!   virtual neighbour arithmetic live here.
//! * [`catalog`] — canonical classes ([`catalog::IndecClass`]), alias
//!   resolution ([`catalog::normalize`]) and per-class structure.
//! * [`homology`] — Hom/Ext dimensions and extension middle terms.
//! * [`functors`] — restriction and induction.
//! * [`quiver`] — τ-orbits, weaving and block quivers with DOT/JSON export.
//! * [`verify`] — the exhaustive consistency sweeps.
//!
//! The `examples/` directory demonstrates each capability as a runnable
//! program, and the `tlrep` binary exposes the same operations as a small
//! command-line tool.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod functors;
pub mod homology;
pub mod parse;
pub mod quiver;
pub mod verify;

pub use algebra::{AlgebraCtx, Family, OrbitKind, OrbitView};
pub use catalog::{
    enumerate_block, enumerate_indecomposables, normalize, validate, AliasSpec, ClassKind, Factors,
    IndecClass, ModuleSum,
};
pub use error::{Error, Result};
pub use functors::{induce, induce_sum, restrict, restrict_sum};
pub use homology::{ext_dim, extension_middle, hom_dim, separation_vanishes, DimResult, ExtSide};
pub use parse::parse_module_spec;
pub use quiver::{
    build_block_quiver, full_quiver, reflect_delete, seed_morphisms, tau_orbits,
    verify_almost_split, weave, BlockQuiver, LocalIndec, TauOrbit, TauOrbitId, TauOrbitShape,
};
