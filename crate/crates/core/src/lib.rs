//! Exact computational commutative algebra for standard graded rings over a
//! prime field: Groebner bases for ideals and modules, finitely presented
//! graded modules, minimal free resolutions, the transpose and Ext machinery,
//! and numerical ring invariants.
//!
//! Everything is graded: rings are quotients of a polynomial ring by a
//! homogeneous ideal with no linear forms, modules are cokernels of
//! homogeneous matrices between twisted free modules, and the irrelevant
//! maximal ideal plays the role of the maximal ideal of a local ring.

pub mod error;
pub mod field;
pub mod groebner;
pub mod homology;
pub mod invariants;
pub mod modelem;
pub mod modules;
pub mod monomial;
pub mod poly;
pub mod resolution;
pub mod ring;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use groebner::{
    buchberger, is_member, lift_kernel, normal_form, quotient_normal_form, syzygy_basis,
    syzygy_basis_over_quotient, GroebnerBasis,
};
pub use homology::{
    depth, dual, ext, gab_membership, grade, syzygy_order, tf_index, totally_reflexive_up_to,
    transpose, CapResult, ExtProfile, Grade, SyzygyOrderVerdict, TorsionfreeVerdict,
};
pub use invariants::{
    dimension, edim, hilbert_series, is_ulrich, multiplicity, mu, ring_profile, HilbertSeries,
    RingProfile,
};
pub use modelem::{ModuleElement, ModuleOrder};
pub use modules::{
    cyclic_quotient, direct_power, direct_sum, free_module, hom_into_ring, ideal_module,
    irrelevant_ideal, is_free, is_zero, kernel_of_map, kernel_with_embedding, map_from_columns,
    minimal_generators, minimalize, residue_field, split_free_summands, subquotient,
    subquotient_with_embedding, zero_module, HomogeneousMap, ModuleHom, PresentedModule,
    TwistedFreeModule,
};
pub use monomial::Monomial;
pub use poly::Polynomial;
pub use resolution::{
    betti_table, resolution_of_residue_field, resolve, resolve_over_ambient, syzygy, BettiTable,
    Resolution,
};
pub use ring::RingDescriptor;
