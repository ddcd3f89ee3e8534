//! Finite models of join-semilattices carrying an auxiliary relation `≺`,
//! their spectra of round prime filters, and the correspondence with
//! union-bases of finite sober spaces.

pub mod axioms;
pub mod bits;
pub mod dot;
pub mod exemplars;
pub mod io;
pub mod morphism;
pub mod order;
pub mod relation;
pub mod sober;
pub mod space;
pub mod spectrum;
pub mod topology;

pub use axioms::{check_axioms, parse_bundle, Axiom, AxiomReport, Clause, FailureKind, Violation};
pub use order::{
    ElementSet, OrderViolation, RawStructure, Structure, StructureError, StructureId, MAX_ELEMENTS,
};
pub use relation::BitMatrix;
pub use sober::{core_compact_check, sober_check, GenericPoint, SoberReport};
pub use spectrum::{
    compact_interpolant, enumerate_spectrum, enumerate_spectrum_exhaustive, extend_to_prime,
    verify_representation, CompactInterpolant, Extension, ExtensionError, InterpolantError,
    RepresentationReport, SpectrumResult,
};
pub use topology::{FiniteTopology, TopologyError};
pub use space::{
    roundtrip, spectrum_space, verify_basis_axioms, verify_point_recovery, FiniteSpace, RoundTrip,
    SpaceError, SpaceId,
};
pub use morphism::{
    check_morphism, compose, morphism_of_map, spectrum_map, vee_closure, MorphismAxiom,
    MorphismError, MorphismReport, PartialMap, RelMorphism, SpectrumMap,
};
pub use io::{DocError, Document, MorphismDoc, SpaceDoc, StructureDoc};
