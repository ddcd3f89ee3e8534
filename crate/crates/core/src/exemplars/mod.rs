//! Instance generation: seeded random structures and spaces, exhaustive
//! enumeration of small cases, windowed infinite structures, and search.

pub mod enumerate;
pub mod intervals;
pub mod omega;
pub mod random;
pub mod search;
pub mod window;

pub use enumerate::{
    labelled_posets, lattices, poset_spaces, structures_where, sub_relations_of_leq, SubRelations,
};
pub use intervals::{IntervalUnion, RationalIntervals};
pub use omega::{OmegaCode, OmegaPlusTwo, OmegaVariant};
pub use random::{gen_partial_map, gen_poset_space, gen_structure, gen_structure_with, PrecMode};
pub use search::{search, SearchOutcome, SearchSpec, SearchStatus, PROPERTIES};
pub use window::{window_verdicts, ExemplarError, LazyStructure, Window, WindowVerdict};
