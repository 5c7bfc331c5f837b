//! Garside-structure braid arithmetic.
//!
//! The crate computes left-greedy normal forms, summit classes, minimal summit
//! graphs, and finite generating sets of centralizers for elements of the
//! braid groups B_n, under both the classical (Artin) and the band-generator
//! (Birman–Ko–Lee) Garside structures.  Conjugacy of two elements is decided
//! with an explicit conjugating witness, and the full conjugator set is
//! described as a coset witness·Z(b).

pub mod artin;
pub mod bkl;
pub mod classes;
pub mod element;
pub mod error;
pub mod graph;
pub mod monoid;
pub mod summit;
pub mod words;

pub use artin::{ArtinMonoid, PermutationSimple};
pub use bkl::{BklMonoid, NonCrossingSimple};
pub use classes::{conjugacy_classes, ClassOptions, ClassRow, ClassSweep, ClassTable};
pub use element::GroupElement;
pub use error::{Error, Result};
pub use graph::{
    build_graph, centralizer_generators, conjugator_coset, generators_from_graph, graph_from_json,
    graph_to_json, reduce_generators, to_dot, validate_graph, Arrow, BuildOptions,
    ConjugacyResult, GeneratorSet, SpanningTree, StructureId, SummitGraph,
};
pub use monoid::GarsideStructure;
pub use summit::{
    brute_force_summit_class, chain_decompose, cycling, decycling, in_summit,
    minimal_simple_conjugators, summit_representative, ConjugatorEngine, ConjugatorMethod,
    SummitProfile,
};
pub use words::{element_to_string, parse_element, parse_simple, simple_to_string};
