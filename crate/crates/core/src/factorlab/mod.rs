//! Factorisations made executable: primitive factorisations of properties
//! closed under induced supergraphs, witness suites for the uniquely
//! factorisable products of edgeless and complete graphs, non-uniqueness
//! constructions, and intersection representations.

pub mod geq;
pub mod intersection;
pub mod uniqueness;

pub use geq::{min_graphs, primitive_factorisation_geq, union_is_product_geq, GeqFactorisation, UnionReport};
pub use intersection::{intersection_graph, intersection_representation, IntersectionFamily, NamedSet};
pub use uniqueness::{
    nonuniqueness_witness, unique_kk_suite, unique_oo_suite, unique_ok_suite, Expected, NonUniqueness,
    UniquenessReport, WitnessCheck,
};
