//! Gain graphs over finite groups: switching, balance, and spectra under
//! group representations.

pub mod algebra;
pub mod cover;
pub mod cycle;
pub mod error;
pub mod graph;
pub mod group;
pub mod rep;
pub mod spectral;
pub mod switching;

pub use algebra::{mu, ClassFunction, Complex64, GroupAlgebraElement, GroupAlgebraMatrix};
pub use cover::{cover_graph, CoverGraph};
pub use cycle::{cycle_class_counts, cycle_classify, CycleComparison, CycleReport};
pub use error::{Error, Result};
pub use graph::{
    parse_gain_graph, parse_gain_graph_with_base, read_gain_graph, GainGraph, SimpleGraph,
    SwitchingFunction, Walk,
};
pub use group::{Element, FiniteGroup, GroupKind};
pub use rep::{Representation, RepresentedMatrix};
pub use spectral::{
    g_cospectral, lambda_cospectral, pi_char_poly, pi_cospectral, pi_spectrum, walk_class_profile,
    CharPoly, ClassProfile, Spectrum,
};
pub use switching::{
    count_switching_classes, fundamental_gains, is_balanced, switching_equivalent,
    switching_isomorphic, tree_normalize, SpanningTreeFrame, SwitchingIsomorphism,
};
