//! Equal-degree path properties of simple graphs: detection, extremal
//! search over small orders, named constructions and triangle statistics.

mod bits;
pub mod canon;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod paths;
pub mod search;
pub mod triangles;

pub use canon::{
    canonical_form, canonical_graph, canonical_labeling, is_isomorphic, CanonicalForm,
};
pub use constructions::ConstructionSpec;
pub use error::{Error, Result};
pub use graph::{DegreeProfile, Graph};
pub use graph6::{from_graph6, to_graph6};
pub use paths::{find_equal_degree_path, has_equal_degree_p3, has_equal_degree_path, PathWitness};
pub use search::{compute_p, ExtremalResult, Mode, SearchConfig, Strategy};
pub use triangles::{triangle_profile, MantelClass, TriangleProfile};
