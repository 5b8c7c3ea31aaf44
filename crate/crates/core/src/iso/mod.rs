//! Induced subgraph isomorphism, isomorphism and canonical forms.

mod canon;
mod mcsplit;
mod naive;

pub use canon::{
    automorphism_count, canonical_form, canonical_labelling, is_isomorphic, AUTOMORPHISM_LIMIT,
    CANON_LIMIT,
};
pub use mcsplit::{find_embedding, induced_subgraph_iso, LabelClass, LabelClassPartition};
pub use naive::{is_valid_embedding, naive_embedding, naive_induced_iso};

/// Injective map from pattern vertices to target vertices.
pub type Embedding = Vec<usize>;
