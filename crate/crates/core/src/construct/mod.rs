//! Group constructors: classical families, PSL₂(q) on the projective line,
//! direct and regular wreath products.

mod classical;
mod field;
mod projective;
mod wreath;

pub use classical::{alternating, cyclic, dihedral, direct_product, symmetric};
pub use field::{FiniteField, MAX_FIELD_ORDER};
pub use projective::{mobius, psl2, psl2_order, sl2, subfield_embedding_sl2, subfield_map};
pub use wreath::{
    pointwise_stabilizer_embedding, theorem3_instance, wreath_regular, StabilizerEmbedding, Theorem3Instance,
    WreathDatum,
};
