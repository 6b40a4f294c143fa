//! Rooted and planar rooted trees, the categories of order embeddings between
//! them, Catalan-word encodings of root- and order-preserving embeddings, and
//! the divisibility order those embeddings carry.
//!
//! Modules, bottom up:
//!
//! - [`tree`]: planar rooted trees in preorder, bracket strings, cutting and
//!   gluing, enumeration, canonical forms of rooted trees.
//! - [`embedding`]: morphisms of FT, FPT, T and PT; checking, enumeration,
//!   composition.
//! - [`catalan`]: Catalan words of PT morphisms and their total order.
//! - [`order`]: divisibility, Higman's word order, good pairs and antichains.
//! - [`category`]: pushout and root-colimit checks, and the decomposition of
//!   T hom-sets into PT hom-sets over plane structures.
//! - [`groebner`]: monomials, leading terms and monomial ideals.
//! - [`oracle`]: slow exhaustive reference implementations for testing.
//! - [`cli`]: the command-line front end.

pub mod catalan;
pub mod category;
pub mod cli;
pub mod embedding;
pub mod groebner;
pub mod oracle;
pub mod order;
pub mod tree;

pub use catalan::{compare, decode, encode, CatalanToken, CatalanWord, CodecError, Direction};
pub use embedding::{
    compose, enumerate_morphisms, is_morphism, star_tuples, Category, MorphismError, OrderEmbedding, StarTuple,
};
pub use tree::{enumerate_planar_trees, PlanarRootedTree, RootedTree, Split, TreeError, VertexId};
