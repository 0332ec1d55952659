//! Computations with finite Alexandroff spaces.
//!
//! A finite topological space is a finite preorder, and this crate works
//! with it in that form ([`FiniteSpace`]). On top of the topology queries it
//! provides:
//!
//! * order complexes and exact integral homology through Smith normal form
//!   ([`complex`]),
//! * maximal trees, path words and finite presentations of the fundamental
//!   group obtained by localizing the space as a thin category
//!   ([`groupoid`]),
//! * finite groups and homomorphisms out of those presentations
//!   ([`group`]),
//! * group-valued functors `F: X -> G`, the regular coverings `F ↓ * -> X`
//!   they define, and exhaustive verification of the covering conditions,
//!   the deck action and the component count ([`covering`]),
//! * text formats, DOT export and the `finspace` command line ([`parse`],
//!   [`dot`], [`cli`]).
//!
//! ```
//! use std::collections::BTreeMap;
//! use finspace::{covering, group::{self, FiniteGroup}, groupoid, FiniteSpace};
//!
//! let x = FiniteSpace::from_relations(
//!     ["a", "b", "c", "d"],
//!     [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
//! )?;
//! let tree = groupoid::SpanningTree::from_edges(
//!     &x,
//!     [x.arrow("a", "c")?, x.arrow("b", "c")?, x.arrow("b", "d")?],
//! )?;
//! let pi1 = groupoid::pi1_presentation(&x, 0, &tree)?;
//! assert_eq!(pi1.to_string(), "<g[a<d] | >");
//!
//! let z6 = FiniteGroup::cyclic(6)?;
//! let alpha = group::hom_from_presentation(&pi1, &z6, BTreeMap::from([(x.arrow("a", "d")?, 2)]))?;
//! let cover = covering::comma_cover(&covering::functor_from_tree_hom(&tree, &alpha)?);
//! assert_eq!(cover.total().len(), 24);
//! assert_eq!(covering::pi0_cover(&cover, &alpha)?, 2);
//! assert!(covering::verify_covering(&cover).passed());
//! # Ok::<(), finspace::Error>(())
//! ```

pub mod cli;
pub mod complex;
pub mod covering;
pub mod dot;
pub mod error;
pub mod group;
pub mod groupoid;
pub mod parse;
pub mod space;
mod union_find;

pub use error::{Error, Result};
pub use space::{Arrow, FiniteSpace, PointMap, PointSet, SubSpace};
