//! Power graphs of the alternating groups `A_n`.
//!
//! The crate builds four related graphs on `A_n` with the identity removed:
//!
//! * the proper power graph on elements, `x ~ y` when one is a power of the other;
//! * the proper quotient power graph on classes of elements generating the
//!   same cyclic subgroup;
//! * the proper power-type graph on cycle types;
//! * the proper order graph on element orders, adjacent under divisibility.
//!
//! It counts and classifies their connected components by brute force for
//! small `n` and by closed forms for every `n`, and the two routes are
//! checked against each other.
//!
//! ```
//! use altpower::graph::{components, quotient_power_graph, Limits};
//!
//! let q = quotient_power_graph(5, &Limits::default()).unwrap();
//! assert_eq!(components(&q).component_count(), 31);
//! assert_eq!(altpower::census::closed_form_counts(5).unwrap().c0.to_u64(), Some(31));
//! ```

pub mod arith;
pub mod census;
pub mod cli;
pub mod error;
pub mod graph;
pub mod partition;
pub mod perm;
pub mod verify;

pub use error::{Error, Result};
pub use partition::PartitionType;
pub use perm::{CyclicClass, Permutation};
