//! Exact enumeration and generating functions for fully commutative
//! involutions in classical Coxeter groups.

pub mod cells;
pub mod coxeter;
pub mod enumerate;
pub mod error;
pub mod genfunc;
pub mod heap;
pub mod period;
pub mod poly;
pub mod rsk;
pub mod series;
pub mod verify;
pub mod walk;

pub use coxeter::{build_graph, canonical_form, CoxeterGraph, Family, Gen, GroupType, Word};
pub use error::{Error, Result};
pub use heap::{heap_from_word, Heap};
pub use poly::TPoly;
