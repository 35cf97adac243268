//! Tree decompositions with bounded independence number.
//!
//! The crate builds tree decompositions whose bags induce subgraphs with small
//! independence number for several hereditary graph classes. Every decomposer
//! is certifying: given a graph outside its class it returns a verified
//! induced copy of a forbidden graph instead of a decomposition.
//!
//! * [`starpath`] handles graphs excluding an induced star and an induced path.
//! * [`backbone`] handles graphs excluding an induced star and two subdivided-claw patterns.
//! * [`lift`] transfers host decompositions to intersection and line graphs.
//! * [`cograph`] computes the exact value on `P4`-free graphs.
//! * [`mwis`] solves maximum weight independent set over any decomposition.
//! * [`oracle`] holds the exponential ground-truth computations.

pub mod backbone;
pub mod catalog;
pub mod cograph;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod lift;
pub mod mwis;
pub mod oracle;
pub mod patterns;
pub mod random;
pub mod starpath;
pub mod suite;
pub mod tdecomp;
pub mod vertex_set;

pub use error::{Budget, Error, Result};
pub use graph::{Graph, MinorModel, Path};
pub use patterns::{Certificate, PatternKind};
pub use tdecomp::TreeDecomposition;
pub use vertex_set::VertexSet;

/// Either the requested structure or a certificate that the input lies
/// outside the class the algorithm was asked to handle.
#[derive(Clone, Debug)]
pub enum Outcome<T> {
    Done(T),
    Certificate(Certificate),
}

impl<T> Outcome<T> {
    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Done(t) => Outcome::Done(f(t)),
            Outcome::Certificate(c) => Outcome::Certificate(c),
        }
    }

    pub fn done(self) -> Option<T> {
        match self {
            Outcome::Done(t) => Some(t),
            Outcome::Certificate(_) => None,
        }
    }

    pub fn certificate(self) -> Option<Certificate> {
        match self {
            Outcome::Done(_) => None,
            Outcome::Certificate(c) => Some(c),
        }
    }
}
