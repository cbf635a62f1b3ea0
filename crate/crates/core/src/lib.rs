//! Cover ideals of Cohen-Macaulay very well-covered graphs.
//!
//! The crate computes cover ideals and their powers, checks linear
//! quotients and homological shift ideals against a first-principles Betti
//! oracle, reads depth and analytic spread off the quotients, computes
//! reduced Groebner bases of toric and Rees presentation ideals with a
//! binomial Buchberger engine, and certifies normality and persistence of
//! associated primes at desk scale. A seeded scan harness runs these checks
//! over families of graphs.
//!
//! Data-parallel loops go through [`par`], which uses rayon when the
//! `parallel` feature is enabled (the default) and plain iterators otherwise.

pub mod betti;
pub mod caps;
pub mod depth;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod lq;
pub mod monomial;
pub mod normality;
pub mod order;
pub mod par;
pub mod rees;
pub mod scan;

pub use caps::Caps;
pub use error::{Error, Result};
pub use graph::{whisker, Graph};
pub use ideal::{cover_ideal, power, MonomialIdeal};
pub use monomial::{Monomial, Ring};
pub use order::OrderSpec;
