//! Exact traces of `Sp(2n)` multiwebs on planar graphs, the Pfaffians that
//! sum them, and the Kasteleyn, spin and unitary specializations.

pub mod algebra;
pub mod error;
pub mod connection;
pub mod graph;
pub mod multiweb;
pub mod random;
pub mod theorem;
pub mod trace;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/traces.md")]
    mod traces {}
    #[doc = include_str!("../../../book/src/hmatrix.md")]
    mod hmatrix {}
    #[doc = include_str!("../../../book/src/kasteleyn.md")]
    mod kasteleyn {}
    #[doc = include_str!("../../../book/src/spin.md")]
    mod spin {}
    #[doc = include_str!("../../../book/src/u2.md")]
    mod u2 {}
    #[doc = include_str!("../../../book/src/vertices.md")]
    mod vertices {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
