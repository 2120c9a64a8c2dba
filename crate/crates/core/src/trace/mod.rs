//! Traces of multiwebs.
//!
//! Every engine splits multiple edges into parallel copies, evaluates the
//! simple web, and divides by `∏ m_e!`. For a strand from `t` to `h` the edge
//! factor is `(Jφ_{t→h})_{c(t), c(h)}`, with `c(t)` the color at the tail end.

mod bipartite;
mod coloring;
mod contraction;
mod identity;
mod layout;
mod qdet;
mod sp2;
mod vertex;

pub use bipartite::{bipartite_structure, trace_sl_bipartite};
pub use coloring::trace_coloring;
pub use contraction::trace_contraction;
pub use identity::trace_identity_colorings;
pub use layout::{prepare, Prepared, Strand, WebLayout};
pub use qdet::{inversions, qdet};
pub use sp2::trace_sp2_loops;
pub use vertex::{codeterminant, crossing_count, det_vertex, wedge_norm, PairingDiagram, VertexTensor};
