//! Exact-arithmetic machinery for circle pre-laminations and their leaf
//! spaces.
//!
//! The crate implements, end to end and over exact rationals:
//!
//! * circle points, arcs, chords, and the predicates on them ([`circle`]);
//! * finite annotated pre-laminations, their region decomposition,
//!   property suite, and the completion procedure ([`lamination`]);
//! * the singular planar structure of an annotated lamination — its leaf
//!   space — with branch and cyclic orders ([`leafspace`]);
//! * finite presentations of (singular) planar structures, their axioms,
//!   disconnection counts, isomorphism, and orientations ([`planar`]);
//! * a lazily expanded universal planar structure and the back-and-forth
//!   embedding of finite presentations into it ([`universal`]);
//! * the exact Cantor-grid model: ternary membership, slice gaps, and the
//!   degree maps psi/phi/theta ([`cantor`]);
//! * deterministic corpus generators and mutators ([`corpus`]);
//! * a deterministic SVG renderer for chord diagrams ([`render`]).

pub mod cantor;
pub mod circle;
pub mod corpus;
pub mod lamination;
pub mod leafspace;
pub mod planar;
pub mod rat;
pub mod render;
pub mod universal;
