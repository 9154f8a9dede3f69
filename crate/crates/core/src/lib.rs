//! Virtual and flat virtual knots encoded as chord and arrow diagram codes.
//!
//! A knot is given by a textual code such as `A+o B-u C+o A-u B+o C-u`
//! (see [`codes`]). On top of that representation the crate computes
//!
//! * the Kauffman bracket, the normalized bracket `f` and the Jones polynomial ([`bracket`]),
//! * the generalized Alexander polynomial `G(s, t)` from the Alexander biquandle ([`alexander`]),
//! * filamentations of oriented chord diagrams ([`filamentation`]),
//! * parity and the flat biquandle of flat links ([`flat`]),
//! * the surface genus of a diagram ([`diagram`]),
//!
//! and rewrites diagrams with the arrow diagram and flat Reidemeister moves ([`moves`]).
//!
//! ```
//! use vknot::{bracket, ArrowDiagram, Diagram};
//!
//! let hopf = ArrowDiagram::parse("A+o | A-u").unwrap();
//! assert_eq!(bracket::f_polynomial(&hopf).to_string(), "-A^-2 - A^-4");
//! ```

pub mod alexander;
pub mod bracket;
pub mod codes;
pub mod diagram;
pub mod error;
pub mod families;
pub mod filamentation;
pub mod flat;
pub mod moves;
pub mod poly;

pub use codes::{CodeKind, DiagramCode, Endpoint, Pos, Role, Sign};
pub use diagram::{ArrowDiagram, Diagram, OrientedChordDiagram};
pub use error::{Error, Result};
